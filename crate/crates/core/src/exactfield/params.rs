use serde::Serialize;

use super::{Field, FieldError, GaussianRational, RationalFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Specialized,
}

/// The deformation parameters, all derived from `u = √q`.
///
/// `q = u²`, `b = i(q−1)/(q+1)`, `κ = 1/(q⁻¹ − q)`. Square roots used by the
/// finite-dimensional modules are fixed as `√q = u`, `√−1 = i`, `√−q = iu`.
#[derive(Clone, Debug)]
pub struct ParameterContext<F: Field> {
    pub mode: Mode,
    pub u: F,
    pub q: F,
    pub q_inv: F,
    pub b: F,
    pub kappa: F,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParamSummary {
    pub mode: Mode,
    pub u: String,
    pub q: String,
    pub b: String,
    pub kappa: String,
    pub sqrt_convention: String,
}

impl<F: Field> ParameterContext<F> {
    fn from_u(u: F, mode: Mode) -> Result<Self, FieldError> {
        let q = u.mul(&u);
        let one = F::one();
        let q_inv = q.inv().map_err(|_| FieldError::InvalidParameter("q = 0".into()))?;
        let qp1 = q.add(&one);
        let b = F::i()
            .mul(&q.sub(&one))
            .div(&qp1)
            .map_err(|_| FieldError::InvalidParameter("q = -1".into()))?;
        let kappa = q_inv.sub(&q).inv().map_err(|_| FieldError::InvalidParameter("q = ±1".into()))?;
        Ok(Self { mode, u, q, q_inv, b, kappa })
    }

    /// Specialize `u` to a Gaussian rational; the scalars live in `F`.
    pub fn specialized(u: GaussianRational) -> Result<Self, FieldError> {
        check_specialization(&u)?;
        Self::from_u(F::from_gaussian(u), Mode::Specialized)
    }

    /// `q^n` for any integer `n`.
    pub fn q_pow(&self, n: i64) -> F {
        if n >= 0 {
            self.q.pow(n).expect("nonnegative power")
        } else {
            self.q_inv.pow(-n).expect("nonnegative power")
        }
    }

    /// `u^n = q^{n/2}` for any integer `n`.
    pub fn u_pow(&self, n: i64) -> F {
        self.u.pow(n).expect("u is nonzero")
    }

    /// `q − q⁻¹`.
    pub fn q_minus_qinv(&self) -> F {
        self.q.sub(&self.q_inv)
    }

    /// The fixed square root of `±1`: `1` or `i`.
    pub fn sqrt_sign(&self, sign: i8) -> F {
        if sign > 0 {
            F::one()
        } else {
            F::i()
        }
    }

    /// The fixed square root of `±q`: `u` or `iu`.
    pub fn sqrt_signed_q(&self, sign: i8) -> F {
        self.sqrt_sign(sign).mul(&self.u)
    }

    pub fn summary(&self) -> ParamSummary {
        ParamSummary {
            mode: self.mode,
            u: self.u.to_string(),
            q: self.q.to_string(),
            b: self.b.to_string(),
            kappa: self.kappa.to_string(),
            sqrt_convention: "sqrt(q)=u, sqrt(-1)=i, sqrt(-q)=i*u".into(),
        }
    }
}

impl ParameterContext<RationalFunction> {
    /// `u` kept as a free transcendental.
    pub fn symbolic() -> Self {
        Self::from_u(RationalFunction::var("u"), Mode::Symbolic).expect("generic u is admissible")
    }
}

/// Reject values of `u` for which `q` is zero or a root of unity.
///
/// The only roots of unity in Q(i) are ±1 and ±i, and `b ∈ {0, ±i}` happens
/// only for `q ∈ {0, 1}`, so checking `q` against these five values suffices.
fn check_specialization(u: &GaussianRational) -> Result<(), FieldError> {
    let q = u * u;
    let bad = [
        (GaussianRational::from(0), "q = 0"),
        (GaussianRational::from(1), "q = 1 is a root of unity"),
        (GaussianRational::from(-1), "q = -1 is a root of unity"),
        (GaussianRational::i(), "q = i is a root of unity"),
        (-&GaussianRational::i(), "q = -i is a root of unity"),
    ];
    for (v, msg) in bad {
        if q == v {
            return Err(FieldError::InvalidParameter(msg.into()));
        }
    }
    Ok(())
}

/// The quantum integer `[m] = (q^m − q^{−m})/(q − q^{−1})`.
pub fn quantum_integer<F: Field>(m: i64, ctx: &ParameterContext<F>) -> F {
    ctx.q_pow(m)
        .sub(&ctx.q_pow(-m))
        .div(&ctx.q_minus_qinv())
        .expect("q is not ±1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx2() -> ParameterContext<GaussianRational> {
        ParameterContext::specialized(GaussianRational::from(2)).unwrap()
    }

    #[test]
    fn default_specialization_values() {
        let c = ctx2();
        assert_eq!(c.q, GaussianRational::from(4));
        // b = i·3/5; check (1 − ib)/(1 + ib) = q by direct arithmetic.
        let b = &GaussianRational::i() * &GaussianRational::rational(3, 5);
        assert_eq!(c.b, b);
        let ib = &GaussianRational::i() * &b;
        let one = GaussianRational::from(1);
        assert_eq!((&one - &ib).div(&(&one + &ib)).unwrap(), c.q);
        // κ = 1/(1/4 − 4) = −4/15
        assert_eq!(c.kappa, GaussianRational::rational(-4, 15));
    }

    #[test]
    fn q_minus_qinv_in_terms_of_b() {
        for ctx in [ctx2(), ParameterContext::specialized(GaussianRational::rational(3, 7)).unwrap()] {
            let one = GaussianRational::from(1);
            let rhs = (&GaussianRational::from(-4) * &(&GaussianRational::i() * &ctx.b))
                .div(&(&one + &(&ctx.b * &ctx.b)))
                .unwrap();
            assert_eq!(ctx.q_minus_qinv(), rhs);
        }
    }

    #[test]
    fn symbolic_identities() {
        let c = ParameterContext::<RationalFunction>::symbolic();
        let one = RationalFunction::one();
        let ib = RationalFunction::i().mul(&c.b);
        assert_eq!(one.sub(&ib).div(&one.add(&ib)).unwrap(), c.q);
        let rhs = RationalFunction::from_int(-4)
            .mul(&ib)
            .div(&one.add(&c.b.mul(&c.b)))
            .unwrap();
        assert_eq!(c.q_minus_qinv(), rhs);
    }

    #[test]
    fn rejects_roots_of_unity() {
        for u in [GaussianRational::from(1), GaussianRational::from(-1), GaussianRational::from(0)] {
            assert!(ParameterContext::<GaussianRational>::specialized(u).is_err());
        }
        // u² = i for u = (1+i)/√2 is not rational, but u = 1+i gives q = 2i, allowed.
        assert!(ParameterContext::<GaussianRational>::specialized(GaussianRational::from_ints(1, 1)).is_ok());
        // u = i gives q = −1.
        assert!(ParameterContext::<GaussianRational>::specialized(GaussianRational::i()).is_err());
    }

    #[test]
    fn quantum_integers() {
        let c = ctx2();
        assert_eq!(quantum_integer(1, &c), GaussianRational::from(1));
        assert_eq!(quantum_integer(2, &c), GaussianRational::rational(17, 4));
        // Independent oracle: [3] = q² + 1 + q⁻² = 16 + 1 + 1/16.
        assert_eq!(quantum_integer(3, &c), GaussianRational::rational(273, 16));
        assert_eq!(quantum_integer(-3, &c), GaussianRational::rational(-273, 16));
        assert_eq!(quantum_integer(0, &c), GaussianRational::from(0));
    }
}
