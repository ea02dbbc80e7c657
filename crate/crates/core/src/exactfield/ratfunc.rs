use std::fmt;

use serde::{Serialize, Serializer};

use super::{Field, FieldError, GaussianRational, MultiPoly};

/// A quotient of multivariate polynomials over Q(i), kept in lowest terms
/// with a monic denominator, so equal fractions compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self { num: p, den: MultiPoly::one() }
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MultiPoly::var(name))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self { num, den: MultiPoly::one() };
        }
        if let Some(c) = den.constant_value() {
            let inv = c.try_inv().expect("nonzero denominator");
            return Self { num: num.scale(&inv), den: MultiPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = den.leading_coefficient();
        let inv = lc.try_inv().expect("nonzero leading coefficient");
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    /// Replace a variable by a constant.
    pub fn substitute(&self, var: &str, value: &GaussianRational) -> Result<Self, FieldError> {
        let d = self.den.substitute(var, value);
        if d.is_zero() {
            return Err(FieldError::PoleOnSubstitution);
        }
        Ok(Self::reduce(self.num.substitute(var, value), d))
    }

    /// Replace a variable by a rational function.
    pub fn compose(&self, var: &str, value: &RationalFunction) -> Result<Self, FieldError> {
        let n = Self::compose_poly(&self.num, var, value);
        let d = Self::compose_poly(&self.den, var, value);
        n.div(&d).map_err(|_| FieldError::PoleOnSubstitution)
    }

    fn compose_poly(p: &MultiPoly, var: &str, value: &RationalFunction) -> Self {
        let coeffs = p.coefficients_in(var);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(value).add(&Self::from_poly(c.clone()));
        }
        acc
    }

    pub fn variables(&self) -> Vec<String> {
        let mut v: Vec<String> = self.num.variables().iter().chain(self.den.variables()).cloned().collect();
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            if self.num.num_terms() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == MultiPoly::one()
    }
    fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            return Self::reduce(self.num.add(&o.num), self.den.clone());
        }
        Self::reduce(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_constant() && o.den.is_constant() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        // Cross-cancel first to keep the products small.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lc = den.leading_coefficient().try_inv().expect("nonzero");
        Self { num: num.scale(&lc), den: den.scale(&lc) }
    }
    fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }
    fn from_gaussian(g: GaussianRational) -> Self {
        Self::constant(g)
    }
    fn to_gaussian(&self) -> Option<GaussianRational> {
        if self.den.is_constant() {
            self.num.constant_value()
        } else {
            None
        }
    }
    fn cost(&self) -> u64 {
        let terms = (self.num.num_terms() + self.den.num_terms()) as u64;
        let deg = (self.num.total_degree() + self.den.total_degree()) as u64;
        terms * 64 + deg * 16
    }
    fn prefers_fraction_free() -> bool {
        true
    }
    fn div_exact(&self, o: &Self) -> Self {
        if self.den.is_constant() && o.den.is_constant() {
            if let Ok(q) = self.num.div_exact(&o.num) {
                return Self::from_poly(q);
            }
        }
        self.div(o).expect("exact division by a nonzero pivot")
    }
    fn clear_denominators(row: &mut [Self]) {
        let mut l = MultiPoly::one();
        for x in row.iter().filter(|x| !x.den.is_constant()) {
            let g = l.gcd(&x.den);
            l = l.mul(&x.den.div_exact(&g).expect("gcd divides"));
        }
        if l.is_constant() {
            return;
        }
        let lr = Self::from_poly(l);
        for x in row.iter_mut() {
            *x = x.mul(&lr);
        }
    }
}

impl<'a> std::ops::Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        Field::add(self, o)
    }
}

impl<'a> std::ops::Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        Field::sub(self, o)
    }
}

impl<'a> std::ops::Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        Field::mul(self, o)
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        Field::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> RationalFunction {
        RationalFunction::var("u")
    }
    fn c(n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }

    #[test]
    fn canonical_form_identifies_equal_fractions() {
        let a = u().mul(&u()).sub(&c(1)).div(&u().sub(&c(1))).unwrap();
        assert_eq!(a, u().add(&c(1)));
        let b = c(2).div(&u().mul(&c(2))).unwrap();
        let d = c(1).div(&u()).unwrap();
        assert_eq!(b, d);
    }

    #[test]
    fn inverse_roundtrip() {
        let x = u().add(&RationalFunction::i()).div(&u().sub(&c(3))).unwrap();
        assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn substitution_hits_pole() {
        let x = c(1).div(&u().sub(&c(2))).unwrap();
        assert_eq!(x.substitute("u", &GaussianRational::from(2)), Err(FieldError::PoleOnSubstitution));
    }
}
