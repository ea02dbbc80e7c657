use std::collections::BTreeMap;
use std::fmt;

use super::{Field, FieldError, GaussianRational};

type Exps = Vec<u32>;

/// A polynomial with Gaussian-rational coefficients in named commuting variables.
///
/// Variables are kept sorted by name and unused ones are dropped, so equal
/// polynomials have equal representations. Monomials are compared
/// lexicographically with the first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exps, GaussianRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { vars: Vec::new(), terms }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], GaussianRational::one());
        Self { vars: vec![name.to_string()], terms }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &GaussianRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn constant_value(&self) -> Option<GaussianRational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.get(&Vec::new()).cloned().unwrap_or_else(GaussianRational::zero))
    }

    pub fn leading(&self) -> Option<(&Exps, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> GaussianRational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(GaussianRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn from_parts(vars: Vec<String>, terms: BTreeMap<Exps, GaussianRational>) -> Self {
        let mut p = Self { vars, terms };
        p.prune();
        p
    }

    /// Drop zero coefficients and variables that no longer occur.
    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        let n = self.vars.len();
        let used: Vec<bool> = (0..n).map(|k| self.terms.keys().any(|e| e[k] > 0)).collect();
        if used.iter().all(|&u| u) {
            return;
        }
        let vars = self.vars.iter().zip(&used).filter(|(_, &u)| u).map(|(v, _)| v.clone()).collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| (e.iter().zip(&used).filter(|(_, &u)| u).map(|(x, _)| *x).collect(), c))
            .collect();
        self.vars = vars;
        self.terms = terms;
    }

    fn with_vars(&self, vars: &[String]) -> BTreeMap<Exps, GaussianRational> {
        if self.vars == vars {
            return self.terms.clone();
        }
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable present in merged list"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; vars.len()];
                for (k, &x) in e.iter().enumerate() {
                    ne[pos[k]] = x;
                }
                (ne, c.clone())
            })
            .collect()
    }

    fn merged_vars(&self, o: &Self) -> Vec<String> {
        if self.vars == o.vars {
            return self.vars.clone();
        }
        let mut v: Vec<String> = self.vars.iter().chain(o.vars.iter()).cloned().collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let vars = self.merged_vars(o);
        let mut terms = self.with_vars(&vars);
        for (e, c) in o.with_vars(&vars) {
            let entry = terms.entry(e).or_insert_with(GaussianRational::zero);
            *entry = &*entry + &c;
        }
        Self::from_parts(vars, terms)
    }

    pub fn neg(&self) -> Self {
        Self { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some(c) = o.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return o.scale(&c);
        }
        let vars = self.merged_vars(o);
        let a = self.with_vars(&vars);
        let b = o.with_vars(&vars);
        let mut terms: BTreeMap<Exps, GaussianRational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                let entry = terms.entry(e).or_insert_with(GaussianRational::zero);
                *entry = &*entry + &prod;
            }
        }
        Self::from_parts(vars, terms)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.try_inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient `self / d`; fails when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, FieldError> {
        if d.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(c) = d.constant_value() {
            return Ok(self.scale(&c.try_inv()?));
        }
        let vars = self.merged_vars(d);
        let mut rem = self.with_vars(&vars);
        let dt = d.with_vars(&vars);
        let (dl_e, dl_c) = dt.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).expect("nonzero divisor");
        let dl_inv = dl_c.try_inv()?;
        let mut quot: BTreeMap<Exps, GaussianRational> = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&dl_e).any(|(a, b)| a < b) {
                return Err(FieldError::InexactDivision);
            }
            let qe: Exps = re.iter().zip(&dl_e).map(|(a, b)| a - b).collect();
            let qc = &rc * &dl_inv;
            for (e, c) in &dt {
                let me: Exps = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                let prod = c * &qc;
                let entry = rem.entry(me.clone()).or_insert_with(GaussianRational::zero);
                *entry = &*entry - &prod;
                if entry.is_zero() {
                    rem.remove(&me);
                }
            }
            quot.insert(qe, qc);
        }
        Ok(Self::from_parts(vars, quot))
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(k) => self.terms.keys().map(|e| e[k]).max().unwrap_or(0),
        }
    }

    /// Coefficients with respect to `var`: entry `d` is the coefficient of `var^d`.
    pub fn coefficients_in(&self, var: &str) -> Vec<MultiPoly> {
        let Some(k) = self.vars.iter().position(|v| v == var) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(var) as usize;
        let mut parts: Vec<BTreeMap<Exps, GaussianRational>> = vec![BTreeMap::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let d = ne[k] as usize;
            ne[k] = 0;
            parts[d].insert(ne, c.clone());
        }
        parts.into_iter().map(|t| Self::from_parts(self.vars.clone(), t)).collect()
    }

    /// Substitute a constant for one variable.
    pub fn substitute(&self, var: &str, value: &GaussianRational) -> Self {
        let Some(k) = self.vars.iter().position(|v| v == var) else {
            return self.clone();
        };
        let mut terms: BTreeMap<Exps, GaussianRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let d = ne[k];
            ne[k] = 0;
            let v = c * &value.pow(d as i64).expect("nonnegative power");
            let entry = terms.entry(ne).or_insert_with(GaussianRational::zero);
            *entry = &*entry + &v;
        }
        Self::from_parts(self.vars.clone(), terms)
    }

    /// Substitute a polynomial for one variable.
    pub fn compose(&self, var: &str, value: &MultiPoly) -> Self {
        let coeffs = self.coefficients_in(var);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(value).add(c);
        }
        acc
    }

    fn monomial_gcd_with(&self, o: &Self) -> Self {
        let vars = self.merged_vars(o);
        let mut mins: Option<Exps> = None;
        for e in self.with_vars(&vars).keys().chain(o.with_vars(&vars).keys()) {
            mins = Some(match mins {
                None => e.clone(),
                Some(m) => m.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        let mut terms = BTreeMap::new();
        terms.insert(mins.unwrap_or_default(), GaussianRational::one());
        Self::from_parts(vars, terms)
    }

    /// Monic greatest common divisor.
    ///
    /// Recursive: the content with respect to the first variable is handled
    /// by recursion on the remaining variables, the primitive parts by a
    /// primitive pseudo-remainder sequence.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.is_constant() || o.is_constant() {
            return Self::one();
        }
        if self == o {
            return self.monic();
        }
        if self.terms.len() == 1 || o.terms.len() == 1 {
            return self.monomial_gcd_with(o);
        }
        let var = self.merged_vars(o)[0].clone();
        let da = self.degree_in(&var);
        let db = o.degree_in(&var);
        if da == 0 {
            return self.gcd(&o.content_in(&var));
        }
        if db == 0 {
            return o.gcd(&self.content_in(&var));
        }
        let ca = self.content_in(&var);
        let cb = o.content_in(&var);
        let c = ca.gcd(&cb);
        let mut a = self.div_exact(&ca).expect("content divides");
        let mut b = o.div_exact(&cb).expect("content divides");
        if a.degree_in(&var) < b.degree_in(&var) {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() && b.degree_in(&var) > 0 {
            let r = a.pseudo_rem(&b, &var);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_in(&var) };
        }
        let g = if b.is_zero() { a.primitive_in(&var) } else { Self::one() };
        c.mul(&g).monic()
    }

    /// Gcd of the coefficients with respect to `var`.
    pub fn content_in(&self, var: &str) -> Self {
        let coeffs = self.coefficients_in(var);
        let mut g = Self::zero();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            g = g.gcd(c);
            if g.is_constant() {
                return Self::one();
            }
        }
        g
    }

    fn primitive_in(&self, var: &str) -> Self {
        let c = self.content_in(var);
        self.div_exact(&c).expect("content divides")
    }

    /// Pseudo-remainder of `self` by `d` as polynomials in `var`.
    fn pseudo_rem(&self, d: &Self, var: &str) -> Self {
        let dd = d.degree_in(var);
        let dcoef = d.coefficients_in(var);
        let lc_d = dcoef[dd as usize].clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(var) >= dd {
            let dr = r.degree_in(var);
            let lc_r = r.coefficients_in(var)[dr as usize].clone();
            let shift = Self::var(var).pow(dr - dd);
            r = r.mul(&lc_d).sub(&lc_r.mul(&shift).mul(d));
        }
        r
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(x, _)| **x > 0)
                .map(|(x, v)| if *x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", c, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var("x")
    }
    fn y() -> MultiPoly {
        MultiPoly::var("y")
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(GaussianRational::from(n))
    }

    #[test]
    fn difference_of_squares() {
        let u = MultiPoly::var("u");
        let lhs = u.sub(&c(1)).mul(&u.add(&c(1)));
        assert_eq!(lhs, u.mul(&u).sub(&c(1)));
    }

    #[test]
    fn unused_variables_are_dropped() {
        let p = x().add(&y()).sub(&y());
        assert_eq!(p.variables(), &["x".to_string()]);
        assert_eq!(p, x());
    }

    #[test]
    fn exact_division_and_failure() {
        let p = x().mul(&x()).sub(&y().mul(&y()));
        let q = p.div_exact(&x().sub(&y())).unwrap();
        assert_eq!(q, x().add(&y()));
        assert_eq!(p.div_exact(&x().add(&c(1))), Err(FieldError::InexactDivision));
    }

    #[test]
    fn bivariate_gcd() {
        let a = x().add(&y()).mul(&x().sub(&c(2))).mul(&y().add(&c(3)));
        let b = x().add(&y()).mul(&y().add(&c(3))).mul(&x().add(&y().mul(&y())));
        let g = a.gcd(&b);
        assert_eq!(g, x().add(&y()).mul(&y().add(&c(3))).monic());
    }

    #[test]
    fn gcd_with_gaussian_coefficients() {
        let i = MultiPoly::constant(GaussianRational::i());
        let a = x().sub(&i).mul(&x().add(&c(1)));
        let b = x().sub(&i).mul(&x().sub(&c(5)));
        assert_eq!(a.gcd(&b), x().sub(&i));
    }

    #[test]
    fn substitution() {
        let p = x().mul(&y()).add(&c(2));
        assert_eq!(p.substitute("y", &GaussianRational::from(3)), x().scale(&GaussianRational::from(3)).add(&c(2)));
    }
}
