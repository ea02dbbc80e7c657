//! Commutative polynomials in a fixed number of coordinates, and degree-wise
//! linear algebra on homogeneous ideals.

use std::collections::{BTreeMap, HashMap};

use crate::exactfield::linalg::{SparseEchelon, SparseVec};
use crate::exactfield::{Field, FieldError};

pub type Exponent = Vec<u32>;

/// A polynomial in `nvars` commuting variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CPoly<F: Field> {
    nvars: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Field> CPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(e: Exponent, c: F) -> Self {
        let nvars = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { nvars, terms }
    }

    /// `Σ c_i x_i`.
    pub fn linear(coeffs: &[F]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Self::var(n, i).terms.into_keys().next().unwrap(), c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, e: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Common total degree of all terms, if any.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.mul(s))).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero(self.nvars.max(o.nvars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(e, ca.mul(cb));
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(self.nvars, F::one()), |acc, _| acc.mul(self))
    }

    /// Value at a point.
    pub fn eval(&self, pt: &[F]) -> F {
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in pt.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&x.pow(k as i64).expect("nonnegative"));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Replace variable `i` by `images[i]`.
    pub fn substitute(&self, images: &[CPoly<F>]) -> CPoly<F> {
        let n = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut acc = CPoly::zero(n);
        for (e, c) in &self.terms {
            let mut t = CPoly::constant(n, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&img.pow(k));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                p.add_term(f, c.mul(&F::from_int(e[i] as i64)));
            }
        }
        p
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> CPoly<G> {
        let mut p = CPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), f(c));
        }
        p
    }

    /// Exact division, by repeated cancellation of the lexicographically
    /// largest term.
    pub fn div_exact(&self, d: &Self) -> Result<Self, FieldError> {
        let (de, dc) = d.terms.iter().next_back().ok_or(FieldError::DivisionByZero)?;
        let dinv = dc.inv()?;
        let mut rem = self.clone();
        let mut quo = Self::zero(self.nvars);
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            if re.iter().zip(de).any(|(a, b)| a < b) {
                return Err(FieldError::InexactDivision);
            }
            let e: Exponent = re.iter().zip(de).map(|(a, b)| a - b).collect();
            let t = Self::monomial(e, rc.mul(&dinv));
            rem = rem.sub(&t.mul(d));
            quo = quo.add(&t);
        }
        Ok(quo)
    }

    pub fn render(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { names[i].to_string() } else { format!("{}^{}", names[i], k) })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    mono.join("*")
                } else {
                    format!("({})*{}", c, mono.join("*"))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in a fixed order.
pub fn monomials(n: usize, d: u32) -> Vec<Exponent> {
    fn rec(n: usize, d: u32, prefix: &mut Exponent, out: &mut Vec<Exponent>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Determinant of a square matrix of polynomials, by cofactor expansion.
pub fn det<F: Field>(m: &[Vec<CPoly<F>>]) -> CPoly<F> {
    let n = m.len();
    let nv = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = CPoly::zero(nv);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<CPoly<F>>> =
            (1..n).map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c].clone()).collect()).collect();
        let t = m[0][j].mul(&det(&minor));
        acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}

/// The image of a noncommutative polynomial in the commutative polynomial ring.
pub fn commutative_image<F: Field>(p: &crate::ncalg::NCPoly<F>, nvars: usize) -> CPoly<F> {
    let mut out = CPoly::zero(nvars);
    for (w, c) in p.terms() {
        let mut e = vec![0; nvars];
        for &g in &w.0 {
            e[g as usize] += 1;
        }
        out.add_term(e, c.clone());
    }
    out
}

/// A homogeneous ideal given by generators, studied one degree at a time.
#[derive(Clone, Debug)]
pub struct HomogeneousIdeal<F: Field> {
    pub nvars: usize,
    pub gens: Vec<CPoly<F>>,
}

/// The degree-`d` component of an ideal inside the space of degree-`d` forms.
pub struct DegreeComponent<F: Field> {
    pub degree: u32,
    pub monomials: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
    pub span: SparseEchelon<F>,
}

impl<F: Field> DegreeComponent<F> {
    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    /// Dimension of the quotient in this degree.
    pub fn codim(&self) -> usize {
        self.monomials.len() - self.span.rank()
    }

    pub fn vector(&self, p: &CPoly<F>) -> SparseVec<F> {
        p.terms().map(|(e, c)| (self.index[e], c.clone())).collect()
    }

    pub fn contains(&self, p: &CPoly<F>) -> bool {
        self.span.contains(self.vector(p))
    }
}

impl<F: Field> HomogeneousIdeal<F> {
    pub fn new(nvars: usize, gens: Vec<CPoly<F>>) -> Self {
        assert!(gens.iter().all(|g| g.is_zero() || g.homogeneous_degree().is_some()), "generators must be homogeneous");
        Self { nvars, gens }
    }

    pub fn component(&self, d: u32) -> DegreeComponent<F> {
        let monos = monomials(self.nvars, d);
        let index: HashMap<Exponent, usize> = monos.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
        let mut span = SparseEchelon::new();
        for g in &self.gens {
            let Some(gd) = g.homogeneous_degree() else { continue };
            if gd > d {
                continue;
            }
            for m in monomials(self.nvars, d - gd) {
                let p = CPoly::monomial(m, F::one()).mul(g);
                span.insert(p.terms().map(|(e, c)| (index[e], c.clone())).collect());
            }
        }
        DegreeComponent { degree: d, monomials: monos, index, span }
    }

    /// Whether a homogeneous polynomial lies in the ideal.
    pub fn contains(&self, p: &CPoly<F>) -> bool {
        match p.homogeneous_degree() {
            None => p.is_zero(),
            Some(d) => self.component(d).contains(p),
        }
    }

    /// Hilbert function of the quotient ring in degrees `0..=d`.
    pub fn hilbert_function(&self, d: u32) -> Vec<usize> {
        (0..=d).map(|k| self.component(k).codim()).collect()
    }

    /// The eventually constant value of the Hilbert function: the first value
    /// repeated `window` times in a row, searching up to degree `max_degree`.
    pub fn stable_hilbert_value(&self, window: usize, max_degree: u32) -> Option<usize> {
        let mut run = 0;
        let mut last = usize::MAX;
        for d in 0..=max_degree {
            let v = self.component(d).codim();
            if v == last {
                run += 1;
            } else {
                run = 1;
                last = v;
            }
            if run >= window {
                return Some(v);
            }
        }
        None
    }

    /// Equality of degree-`d` components.
    pub fn same_component(&self, o: &Self, d: u32) -> bool {
        let a = self.component(d);
        let b = o.component(d);
        a.dim() == b.dim()
            && b.span.pivots().all(|p| a.span.contains(b.span.pivot_row(p).expect("pivot").iter().cloned().collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::GaussianRational as G;

    type P = CPoly<G>;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(4, 2).len(), 10);
        assert_eq!(monomials(3, 3).len(), 10);
        assert_eq!(monomials(1, 5), vec![vec![5]]);
    }

    #[test]
    fn exact_division_and_det() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p.div_exact(&x.add(&y)).unwrap(), x.sub(&y));
        assert!(p.div_exact(&x).is_err());
        let m = vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]];
        assert_eq!(det(&m), x.mul(&x).sub(&y.mul(&y)));
    }

    #[test]
    fn hilbert_of_two_points() {
        // (xy, z) in three variables cuts out two points.
        let x = P::var(3, 0);
        let y = P::var(3, 1);
        let z = P::var(3, 2);
        let i = HomogeneousIdeal::new(3, vec![x.mul(&y), z]);
        assert_eq!(i.hilbert_function(4), vec![1, 2, 2, 2, 2]);
        assert_eq!(i.stable_hilbert_value(3, 12), Some(2));
        assert!(i.contains(&x.mul(&y).mul(&x)));
        assert!(!i.contains(&x.mul(&x)));
    }

    #[test]
    fn eval_and_substitute_agree() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let p = x.mul(&x).add(&y.scale(&G::from(3)));
        let images = vec![x.add(&y), x.sub(&y)];
        let s = p.substitute(&images);
        let pt = [G::from(2), G::from(5)];
        let img_pt: Vec<G> = images.iter().map(|i| i.eval(&pt)).collect();
        assert_eq!(s.eval(&pt), p.eval(&img_pt));
        assert_eq!(p.partial(0), x.scale(&G::from(2)));
    }
}
