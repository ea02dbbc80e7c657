use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::exactfield::Field;

/// A word in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn letter(g: usize) -> Self {
        Self(vec![g as u8])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// Position of this word among all words of its length, in lex order.
    pub fn rank_in(&self, ngens: usize) -> usize {
        self.0.iter().fold(0, |acc, &g| acc * ngens + g as usize)
    }

    /// Inverse of [`Word::rank_in`].
    pub fn from_rank(mut r: usize, len: usize, ngens: usize) -> Word {
        let mut v = vec![0u8; len];
        for k in (0..len).rev() {
            v[k] = (r % ngens) as u8;
            r /= ngens;
        }
        Word(v)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0.iter().map(|&g| names[g as usize].as_str()).collect::<Vec<_>>().join("")
    }
}

impl Ord for Word {
    /// Degree first, then lexicographic.
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// A noncommutative polynomial: a finite combination of words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NCPoly<F: Field> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for NCPoly<F> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<F: Field> NCPoly<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: F) -> Self {
        Self::monomial(Word::unit(), c)
    }

    pub fn one() -> Self {
        Self::scalar(F::one())
    }

    pub fn gen(g: usize) -> Self {
        Self::monomial(Word::letter(g), F::one())
    }

    pub fn monomial(w: Word, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Self { terms }
    }

    /// A linear form `Σ c_g g`.
    pub fn linear(coeffs: &[F]) -> Self {
        let mut p = Self::zero();
        for (g, c) in coeffs.iter().enumerate() {
            p.add_term(Word::letter(g), c.clone());
        }
        p
    }

    pub fn from_terms(items: impl IntoIterator<Item = (Word, F)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in items {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all words, if there is one. Zero has every degree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|w| w.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &o.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &o.terms {
            p.add_term(w.clone(), c.neg());
        }
        p
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.mul(s))).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &o.terms {
                p.add_term(wa.concat(wb), ca.mul(cb));
            }
        }
        p
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `ab − ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).sub(&b.mul(a))
    }

    /// `ab + ba`.
    pub fn anticommutator(a: &Self, b: &Self) -> Self {
        a.mul(b).add(&b.mul(a))
    }

    /// Replace each generator `g` by `images[g]`.
    pub fn substitute(&self, images: &[NCPoly<F>]) -> Self {
        let mut p = Self::zero();
        for (w, c) in &self.terms {
            let mut m = Self::scalar(c.clone());
            for &g in &w.0 {
                m = m.mul(&images[g as usize]);
            }
            p = p.add(&m);
        }
        p
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> NCPoly<G> {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Coefficients of a linear form, one per generator.
    pub fn linear_coeffs(&self, ngens: usize) -> Vec<F> {
        (0..ngens).map(|g| self.coefficient(&Word::letter(g))).collect()
    }

    /// Coefficient vector of a homogeneous polynomial over all words of degree `n`.
    pub fn dense_coeffs(&self, n: usize, ngens: usize) -> Vec<F> {
        let mut v = vec![F::zero(); ngens.pow(n as u32)];
        for (w, c) in &self.terms {
            v[w.rank_in(ngens)] = c.clone();
        }
        v
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                if w.degree() == 0 {
                    c.to_string()
                } else if c.is_one() {
                    w.render(names)
                } else if c.neg().is_one() {
                    format!("-{}", w.render(names))
                } else {
                    format!("{}*{}", c, w.render(names))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::GaussianRational as G;

    type P = NCPoly<G>;

    #[test]
    fn deg_lex_order() {
        assert!(Word(vec![2]) < Word(vec![0, 0]));
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
    }

    #[test]
    fn rank_roundtrip() {
        let w = Word(vec![3, 0, 2]);
        assert_eq!(Word::from_rank(w.rank_in(4), 3, 4), w);
    }

    #[test]
    fn commutator_is_antisymmetric() {
        let x = P::gen(0);
        let y = P::gen(1);
        assert_eq!(P::commutator(&x, &y), P::commutator(&y, &x).neg());
        assert_eq!(P::commutator(&x, &x), P::zero());
        assert_eq!(P::anticommutator(&x, &y).num_terms(), 2);
    }

    #[test]
    fn substitution_is_multiplicative() {
        let x = P::gen(0);
        let y = P::gen(1);
        let p = x.mul(&y);
        let images = vec![y.clone(), x.add(&y)];
        assert_eq!(p.substitute(&images), y.mul(&x.add(&y)));
    }

    #[test]
    fn homogeneity() {
        let x = P::gen(0);
        assert_eq!(x.mul(&x).homogeneous_degree(), Some(2));
        assert_eq!(x.add(&P::one()).homogeneous_degree(), None);
    }
}
