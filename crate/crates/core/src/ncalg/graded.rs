//! Degree-by-degree normal forms for a quadratic algebra.
//!
//! Degree `n` is built from degree `n−1`: the space `A_{n−1} ⊗ V` is cut down
//! by the images of `w·r` for `w` in a basis of `A_{n−2}` and `r` a relation.
//! Columns of `A_{n−1} ⊗ V` are the words `b·g` with `b` a normal word, in
//! lexicographic order; pivots go to the earliest columns and the remaining
//! columns are the normal words of degree `n`. The normal words agree with
//! the complement of the ideal component computed directly on the full word
//! space with the same pivoting rule.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{NCPoly, QuadraticPresentation, Word};
use crate::exactfield::linalg::{SparseEchelon, SparseVec};
use crate::exactfield::Field;

#[derive(Clone, Debug)]
struct Level<F: Field> {
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    /// Image of `basis_{n−1}[i] · g` in degree `n`, at position `i·ngens + g`.
    rmul: Vec<SparseVec<F>>,
}

/// Normal-word bases and right-multiplication tables up to a fixed degree.
#[derive(Clone, Debug)]
pub struct GradedAlgebra<F: Field> {
    ngens: usize,
    relations: Vec<NCPoly<F>>,
    levels: Vec<Level<F>>,
    pres: QuadraticPresentation<F>,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn new(pres: &QuadraticPresentation<F>, max_degree: usize) -> Self {
        let ngens = pres.ngens();
        let unit = Word::unit();
        let mut level0 = Level { basis: vec![unit.clone()], index: HashMap::new(), rmul: Vec::new() };
        level0.index.insert(unit, 0);
        let mut alg = Self { ngens, relations: pres.relations().to_vec(), levels: vec![level0], pres: pres.clone() };
        alg.extend_to(max_degree);
        alg
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn presentation(&self) -> &QuadraticPresentation<F> {
        &self.pres
    }

    pub fn max_degree(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn extend_to(&mut self, max_degree: usize) {
        while self.levels.len() <= max_degree {
            self.push_level();
        }
    }

    fn push_level(&mut self) {
        let n = self.levels.len();
        let ngens = self.ngens;
        let prev = &self.levels[n - 1];
        let ncols = prev.basis.len() * ngens;
        let mut ech = SparseEchelon::<F>::new();
        if n >= 2 {
            let prev2 = &self.levels[n - 2];
            let rows: Vec<SparseVec<F>> = (0..prev2.basis.len())
                .into_par_iter()
                .flat_map_iter(|j| {
                    self.relations.iter().map(move |r| {
                        let mut row = SparseVec::new();
                        for (w, c) in r.terms() {
                            let (a, b) = (w.0[0] as usize, w.0[1] as usize);
                            for (i, d) in &prev.rmul[j * ngens + a] {
                                let col = i * ngens + b;
                                let e = row.entry(col).or_insert_with(F::zero);
                                *e = e.add(&c.mul(d));
                                if e.is_zero() {
                                    row.remove(&col);
                                }
                            }
                        }
                        row
                    })
                })
                .collect();
            for row in rows {
                ech.insert(row);
            }
        }
        let mut basis = Vec::new();
        let mut col_to_basis = vec![usize::MAX; ncols];
        for col in 0..ncols {
            if !ech.is_pivot(col) {
                col_to_basis[col] = basis.len();
                let mut w = prev.basis[col / ngens].0.clone();
                w.push((col % ngens) as u8);
                basis.push(Word(w));
            }
        }
        let rmul: Vec<SparseVec<F>> = (0..ncols)
            .into_par_iter()
            .map(|col| {
                let mut unit = SparseVec::new();
                unit.insert(col, F::one());
                let red = if ech.is_pivot(col) { ech.reduce(unit) } else { unit };
                red.into_iter().map(|(c, x)| (col_to_basis[c], x)).collect()
            })
            .collect();
        let index = basis.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        self.levels.push(Level { basis, index, rmul });
    }

    pub fn dim(&self, n: usize) -> usize {
        self.levels[n].basis.len()
    }

    pub fn basis(&self, n: usize) -> &[Word] {
        &self.levels[n].basis
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.levels.get(w.degree())?.index.get(w).copied()
    }

    /// Multiply an element of degree `n` on the right by generator `g`.
    pub fn right_mul(&self, n: usize, v: &SparseVec<F>, g: usize) -> SparseVec<F> {
        let table = &self.levels[n + 1].rmul;
        let mut out = SparseVec::new();
        for (i, c) in v {
            for (j, d) in &table[i * self.ngens + g] {
                let e = out.entry(*j).or_insert_with(F::zero);
                *e = e.add(&c.mul(d));
                if e.is_zero() {
                    out.remove(j);
                }
            }
        }
        out
    }

    /// Multiply an element of degree `n` on the right by a word.
    pub fn right_mul_word(&self, n: usize, v: &SparseVec<F>, w: &Word) -> SparseVec<F> {
        let mut cur = v.clone();
        for (k, &g) in w.0.iter().enumerate() {
            cur = self.right_mul(n + k, &cur, g as usize);
        }
        cur
    }

    pub fn normal_form_word(&self, w: &Word) -> SparseVec<F> {
        let mut unit = SparseVec::new();
        unit.insert(0, F::one());
        self.right_mul_word(0, &unit, w)
    }

    /// Coordinates of a homogeneous polynomial in the normal-word basis.
    pub fn normal_form(&self, p: &NCPoly<F>) -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (w, c) in p.terms() {
            for (j, d) in self.normal_form_word(w) {
                let e = out.entry(j).or_insert_with(F::zero);
                *e = e.add(&c.mul(&d));
                if e.is_zero() {
                    out.remove(&j);
                }
            }
        }
        out
    }

    /// Product of elements of degrees `m` and `n` given in normal coordinates.
    pub fn mul(&self, m: usize, a: &SparseVec<F>, n: usize, b: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (j, d) in b {
            let w = &self.levels[n].basis[*j];
            let prod = self.right_mul_word(m, a, w);
            for (k, x) in prod {
                let e = out.entry(k).or_insert_with(F::zero);
                *e = e.add(&x.mul(d));
                if e.is_zero() {
                    out.remove(&k);
                }
            }
        }
        out
    }

    /// The element with normal coordinates `v` as a polynomial in normal words.
    pub fn to_poly(&self, n: usize, v: &SparseVec<F>) -> NCPoly<F> {
        NCPoly::from_terms(v.iter().map(|(k, c)| (self.levels[n].basis[*k].clone(), c.clone())))
    }

    /// Images under left multiplication by `p` (homogeneous of degree `d`)
    /// of the basis of degree `n`.
    pub fn left_mul_images(&self, p: &NCPoly<F>, n: usize) -> Vec<SparseVec<F>> {
        let d = p.homogeneous_degree().unwrap_or(0);
        let pv = self.normal_form(p);
        (0..self.dim(n))
            .into_par_iter()
            .map(|k| self.right_mul_word(d, &pv, &self.levels[n].basis[k]))
            .collect()
    }

    /// Images under right multiplication by `p` of the basis of degree `n`.
    pub fn right_mul_images(&self, p: &NCPoly<F>, n: usize) -> Vec<SparseVec<F>> {
        (0..self.dim(n))
            .into_par_iter()
            .map(|k| {
                let mut e = SparseVec::new();
                e.insert(k, F::one());
                let mut out = SparseVec::new();
                for (w, c) in p.terms() {
                    for (j, x) in self.right_mul_word(n, &e, w) {
                        let t = out.entry(j).or_insert_with(F::zero);
                        *t = t.add(&c.mul(&x));
                        if t.is_zero() {
                            out.remove(&j);
                        }
                    }
                }
                out
            })
            .collect()
    }
}
