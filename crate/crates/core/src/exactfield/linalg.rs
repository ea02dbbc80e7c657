//! Exact dense and sparse linear algebra over any [`Field`].
//!
//! Dense elimination is fraction-free (Bareiss) when the field asks for it,
//! plain Gauss–Jordan otherwise. Columns are always scanned left to right, so
//! pivots land on the earliest possible columns.

use std::collections::BTreeMap;

use super::Field;

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![vec![F::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k][k] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows: rows.len(), cols, data: rows }
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r][c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c][r] = self.data[r][c].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut m = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o.data[k][c];
                    if !b.is_zero() {
                        m.data[r][c] = m.data[r][c].add(&a.mul(b));
                    }
                }
            }
        }
        m
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
            .collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg()))
    }

    pub fn scale(&self, s: &F) -> Self {
        let data = self.data.iter().map(|r| r.iter().map(|x| x.mul(s)).collect()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        self.data.iter().map(|r| r[c].clone()).collect()
    }

    /// Stack `o` below `self`.
    pub fn vstack(&self, o: &Self) -> Self {
        assert!(self.rows == 0 || o.rows == 0 || self.cols == o.cols);
        let cols = if self.rows == 0 { o.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Self { rows: data.len(), cols, data }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    /// Row echelon form with the list of pivot columns.
    pub fn echelon(&self) -> Echelon<F> {
        if F::prefers_fraction_free() {
            bareiss(self, true)
        } else {
            gauss_jordan(self)
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of `{v : self·v = 0}`; its size is `cols − rank`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let ech = self.echelon();
        kernel_from_echelon(&ech, self.cols)
    }

    /// A basis of `{w : wᵀ·self = 0}`.
    pub fn left_nullspace(&self) -> Vec<Vec<F>> {
        self.transpose().nullspace()
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return F::one();
        }
        let ech = bareiss(self, false);
        if ech.pivots.len() < self.rows {
            return F::zero();
        }
        let d = ech.rows[self.rows - 1][self.cols - 1].clone();
        if ech.swaps % 2 == 1 {
            d.neg()
        } else {
            d
        }
    }

    /// Some `x` with `self·x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = self.clone();
        for (r, row) in aug.data.iter_mut().enumerate() {
            row.push(b[r].clone());
        }
        aug.cols += 1;
        let ech = gauss_jordan(&aug);
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (k, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.rows[k][self.cols].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.clone();
        for (r, row) in aug.data.iter_mut().enumerate() {
            for c in 0..n {
                row.push(if r == c { F::one() } else { F::zero() });
            }
        }
        aug.cols = 2 * n;
        let ech = gauss_jordan(&aug);
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        let data = ech.rows.iter().take(n).map(|r| r[n..].to_vec()).collect();
        Some(Self { rows: n, cols: n, data })
    }
}

/// The result of elimination: nonzero echelon rows and their pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
    pub swaps: usize,
    /// True when every pivot is 1 and pivot columns are cleared above and below.
    pub reduced: bool,
}

fn cheapest_pivot<F: Field>(a: &[Vec<F>], from: usize, col: usize) -> Option<usize> {
    (from..a.len()).filter(|&r| !a[r][col].is_zero()).min_by_key(|&r| a[r][col].cost())
}

/// Reduced row echelon form by Gauss–Jordan elimination.
pub fn gauss_jordan<F: Field>(m: &Matrix<F>) -> Echelon<F> {
    let mut a = m.data.clone();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = cheapest_pivot(&a, r, c) else { continue };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut().skip(c) {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..m.cols {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].sub(&f.mul(&pivot_row[j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots, swaps, reduced: true }
}

/// Fraction-free (Bareiss) row echelon form.
///
/// When `clear` is set each row is first scaled to polynomial entries, so that
/// every intermediate entry is a minor of the scaled matrix and each division
/// is exact polynomial division.
pub fn bareiss<F: Field>(m: &Matrix<F>, clear: bool) -> Echelon<F> {
    let mut a = m.data.clone();
    if clear {
        for row in a.iter_mut() {
            F::clear_denominators(row);
        }
    }
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = F::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = cheapest_pivot(&a, r, c) else { continue };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let piv = a[r][c].clone();
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in bottom.iter_mut() {
            let f = row[c].clone();
            for j in (c + 1)..m.cols {
                let t = piv.mul(&row[j]);
                let t = if f.is_zero() || prow[j].is_zero() { t } else { t.sub(&f.mul(&prow[j])) };
                row[j] = if t.is_zero() { t } else { t.div_exact(&prev) };
            }
            row[c] = F::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots, swaps, reduced: false }
}

fn kernel_from_echelon<F: Field>(ech: &Echelon<F>, cols: usize) -> Vec<Vec<F>> {
    let is_pivot: Vec<bool> = (0..cols).map(|c| ech.pivots.contains(&c)).collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        // Back substitution, last pivot first.
        for (k, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[k];
            let mut s = F::zero();
            for j in (pc + 1)..cols {
                if !row[j].is_zero() && !v[j].is_zero() {
                    s = s.add(&row[j].mul(&v[j]));
                }
            }
            v[pc] = if s.is_zero() {
                F::zero()
            } else if ech.reduced {
                s.neg()
            } else {
                s.neg().div(&row[pc]).expect("nonzero pivot")
            };
        }
        F::clear_denominators(&mut v);
        basis.push(v);
    }
    basis
}

/// A sparse vector: column index to nonzero entry.
pub type SparseVec<F> = BTreeMap<usize, F>;

/// Incrementally built sparse row echelon basis with earliest-column pivots.
///
/// Stored rows have leading entry 1 at their pivot column and arbitrary
/// entries to the right. Reducing a vector clears every pivot column, so the
/// result is supported on non-pivot columns only; it is zero iff the vector
/// lies in the span.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F: Field> {
    rows: BTreeMap<usize, Vec<(usize, F)>>,
}

impl<F: Field> Default for SparseEchelon<F> {
    fn default() -> Self {
        Self { rows: BTreeMap::new() }
    }
}

impl<F: Field> SparseEchelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn pivot_row(&self, c: usize) -> Option<&[(usize, F)]> {
        self.rows.get(&c).map(|r| r.as_slice())
    }

    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(k) = next else { break };
            let c = v.remove(&k).expect("key present");
            for (j, x) in &self.rows[&k][1..] {
                let e = v.entry(*j).or_insert_with(F::zero);
                *e = e.sub(&c.mul(x));
                if e.is_zero() {
                    v.remove(j);
                }
            }
            cursor = k + 1;
        }
        v
    }

    /// Add a vector to the span; returns its pivot column if it was independent.
    pub fn insert(&mut self, v: SparseVec<F>) -> Option<usize> {
        let r = self.reduce(v);
        let (&lead, lc) = r.iter().next()?;
        let inv = lc.inv().expect("nonzero leading entry");
        let row: Vec<(usize, F)> = r.iter().map(|(j, x)| (*j, x.mul(&inv))).collect();
        self.rows.insert(lead, row);
        Some(lead)
    }

    pub fn contains(&self, v: SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// A sparse echelon basis that remembers how each stored row was built from
/// the inserted vectors, so membership comes with explicit coefficients.
#[derive(Clone, Debug)]
pub struct TrackedEchelon<F: Field> {
    rows: BTreeMap<usize, (Vec<(usize, F)>, SparseVec<F>)>,
}

impl<F: Field> Default for TrackedEchelon<F> {
    fn default() -> Self {
        Self { rows: BTreeMap::new() }
    }
}

impl<F: Field> TrackedEchelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tracked(&self, mut v: SparseVec<F>, mut combo: SparseVec<F>) -> (SparseVec<F>, SparseVec<F>) {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(k) = next else { break };
            let c = v.remove(&k).expect("key present");
            let (row, rc) = &self.rows[&k];
            for (j, x) in &row[1..] {
                let e = v.entry(*j).or_insert_with(F::zero);
                *e = e.sub(&c.mul(x));
                if e.is_zero() {
                    v.remove(j);
                }
            }
            for (j, x) in rc {
                let e = combo.entry(*j).or_insert_with(F::zero);
                *e = e.sub(&c.mul(x));
                if e.is_zero() {
                    combo.remove(j);
                }
            }
            cursor = k + 1;
        }
        (v, combo)
    }

    /// Insert vector number `label`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: SparseVec<F>, label: usize) -> bool {
        let mut start = SparseVec::new();
        start.insert(label, F::one());
        let (r, combo) = self.reduce_tracked(v, start);
        let Some((&lead, lc)) = r.iter().next() else { return false };
        let inv = lc.inv().expect("nonzero leading entry");
        let row = r.iter().map(|(j, x)| (*j, x.mul(&inv))).collect();
        let combo = combo.into_iter().map(|(j, x)| (j, x.mul(&inv))).collect();
        self.rows.insert(lead, (row, combo));
        true
    }

    /// Coefficients `c` with `v = Σ c_label · inserted_label`, if `v` is in the span.
    pub fn express(&self, v: SparseVec<F>) -> Option<SparseVec<F>> {
        let (r, combo) = self.reduce_tracked(v, SparseVec::new());
        if !r.is_empty() {
            return None;
        }
        // reduce_tracked accumulated −Σ c·combo; flip the sign.
        Some(combo.into_iter().map(|(j, x)| (j, x.neg())).collect())
    }

    pub fn contains(&self, v: SparseVec<F>) -> bool {
        self.reduce_tracked(v, SparseVec::new()).0.is_empty()
    }
}

pub fn sparse_from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{GaussianRational as G, RationalFunction as R};

    fn g(n: i64) -> G {
        G::from(n)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(Matrix::<G>::identity(3).nullspace().is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        assert_eq!(Matrix::<G>::zeros(2, 3).nullspace().len(), 3);
    }

    #[test]
    fn kernel_vectors_are_killed() {
        let m = Matrix::from_rows(vec![vec![g(1), g(2), g(3)], vec![g(2), g(4), g(6)], vec![g(1), g(0), g(1)]]);
        let k = m.nullspace();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn fraction_free_kernel_over_rational_functions() {
        let t = R::var("t");
        let one = R::one();
        let m = Matrix::from_rows(vec![
            vec![t.clone(), one.clone(), R::zero()],
            vec![R::zero(), t.clone(), one.clone()],
        ]);
        let k = m.nullspace();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn determinant_fraction_free() {
        let t = R::var("t");
        let m = Matrix::from_rows(vec![
            vec![t.clone(), R::from_int(1)],
            vec![R::from_int(1), t.clone()],
        ]);
        assert_eq!(m.det(), t.mul(&t).sub(&R::one()));
        let n = Matrix::from_rows(vec![vec![g(0), g(1)], vec![g(1), g(0)]]);
        assert_eq!(n.det(), g(-1));
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_rows(vec![vec![g(2), g(1)], vec![g(1), g(1)]]);
        let x = m.solve(&[g(3), g(2)]).unwrap();
        assert_eq!(x, vec![g(1), g(1)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let sing = Matrix::from_rows(vec![vec![g(1), g(1)], vec![g(1), g(1)]]);
        assert!(sing.solve(&[g(1), g(0)]).is_none());
    }

    #[test]
    fn sparse_echelon_membership() {
        let mut e = SparseEchelon::<G>::new();
        e.insert(sparse_from_dense(&[g(1), g(1), g(0)]));
        e.insert(sparse_from_dense(&[g(0), g(1), g(1)]));
        assert!(e.contains(sparse_from_dense(&[g(1), g(2), g(1)])));
        assert!(!e.contains(sparse_from_dense(&[g(1), g(0), g(1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.insert(sparse_from_dense(&[g(1), g(0), g(1)])).is_some());
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn tracked_echelon_reproduces_input() {
        let gens = vec![vec![g(1), g(1), g(0)], vec![g(0), g(1), g(1)], vec![g(1), g(2), g(1)]];
        let mut t = TrackedEchelon::<G>::new();
        for (k, v) in gens.iter().enumerate() {
            t.insert(sparse_from_dense(v), k);
        }
        assert_eq!(t.rank(), 2);
        let target = vec![g(2), g(5), g(3)];
        let c = t.express(sparse_from_dense(&target)).unwrap();
        let mut sum = vec![g(0); 3];
        for (k, x) in &c {
            for j in 0..3 {
                sum[j] = sum[j].add(&x.mul(&gens[*k][j]));
            }
        }
        assert_eq!(sum, target);
        assert!(t.express(sparse_from_dense(&[g(1), g(0), g(0)])).is_none());
    }
}
