//! Graded left modules truncated at a cutoff degree, finite-dimensional
//! modules, and the maps between them.
//!
//! Action matrices act on column vectors: the action of generator `g` from
//! degree `d` is a `dims[d+1] × dims[d]` matrix.

mod certs;
mod localize;

pub use certs::*;
pub use localize::*;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactfield::linalg::{Matrix, SparseEchelon};
use crate::exactfield::{quantum_integer, Field, ParameterContext};
use crate::ncalg::{AlgebraMap, GradedAlgebra, NCPoly, QuadraticPresentation, Word};
use crate::ptscheme::successor_kernel;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("successor at step {0} is not unique (kernel dimension {1})")]
    AmbiguousSuccessor(usize, usize),
    #[error("generators of a left ideal must be homogeneous")]
    NotHomogeneous,
    #[error("graded algebra only built to degree {0}, need {1}")]
    AlgebraTooShort(usize, usize),
    #[error("modules disagree on the number of generators")]
    GeneratorMismatch,
}

/// A graded module known in degrees `0..=cutoff`.
#[derive(Clone, Debug)]
pub struct TruncatedGradedModule<F: Field> {
    pub cutoff: usize,
    pub dims: Vec<usize>,
    /// `actions[g][d]`: degree `d` to degree `d+1`, for `d < cutoff`.
    pub actions: Vec<Vec<Matrix<F>>>,
    pub label: String,
    /// For cyclic quotients of the algebra: the word represented by each basis vector.
    pub words: Option<Vec<Vec<Word>>>,
}

/// A module over the algebra with the given number of generators, one
/// matrix per generator.
#[derive(Clone, Debug)]
pub struct FiniteModule<F: Field> {
    pub dim: usize,
    pub actions: Vec<Matrix<F>>,
    pub label: String,
}

/// Degree-`d` components of a graded map `M → N(shift)`: `maps[d]` sends
/// `M_d` to `N_{d+shift}`.
#[derive(Clone, Debug)]
pub struct GradedHomWitness<F: Field> {
    pub shift: usize,
    pub maps: Vec<Matrix<F>>,
}

fn zero_matrix<F: Field>(r: usize, c: usize) -> Matrix<F> {
    Matrix { rows: r, cols: c, data: vec![vec![F::zero(); c]; r] }
}

fn linear_combination<F: Field>(mats: &[Matrix<F>], coeffs: &[F], r: usize, c: usize) -> Matrix<F> {
    let mut out = zero_matrix(r, c);
    for (m, a) in mats.iter().zip(coeffs) {
        if !a.is_zero() {
            out = out.add(&m.scale(a));
        }
    }
    out
}

/// Columns as a matrix.
fn from_columns<F: Field>(cols: &[Vec<F>], rows: usize) -> Matrix<F> {
    let mut m = zero_matrix(rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for i in 0..rows {
            m.data[i][j] = c[i].clone();
        }
    }
    m
}

fn is_invertible<F: Field>(m: &Matrix<F>) -> bool {
    m.rows == m.cols && (m.rows == 0 || m.rank() == m.rows)
}

impl<F: Field> TruncatedGradedModule<F> {
    pub fn ngens(&self) -> usize {
        self.actions.len()
    }

    pub fn action(&self, g: usize, d: usize) -> &Matrix<F> {
        &self.actions[g][d]
    }

    /// The action of a homogeneous element of degree `k` from degree `d`.
    pub fn element_action(&self, p: &NCPoly<F>, d: usize) -> Matrix<F> {
        let k = p.homogeneous_degree().unwrap_or(0);
        let mut out = zero_matrix(self.dims[d + k], self.dims[d]);
        for (w, c) in p.terms() {
            out = out.add(&self.word_action(w, d).scale(c));
        }
        out
    }

    /// `w = g₁⋯g_k` acting from degree `d`: the rightmost letter acts first.
    pub fn word_action(&self, w: &Word, d: usize) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims[d]);
        for (step, &g) in w.0.iter().rev().enumerate() {
            m = self.actions[g as usize][d + step].mul(&m);
        }
        m
    }

    /// Relations that fail, as `(relation index, degree)`.
    pub fn relation_failures(&self, pres: &QuadraticPresentation<F>) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for (r, rel) in pres.relations().iter().enumerate() {
            for d in 0..self.cutoff.saturating_sub(1) {
                if !self.element_action(rel, d).is_zero() {
                    bad.push((r, d));
                }
            }
        }
        bad
    }

    /// `M(-k)`: the same module with degrees raised by `k`.
    pub fn shifted(&self, k: usize) -> Self {
        let ng = self.ngens();
        let mut dims = vec![0; k];
        dims.extend(self.dims.iter().copied());
        let mut actions: Vec<Vec<Matrix<F>>> = vec![Vec::new(); ng];
        for g in 0..ng {
            for d in 0..k {
                actions[g].push(zero_matrix(dims[d + 1], dims[d]));
            }
            actions[g].extend(self.actions[g].iter().cloned());
        }
        Self { cutoff: self.cutoff + k, dims, actions, label: format!("{}(-{k})", self.label), words: None }
    }

    /// Drop degrees above `n`.
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.cutoff);
        Self {
            cutoff: n,
            dims: self.dims[..=n].to_vec(),
            actions: self.actions.iter().map(|a| a[..n].to_vec()).collect(),
            label: self.label.clone(),
            words: self.words.as_ref().map(|w| w[..=n].to_vec()),
        }
    }

    /// Pull back along an algebra map that is linear on generators: `a·m = φ(a)m`.
    pub fn twist(&self, map: &AlgebraMap<F>) -> Self {
        let ng = self.ngens();
        let coeffs: Vec<Vec<F>> = (0..ng).map(|g| map.apply(&NCPoly::gen(g)).linear_coeffs(ng)).collect();
        let actions = (0..ng)
            .map(|g| {
                (0..self.cutoff)
                    .map(|d| {
                        let mats: Vec<Matrix<F>> = (0..ng).map(|h| self.actions[h][d].clone()).collect();
                        linear_combination(&mats, &coeffs[g], self.dims[d + 1], self.dims[d])
                    })
                    .collect()
            })
            .collect();
        Self { cutoff: self.cutoff, dims: self.dims.clone(), actions, label: format!("twist({})", self.label), words: None }
    }

    /// The graded submodule `ker f` for a degree-0 map `f: M → N`, in bases of the kernels.
    pub fn kernel(&self, f: &GradedHomWitness<F>) -> (Self, Vec<Matrix<F>>) {
        let top = f.maps.len().min(self.cutoff + 1) - 1;
        let bases: Vec<Vec<Vec<F>>> = (0..=top).map(|d| kernel_basis(&f.maps[d], self.dims[d])).collect();
        let incl: Vec<Matrix<F>> = (0..=top).map(|d| from_columns(&bases[d], self.dims[d])).collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let actions = (0..self.ngens())
            .map(|g| {
                (0..top)
                    .map(|d| {
                        let mut m = zero_matrix(dims[d + 1], dims[d]);
                        for (j, v) in bases[d].iter().enumerate() {
                            let img = self.actions[g][d].apply(v);
                            let coords = incl[d + 1].solve(&img).expect("kernel is a submodule");
                            for i in 0..dims[d + 1] {
                                m.data[i][j] = coords[i].clone();
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        (Self { cutoff: top, dims, actions, label: format!("ker→{}", self.label), words: None }, incl)
    }
}

fn kernel_basis<F: Field>(m: &Matrix<F>, cols: usize) -> Vec<Vec<F>> {
    if m.rows == 0 {
        return (0..cols).map(|j| (0..cols).map(|i| if i == j { F::one() } else { F::zero() }).collect()).collect();
    }
    m.nullspace()
}

/// `A / A·gens` through degree `n`, on the normal words of `alg` not used as pivots.
pub fn quotient_module<F: Field>(
    alg: &GradedAlgebra<F>,
    gens: &[NCPoly<F>],
    n: usize,
    label: &str,
) -> Result<TruncatedGradedModule<F>, ModuleError> {
    if alg.max_degree() < n {
        return Err(ModuleError::AlgebraTooShort(alg.max_degree(), n));
    }
    let mut degs = Vec::new();
    for g in gens {
        degs.push(g.homogeneous_degree().ok_or(ModuleError::NotHomogeneous)?);
    }
    let ng = alg.ngens();
    let mut ech: Vec<SparseEchelon<F>> = Vec::new();
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for d in 0..=n {
        let mut e = SparseEchelon::new();
        for (g, &k) in gens.iter().zip(&degs) {
            if k > d {
                continue;
            }
            for v in alg.right_mul_images(g, d - k) {
                e.insert(v);
            }
        }
        reps.push((0..alg.dim(d)).filter(|c| !e.is_pivot(*c)).collect());
        ech.push(e);
    }
    let dims: Vec<usize> = reps.iter().map(|r| r.len()).collect();
    let words: Vec<Vec<Word>> = (0..=n).map(|d| reps[d].iter().map(|&c| alg.basis(d)[c].clone()).collect()).collect();
    let mut actions: Vec<Vec<Matrix<F>>> = vec![Vec::new(); ng];
    for d in 0..n {
        let pos: std::collections::HashMap<usize, usize> = reps[d + 1].iter().enumerate().map(|(k, &c)| (c, k)).collect();
        for g in 0..ng {
            let mut m = zero_matrix(dims[d + 1], dims[d]);
            for (j, w) in words[d].iter().enumerate() {
                let img = alg.normal_form_word(&Word::letter(g).concat(w));
                for (c, x) in ech[d + 1].reduce(img) {
                    m.data[pos[&c]][j] = x;
                }
            }
            actions[g].push(m);
        }
    }
    Ok(TruncatedGradedModule { cutoff: n, dims, actions, label: label.to_string(), words: Some(words) })
}

/// The point module of `p` from the chain of successor kernels: generator
/// `g` sends `e_d` to `(p_d)_g e_{d+1}` with `p_{d+1}` spanning the kernel at `p_d`.
pub fn point_module<F: Field>(
    pres: &QuadraticPresentation<F>,
    p: &[F],
    n: usize,
) -> Result<TruncatedGradedModule<F>, ModuleError> {
    let ng = pres.ngens();
    let mut cur = p.to_vec();
    let mut actions: Vec<Vec<Matrix<F>>> = vec![Vec::new(); ng];
    for d in 0..n {
        for g in 0..ng {
            actions[g].push(Matrix::from_rows(vec![vec![cur[g].clone()]]));
        }
        let ker = successor_kernel(pres, &cur);
        if ker.len() != 1 {
            return Err(ModuleError::AmbiguousSuccessor(d, ker.len()));
        }
        cur = ker.into_iter().next().unwrap();
    }
    Ok(TruncatedGradedModule {
        cutoff: n,
        dims: vec![1; n + 1],
        actions,
        label: format!("M_{}", crate::ptscheme::render_point(p)),
        words: None,
    })
}

/// Linear forms vanishing at `p`, as elements of degree one.
pub fn perp_forms<F: Field>(p: &[F]) -> Vec<NCPoly<F>> {
    crate::ptscheme::perp(p).iter().map(|r| NCPoly::linear(r)).collect()
}

/// All graded maps `M_d → N_{d+shift}` commuting with the generators, in
/// degrees up to the common cutoff.
pub fn hom_space<F: Field>(
    m: &TruncatedGradedModule<F>,
    n: &TruncatedGradedModule<F>,
    shift: usize,
) -> Vec<GradedHomWitness<F>> {
    if n.cutoff < shift {
        return vec![];
    }
    let top = m.cutoff.min(n.cutoff - shift);
    let mut offsets = Vec::new();
    let mut total = 0;
    for d in 0..=top {
        offsets.push(total);
        total += n.dims[d + shift] * m.dims[d];
    }
    if total == 0 {
        return vec![];
    }
    let idx = |d: usize, r: usize, c: usize| offsets[d] + r * m.dims[d] + c;
    let mut rows: Vec<Vec<F>> = Vec::new();
    for d in 0..top {
        for g in 0..m.ngens() {
            let am = &m.actions[g][d];
            let an = &n.actions[g][d + shift];
            for r in 0..n.dims[d + 1 + shift] {
                for c in 0..m.dims[d] {
                    let mut row = vec![F::zero(); total];
                    for t in 0..m.dims[d + 1] {
                        let j = idx(d + 1, r, t);
                        row[j] = row[j].add(&am.data[t][c]);
                    }
                    for t in 0..n.dims[d + shift] {
                        let j = idx(d, t, c);
                        row[j] = row[j].sub(&an.data[r][t]);
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let sols = if rows.is_empty() {
        kernel_basis(&zero_matrix(0, total), total)
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    sols.iter().map(|sol| witness_from_vector(sol, m, n, shift, top, &offsets)).collect()
}

fn witness_from_vector<F: Field>(
    sol: &[F],
    m: &TruncatedGradedModule<F>,
    n: &TruncatedGradedModule<F>,
    shift: usize,
    top: usize,
    offsets: &[usize],
) -> GradedHomWitness<F> {
    let maps = (0..=top)
        .map(|d| {
            let mut f = zero_matrix(n.dims[d + shift], m.dims[d]);
            for r in 0..n.dims[d + shift] {
                for c in 0..m.dims[d] {
                    f.data[r][c] = sol[offsets[d] + r * m.dims[d] + c].clone();
                }
            }
            f
        })
        .collect();
    GradedHomWitness { shift, maps }
}

/// Whether the maps commute with every generator where both sides are defined.
pub fn commutes<F: Field>(f: &GradedHomWitness<F>, m: &TruncatedGradedModule<F>, n: &TruncatedGradedModule<F>) -> bool {
    let top = f.maps.len() - 1;
    (0..top).all(|d| {
        (0..m.ngens()).all(|g| f.maps[d + 1].mul(&m.actions[g][d]) == n.actions[g][d + f.shift].mul(&f.maps[d]))
    })
}

/// For a cyclic quotient `M = A/A·W` and `n₀ ∈ N_shift` killed by `W`, the map
/// sending the basis word `w` of `M_d` to `w·n₀`.
pub fn cyclic_map<F: Field>(
    m: &TruncatedGradedModule<F>,
    n: &TruncatedGradedModule<F>,
    shift: usize,
    n0: &[F],
) -> Option<GradedHomWitness<F>> {
    let words = m.words.as_ref()?;
    let top = m.cutoff.min(n.cutoff.checked_sub(shift)?);
    let maps = (0..=top)
        .map(|d| {
            let cols: Vec<Vec<F>> = words[d].iter().map(|w| n.word_action(w, shift).apply(n0)).collect();
            from_columns(&cols, n.dims[d + shift])
        })
        .collect();
    Some(GradedHomWitness { shift, maps })
}

/// Vectors of `N_shift` killed by every element of `w` (all of one degree `k`).
pub fn annihilated_vectors<F: Field>(n: &TruncatedGradedModule<F>, w: &[NCPoly<F>], shift: usize) -> Vec<Vec<F>> {
    let rows: Vec<Vec<F>> = w.iter().flat_map(|p| n.element_action(p, shift).data).collect();
    if rows.is_empty() {
        return kernel_basis(&zero_matrix(0, n.dims[shift]), n.dims[shift]);
    }
    Matrix::from_rows(rows).nullspace()
}

/// A degreewise invertible element of the span of `basis`, found by trying
/// seeded random integer combinations.
pub fn find_isomorphism<F: Field>(basis: &[GradedHomWitness<F>], seed: u64, tries: usize) -> Option<GradedHomWitness<F>> {
    if basis.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..tries {
        let coeffs: Vec<F> = (0..basis.len())
            .map(|k| if attempt == 0 { F::from_int(if k == 0 { 1 } else { 0 }) } else { F::from_int(rng.gen_range(-5..=5)) })
            .collect();
        let maps = (0..basis[0].maps.len())
            .map(|d| {
                let (r, c) = (basis[0].maps[d].rows, basis[0].maps[d].cols);
                let mats: Vec<Matrix<F>> = basis.iter().map(|b| b.maps[d].clone()).collect();
                linear_combination(&mats, &coeffs, r, c)
            })
            .collect();
        let cand = GradedHomWitness { shift: basis[0].shift, maps };
        if cand.maps.iter().all(is_invertible) {
            return Some(cand);
        }
    }
    None
}

impl<F: Field> GradedHomWitness<F> {
    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(|m| if m.rows == 0 || m.cols == 0 { 0 } else { m.rank() }).collect()
    }

    pub fn injective_in(&self, d: usize) -> bool {
        let m = &self.maps[d];
        m.cols == 0 || m.rank() == m.cols
    }

    pub fn surjective_in(&self, d: usize) -> bool {
        let m = &self.maps[d];
        m.rows == 0 || m.rank() == m.rows
    }
}

impl<F: Field> FiniteModule<F> {
    pub fn ngens(&self) -> usize {
        self.actions.len()
    }

    pub fn element_action(&self, p: &NCPoly<F>) -> Matrix<F> {
        let mut out = zero_matrix(self.dim, self.dim);
        for (w, c) in p.terms() {
            let mut m = Matrix::identity(self.dim);
            for &g in w.0.iter().rev() {
                m = self.actions[g as usize].mul(&m);
            }
            out = out.add(&m.scale(c));
        }
        out
    }

    pub fn relation_failures(&self, pres: &QuadraticPresentation<F>) -> Vec<usize> {
        (0..pres.relations().len()).filter(|&r| !self.element_action(&pres.relations()[r]).is_zero()).collect()
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        let n = self.dim + o.dim;
        let actions = self
            .actions
            .iter()
            .zip(&o.actions)
            .map(|(a, b)| {
                let mut m = zero_matrix(n, n);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.data[i][j] = a.data[i][j].clone();
                    }
                }
                for i in 0..o.dim {
                    for j in 0..o.dim {
                        m.data[self.dim + i][self.dim + j] = b.data[i][j].clone();
                    }
                }
                m
            })
            .collect();
        Self { dim: n, actions, label: format!("{} ⊕ {}", self.label, o.label) }
    }

    pub fn twist(&self, map: &AlgebraMap<F>) -> Self {
        let ng = self.ngens();
        let actions = (0..ng)
            .map(|g| {
                let c = map.apply(&NCPoly::gen(g)).linear_coeffs(ng);
                linear_combination(&self.actions, &c, self.dim, self.dim)
            })
            .collect();
        Self { dim: self.dim, actions, label: format!("twist({})", self.label) }
    }

    /// Dimension of the submodule generated by `v`.
    pub fn generated_dim(&self, v: &[F]) -> usize {
        let mut ech = SparseEchelon::new();
        let mut queue = vec![v.to_vec()];
        while let Some(x) = queue.pop() {
            let sv = crate::exactfield::linalg::sparse_from_dense(&x);
            if sv.is_empty() || ech.insert(sv).is_none() {
                continue;
            }
            for a in &self.actions {
                queue.push(a.apply(&x));
            }
        }
        ech.rank()
    }

    /// Linear maps `T: self → o` with `T A_g = B_g T` for every generator.
    pub fn hom_space(&self, o: &Self) -> Vec<Matrix<F>> {
        let (n, m) = (self.dim, o.dim);
        let mut rows = Vec::new();
        for (a, b) in self.actions.iter().zip(&o.actions) {
            for r in 0..m {
                for c in 0..n {
                    let mut row = vec![F::zero(); m * n];
                    for t in 0..n {
                        row[r * n + t] = row[r * n + t].add(&a.data[t][c]);
                    }
                    for t in 0..m {
                        row[t * n + c] = row[t * n + c].sub(&b.data[r][t]);
                    }
                    rows.push(row);
                }
            }
        }
        Matrix::from_rows(rows)
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut t = zero_matrix(m, n);
                for r in 0..m {
                    for c in 0..n {
                        t.data[r][c] = v[r * n + c].clone();
                    }
                }
                t
            })
            .collect()
    }

    /// An invertible element of `hom_space(o)`, by seeded random combinations.
    pub fn find_isomorphism(&self, o: &Self, seed: u64) -> Option<Matrix<F>> {
        if self.dim != o.dim {
            return None;
        }
        let basis = self.hom_space(o);
        if basis.is_empty() {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for attempt in 0..16 {
            let coeffs: Vec<F> = (0..basis.len())
                .map(|k| if attempt == 0 { F::from_int((k == 0) as i64) } else { F::from_int(rng.gen_range(-5..=5)) })
                .collect();
            let t = linear_combination(&basis, &coeffs, o.dim, self.dim);
            if is_invertible(&t) {
                return Some(t);
            }
        }
        None
    }

    pub fn intertwines(&self, o: &Self, t: &Matrix<F>) -> bool {
        self.actions.iter().zip(&o.actions).all(|(a, b)| t.mul(a) == b.mul(t))
    }
}

/// Simplicity of a finite module on which `K` (generator `k_gen`) acts diagonally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub simple: bool,
    /// True when eigenvalues repeat and the verdict rests on sampled vectors.
    pub fallback: bool,
}

/// Every nonzero submodule contains a `K`-eigenvector, so with distinct
/// eigenvalues the module is simple iff each basis eigenvector generates it.
/// With repeated eigenvalues, seeded random eigenvectors are tried instead:
/// a proper generated submodule proves non-simplicity, otherwise the
/// verdict is flagged.
pub fn is_simple<F: Field>(v: &FiniteModule<F>, k_gen: usize, seed: u64) -> SimplicityReport {
    let k = &v.actions[k_gen];
    let diagonal = (0..v.dim).all(|i| (0..v.dim).all(|j| i == j || k.data[i][j].is_zero()));
    let unit = |i: usize| (0..v.dim).map(|j| if i == j { F::one() } else { F::zero() }).collect::<Vec<F>>();
    let eig: Vec<F> = (0..v.dim).map(|i| k.data[i][i].clone()).collect();
    let distinct = diagonal && (0..v.dim).all(|i| (0..i).all(|j| eig[i] != eig[j]));
    if distinct {
        let simple = (0..v.dim).all(|i| v.generated_dim(&unit(i)) == v.dim);
        return SimplicityReport { simple, fallback: false };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let vec: Vec<F> = if diagonal {
            let target = eig[rng.gen_range(0..v.dim)].clone();
            (0..v.dim).map(|i| if eig[i] == target { F::from_int(rng.gen_range(-5..=5)) } else { F::zero() }).collect()
        } else {
            (0..v.dim).map(|_| F::from_int(rng.gen_range(-5..=5))).collect()
        };
        if vec.iter().all(|x| x.is_zero()) {
            continue;
        }
        if v.generated_dim(&vec) < v.dim {
            return SimplicityReport { simple: false, fallback: true };
        }
    }
    SimplicityReport { simple: true, fallback: true }
}

/// `V(n,±)` on `E, F, K, K'`: `Kv_i = √±1·q^{n/2−i}v_i`, `K'v_i = ±√±1·q^{i−n/2}v_i`,
/// `Fv_i = [n−i]v_{i+1}`, `Ev_i = ±[i]v_{i−1}`, with `√q = u` and `√−1 = i`.
pub fn v_module<F: Field>(n: usize, sign: i8, ctx: &ParameterContext<F>) -> FiniteModule<F> {
    let dim = n + 1;
    let s = F::from_int(sign as i64);
    let root = ctx.sqrt_sign(sign);
    let mut e = zero_matrix(dim, dim);
    let mut f = zero_matrix(dim, dim);
    let mut k = zero_matrix(dim, dim);
    let mut kp = zero_matrix(dim, dim);
    let ni = n as i64;
    for i in 0..dim {
        let ii = i as i64;
        k.data[i][i] = root.mul(&ctx.u_pow(ni - 2 * ii));
        kp.data[i][i] = s.mul(&root).mul(&ctx.u_pow(2 * ii - ni));
        if i < n {
            f.data[i + 1][i] = quantum_integer(ni - ii, ctx);
        }
        if i > 0 {
            e.data[i - 1][i] = s.mul(&quantum_integer(ii, ctx));
        }
    }
    FiniteModule { dim, actions: vec![e, f, k, kp], label: format!("V({n},{})", if sign > 0 { "+" } else { "-" }) }
}

/// `V ⊗ C[z]` through degree `cutoff`: `a ∈ S₁` acts as `a` on `V` times `z`.
pub fn fat_point<F: Field>(v: &FiniteModule<F>, cutoff: usize) -> TruncatedGradedModule<F> {
    TruncatedGradedModule {
        cutoff,
        dims: vec![v.dim; cutoff + 1],
        actions: v.actions.iter().map(|a| vec![a.clone(); cutoff]).collect(),
        label: format!("{}⊗C[z]", v.label),
        words: None,
    }
}

pub fn fat_point_module<F: Field>(n: usize, sign: i8, cutoff: usize, ctx: &ParameterContext<F>) -> TruncatedGradedModule<F> {
    let mut m = fat_point(&v_module(n, sign, ctx), cutoff);
    m.label = format!("F({n},{})", if sign > 0 { "+" } else { "-" });
    m
}

/// The lift `ψ̃(m) = ψ(m) ⊗ z^d` of a module map `ψ: M → V` determined by
/// `ψ(1) = v` for a cyclic quotient `M`; returns the graded map into `V ⊗ C[z]`.
pub fn lift_to_fat_point<F: Field>(
    m: &TruncatedGradedModule<F>,
    v: &FiniteModule<F>,
    v0: &[F],
) -> Option<(TruncatedGradedModule<F>, GradedHomWitness<F>)> {
    let fat = fat_point(v, m.cutoff);
    let map = cyclic_map(m, &fat, 0, v0)?;
    Some((fat, map))
}

#[cfg(test)]
mod tests;
