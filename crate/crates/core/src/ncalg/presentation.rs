use super::{AlgebraError, GradedAlgebra, NCPoly, Word};
use crate::exactfield::linalg::{Matrix, SparseEchelon, SparseVec, TrackedEchelon};
use crate::exactfield::Field;

/// Membership certificates are produced by explicit elimination over the
/// spanning set up to this degree; above it, the normal form is the witness.
pub const CERTIFICATE_MAX_DEGREE: usize = 4;

/// Generators and a linearly independent space of homogeneous quadratic relations.
#[derive(Clone, Debug)]
pub struct QuadraticPresentation<F: Field> {
    names: Vec<String>,
    relations: Vec<NCPoly<F>>,
}

/// The outcome of an ideal-membership test.
#[derive(Clone, Debug)]
pub struct Membership<F: Field> {
    pub member: bool,
    pub degree: usize,
    /// `(coefficient, left word, relation index, right word)` summands.
    pub certificate: Option<Vec<(F, Word, usize, Word)>>,
    /// Normal-form coordinates of the input; zero exactly for members.
    pub residue: SparseVec<F>,
}

/// A complement basis of the ideal inside the words of one degree.
#[derive(Clone, Debug)]
pub struct GradedBasis<F: Field> {
    pub degree: usize,
    pub representative_words: Vec<Word>,
    pub ideal_subspace: Matrix<F>,
}

impl<F: Field> QuadraticPresentation<F> {
    pub fn new(names: Vec<String>, relations: Vec<NCPoly<F>>) -> Result<Self, AlgebraError> {
        let ngens = names.len();
        if ngens == 0 || ngens > 200 {
            return Err(AlgebraError::Shape(format!("{ngens} generators")));
        }
        let mut ech = SparseEchelon::new();
        for (k, r) in relations.iter().enumerate() {
            if r.homogeneous_degree() != Some(2) {
                return Err(AlgebraError::NotQuadratic(k));
            }
            if r.terms().any(|(w, _)| w.0.iter().any(|&g| g as usize >= ngens)) {
                return Err(AlgebraError::Shape(format!("relation {k} uses an unknown generator")));
            }
            if ech.insert(word_vector(r, ngens)).is_none() {
                return Err(AlgebraError::DependentRelations(k));
            }
        }
        Ok(Self { names, relations })
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[NCPoly<F>] {
        &self.relations
    }

    pub fn gen(&self, name: &str) -> NCPoly<F> {
        let g = self.names.iter().position(|n| n == name).unwrap_or_else(|| panic!("no generator {name}"));
        NCPoly::gen(g)
    }

    pub fn render(&self, p: &NCPoly<F>) -> String {
        p.render(&self.names)
    }

    /// Echelon basis of the degree-2 relation space.
    fn relation_space(&self) -> SparseEchelon<F> {
        let mut ech = SparseEchelon::new();
        for r in &self.relations {
            ech.insert(word_vector(r, self.ngens()));
        }
        ech
    }

    /// True iff both presentations have the same generators count and the
    /// same relation space.
    pub fn same_relation_space(&self, o: &Self) -> bool {
        if self.ngens() != o.ngens() || self.relations.len() != o.relations.len() {
            return false;
        }
        let mine = self.relation_space();
        o.relations.iter().all(|r| mine.contains(word_vector(r, self.ngens())))
    }

    /// Whether `p` (homogeneous of degree 2) lies in the span of the relations.
    pub fn in_relation_space(&self, p: &NCPoly<F>) -> bool {
        self.relation_space().contains(word_vector(p, self.ngens()))
    }

    fn spanning_set(&self, n: usize) -> Vec<(Word, usize, Word, SparseVec<F>)> {
        let ngens = self.ngens();
        let mut out = Vec::new();
        for k in 0..=(n - 2) {
            let right_len = n - 2 - k;
            for lr in 0..ngens.pow(k as u32) {
                let left = Word::from_rank(lr, k, ngens);
                for rr in 0..ngens.pow(right_len as u32) {
                    let right = Word::from_rank(rr, right_len, ngens);
                    for (ri, r) in self.relations.iter().enumerate() {
                        let p = NCPoly::monomial(left.clone(), F::one())
                            .mul(r)
                            .mul(&NCPoly::monomial(right.clone(), F::one()));
                        out.push((left.clone(), ri, right.clone(), word_vector(&p, ngens)));
                    }
                }
            }
        }
        out
    }

    /// Row-space basis of the degree-`n` ideal component, in word coordinates
    /// ordered by [`Word::rank_in`]. Dense in the word space, so meant for small `n`.
    pub fn ideal_component(&self, n: usize) -> Result<Matrix<F>, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::Shape("ideal components start in degree 2".into()));
        }
        let ngens = self.ngens();
        let mut ech = SparseEchelon::new();
        for (_, _, _, v) in self.spanning_set(n) {
            ech.insert(v);
        }
        let width = ngens.pow(n as u32);
        let rows = ech
            .pivots()
            .map(|p| {
                let mut row = vec![F::zero(); width];
                for (j, x) in ech.pivot_row(p).expect("pivot row") {
                    row[*j] = x.clone();
                }
                row
            })
            .collect::<Vec<_>>();
        Ok(if rows.is_empty() { Matrix::zeros(0, width) } else { Matrix::from_rows(rows) })
    }

    /// The ideal component together with its complement of representative words.
    pub fn graded_basis(&self, n: usize) -> Result<GradedBasis<F>, AlgebraError> {
        let ngens = self.ngens();
        let width = ngens.pow(n as u32);
        let ideal = if n < 2 { Matrix::zeros(0, width) } else { self.ideal_component(n)? };
        let pivots: Vec<usize> = (0..ideal.rows)
            .map(|r| (0..width).find(|&c| !ideal.data[r][c].is_zero()).expect("nonzero row"))
            .collect();
        let representative_words = (0..width)
            .filter(|c| !pivots.contains(c))
            .map(|c| Word::from_rank(c, n, ngens))
            .collect();
        Ok(GradedBasis { degree: n, representative_words, ideal_subspace: ideal })
    }

    /// Dimension of the degree-`n` component of the quotient algebra.
    pub fn graded_dim(&self, n: usize) -> usize {
        GradedAlgebra::new(self, n).dim(n)
    }

    /// Hilbert function in degrees `0..=n`.
    pub fn hilbert_function(&self, n: usize) -> Vec<usize> {
        let g = GradedAlgebra::new(self, n);
        (0..=n).map(|k| g.dim(k)).collect()
    }

    /// Test whether a homogeneous `p` lies in the two-sided ideal of the relations.
    pub fn membership(&self, p: &NCPoly<F>) -> Result<Membership<F>, AlgebraError> {
        let Some(n) = p.homogeneous_degree() else {
            if p.is_zero() {
                return Ok(Membership { member: true, degree: 0, certificate: Some(vec![]), residue: SparseVec::new() });
            }
            return Err(AlgebraError::NotHomogeneous);
        };
        let ngens = self.ngens();
        if n < 2 {
            let residue = word_vector(p, ngens);
            return Ok(Membership { member: residue.is_empty(), degree: n, certificate: Some(vec![]), residue });
        }
        if n <= CERTIFICATE_MAX_DEGREE {
            let span = self.spanning_set(n);
            let mut ech = TrackedEchelon::new();
            for (k, (_, _, _, v)) in span.iter().enumerate() {
                ech.insert(v.clone(), k);
            }
            let target = word_vector(p, ngens);
            return Ok(match ech.express(target.clone()) {
                Some(coeffs) => {
                    let cert = coeffs
                        .into_iter()
                        .map(|(k, c)| (c, span[k].0.clone(), span[k].1, span[k].2.clone()))
                        .collect();
                    Membership { member: true, degree: n, certificate: Some(cert), residue: SparseVec::new() }
                }
                None => {
                    let g = GradedAlgebra::new(self, n);
                    Membership { member: false, degree: n, certificate: None, residue: g.normal_form(p) }
                }
            });
        }
        let g = GradedAlgebra::new(self, n);
        let residue = g.normal_form(p);
        Ok(Membership { member: residue.is_empty(), degree: n, certificate: None, residue })
    }

    pub fn is_in_ideal(&self, p: &NCPoly<F>) -> Result<bool, AlgebraError> {
        Ok(self.membership(p)?.member)
    }

    /// Re-expand a membership certificate.
    pub fn expand_certificate(&self, cert: &[(F, Word, usize, Word)]) -> NCPoly<F> {
        let mut acc = NCPoly::zero();
        for (c, l, r, rt) in cert {
            let term = NCPoly::monomial(l.clone(), c.clone())
                .mul(&self.relations[*r])
                .mul(&NCPoly::monomial(rt.clone(), F::one()));
            acc = acc.add(&term);
        }
        acc
    }

    /// True iff `[p, g]` is in the ideal for every generator `g`.
    pub fn is_central(&self, p: &NCPoly<F>) -> Result<bool, AlgebraError> {
        for g in 0..self.ngens() {
            let c = NCPoly::commutator(p, &NCPoly::gen(g));
            if !self.is_in_ideal(&c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The presentation with generators renamed and relations unchanged.
    pub fn with_names(&self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.ngens());
        Self { names, relations: self.relations.clone() }
    }

    /// The quotient by the ideal generated by some of the generators,
    /// presented on the remaining ones.
    pub fn quotient_by_generators(&self, kill: &[usize]) -> Result<Self, AlgebraError> {
        let keep: Vec<usize> = (0..self.ngens()).filter(|g| !kill.contains(g)).collect();
        let images: Vec<NCPoly<F>> = (0..self.ngens())
            .map(|g| match keep.iter().position(|&k| k == g) {
                Some(j) => NCPoly::gen(j),
                None => NCPoly::zero(),
            })
            .collect();
        let mut ech = SparseEchelon::new();
        let mut rels = Vec::new();
        for r in &self.relations {
            let img = r.substitute(&images);
            if !img.is_zero() && ech.insert(word_vector(&img, keep.len())).is_some() {
                rels.push(img);
            }
        }
        Self::new(keep.iter().map(|&g| self.names[g].clone()).collect(), rels)
    }

    /// Append further degree-2 relations.
    pub fn with_extra_relations(&self, extra: &[NCPoly<F>]) -> Result<Self, AlgebraError> {
        let mut rels = self.relations.clone();
        rels.extend(extra.iter().cloned());
        Self::new(self.names.clone(), rels)
    }
}

/// Word-space coordinates of a homogeneous polynomial, indexed by [`Word::rank_in`].
pub fn word_vector<F: Field>(p: &NCPoly<F>, ngens: usize) -> SparseVec<F> {
    p.terms().map(|(w, c)| (w.rank_in(ngens), c.clone())).collect()
}
