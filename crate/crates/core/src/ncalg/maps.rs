use super::{AlgebraError, NCPoly, QuadraticPresentation};
use crate::exactfield::Field;

/// A graded algebra map given by linear images of the source generators.
#[derive(Clone, Debug)]
pub struct AlgebraMap<F: Field> {
    pub source: QuadraticPresentation<F>,
    pub target: QuadraticPresentation<F>,
    pub images: Vec<NCPoly<F>>,
}

/// Which source relations fail to land in the target ideal.
#[derive(Clone, Debug)]
pub struct HomomorphismReport {
    pub holds: bool,
    pub failing_relations: Vec<usize>,
}

impl<F: Field> AlgebraMap<F> {
    pub fn new(
        source: QuadraticPresentation<F>,
        target: QuadraticPresentation<F>,
        images: Vec<NCPoly<F>>,
    ) -> Result<Self, AlgebraError> {
        if images.len() != source.ngens() {
            return Err(AlgebraError::Shape(format!(
                "{} images for {} generators",
                images.len(),
                source.ngens()
            )));
        }
        for (g, im) in images.iter().enumerate() {
            if !im.is_zero() && im.homogeneous_degree() != Some(1) {
                return Err(AlgebraError::Shape(format!("image of generator {g} is not linear")));
            }
            if im.terms().any(|(w, _)| w.0.iter().any(|&h| h as usize >= target.ngens())) {
                return Err(AlgebraError::Shape(format!("image of generator {g} uses an unknown target generator")));
            }
        }
        Ok(Self { source, target, images })
    }

    /// Apply the map to a source element.
    pub fn apply(&self, p: &NCPoly<F>) -> NCPoly<F> {
        p.substitute(&self.images)
    }

    /// Check that every source relation maps into the target ideal.
    pub fn check_homomorphism(&self) -> Result<HomomorphismReport, AlgebraError> {
        let mut failing = Vec::new();
        for (k, r) in self.source.relations().iter().enumerate() {
            if !self.target.is_in_ideal(&self.apply(r))? {
                failing.push(k);
            }
        }
        Ok(HomomorphismReport { holds: failing.is_empty(), failing_relations: failing })
    }

    /// Matrix of the map on degree-1 components: column `g` holds the image of `g`.
    pub fn linear_matrix(&self) -> crate::exactfield::linalg::Matrix<F> {
        let mut m = crate::exactfield::linalg::Matrix::zeros(self.target.ngens(), self.source.ngens());
        for (g, im) in self.images.iter().enumerate() {
            for (h, c) in im.linear_coeffs(self.target.ngens()).into_iter().enumerate() {
                m.data[h][g] = c;
            }
        }
        m
    }

    /// True iff the map is bijective on generators.
    pub fn is_invertible_on_generators(&self) -> bool {
        let m = self.linear_matrix();
        m.rows == m.cols && m.rank() == m.rows
    }
}

/// The Zhang twist by the diagonal automorphism `g ↦ λ_g g`.
///
/// The twisted relation space is `{(φ⊗id)⁻¹ r}`: a relation `Σ c_ab ab`
/// becomes `Σ c_ab λ_a⁻¹ ab`.
pub fn zhang_twist<F: Field>(
    pres: &QuadraticPresentation<F>,
    diag: &[F],
) -> Result<QuadraticPresentation<F>, AlgebraError> {
    if diag.len() != pres.ngens() {
        return Err(AlgebraError::Shape("twist needs one scalar per generator".into()));
    }
    if diag.iter().any(|l| l.is_zero()) {
        return Err(AlgebraError::NotAutomorphism("zero diagonal entry".into()));
    }
    let images: Vec<NCPoly<F>> = diag.iter().enumerate().map(|(g, l)| NCPoly::gen(g).scale(l)).collect();
    for (k, r) in pres.relations().iter().enumerate() {
        if !pres.in_relation_space(&r.substitute(&images)) {
            return Err(AlgebraError::NotAutomorphism(format!("relation {k} is not preserved")));
        }
    }
    let inv: Vec<F> = diag.iter().map(|l| l.inv().expect("nonzero")).collect();
    let rels = pres
        .relations()
        .iter()
        .map(|r| NCPoly::from_terms(r.terms().map(|(w, c)| (w.clone(), c.mul(&inv[w.0[0] as usize])))))
        .collect();
    QuadraticPresentation::new(pres.names().to_vec(), rels)
}

/// Outcome of the standard-form test `f = Mx`, `xᵀM = (Qf)ᵀ`.
#[derive(Clone, Debug)]
pub struct StandardFormReport {
    pub f_equals_mx: bool,
    pub xt_m_equals_qf: bool,
    /// Rendered `(Mx)_i − f_i` and `(xᵀM)_j − (Qf)_j`, all zero on success.
    pub defects: Vec<String>,
}

impl StandardFormReport {
    pub fn holds(&self) -> bool {
        self.f_equals_mx && self.xt_m_equals_qf
    }
}

/// Check that the relations `f` of a presentation are in standard form with
/// respect to the matrix `m` of linear forms, the scalar matrix `q` and the
/// generator column `x`. Both identities are checked in the free algebra.
pub fn standard_form_check<F: Field>(
    pres: &QuadraticPresentation<F>,
    m: &[Vec<NCPoly<F>>],
    q: &[Vec<F>],
    x: &[NCPoly<F>],
) -> Result<StandardFormReport, AlgebraError> {
    let f = pres.relations();
    let n = f.len();
    if m.len() != n || m.iter().any(|r| r.len() != x.len()) || q.len() != n || x.len() != n {
        return Err(AlgebraError::Shape("standard form needs square data matching the relations".into()));
    }
    let mut defects = Vec::new();
    let mut ok1 = true;
    for i in 0..n {
        let mx = (0..n).fold(NCPoly::zero(), |acc, j| acc.add(&m[i][j].mul(&x[j])));
        let d = mx.sub(&f[i]);
        if !d.is_zero() {
            ok1 = false;
        }
        defects.push(pres.render(&d));
    }
    let mut ok2 = true;
    for j in 0..n {
        let xm = (0..n).fold(NCPoly::zero(), |acc, i| acc.add(&x[i].mul(&m[i][j])));
        let qf = (0..n).fold(NCPoly::zero(), |acc, k| acc.add(&f[k].scale(&q[j][k])));
        let d = xm.sub(&qf);
        if !d.is_zero() {
            ok2 = false;
        }
        defects.push(pres.render(&d));
    }
    Ok(StandardFormReport { f_equals_mx: ok1, xt_m_equals_qf: ok2, defects })
}
