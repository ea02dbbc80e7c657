//! Free algebras and quadratic presentations: graded components, ideal
//! membership, centrality, homomorphisms, Zhang twists and standard form.

mod graded;
mod maps;
mod poly;
mod presentation;

pub use graded::GradedAlgebra;
pub use maps::{standard_form_check, zhang_twist, AlgebraMap, HomomorphismReport, StandardFormReport};
pub use poly::{NCPoly, Word};
pub use presentation::{word_vector, GradedBasis, Membership, QuadraticPresentation, CERTIFICATE_MAX_DEGREE};

use crate::exactfield::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("relation {0} is not homogeneous of degree 2")]
    NotQuadratic(usize),
    #[error("relation {0} is a linear combination of the earlier ones")]
    DependentRelations(usize),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{Field, GaussianRational as G};

    type P = NCPoly<G>;

    fn commutative(n: usize) -> QuadraticPresentation<G> {
        let mut rels = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                rels.push(P::commutator(&P::gen(a), &P::gen(b)));
            }
        }
        let names = (0..n).map(|k| format!("x{k}")).collect();
        QuadraticPresentation::new(names, rels).unwrap()
    }

    #[test]
    fn polynomial_ring_dimensions() {
        let c2 = commutative(2);
        assert_eq!(c2.ideal_component(3).unwrap().rows, 4);
        assert_eq!(c2.hilbert_function(5), vec![1, 2, 3, 4, 5, 6]);
        let c3 = commutative(3);
        assert_eq!(c3.hilbert_function(6), vec![1, 3, 6, 10, 15, 21, 28]);
    }

    #[test]
    fn dependent_relations_rejected() {
        let x = P::gen(0);
        let y = P::gen(1);
        let r = P::commutator(&x, &y);
        let res = QuadraticPresentation::new(vec!["x".into(), "y".into()], vec![r.clone(), r.scale(&G::from(2))]);
        assert_eq!(res.unwrap_err(), AlgebraError::DependentRelations(1));
        let bad = QuadraticPresentation::new(vec!["x".into(), "y".into()], vec![x.clone()]);
        assert_eq!(bad.unwrap_err(), AlgebraError::NotQuadratic(0));
    }

    #[test]
    fn certificates_reexpand() {
        let c3 = commutative(3);
        let x = P::gen(0);
        let y = P::gen(1);
        let z = P::gen(2);
        let p = x.mul(&y).mul(&z).sub(&z.mul(&y).mul(&x));
        let m = c3.membership(&p).unwrap();
        assert!(m.member);
        assert_eq!(c3.expand_certificate(m.certificate.as_ref().unwrap()), p);
        let q = x.mul(&y).mul(&z);
        assert!(!c3.is_in_ideal(&q).unwrap());
    }

    #[test]
    fn graded_and_dense_complements_agree() {
        let x = P::gen(0);
        let y = P::gen(1);
        let z = P::gen(2);
        // A skew polynomial ring with a non-binomial relation.
        let rels = vec![
            x.mul(&y).sub(&y.mul(&x).scale(&G::from(2))),
            y.mul(&z).sub(&z.mul(&y)).sub(&x.mul(&x)),
            z.mul(&x).sub(&x.mul(&z).scale(&G::from(3))),
        ];
        let pres = QuadraticPresentation::new(vec!["x".into(), "y".into(), "z".into()], rels).unwrap();
        let g = GradedAlgebra::new(&pres, 4);
        for n in 2..=4 {
            let gb = pres.graded_basis(n).unwrap();
            assert_eq!(gb.representative_words, g.basis(n).to_vec(), "degree {n}");
            assert_eq!(gb.representative_words.len() + gb.ideal_subspace.rows, 3usize.pow(n as u32));
        }
    }

    #[test]
    fn centrality_in_commutative_ring() {
        let c2 = commutative(2);
        assert!(c2.is_central(&P::gen(0).mul(&P::gen(1))).unwrap());
        let free = QuadraticPresentation::new(vec!["x".into(), "y".into()], vec![P::gen(0).mul(&P::gen(0))]).unwrap();
        assert!(!free.is_central(&P::gen(1)).unwrap());
    }

    #[test]
    fn twist_by_identity_is_trivial() {
        let c3 = commutative(3);
        let t = zhang_twist(&c3, &[G::one(), G::one(), G::one()]).unwrap();
        assert!(t.same_relation_space(&c3));
        let t2 = zhang_twist(&c3, &[G::from(2), G::from(3), G::one()]).unwrap();
        assert_eq!(t2.hilbert_function(5), c3.hilbert_function(5));
    }

    #[test]
    fn commutative_standard_form() {
        let x: Vec<P> = (0..3).map(P::gen).collect();
        // f = (zy − yz, xz − zx, yx − xy) = M·(x, y, z) with M the cross-product matrix.
        let f = vec![
            P::commutator(&x[2], &x[1]),
            P::commutator(&x[0], &x[2]),
            P::commutator(&x[1], &x[0]),
        ];
        let pres = QuadraticPresentation::new(vec!["x".into(), "y".into(), "z".into()], f).unwrap();
        let z = P::zero();
        let m = vec![
            vec![z.clone(), x[2].clone(), x[1].neg()],
            vec![x[2].neg(), z.clone(), x[0].clone()],
            vec![x[1].clone(), x[0].neg(), z.clone()],
        ];
        let id = vec![
            vec![G::one(), G::zero(), G::zero()],
            vec![G::zero(), G::one(), G::zero()],
            vec![G::zero(), G::zero(), G::one()],
        ];
        assert!(standard_form_check(&pres, &m, &id, &x).unwrap().holds());
        let wrong = vec![
            vec![G::from(2), G::zero(), G::zero()],
            vec![G::zero(), G::one(), G::zero()],
            vec![G::zero(), G::zero(), G::one()],
        ];
        assert!(!standard_form_check(&pres, &m, &wrong, &x).unwrap().holds());
    }
}
