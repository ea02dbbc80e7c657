use p3cert::catalog::{self, omega, Lambda};
use p3cert::exactfield::{Field, GaussianRational as G, ParameterContext};
use p3cert::ncalg::{GradedAlgebra, Word};
use p3cert::uq::{casimir_scalar, Letter, Uq, UqElement};
use proptest::prelude::*;

fn ctx() -> ParameterContext<G> {
    ParameterContext::specialized(G::from(2)).unwrap()
}

fn gauss() -> impl Strategy<Value = G> {
    (-9i64..=9, 1i64..=6, -9i64..=9, 1i64..=6).prop_map(|(a, b, c, d)| G::rational(a, b).add(&G::rational(c, d).mul(&G::i())))
}

fn letters(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(prop::sample::select(vec![Letter::E, Letter::F, Letter::K, Letter::KInv]), 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gaussian_field_axioms(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), G::one());
        }
    }

    #[test]
    fn pbw_product_is_associative_on_words(x in letters(4), y in letters(4), z in letters(3)) {
        let c = ctx();
        let uq = Uq::new(&c);
        let (a, b, d) = (uq.normal_form(&x), uq.normal_form(&y), uq.normal_form(&z));
        prop_assert_eq!(uq.mul(&uq.mul(&a, &b), &d), uq.mul(&a, &uq.mul(&b, &d)));
        let joined: Vec<Letter> = x.iter().chain(&y).copied().collect();
        prop_assert_eq!(uq.normal_form(&joined), uq.mul(&a, &b));
    }

    #[test]
    fn casimir_commutes_with_words(x in letters(4)) {
        let c = ctx();
        let uq = Uq::new(&c);
        prop_assert!(uq.commutator(&uq.casimir(), &uq.normal_form(&x)).is_zero());
    }

    #[test]
    fn casimir_scalar_is_partner_invariant(n in 1i64..=9, d in 1i64..=9, neg in any::<bool>()) {
        let c = ctx();
        let l = G::rational(if neg { -n } else { n }, d);
        let partner = c.q.pow(-2).unwrap().mul(&l.inv().unwrap());
        prop_assert_eq!(casimir_scalar(&l, &c), casimir_scalar(&partner, &c));
    }

    #[test]
    fn omega_is_central_for_random_lambda(l in gauss()) {
        prop_assume!(!l.is_zero());
        let c = ctx();
        let s = catalog::s_efkk(&c).unwrap();
        prop_assert!(s.is_central(&omega(Lambda::Finite(l), &c).element).unwrap());
    }

    #[test]
    fn normal_forms_respect_multiplication(x in prop::collection::vec(0u8..4, 0..=2), y in prop::collection::vec(0u8..4, 0..=2)) {
        let c = ctx();
        let alg = GradedAlgebra::new(&catalog::s_efkk(&c).unwrap(), 4);
        let joined = Word(x.iter().chain(&y).copied().collect());
        let (a, b) = (alg.normal_form_word(&Word(x.clone())), alg.normal_form_word(&Word(y.clone())));
        prop_assert_eq!(alg.normal_form_word(&joined), alg.mul(x.len(), &a, y.len(), &b));
    }
}

#[test]
fn scalar_on_the_verma_module_of_q() {
    let c = ctx();
    assert_eq!(casimir_scalar(&c.q, &c), G::rational(257, 225));
    assert!(UqElement::<G>::one().sub(&UqElement::one()).is_zero());
}
