use super::*;
use crate::catalog::{s_efkk, K, KP};
use crate::certificate::Status;
use crate::exactfield::GaussianRational as G;
use crate::projgeom::{point_on_c, ruling_line, ProjLine};

fn ctx() -> ParameterContext<G> {
    ParameterContext::specialized(G::from(2)).unwrap()
}

fn setup(n: usize) -> (QuadraticPresentation<G>, GradedAlgebra<G>, ParameterContext<G>) {
    let c = ctx();
    let pres = s_efkk(&c).unwrap();
    let alg = GradedAlgebra::new(&pres, n);
    (pres, alg, c)
}

fn g(n: i64) -> G {
    G::from(n)
}

#[test]
fn plane_line_module_has_linear_growth() {
    let (_, alg, _) = setup(6);
    let m = quotient_module(&alg, &[NCPoly::gen(K), NCPoly::gen(KP)], 6, "M_L").unwrap();
    assert_eq!(m.dims, vec![1, 2, 3, 4, 5, 6, 7]);
}

#[test]
fn isolated_point_gives_polynomial_ring() {
    let (pres, alg, c) = setup(6);
    let p = vec![g(0), g(0), g(1), g(1)];
    let m = point_quotient(&alg, &p, 6).unwrap();
    assert_eq!(m.dims, vec![1; 7]);
    let orbit = point_module(&pres, &p, 6).unwrap();
    let f0 = fat_point_module(0, 1, 6, &c);
    assert_eq!(orbit.actions, f0.actions);
    assert!(orbit.relation_failures(&pres).is_empty());
}

#[test]
fn orbit_and_quotient_point_modules_agree() {
    let (pres, alg, c) = setup(5);
    let p = point_on_c(&c, &g(2));
    let a = point_module(&pres, &p, 5).unwrap();
    let b = point_quotient(&alg, &p, 5).unwrap();
    let basis = hom_space(&b, &a, 0);
    assert!(find_isomorphism(&basis, 7, 8).is_some());
}

#[test]
fn point_off_the_scheme_has_no_successor() {
    let (pres, _, _) = setup(2);
    let p = vec![g(1), g(2), g(3), g(5)];
    assert!(matches!(point_module(&pres, &p, 3), Err(ModuleError::AmbiguousSuccessor(0, 0))));
}

#[test]
fn non_secant_plane_drops_below_line_growth() {
    let (_, alg, _) = setup(4);
    let w = [NCPoly::linear(&[g(1), g(2), g(0), g(1)]), NCPoly::linear(&[g(0), g(1), g(3), g(-1)])];
    let m = quotient_module(&alg, &w, 4, "W").unwrap();
    assert!((0..=4).any(|d| m.dims[d] < d + 1), "{:?}", m.dims);
}

#[test]
fn hom_from_line_to_point_detects_incidence() {
    let (_, alg, c) = setup(4);
    let line = ruling_line(&g(3), Some(&g(1)), 2, &c);
    let m = line_module(&alg, &line, 4).unwrap();
    let [a, b] = line.points();
    let on: Vec<G> = a.iter().zip(&b).map(|(x, y)| x.add(&y.mul(&g(2)))).collect();
    let pm = point_quotient(&alg, &on, 4).unwrap();
    assert!(!hom_space(&m, &pm, 0).is_empty());
    let off = vec![g(0), g(0), g(1), g(1)];
    assert!(!line.contains_point(&off));
    let pm = point_quotient(&alg, &off, 4).unwrap();
    assert!(hom_space(&m, &pm, 0).is_empty());
    assert!(!hom_space(&m, &m, 0).is_empty());
}

#[test]
fn v_modules_are_simple_and_annihilated() {
    let (pres, _, c) = setup(2);
    for (n, s) in [(0usize, 1i8), (1, 1), (3, -1), (4, 1), (0, -1)] {
        let cert = v_module_certificate(&pres, &c, n, s, 1);
        assert!(cert.passed(), "{n} {s}: {:?}", cert.witness);
    }
}

#[test]
fn commutator_on_two_dimensional_module() {
    let c = ctx();
    let v = v_module(1, 1, &c);
    let ef = v.actions[0].mul(&v.actions[1]).sub(&v.actions[1].mul(&v.actions[0]));
    let k2 = v.actions[K].mul(&v.actions[K]).sub(&v.actions[KP].mul(&v.actions[KP]));
    let rhs = k2.scale(&c.q_minus_qinv().inv().unwrap());
    // [E,F]v₀ = [1]v₀ = v₀, and (K²−K'²)/(q−q⁻¹) gives the same on v₀.
    assert_eq!(ef.column(0), vec![g(1), g(0)]);
    assert_eq!(rhs.column(0), vec![g(1), g(0)]);
}

#[test]
fn doubled_module_is_not_simple() {
    let c = ctx();
    let v = v_module(1, 1, &c);
    let r = is_simple(&v.direct_sum(&v), K, 3);
    assert_eq!(r, SimplicityReport { simple: false, fallback: true });
}

#[test]
fn fat_points_have_expected_invariants() {
    let (pres, _, c) = setup(2);
    for n in 0..=3 {
        let cert = fat_point_certificate(&pres, &c, n, 4, 5).unwrap();
        assert!(cert.passed(), "{n}: {:?}", cert.witness);
    }
}

#[test]
fn twisting_v_by_theta_and_scaling() {
    let c = ctx();
    for n in 0..=3 {
        assert!(twist_intertwiner_certificate(&c, n).unwrap().passed());
    }
}

#[test]
fn incidence_sequences_hold() {
    let (_, alg, c) = setup(5);
    for s in incidence_samples(&c) {
        let cert = incidence_certificate(&alg, &c, &s, 5, 11).unwrap();
        assert!(cert.passed(), "{}: {:#?}", s.name, cert.witness);
    }
}

#[test]
fn fat_point_resolutions() {
    let (_, alg, c) = setup(6);
    for (n, sign, s) in [(0usize, 1i8, Some(g(0))), (2, 1, Some(g(1))), (1, -1, None), (1, 1, Some(g(2)))] {
        let cert = fat_res_certificate(&alg, &c, n, sign, s.as_ref(), 6, 3).unwrap();
        assert!(cert.passed(), "{n} {sign}: {:#?}", cert.witness);
    }
}

#[test]
fn kernel_line_has_no_fat_quotient() {
    let (_, alg, c) = setup(3);
    let cert = no_fat_quotient_certificate(&alg, &c, 1, 1, Some(&g(1)), 3, 3).unwrap();
    assert!(cert.passed(), "{:#?}", cert.witness);
}

#[test]
fn omega_annihilates_one_ruling() {
    let (_, alg, c) = setup(2);
    let cert = omega_line_certificate(&alg, &c, &g(3), &g(1));
    assert!(cert.passed(), "{:#?}", cert.witness);
    assert_eq!(cert.witness["statement_line_member"], serde_json::json!(false));
    assert!(omega_zero_certificate(&alg, &c).passed());
}

#[test]
fn lift_factors_through_fat_point() {
    let (_, alg, c) = setup(4);
    assert!(lift_certificate(&alg, &c, 2, 1, &g(1), 4).unwrap().passed());
}

#[test]
fn fat_point_localizes_to_simple() {
    let c = ctx();
    for sign in [1i8, -1] {
        let f = fat_point_module(2, sign, 4, &c);
        let loc = localize_degree0(&f, 1, &c).unwrap();
        assert!(uq_relation_failures(&loc, &c).is_empty());
        let k = &loc.actions[2];
        let expect: Vec<G> = (0..3).map(|i| G::from(sign as i64).mul(&c.q_pow(2 - 2 * i))).collect();
        assert_eq!((0..3).map(|i| k.data[i][i].clone()).collect::<Vec<_>>(), expect);
    }
}

#[test]
fn verma_line_localizes_to_highest_weight() {
    let (_, alg, c) = setup(4);
    let lam = g(3);
    let line = ProjLine::from_forms(vec![vec![g(1), g(0), g(0), g(0)], vec![g(0), g(0), g(1), lam.neg()]]).unwrap();
    let m = line_module(&alg, &line, 4).unwrap();
    let w = window_operators(&m, 0, &c).unwrap();
    let one = [g(1)];
    assert!(w.ops[0].apply(&one).iter().all(|x| x.is_zero()));
    let iota = w.iota.apply(&one);
    assert_eq!(w.ops[2].apply(&one), iota.iter().map(|x| x.mul(&lam)).collect::<Vec<_>>());
}

#[test]
fn isolated_points_localize_to_characters() {
    let (_, alg, c) = setup(3);
    for s in [1i64, -1] {
        let m = point_quotient(&alg, &[g(0), g(0), g(1), g(s)], 3).unwrap();
        let loc = localize_degree0(&m, 0, &c).unwrap();
        assert_eq!(loc.dim, 1);
        assert_eq!(loc.actions[2].data[0][0], g(s));
        assert!(loc.actions[0].is_zero() && loc.actions[1].is_zero());
    }
}

#[test]
fn kernel_of_status_is_reported() {
    let (_, alg, c) = setup(4);
    let s = &incidence_samples(&c)[3];
    let cert = incidence_certificate(&alg, &c, s, 4, 1).unwrap();
    assert_eq!(cert.status, Status::Pass);
    assert!(cert.witness.contains_key("case3.X'K' = qK'X"));
}

#[test]
fn partner_point_carries_the_opposite_sign() {
    let c = ctx();
    for (n, sign) in [(0usize, 1i8), (1, 1), (2, 1), (0, -1), (1, -1), (2, -1)] {
        let (_, d) = fat_kernel_line(n, sign, Some(&g(1)), &c);
        assert_eq!(d["partner_as_printed"], serde_json::json!(false));
        assert_eq!(d["partner_with_opposite_sign"], serde_json::json!(true));
    }
    // The recurrence with the leading sign ± leaves a nonzero image.
    let v = v_module(2, 1, &c);
    let forms = fat_line_forms(2, 1, Some(&g(1)), &c);
    let alt = fat_line_vector_opposite_sign(2, 1, Some(&g(1)), &c);
    assert!(forms.iter().any(|f| v.element_action(f).apply(&alt).iter().any(|x| !x.is_zero())));
    assert_eq!(fat_line_vector(2, 1, Some(&g(1)), &c), vec![g(1), G::rational(-17, 16), G::rational(1, 16)]);
}
