//! The certificate registry: every check the engine knows, how to run it,
//! and the JSON report built from a run.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::catalog::{self, omega, Lambda, E, K, KP};
use crate::certificate::{Certificate, Status};
use crate::degeneration::{self, SklyaninParams};
use crate::exactfield::{Field, GaussianRational as G, Mode, ParamSummary, ParameterContext, RationalFunction as R};
use crate::gmod;
use crate::ncalg::{standard_form_check, zhang_twist, GradedAlgebra, NCPoly};
use crate::projgeom::{self, point_on_c, point_on_cp, ruling_line, secant_test, ProjLine};
use crate::ptscheme;
use crate::uq;

pub const SCHEMA_VERSION: u32 = 1;

/// Which subcommand views a check appears in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Lens {
    Hilbert,
    Algebra,
    PointScheme,
    Sigma,
    Lines,
    Incidence,
    Uq,
    Degenerate,
}

impl Lens {
    pub fn name(self) -> &'static str {
        match self {
            Lens::Hilbert => "hilbert",
            Lens::Algebra => "algebra",
            Lens::PointScheme => "pointscheme",
            Lens::Sigma => "sigma",
            Lens::Lines => "lines",
            Lens::Incidence => "incidence",
            Lens::Uq => "uq",
            Lens::Degenerate => "degenerate",
        }
    }
}

/// Shared inputs for one run.
pub struct Env {
    pub mode: Mode,
    pub ctx: ParameterContext<G>,
    /// Same `u`, coefficients in rational functions, for identities in a free variable.
    pub rctx: ParameterContext<R>,
    pub sym: ParameterContext<R>,
    pub alg: GradedAlgebra<G>,
    pub master_seed: u64,
    /// Cutoff for incidence and resolution checks; never above the algebra's degree.
    pub line_cutoff: usize,
}

impl Env {
    pub fn new(mode: Mode, u: G, master_seed: u64, degree: usize) -> Result<Self, String> {
        let ctx = ParameterContext::specialized(u.clone()).map_err(|e| e.to_string())?;
        let rctx = ParameterContext::specialized(u).map_err(|e| e.to_string())?;
        let alg = GradedAlgebra::new(&catalog::s_efkk(&ctx).map_err(|e| e.to_string())?, degree);
        Ok(Self { mode, ctx, rctx, sym: ParameterContext::symbolic(), alg, master_seed, line_cutoff: degree.min(6) })
    }

    pub fn with_line_cutoff(mut self, n: usize) -> Self {
        self.line_cutoff = n.min(self.alg.max_degree());
        self
    }

    /// The coefficient context the geometry checks run over in this mode.
    fn geometry_ctx(&self) -> &ParameterContext<R> {
        match self.mode {
            Mode::Symbolic => &self.sym,
            Mode::Specialized => &self.rctx,
        }
    }
}

/// A per-check seed: the first eight bytes of SHA-256(master seed, check id).
pub fn derive_seed(master: u64, id: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update(id.as_bytes());
    let d = h.finalize();
    u64::from_le_bytes(d[..8].try_into().expect("eight bytes"))
}

type Runner = fn(&Env, u64) -> Vec<Certificate>;

pub struct CheckSpec {
    pub id: &'static str,
    pub lenses: &'static [Lens],
    /// What is being established, in a few words; the coverage table groups by it.
    pub topic: &'static str,
    pub criterion: u8,
    /// First segments of the certificate ids the check produces.
    pub emits: &'static [&'static str],
    /// Whether the check also runs with `u` a free variable.
    pub symbolic: bool,
    run: Runner,
}

fn failed(id: &str, err: impl std::fmt::Display) -> Certificate {
    let mut c = Certificate::new(id, "computation did not complete");
    c.require("error", false, json!(err.to_string()));
    c
}

fn one<E: std::fmt::Display>(id: &str, r: Result<Certificate, E>) -> Vec<Certificate> {
    vec![r.unwrap_or_else(|e| failed(id, e))]
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn hilbert(env: &Env, _: u64) -> Vec<Certificate> {
    let ctx = &env.ctx;
    let mut out = Vec::new();
    let specs: [(&str, fn(&ParameterContext<G>) -> Result<crate::ncalg::QuadraticPresentation<G>, crate::ncalg::AlgebraError>, usize, usize); 4] =
        [("S_x", catalog::s_x, 7, 3), ("S_EFKK", catalog::s_efkk, 7, 3), ("D", catalog::d, 7, 3), ("A", catalog::a, 8, 2)];
    for (name, make, top, k) in specs {
        let mut c = Certificate::new(format!("hilbert.{name}"), "The algebra has the Hilbert series of a polynomial ring in the same number of variables");
        c.params = Some(ctx.summary());
        match make(ctx) {
            Ok(p) => {
                let got = p.hilbert_function(top);
                let expect: Vec<usize> = (0..=top).map(|n| binom(n + k, k)).collect();
                c.require("dims", got == expect, json!({ "got": got, "expected": expect }));
            }
            Err(e) => {
                c.require("presentation", false, json!(e.to_string()));
            }
        }
        out.push(c);
    }
    out
}

fn presentations<F: Field>(ctx: &ParameterContext<F>) -> Result<Certificate, crate::ncalg::AlgebraError> {
    let mut c = Certificate::new("algebra.presentation_equivalence", "The x-form and the E,F,K,K'-form of S are isomorphic by the linear change of generators");
    c.params = Some(ctx.summary());
    let fwd = catalog::x_to_efkk(ctx)?;
    let back = catalog::efkk_to_x(ctx)?;
    let r1 = fwd.check_homomorphism()?;
    let r2 = back.check_homomorphism()?;
    c.require("x_to_efkk_homomorphism", r1.holds, json!(r1.failing_relations));
    c.require("efkk_to_x_homomorphism", r2.holds, json!(r2.failing_relations));
    let inverse = (0..4).all(|k| {
        let g = NCPoly::<F>::gen(k);
        fwd.apply(&back.apply(&g)) == g && back.apply(&fwd.apply(&g)) == g
    });
    c.require("mutually_inverse", inverse, json!(null));
    Ok(c)
}

fn twist_checks<F: Field>(ctx: &ParameterContext<F>) -> Result<Certificate, crate::ncalg::AlgebraError> {
    let mut c = Certificate::new("algebra.zhang_twist", "D is the twist of S by conjugation with K', K' is central in D, and the quotients of D by K' and by K are A and A'");
    c.params = Some(ctx.summary());
    let s = catalog::s_efkk(ctx)?;
    let tw = zhang_twist(&s, &catalog::twist_diagonal(ctx))?;
    let d = catalog::d(ctx)?;
    c.require("twist_equals_D", tw.same_relation_space(&d), json!(null));
    c.require("Kprime_central_in_D", d.is_central(&NCPoly::gen(KP))?, json!(null));
    c.require("Kprime_not_central_in_S", !s.is_central(&NCPoly::gen(KP))?, json!(null));
    c.require("D_mod_Kprime_is_A", d.quotient_by_generators(&[KP])?.same_relation_space(&catalog::a(ctx)?), json!(null));
    c.require("D_mod_K_is_Aprime", d.quotient_by_generators(&[K])?.same_relation_space(&catalog::a_prime(ctx)?), json!(null));
    Ok(c)
}

fn standard_form<F: Field>(ctx: &ParameterContext<F>) -> Result<Certificate, crate::ncalg::AlgebraError> {
    let mut c = Certificate::new("algebra.standard_form", "The relations of A are f = Mx with xᵀM = (Qf)ᵀ");
    c.params = Some(ctx.summary());
    let (m, q, x) = catalog::standard_form_data(ctx);
    let rep = standard_form_check(&catalog::a(ctx)?, &m, &q, &x)?;
    c.require("f_equals_Mx", rep.f_equals_mx, json!(rep.defects));
    c.require("xtM_equals_Qf", rep.xt_m_equals_qf, json!(null));
    Ok(c)
}

fn in_mode(env: &Env, specialized: fn(&ParameterContext<G>) -> Vec<Certificate>, sym: fn(&ParameterContext<R>) -> Vec<Certificate>) -> Vec<Certificate> {
    match env.mode {
        Mode::Specialized => specialized(&env.ctx),
        Mode::Symbolic => sym(&env.sym),
    }
}

fn presentation_check(env: &Env, _: u64) -> Vec<Certificate> {
    in_mode(env, |c| one("algebra.presentation_equivalence", presentations(c)), |c| one("algebra.presentation_equivalence", presentations(c)))
}

fn dictionary_check(env: &Env, _: u64) -> Vec<Certificate> {
    fn run<F: Field>(c: &ParameterContext<F>) -> Vec<Certificate> {
        match catalog::s_efkk(c) {
            Ok(p) => vec![uq::dictionary_certificate(&p, c)],
            Err(e) => vec![failed("uq.dictionary", e)],
        }
    }
    in_mode(env, run, run)
}

fn twist_check(env: &Env, _: u64) -> Vec<Certificate> {
    in_mode(env, |c| one("algebra.zhang_twist", twist_checks(c)), |c| one("algebra.zhang_twist", twist_checks(c)))
}

fn standard_form_run(env: &Env, _: u64) -> Vec<Certificate> {
    in_mode(env, |c| one("algebra.standard_form", standard_form(c)), |c| one("algebra.standard_form", standard_form(c)))
}

fn point_schemes(env: &Env, _: u64) -> Vec<Certificate> {
    let t = R::var("t");
    ptscheme::point_scheme_certificates(&env.rctx, &t).unwrap_or_else(|e| vec![failed("pts.components", e)])
}

fn sigma_phi(env: &Env, _: u64) -> Vec<Certificate> {
    vec![ptscheme::sigma_d_is_sigma_s_phi(&env.rctx, &R::var("t"))]
}

fn pd_equations(env: &Env, _: u64) -> Vec<Certificate> {
    vec![ptscheme::verify_pd_equation_systems(&env.rctx, &R::var("t")), ptscheme::a_determinant_factorization(&env.ctx)]
}

fn minors(env: &Env, seed: u64) -> Vec<Certificate> {
    vec![ptscheme::minors_containment(&env.rctx, &R::var("t"), 20, seed)]
}

fn pencil(env: &Env, _: u64) -> Vec<Certificate> {
    let c = env.geometry_ctx();
    let mut out = projgeom::pencil_certificates(c);
    out.push(projgeom::ruling_certificate(c));
    out
}

/// Lines through pairs of points of `C ∪ C'`, rulings of `Q(λ)`, and lines
/// that meet `C ∪ C'` at most once.
fn secant_lines(env: &Env, seed: u64) -> Vec<Certificate> {
    use rand::{Rng, SeedableRng};
    let ctx = &env.ctx;
    let top = env.alg.max_degree();
    let g = |n: i64| G::from(n);
    let mut secants: Vec<(String, ProjLine<G>)> = Vec::new();
    for (a, b) in [(1, 2), (2, -3), (3, 1), (-1, 5)] {
        secants.push((format!("C{a}_Cp{b}"), ProjLine::through(&point_on_c(ctx, &g(a)), &point_on_cp(ctx, &g(b))).expect("distinct")));
    }
    for (a, b) in [(1, 2), (2, 5), (-1, 3)] {
        secants.push((format!("C{a}_C{b}"), ProjLine::through(&point_on_c(ctx, &g(a)), &point_on_c(ctx, &g(b))).expect("distinct")));
        secants.push((format!("Cp{a}_Cp{b}"), ProjLine::through(&point_on_cp(ctx, &g(a)), &point_on_cp(ctx, &g(b))).expect("distinct")));
    }
    let mut rulings: Vec<(String, ProjLine<G>)> = Vec::new();
    for (l, s) in [(g(3), Some(g(1))), (G::rational(1, 2), Some(g(2))), (g(-2), None), (g(5), Some(g(0)))] {
        for fam in [1u8, 2] {
            rulings.push((format!("Q{l}.s{}.fam{fam}", s.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "inf".into())), ruling_line(&l, s.as_ref(), fam, ctx)));
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut others: Vec<(String, ProjLine<G>)> = Vec::new();
    while others.len() < 5 {
        let rows: Vec<Vec<G>> = (0..2).map(|_| (0..4).map(|_| g(rng.gen_range(-4..=4))).collect()).collect();
        let Ok(line) = ProjLine::from_forms(rows) else { continue };
        if secant_test(&line, ctx) == Ok(false) {
            others.push((format!("random{}", others.len()), line));
        }
    }
    let mut out = Vec::new();
    for (kind, set, expect) in [("secant", secants, true), ("ruling", rulings, true), ("non_secant", others, false)] {
        for (name, line) in set {
            let id = format!("lines.{kind}.{name}");
            let mut c = Certificate::new(id.clone(), "A line gives a line module exactly when it is secant to C ∪ C'");
            c.params = Some(ctx.summary());
            c.seed = seed;
            let sec = secant_test(&line, ctx);
            c.require("secant_test", sec == Ok(expect), json!(format!("{sec:?}")));
            let cutoff = if expect { top } else { top.min(4) };
            match gmod::line_module(&env.alg, &line, cutoff) {
                Ok(m) => {
                    let linear = (0..=cutoff).all(|i| m.dims[i] == i + 1);
                    let label = if expect { "hilbert_function_i_plus_1" } else { "drops_below_line_growth_by_degree_4" };
                    c.require(label, linear == expect, json!(m.dims));
                }
                Err(e) => {
                    c.require("line_module", false, json!(e.to_string()));
                }
            }
            out.push(c);
        }
    }
    out
}

fn incidence(env: &Env, seed: u64) -> Vec<Certificate> {
    gmod::incidence_samples(&env.ctx)
        .iter()
        .map(|s| gmod::incidence_certificate(&env.alg, &env.ctx, s, env.line_cutoff, seed).unwrap_or_else(|e| failed(&format!("incidence.{}", s.name), e)))
        .collect()
}

fn central<F: Field>(ctx: &ParameterContext<F>, lambdas: &[F]) -> Certificate {
    let mut c = Certificate::new("central.omega", "Each Ω(λ) is central, and Ω(λ) = Ω(q⁻²λ⁻¹)");
    c.params = Some(ctx.summary());
    let s = match catalog::s_efkk(ctx) {
        Ok(s) => s,
        Err(e) => return failed("central.omega", e),
    };
    for l in lambdas {
        let lam = Lambda::Finite(l.clone());
        let w = omega(lam.clone(), ctx);
        c.require(&format!("central.{l}"), s.is_central(&w.element).unwrap_or(false), json!(null));
        let p = lam.partner(ctx);
        c.require(&format!("partner.{l}"), omega(p, ctx).element == w.element, json!(null));
    }
    let kk = NCPoly::<F>::gen(K).mul(&NCPoly::gen(KP));
    c.require("omega_zero_is_KKprime", omega(Lambda::Zero, ctx).element == kk, json!(null));
    c.require("E_not_central", !s.is_central(&NCPoly::gen(E)).unwrap_or(true), json!(null));
    c
}

fn central_check(env: &Env, _: u64) -> Vec<Certificate> {
    match env.mode {
        Mode::Specialized => {
            let ls = [G::from(2), G::from(3), G::rational(1, 2), G::from(-5), G::rational(2, 7)];
            vec![central(&env.ctx, &ls)]
        }
        Mode::Symbolic => {
            let ls = [R::from_int(2), R::from_int(3), R::from_frac(1, 2), R::from_int(-5), R::var("lambda")];
            vec![central(&env.sym, &ls)]
        }
    }
}

fn omega_lines(env: &Env, _: u64) -> Vec<Certificate> {
    let g = |n: i64| G::from(n);
    let mut out: Vec<Certificate> = [(g(3), g(1)), (g(2), g(-1)), (G::rational(1, 3), g(2)), (g(-3), g(1)), (g(5), G::rational(1, 2))]
        .iter()
        .map(|(l, s)| gmod::omega_line_certificate(&env.alg, &env.ctx, l, s))
        .collect();
    out.push(gmod::omega_zero_certificate(&env.alg, &env.ctx));
    out
}

fn v_modules(env: &Env, seed: u64) -> Vec<Certificate> {
    let pres = env.alg.presentation();
    let mut out = Vec::new();
    for n in 0..=6 {
        for s in [1i8, -1] {
            out.push(gmod::v_module_certificate(pres, &env.ctx, n, s, seed));
        }
    }
    out
}

fn fat_points(env: &Env, seed: u64) -> Vec<Certificate> {
    let pres = env.alg.presentation();
    let mut out = Vec::new();
    for n in 0..=4 {
        out.push(gmod::fat_point_certificate(pres, &env.ctx, n, 4, seed).unwrap_or_else(|e| failed("fat_point", e)));
        out.push(gmod::twist_intertwiner_certificate(&env.ctx, n).unwrap_or_else(|e| failed("twist_intertwiner", e)));
    }
    for (n, s) in [(1usize, 1i8), (2, 1), (2, -1)] {
        out.push(gmod::lift_certificate(&env.alg, &env.ctx, n, s, &G::from(1), 4).unwrap_or_else(|e| failed("lift", e)));
    }
    out
}

fn localizations(env: &Env, seed: u64) -> Vec<Certificate> {
    let mut out = Vec::new();
    for n in 0..=4 {
        for s in [1i8, -1] {
            out.push(uq::simple_localization_certificate(n, s, &env.ctx, seed).unwrap_or_else(|e| failed("uq.localize", e)));
        }
    }
    for l in [G::from(3), G::rational(1, 2), G::from(-5)] {
        out.push(uq::verma_line_certificate(&env.alg, &env.ctx, &l, 2).unwrap_or_else(|e| failed("uq.verma_line", e)));
    }
    out
}

fn uq_checks(env: &Env, seed: u64) -> Vec<Certificate> {
    let ctx = &env.ctx;
    let lambdas = [ctx.q.clone(), G::from(3), G::rational(-1, 2), G::rational(2, 5), G::from(-7)];
    let mut out = vec![uq::casimir_certificate(ctx, &lambdas), uq::quantum_integer_certificate(ctx, 8)];
    for n in 0..=6 {
        for s in [1i8, -1] {
            out.push(uq::bgg_certificate(n, s, ctx, seed));
        }
    }
    for l in [Lambda::Finite(G::from(1)), Lambda::Finite(G::from(3)), Lambda::Finite(G::rational(-2, 3)), Lambda::Zero] {
        out.push(uq::casimir_matches_omega(&l, ctx));
    }
    out
}

fn fat_res(env: &Env, seed: u64) -> Vec<Certificate> {
    let mut jobs = Vec::new();
    for n in 0..=4usize {
        for sign in [1i8, -1] {
            for s in [Some(G::from(0)), Some(G::from(1)), None] {
                jobs.push((n, sign, s));
            }
        }
    }
    jobs.par_iter()
        .map(|(n, sign, s)| {
            let cutoff = (*n + 2).max(env.line_cutoff).min(env.alg.max_degree());
            gmod::fat_res_certificate(&env.alg, &env.ctx, *n, *sign, s.as_ref(), cutoff, seed).unwrap_or_else(|e| failed("fat_res", e))
        })
        .collect()
}

fn no_fat_quotient(env: &Env, _: u64) -> Vec<Certificate> {
    let mut jobs = Vec::new();
    for n in 0..=3usize {
        for sign in [1i8, -1] {
            jobs.push((n, sign));
        }
    }
    jobs.par_iter()
        .map(|(n, sign)| gmod::no_fat_quotient_certificate(&env.alg, &env.ctx, *n, *sign, Some(&G::from(1)), 3, 4).unwrap_or_else(|e| failed("no_fat_quotient", e)))
        .collect()
}

fn sklyanin_sample() -> SklyaninParams<G> {
    SklyaninParams::new(G::rational(1, 3), G::from(2), G::rational(-7, 5))
}

fn degenerate_sigma(env: &Env, _: u64) -> Vec<Certificate> {
    let sym = SklyaninParams::symbolic();
    let d = SklyaninParams::degenerate(&env.ctx.b);
    let sample = sklyanin_sample();
    let mut out = vec![
        degeneration::sigma_preserves_e(&sym),
        degeneration::pencil_certificate(&sym),
        degeneration::sigma_preserves_e(&d),
        degeneration::sigma_preserves_e(&sample),
        degeneration::pencil_certificate(&sample),
    ];
    for p in [&d, &sample] {
        out.push(degeneration::bilinear_compatibility(p).unwrap_or_else(|e| failed("degeneration.bilinear", e)));
    }
    out
}

fn degenerate_identities(env: &Env, _: u64) -> Vec<Certificate> {
    match env.mode {
        Mode::Specialized => vec![degeneration::degeneration_identities(&env.ctx)],
        Mode::Symbolic => vec![degeneration::degeneration_identities(&env.sym)],
    }
}

fn heisenberg(env: &Env, seed: u64) -> Vec<Certificate> {
    one("degeneration.heisenberg", degeneration::heisenberg_certificate(&env.ctx, 3, seed))
}

use Lens::*;

pub static REGISTRY: &[CheckSpec] = &[
    CheckSpec { id: "hilbert.series", emits: &["hilbert"], lenses: &[Hilbert], topic: "Hilbert series of S, D, A", criterion: 1, symbolic: false, run: hilbert },
    CheckSpec { id: "algebra.presentation_equivalence", emits: &["algebra"], lenses: &[Algebra], topic: "the two presentations of S", criterion: 2, symbolic: true, run: presentation_check },
    CheckSpec { id: "uq.dictionary", emits: &["uq"], lenses: &[Algebra, Uq], topic: "localization of S at KK' and U_q(sl2)", criterion: 2, symbolic: true, run: dictionary_check },
    CheckSpec { id: "algebra.zhang_twist", emits: &["algebra"], lenses: &[Algebra], topic: "D as a twist of S and its quotients", criterion: 3, symbolic: true, run: twist_check },
    CheckSpec { id: "algebra.standard_form", emits: &["algebra"], lenses: &[Algebra], topic: "standard form of the relations of A", criterion: 4, symbolic: true, run: standard_form_run },
    CheckSpec { id: "pts.components", emits: &["pts"], lenses: &[PointScheme, Sigma], topic: "point schemes of A, A', D, S", criterion: 5, symbolic: false, run: point_schemes },
    CheckSpec { id: "pts.sigma_d_is_sigma_s_phi", emits: &["pts"], lenses: &[PointScheme, Sigma], topic: "σ_D = σ_S∘φ", criterion: 5, symbolic: false, run: sigma_phi },
    CheckSpec { id: "pts.pd_equations", emits: &["pts"], lenses: &[PointScheme], topic: "equations of the point scheme of D", criterion: 5, symbolic: false, run: pd_equations },
    CheckSpec { id: "pts.minors", emits: &["pts"], lenses: &[PointScheme], topic: "minors of the multilinearization", criterion: 5, symbolic: false, run: minors },
    CheckSpec { id: "pencil", emits: &["pencil"], lenses: &[Lines], topic: "the pencil of quadrics through C ∪ C'", criterion: 6, symbolic: true, run: pencil },
    CheckSpec { id: "lines.secant", emits: &["lines"], lenses: &[Lines], topic: "line modules are secant lines", criterion: 7, symbolic: false, run: secant_lines },
    CheckSpec { id: "incidence", emits: &["incidence"], lenses: &[Incidence, Lines], topic: "point-line incidence sequences", criterion: 8, symbolic: false, run: incidence },
    CheckSpec { id: "central.omega", emits: &["central"], lenses: &[Algebra], topic: "central elements Ω(λ)", criterion: 9, symbolic: true, run: central_check },
    CheckSpec { id: "central.omega_lines", emits: &["omega"], lenses: &[Lines], topic: "lines annihilated by Ω(λ)", criterion: 9, symbolic: false, run: omega_lines },
    CheckSpec { id: "reps.v_modules", emits: &["vmod"], lenses: &[Uq], topic: "finite-dimensional simple S-modules", criterion: 10, symbolic: false, run: v_modules },
    CheckSpec { id: "reps.fat_points", emits: &["fatpt", "lift", "twist"], lenses: &[Uq], topic: "fat point modules", criterion: 10, symbolic: false, run: fat_points },
    CheckSpec { id: "reps.localization", emits: &["uq"], lenses: &[Uq], topic: "localization of fat points and Verma lines", criterion: 10, symbolic: false, run: localizations },
    CheckSpec { id: "uq.structure", emits: &["uq"], lenses: &[Uq], topic: "Casimir, BGG, quantum integers", criterion: 11, symbolic: false, run: uq_checks },
    CheckSpec { id: "fat_res", emits: &["fat_res"], lenses: &[Incidence, Lines], topic: "resolutions of fat points by line modules", criterion: 12, symbolic: false, run: fat_res },
    CheckSpec { id: "no_fat_quotient", emits: &["no_fat_quotient"], lenses: &[Incidence, Lines], topic: "kernel lines have no fat quotient", criterion: 12, symbolic: false, run: no_fat_quotient },
    CheckSpec { id: "degeneration.sigma", emits: &["degeneration"], lenses: &[Degenerate, Sigma], topic: "the elliptic translation and its pencil", criterion: 13, symbolic: true, run: degenerate_sigma },
    CheckSpec { id: "degeneration.identities", emits: &["degeneration"], lenses: &[Degenerate], topic: "specialization to C ∪ C'", criterion: 13, symbolic: true, run: degenerate_identities },
    CheckSpec { id: "degeneration.heisenberg", emits: &["degeneration"], lenses: &[Degenerate], topic: "degenerate Heisenberg maps", criterion: 13, symbolic: false, run: heisenberg },
];

/// One certificate together with the registry entry that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub registry_id: &'static str,
    pub criterion: u8,
    pub topic: &'static str,
    #[serde(flatten)]
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverageRow {
    pub topic: &'static str,
    pub certificates: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub params: ParamSummary,
    pub master_seed: u64,
    pub certificates: Vec<Entry>,
    pub coverage: Vec<CoverageRow>,
    /// SHA-256 of the report with every `elapsed_ms` set to zero.
    pub determinism_hash: String,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.certificates.iter().all(|e| e.certificate.passed())
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "# Certificate report\n\nmode: {:?}, u = {}, q = {}, seed = {}\n\n| check | status | ms | claim |\n|---|---|---|---|\n",
            self.params.mode, self.params.u, self.params.q, self.master_seed
        );
        for e in &self.certificates {
            let c = &e.certificate;
            s += &format!("| {} | {} | {} | {} |\n", c.check_id, status_word(c.status), c.elapsed_ms, c.statement);
        }
        s += "\n## Coverage\n\n| topic | certificates | passed |\n|---|---|---|\n";
        for r in &self.coverage {
            s += &format!("| {} | {} | {} |\n", r.topic, r.certificates, r.passed);
        }
        s
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Flagged => "flagged",
    }
}

/// Which registry entries a run selects.
#[derive(Clone, Debug, Default)]
pub struct Selection {
    pub lens: Option<Lens>,
    /// A glob on certificate ids, e.g. `pts.*`.
    pub filter: Option<String>,
}

impl Selection {
    fn wants_spec(&self, spec: &CheckSpec, mode: Mode) -> bool {
        (mode == Mode::Specialized || spec.symbolic) && self.lens.map_or(true, |l| spec.lenses.contains(&l))
    }
}

/// Run the selected checks in parallel and assemble the report in registry order.
pub fn run(env: &Env, sel: &Selection) -> Result<Report, glob::PatternError> {
    let pattern = sel.filter.as_deref().map(glob::Pattern::new).transpose()?;
    let specs: Vec<&CheckSpec> = REGISTRY.iter().filter(|s| sel.wants_spec(s, env.mode)).collect();
    let per_spec: Vec<Vec<Entry>> = specs
        .par_iter()
        .map(|spec| {
            // Skip entries whose certificates cannot match the literal head of the filter.
            if let Some(p) = &pattern {
                let head: String = p.as_str().chars().take_while(|c| !"*?[".contains(*c)).collect();
                if !spec.emits.iter().any(|e| e.starts_with(&head) || head.starts_with(e)) {
                    return Vec::new();
                }
            }
            let seed = derive_seed(env.master_seed, spec.id);
            let start = Instant::now();
            let mut certs = (spec.run)(env, seed);
            let ms = start.elapsed().as_millis() as u64;
            let share = ms / certs.len().max(1) as u64;
            for c in &mut certs {
                if c.elapsed_ms == 0 {
                    c.elapsed_ms = share;
                }
                if c.seed == 0 {
                    c.seed = seed;
                }
            }
            certs
                .into_iter()
                .filter(|c| pattern.as_ref().map_or(true, |p| p.matches(&c.check_id)))
                .map(|certificate| Entry { registry_id: spec.id, criterion: spec.criterion, topic: spec.topic, certificate })
                .collect()
        })
        .collect();
    let certificates: Vec<Entry> = per_spec.into_iter().flatten().collect();
    let mut coverage: Vec<CoverageRow> = Vec::new();
    for e in &certificates {
        match coverage.iter_mut().find(|r| r.topic == e.topic) {
            Some(r) => {
                r.certificates += 1;
                r.passed += e.certificate.passed() as usize;
            }
            None => coverage.push(CoverageRow { topic: e.topic, certificates: 1, passed: e.certificate.passed() as usize }),
        }
    }
    let params = match env.mode {
        Mode::Specialized => env.ctx.summary(),
        Mode::Symbolic => env.sym.summary(),
    };
    let mut report = Report { schema_version: SCHEMA_VERSION, params, master_seed: env.master_seed, certificates, coverage, determinism_hash: String::new() };
    report.determinism_hash = determinism_hash(&report);
    Ok(report)
}

/// SHA-256 of the serialized report with timings zeroed and the hash blank.
pub fn determinism_hash(r: &Report) -> String {
    let mut v = serde_json::to_value(r).expect("serializable");
    v["determinism_hash"] = Value::String(String::new());
    if let Some(list) = v["certificates"].as_array_mut() {
        for c in list {
            c["elapsed_ms"] = json!(0);
        }
    }
    let bytes = serde_json::to_vec(&v).expect("serializable");
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Parse `u` as a rational `p` or `p/q`, with an optional imaginary part.
pub fn parse_u(re: &str, im: Option<&str>) -> Result<G, String> {
    use num_rational::BigRational;
    let parse = |s: &str| s.trim().parse::<BigRational>().map_err(|e| format!("cannot parse {s:?}: {e}"));
    let r = parse(re)?;
    let i = match im {
        Some(s) => parse(s)?,
        None => BigRational::from_integer(0.into()),
    };
    Ok(G::new(r, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_depend_on_id_and_master() {
        assert_eq!(derive_seed(7, "a"), derive_seed(7, "a"));
        assert_ne!(derive_seed(7, "a"), derive_seed(7, "b"));
        assert_ne!(derive_seed(7, "a"), derive_seed(8, "a"));
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
        assert!((1..=13).all(|k| REGISTRY.iter().any(|s| s.criterion == k)));
    }

    #[test]
    fn u_equal_one_is_rejected() {
        let u = parse_u("1", None).unwrap();
        assert!(Env::new(Mode::Specialized, u, 0, 2).is_err());
        assert_eq!(parse_u("3/2", Some("1")).unwrap(), G::new(num_rational::BigRational::new(3.into(), 2.into()), num_rational::BigRational::from_integer(1.into())));
    }

    #[test]
    fn filtered_run_is_deterministic() {
        let env = Env::new(Mode::Specialized, G::from(2), 11, 3).unwrap();
        let sel = Selection { lens: None, filter: Some("algebra.*".into()) };
        let a = run(&env, &sel).unwrap();
        let b = run(&env, &sel).unwrap();
        assert!(a.all_passed());
        assert_eq!(a.determinism_hash, b.determinism_hash);
        assert!(a.certificates.iter().all(|e| e.certificate.check_id.starts_with("algebra.")));
        assert!(!a.certificates.is_empty());
    }
}
