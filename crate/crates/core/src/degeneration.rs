//! The Sklyanin family `S(α,β,γ)`, its elliptic point scheme and translation,
//! and how they specialize to `S = S(0,b²,−b²)`.
//!
//! Membership in the ideal of `E` uses the basis
//! `x3² + A x1² + B x2²`, `x0² + (1−A)x1² + (1−B)x2²` with
//! `A = (1−γ)/(1+α)`, `B = (1+γ)/(1−β)`: the leading terms `x0²`, `x3²` are
//! coprime, so rewriting them away is a complete membership test.

use serde_json::json;

use crate::catalog::{efkk_in_x, s_efkk, sklyanin, x_in_efkk, E, F_, K, KP};
use crate::certificate::Certificate;
use crate::cpoly::{CPoly, HomogeneousIdeal};
use crate::exactfield::linalg::Matrix;
use crate::exactfield::{Field, ParameterContext, RationalFunction};
use crate::gmod::{find_isomorphism, hom_space, point_module};
use crate::ncalg::{AlgebraError, AlgebraMap, NCPoly, QuadraticPresentation};
use crate::ptscheme::{proj_eq, sigma_s_claims, successor_kernel};

#[derive(Clone, Debug)]
pub struct SklyaninParams<F: Field> {
    pub alpha: F,
    pub beta: F,
    pub gamma: F,
}

impl<F: Field> SklyaninParams<F> {
    pub fn new(alpha: F, beta: F, gamma: F) -> Self {
        Self { alpha, beta, gamma }
    }

    /// `(0, b², −b²)`.
    pub fn degenerate(b: &F) -> Self {
        let b2 = b.mul(b);
        Self::new(F::zero(), b2.clone(), b2.neg())
    }

    pub fn on_constraint(&self) -> bool {
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        a.add(b).add(c).add(&a.mul(b).mul(c)).is_zero()
    }

    /// True iff none of `α, β, γ` is `0` or `±1`.
    pub fn nondegenerate(&self) -> bool {
        crate::catalog::is_nondegenerate(&self.alpha, &self.beta, &self.gamma)
    }

    pub fn presentation(&self) -> Result<QuadraticPresentation<F>, AlgebraError> {
        sklyanin(&self.alpha, &self.beta, &self.gamma)
    }

    fn coeff_a(&self) -> F {
        F::one().sub(&self.gamma).div(&F::one().add(&self.alpha)).expect("α ≠ −1")
    }

    fn coeff_b(&self) -> F {
        F::one().add(&self.gamma).div(&F::one().sub(&self.beta)).expect("β ≠ 1")
    }

    fn label(&self) -> String {
        format!("({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

impl SklyaninParams<RationalFunction> {
    /// Generic `α, β` with `γ = −(α+β)/(1+αβ)`, so the constraint is an identity.
    pub fn symbolic() -> Self {
        let a = RationalFunction::var("alpha");
        let b = RationalFunction::var("beta");
        let g = a.add(&b).neg().div(&RationalFunction::one().add(&a.mul(&b))).expect("1 + αβ ≠ 0");
        Self::new(a, b, g)
    }
}

fn x<F: Field>(i: usize) -> CPoly<F> {
    CPoly::var(4, i)
}

fn sq<F: Field>(i: usize) -> CPoly<F> {
    x::<F>(i).mul(&x(i))
}

/// `Σ cᵢ xᵢ²`.
fn diagonal_quadric<F: Field>(c: [F; 4]) -> CPoly<F> {
    c.into_iter().enumerate().fold(CPoly::zero(4), |acc, (i, ci)| acc.add(&sq::<F>(i).scale(&ci)))
}

/// The two quadrics cutting out `E`.
pub fn e_quadrics<F: Field>(p: &SklyaninParams<F>) -> [CPoly<F>; 2] {
    let o = F::one();
    [
        diagonal_quadric([o.clone(), o.clone(), o.clone(), o.clone()]),
        diagonal_quadric([F::zero(), p.coeff_a(), p.coeff_b(), o]),
    ]
}

/// The four diagonal quadrics as printed, any two claimed to cut out `E`.
pub fn four_quadrics<F: Field>(p: &SklyaninParams<F>) -> [CPoly<F>; 4] {
    let (a, b, c) = (&p.alpha, &p.beta, &p.gamma);
    let o = F::one();
    [
        diagonal_quadric([o.clone(), o.clone(), o.clone(), o.clone()]),
        diagonal_quadric([o.clone(), b.mul(c).neg(), c.neg(), b.clone()]),
        diagonal_quadric([o.clone(), c.clone(), a.mul(c).neg(), a.neg()]),
        diagonal_quadric([o, b.neg(), a.clone(), a.neg()]),
    ]
}

/// The last of the four quadrics with `x3²` coefficient `−αβ`; the printed
/// `−α` is not in the pencil.
pub fn corrected_fourth_quadric<F: Field>(p: &SklyaninParams<F>) -> CPoly<F> {
    let (a, b) = (&p.alpha, &p.beta);
    diagonal_quadric([F::one(), b.neg(), a.clone(), a.mul(b).neg()])
}

/// Normal form modulo the ideal of `E`; zero iff the input lies in it.
pub fn reduce_mod_e<F: Field>(p: &SklyaninParams<F>, f: &CPoly<F>) -> CPoly<F> {
    let a = p.coeff_a();
    let b = p.coeff_b();
    let o = F::one();
    // x0² ≡ −(1−A)x1² − (1−B)x2², x3² ≡ −A x1² − B x2².
    let r0 = sq::<F>(1).scale(&o.sub(&a)).add(&sq::<F>(2).scale(&o.sub(&b))).neg();
    let r3 = sq::<F>(1).scale(&a).add(&sq::<F>(2).scale(&b)).neg();
    let mut todo = f.clone();
    let mut out = CPoly::zero(4);
    loop {
        let first = todo.terms().next().map(|(e, c)| (e.clone(), c.clone()));
        let Some((e, c)) = first else { break };
        let mut rest = CPoly::zero(4);
        rest.add_term(e.clone(), c.neg());
        todo = todo.add(&rest);
        let rule = if e[0] >= 2 {
            Some((0, &r0))
        } else if e[3] >= 2 {
            Some((3, &r3))
        } else {
            None
        };
        match rule {
            None => out.add_term(e, c),
            Some((v, r)) => {
                let mut m = e.clone();
                m[v] -= 2;
                todo = todo.add(&CPoly::monomial(m, c).mul(r));
            }
        }
    }
    out
}

/// The translation `σ` on `E`, four cubics.
pub fn sklyanin_sigma<F: Field>(p: &SklyaninParams<F>) -> Vec<CPoly<F>> {
    let (a, b, c) = (&p.alpha, &p.beta, &p.gamma);
    let (bc, ac, ab) = (b.mul(c), a.mul(c), a.mul(b));
    let two = F::from_int(2);
    let inner = |s: [i64; 4]| {
        diagonal_quadric([F::from_int(s[0]), bc.mul(&F::from_int(s[1])), ac.mul(&F::from_int(s[2])), ab.mul(&F::from_int(s[3]))])
    };
    let triple = |i: usize, j: usize, k: usize| x::<F>(i).mul(&x(j)).mul(&x(k));
    vec![
        triple(1, 2, 3).scale(&two.mul(&a.mul(b).mul(c)).neg()).sub(&x::<F>(0).mul(&inner([-1, 1, 1, 1]))),
        triple(0, 2, 3).scale(&two.mul(a)).add(&x::<F>(1).mul(&inner([1, -1, 1, 1]))),
        triple(0, 1, 3).scale(&two.mul(b)).add(&x::<F>(2).mul(&inner([1, 1, -1, 1]))),
        triple(0, 1, 2).scale(&two.mul(c)).add(&x::<F>(3).mul(&inner([1, 1, 1, -1]))),
    ]
}

/// Each of the four quadrics lies in the pencil of the two defining ones,
/// and each coordinate point is the vertex of a singular member.
pub fn pencil_certificate<F: Field>(p: &SklyaninParams<F>) -> Certificate {
    let mut c = Certificate::new(
        format!("degeneration.pencil.{}", p.label()),
        "Each of the four diagonal quadrics lies in the pencil of the two quadrics defining the elliptic curve",
    );
    c.require("constraint", p.on_constraint(), json!(null));
    let printed = four_quadrics(p);
    for (k, f) in printed.iter().enumerate().take(3) {
        c.require(&format!("quadric_{k}_in_pencil"), reduce_mod_e(p, f).is_zero(), json!(null));
    }
    c.require("quadric_3_corrected_in_pencil", reduce_mod_e(p, &corrected_fourth_quadric(p)).is_zero(), json!("x0^2 - b x1^2 + a x2^2 - ab x3^2"));
    c.note("quadric_3_as_printed_in_pencil", json!(reduce_mod_e(p, &printed[3]).is_zero()));
    // μq₁ + νq₂ has diagonal (μ, μ+νA, μ+νB, μ+ν); it loses x_j for one (μ:ν) each.
    let [q1, q2] = e_quadrics(p);
    let diag = |f: &CPoly<F>| (0..4).map(|i| f.coefficient(&{
        let mut e = vec![0; 4];
        e[i] = 2;
        e
    })).collect::<Vec<F>>();
    let (d1, d2) = (diag(&q1), diag(&q2));
    let vertices = (0..4).all(|j| {
        let m = Matrix::from_rows(vec![vec![d1[j].clone(), d2[j].clone()]]);
        let ker = m.nullspace();
        ker.len() == 1 && {
            let (mu, nu) = (&ker[0][0], &ker[0][1]);
            let coeffs: Vec<F> = (0..4).map(|i| mu.mul(&d1[i]).add(&nu.mul(&d2[i]))).collect();
            coeffs.iter().enumerate().all(|(i, x)| (i == j) == x.is_zero())
        }
    });
    if p.nondegenerate() {
        c.require("coordinate_points_are_vertices", vertices, json!(null));
    } else {
        // At (0, b², −b²) the member x0² − b²x1² is singular along a line.
        c.note("coordinate_points_are_vertices", json!(vertices));
    }
    c
}

/// `qᵢ(σ(x))` lies in the ideal of `E` for both defining quadrics.
pub fn sigma_preserves_e<F: Field>(p: &SklyaninParams<F>) -> Certificate {
    sigma_map_preserves_e(p, &sklyanin_sigma(p), "sigma")
}

pub fn sigma_map_preserves_e<F: Field>(p: &SklyaninParams<F>, map: &[CPoly<F>], name: &str) -> Certificate {
    let mut c = Certificate::new(
        format!("degeneration.{name}_preserves_E.{}", p.label()),
        "The cubic translation formula maps the elliptic curve into itself",
    );
    c.require("constraint", p.on_constraint(), json!(null));
    for (k, q) in e_quadrics(p).iter().enumerate() {
        let img = q.substitute(map);
        c.require(&format!("q{}_of_sigma_in_ideal", k + 1), reduce_mod_e(p, &img).is_zero(), json!({ "degree": img.homogeneous_degree() }));
    }
    c
}

/// `B_r(y, z) = Σ c_ij yᵢ z_j` for a relation `r = Σ c_ij xᵢx_j`.
pub fn bilinearize<F: Field>(r: &NCPoly<F>, y: &[CPoly<F>], z: &[CPoly<F>]) -> CPoly<F> {
    r.terms().fold(CPoly::zero(4), |acc, (w, c)| acc.add(&y[w.0[0] as usize].mul(&z[w.0[1] as usize]).scale(c)))
}

/// Which of `B_r(x, σx)` and `B_r(σx, x)` vanish on `E` for every relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub x_then_sigma: bool,
    pub sigma_then_x: bool,
}

pub fn orientation<F: Field>(p: &SklyaninParams<F>, map: &[CPoly<F>]) -> Result<Orientation, AlgebraError> {
    let pres = p.presentation()?;
    let xs: Vec<CPoly<F>> = (0..4).map(x).collect();
    let all = |first: &[CPoly<F>], second: &[CPoly<F>]| pres.relations().iter().all(|r| reduce_mod_e(p, &bilinearize(r, first, second)).is_zero());
    Ok(Orientation { x_then_sigma: all(&xs, map), sigma_then_x: all(map, &xs) })
}

/// The multilinearized relations vanish on the graph of `σ` in exactly one
/// orientation. `B_r(x, σx) = 0` is the orientation in which `x` is the
/// predecessor of `σx`, as for successor kernels in `ptscheme`.
pub fn bilinear_compatibility<F: Field>(p: &SklyaninParams<F>) -> Result<Certificate, AlgebraError> {
    bilinear_compatibility_for(p, &sklyanin_sigma(p), "sigma")
}

pub fn bilinear_compatibility_for<F: Field>(p: &SklyaninParams<F>, map: &[CPoly<F>], name: &str) -> Result<Certificate, AlgebraError> {
    let mut c = Certificate::new(
        format!("degeneration.bilinear.{name}.{}", p.label()),
        "Every defining relation, multilinearized, vanishes on pairs (x, σx) with x on the elliptic curve",
    );
    let o = orientation(p, map)?;
    c.require("exactly_one_orientation", o.x_then_sigma != o.sigma_then_x, json!({ "B(x,σx)": o.x_then_sigma, "B(σx,x)": o.sigma_then_x }));
    c.note("orientation", json!(if o.x_then_sigma { "B(x, sigma(x))" } else if o.sigma_then_x { "B(sigma(x), x)" } else { "none" }));
    Ok(c)
}

/// The matrix of a list of linear forms: row `g` holds the coefficients of form `g`.
fn form_matrix<F: Field>(forms: &[NCPoly<F>]) -> Matrix<F> {
    Matrix::from_rows(forms.iter().map(|f| f.linear_coeffs(4)).collect())
}

/// `T`: `(E,F,K,K') = T x`, and its inverse.
pub fn coordinate_change<F: Field>(ctx: &ParameterContext<F>) -> (Matrix<F>, Matrix<F>) {
    (form_matrix(&efkk_in_x(ctx)), form_matrix(&x_in_efkk(ctx)))
}

/// A map of `P³` in `x` coordinates, rewritten in `E, F, K, K'` coordinates.
pub fn to_efkk_coords<F: Field>(map: &[CPoly<F>], ctx: &ParameterContext<F>) -> Vec<CPoly<F>> {
    let (t, tinv) = coordinate_change(ctx);
    let xs: Vec<CPoly<F>> = tinv.data.iter().map(|row| CPoly::linear(row)).collect();
    let pulled: Vec<CPoly<F>> = map.iter().map(|m| m.substitute(&xs)).collect();
    t.data
        .iter()
        .map(|row| row.iter().zip(&pulled).fold(CPoly::zero(4), |acc, (c, f)| acc.add(&f.scale(c))))
        .collect()
}

/// All `2×2` minors of `(a | b)` vanish as polynomials.
fn proportional_polys<F: Field>(a: &[CPoly<F>], b: &[CPoly<F>]) -> bool {
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| a[i].mul(&b[j]).sub(&a[j].mul(&b[i])).is_zero()))
}

fn proportional_matrices<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> bool {
    let flat = |m: &Matrix<F>| m.data.iter().flatten().cloned().collect::<Vec<F>>();
    let (fa, fb) = (flat(a), flat(b));
    fa.iter().any(|x| !x.is_zero()) && proj_eq(&fa, &fb)
}

fn restrict<F: Field>(f: &[CPoly<F>], var: usize) -> Vec<CPoly<F>> {
    let subs: Vec<CPoly<F>> = (0..4).map(|i| if i == var { CPoly::zero(4) } else { x(i) }).collect();
    f.iter().map(|g| g.substitute(&subs)).collect()
}

/// Identities relating `(E(0,b²,−b²), σ)` to the point scheme of `S`.
pub fn degeneration_identities<F: Field>(ctx: &ParameterContext<F>) -> Certificate {
    let mut c = Certificate::new(
        "degeneration.identities",
        "At (0, b², -b²) the elliptic curve becomes C ∪ C', the isolated points become (0,0,1,±1) and (±q,1,0,0), and σ becomes σ_S on each plane",
    );
    c.params = Some(ctx.summary());
    let p = SklyaninParams::degenerate(&ctx.b);
    let (b, k2) = (&ctx.b, ctx.kappa.mul(&ctx.kappa));
    let (t, tinv) = coordinate_change(ctx);
    let xs_in_y: Vec<CPoly<F>> = tinv.data.iter().map(|row| CPoly::linear(row)).collect();
    let ys_in_x: Vec<CPoly<F>> = t.data.iter().map(|row| CPoly::linear(row)).collect();
    let y = |i: usize| CPoly::<F>::var(4, i);

    // (a) the ideal of E_dg in E,F,K,K' coordinates.
    let [q1, q2] = e_quadrics(&p);
    let specialized = diagonal_quadric([F::zero(), F::one().add(&b.mul(b)), F::one(), F::one()]);
    c.require("specialized_second_quadric", q2 == specialized, q2.render(&crate::catalog::X_NAMES));
    let e_dg = HomogeneousIdeal::new(4, vec![q1.substitute(&xs_in_y), q2.substitute(&xs_in_y)]);
    let cc = HomogeneousIdeal::new(4, vec![y(K).mul(&y(KP)), y(E).mul(&y(F_)).add(&y(K).mul(&y(K)).add(&y(KP).mul(&y(KP))).scale(&k2))]);
    let same = (2..=3).all(|d| e_dg.same_component(&cc, d) && cc.same_component(&e_dg, d));
    c.require("E_dg_is_C_union_Cprime", same, json!({ "degrees": [2, 3] }));
    let kk = y(K).mul(&y(KP)).substitute(&ys_in_x);
    c.require("x0^2 - b^2 x1^2 = KK'", kk == sq::<F>(0).sub(&sq::<F>(1).scale(&b.mul(b))), json!(null));
    // On K' = 0 (x0 = b x1) the conic of C is −¼(1+b²)((1+b²)x1² + x2² + x3²).
    let on_plane: Vec<CPoly<F>> = vec![x::<F>(1).scale(b), x(1), x(2), x(3)];
    let conic = y(E).mul(&y(F_)).add(&y(K).mul(&y(K)).scale(&k2)).substitute(&ys_in_x).substitute(&on_plane);
    let one_b2 = F::one().add(&b.mul(b));
    let expect = diagonal_quadric([F::zero(), one_b2.clone(), F::one(), F::one()]).scale(&one_b2.mul(&F::from_frac(-1, 4)));
    c.require("conic_C_on_plane_Kprime_0", conic == expect, conic.render(&crate::catalog::X_NAMES));
    c.require("4 kappa^2 b^2 = -(1+b^2)^2/4", F::from_int(4).mul(&k2).mul(&b.mul(b)) == one_b2.mul(&one_b2).mul(&F::from_frac(-1, 4)), json!(null));

    // (b) the coordinate points.
    let unit = |j: usize| (0..4).map(|i| if i == j { F::one() } else { F::zero() }).collect::<Vec<F>>();
    let o = F::one();
    let targets = [
        vec![F::zero(), F::zero(), o.clone(), o.clone()],
        vec![F::zero(), F::zero(), o.clone(), o.neg()],
        vec![ctx.q.clone(), o.clone(), F::zero(), F::zero()],
        vec![ctx.q.neg(), o.clone(), F::zero(), F::zero()],
    ];
    for (j, target) in targets.iter().enumerate() {
        let img = t.apply(&unit(j));
        c.require(&format!("x_point_{j}"), proj_eq(&img, target), json!(crate::ptscheme::render_point(&img)));
    }

    // (c) σ_dg against σ_S, plane by plane.
    let sigma = sklyanin_sigma(&p);
    let b2 = b.mul(b);
    let b4 = b2.mul(&b2);
    let dg_printed = vec![
        x::<F>(0).mul(&sq::<F>(0).add(&sq::<F>(1).scale(&b4))),
        x::<F>(1).mul(&sq::<F>(0).add(&sq::<F>(1).scale(&b4))),
        x::<F>(0).mul(&x(1)).mul(&x(3)).scale(&b2.mul(&F::from_int(2))).add(&x::<F>(2).mul(&sq::<F>(0).sub(&sq::<F>(1).scale(&b4)))),
        x::<F>(0).mul(&x(1)).mul(&x(2)).scale(&b2.mul(&F::from_int(-2))).add(&x::<F>(3).mul(&sq::<F>(0).sub(&sq::<F>(1).scale(&b4)))),
    ];
    c.require("specialized_sigma_formula", sigma == dg_printed, json!(null));
    let sigma_y = to_efkk_coords(&sigma, ctx);
    let claims = sigma_s_claims(ctx);
    for (plane, var, claim) in [("Kprime_0", KP, &claims[0]), ("K_0", K, &claims[1])] {
        let lhs = restrict(&sigma_y, var);
        let rhs = restrict(&claim.images, var);
        let nonzero = lhs.iter().any(|f| !f.is_zero());
        c.require(&format!("sigma_on_plane_{plane}"), nonzero && proportional_polys(&lhs, &rhs), json!(null));
    }
    // On x0 = b x1, σ_dg = b²x1²·((1+b²)x0, (1+b²)x1, (1−b²)x2 + 2b x3, (1−b²)x3 − 2b x2).
    let one_m_b2 = F::one().sub(&b2);
    let lin = |cols: [(usize, F); 2]| cols.into_iter().fold(CPoly::zero(4), |acc, (i, c)| acc.add(&x::<F>(i).scale(&c)));
    let two_b = b.mul(&F::from_int(2));
    let factor = sq::<F>(1).scale(&b2);
    let derived = [
        x::<F>(0).scale(&one_b2),
        x::<F>(1).scale(&one_b2),
        lin([(2, one_m_b2.clone()), (3, two_b.clone())]),
        lin([(3, one_m_b2.clone()), (2, two_b.neg())]),
    ];
    let on_kp: Vec<CPoly<F>> = sigma.iter().map(|f| f.substitute(&on_plane)).collect();
    let derived_ok = on_kp.iter().zip(&derived).all(|(l, r)| *l == factor.mul(r).substitute(&on_plane));
    c.require("linear_form_on_plane_Kprime_0", derived_ok, json!(null));
    let printed = [
        derived[0].clone(),
        derived[1].clone(),
        lin([(2, one_m_b2.clone()), (3, b2.mul(&F::from_int(2)))]),
        lin([(3, one_m_b2), (2, b2.mul(&F::from_int(-2)))]),
    ];
    let printed_ok = proportional_polys(&on_kp, &printed.iter().map(|f| f.substitute(&on_plane)).collect::<Vec<_>>());
    c.note("printed_intermediate_matches", json!(printed_ok));
    let fixes_isolated = [0usize, 1].iter().all(|&j| proj_eq(&sigma.iter().map(|f| f.eval(&unit(j))).collect::<Vec<_>>(), &unit(j)));
    c.require("fixes_points_0_1", fixes_isolated, json!(null));

    // (d) the two involutions of E used when degenerating resolutions.
    let diag4 = |d: [i64; 4]| {
        let mut m = Matrix::zeros(4, 4);
        for (i, v) in d.iter().enumerate() {
            m.data[i][i] = F::from_int(*v);
        }
        m
    };
    let conj = |m: &Matrix<F>| t.mul(m).mul(&tinv);
    let perm = |images: [(usize, i64); 4]| {
        let mut m = Matrix::zeros(4, 4);
        for (row, (col, s)) in images.iter().enumerate() {
            m.data[row][*col] = F::from_int(*s);
        }
        m
    };
    let negation = conj(&diag4([-1, 1, 1, 1]));
    let omega = conj(&diag4([1, 1, -1, -1]));
    let signed_swap = perm([(E, 1), (F_, 1), (KP, -1), (K, -1)]);
    let plain_swap = perm([(E, 1), (F_, 1), (KP, 1), (K, 1)]);
    c.require("negation_is_signed_swap", negation == signed_swap, json!("(E,F,K,K') -> (E,F,-K',-K)"));
    c.require("omega_is_EF_sign", omega == diag4([-1, -1, 1, 1]), json!(null));
    c.require("omega_minus_p_is_plain_swap", proportional_matrices(&omega.mul(&negation), &plain_swap), json!(null));
    c.note("negation_is_plain_swap", json!(proportional_matrices(&negation, &plain_swap)));
    c
}

fn x_map_to_efkk<F: Field>(ctx: &ParameterContext<F>, images_x: &Matrix<F>) -> Vec<NCPoly<F>> {
    let (t, tinv) = coordinate_change(ctx);
    t.mul(images_x).mul(&tinv).data.iter().map(|row| NCPoly::linear(row)).collect()
}

fn linear_nc<F: Field>(entries: &[(usize, F)]) -> NCPoly<F> {
    let mut c = vec![F::zero(); 4];
    for (i, v) in entries {
        c[*i] = v.clone();
    }
    NCPoly::linear(&c)
}

/// The degenerate Heisenberg maps `φ₁, φ₂, φ₃` on `E, F, K, K'` as printed.
pub fn heisenberg_table<F: Field>(ctx: &ParameterContext<F>) -> [Vec<NCPoly<F>>; 3] {
    let (b, q, qi, i) = (&ctx.b, &ctx.q, &ctx.q_inv, F::i());
    let ib = i.mul(b);
    let h = F::from_frac(1, 2);
    let lo = h.mul(&F::one().sub(&ib));
    let hi = h.mul(&F::one().add(&ib));
    [
        vec![linear_nc(&[(F_, b.mul(q))]), linear_nc(&[(E, b.mul(qi).neg())]), linear_nc(&[(KP, ib.neg())]), linear_nc(&[(K, ib.clone())])],
        vec![linear_nc(&[(KP, lo.clone())]), linear_nc(&[(K, hi.clone())]), NCPoly::zero(), NCPoly::zero()],
        vec![linear_nc(&[(KP, i.mul(&lo))]), linear_nc(&[(K, i.mul(&hi).neg())]), NCPoly::zero(), NCPoly::zero()],
    ]
}

/// The Heisenberg maps in `x` coordinates at `a = 0`, `c = ib`, as
/// matrices with row `j` giving the image of `xⱼ`.
pub fn heisenberg_x_matrices<F: Field>(ctx: &ParameterContext<F>) -> [Matrix<F>; 3] {
    let (b, i) = (&ctx.b, F::i());
    let c = i.mul(b);
    let m = |entries: [(usize, F); 4]| {
        let mut out = Matrix::zeros(4, 4);
        for (row, (col, v)) in entries.into_iter().enumerate() {
            out.data[row][col] = v;
        }
        out
    };
    let z = F::zero();
    [
        m([(1, b.mul(&c)), (0, i.neg()), (3, i.mul(b).neg()), (2, c.neg())]),
        m([(2, z.clone()), (3, z.clone()), (0, i.neg()), (1, i.mul(&c).neg())]),
        m([(3, z.clone()), (2, z), (1, b.neg()), (0, i.neg())]),
    ]
}

/// `φ₁` is an automorphism, `φ₂, φ₃` are endomorphisms onto `C[K, K']`, and
/// the twists of the four special point modules are as claimed.
pub fn heisenberg_certificate<F: Field>(ctx: &ParameterContext<F>, cutoff: usize, seed: u64) -> Result<Certificate, AlgebraError> {
    let mut c = Certificate::new(
        "degeneration.heisenberg",
        "On S(0, β, -β) the first Heisenberg map stays an automorphism, the other two become endomorphisms with image C[K, K'], and they permute the four special point modules",
    );
    c.params = Some(ctx.summary());
    c.seed = seed;
    let s = s_efkk(ctx)?;
    let table = heisenberg_table(ctx);
    let from_x = heisenberg_x_matrices(ctx);
    let mut maps = Vec::new();
    for (k, (images, mx)) in table.iter().zip(&from_x).enumerate() {
        let name = format!("phi{}", k + 1);
        let derived = x_map_to_efkk(ctx, mx);
        c.require(&format!("{name}_table_matches_x_formula"), derived == *images, json!(null));
        let map = AlgebraMap::new(s.clone(), s.clone(), images.clone())?;
        let rep = map.check_homomorphism()?;
        c.require(&format!("{name}_is_endomorphism"), rep.holds, json!(rep.failing_relations));
        maps.push(map);
    }
    c.require("phi1_invertible", maps[0].is_invertible_on_generators(), json!(null));
    for (k, map) in maps.iter().enumerate().skip(1) {
        let m = map.linear_matrix();
        let in_kk = (0..4).all(|g| m.data[E][g].is_zero() && m.data[F_][g].is_zero());
        let kills = m.column(K).iter().chain(m.column(KP).iter()).all(|x| x.is_zero());
        c.require(&format!("phi{}_image_is_span_K_Kprime", k + 1), in_kk && m.rank() == 2 && kills, json!(null));
    }
    let o = F::one();
    let z = F::zero();
    let pt = |v: [F; 4]| v.to_vec();
    let k_plus = pt([z.clone(), z.clone(), o.clone(), o.clone()]);
    let k_minus = pt([z.clone(), z.clone(), o.clone(), o.neg()]);
    let l_plus = pt([ctx.q.clone(), o.clone(), z.clone(), z.clone()]);
    let l_minus = pt([ctx.q.neg(), o.clone(), z.clone(), z.clone()]);
    let claims = [
        ("phi1(0,0,1,1)=(0,0,1,-1)", 0, &k_plus, &k_minus),
        ("phi1(0,0,1,-1)=(0,0,1,1)", 0, &k_minus, &k_plus),
        ("phi1(q,1,0,0)=(-q,1,0,0)", 0, &l_plus, &l_minus),
        ("phi1(-q,1,0,0)=(q,1,0,0)", 0, &l_minus, &l_plus),
        ("phi2(0,0,1,1)=(q,1,0,0)", 1, &k_plus, &l_plus),
        ("phi2(0,0,1,-1)=(-q,1,0,0)", 1, &k_minus, &l_minus),
        ("phi3(0,0,1,1)=(-q,1,0,0)", 2, &k_plus, &l_minus),
        ("phi3(0,0,1,-1)=(q,1,0,0)", 2, &k_minus, &l_plus),
    ];
    for (label, k, from, to) in claims {
        let ok = (|| {
            let m = point_module(&s, from, cutoff).ok()?.twist(&maps[k]);
            let n = point_module(&s, to, cutoff).ok()?;
            find_isomorphism(&hom_space(&m, &n, 0), seed, 8).map(|_| ())
        })()
        .is_some();
        c.require(label, ok, json!(null));
    }
    Ok(c)
}

/// For a point `p` of `E_dg` and the Sklyanin presentation, whether `p`
/// spans the successor kernel at `σ(p)`: the `ptscheme` reading of `B(x, σx) = 0`.
pub fn successor_orientation_at<F: Field>(p: &SklyaninParams<F>, pt: &[F]) -> Result<bool, AlgebraError> {
    let pres = p.presentation()?;
    let img: Vec<F> = sklyanin_sigma(p).iter().map(|f| f.eval(pt)).collect();
    let ker = successor_kernel(&pres, &img);
    Ok(ker.len() == 1 && proj_eq(&ker[0], pt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::GaussianRational as G;
    use crate::ptscheme::efkk_components;

    fn ctx() -> ParameterContext<G> {
        ParameterContext::specialized(G::from(2)).unwrap()
    }

    fn sample() -> SklyaninParams<G> {
        // α = 1/3, β = 2 forces γ = −(1+3β)/(3+β) = −7/5.
        SklyaninParams::new(G::rational(1, 3), G::from(2), G::rational(-7, 5))
    }

    #[test]
    fn sample_is_nondegenerate() {
        let p = sample();
        assert!(p.on_constraint() && p.nondegenerate());
        let c = ctx();
        let d = SklyaninParams::degenerate(&c.b);
        assert!(d.on_constraint() && !d.nondegenerate());
    }

    #[test]
    fn pencils() {
        let c = ctx();
        for cert in [pencil_certificate(&sample()), pencil_certificate(&SklyaninParams::degenerate(&c.b))] {
            assert!(cert.passed(), "{:#?}", cert.witness);
        }
        // At α = 0 the two readings of the last quadric coincide.
        assert_eq!(pencil_certificate(&sample()).witness["quadric_3_as_printed_in_pencil"], json!(false));
        assert_eq!(pencil_certificate(&SklyaninParams::degenerate(&c.b)).witness["quadric_3_as_printed_in_pencil"], json!(true));
    }

    #[test]
    fn sigma_preserves_curve() {
        let c = ctx();
        assert!(sigma_preserves_e(&sample()).passed());
        assert!(sigma_preserves_e(&SklyaninParams::degenerate(&c.b)).passed());
        let p = sample();
        let swap: Vec<CPoly<G>> = vec![x(1), x(0), x(2), x(3)];
        assert!(!sigma_map_preserves_e(&p, &swap, "swap").passed());
    }

    #[test]
    fn sigma_preserves_curve_symbolically() {
        let p = SklyaninParams::symbolic();
        assert!(p.on_constraint());
        let cert = sigma_preserves_e(&p);
        assert!(cert.passed(), "{:#?}", cert.witness);
        assert!(pencil_certificate(&p).passed());
    }

    #[test]
    fn bilinear_orientation() {
        let c = ctx();
        let d = SklyaninParams::degenerate(&c.b);
        let od = orientation(&d, &sklyanin_sigma(&d)).unwrap();
        let os = orientation(&sample(), &sklyanin_sigma(&sample())).unwrap();
        assert_eq!(od, Orientation { x_then_sigma: true, sigma_then_x: false });
        assert_eq!(os, od);
        assert!(bilinear_compatibility(&d).unwrap().passed());
        // A cubic map with small integer coefficients.
        let junk: Vec<CPoly<G>> = (0..4).map(|i| x::<G>(i).mul(&sq::<G>((i + 1) % 4)).add(&x::<G>(0).mul(&x(1)).mul(&x(2)).scale(&G::from(i as i64 + 2)))).collect();
        assert!(!bilinear_compatibility_for(&d, &junk, "junk").unwrap().passed());
    }

    #[test]
    fn orientation_agrees_with_successor_kernels() {
        let c = ctx();
        let d = SklyaninParams::degenerate(&c.b);
        let (_, tinv) = coordinate_change(&c);
        let comp = &efkk_components(&c, &G::from(3))[0];
        let pt = tinv.apply(&comp.param);
        assert!(successor_orientation_at(&d, &pt).unwrap());
    }

    #[test]
    fn degenerate_identities() {
        let c = ctx();
        let cert = degeneration_identities(&c);
        assert!(cert.passed(), "{:#?}", cert.witness);
        assert_eq!(cert.witness["printed_intermediate_matches"], json!(false));
        assert_eq!(cert.witness["negation_is_plain_swap"], json!(false));
    }

    #[test]
    fn degenerate_identities_symbolically() {
        let c = ParameterContext::<RationalFunction>::symbolic();
        let cert = degeneration_identities(&c);
        assert!(cert.passed(), "{:#?}", cert.witness);
    }

    #[test]
    fn coordinate_point_lands_on_q() {
        let c = ctx();
        let (t, _) = coordinate_change(&c);
        let img = t.apply(&[G::from(0), G::from(0), G::from(1), G::from(0)]);
        assert!(proj_eq(&img, &[G::from(4), G::from(1), G::from(0), G::from(0)]));
    }

    #[test]
    fn heisenberg_maps() {
        let c = ctx();
        let cert = heisenberg_certificate(&c, 3, 2).unwrap();
        assert!(cert.passed(), "{:#?}", cert.witness);
    }
}
