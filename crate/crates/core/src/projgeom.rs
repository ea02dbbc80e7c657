//! Commutative geometry in `P(S₁*)` with coordinates `(E, F, K, K')`.

use serde_json::json;

use crate::catalog::Lambda;
use crate::certificate::Certificate;
use crate::cpoly::{monomials, CPoly, HomogeneousIdeal};
use crate::exactfield::linalg::{gauss_jordan, Matrix};
use crate::exactfield::{Field, GaussianRational, ParameterContext, RationalFunction};
use crate::ptscheme::{proj_eq, render_point};

pub const NAMES: [&str; 4] = ["E", "F", "K", "K'"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("the two points coincide projectively")]
    CoincidentPoints,
    #[error("expected two independent linear forms, got rank {0}")]
    NotALine(usize),
    #[error("point {0} is not on C with ξ₃ ≠ 0")]
    NotOnConic(String),
    #[error("the Hilbert function did not stabilize by degree {0}")]
    NotStable(u32),
}

/// A line, stored as its 2-dimensional space of linear forms in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjLine<F: Field> {
    perp: Vec<Vec<F>>,
}

impl<F: Field> ProjLine<F> {
    pub fn from_forms(rows: Vec<Vec<F>>) -> Result<Self, GeomError> {
        let ech = gauss_jordan(&Matrix::from_rows(rows));
        if ech.pivots.len() != 2 {
            return Err(GeomError::NotALine(ech.pivots.len()));
        }
        Ok(Self { perp: ech.rows })
    }

    /// The line through two distinct points.
    pub fn through(p: &[F], p2: &[F]) -> Result<Self, GeomError> {
        let ker = Matrix::from_rows(vec![p.to_vec(), p2.to_vec()]).nullspace();
        if ker.len() != 2 {
            return Err(GeomError::CoincidentPoints);
        }
        Self::from_forms(ker)
    }

    pub fn perp(&self) -> &[Vec<F>] {
        &self.perp
    }

    pub fn forms(&self) -> Vec<CPoly<F>> {
        self.perp.iter().map(|r| CPoly::linear(r)).collect()
    }

    /// Two points spanning the line.
    pub fn points(&self) -> [Vec<F>; 2] {
        let mut k = Matrix::from_rows(self.perp.clone()).nullspace().into_iter();
        [k.next().expect("rank 2"), k.next().expect("rank 2")]
    }

    /// `p_ij = a_i b_j − a_j b_i` for `ij` in `01, 02, 03, 12, 13, 23`.
    pub fn pluecker(&self) -> [F; 6] {
        let [a, b] = self.points();
        let m = |i: usize, j: usize| a[i].mul(&b[j]).sub(&a[j].mul(&b[i]));
        [m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)]
    }

    pub fn pluecker_relation_holds(&self) -> bool {
        let p = self.pluecker();
        p[0].mul(&p[5]).sub(&p[1].mul(&p[4])).add(&p[2].mul(&p[3])).is_zero()
    }

    pub fn contains_point(&self, p: &[F]) -> bool {
        self.perp.iter().all(|r| r.iter().zip(p).fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b))).is_zero())
    }

    /// Two lines meet iff their four defining forms have rank at most 3.
    pub fn meets(&self, o: &Self) -> bool {
        let mut rows = self.perp.clone();
        rows.extend(o.perp.iter().cloned());
        Matrix::from_rows(rows).rank() <= 3
    }

    /// `f` restricted to the line, as a form in two variables.
    pub fn restrict(&self, f: &CPoly<F>) -> CPoly<F> {
        let [a, b] = self.points();
        let images: Vec<CPoly<F>> = (0..4).map(|i| CPoly::linear(&[a[i].clone(), b[i].clone()])).collect();
        f.substitute(&images)
    }

    pub fn lies_on(&self, f: &CPoly<F>) -> bool {
        self.restrict(f).is_zero()
    }

    pub fn render(&self) -> Vec<String> {
        self.forms().iter().map(|f| f.render(&NAMES)).collect()
    }
}

/// A quadric `xᵀ G x = 0`.
#[derive(Clone, Debug)]
pub struct Quadric<F: Field> {
    pub gram: Matrix<F>,
}

impl<F: Field> Quadric<F> {
    pub fn from_form(f: &CPoly<F>) -> Self {
        let n = f.nvars();
        let half = F::from_frac(1, 2);
        let mut gram = Matrix::zeros(n, n);
        for (e, c) in f.terms() {
            let idx: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat(i).take(e[i] as usize)).collect();
            assert_eq!(idx.len(), 2, "quadratic form expected");
            if idx[0] == idx[1] {
                gram.data[idx[0]][idx[0]] = c.clone();
            } else {
                gram.data[idx[0]][idx[1]] = c.mul(&half);
                gram.data[idx[1]][idx[0]] = c.mul(&half);
            }
        }
        Self { gram }
    }

    pub fn form(&self) -> CPoly<F> {
        let n = self.gram.rows;
        let mut f = CPoly::zero(n);
        for i in 0..n {
            for j in 0..n {
                f = f.add(&CPoly::var(n, i).mul(&CPoly::var(n, j)).scale(&self.gram.data[i][j]));
            }
        }
        f
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    /// The projective singular locus, as a basis of the kernel of the Gram matrix.
    pub fn singular_locus(&self) -> Vec<Vec<F>> {
        self.gram.nullspace()
    }

    pub fn gradient_vanishes_at(&self, p: &[F]) -> bool {
        self.gram.apply(p).iter().all(|x| x.is_zero())
    }
}

/// `g_λ = κ⁻²EF + K² − (λ+λ⁻¹)KK' + K'²`, and `KK'` at `0, ∞`.
pub fn g_lambda<F: Field>(l: &Lambda<F>, ctx: &ParameterContext<F>) -> CPoly<F> {
    let v = |i| CPoly::<F>::var(4, i);
    let kk = v(2).mul(&v(3));
    match l.value() {
        None => kk,
        Some(l) => {
            let k2inv = ctx.kappa.mul(&ctx.kappa).inv().expect("κ ≠ 0");
            let s = l.add(&l.inv().expect("nonzero"));
            v(0).mul(&v(1)).scale(&k2inv).add(&v(2).pow(2)).sub(&kk.scale(&s)).add(&v(3).pow(2))
        }
    }
}

pub fn pencil_quadric<F: Field>(l: &Lambda<F>, ctx: &ParameterContext<F>) -> Quadric<F> {
    Quadric::from_form(&g_lambda(l, ctx))
}

/// Points of `C: K' = EF + κ²K² = 0`, `C': K = EF + κ²K'² = 0` and `L: K = K' = 0`.
pub fn point_on_c<F: Field>(ctx: &ParameterContext<F>, t: &F) -> Vec<F> {
    vec![ctx.kappa.mul(&t.mul(t)), ctx.kappa.neg(), t.clone(), F::zero()]
}

pub fn point_on_cp<F: Field>(ctx: &ParameterContext<F>, t: &F) -> Vec<F> {
    vec![ctx.kappa.mul(&t.mul(t)), ctx.kappa.neg(), F::zero(), t.clone()]
}

pub fn point_on_l<F: Field>(t: &F) -> Vec<F> {
    vec![F::one(), t.clone(), F::zero(), F::zero()]
}

/// `C ∪ C'` as the ideal `(KK', g_μ)`.
pub fn conics_ideal<F: Field>(ctx: &ParameterContext<F>, mu: &F) -> Vec<CPoly<F>> {
    vec![CPoly::var(4, 2).mul(&CPoly::var(4, 3)), g_lambda(&Lambda::Finite(mu.clone()), ctx)]
}

/// A univariate polynomial over `F`, lowest coefficient first.
fn trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_rem<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead = b.last().expect("nonzero divisor").inv().expect("nonzero");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().mul(&lead);
        for (i, x) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&c.mul(x));
        }
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_div<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead = b.last().expect("nonzero divisor").inv().expect("nonzero");
    if r.len() < b.len() {
        return vec![];
    }
    let mut q = vec![F::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().mul(&lead);
        q[shift] = c.clone();
        for (i, x) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&c.mul(x));
        }
        r = trim(r);
    }
    q
}

fn poly_gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Square root of a Gaussian rational that is a rational square or minus one.
fn rational_sqrt(g: &GaussianRational) -> Option<GaussianRational> {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{Signed, Zero};
    if !g.im.is_zero() {
        return None;
    }
    let neg = g.re.is_negative();
    let a = g.re.abs();
    let (n, d) = (a.numer().clone(), a.denom().clone());
    let (sn, sd): (BigInt, BigInt) = (n.sqrt(), d.sqrt());
    if &sn * &sn != n || &sd * &sd != d {
        return None;
    }
    let r = BigRational::new(sn, sd);
    Some(if neg { GaussianRational::new(BigRational::zero(), r) } else { GaussianRational::from_rational(r) })
}

/// The singular members of the pencil: roots of `det(gram(λ))` together
/// with `0` and `∞`, where the member is `KK'`. Roots are found exactly
/// from the squarefree part of the numerator; `None` if it has degree above
/// two or an irrational root.
pub fn pencil_singulars(ctx: &ParameterContext<RationalFunction>) -> Option<Vec<Lambda<RationalFunction>>> {
    let l = RationalFunction::var("lambda");
    let d = pencil_quadric(&Lambda::Finite(l), ctx).gram.det();
    let coeffs: Vec<RationalFunction> =
        d.numerator().coefficients_in("lambda").into_iter().map(RationalFunction::from_poly).collect();
    let coeffs = trim(coeffs);
    let deriv: Vec<RationalFunction> =
        coeffs.iter().enumerate().skip(1).map(|(k, c)| c.mul(&RationalFunction::from_int(k as i64))).collect();
    let g = poly_gcd(&coeffs, &deriv);
    let sqfree = poly_div(&coeffs, &g);
    let lead = sqfree.last()?.inv().ok()?;
    let m: Vec<RationalFunction> = sqfree.iter().map(|c| c.mul(&lead)).collect();
    let mut roots = Vec::new();
    match m.len() {
        0 | 1 => {}
        2 => roots.push(m[0].neg()),
        3 => {
            let disc = m[1].mul(&m[1]).sub(&m[0].mul(&RationalFunction::from_int(4))).to_gaussian()?;
            let r = RationalFunction::from_gaussian(rational_sqrt(&disc)?);
            let half = RationalFunction::from_frac(1, 2);
            roots.push(m[1].neg().add(&r).mul(&half));
            roots.push(m[1].neg().sub(&r).mul(&half));
        }
        _ => return None,
    }
    let mut out: Vec<Lambda<RationalFunction>> = vec![Lambda::Zero, Lambda::Infinity];
    for r in roots {
        if r.is_zero() {
            continue;
        }
        out.push(Lambda::Finite(r));
    }
    Some(out)
}

/// `s = ∞` is `None`. Family 1: `κ⁻¹E − s(K−λK') = sκ⁻¹F + (K−λ⁻¹K') = 0`;
/// family 2 exchanges `λ` and `λ⁻¹`. At `λ = ±1` the families coincide.
pub fn ruling_line<F: Field>(l: &F, s: Option<&F>, family: u8, ctx: &ParameterContext<F>) -> ProjLine<F> {
    let li = l.inv().expect("λ ≠ 0");
    let (a, b) = if family == 1 { (l.clone(), li) } else { (li, l.clone()) };
    let ki = ctx.kappa.inv().expect("κ ≠ 0");
    let z = F::zero();
    let rows = match s {
        Some(s) => vec![
            vec![ki.clone(), z.clone(), s.neg(), s.mul(&a)],
            vec![z.clone(), s.mul(&ki), F::one(), b.neg()],
        ],
        None => vec![vec![z.clone(), z.clone(), F::one(), a.neg()], vec![z.clone(), ki, z.clone(), z]],
    };
    ProjLine::from_forms(rows).expect("ruling lines have rank 2")
}

/// Which ruling of `Q(λ)`, `λ ∉ {0, ±1, ∞}`, a line on it belongs to:
/// lines of one ruling are disjoint, lines of opposite rulings meet.
pub fn family_tag<F: Field>(line: &ProjLine<F>, l: &F, ctx: &ParameterContext<F>) -> u8 {
    let base = ruling_line(l, Some(&F::zero()), 1, ctx);
    if *line == base || !line.meets(&base) {
        1
    } else {
        2
    }
}

/// Length of `ℓ ∩ V(curve)` from the stable value of the Hilbert function.
pub fn intersection_length<F: Field>(line: &ProjLine<F>, curve: &[CPoly<F>]) -> Result<usize, GeomError> {
    let mut gens = line.forms();
    gens.extend(curve.iter().cloned());
    HomogeneousIdeal::new(4, gens).stable_hilbert_value(3, 12).ok_or(GeomError::NotStable(12))
}

/// True iff the line meets `C ∪ C'` with total multiplicity two.
pub fn secant_test<F: Field>(line: &ProjLine<F>, ctx: &ParameterContext<F>) -> Result<bool, GeomError> {
    let mu = F::from_int(2);
    Ok(intersection_length(line, &conics_ideal(ctx, &mu))? == 2)
}

/// `Q_p: ξ₁FK + ξ₂EK + ξ₃(−EF + κ²K² − κ²K'²)` for `p = (ξ₁, ξ₂, ξ₃, 0)` on `C`.
pub fn cone_qp<F: Field>(p: &[F], ctx: &ParameterContext<F>) -> Result<Quadric<F>, GeomError> {
    let k2 = ctx.kappa.mul(&ctx.kappa);
    let on_c = p[3].is_zero() && p[0].mul(&p[1]).add(&k2.mul(&p[2]).mul(&p[2])).is_zero();
    if !on_c || p[2].is_zero() {
        return Err(GeomError::NotOnConic(render_point(p)));
    }
    let v = |i| CPoly::<F>::var(4, i);
    let inner = v(0).mul(&v(1)).neg().add(&v(2).pow(2).scale(&k2)).sub(&v(3).pow(2).scale(&k2));
    let f = v(1).mul(&v(2)).scale(&p[0]).add(&v(0).mul(&v(2)).scale(&p[1])).add(&inner.scale(&p[2]));
    Ok(Quadric::from_form(&f))
}

/// For `p = C(a)`, `p' = C(b)` on the conic of the plane `K' = 0` and `p''`
/// the third point of their line on `L`, the triple `(σp, σ⁻¹p', p'')` is
/// collinear when `σ = diag(d)` restricts `σ_S` to `C`.
pub fn collinearity_invariance<F: Field>(ctx: &ParameterContext<F>, d: &[F; 3], a: &F, b: &F) -> Certificate {
    let mut cert = Certificate::new(
        "lines.collinearity",
        "if p, p' ∈ C and p'' ∈ L are collinear then so are σp, σ⁻¹p', p''",
    );
    let k = &ctx.kappa;
    let pa = vec![k.mul(&a.mul(a)), k.neg(), a.clone()];
    let pb = vec![k.mul(&b.mul(b)), k.neg(), b.clone()];
    let ppp = vec![a.mul(b), F::one(), F::zero()];
    let det3 = |r: [&Vec<F>; 3]| Matrix::from_rows(r.iter().map(|x| x.to_vec()).collect()).det();
    cert.require("original_triple_collinear", det3([&pa, &pb, &ppp]).is_zero(), render_point(&ppp));
    let (Ok(i0), Ok(i1), Ok(i2)) = (d[0].inv(), d[1].inv(), d[2].inv()) else {
        cert.require("sigma_invertible", false, "zero diagonal entry");
        return cert;
    };
    let sp: Vec<F> = pa.iter().zip(d.iter()).map(|(x, y)| x.mul(y)).collect();
    let sinv = [i0, i1, i2];
    let spb: Vec<F> = pb.iter().zip(sinv.iter()).map(|(x, y)| x.mul(y)).collect();
    let dt = det3([&sp, &spb, &ppp]);
    cert.require("moved_triple_collinear", dt.is_zero(), json!({ "determinant": dt.to_string() }));
    cert
}

/// The pencil: base locus, completeness, singular members, `C = Q(λ) ∩ {K'=0}`,
/// vertices, and both rulings with the printed variants tested by substitution.
pub fn pencil_certificates(ctx: &ParameterContext<RationalFunction>) -> Vec<Certificate> {
    type R = RationalFunction;
    let mut out = Vec::new();
    let v = |i| CPoly::<R>::var(4, i);
    let k2inv = ctx.kappa.mul(&ctx.kappa).inv().expect("κ ≠ 0");
    let base_form = v(0).mul(&v(1)).scale(&k2inv).add(&v(2).pow(2)).add(&v(3).pow(2));
    let kk = v(2).mul(&v(3));

    let mut base = Certificate::new("pencil.base_locus", "the base locus of the pencil is C ∪ C'");
    let base_ideal = HomogeneousIdeal::new(4, vec![kk.clone(), base_form.clone()]);
    for (l1, l2) in [(2, 3), (5, -7)] {
        let pair = HomogeneousIdeal::new(
            4,
            vec![g_lambda(&Lambda::Finite(R::from_int(l1)), ctx), g_lambda(&Lambda::Finite(R::from_int(l2)), ctx)],
        );
        for deg in [2, 3] {
            base.require(&format!("ideal_equality.{l1}.{l2}.deg{deg}"), pair.same_component(&base_ideal, deg), json!(null));
        }
    }
    let t = R::var("t");
    let on_c = [point_on_c(ctx, &t), point_on_cp(ctx, &t)]
        .iter()
        .all(|p| kk.eval(p).is_zero() && base_form.eval(p).is_zero());
    base.require("conics_in_base_locus", on_c, json!(null));
    out.push(base);

    let mut comp = Certificate::new("pencil.completeness", "the Q(λ) are the only quadrics containing C ∪ C'");
    let monos = monomials(4, 2);
    let mut rows = Vec::new();
    for k in 1..=6 {
        let tk = R::from_int(k);
        for p in [point_on_c(ctx, &tk), point_on_cp(ctx, &tk)] {
            rows.push(monos.iter().map(|m| CPoly::monomial(m.clone(), R::one()).eval(&p)).collect());
        }
    }
    let sols = Matrix::from_rows(rows).nullspace();
    comp.require("space_dimension_two", sols.len() == 2, json!({ "dimension": sols.len() }));
    let span_has = |f: &CPoly<R>| {
        let mut m: Vec<Vec<R>> = sols.clone();
        m.push(monos.iter().map(|e| f.coefficient(e)).collect());
        Matrix::from_rows(m).rank() == sols.len()
    };
    comp.require(
        "pencil_members_in_space",
        span_has(&kk) && span_has(&g_lambda(&Lambda::Finite(R::from_int(2)), ctx)),
        json!(null),
    );
    out.push(comp);

    let mut sing = Certificate::new(
        "pencil.singular",
        "the singular quadrics in the pencil are Q(±1) with vertices (0,0,1,±1), and Q(0) = Q(∞) = {KK' = 0}",
    );
    match pencil_singulars(ctx) {
        None => {
            sing.require("roots_found", false, "numerator of det(gram) not solvable exactly");
        }
        Some(set) => {
            let mut finite: Vec<R> = set.iter().filter_map(|l| l.value().cloned()).collect();
            finite.sort_by_key(|r| r.to_string());
            let ok = finite.len() == 2 && finite.contains(&R::one()) && finite.contains(&R::one().neg());
            sing.require("singular_set", ok, finite.iter().map(|r| r.to_string()).collect::<Vec<_>>());
        }
    }
    for (sgn, vertex) in [(1, vec![R::zero(), R::zero(), R::one(), R::one()]), (-1, vec![R::zero(), R::zero(), R::one(), R::one().neg()])] {
        let ker = pencil_quadric(&Lambda::Finite(R::from_int(sgn)), ctx).singular_locus();
        sing.require(
            &format!("vertex_of_Q({sgn})"),
            ker.len() == 1 && proj_eq(&ker[0], &vertex),
            ker.iter().map(|k| render_point(k)).collect::<Vec<_>>(),
        );
    }
    let kk_rank = Quadric::from_form(&kk).gram.rank();
    sing.require("Q(0)_rank_two", kk_rank == 2, json!({ "rank": kk_rank }));
    let generic = pencil_quadric(&Lambda::Finite(R::from_int(3)), ctx).gram.rank();
    sing.require("generic_member_smooth", generic == 4, json!({ "rank": generic }));
    out.push(sing);

    let mut sect = Certificate::new("pencil.sections", "C = Q(λ) ∩ {K'=0} and C' = Q(λ) ∩ {K=0} for λ ≠ 0, ∞");
    let k2 = ctx.kappa.mul(&ctx.kappa);
    for l in [2, -5] {
        let g = g_lambda(&Lambda::Finite(R::from_int(l)), ctx);
        let c1 = HomogeneousIdeal::new(4, vec![g.clone(), v(3)]);
        let c2 = HomogeneousIdeal::new(4, vec![v(0).mul(&v(1)).add(&v(2).pow(2).scale(&k2)), v(3)]);
        let d1 = HomogeneousIdeal::new(4, vec![g, v(2)]);
        let d2 = HomogeneousIdeal::new(4, vec![v(0).mul(&v(1)).add(&v(3).pow(2).scale(&k2)), v(2)]);
        sect.require(&format!("C.lambda{l}"), c1.same_component(&c2, 2) && c1.same_component(&c2, 3), json!(null));
        sect.require(&format!("C'.lambda{l}"), d1.same_component(&d2, 2) && d1.same_component(&d2, 3), json!(null));
    }
    out.push(sect);

    out.push(ruling_certificate(ctx));
    out
}

/// Both rulings lie on `Q(λ)` for generic `λ` and `s`, including `s = 0, ∞`;
/// the lines on the cones use `K ∓ K'`. Printed variants are tested and reported.
pub fn ruling_certificate(ctx: &ParameterContext<RationalFunction>) -> Certificate {
    type R = RationalFunction;
    let mut cert = Certificate::new(
        "pencil.rulings",
        "the two rulings on Q(λ), and the lines on the cones Q(±1)",
    );
    let l = R::var("lambda");
    let s = R::var("s");
    let g = g_lambda(&Lambda::Finite(l.clone()), ctx);
    for fam in [1u8, 2] {
        for (tag, sv) in [("generic", Some(&s)), ("zero", Some(&R::zero())), ("infinity", None)] {
            let line = ruling_line(&l, sv, fam, ctx);
            cert.require(&format!("family{fam}.s_{tag}"), line.lies_on(&g), line.render());
        }
    }
    let s0 = ruling_line(&l, Some(&R::zero()), 1, ctx);
    let expected_s0 = ProjLine::from_forms(vec![
        vec![R::one(), R::zero(), R::zero(), R::zero()],
        vec![R::zero(), R::zero(), R::one(), l.inv().unwrap().neg()],
    ])
    .unwrap();
    cert.require("family1.s_zero_is_E=K-λ⁻¹K'=0", s0 == expected_s0, s0.render());

    // s = ∞ in family 1 works out to F = K − λK' = 0; the form K + λ⁻¹K' is also tested.
    let printed_inf = ProjLine::from_forms(vec![
        vec![R::zero(), R::one(), R::zero(), R::zero()],
        vec![R::zero(), R::zero(), R::one(), l.inv().unwrap()],
    ])
    .unwrap();
    let computed_inf = ruling_line(&l, None, 1, ctx);
    cert.note(
        "family1.s_infinity",
        json!({
            "computed": computed_inf.render(),
            "F=K+λ⁻¹K'=0 lies on Q(λ)": printed_inf.lies_on(&g),
        }),
    );

    // The opposite rulings meet and lines of one ruling are disjoint.
    let a1 = ruling_line(&l, Some(&R::from_int(2)), 1, ctx);
    let b1 = ruling_line(&l, Some(&R::from_int(5)), 1, ctx);
    let a2 = ruling_line(&l, Some(&R::from_int(2)), 2, ctx);
    cert.require("rulings_are_distinct_families", !a1.meets(&b1) && a1.meets(&a2), json!(null));

    // Cones: which of K − K' and K + K' gives lines on Q(1) and on Q(−1).
    for sign in [1i64, -1] {
        let gs = g_lambda(&Lambda::Finite(R::from_int(sign)), ctx);
        let vertex = vec![R::zero(), R::zero(), R::one(), R::from_int(sign)];
        for (label, c) in [("K-K'", -1i64), ("K+K'", 1i64)] {
            let ki = ctx.kappa.inv().unwrap();
            let line = ProjLine::from_forms(vec![
                vec![ki.clone(), R::zero(), s.neg(), s.mul(&R::from_int(c)).neg()],
                vec![R::zero(), s.mul(&ki), R::one(), R::from_int(c)],
            ])
            .unwrap();
            let on = line.lies_on(&gs);
            let expect = (sign == 1) == (c == -1);
            cert.require(
                &format!("cone_Q({sign}).{label}"),
                on == expect,
                json!({ "lies_on": on, "through_vertex": line.contains_point(&vertex) }),
            );
        }
    }
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::GaussianRational as G;

    type R = RationalFunction;

    fn rctx() -> ParameterContext<R> {
        ParameterContext::specialized(G::from(2)).unwrap()
    }

    fn gctx() -> ParameterContext<G> {
        ParameterContext::specialized(G::from(2)).unwrap()
    }

    #[test]
    fn line_through_examples() {
        let (o, z) = (G::one(), G::zero());
        let l = ProjLine::through(&[o.clone(), z.clone(), z.clone(), z.clone()], &[z.clone(), o.clone(), z.clone(), z.clone()]).unwrap();
        let kk = ProjLine::from_forms(vec![vec![z.clone(), z.clone(), o.clone(), z.clone()], vec![z.clone(), z.clone(), z.clone(), o.clone()]]).unwrap();
        assert_eq!(l, kk);
        assert!(l.pluecker_relation_holds());
        assert_eq!(ProjLine::through(&[o.clone(), o.clone(), z.clone(), z.clone()], &[G::from(3), G::from(3), z.clone(), z.clone()]), Err(GeomError::CoincidentPoints));

        let xs: Vec<R> = ["x1", "x2", "x3"].iter().map(|n| R::var(n)).collect();
        let ys: Vec<R> = ["y1", "y2", "y4"].iter().map(|n| R::var(n)).collect();
        let p = vec![xs[0].clone(), xs[1].clone(), xs[2].clone(), R::zero()];
        let p2 = vec![ys[0].clone(), ys[1].clone(), R::zero(), ys[2].clone()];
        let line = ProjLine::through(&p, &p2).unwrap();
        let f1 = vec![xs[2].mul(&ys[2]), R::zero(), xs[0].mul(&ys[2]).neg(), xs[2].mul(&ys[0]).neg()];
        let f2 = vec![R::zero(), xs[2].mul(&ys[2]), xs[1].mul(&ys[2]).neg(), xs[2].mul(&ys[1]).neg()];
        assert_eq!(line, ProjLine::from_forms(vec![f1, f2]).unwrap());
        assert!(line.pluecker_relation_holds());
    }

    #[test]
    fn pencil_claims() {
        for c in pencil_certificates(&rctx()) {
            assert!(c.passed(), "{}: {:?}", c.check_id, c.witness);
        }
    }

    #[test]
    fn printed_infinity_line_is_off_the_quadric() {
        let c = ruling_certificate(&rctx());
        assert_eq!(c.witness["family1.s_infinity"]["F=K+λ⁻¹K'=0 lies on Q(λ)"], json!(false));
    }

    #[test]
    fn intersection_lengths() {
        let c = gctx();
        let (o, z) = (G::one(), G::zero());
        let curve = conics_ideal(&c, &G::from(2));
        let l = ProjLine::from_forms(vec![vec![z.clone(), z.clone(), o.clone(), z.clone()], vec![z.clone(), z.clone(), z.clone(), o.clone()]]).unwrap();
        assert_eq!(intersection_length(&l, &curve), Ok(2));
        let tangent = ProjLine::from_forms(vec![vec![z.clone(), z.clone(), z.clone(), o.clone()], vec![z.clone(), o.clone(), z.clone(), z.clone()]]).unwrap();
        assert_eq!(intersection_length(&tangent, &curve), Ok(2));
        let random = ProjLine::through(&[o.clone(), G::from(2), G::from(3), G::from(5)], &[G::from(7), G::from(-1), G::from(4), o.clone()]).unwrap();
        assert_eq!(intersection_length(&random, &curve), Ok(0));
        assert!(!secant_test(&random, &c).unwrap());
        let sec = ProjLine::through(&point_on_c(&c, &o), &point_on_cp(&c, &o)).unwrap();
        assert!(secant_test(&sec, &c).unwrap());
        // A line inside the plane K' = 0 is secant to C.
        let inplane = ProjLine::through(&point_on_c(&c, &o), &point_on_c(&c, &G::from(3))).unwrap();
        assert!(secant_test(&inplane, &c).unwrap());
    }

    #[test]
    fn cone_qp_is_singular_at_p_and_contains_c_prime() {
        let c = rctx();
        let t = R::var("t");
        let p = point_on_c(&c, &R::from_int(3));
        let qp = cone_qp(&p, &c).unwrap();
        assert!(qp.is_symmetric());
        assert!(qp.gradient_vanishes_at(&p));
        assert!(qp.form().eval(&point_on_cp(&c, &t)).is_zero());
        assert!(cone_qp(&[R::one(), R::zero(), R::zero(), R::zero()], &c).is_err());
    }

    #[test]
    fn collinearity() {
        let c = rctx();
        let (a, b) = (R::var("a"), R::var("b"));
        let o = R::one();
        assert!(collinearity_invariance(&c, &[c.q.clone(), c.q_inv.clone(), o.clone()], &a, &b).passed());
        assert!(collinearity_invariance(&c, &[o.clone(), o.clone(), o.clone()], &a, &b).passed());
        assert!(!collinearity_invariance(&c, &[c.q.clone(), c.q.clone(), o.clone()], &a, &b).passed());
    }

    #[test]
    fn family_tags() {
        let c = rctx();
        let l = R::from_int(3);
        assert_eq!(family_tag(&ruling_line(&l, Some(&R::from_int(4)), 1, &c), &l, &c), 1);
        assert_eq!(family_tag(&ruling_line(&l, Some(&R::from_int(4)), 2, &c), &l, &c), 2);
        assert_eq!(family_tag(&ruling_line(&l, None, 2, &c), &l, &c), 2);
    }
}
