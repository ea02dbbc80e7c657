//! The degree-0 localization at `KK'`, read off a window `M_{2k} → M_{2k+2}`.
//!
//! After clearing denominators with `KK'`, the generators of the degree-0
//! part act as `e = u⁻¹EK'`, `f = u⁻¹FK`, `k = K²`, `k⁻¹ = K'²`, each landing
//! in `M_{2k+2}`; dividing by `ι = KK'` gives endomorphisms of `M_{2k}`.

use crate::catalog::{E, F_, K, KP};
use crate::exactfield::linalg::Matrix;
use crate::exactfield::{Field, ParameterContext};
use crate::ncalg::{NCPoly, Word};

use super::{FiniteModule, TruncatedGradedModule};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocalizeError {
    #[error("cutoff {0} too small for the window at degree {1}")]
    WindowTooHigh(usize, usize),
    #[error("KK' is not invertible on the window (rank {0} of {1})")]
    NotInvertible(usize, usize),
}

/// Operators from `M_{2k}` to `M_{2k+2}`, in the order `e, f, k, k⁻¹`, and `ι = KK'`.
#[derive(Clone, Debug)]
pub struct WindowOperators<F: Field> {
    pub degree: usize,
    pub iota: Matrix<F>,
    pub ops: [Matrix<F>; 4],
}

fn two_letters<F: Field>(a: usize, b: usize) -> NCPoly<F> {
    NCPoly::monomial(Word(vec![a as u8, b as u8]), F::one())
}

pub fn window_operators<F: Field>(
    m: &TruncatedGradedModule<F>,
    k: usize,
    ctx: &ParameterContext<F>,
) -> Result<WindowOperators<F>, LocalizeError> {
    let d = 2 * k;
    if m.cutoff < d + 2 {
        return Err(LocalizeError::WindowTooHigh(m.cutoff, d));
    }
    let ui = ctx.u_pow(-1);
    let act = |a, b| m.element_action(&two_letters::<F>(a, b), d);
    Ok(WindowOperators {
        degree: d,
        iota: act(K, KP),
        ops: [act(E, KP).scale(&ui), act(F_, K).scale(&ui), act(K, K), act(KP, KP)],
    })
}

/// The finite module `M[(KK')⁻¹]₀` on the window, when `ι` is bijective there.
pub fn localize_degree0<F: Field>(
    m: &TruncatedGradedModule<F>,
    k: usize,
    ctx: &ParameterContext<F>,
) -> Result<FiniteModule<F>, LocalizeError> {
    let w = window_operators(m, k, ctx)?;
    let n = w.iota.cols;
    let inv = if n == 0 { Some(Matrix::identity(0)) } else { w.iota.inverse() };
    let inv = inv.ok_or_else(|| LocalizeError::NotInvertible(w.iota.rank(), n))?;
    Ok(FiniteModule {
        dim: n,
        actions: w.ops.iter().map(|op| inv.mul(op)).collect(),
        label: format!("{}[(KK')⁻¹]₀", m.label),
    })
}

/// Which defining relations of `U_q(sl₂)` fail for matrices `e, f, k, k⁻¹`:
/// `kk⁻¹ = k⁻¹k = 1`, `ke = q²ek`, `kf = q⁻²fk`, `[e,f] = (k−k⁻¹)/(q−q⁻¹)`.
pub fn uq_relation_failures<F: Field>(v: &FiniteModule<F>, ctx: &ParameterContext<F>) -> Vec<&'static str> {
    let [e, f, k, ki] = [&v.actions[0], &v.actions[1], &v.actions[2], &v.actions[3]];
    let one = Matrix::identity(v.dim);
    let q2 = ctx.q_pow(2);
    let qi2 = ctx.q_pow(-2);
    let denom = ctx.q_minus_qinv().inv().expect("q ≠ ±1");
    let mut bad = Vec::new();
    if k.mul(ki) != one || ki.mul(k) != one {
        bad.push("k k^-1 = 1");
    }
    if k.mul(e) != e.mul(k).scale(&q2) {
        bad.push("k e = q^2 e k");
    }
    if k.mul(f) != f.mul(k).scale(&qi2) {
        bad.push("k f = q^-2 f k");
    }
    if e.mul(f).sub(&f.mul(e)) != k.sub(ki).scale(&denom) {
        bad.push("[e,f] = (k - k^-1)/(q - q^-1)");
    }
    bad
}
