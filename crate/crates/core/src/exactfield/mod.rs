//! Exact scalars: Gaussian rationals, multivariate polynomials and rational
//! functions over them, the deformation parameters, and exact linear algebra.

mod gaussian;
pub mod linalg;
mod params;
mod poly;
mod ratfunc;

use std::fmt;

pub use gaussian::GaussianRational;
pub use params::{quantum_integer, Mode, ParamSummary, ParameterContext};
pub use poly::MultiPoly;
pub use ratfunc::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("substitution makes a denominator vanish")]
    PoleOnSubstitution,
}

/// The operations every scalar field in the tower supports.
///
/// Methods take references so that generic code never needs operator bounds.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, FieldError>;
    fn from_gaussian(g: GaussianRational) -> Self;
    /// The value as a Gaussian rational when it is a constant.
    fn to_gaussian(&self) -> Option<GaussianRational>;
    /// Rough size of the representation, used to prefer cheap pivots.
    fn cost(&self) -> u64;

    fn div(&self, o: &Self) -> Result<Self, FieldError> {
        Ok(self.mul(&o.inv()?))
    }

    fn from_int(n: i64) -> Self {
        Self::from_gaussian(GaussianRational::from(n))
    }

    fn from_frac(n: i64, d: i64) -> Self {
        Self::from_gaussian(GaussianRational::rational(n, d))
    }

    fn i() -> Self {
        Self::from_gaussian(GaussianRational::i())
    }

    fn pow(&self, e: i64) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// True when elimination should stay fraction-free (polynomial entries).
    fn prefers_fraction_free() -> bool {
        false
    }

    /// Division known to be exact; fraction-free elimination relies on it.
    fn div_exact(&self, o: &Self) -> Self {
        self.div(o).expect("exact division by a nonzero pivot")
    }

    /// Rescale a row so that its entries become polynomial, if that notion applies.
    fn clear_denominators(_row: &mut [Self]) {}
}

/// Sum of a slice of field elements.
pub fn sum<F: Field>(items: impl IntoIterator<Item = F>) -> F {
    items.into_iter().fold(F::zero(), |a, b| a.add(&b))
}
