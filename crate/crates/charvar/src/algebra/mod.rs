//! Coefficient arithmetic: scalars, multivariate polynomials, and
//! valuation-carrying truncated series.

mod poly;
mod scalar;
mod series;

pub use poly::MultiPoly;
pub use scalar::{Scalar, DEFAULT_TOL};
pub use series::{ValuedSeries, Valuation, DEFAULT_TRUNC};


use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no square root in exact Gaussian-rational mode")]
    NoExactSqrt,
    #[error("arity mismatch: polynomial in {expected} variables evaluated at {got} coordinates")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polynomials over different variable lists: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("division by the zero series")]
    DivisionByZeroSeries,
    #[error("series composition requires an inner series of positive valuation")]
    BadComposition,
}

impl AlgebraError {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            AlgebraError::DivisionByZero => "DIVISION_BY_ZERO",
            AlgebraError::NoExactSqrt => "NO_EXACT_SQRT",
            AlgebraError::ArityMismatch { .. } => "ARITY_MISMATCH",
            AlgebraError::VariableMismatch(..) => "VARIABLE_MISMATCH",
            AlgebraError::DivisionByZeroSeries => "DIVISION_BY_ZERO_SERIES",
            AlgebraError::BadComposition => "BAD_COMPOSITION",
        }
    }
}

/// Ring operations shared by [`Scalar`] and [`ValuedSeries`], so the 2x2
/// matrix calculus can run over either coefficient type.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError>;
    /// A square root, when one exists in the coefficient domain.
    fn try_sqrt(&self) -> Result<Self, AlgebraError>;
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn from_int(n: i64) -> Self {
        Scalar::from_int(n)
    }
    fn add(&self, rhs: &Self) -> Self {
        Scalar::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Scalar::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Scalar::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Scalar::try_div(self, rhs)
    }
    fn try_sqrt(&self) -> Result<Self, AlgebraError> {
        Scalar::sqrt(self)
    }
}

impl Coeff for ValuedSeries {
    fn zero() -> Self {
        ValuedSeries::zero()
    }
    fn one() -> Self {
        ValuedSeries::constant(Scalar::one())
    }
    fn from_int(n: i64) -> Self {
        ValuedSeries::constant(Scalar::from_int(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        ValuedSeries::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        ValuedSeries::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        ValuedSeries::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        ValuedSeries::neg(self)
    }
    fn is_zero(&self) -> bool {
        ValuedSeries::is_zero(self)
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        ValuedSeries::try_div(self, rhs)
    }
    fn try_sqrt(&self) -> Result<Self, AlgebraError> {
        ValuedSeries::sqrt(self)
    }
}
