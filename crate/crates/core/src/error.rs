use thiserror::Error;

/// Errors raised by the exact engines.
///
/// Several variants (`NonExactDivision`, `HalfPowerResidue`) can only fire when
/// a divisibility or integrality property that the theory guarantees has been
/// broken, so they point at a bug rather than at bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-exact division: ({dividend}) / ({divisor}) leaves a remainder")]
    NonExactDivision { dividend: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("weight mismatch: |{left}| = {left_weight} but |{right}| = {right_weight}")]
    WeightMismatch {
        left: String,
        left_weight: usize,
        right: String,
        right_weight: usize,
    },

    #[error("skew shape {0} is not a generalized border strip")]
    NotGbs(String),

    #[error("variant mismatch: {0}")]
    VariantMismatch(String),

    #[error("shape {shape} has {cells} cells, more than n = {n}")]
    ShapeTooLarge { shape: String, cells: usize, n: usize },

    #[error("trace retains odd powers of q^(1/2) or a denominator: {0}")]
    HalfPowerResidue(String),

    #[error("variable mismatch: {0:?} vs {1:?}")]
    VariableMismatch(crate::arith::Var, crate::arith::Var),

    #[error("{0}")]
    MethodMismatch(Box<Mismatch>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("weight {n} exceeds the configured maximum {max}")]
    WeightLimit { n: usize, max: usize },
}

/// Two methods returning different values for the same cell.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("methods disagree at lambda = {lambda}, mu = {mu}: {left} gives {left_value}, {right} gives {right_value}")]
pub struct Mismatch {
    pub lambda: String,
    pub mu: String,
    pub left: String,
    pub left_value: String,
    pub right: String,
    pub right_value: String,
}

pub type Result<T> = std::result::Result<T, Error>;
