use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative exponent {value} at row {row}, column {col}")]
    InvalidExponent { row: usize, col: usize, value: i64 },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("denominator vanishes at N = {0}")]
    PoleAtN(i64),

    #[error("index component {index} exceeds bound ({value} > {bound})")]
    IndexOutOfRange {
        index: usize,
        value: u32,
        bound: u32,
    },

    #[error("row {row} of the index matrix sums to {actual}, expected {expected}")]
    RowSumMismatch {
        row: usize,
        expected: u32,
        actual: u32,
    },

    #[error("guard exceeded: {what} is {value}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("dimension N = {n} is below the validity bound {required}")]
    DimensionTooSmall { n: usize, required: usize },

    #[error("cannot parse expression at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("coefficient {0} does not fit the scalar type")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
