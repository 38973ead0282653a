use thiserror::Error;

/// Errors reported by the sequency library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequencyError {
    #[error("sign vector must have at least one entry")]
    EmptyVector,

    #[error("degenerate length {0}: operation needs at least 2 entries")]
    DegenerateLength(usize),

    #[error("entry {0} is not +1 or -1")]
    InvalidSign(i64),

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("column length {found} does not match expected length {expected}")]
    ColumnLengthMismatch { expected: usize, found: usize },

    #[error("non-finite entry at row {row}, column {col}")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("size {n} is below the minimum {min}")]
    SizeTooSmall { n: usize, min: usize },

    #[error("size {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("{what} {index} out of range (limit {limit})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },

    #[error("search space too large: n = {n} exceeds the supported bound {max}")]
    SearchSpaceTooLarge { n: usize, max: usize },

    #[error("digit {digit} at position {position} is not below base {base}")]
    InvalidDigit {
        position: usize,
        digit: usize,
        base: usize,
    },

    #[error("index base {index_base} does not match factor column count {columns}")]
    BaseMismatch { index_base: usize, columns: usize },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
