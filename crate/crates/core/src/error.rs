use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("enumeration too large: n = {n} exceeds cap {cap}")]
    EnumerationTooLarge { n: usize, cap: usize },
    #[error("no Dyck paths of odd length (n = {0})")]
    OddDyckLength(usize),
    #[error("path {0} is not a Motzkin path")]
    NotMotzkin(String),
    #[error("path must be nonempty")]
    EmptyPath,
    #[error("index k = {k} exceeds n = {n}")]
    IndexOutOfRange { n: usize, k: usize },
    #[error("matrix for step {n} has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    ShapeMismatch {
        n: usize,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("degenerate recursion: leading weight vanishes at n = {0}")]
    DegenerateRecursion(usize),
    #[error("permutation must have at least {min} elements, got {got}")]
    PermutationTooSmall { min: usize, got: usize },
    #[error("not a permutation of 1..n: {0}")]
    InvalidPermutation(String),
    #[error("suffix divisibility violated: {0}")]
    DivisibilityViolated(String),
    #[error("inexact division by x: {0}")]
    InexactDivision(String),
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}
