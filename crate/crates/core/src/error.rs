use thiserror::Error;

use crate::partitions::{Partition, RowSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("cannot parse {0:?} as comma-separated parts")]
    ParsePartition(String),

    #[error("strip size must be positive")]
    EmptyStrip,

    #[error("index set {set:?} is not admissible for {partition}")]
    InvalidRowSet { partition: Partition, set: RowSet },

    #[error("row lengths {0:?} do not form a partition")]
    RaggedRows(Vec<usize>),

    #[error("tableau entries must be positive")]
    NonPositiveEntry,

    #[error("declared shape {declared} does not match row lengths {actual:?}")]
    ShapeMismatch { declared: Partition, actual: Vec<usize> },

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("letter {letter} outside alphabet 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("crystal operator index {index} outside 1..{n}")]
    ArrowOutOfRange { index: usize, n: usize },

    #[error("tensor word must have at least one factor")]
    EmptyWord,

    #[error("partition {partition} has more than {n} rows")]
    TooManyRows { partition: Partition, n: usize },

    #[error("variable tableau does not match shape {0}")]
    VariableShape(Partition),

    #[error("variable {0} appears more than once")]
    DuplicateVariable(String),

    #[error("no value assigned to variable {0}")]
    Unassigned(String),

    #[error("invalid exponent for {var}: {reason}")]
    InvalidExponent { var: String, reason: String },

    #[error("variable {0} is neither symmetrized nor fixed")]
    UncoveredVariable(String),

    #[error("variable {0} is both symmetrized and fixed")]
    OverlappingSpec(String),

    #[error("{count} symmetrized variables exceeds the cap of {cap}; pass an explicit override")]
    FactorialGuard { count: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("exponents outside the convergence domain")]
    OutsideConvergenceDomain,

    #[error("insertion produced shape {shape}, which is not in the pushing family of {base}")]
    LemmaShape { base: Partition, shape: Partition },

    #[error("weight {0:?} is not a partition")]
    WeightNotDominant(Vec<i64>),
}

pub type Result<T> = std::result::Result<T, Error>;
