use thiserror::Error;

/// Errors raised by graph-map validation and the invariant pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge name `{0}`")]
    DuplicateEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge `{0}` has no image")]
    MissingImage(String),
    #[error("edge `{0}` has a degenerate (empty) image")]
    DegenerateImage(String),
    #[error("inconsistent endpoints in the image of edge `{edge}`: {detail}")]
    InconsistentEndpoints { edge: String, detail: String },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("transition matrix is reducible")]
    ReducibleInput,
    #[error("division is not exact: {0}")]
    NonexactDivision(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no unit normal form")]
    ZeroPolynomial,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("normalized McMullen polynomial does not contain the trivial monomial")]
    MalformedNormalization,
    #[error("class {0:?} is not in the cone of sections")]
    NotInCone(Vec<i64>),
    #[error("class {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),
    #[error("class {class:?} has length {got}, expected {expected}")]
    ClassRank {
        class: Vec<i64>,
        expected: usize,
        got: usize,
    },
    #[error("base map is not orientable")]
    NotOrientableBase,
    #[error("root finding failed: {0}")]
    RootFinding(String),
    #[error("input too large for brute force: {0}")]
    TooLarge(String),
    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for failures that indicate a broken identity rather than bad input.
    pub fn is_theory_violation(&self) -> bool {
        matches!(
            self,
            Error::NonexactDivision(_)
                | Error::Inconsistent(_)
                | Error::MalformedNormalization
                | Error::RootFinding(_)
        )
    }
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DuplicateVertex(_) => "duplicate_vertex",
            Error::DuplicateEdge(_) => "duplicate_edge",
            Error::UnknownVertex(_) => "unknown_vertex",
            Error::UnknownEdge(_) => "unknown_edge",
            Error::EmptyGraph => "empty_graph",
            Error::Disconnected => "disconnected",
            Error::MissingImage(_) => "missing_image",
            Error::DegenerateImage(_) => "degenerate_image",
            Error::InconsistentEndpoints { .. } => "inconsistent_endpoints",
            Error::Syntax { .. } => "syntax",
            Error::NotSquare { .. } => "not_square",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::ReducibleInput => "reducible_input",
            Error::NonexactDivision(_) => "nonexact_division",
            Error::DivisionByZero => "division_by_zero",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::Overflow(_) => "overflow",
            Error::MalformedNormalization => "malformed_normalization",
            Error::NotInCone(_) => "not_in_cone",
            Error::NotPrimitive(_) => "not_primitive",
            Error::ClassRank { .. } => "class_rank",
            Error::NotOrientableBase => "not_orientable_base",
            Error::RootFinding(_) => "root_finding",
            Error::TooLarge(_) => "too_large",
            Error::InvalidTree(_) => "invalid_tree",
            Error::Inconsistent(_) => "inconsistent",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
