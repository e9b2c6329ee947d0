//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different variable contexts.
    #[error("variable context mismatch: {0}")]
    ContextMismatch(String),

    /// A context or polynomial was built from invalid data.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Substitution image has the wrong degree for its target variable.
    #[error("substitution image for {variable} must be homogeneous of degree {expected}")]
    SubstitutionDegree { variable: String, expected: u32 },

    /// Group/torus selectors outside the classification.
    #[error("invalid group/torus combination: {0}")]
    InvalidSpec(String),

    /// A graded quotient was queried beyond the degree a truncated basis covers.
    #[error("degree {degree} exceeds the truncation bound {bound} of this basis")]
    DegreeBound { degree: u32, bound: u32 },

    /// The presentation is not Artinian, so Lefschetz bookkeeping is undefined.
    #[error("presentation is not Artinian: degree {degree} component is nonzero")]
    NotArtinian { degree: u32 },

    /// Isotropy weight sets must consist of nonzero covectors.
    #[error("weight vectors must be nonzero")]
    ZeroWeight,

    /// Matrix/vector shape disagreement.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Polytope parameters that cannot produce a valid momentum image.
    #[error("infeasible polytope parameters: {0}")]
    InfeasibleParams(String),

    /// Malformed serialized data.
    #[error("parse error: {0}")]
    Parse(String),

    /// A configured resource budget was exceeded; the computation was aborted
    /// rather than risk a wrong answer.
    #[error("resource budget exceeded: {what} reached {reached} (cap {cap}){}", at_k.map(|k| format!(" at k={k}")).unwrap_or_default())]
    Limit {
        what: LimitKind,
        reached: u64,
        cap: u64,
        /// Lefschetz power index the engine was working on, when applicable.
        at_k: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitKind {
    BasisSize,
    CoefficientBits,
}

impl std::fmt::Display for LimitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LimitKind::BasisSize => write!(f, "basis size"),
            LimitKind::CoefficientBits => write!(f, "coefficient bit length"),
        }
    }
}

impl Error {
    /// Attach a Lefschetz power index to a limit error.
    pub(crate) fn with_k(self, k: u32) -> Self {
        match self {
            Error::Limit {
                what, reached, cap, ..
            } => Error::Limit {
                what,
                reached,
                cap,
                at_k: Some(k),
            },
            other => other,
        }
    }

    pub fn is_limit(&self) -> bool {
        matches!(self, Error::Limit { .. })
    }
}
