use thiserror::Error;

/// Which resource guard refused a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard {
    /// Too many lcm-lattice elements.
    LcmLattice,
    /// A boundary matrix with too many entries.
    BoundaryMatrix,
    /// Too many generators for the exhaustive linear-quotients search.
    OrderSearch,
    /// The bounded linear-quotients search ran out of nodes.
    SearchBudget,
    /// Exponent overflow.
    Exponent,
}

impl std::fmt::Display for Guard {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Guard::LcmLattice => "lcm lattice size",
            Guard::BoundaryMatrix => "boundary matrix size",
            Guard::OrderSearch => "linear-quotients search generator limit",
            Guard::SearchBudget => "linear-quotients search node budget",
            Guard::Exponent => "exponent overflow",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("ambient mismatch: {0} vs {1} variables")]
    AmbientMismatch(usize, usize),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("resource guard tripped ({guard}): {detail}")]
    Guard { guard: Guard, detail: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn guard(guard: Guard, detail: impl Into<String>) -> Self {
        Error::Guard { guard, detail: detail.into() }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
