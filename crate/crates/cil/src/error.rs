//! Error type shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The defining polynomial is not usable as a cubic field.
    #[error("invalid field: {0}")]
    InvalidField(String),

    /// The Dedekind index test failed at `p`; splitting data at this prime
    /// cannot be read off the defining polynomial.
    #[error("prime {0} divides the index [O_K : Z[theta]]; coefficients at this prime are unsupported")]
    UnsupportedPrime(u64),

    /// No primitive cubic character mod the conductor reproduces the
    /// field's prime splitting.
    #[error("no order-3 character mod {0} matches the field's splitting data")]
    FieldCharacterMismatch(u64),

    /// The least-squares design matrix lost rank during orthogonalization.
    #[error("ill-conditioned fit at degree {0}")]
    IllConditionedFit(usize),

    /// A size limit protecting memory or runtime was exceeded.
    #[error("resource guard: {0}")]
    ResourceGuard(String),
}

impl Error {
    pub fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
