use thiserror::Error;

/// Errors raised by the library.
///
/// The variants are grouped so a front end can map them onto exit codes:
/// parameter problems ([`Error::Domain`], [`Error::Infeasible`],
/// [`Error::Precondition`], [`Error::OutOfRange`], [`Error::Unsupported`],
/// [`Error::Input`], [`Error::DimensionMismatch`]), resource problems
/// ([`Error::Budget`]) and internal failures ([`Error::Consistency`],
/// [`Error::Overflow`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("unsupported method: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("estimated cost {estimated} exceeds budget {budget}")]
    Budget { estimated: String, budget: u128 },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
