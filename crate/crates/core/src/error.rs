use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic and group-theoretic routines.
///
/// Variants are split along the exit-code contract of the command line tool:
/// bad input, resource caps, and outcomes that contradict a structural
/// theorem the computation is expected to confirm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    NotPrimePower(u64),
    /// The characteristic of the field equals the prime under study.
    CharacteristicEqualsPrime { q: u64, p: u64 },
    FieldTooLarge(u64),
    DimensionMismatch { expected: usize, found: usize },
    InvalidGenerator(String),
    NotInvertible,
    NotClosed,
    Inhomogeneous,
    OddDegree(usize),
    /// Group enumeration would exceed the configured element cap.
    CapExceeded { cap: usize },
    NonAbelianSylow,
    Unsupported(String),
    InvalidArgument(String),
    /// A computed object violates an invariant the theory guarantees.
    InvariantViolation(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    /// True for outcomes that falsify a checked theorem rather than reject input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(n) => write!(f, "{n} is not a prime"),
            Error::NotPrimePower(n) => write!(f, "{n} is not a prime power"),
            Error::CharacteristicEqualsPrime { q, p } => {
                write!(f, "field size {q} has characteristic {p}")
            }
            Error::FieldTooLarge(q) => write!(f, "field of size {q} exceeds the supported bound 2^16"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::InvalidGenerator(msg) => write!(f, "invalid generator: {msg}"),
            Error::NotInvertible => f.write_str("matrix is not invertible"),
            Error::NotClosed => f.write_str("matrix set is not closed under multiplication"),
            Error::Inhomogeneous => f.write_str("element is not homogeneous"),
            Error::OddDegree(d) => write!(f, "odd degree {d}"),
            Error::CapExceeded { cap } => write!(f, "group order exceeds the enumeration cap {cap}"),
            Error::NonAbelianSylow => f.write_str("Sylow subgroup is not abelian"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::InvariantViolation(msg) => write!(f, "invariant violation: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
