use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong inside the algebra kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The requested characteristic is not a prime in `[2, 2^31 - 1]`.
    NotPrime(u64),
    /// Operands live in different polynomial rings.
    RingMismatch,
    /// Exponent vectors of different lengths were compared or combined.
    ArityMismatch { expected: usize, found: usize },
    /// A ring was declared with no variables or with a repeated name.
    InvalidRing(String),
    /// An exponent left the 32-bit range.
    ExponentOverflow,
    /// A Frobenius power was requested for an integer that is not `p^e`, `e >= 1`.
    NotAPowerOfP { q: u64, p: u32 },
    /// The unit ideal has no dimension.
    EmptyVariety,
    /// A precondition on an argument was violated.
    InvalidArgument(String),
    /// A configured work limit was hit. Output is never truncated silently.
    BudgetExceeded { what: &'static str, limit: usize },
    /// The polynomial does not define a Frobenius splitting; carries `u(f)`.
    NotASplitting { trace: String },
    /// No monomial twist of `g^(p-1)` has a nonzero constant trace.
    NotConstructible(String),
    /// The minimal-prime engine cannot certify a decomposition of this ideal.
    Unsupported { ideal: String, reason: String },
    /// The verification pass rejected an enumerated lattice.
    VerificationFailed(String),
    /// An internal consistency check failed. Always a kernel bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "NOT_PRIME: {p} is not a prime below 2^31"),
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "exponent vector has {found} entries, expected {expected}")
            }
            Error::InvalidRing(msg) => write!(f, "invalid ring: {msg}"),
            Error::ExponentOverflow => write!(f, "exponent overflow"),
            Error::NotAPowerOfP { q, p } => write!(f, "{q} is not a positive power of {p}"),
            Error::EmptyVariety => write!(f, "the unit ideal has no dimension"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::BudgetExceeded { what, limit } => {
                write!(f, "BUDGET: {what} exceeded the limit of {limit}")
            }
            Error::NotASplitting { trace } => {
                write!(f, "NOT_A_SPLITTING: trace of f is {trace}, expected 1")
            }
            Error::NotConstructible(g) => {
                write!(f, "NOT_CONSTRUCTIBLE: no monomial twist of ({g})^(p-1) has trace 1")
            }
            Error::VerificationFailed(msg) => write!(f, "VERIFICATION_FAILED: {msg}"),
            Error::Unsupported { ideal, reason } => {
                write!(f, "UNSUPPORTED: cannot decompose {ideal}: {reason}")
            }
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
