use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("alphabet mismatch: [{left}] vs [{right}]")]
    AlphabetMismatch { left: String, right: String },

    #[error("{0} requires an initial state")]
    MissingInitial(&'static str),

    #[error("{0} requires an accepting set")]
    MissingAccepting(&'static str),

    #[error("size guard: {what} needs {needed}, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        needed: usize,
        limit: usize,
    },

    /// The right-Cayley machine does not define a two-sided congruence:
    /// `first` and `second` share a class but `letter·first` and
    /// `letter·second` do not.
    #[error("not a two-sided congruence: {first:?} and {second:?} are identified but their {letter}-prefixed words are not")]
    NotCongruence {
        first: Vec<usize>,
        second: Vec<usize>,
        letter: usize,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("law violated: {0}")]
    Law(Violation),
}

/// A failed law check together with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    pub witness: String,
}

impl Violation {
    pub fn new(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Violation {
            check: check.into(),
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.witness)
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Law(v)
    }
}

/// Fails with a [`Violation`] unless `cond` holds.
pub(crate) fn ensure(cond: bool, check: &str, witness: impl FnOnce() -> String) -> Result<(), Violation> {
    if cond {
        Ok(())
    } else {
        Err(Violation::new(check, witness()))
    }
}
