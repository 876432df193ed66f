use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {requested} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("element is not symmetric")]
    NotSymmetric,
    #[error("mixed degrees {0} and {1}")]
    MixedDegree(usize, usize),
    #[error("sequence is not compatible with the permutation")]
    Incompatible,
    #[error("non-integral value where an integer was expected: {0}")]
    NonIntegral(String),
    #[error("division is not exact")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}

/// Enumeration and degree caps. Exceeding a cap is an error, never a silent
/// truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest n for which all of S_n may be enumerated.
    pub perm: usize,
    /// Largest degree for symmetric function basis conversion.
    pub degree: usize,
}

pub const DEFAULT_PERM_CAP: usize = 10;
pub const DEFAULT_DEGREE_CAP: usize = 12;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            perm: DEFAULT_PERM_CAP,
            degree: DEFAULT_DEGREE_CAP,
        }
    }
}

impl Caps {
    pub fn check_perm(&self, n: usize) -> Result<()> {
        check_cap("n", n, self.perm)
    }

    pub fn check_degree(&self, d: usize) -> Result<()> {
        check_cap("degree", d, self.degree)
    }
}

pub fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        Err(Error::CapExceeded {
            what,
            requested,
            cap,
        })
    } else {
        Ok(())
    }
}
