//! Crate error type.
//!
//! Three failure classes, matching how the CLI maps them to exit codes:
//! bad input (usage), a resource bound hit (refusal to start an oversized
//! computation), and an internal-consistency violation (a theorem-backed
//! identity failed to hold, which is always a bug or corrupted data).

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Invalid input: unknown type/rank, non-dominant weight where a
    /// dominant one is required, a non-exact complex fed to the splitter...
    InvalidInput(String),
    /// A configured resource bound would be exceeded.
    ResourceExceeded {
        what: &'static str,
        needed: usize,
        bound: usize,
    },
    /// A theorem-backed identity failed; treated as a bug.
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::ResourceExceeded { what, needed, bound } => {
                write!(f, "resource bound exceeded: {what} needs {needed}, bound is {bound}")
            }
            Error::Inconsistency(msg) => write!(f, "internal consistency violation: {msg}"),
        }
    }
}
