//! Verification reports: violations are data, never errors.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One failing instance of a named law.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub law: String,
    pub at: String,
}

impl Violation {
    pub fn new(law: impl Into<String>, at: impl Into<String>) -> Self {
        Violation { law: law.into(), at: at.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.law, self.at)
    }
}

pub type Report = Vec<Violation>;
