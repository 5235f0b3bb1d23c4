//! Structured axiom-check reports: each violation carries the law that
//! failed, the basis tuple where it failed, and the residual vector.

use crate::linalg::{fmt_rat, Rat};
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Stable identifier of the law, e.g. "leibniz-rule".
    pub law: String,
    /// Basis tuple (slot indices) where the residual is nonzero.
    pub at: Vec<usize>,
    pub residual: Vec<Rat>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at: Vec<String> = self.at.iter().map(|i| i.to_string()).collect();
        let res: Vec<String> = self.residual.iter().map(fmt_rat).collect();
        write!(f, "{} at ({}) residual [{}]", self.law, at.join(","), res.join(","))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { violations: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records the residual if it is nonzero.
    pub fn push_residual(&mut self, law: &str, at: &[usize], residual: Vec<Rat>) {
        if residual.iter().any(|r| !r.is_zero()) {
            self.violations.push(Violation { law: law.to_string(), at: at.to_vec(), residual });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }

    /// True iff some violation cites the given law.
    pub fn cites(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}
