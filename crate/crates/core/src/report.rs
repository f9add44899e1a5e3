//! Outcome of a brute-force identity check.

use std::fmt;

/// A concrete failing input with the two sides that should have agreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), cases: 0, counterexample: None }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Records one case; only the first failure is kept.
    pub fn record<T: PartialEq + fmt::Display>(&mut self, input: impl fmt::Display, lhs: &T, rhs: &T) -> bool {
        self.cases += 1;
        let ok = lhs == rhs;
        if !ok && self.counterexample.is_none() {
            self.counterexample =
                Some(Counterexample { input: input.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
        ok
    }

    pub fn fail(&mut self, input: impl fmt::Display, lhs: impl fmt::Display, rhs: impl fmt::Display) {
        self.cases += 1;
        if self.counterexample.is_none() {
            self.counterexample =
                Some(Counterexample { input: input.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }

    pub fn merge(&mut self, other: Check) {
        self.cases += other.cases;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: pass ({} cases)", self.name, self.cases),
            Some(c) => write!(f, "{}: FAIL at {}: {} != {}", self.name, c.input, c.lhs, c.rhs),
        }
    }
}
