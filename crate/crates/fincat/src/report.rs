//! Structured pass/fail reporting shared by the verification pipelines.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Refused,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    /// Witness lines: rendered violating composites, kernel vectors, tables.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    /// Structured witness in the input schema, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            outcome: Outcome::Pass,
            details: vec![],
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, details: Vec<String>) -> Self {
        Check {
            name: name.into(),
            outcome: Outcome::Fail,
            details,
            witness: None,
        }
    }

    pub fn refused(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            outcome: Outcome::Refused,
            details: vec![reason.into()],
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: serde_json::Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// An equality check between two composites, with both sides rendered on
/// failure.
pub fn equality_check<T: PartialEq + std::fmt::Display>(
    name: impl Into<String>,
    lhs: &T,
    rhs: &T,
) -> Check {
    if lhs == rhs {
        Check::pass(name)
    } else {
        Check::fail(
            name,
            vec![format!("lhs = {lhs}"), format!("rhs = {rhs}")],
        )
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckSet {
    pub checks: Vec<Check>,
}

impl CheckSet {
    pub fn new() -> Self {
        CheckSet { checks: vec![] }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckSet) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}
