//! Verdicts shared by conjecture checks and registry checks.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Potency, Subset};

/// A value bound to a quantified variable in a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Value {
    Subset(Subset),
    Element(usize),
    Potency(Potency),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub var: String,
    pub value: Value,
}

impl Binding {
    pub fn new(var: impl Into<String>, value: Value) -> Self {
        Binding {
            var: var.into(),
            value,
        }
    }
}

/// Assignment of the quantified variables that falsifies a statement.
pub type Witness = Vec<Binding>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    /// The statement's guard is false on this structure.
    Skipped,
    Error(String),
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Skipped => "skipped",
            Status::Error(_) => "error",
        }
    }
}

/// Which half of a two-part statement a witness refutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// The left-to-right implication of a biconditional.
    Forward,
    /// The right-to-left implication of a biconditional.
    Converse,
    /// The statement with the hypotheses as written.
    AsStated,
    /// The statement with the hypotheses its argument actually uses.
    ProofHypothesis,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::Forward,
        Direction::Converse,
        Direction::AsStated,
        Direction::ProofHypothesis,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Converse => "converse",
            Direction::AsStated => "as_stated",
            Direction::ProofHypothesis => "proof_hypothesis",
        }
    }

    pub fn parse(s: &str) -> Option<Direction> {
        Direction::ALL.into_iter().find(|d| d.as_str() == s)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub structure: String,
    pub check: String,
    pub m: Potency,
    pub status: Status,
    /// Present iff `status` is [`Status::Fails`].
    pub witness: Option<Witness>,
    pub direction: Option<Direction>,
}

impl CheckResult {
    pub fn new(structure: &str, check: &str, m: Potency, status: Status) -> Self {
        CheckResult {
            structure: structure.into(),
            check: check.into(),
            m,
            status,
            witness: None,
            direction: None,
        }
    }

    pub fn failed(
        structure: &str,
        check: &str,
        m: Potency,
        witness: Witness,
        direction: Option<Direction>,
    ) -> Self {
        CheckResult {
            witness: Some(witness),
            direction,
            ..CheckResult::new(structure, check, m, Status::Fails)
        }
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fails
    }
}
