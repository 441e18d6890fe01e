//! Registry of named checks and the suite runner.
//!
//! Each check states one property of ordered semigroups and ideals, runs
//! it exhaustively on a single structure at a single potency, and on
//! failure returns a witness that [`validate_witness`] can re-evaluate
//! through the unpruned definitional path.
//!
//! Checks marked [`Expectation::Theorem`] must never fail; a failure is a
//! bug in this crate. [`Expectation::Claim`] checks are measured and
//! reported, and their counterexamples are results in their own right.

mod checks;
mod replay;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::outcome::CheckResult;
use crate::{Conventions, Error, OrderedSemigroup, Potency, Result};

pub use replay::{validate_witness, validate_witness_with};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expectation {
    Theorem,
    Claim,
}

impl Expectation {
    pub fn as_str(self) -> &'static str {
        match self {
            Expectation::Theorem => "theorem",
            Expectation::Claim => "claim",
        }
    }
}

macro_rules! registry {
    ($($variant:ident => $id:literal, $exp:ident, $statement:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CheckId { $($variant,)* }

        impl CheckId {
            /// Every check in registry order.
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self { $(CheckId::$variant => $id,)* }
            }

            pub fn expectation(self) -> Expectation {
                match self { $(CheckId::$variant => Expectation::$exp,)* }
            }

            pub fn statement(self) -> &'static str {
                match self { $(CheckId::$variant => $statement,)* }
            }
        }
    };
}

registry! {
    L1 => "L1", Theorem, "A ⊆ (A] for every subset A";
    L2 => "L2", Theorem, "((A]] = (A] for every subset A";
    L3 => "L3", Theorem, "A ⊆ B implies (A] ⊆ (B]";
    L4 => "L4", Theorem, "(A ∩ B] ⊆ (A] ∩ (B]";
    L5 => "L5", Theorem, "(A ∪ B] = (A] ∪ (B]";
    L6 => "L6", Theorem, "(A](B] ⊆ (AB]";
    L7 => "L7", Theorem, "((A](B]] = (AB]";
    T1 => "T1", Theorem, "every m-left ideal is an m-bi-interior ideal";
    T1p => "T1'", Theorem, "every m-right ideal is an m-bi-interior ideal";
    T2 => "T2", Theorem, "every m-ideal is an m-bi-interior ideal";
    T3 => "T3", Theorem, "a non-empty intersection of two m-bi-interior ideals is m-bi-interior";
    T4 => "T4", Theorem, "a non-empty intersection of an m-right and an m-left ideal is m-bi-interior";
    T5 => "T5", Theorem, "every m-quasi-ideal is an m-bi-interior ideal";
    T6 => "T6", Theorem, "every m-bi-ideal is an m-bi-interior ideal";
    T7 => "T7", Theorem, "every m-interior ideal is an m-bi-interior ideal";
    T8 => "T8", Theorem, "(BS] and (SB] are m-bi-interior for every m-bi-interior B";
    T9 => "T9", Theorem, "B ∩ T is m-bi-interior for m-bi-interior B and m-right T, when non-empty";
    T10 => "T10", Claim, "if S is m-simple, every m-bi-interior ideal is an m-bi-ideal";
    T11 => "T11", Claim, "(AC] is m-bi-interior for an m-left ideal A and a subsemigroup C";
    T11p => "T11'", Claim, "(CA] is m-bi-interior for an m-right ideal A and a subsemigroup C (as_stated), and for an m-right ideal C and a subsemigroup A (proof_hypothesis)";
    T12 => "T12", Claim, "S is m-bi-interior-simple iff (S^m a S^m] ∩ (a S^m a] = S for every a";
    T13 => "T13", Claim, "S is m-regular iff B ∩ I ∩ L ⊆ (BIL] for every m-bi-interior B, m-ideal I and m-left ideal L";
    T14 => "T14", Claim, "if S is m-regular, every m-interior ideal is an m-ideal";
    T15 => "T15", Claim, "S is m-regular iff (BS^mB] ∩ (S^mBS^m] = B for every m-bi-interior B";
    T16 => "T16", Claim, "if S is m-regular, a subsemigroup B equals (RL] for some m-right R and m-left L iff B is m-bi-interior";
    R1 => "R1", Claim, "S is m-regular iff (RL] = R ∩ L for every m-right R and m-left L";
    R2 => "R2", Claim, "if S is m-regular, a non-empty B is an m-bi-ideal iff B = (RL] for some m-right R and m-left L";
    E1 => "E1", Claim, "(S^m B S^m] is an m-ideal for every m-bi-interior B";
    E2 => "E2", Claim, "A ∩ B is max(m,k)-bi-interior for an m-bi-interior A and a k-bi-interior B with k ≠ m, when non-empty";
}

impl CheckId {
    /// Checks whose statement is a biconditional; their failures carry a
    /// [`crate::outcome::Direction`].
    pub fn is_biconditional(self) -> bool {
        matches!(
            self,
            CheckId::T12 | CheckId::T13 | CheckId::T15 | CheckId::T16 | CheckId::R1 | CheckId::R2
        )
    }

    /// Extra remarks recorded alongside the statement.
    pub fn note(self) -> Option<&'static str> {
        match self {
            CheckId::T10 => Some("relies on E1"),
            CheckId::T13 => Some(
                "the converse argument multiplies by an identity element, which the axioms do not provide",
            ),
            CheckId::T16 => Some("B ranges over subsemigroups"),
            CheckId::E1 | CheckId::E2 => Some("experimental"),
            _ => None,
        }
    }

    /// Parses a comma-separated list, or `all`.
    pub fn parse_list(text: &str) -> Result<Vec<CheckId>> {
        if text.trim() == "all" {
            return Ok(CheckId::ALL.to_vec());
        }
        text.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCheckId(s.into()))
    }
}

pub fn run_check(s: &OrderedSemigroup, id: CheckId, m: Potency) -> CheckResult {
    run_check_with(s, id, m, &Conventions::default())
}

pub fn run_check_with(
    s: &OrderedSemigroup,
    id: CheckId,
    m: Potency,
    conv: &Conventions,
) -> CheckResult {
    checks::run(s, id, m, conv)
}

/// Holds/fails/skipped/error counts for one check.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
    pub errors: usize,
}

impl Tally {
    pub fn total(&self) -> usize {
        self.holds + self.fails + self.skipped + self.errors
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub corpus: String,
    pub potencies: Vec<Potency>,
    pub checks: Vec<CheckId>,
    pub results: Vec<CheckResult>,
    pub version: &'static str,
}

impl VerificationReport {
    pub fn new(
        corpus: impl Into<String>,
        potencies: Vec<Potency>,
        checks: Vec<CheckId>,
        results: Vec<CheckResult>,
    ) -> Self {
        VerificationReport {
            corpus: corpus.into(),
            potencies,
            checks,
            results,
            version: crate::VERSION,
        }
    }

    /// Per-check counts, in the order the checks were requested.
    pub fn summary(&self) -> Vec<(CheckId, Tally)> {
        use crate::outcome::Status;
        self.checks
            .iter()
            .map(|&id| {
                let mut t = Tally::default();
                for r in self.results.iter().filter(|r| r.check == id.as_str()) {
                    match r.status {
                        Status::Holds => t.holds += 1,
                        Status::Fails => t.fails += 1,
                        Status::Skipped => t.skipped += 1,
                        Status::Error(_) => t.errors += 1,
                    }
                }
                (id, t)
            })
            .collect()
    }

    /// Failures of theorem-status checks.
    pub fn theorem_failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| {
            r.is_failure()
                && r.check
                    .parse::<CheckId>()
                    .is_ok_and(|id| id.expectation() == Expectation::Theorem)
        })
    }
}

/// Runs every requested check on one structure at one potency, in the
/// order given.
pub fn run_pair(
    s: &OrderedSemigroup,
    m: Potency,
    checks: &[CheckId],
    conv: &Conventions,
) -> Vec<CheckResult> {
    checks
        .iter()
        .map(|&id| run_check_with(s, id, m, conv))
        .collect()
}

/// Sequential suite over `corpus x potencies x checks`, in that nesting
/// order.
pub fn run_suite(
    corpus_id: &str,
    corpus: &[OrderedSemigroup],
    potencies: &[Potency],
    checks: &[CheckId],
    conv: &Conventions,
) -> VerificationReport {
    let mut results = Vec::with_capacity(corpus.len() * potencies.len() * checks.len());
    for s in corpus {
        for &m in potencies {
            results.extend(run_pair(s, m, checks, conv));
        }
    }
    VerificationReport::new(corpus_id, potencies.to_vec(), checks.to_vec(), results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::outcome::Status;
    use alloc::vec;

    fn m(k: u32) -> Potency {
        Potency::new(k).unwrap()
    }

    #[test]
    fn registry_examples() {
        assert_eq!(run_check(&ch2(), CheckId::T5, m(1)).status, Status::Holds);
        assert_eq!(run_check(&g2(), CheckId::T12, m(1)).status, Status::Holds);
        assert_eq!(run_check(&n2(), CheckId::T13, m(1)).status, Status::Holds);
        assert_eq!(run_check(&n2(), CheckId::T10, m(1)).status, Status::Skipped);
    }

    #[test]
    fn suite_examples() {
        let conv = Conventions::default();
        let lemma: Vec<CheckId> = CheckId::ALL[..7].to_vec();
        let r = run_suite("t", &[ch2()], &[m(1)], &lemma, &conv);
        assert_eq!(r.results.len(), 7);
        assert!(r.results.iter().all(|x| x.status == Status::Holds));

        let r = run_suite("t", &[lz2(), g2()], &[m(1), m(2)], &[CheckId::T1], &conv);
        assert_eq!(
            r.summary(),
            vec![(
                CheckId::T1,
                Tally {
                    holds: 4,
                    ..Tally::default()
                }
            )]
        );
    }

    #[test]
    fn ids_round_trip() {
        for &id in CheckId::ALL {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
        }
        assert_eq!(
            CheckId::parse_list("all").unwrap().len(),
            CheckId::ALL.len()
        );
        assert_eq!(
            CheckId::parse_list("T1, T11'").unwrap(),
            vec![CheckId::T1, CheckId::T11p]
        );
        assert!(matches!(
            "T99".parse::<CheckId>(),
            Err(Error::UnknownCheckId(_))
        ));
    }

    #[test]
    fn failures_replay() {
        let conv = Conventions::default();
        let corpus = [lz2(), rz2(), ch2(), g2(), n2(), ch3()];
        let pot = [m(1), m(2)];
        let r = run_suite("zoo", &corpus, &pot, CheckId::ALL, &conv);
        assert_eq!(r.theorem_failures().count(), 0);
        for row in r.results.iter().filter(|x| x.is_failure()) {
            let s = corpus.iter().find(|s| s.name() == row.structure).unwrap();
            assert!(validate_witness(s, row).unwrap(), "{row:?}");
        }
    }

    #[test]
    fn replay_rejects_malformed_rows() {
        let s = ch2();
        let holds = run_check(&s, CheckId::T5, m(1));
        assert!(matches!(
            validate_witness(&s, &holds),
            Err(Error::MalformedWitness(_))
        ));

        let bogus = CheckResult::failed(
            "CH2",
            "T1",
            m(1),
            vec![crate::outcome::Binding::new(
                "X",
                crate::outcome::Value::Element(0),
            )],
            None,
        );
        assert!(matches!(
            validate_witness(&s, &bogus),
            Err(Error::MalformedWitness(_))
        ));

        let wide = CheckResult::failed(
            "CH2",
            "T1",
            m(1),
            vec![crate::outcome::Binding::new(
                "L",
                crate::outcome::Value::Subset(crate::Subset::full(3)),
            )],
            None,
        );
        assert!(validate_witness(&s, &wide).is_err());

        let forward = CheckResult::failed(
            "CH2",
            "T12",
            m(1),
            vec![crate::outcome::Binding::new(
                "a",
                crate::outcome::Value::Element(7),
            )],
            Some(crate::outcome::Direction::Forward),
        );
        assert!(matches!(
            validate_witness(&s, &forward),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
