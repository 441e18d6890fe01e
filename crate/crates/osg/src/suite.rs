//! Parallel drivers over a corpus.
//!
//! Work is split per `(structure, potency)` pair; results come back in
//! corpus-major, potency, check order whatever the scheduling. A panic
//! inside one pair becomes error rows for that pair only.

use std::panic::{catch_unwind, AssertUnwindSafe};

use osg_core::conjecture::{check_conjecture, Conjecture, CONJECTURE_CHECK};
use osg_core::outcome::{CheckResult, Status};
use osg_core::verifier::{run_pair, CheckId};
use osg_core::{Conventions, OrderedSemigroup, Potency};
use rayon::prelude::*;

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".into())
}

fn pairs(corpus: &[OrderedSemigroup], potencies: &[Potency]) -> Vec<(usize, Potency)> {
    (0..corpus.len())
        .flat_map(|i| potencies.iter().map(move |&m| (i, m)))
        .collect()
}

pub fn verify(
    corpus: &[OrderedSemigroup],
    potencies: &[Potency],
    checks: &[CheckId],
    conv: &Conventions,
) -> Vec<CheckResult> {
    pairs(corpus, potencies)
        .into_par_iter()
        .map(|(i, m)| {
            let s = &corpus[i];
            catch_unwind(AssertUnwindSafe(|| run_pair(s, m, checks, conv))).unwrap_or_else(|p| {
                let msg = panic_message(p);
                checks
                    .iter()
                    .map(|c| CheckResult::new(s.name(), c.as_str(), m, Status::Error(msg.clone())))
                    .collect()
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn conjecture(
    corpus: &[OrderedSemigroup],
    potencies: &[Potency],
    c: &Conjecture,
) -> Vec<CheckResult> {
    pairs(corpus, potencies)
        .into_par_iter()
        .map(|(i, m)| {
            let s = &corpus[i];
            let error =
                |msg: String| CheckResult::new(s.name(), CONJECTURE_CHECK, m, Status::Error(msg));
            match catch_unwind(AssertUnwindSafe(|| check_conjecture(s, c, m))) {
                Ok(Ok(r)) => r,
                Ok(Err(e)) => error(e.to_string()),
                Err(p) => error(panic_message(p)),
            }
        })
        .collect()
}
