use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::ast::*;
use crate::enumeration::{downward_closed_bits, enumerate_ideals};
use crate::ideals::{ideal_bits, is_m_regular, simplicity, Conventions, SimplicityKind};
use crate::oracle;
use crate::outcome::{Binding, CheckResult, Status, Value};
use crate::{Error, OrderedSemigroup, Potency, Result, Subset};

/// Variable assignment used during evaluation.
pub type Env = BTreeMap<String, Value>;

/// Check id recorded on results produced by [`check_conjecture`].
pub const CONJECTURE_CHECK: &str = "conjecture";

fn lookup<'a>(env: &'a Env, name: &str) -> Result<&'a Value> {
    env.get(name)
        .ok_or_else(|| Error::UnboundVariable(name.into()))
}

fn eval_bits(s: &OrderedSemigroup, env: &Env, m: Potency, e: &SetExpr) -> Result<u16> {
    Ok(match e {
        SetExpr::Universe => s.full_bits(),
        SetExpr::Var(name) => match lookup(env, name)? {
            Value::Subset(sub) => s.bind(sub)?,
            _ => return Err(Error::UnboundVariable(name.clone())),
        },
        SetExpr::Singleton(name) => match lookup(env, name)? {
            Value::Element(a) => {
                s.check_element(*a)?;
                1 << a
            }
            _ => return Err(Error::UnboundVariable(name.clone())),
        },
        SetExpr::Product(l, r) => s.prod(eval_bits(s, env, m, l)?, eval_bits(s, env, m, r)?),
        SetExpr::Closure(inner) => s.down(eval_bits(s, env, m, inner)?),
        SetExpr::Union(l, r) => eval_bits(s, env, m, l)? | eval_bits(s, env, m, r)?,
        SetExpr::Intersection(l, r) => eval_bits(s, env, m, l)? & eval_bits(s, env, m, r)?,
        SetExpr::Power(base, exp) => {
            let k = match exp {
                Exponent::Int(k) => *k,
                Exponent::Potency => m.get() as u32,
            };
            set_power(s, eval_bits(s, env, m, base)?, k)
        }
    })
}

// k-fold product by repeated squaring; set product is associative.
fn set_power(s: &OrderedSemigroup, base: u16, mut k: u32) -> u16 {
    debug_assert!(k >= 1);
    let mut result: Option<u16> = None;
    let mut square = base;
    loop {
        if k & 1 == 1 {
            result = Some(match result {
                None => square,
                Some(r) => s.prod(r, square),
            });
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        square = s.prod(square, square);
    }
    result.expect("k >= 1")
}

/// Evaluates `e` with `M` standing for `m`.
pub fn eval_set_expr(s: &OrderedSemigroup, env: &Env, m: Potency, e: &SetExpr) -> Result<Subset> {
    Ok(s.wrap(eval_bits(s, env, m, e)?))
}

fn body_holds(s: &OrderedSemigroup, env: &Env, m: Potency, body: &[Relation]) -> Result<bool> {
    for r in body {
        let l = eval_bits(s, env, m, &r.lhs)?;
        let rhs = eval_bits(s, env, m, &r.rhs)?;
        let ok = match r.op {
            RelOp::Subset => l & !rhs == 0,
            RelOp::Equal => l == rhs,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn guard_holds(s: &OrderedSemigroup, guard: Guard, m: Potency) -> bool {
    match guard {
        Guard::Regular => is_m_regular(s, m),
        Guard::Simple => simplicity(s, SimplicityKind::Simple, m),
        Guard::LeftSimple => simplicity(s, SimplicityKind::LeftSimple, m),
        Guard::RightSimple => simplicity(s, SimplicityKind::RightSimple, m),
        Guard::BiintSimple => simplicity(s, SimplicityKind::BiInteriorSimple, m),
    }
}

fn oracle_guard(s: &OrderedSemigroup, guard: Guard, m: Potency) -> bool {
    let conv = Conventions::default();
    match guard {
        Guard::Regular => oracle::is_regular(s, m),
        Guard::Simple => oracle::simple(s, SimplicityKind::Simple, m, &conv),
        Guard::LeftSimple => oracle::simple(s, SimplicityKind::LeftSimple, m, &conv),
        Guard::RightSimple => oracle::simple(s, SimplicityKind::RightSimple, m, &conv),
        Guard::BiintSimple => oracle::simple(s, SimplicityKind::BiInteriorSimple, m, &conv),
    }
}

fn range_values(s: &OrderedSemigroup, range: Range, m: Potency) -> Vec<Value> {
    match range {
        Range::All => s.all_subsets().map(Value::Subset).collect(),
        Range::Downclosed => downward_closed_bits(s)
            .into_iter()
            .map(|b| Value::Subset(s.wrap(b)))
            .collect(),
        Range::Elements => (0..s.size()).map(Value::Element).collect(),
        Range::Kind(kind) => enumerate_ideals(s, kind, m)
            .subsets
            .into_iter()
            .map(Value::Subset)
            .collect(),
    }
}

/// Runs the quantifier loop; the first falsifying assignment in
/// odometer order (last binder fastest) becomes the witness.
pub fn check_conjecture(s: &OrderedSemigroup, c: &Conjecture, m: Potency) -> Result<CheckResult> {
    if let Some(g) = c.guard {
        if !guard_holds(s, g, m) {
            return Ok(CheckResult::new(
                s.name(),
                CONJECTURE_CHECK,
                m,
                Status::Skipped,
            ));
        }
    }
    let ranges: Vec<Vec<Value>> = c
        .binders
        .iter()
        .map(|b| range_values(s, b.range, m))
        .collect();
    if ranges.iter().any(Vec::is_empty) {
        return Ok(CheckResult::new(
            s.name(),
            CONJECTURE_CHECK,
            m,
            Status::Holds,
        ));
    }
    let mut idx = alloc::vec![0usize; ranges.len()];
    let mut env = Env::new();
    loop {
        for (b, (r, &i)) in c.binders.iter().zip(ranges.iter().zip(&idx)) {
            env.insert(b.name.clone(), r[i]);
        }
        if !body_holds(s, &env, m, &c.body)? {
            let witness = c
                .binders
                .iter()
                .map(|b| Binding::new(b.name.clone(), env[&b.name]))
                .collect();
            return Ok(CheckResult::failed(
                s.name(),
                CONJECTURE_CHECK,
                m,
                witness,
                None,
            ));
        }
        let mut k = idx.len();
        loop {
            if k == 0 {
                return Ok(CheckResult::new(
                    s.name(),
                    CONJECTURE_CHECK,
                    m,
                    Status::Holds,
                ));
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < ranges[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn in_range(s: &OrderedSemigroup, range: Range, m: Potency, v: &Value) -> Result<bool> {
    Ok(match (range, v) {
        (Range::Elements, Value::Element(a)) => {
            s.check_element(*a)?;
            true
        }
        (Range::All, Value::Subset(b)) => {
            s.bind(b)?;
            true
        }
        (Range::Downclosed, Value::Subset(b)) => {
            let bits = s.bind(b)?;
            bits != 0 && s.down(bits) == bits
        }
        (Range::Kind(kind), Value::Subset(b)) => {
            let bits = s.bind(b)?;
            bits != 0 && ideal_bits(s, bits, kind, m, &Conventions::default())
        }
        _ => {
            return Err(Error::MalformedWitness(format!(
                "value {v:?} has the wrong sort for {range}"
            )))
        }
    })
}

/// Re-evaluates a failure: the witness must bind exactly the conjecture's
/// variables, each inside its range (decided by the ideal predicates, not
/// by enumeration), the guard must hold, and the body must be false.
pub fn replay_conjecture(
    s: &OrderedSemigroup,
    c: &Conjecture,
    m: Potency,
    witness: &[Binding],
) -> Result<bool> {
    if witness.len() != c.binders.len() {
        return Err(Error::MalformedWitness(format!(
            "expected {} bindings, found {}",
            c.binders.len(),
            witness.len()
        )));
    }
    let mut env = Env::new();
    let mut inside = true;
    for b in &c.binders {
        let binding = witness
            .iter()
            .find(|w| w.var == b.name)
            .ok_or_else(|| Error::MalformedWitness(format!("missing binding for `{}`", b.name)))?;
        inside &= in_range(s, b.range, m, &binding.value)?;
        env.insert(b.name.clone(), binding.value);
    }
    if !inside {
        return Ok(false);
    }
    if let Some(g) = c.guard {
        if !oracle_guard(s, g, m) {
            return Ok(false);
        }
    }
    Ok(!body_holds(s, &env, m, &c.body)?)
}
