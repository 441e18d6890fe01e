//! Witness replay through the unpruned definitions in [`crate::oracle`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::checks::dsl_text;
use super::CheckId;
use crate::conjecture::{parse_conjecture, replay_conjecture};
use crate::ideals::{
    ideal_bits, is_m_regular_element, principal_bits, Conventions, IdealKind, PrincipalPattern,
    SimplicityKind,
};
use crate::outcome::{CheckResult, Direction, Status, Value};
use crate::{oracle, Error, OrderedSemigroup, Potency, Result};

struct Bound<'a> {
    s: &'a OrderedSemigroup,
    vars: BTreeMap<&'a str, Value>,
}

impl<'a> Bound<'a> {
    fn set(&self, var: &str) -> Result<u16> {
        match self.vars.get(var) {
            Some(Value::Subset(b)) => self.s.bind(b),
            _ => Err(Error::MalformedWitness(format!("`{var}` must be a subset"))),
        }
    }

    fn element(&self, var: &str) -> Result<usize> {
        match self.vars.get(var) {
            Some(&Value::Element(a)) => {
                self.s.check_element(a)?;
                Ok(a)
            }
            _ => Err(Error::MalformedWitness(format!(
                "`{var}` must be an element"
            ))),
        }
    }

    fn potency(&self, var: &str) -> Result<Potency> {
        match self.vars.get(var) {
            Some(&Value::Potency(k)) => Ok(k),
            _ => Err(Error::MalformedWitness(format!(
                "`{var}` must be a potency"
            ))),
        }
    }
}

fn expect_vars(b: &Bound, names: &[&str]) -> Result<()> {
    let mut want: Vec<&str> = names.to_vec();
    want.sort_unstable();
    let have: Vec<&str> = b.vars.keys().copied().collect();
    if have == want {
        Ok(())
    } else {
        Err(Error::MalformedWitness(format!(
            "expected variables {want:?}, found {have:?}"
        )))
    }
}

fn expect_direction(id: CheckId, d: Option<Direction>) -> Result<Direction> {
    let allowed: &[Direction] = if id.is_biconditional() {
        &[Direction::Forward, Direction::Converse]
    } else if id == CheckId::T11p {
        &[Direction::AsStated, Direction::ProofHypothesis]
    } else {
        &[]
    };
    match d {
        None if allowed.is_empty() => Ok(Direction::AsStated),
        Some(d) if allowed.contains(&d) => Ok(d),
        _ => Err(Error::MalformedWitness(format!(
            "direction {d:?} does not apply to {id}"
        ))),
    }
}

struct Defs<'a> {
    s: &'a OrderedSemigroup,
    m: Potency,
    conv: &'a Conventions,
}

impl Defs<'_> {
    fn is(&self, kind: IdealKind, b: u16) -> bool {
        self.is_at(kind, b, self.m)
    }

    fn is_at(&self, kind: IdealKind, b: u16, m: Potency) -> bool {
        b != 0 && ideal_bits(self.s, b, kind, m, self.conv)
    }

    fn bi(&self, b: u16) -> bool {
        self.is(IdealKind::MBiInterior, b)
    }

    fn subsemigroup(&self, b: u16) -> bool {
        b != 0 && self.s.prod(b, b) & !b == 0
    }

    fn regular(&self) -> bool {
        oracle::is_regular(self.s, self.m)
    }

    fn all(&self, kind: IdealKind) -> Vec<u16> {
        oracle::ideals(self.s, kind, self.m, self.conv)
    }

    fn rl(&self, r: u16, l: u16) -> u16 {
        self.s.down(self.s.prod(r, l))
    }

    fn representable(&self, b: u16) -> bool {
        let lefts = self.all(IdealKind::MLeft);
        self.all(IdealKind::MRight)
            .into_iter()
            .any(|r| lefts.iter().any(|&l| self.rl(r, l) == b))
    }

    fn sides(&self, b: u16) -> (u16, u16) {
        let s = self.s;
        let sm = s.power_bits(self.m);
        (
            s.down(s.prod(s.prod(b, sm), b)),
            s.down(s.prod(s.prod(sm, b), sm)),
        )
    }

    fn principal_ok(&self, a: usize) -> bool {
        principal_bits(self.s, a, PrincipalPattern::SmASm, self.m)
            & principal_bits(self.s, a, PrincipalPattern::ASmA, self.m)
            == self.s.full_bits()
    }

    fn irregular(&self, a: usize) -> bool {
        !is_m_regular_element(self.s, a, self.m).expect("checked index")
    }
}

fn single(d: &Defs, w: &Bound, var: &str, kind: IdealKind) -> Result<bool> {
    expect_vars(w, &[var])?;
    let b = w.set(var)?;
    Ok(d.is(kind, b) && !d.bi(b))
}

fn falsifies(d: &Defs, w: &Bound, id: CheckId, dir: Direction) -> Result<bool> {
    let s = d.s;
    let full = s.full_bits();
    use Direction::Forward;
    Ok(match (id, dir) {
        (CheckId::L3, _) => {
            expect_vars(w, &["A", "B"])?;
            let (a, b) = (w.set("A")?, w.set("B")?);
            a & !b == 0 && s.down(a) & !s.down(b) != 0
        }
        (CheckId::T1, _) => single(d, w, "L", IdealKind::MLeft)?,
        (CheckId::T1p, _) => single(d, w, "R", IdealKind::MRight)?,
        (CheckId::T2, _) => single(d, w, "I", IdealKind::MTwoSided)?,
        (CheckId::T5, _) => single(d, w, "Q", IdealKind::MQuasi)?,
        (CheckId::T6, _) => single(d, w, "B", IdealKind::MBi)?,
        (CheckId::T7, _) => single(d, w, "I", IdealKind::MInterior)?,
        (CheckId::T3, _) => {
            expect_vars(w, &["A", "B"])?;
            let (a, b) = (w.set("A")?, w.set("B")?);
            d.bi(a) && d.bi(b) && a & b != 0 && !d.bi(a & b)
        }
        (CheckId::T4, _) => {
            expect_vars(w, &["R", "L"])?;
            let (r, l) = (w.set("R")?, w.set("L")?);
            d.is(IdealKind::MRight, r) && d.is(IdealKind::MLeft, l) && r & l != 0 && !d.bi(r & l)
        }
        (CheckId::T8, _) => {
            expect_vars(w, &["B"])?;
            let b = w.set("B")?;
            d.bi(b) && (!d.bi(s.down(s.prod(b, full))) || !d.bi(s.down(s.prod(full, b))))
        }
        (CheckId::T9, _) => {
            expect_vars(w, &["B", "T"])?;
            let (b, t) = (w.set("B")?, w.set("T")?);
            d.bi(b) && d.is(IdealKind::MRight, t) && b & t != 0 && !d.bi(b & t)
        }
        (CheckId::T10, _) => {
            expect_vars(w, &["B"])?;
            let b = w.set("B")?;
            oracle::simple(s, SimplicityKind::Simple, d.m, d.conv)
                && d.bi(b)
                && !d.is(IdealKind::MBi, b)
        }
        (CheckId::T11, _) => {
            expect_vars(w, &["A", "C"])?;
            let (a, c) = (w.set("A")?, w.set("C")?);
            d.is(IdealKind::MLeft, a) && d.subsemigroup(c) && !d.bi(s.down(s.prod(a, c)))
        }
        (CheckId::T11p, dir) => {
            expect_vars(w, &["A", "C"])?;
            let (a, c) = (w.set("A")?, w.set("C")?);
            let hyp = if dir == Direction::AsStated {
                d.is(IdealKind::MRight, a) && d.subsemigroup(c)
            } else {
                d.is(IdealKind::MRight, c) && d.subsemigroup(a)
            };
            hyp && !d.bi(s.down(s.prod(c, a)))
        }
        (CheckId::T12, Forward) => {
            expect_vars(w, &["a"])?;
            let a = w.element("a")?;
            oracle::simple(s, SimplicityKind::BiInteriorSimple, d.m, d.conv) && !d.principal_ok(a)
        }
        (CheckId::T12, _) => {
            expect_vars(w, &["B"])?;
            let b = w.set("B")?;
            (0..s.size()).all(|a| d.principal_ok(a)) && d.bi(b) && b != full
        }
        (CheckId::T13, Forward) => {
            expect_vars(w, &["B", "I", "L"])?;
            let (b, i, l) = (w.set("B")?, w.set("I")?, w.set("L")?);
            d.regular()
                && d.bi(b)
                && d.is(IdealKind::MTwoSided, i)
                && d.is(IdealKind::MLeft, l)
                && b & i & l & !s.down(s.prod(s.prod(b, i), l)) != 0
        }
        (CheckId::T13, _) => {
            expect_vars(w, &["a"])?;
            let a = w.element("a")?;
            let twos = d.all(IdealKind::MTwoSided);
            let lefts = d.all(IdealKind::MLeft);
            d.irregular(a)
                && d.all(IdealKind::MBiInterior).into_iter().all(|b| {
                    twos.iter().all(|&i| {
                        lefts
                            .iter()
                            .all(|&l| b & i & l & !s.down(s.prod(s.prod(b, i), l)) == 0)
                    })
                })
        }
        (CheckId::T14, _) => {
            expect_vars(w, &["I"])?;
            let i = w.set("I")?;
            d.regular() && d.is(IdealKind::MInterior, i) && !d.is(IdealKind::MTwoSided, i)
        }
        (CheckId::T15, Forward) => {
            expect_vars(w, &["B"])?;
            let b = w.set("B")?;
            let (x, y) = d.sides(b);
            d.regular() && d.bi(b) && x & y != b
        }
        (CheckId::T15, _) => {
            expect_vars(w, &["a"])?;
            let a = w.element("a")?;
            d.irregular(a)
                && d.all(IdealKind::MBiInterior).into_iter().all(|b| {
                    let (x, y) = d.sides(b);
                    x & y == b
                })
        }
        (CheckId::T16, Forward) => {
            expect_vars(w, &["B", "R", "L"])?;
            let (b, r, l) = (w.set("B")?, w.set("R")?, w.set("L")?);
            d.regular()
                && d.subsemigroup(b)
                && d.is(IdealKind::MRight, r)
                && d.is(IdealKind::MLeft, l)
                && d.rl(r, l) == b
                && !d.bi(b)
        }
        (CheckId::T16, _) => {
            expect_vars(w, &["B"])?;
            let b = w.set("B")?;
            d.regular() && d.subsemigroup(b) && d.bi(b) && !d.representable(b)
        }
        (CheckId::R1, Forward) => {
            expect_vars(w, &["R", "L"])?;
            let (r, l) = (w.set("R")?, w.set("L")?);
            d.regular()
                && d.is(IdealKind::MRight, r)
                && d.is(IdealKind::MLeft, l)
                && d.rl(r, l) != r & l
        }
        (CheckId::R1, _) => {
            expect_vars(w, &["a"])?;
            let a = w.element("a")?;
            let lefts = d.all(IdealKind::MLeft);
            d.irregular(a)
                && d.all(IdealKind::MRight)
                    .into_iter()
                    .all(|r| lefts.iter().all(|&l| d.rl(r, l) == r & l))
        }
        (CheckId::R2, Forward) => {
            expect_vars(w, &["B"])?;
            let b = w.set("B")?;
            d.regular() && d.is(IdealKind::MBi, b) && !d.representable(b)
        }
        (CheckId::R2, _) => {
            expect_vars(w, &["B", "R", "L"])?;
            let (b, r, l) = (w.set("B")?, w.set("R")?, w.set("L")?);
            d.regular()
                && b != 0
                && d.is(IdealKind::MRight, r)
                && d.is(IdealKind::MLeft, l)
                && d.rl(r, l) == b
                && !d.is(IdealKind::MBi, b)
        }
        (CheckId::E1, _) => {
            expect_vars(w, &["B"])?;
            let b = w.set("B")?;
            d.bi(b) && !d.is(IdealKind::MTwoSided, d.sides(b).1)
        }
        (CheckId::E2, _) => {
            expect_vars(w, &["A", "B", "k"])?;
            let (a, b, k) = (w.set("A")?, w.set("B")?, w.potency("k")?);
            k != d.m
                && d.bi(a)
                && d.is_at(IdealKind::MBiInterior, b, k)
                && a & b != 0
                && !d.is_at(IdealKind::MBiInterior, a & b, d.m.max(k))
        }
        (CheckId::L1 | CheckId::L2 | CheckId::L4 | CheckId::L5 | CheckId::L6 | CheckId::L7, _) => {
            unreachable!("conjecture-backed check")
        }
    })
}

/// Re-evaluates a failure row on `s` and reports whether its witness
/// really falsifies the check.
///
/// Malformed rows (not a failure, wrong variables, wrong widths, a
/// direction that does not apply) are errors rather than `false`.
pub fn validate_witness(s: &OrderedSemigroup, result: &CheckResult) -> Result<bool> {
    validate_witness_with(s, result, &Conventions::default())
}

pub fn validate_witness_with(
    s: &OrderedSemigroup,
    result: &CheckResult,
    conv: &Conventions,
) -> Result<bool> {
    if result.status != Status::Fails {
        return Err(Error::MalformedWitness(format!(
            "row has status `{}`, not `fails`",
            result.status.as_str()
        )));
    }
    let witness = result
        .witness
        .as_ref()
        .ok_or_else(|| Error::MalformedWitness("failure row without a witness".into()))?;
    let id: CheckId = result.check.parse()?;
    let m = result.m;

    if let Some(text) = dsl_text(id) {
        expect_direction(id, result.direction)?;
        let c = parse_conjecture(text).expect("registry conjecture parses");
        return replay_conjecture(s, &c, m, witness);
    }

    let mut vars = BTreeMap::new();
    for b in witness {
        if vars.insert(b.var.as_str(), b.value).is_some() {
            let var: &String = &b.var;
            return Err(Error::MalformedWitness(format!("`{var}` bound twice")));
        }
    }
    let dir = expect_direction(id, result.direction)?;
    let bound = Bound { s, vars };
    falsifies(&Defs { s, m, conv }, &bound, id, dir)
}
