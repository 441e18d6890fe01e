use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::CheckId;
use crate::conjecture::{check_conjecture, parse_conjecture};
use crate::enumeration::downward_closed_bits;
use crate::ideals::{
    ideal_bits, principal_bits, simplicity_with, Conventions, IdealKind, PrincipalPattern,
    SimplicityKind,
};
use crate::outcome::{Binding, CheckResult, Direction, Status, Value, Witness};
use crate::{ideals, OrderedSemigroup, Potency};

pub(super) fn dsl_text(id: CheckId) -> Option<&'static str> {
    Some(match id {
        CheckId::L1 => "forall A in all: A <= cl(A)",
        CheckId::L2 => "forall A in all: cl(cl(A)) = cl(A)",
        CheckId::L4 => "forall A in all forall B in all: cl(A & B) <= cl(A) & cl(B)",
        CheckId::L5 => "forall A in all forall B in all: cl(A | B) = cl(A) | cl(B)",
        CheckId::L6 => "forall A in all forall B in all: cl(A) * cl(B) <= cl(A * B)",
        CheckId::L7 => "forall A in all forall B in all: cl(cl(A) * cl(B)) = cl(A * B)",
        _ => return None,
    })
}

pub(super) fn sub(s: &OrderedSemigroup, var: &str, bits: u16) -> Binding {
    Binding::new(var, Value::Subset(s.wrap(bits)))
}

enum Verdict {
    Holds,
    Skipped,
    Fails(Witness, Option<Direction>),
}

/// Per-(structure, potency) helpers; everything enumerates through the
/// pruned down-set walk.
pub(super) struct Ctx<'a> {
    pub s: &'a OrderedSemigroup,
    pub m: Potency,
    pub conv: Conventions,
    down_sets: Vec<u16>,
}

impl<'a> Ctx<'a> {
    fn new(s: &'a OrderedSemigroup, m: Potency, conv: &Conventions) -> Self {
        Ctx {
            s,
            m,
            conv: *conv,
            down_sets: downward_closed_bits(s),
        }
    }

    fn ideals_at(&self, kind: IdealKind, m: Potency) -> Vec<u16> {
        self.down_sets
            .iter()
            .copied()
            .filter(|&b| ideal_bits(self.s, b, kind, m, &self.conv))
            .collect()
    }

    fn ideals(&self, kind: IdealKind) -> Vec<u16> {
        self.ideals_at(kind, self.m)
    }

    fn is(&self, kind: IdealKind, b: u16) -> bool {
        b != 0 && ideal_bits(self.s, b, kind, self.m, &self.conv)
    }

    fn bi(&self, b: u16) -> bool {
        self.is(IdealKind::MBiInterior, b)
    }

    fn subsemigroups(&self) -> Vec<u16> {
        let s = self.s;
        (1..=s.full_bits())
            .filter(|&b| s.prod(b, b) & !b == 0)
            .collect()
    }

    fn regular(&self) -> bool {
        ideals::is_m_regular(self.s, self.m)
    }

    fn first_irregular(&self) -> Option<usize> {
        (0..self.s.size())
            .find(|&a| !ideals::is_m_regular_element(self.s, a, self.m).expect("in range"))
    }

    fn rl(&self, r: u16, l: u16) -> u16 {
        self.s.down(self.s.prod(r, l))
    }

    /// `(RL]` for every m-right `R` and m-left `L`, first pair kept.
    fn representations(&self) -> BTreeMap<u16, (u16, u16)> {
        let mut out = BTreeMap::new();
        let lefts = self.ideals(IdealKind::MLeft);
        for r in self.ideals(IdealKind::MRight) {
            for &l in &lefts {
                out.entry(self.rl(r, l)).or_insert((r, l));
            }
        }
        out
    }

    fn bi_sides(&self, b: u16) -> (u16, u16) {
        let s = self.s;
        let sm = s.power_bits(self.m);
        (
            s.down(s.prod(s.prod(b, sm), b)),
            s.down(s.prod(s.prod(sm, b), sm)),
        )
    }
}

fn fails(w: Witness) -> Verdict {
    Verdict::Fails(w, None)
}

fn every_ideal_is_bi_interior(cx: &Ctx, kind: IdealKind, var: &str) -> Verdict {
    match cx.ideals(kind).into_iter().find(|&b| !cx.bi(b)) {
        Some(b) => fails(vec![sub(cx.s, var, b)]),
        None => Verdict::Holds,
    }
}

fn pairs<F>(xs: &[u16], ys: &[u16], mut bad: F) -> Option<(u16, u16)>
where
    F: FnMut(u16, u16) -> bool,
{
    xs.iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| bad(x, y))
}

fn run_native(cx: &Ctx, id: CheckId) -> Verdict {
    let s = cx.s;
    let full = s.full_bits();
    match id {
        CheckId::L3 => {
            let all: Vec<u16> = (0..=full).collect();
            match pairs(&all, &all, |a, b| {
                a & !b == 0 && s.down(a) & !s.down(b) != 0
            }) {
                Some((a, b)) => fails(vec![sub(s, "A", a), sub(s, "B", b)]),
                None => Verdict::Holds,
            }
        }
        CheckId::T1 => every_ideal_is_bi_interior(cx, IdealKind::MLeft, "L"),
        CheckId::T1p => every_ideal_is_bi_interior(cx, IdealKind::MRight, "R"),
        CheckId::T2 => every_ideal_is_bi_interior(cx, IdealKind::MTwoSided, "I"),
        CheckId::T5 => every_ideal_is_bi_interior(cx, IdealKind::MQuasi, "Q"),
        CheckId::T6 => every_ideal_is_bi_interior(cx, IdealKind::MBi, "B"),
        CheckId::T7 => every_ideal_is_bi_interior(cx, IdealKind::MInterior, "I"),
        CheckId::T3 => {
            let bis = cx.ideals(IdealKind::MBiInterior);
            match pairs(&bis, &bis, |a, b| a & b != 0 && !cx.bi(a & b)) {
                Some((a, b)) => fails(vec![sub(s, "A", a), sub(s, "B", b)]),
                None => Verdict::Holds,
            }
        }
        CheckId::T4 => {
            let rights = cx.ideals(IdealKind::MRight);
            let lefts = cx.ideals(IdealKind::MLeft);
            match pairs(&rights, &lefts, |r, l| r & l != 0 && !cx.bi(r & l)) {
                Some((r, l)) => fails(vec![sub(s, "R", r), sub(s, "L", l)]),
                None => Verdict::Holds,
            }
        }
        CheckId::T8 => {
            let bad = cx
                .ideals(IdealKind::MBiInterior)
                .into_iter()
                .find(|&b| !cx.bi(s.down(s.prod(b, full))) || !cx.bi(s.down(s.prod(full, b))));
            match bad {
                Some(b) => fails(vec![sub(s, "B", b)]),
                None => Verdict::Holds,
            }
        }
        CheckId::T9 => {
            let bis = cx.ideals(IdealKind::MBiInterior);
            let rights = cx.ideals(IdealKind::MRight);
            match pairs(&bis, &rights, |b, t| b & t != 0 && !cx.bi(b & t)) {
                Some((b, t)) => fails(vec![sub(s, "B", b), sub(s, "T", t)]),
                None => Verdict::Holds,
            }
        }
        CheckId::T10 => {
            if !simplicity_with(s, SimplicityKind::Simple, cx.m, &cx.conv) {
                return Verdict::Skipped;
            }
            match cx
                .ideals(IdealKind::MBiInterior)
                .into_iter()
                .find(|&b| !cx.is(IdealKind::MBi, b))
            {
                Some(b) => fails(vec![sub(s, "B", b)]),
                None => Verdict::Holds,
            }
        }
        CheckId::T11 => {
            let lefts = cx.ideals(IdealKind::MLeft);
            let subs = cx.subsemigroups();
            match pairs(&lefts, &subs, |a, c| !cx.bi(s.down(s.prod(a, c)))) {
                Some((a, c)) => fails(vec![sub(s, "A", a), sub(s, "C", c)]),
                None => Verdict::Holds,
            }
        }
        CheckId::T11p => {
            let rights = cx.ideals(IdealKind::MRight);
            let subs = cx.subsemigroups();
            if let Some((a, c)) = pairs(&rights, &subs, |a, c| !cx.bi(s.down(s.prod(c, a)))) {
                return Verdict::Fails(
                    vec![sub(s, "A", a), sub(s, "C", c)],
                    Some(Direction::AsStated),
                );
            }
            if let Some((c, a)) = pairs(&rights, &subs, |c, a| !cx.bi(s.down(s.prod(c, a)))) {
                return Verdict::Fails(
                    vec![sub(s, "A", a), sub(s, "C", c)],
                    Some(Direction::ProofHypothesis),
                );
            }
            Verdict::Holds
        }
        CheckId::T12 => {
            let simple = simplicity_with(s, SimplicityKind::BiInteriorSimple, cx.m, &cx.conv);
            let principal_ok = |a: usize| {
                principal_bits(s, a, PrincipalPattern::SmASm, cx.m)
                    & principal_bits(s, a, PrincipalPattern::ASmA, cx.m)
                    == full
            };
            let bad_element = (0..s.size()).find(|&a| !principal_ok(a));
            match (simple, bad_element) {
                (true, Some(a)) => Verdict::Fails(
                    vec![Binding::new("a", Value::Element(a))],
                    Some(Direction::Forward),
                ),
                (false, None) => {
                    let b = cx
                        .ideals(IdealKind::MBiInterior)
                        .into_iter()
                        .find(|&b| b != full)
                        .expect("not simple, so a proper bi-interior ideal exists");
                    Verdict::Fails(vec![sub(s, "B", b)], Some(Direction::Converse))
                }
                _ => Verdict::Holds,
            }
        }
        CheckId::T13 => {
            let bis = cx.ideals(IdealKind::MBiInterior);
            let twos = cx.ideals(IdealKind::MTwoSided);
            let lefts = cx.ideals(IdealKind::MLeft);
            let mut bad = None;
            'outer: for &b in &bis {
                for &i in &twos {
                    for &l in &lefts {
                        let bil = s.down(s.prod(s.prod(b, i), l));
                        if b & i & l & !bil != 0 {
                            bad = Some((b, i, l));
                            break 'outer;
                        }
                    }
                }
            }
            match (cx.first_irregular(), bad) {
                (None, Some((b, i, l))) => Verdict::Fails(
                    vec![sub(s, "B", b), sub(s, "I", i), sub(s, "L", l)],
                    Some(Direction::Forward),
                ),
                (Some(a), None) => Verdict::Fails(
                    vec![Binding::new("a", Value::Element(a))],
                    Some(Direction::Converse),
                ),
                _ => Verdict::Holds,
            }
        }
        CheckId::T14 => {
            if !cx.regular() {
                return Verdict::Skipped;
            }
            match cx
                .ideals(IdealKind::MInterior)
                .into_iter()
                .find(|&i| !cx.is(IdealKind::MTwoSided, i))
            {
                Some(i) => fails(vec![sub(s, "I", i)]),
                None => Verdict::Holds,
            }
        }
        CheckId::T15 => {
            let bad = cx.ideals(IdealKind::MBiInterior).into_iter().find(|&b| {
                let (bsb, sbs) = cx.bi_sides(b);
                bsb & sbs != b
            });
            match (cx.first_irregular(), bad) {
                (None, Some(b)) => Verdict::Fails(vec![sub(s, "B", b)], Some(Direction::Forward)),
                (Some(a), None) => Verdict::Fails(
                    vec![Binding::new("a", Value::Element(a))],
                    Some(Direction::Converse),
                ),
                _ => Verdict::Holds,
            }
        }
        CheckId::T16 => {
            if !cx.regular() {
                return Verdict::Skipped;
            }
            let reps = cx.representations();
            for b in cx.subsemigroups() {
                match (reps.get(&b), cx.bi(b)) {
                    (Some(&(r, l)), false) => {
                        return Verdict::Fails(
                            vec![sub(s, "B", b), sub(s, "R", r), sub(s, "L", l)],
                            Some(Direction::Forward),
                        )
                    }
                    (None, true) => {
                        return Verdict::Fails(vec![sub(s, "B", b)], Some(Direction::Converse))
                    }
                    _ => {}
                }
            }
            Verdict::Holds
        }
        CheckId::R1 => {
            let rights = cx.ideals(IdealKind::MRight);
            let lefts = cx.ideals(IdealKind::MLeft);
            let bad = pairs(&rights, &lefts, |r, l| cx.rl(r, l) != r & l);
            match (cx.first_irregular(), bad) {
                (None, Some((r, l))) => Verdict::Fails(
                    vec![sub(s, "R", r), sub(s, "L", l)],
                    Some(Direction::Forward),
                ),
                (Some(a), None) => Verdict::Fails(
                    vec![Binding::new("a", Value::Element(a))],
                    Some(Direction::Converse),
                ),
                _ => Verdict::Holds,
            }
        }
        CheckId::R2 => {
            if !cx.regular() {
                return Verdict::Skipped;
            }
            let reps = cx.representations();
            for b in 1..=full {
                match (cx.is(IdealKind::MBi, b), reps.get(&b)) {
                    (true, None) => {
                        return Verdict::Fails(vec![sub(s, "B", b)], Some(Direction::Forward))
                    }
                    (false, Some(&(r, l))) => {
                        return Verdict::Fails(
                            vec![sub(s, "B", b), sub(s, "R", r), sub(s, "L", l)],
                            Some(Direction::Converse),
                        )
                    }
                    _ => {}
                }
            }
            Verdict::Holds
        }
        CheckId::E1 => {
            let bad = cx
                .ideals(IdealKind::MBiInterior)
                .into_iter()
                .find(|&b| !cx.is(IdealKind::MTwoSided, cx.bi_sides(b).1));
            match bad {
                Some(b) => fails(vec![sub(s, "B", b)]),
                None => Verdict::Holds,
            }
        }
        CheckId::E2 => {
            let ours = cx.ideals(IdealKind::MBiInterior);
            for other in Potency::all().filter(|&k| k != cx.m) {
                let theirs = cx.ideals_at(IdealKind::MBiInterior, other);
                let top = cx.m.max(other);
                let bad = pairs(&ours, &theirs, |a, b| {
                    a & b != 0 && !ideal_bits(s, a & b, IdealKind::MBiInterior, top, &cx.conv)
                });
                if let Some((a, b)) = bad {
                    return fails(vec![
                        sub(s, "A", a),
                        sub(s, "B", b),
                        Binding::new("k", Value::Potency(other)),
                    ]);
                }
            }
            Verdict::Holds
        }
        CheckId::L1 | CheckId::L2 | CheckId::L4 | CheckId::L5 | CheckId::L6 | CheckId::L7 => {
            unreachable!("conjecture-backed check")
        }
    }
}

pub(super) fn run(
    s: &OrderedSemigroup,
    id: CheckId,
    m: Potency,
    conv: &Conventions,
) -> CheckResult {
    if let Some(text) = dsl_text(id) {
        let c = parse_conjecture(text).expect("registry conjecture parses");
        let mut r = match check_conjecture(s, &c, m) {
            Ok(r) => r,
            Err(e) => CheckResult::new(
                s.name(),
                id.as_str(),
                m,
                Status::Error(alloc::format!("{e}")),
            ),
        };
        r.check = id.as_str().into();
        return r;
    }
    let cx = Ctx::new(s, m, conv);
    match run_native(&cx, id) {
        Verdict::Holds => CheckResult::new(s.name(), id.as_str(), m, Status::Holds),
        Verdict::Skipped => CheckResult::new(s.name(), id.as_str(), m, Status::Skipped),
        Verdict::Fails(w, d) => CheckResult::failed(s.name(), id.as_str(), m, w, d),
    }
}
