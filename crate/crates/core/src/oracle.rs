//! Unpruned, definition-by-definition evaluation used to replay witnesses.
//!
//! Nothing here goes through [`crate::enumeration`]: candidate sets are
//! all `2^n - 1` non-empty subsets, filtered by the ideal predicates.

use alloc::vec::Vec;

use crate::ideals::{ideal_bits, is_m_regular_element, Conventions, IdealKind, SimplicityKind};
use crate::{OrderedSemigroup, Potency};

pub(crate) fn ideals(
    s: &OrderedSemigroup,
    kind: IdealKind,
    m: Potency,
    conv: &Conventions,
) -> Vec<u16> {
    (1..=s.full_bits())
        .filter(|&b| ideal_bits(s, b, kind, m, conv))
        .collect()
}

pub(crate) fn is_regular(s: &OrderedSemigroup, m: Potency) -> bool {
    (0..s.size()).all(|a| is_m_regular_element(s, a, m).expect("index in range"))
}

pub(crate) fn simple(
    s: &OrderedSemigroup,
    kind: SimplicityKind,
    m: Potency,
    conv: &Conventions,
) -> bool {
    let full = s.full_bits();
    let only = |k: IdealKind, exempt: bool| {
        ideals(s, k, m, conv)
            .into_iter()
            .all(|b| b == full || (exempt && b.count_ones() == 1))
    };
    let exempt = conv.exempt_singletons;
    match kind {
        SimplicityKind::LeftSimple => only(IdealKind::MLeft, exempt),
        SimplicityKind::RightSimple => only(IdealKind::MRight, exempt),
        SimplicityKind::Simple => only(IdealKind::MLeft, exempt) && only(IdealKind::MRight, exempt),
        SimplicityKind::BiInteriorSimple => only(IdealKind::MBiInterior, false),
    }
}
