//! Enumeration of downward-closed subsets and of ideals.

use alloc::string::String;
use alloc::vec::Vec;

use crate::ideals::{ideal_bits, Conventions, IdealKind};
use crate::{OrderedSemigroup, Potency, Subset};

/// Ideals of one kind at one potency, in ascending bit-vector order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealList {
    pub structure: String,
    pub kind: IdealKind,
    pub m: Potency,
    pub subsets: Vec<Subset>,
}

impl IdealList {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }
}

/// Non-empty order ideals of the poset, sorted.
///
/// Walks the elements in a linear extension of the order; an element may
/// join the set only once all of its strict predecessors have, so every
/// down-set is produced exactly once without touching the other subsets.
pub(crate) fn downward_closed_bits(s: &OrderedSemigroup) -> Vec<u16> {
    let n = s.size();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (s.down(1 << e).count_ones(), e));
    let preds: Vec<u16> = order.iter().map(|&e| s.down(1 << e) & !(1 << e)).collect();

    fn walk(order: &[usize], preds: &[u16], i: usize, acc: u16, out: &mut Vec<u16>) {
        if i == order.len() {
            if acc != 0 {
                out.push(acc);
            }
            return;
        }
        walk(order, preds, i + 1, acc, out);
        if preds[i] & !acc == 0 {
            walk(order, preds, i + 1, acc | 1 << order[i], out);
        }
    }

    let mut out = Vec::new();
    walk(&order, &preds, 0, 0, &mut out);
    out.sort_unstable();
    out
}

/// Every non-empty `A` with `(A] = A`, in ascending bit-vector order.
pub fn enumerate_downward_closed(s: &OrderedSemigroup) -> Vec<Subset> {
    downward_closed_bits(s)
        .into_iter()
        .map(|b| s.wrap(b))
        .collect()
}

pub fn enumerate_ideals(s: &OrderedSemigroup, kind: IdealKind, m: Potency) -> IdealList {
    enumerate_ideals_with(s, kind, m, &Conventions::default())
}

pub fn enumerate_ideals_with(
    s: &OrderedSemigroup,
    kind: IdealKind,
    m: Potency,
    conv: &Conventions,
) -> IdealList {
    let subsets = downward_closed_bits(s)
        .into_iter()
        .filter(|&b| ideal_bits(s, b, kind, m, conv))
        .map(|b| s.wrap(b))
        .collect();
    IdealList {
        structure: s.name().into(),
        kind,
        m,
        subsets,
    }
}

pub fn count_ideals(s: &OrderedSemigroup, kind: IdealKind, m: Potency) -> usize {
    downward_closed_bits(s)
        .into_iter()
        .filter(|&b| ideal_bits(s, b, kind, m, &Conventions::default()))
        .count()
}
