#![allow(dead_code)]

use osg_core::generation::{generate_corpus, GenerationSpec};
use osg_core::zoo::{chain, discrete};
use osg_core::{OrderedSemigroup, Potency, Subset};
use proptest::prelude::*;

pub fn corpus(n: usize) -> Vec<OrderedSemigroup> {
    generate_corpus(&GenerationSpec::new(n, false).unwrap()).unwrap()
}

pub fn potencies(k: u32) -> Vec<Potency> {
    (1..=k).map(|m| Potency::new(m).unwrap()).collect()
}

fn build(
    name: &str,
    n: usize,
    f: impl Fn(usize, usize) -> usize,
    leq: Vec<Vec<bool>>,
) -> OrderedSemigroup {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
    OrderedSemigroup::new(name, &table, &leq).unwrap()
}

/// Transitive closure of a random relation that only points upward in
/// index order, so it is always a partial order.
#[allow(clippy::needless_range_loop)]
fn upward_poset(n: usize, edges: &[bool]) -> Vec<Vec<bool>> {
    let mut r = discrete(n);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            r[i][j] = edges[k % edges.len().max(1)];
            k += 1;
        }
    }
    for via in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][via] && r[via][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

/// Structures of every size up to the cap, from a handful of families
/// whose orders are compatible by construction.
pub fn arb_structure() -> impl Strategy<Value = OrderedSemigroup> {
    (
        1usize..=12,
        0u8..6,
        proptest::collection::vec(any::<bool>(), 66),
    )
        .prop_map(|(n, family, edges)| match family {
            0 => build("min", n, |a, b| a.min(b), chain(n)),
            1 => build("max", n, |a, b| a.max(b), chain(n)),
            2 => build("cyclic", n, |a, b| (a + b) % n, discrete(n)),
            3 => build("left_zero", n, |a, _| a, discrete(n)),
            4 => build("right_zero", n, |_, b| b, discrete(n)),
            _ => build("null", n, |_, _| 0, upward_poset(n, &edges)),
        })
}

/// A structure together with three subsets of matching width.
pub fn arb_with_subsets() -> impl Strategy<Value = (OrderedSemigroup, Subset, Subset, Subset)> {
    arb_structure().prop_flat_map(|s| {
        let n = s.size();
        let top = (1u32 << n) - 1;
        let sub = move || (0..=top).prop_map(move |b| Subset::from_bits(n, b as u16).unwrap());
        (Just(s), sub(), sub(), sub())
    })
}
