//! Small named ordered semigroups used throughout the docs and tests.

use alloc::vec;
use alloc::vec::Vec;

use crate::OrderedSemigroup;

/// The equality relation on `n` elements.
pub fn discrete(n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect()
}

/// The chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect()
}

fn build(name: &str, table: Vec<Vec<usize>>, leq: Vec<Vec<bool>>) -> OrderedSemigroup {
    OrderedSemigroup::new(name, &table, &leq).expect("zoo structure is valid")
}

/// Left-zero band `xy = x`, discrete order.
pub fn lz2() -> OrderedSemigroup {
    build("LZ2", vec![vec![0, 0], vec![1, 1]], discrete(2))
}

/// Right-zero band `xy = y`, discrete order.
pub fn rz2() -> OrderedSemigroup {
    build("RZ2", vec![vec![0, 1], vec![0, 1]], discrete(2))
}

/// Two-element chain under `min`, `0 < 1`.
pub fn ch2() -> OrderedSemigroup {
    build("CH2", vec![vec![0, 0], vec![0, 1]], chain(2))
}

/// Cyclic group of order two (addition mod 2), discrete order.
pub fn g2() -> OrderedSemigroup {
    build("G2", vec![vec![0, 1], vec![1, 0]], discrete(2))
}

/// Null semigroup `xy = 0`, discrete order.
pub fn n2() -> OrderedSemigroup {
    build("N2", vec![vec![0, 0], vec![0, 0]], discrete(2))
}

/// Three-element chain under `min`, `0 < 1 < 2`.
pub fn ch3() -> OrderedSemigroup {
    build(
        "CH3",
        vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]],
        chain(3),
    )
}
