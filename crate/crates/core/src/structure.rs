//! Validated finite ordered semigroups and the subset algebra over them.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::subset::{full_mask, mask_iter};
use crate::{Error, OrderAxiom, Result, Subset};

/// Largest supported structure size.
pub const MAX_ORDER: usize = 12;

/// Largest supported potency; powers `S^1..=S^MAX_POTENCY` are cached.
pub const MAX_POTENCY: u8 = 8;

/// The exponent `m` in `S^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Potency(u8);

impl Potency {
    pub const ONE: Potency = Potency(1);

    pub fn new(m: u32) -> Result<Self> {
        if m == 0 || m > MAX_POTENCY as u32 {
            return Err(Error::PotencyOutOfRange(m));
        }
        Ok(Potency(m as u8))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// Every potency in `1..=MAX_POTENCY`.
    pub fn all() -> impl Iterator<Item = Potency> {
        (1..=MAX_POTENCY).map(Potency)
    }
}

impl fmt::Display for Potency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite semigroup with a compatible partial order.
///
/// Instances are immutable and only obtainable through
/// [`OrderedSemigroup::new`], which checks every axiom.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderedSemigroup {
    name: String,
    size: usize,
    // row-major Cayley table
    mul: Vec<u8>,
    // below[h] = { t : t <= h }
    below: Vec<u16>,
    // powers[k - 1] = S^k
    powers: Vec<u16>,
}

impl OrderedSemigroup {
    /// Validates a Cayley table and an order relation (`leq[a][b]` iff
    /// `a <= b`, reflexive pairs included).
    ///
    /// Checks run in the order: size, table shape and range, associativity,
    /// partial-order axioms, compatibility.
    #[allow(clippy::needless_range_loop)]
    pub fn new(name: impl Into<String>, table: &[Vec<usize>], leq: &[Vec<bool>]) -> Result<Self> {
        let n = table.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::SizeOutOfRange(n));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    row,
                    found: entries.len(),
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value });
                }
                mul.push(value as u8);
            }
        }
        if leq.len() != n {
            return Err(Error::ShapeMismatch {
                expected: n,
                row: leq.len().min(n),
                found: 0,
            });
        }
        for (row, entries) in leq.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    row,
                    found: entries.len(),
                });
            }
        }

        let at = |a: usize, b: usize| mul[a * n + b] as usize;
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }

        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::NotPartialOrder {
                    axiom: OrderAxiom::Reflexivity,
                    witness: (a, a, None),
                });
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if leq[a][b] && leq[b][a] {
                    return Err(Error::NotPartialOrder {
                        axiom: OrderAxiom::Antisymmetry,
                        witness: (a, b, None),
                    });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if leq[b][c] && !leq[a][c] {
                        return Err(Error::NotPartialOrder {
                            axiom: OrderAxiom::Transitivity,
                            witness: (a, b, Some(c)),
                        });
                    }
                }
            }
        }

        for a in 0..n {
            for b in 0..n {
                if a == b || !leq[a][b] {
                    continue;
                }
                for x in 0..n {
                    if !leq[at(x, a)][at(x, b)] || !leq[at(a, x)][at(b, x)] {
                        return Err(Error::NotCompatible { a, b, x });
                    }
                }
            }
        }

        let below = (0..n)
            .map(|h| (0..n).filter(|&t| leq[t][h]).fold(0u16, |m, t| m | 1 << t))
            .collect();
        let mut s = OrderedSemigroup {
            name: name.into(),
            size: n,
            mul,
            below,
            powers: Vec::new(),
        };
        let universe = full_mask(n);
        let mut power = universe;
        for _ in 0..MAX_POTENCY {
            s.powers.push(power);
            power = s.prod(power, universe);
        }
        Ok(s)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Copy of the structure under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        OrderedSemigroup {
            name: name.into(),
            ..self.clone()
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b] & (1 << a) != 0
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn relation(&self) -> Vec<Vec<bool>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.leq(a, b)).collect())
            .collect()
    }

    /// Pairs `(i, j)` with `i < j` in the order, sorted lexicographically.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if i != j && self.leq(i, j) {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.size).all(|h| self.below[h] == 1 << h)
    }

    pub fn universe(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.size)
    }

    pub fn singleton(&self, element: usize) -> Result<Subset> {
        Subset::singleton(self.size, element)
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, elements: I) -> Result<Subset> {
        Subset::from_elements(self.size, elements)
    }

    /// Every subset of the universe, including the empty one, in bit order.
    pub fn all_subsets(&self) -> impl Iterator<Item = Subset> {
        let n = self.size;
        (0..=full_mask(n) as u32).map(move |b| Subset::raw(n, b as u16))
    }

    pub(crate) fn bind(&self, a: &Subset) -> Result<u16> {
        if a.width() != self.size {
            return Err(Error::BindingMismatch {
                expected: self.size,
                found: a.width(),
            });
        }
        Ok(a.bits())
    }

    pub(crate) fn check_element(&self, a: usize) -> Result<()> {
        if a >= self.size {
            return Err(Error::IndexOutOfRange {
                index: a,
                size: self.size,
            });
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn wrap(&self, bits: u16) -> Subset {
        Subset::raw(self.size, bits)
    }

    #[inline]
    pub(crate) fn full_bits(&self) -> u16 {
        full_mask(self.size)
    }

    #[inline]
    pub(crate) fn prod(&self, a: u16, b: u16) -> u16 {
        let mut out = 0u16;
        for x in mask_iter(a) {
            let row = &self.mul[x * self.size..(x + 1) * self.size];
            for y in mask_iter(b) {
                out |= 1 << row[y];
            }
        }
        out
    }

    #[inline]
    pub(crate) fn down(&self, h: u16) -> u16 {
        mask_iter(h).fold(0, |acc, x| acc | self.below[x])
    }

    #[inline]
    pub(crate) fn power_bits(&self, m: Potency) -> u16 {
        self.powers[m.get() - 1]
    }

    /// `{ a*b : a in A, b in B }`.
    pub fn product(&self, a: &Subset, b: &Subset) -> Result<Subset> {
        let (a, b) = (self.bind(a)?, self.bind(b)?);
        Ok(self.wrap(self.prod(a, b)))
    }

    /// `S^m`, the set of all products of exactly `m` elements.
    pub fn universe_power(&self, m: Potency) -> Subset {
        self.wrap(self.power_bits(m))
    }

    /// `(H]`: every element below some element of `H`.
    pub fn closure(&self, h: &Subset) -> Result<Subset> {
        let h = self.bind(h)?;
        Ok(self.wrap(self.down(h)))
    }

    pub fn is_downward_closed(&self, a: &Subset) -> Result<bool> {
        let a = self.bind(a)?;
        Ok(self.down(a) == a)
    }

    /// True iff `A` is non-empty and `AA ⊆ A`.
    pub fn is_subsemigroup(&self, a: &Subset) -> Result<bool> {
        let a = self.bind(a)?;
        Ok(a != 0 && self.prod(a, a) & !a == 0)
    }
}

impl fmt::Debug for OrderedSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderedSemigroup")
            .field("name", &self.name)
            .field("table", &self.table())
            .field("order", &self.strict_pairs())
            .finish()
    }
}
