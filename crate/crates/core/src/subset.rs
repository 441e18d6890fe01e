use alloc::string::String;
use core::fmt;

use crate::{Error, Result, MAX_ORDER};

/// A subset of the elements `0..width` of some structure, stored as a bit
/// vector (bit `i` set iff element `i` belongs to the subset).
///
/// Ordering is by bit-vector value, which is the order every enumeration
/// in this crate emits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    width: u8,
    bits: u16,
}

pub(crate) const fn full_mask(width: usize) -> u16 {
    if width >= 16 {
        u16::MAX
    } else {
        ((1u32 << width) - 1) as u16
    }
}

impl Subset {
    /// Builds a subset from raw bits, rejecting bits at positions `>= width`.
    pub fn from_bits(width: usize, bits: u16) -> Result<Self> {
        if width == 0 || width > MAX_ORDER {
            return Err(Error::SizeOutOfRange(width));
        }
        if bits & !full_mask(width) != 0 {
            let index = 15 - bits.leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, size: width });
        }
        Ok(Subset {
            width: width as u8,
            bits,
        })
    }

    pub(crate) const fn raw(width: usize, bits: u16) -> Self {
        Subset {
            width: width as u8,
            bits,
        }
    }

    pub fn empty(width: usize) -> Self {
        Subset::raw(width, 0)
    }

    pub fn full(width: usize) -> Self {
        Subset::raw(width, full_mask(width))
    }

    pub fn singleton(width: usize, element: usize) -> Result<Self> {
        if element >= width {
            return Err(Error::IndexOutOfRange {
                index: element,
                size: width,
            });
        }
        Ok(Subset::raw(width, 1 << element))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(width: usize, elements: I) -> Result<Self> {
        let mut bits = 0u16;
        for e in elements {
            if e >= width {
                return Err(Error::IndexOutOfRange {
                    index: e,
                    size: width,
                });
            }
            bits |= 1 << e;
        }
        Subset::from_bits(width, bits)
    }

    /// Parses the bit-string form produced by [`Subset::to_bit_string`].
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let width = s.chars().count();
        let mut bits = 0u16;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' if i < MAX_ORDER => bits |= 1 << i,
                '0' => {}
                _ => {
                    return Err(Error::MalformedWitness(alloc::format!(
                        "bad bit string `{s}`"
                    )))
                }
            }
        }
        Subset::from_bits(width, bits)
    }

    /// Character `i` is `1` iff element `i` is in the subset.
    pub fn to_bit_string(&self) -> String {
        (0..self.width())
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }

    #[inline]
    pub fn bits(&self) -> u16 {
        self.bits
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width as usize
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        element < self.width() && self.bits & (1 << element) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.width())
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.check_width(other);
        self.bits & !other.bits == 0
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.check_width(other);
        Subset::raw(self.width(), self.bits & other.bits)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.check_width(other);
        Subset::raw(self.width(), self.bits | other.bits)
    }

    /// Same subset with element `element` toggled.
    pub fn toggled(&self, element: usize) -> Subset {
        assert!(element < self.width(), "element {element} out of range");
        Subset::raw(self.width(), self.bits ^ (1 << element))
    }

    pub fn iter(&self) -> Elements {
        Elements(self.bits)
    }

    fn check_width(&self, other: &Subset) {
        assert_eq!(self.width, other.width, "subsets of different widths");
    }
}

/// Iterator over the elements of a [`Subset`] in increasing order.
#[derive(Debug, Clone)]
pub struct Elements(u16);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Iterates the indices of the set bits of a raw mask.
#[inline]
pub(crate) fn mask_iter(bits: u16) -> Elements {
    Elements(bits)
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.width)
    }
}
