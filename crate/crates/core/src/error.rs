use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Partial-order axiom named in [`Error::NotPartialOrder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl fmt::Display for OrderAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderAxiom::Reflexivity => "reflexivity",
            OrderAxiom::Antisymmetry => "antisymmetry",
            OrderAxiom::Transitivity => "transitivity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("structure size {0} is outside 1..={max}", max = crate::MAX_ORDER)]
    SizeOutOfRange(usize),
    #[error("table shape mismatch: expected {expected}x{expected}, row {row} has {found} entries")]
    ShapeMismatch {
        expected: usize,
        row: usize,
        found: usize,
    },
    #[error("table entry ({row},{col}) = {value} is not an element index")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("relation violates {axiom} at {witness:?}")]
    NotPartialOrder {
        axiom: OrderAxiom,
        witness: (usize, usize, Option<usize>),
    },
    #[error("order not compatible: {a}<={b} but {x}*{a}<={x}*{b} or {a}*{x}<={b}*{x} fails")]
    NotCompatible { a: usize, b: usize, x: usize },
    #[error("subset of width {found} used with a structure of size {expected}")]
    BindingMismatch { expected: usize, found: usize },
    #[error("potency {0} is outside 1..={max}", max = crate::MAX_POTENCY)]
    PotencyOutOfRange(u32),
    #[error("ideal predicates require a non-empty subset")]
    EmptySubset,
    #[error("element index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("not a permutation of 0..{size}")]
    InvalidPermutation { size: usize },
    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
}
