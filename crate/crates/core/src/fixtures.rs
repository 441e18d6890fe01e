pub(crate) use crate::zoo::*;
use crate::{OrderedSemigroup, Subset};

pub(crate) fn chain3() -> OrderedSemigroup {
    ch3()
}

pub(crate) fn set(s: &OrderedSemigroup, elements: &[usize]) -> Subset {
    s.subset(elements.iter().copied()).unwrap()
}
