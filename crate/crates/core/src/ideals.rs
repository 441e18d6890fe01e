//! Decision procedures for the `m`-potent ideal notions, regularity and
//! simplicity.
//!
//! Every predicate evaluates its defining inclusion literally; the only
//! optimisation in the crate lives in [`crate::enumeration`], so these
//! functions double as the reference oracle for everything else.

use core::fmt;
use core::str::FromStr;

use crate::enumeration::downward_closed_bits;
use crate::{Error, OrderedSemigroup, Potency, Result, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdealKind {
    MLeft,
    MRight,
    MTwoSided,
    MQuasi,
    MBi,
    MInterior,
    MBiInterior,
}

impl IdealKind {
    pub const ALL: [IdealKind; 7] = [
        IdealKind::MLeft,
        IdealKind::MRight,
        IdealKind::MTwoSided,
        IdealKind::MQuasi,
        IdealKind::MBi,
        IdealKind::MInterior,
        IdealKind::MBiInterior,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::MLeft => "m_left",
            IdealKind::MRight => "m_right",
            IdealKind::MTwoSided => "m_two_sided",
            IdealKind::MQuasi => "m_quasi",
            IdealKind::MBi => "m_bi",
            IdealKind::MInterior => "m_interior",
            IdealKind::MBiInterior => "m_bi_interior",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        IdealKind::ALL.into_iter().find(|k| k.name() == s).ok_or(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimplicityKind {
    LeftSimple,
    RightSimple,
    Simple,
    BiInteriorSimple,
}

/// The principal sets `(aS^m a]`, `(S^m a S^m]`, `(S^m a]` and `(aS^m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrincipalPattern {
    ASmA,
    SmASm,
    SmA,
    ASm,
}

/// Interpretation switches for the two places where the definitions admit
/// more than one reading. The defaults are the literal readings.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Conventions {
    /// Also require an m-bi-interior ideal to be a subsemigroup.
    pub strict_bi_interior: bool,
    /// Ignore one-element ideals when deciding left/right simplicity.
    pub exempt_singletons: bool,
}

/// Decides whether `b` is an ideal of the given kind at potency `m`.
pub fn is_ideal(s: &OrderedSemigroup, b: &Subset, kind: IdealKind, m: Potency) -> Result<bool> {
    is_ideal_with(s, b, kind, m, &Conventions::default())
}

pub fn is_ideal_with(
    s: &OrderedSemigroup,
    b: &Subset,
    kind: IdealKind,
    m: Potency,
    conv: &Conventions,
) -> Result<bool> {
    let bits = s.bind(b)?;
    if bits == 0 {
        return Err(Error::EmptySubset);
    }
    Ok(ideal_bits(s, bits, kind, m, conv))
}

pub(crate) fn ideal_bits(
    s: &OrderedSemigroup,
    b: u16,
    kind: IdealKind,
    m: Potency,
    conv: &Conventions,
) -> bool {
    debug_assert!(b != 0);
    if s.down(b) != b {
        return false;
    }
    let sm = s.power_bits(m);
    let within = |x: u16| x & !b == 0;
    let subsemigroup = || within(s.prod(b, b));
    match kind {
        IdealKind::MLeft => subsemigroup() && within(s.prod(sm, b)),
        IdealKind::MRight => subsemigroup() && within(s.prod(b, sm)),
        IdealKind::MTwoSided => subsemigroup() && within(s.prod(sm, b)) && within(s.prod(b, sm)),
        IdealKind::MQuasi => {
            subsemigroup() && within(s.down(s.prod(sm, b)) & s.down(s.prod(b, sm)))
        }
        IdealKind::MBi => subsemigroup() && within(s.prod(s.prod(b, sm), b)),
        IdealKind::MInterior => subsemigroup() && within(s.prod(s.prod(sm, b), sm)),
        IdealKind::MBiInterior => {
            let bsb = s.down(s.prod(s.prod(b, sm), b));
            let sbs = s.down(s.prod(s.prod(sm, b), sm));
            within(bsb & sbs) && (!conv.strict_bi_interior || subsemigroup())
        }
    }
}

pub(crate) fn principal_bits(
    s: &OrderedSemigroup,
    a: usize,
    pattern: PrincipalPattern,
    m: Potency,
) -> u16 {
    let single = 1u16 << a;
    let sm = s.power_bits(m);
    let raw = match pattern {
        PrincipalPattern::ASmA => s.prod(s.prod(single, sm), single),
        PrincipalPattern::SmASm => s.prod(s.prod(sm, single), sm),
        PrincipalPattern::SmA => s.prod(sm, single),
        PrincipalPattern::ASm => s.prod(single, sm),
    };
    s.down(raw)
}

/// Downward closure of the pattern's product with `{a}` in place of the
/// singleton.
pub fn principal_set(
    s: &OrderedSemigroup,
    a: usize,
    pattern: PrincipalPattern,
    m: Potency,
) -> Result<Subset> {
    s.check_element(a)?;
    Ok(s.wrap(principal_bits(s, a, pattern, m)))
}

/// `a <= a x a` for some `x` in `S^m`.
pub fn is_m_regular_element(s: &OrderedSemigroup, a: usize, m: Potency) -> Result<bool> {
    s.check_element(a)?;
    let sm = s.universe_power(m);
    Ok(sm.iter().any(|x| s.leq(a, s.mul(s.mul(a, x), a))))
}

pub fn is_m_regular(s: &OrderedSemigroup, m: Potency) -> bool {
    (0..s.size()).all(|a| is_m_regular_element(s, a, m).expect("index in range"))
}

pub fn simplicity(s: &OrderedSemigroup, kind: SimplicityKind, m: Potency) -> bool {
    simplicity_with(s, kind, m, &Conventions::default())
}

/// Decides simplicity by enumerating every downward-closed candidate.
pub fn simplicity_with(
    s: &OrderedSemigroup,
    kind: SimplicityKind,
    m: Potency,
    conv: &Conventions,
) -> bool {
    let full = s.full_bits();
    let only_universe = |ideal: IdealKind, exempt: bool| {
        downward_closed_bits(s).into_iter().all(|b| {
            b == full || (exempt && b.count_ones() == 1) || !ideal_bits(s, b, ideal, m, conv)
        })
    };
    let exempt = conv.exempt_singletons;
    match kind {
        SimplicityKind::LeftSimple => only_universe(IdealKind::MLeft, exempt),
        SimplicityKind::RightSimple => only_universe(IdealKind::MRight, exempt),
        SimplicityKind::Simple => {
            only_universe(IdealKind::MLeft, exempt) && only_universe(IdealKind::MRight, exempt)
        }
        SimplicityKind::BiInteriorSimple => only_universe(IdealKind::MBiInterior, false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    const M1: Potency = Potency::ONE;

    fn m(k: u32) -> Potency {
        Potency::new(k).unwrap()
    }

    #[test]
    fn ideal_examples() {
        let ch = ch2();
        assert!(is_ideal(&ch, &set(&ch, &[0]), IdealKind::MLeft, M1).unwrap());
        let lz = lz2();
        assert!(!is_ideal(&lz, &set(&lz, &[0]), IdealKind::MLeft, M1).unwrap());
        assert!(is_ideal(&lz, &set(&lz, &[0]), IdealKind::MRight, M1).unwrap());
        assert!(is_ideal(&lz, &set(&lz, &[0]), IdealKind::MBiInterior, M1).unwrap());
        let g = g2();
        assert!(!is_ideal(&g, &set(&g, &[0]), IdealKind::MBiInterior, M1).unwrap());
        let n = n2();
        assert!(is_ideal(&n, &set(&n, &[0]), IdealKind::MInterior, M1).unwrap());
    }

    #[test]
    fn ideal_errors() {
        let ch = ch2();
        assert_eq!(
            is_ideal(&ch, &ch.empty(), IdealKind::MBi, M1),
            Err(Error::EmptySubset)
        );
        assert!(matches!(
            is_ideal(&ch, &Subset::full(3), IdealKind::MBi, M1),
            Err(Error::BindingMismatch { .. })
        ));
    }

    #[test]
    fn universe_is_every_kind() {
        for s in [lz2(), rz2(), ch2(), g2(), n2(), ch3()] {
            for kind in IdealKind::ALL {
                for k in Potency::all() {
                    assert!(is_ideal(&s, &s.universe(), kind, k).unwrap(), "{kind} {k}");
                }
            }
        }
    }

    #[test]
    fn strict_flag_keeps_subsemigroup_bi_interiors() {
        let lz = lz2();
        let conv = Conventions {
            strict_bi_interior: true,
            ..Conventions::default()
        };
        assert!(is_ideal_with(&lz, &set(&lz, &[0]), IdealKind::MBiInterior, M1, &conv).unwrap());
        let n = n2();
        // (BSB] ∩ (SBS] = {0} is not inside {1}
        assert!(!is_ideal(&n, &set(&n, &[1]), IdealKind::MBiInterior, M1).unwrap());
    }

    #[test]
    fn principal_sets() {
        let g = g2();
        assert_eq!(
            principal_set(&g, 0, PrincipalPattern::ASmA, M1).unwrap(),
            g.universe()
        );
        let ch = ch2();
        assert_eq!(
            principal_set(&ch, 0, PrincipalPattern::SmASm, M1).unwrap(),
            set(&ch, &[0])
        );
        let lz = lz2();
        assert_eq!(
            principal_set(&lz, 1, PrincipalPattern::ASm, m(2)).unwrap(),
            set(&lz, &[1])
        );
        assert!(principal_set(&lz, 2, PrincipalPattern::ASm, M1).is_err());
    }

    #[test]
    fn regularity() {
        assert!(is_m_regular_element(&lz2(), 0, M1).unwrap());
        assert!(!is_m_regular_element(&n2(), 1, M1).unwrap());
        assert!(is_m_regular_element(&g2(), 1, m(2)).unwrap());
        assert!(is_m_regular(&lz2(), M1));
        assert!(!is_m_regular(&n2(), M1));
        assert!(is_m_regular(&ch2(), m(3)));
        assert!(is_m_regular_element(&n2(), 2, M1).is_err());
    }

    #[test]
    fn simplicity_examples() {
        assert!(simplicity(&g2(), SimplicityKind::Simple, M1));
        assert!(simplicity(&lz2(), SimplicityKind::LeftSimple, M1));
        assert!(!simplicity(&lz2(), SimplicityKind::RightSimple, M1));
        assert!(!simplicity(&ch2(), SimplicityKind::BiInteriorSimple, M1));
        assert!(simplicity(&g2(), SimplicityKind::BiInteriorSimple, M1));
    }

    #[test]
    fn singleton_exemption() {
        let conv = Conventions {
            exempt_singletons: true,
            ..Conventions::default()
        };
        // LZ2's only proper right ideals are singletons
        assert!(simplicity_with(
            &lz2(),
            SimplicityKind::RightSimple,
            M1,
            &conv
        ));
        assert!(!simplicity_with(
            &ch3(),
            SimplicityKind::LeftSimple,
            M1,
            &conv
        ));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in IdealKind::ALL {
            assert_eq!(k.name().parse::<IdealKind>(), Ok(k));
        }
        assert!("m_nope".parse::<IdealKind>().is_err());
    }
}
