use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::IdealKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exponent {
    Int(u32),
    /// The ambient potency, written `M`.
    Potency,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SetExpr {
    Universe,
    Var(String),
    Singleton(String),
    Product(Box<SetExpr>, Box<SetExpr>),
    Power(Box<SetExpr>, Exponent),
    Closure(Box<SetExpr>),
    Union(Box<SetExpr>, Box<SetExpr>),
    Intersection(Box<SetExpr>, Box<SetExpr>),
}

impl SetExpr {
    pub fn var(name: &str) -> Self {
        SetExpr::Var(name.into())
    }

    pub fn singleton(name: &str) -> Self {
        SetExpr::Singleton(name.into())
    }

    pub fn product(l: SetExpr, r: SetExpr) -> Self {
        SetExpr::Product(Box::new(l), Box::new(r))
    }

    pub fn power(base: SetExpr, e: Exponent) -> Self {
        SetExpr::Power(Box::new(base), e)
    }

    pub fn closure(e: SetExpr) -> Self {
        SetExpr::Closure(Box::new(e))
    }

    pub fn union(l: SetExpr, r: SetExpr) -> Self {
        SetExpr::Union(Box::new(l), Box::new(r))
    }

    pub fn intersection(l: SetExpr, r: SetExpr) -> Self {
        SetExpr::Intersection(Box::new(l), Box::new(r))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Range {
    All,
    Downclosed,
    Elements,
    Kind(IdealKind),
}

impl Range {
    pub fn is_element(self) -> bool {
        self == Range::Elements
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binder {
    pub name: String,
    pub range: Range,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Guard {
    Regular,
    Simple,
    LeftSimple,
    RightSimple,
    BiintSimple,
}

impl Guard {
    pub const ALL: [Guard; 5] = [
        Guard::Regular,
        Guard::Simple,
        Guard::LeftSimple,
        Guard::RightSimple,
        Guard::BiintSimple,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Guard::Regular => "regular",
            Guard::Simple => "simple",
            Guard::LeftSimple => "left_simple",
            Guard::RightSimple => "right_simple",
            Guard::BiintSimple => "biint_simple",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelOp {
    Subset,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: SetExpr,
    pub op: RelOp,
    pub rhs: SetExpr,
}

/// A universally quantified conjunction of set relations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Conjecture {
    pub binders: Vec<Binder>,
    pub guard: Option<Guard>,
    pub body: Vec<Relation>,
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Universe => f.write_str("S"),
            SetExpr::Var(name) => f.write_str(name),
            SetExpr::Singleton(name) => write!(f, "{{{name}}}"),
            SetExpr::Product(l, r) => write!(f, "({l} * {r})"),
            SetExpr::Intersection(l, r) => write!(f, "({l} & {r})"),
            SetExpr::Union(l, r) => write!(f, "({l} | {r})"),
            SetExpr::Closure(e) => write!(f, "cl({e})"),
            SetExpr::Power(base, Exponent::Int(k)) => write!(f, "{base}^{k}"),
            SetExpr::Power(base, Exponent::Potency) => write!(f, "{base}^M"),
        }
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Range::All => f.write_str("all"),
            Range::Downclosed => f.write_str("downclosed"),
            Range::Elements => f.write_str("elements"),
            Range::Kind(k) => write!(f, "kind({k})"),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.op {
            RelOp::Subset => "<=",
            RelOp::Equal => "=",
        };
        write!(f, "{} {op} {}", self.lhs, self.rhs)
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.binders.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "forall {} in {}", b.name, b.range)?;
        }
        if let Some(g) = self.guard {
            write!(f, " where {}", g.keyword())?;
        }
        f.write_str(": ")?;
        for (i, r) in self.body.iter().enumerate() {
            if i > 0 {
                f.write_str(" and ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}
