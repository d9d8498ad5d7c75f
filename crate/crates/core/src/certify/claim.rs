use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::kernel::rational::Rational;
use crate::kernel::BivariatePoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = ">0")]
    Positive,
    #[serde(rename = ">=0")]
    NonNegative,
    #[serde(rename = "<0")]
    Negative,
    #[serde(rename = "<=0")]
    NonPositive,
}

impl Sign {
    pub fn is_strict(self) -> bool {
        matches!(self, Sign::Positive | Sign::Negative)
    }

    pub fn is_negative_side(self) -> bool {
        matches!(self, Sign::Negative | Sign::NonPositive)
    }

    fn from_parts(negative: bool, strict: bool) -> Self {
        match (negative, strict) {
            (false, true) => Sign::Positive,
            (false, false) => Sign::NonNegative,
            (true, true) => Sign::Negative,
            (true, false) => Sign::NonPositive,
        }
    }

    pub fn flip(self) -> Self {
        Self::from_parts(!self.is_negative_side(), self.is_strict())
    }

    pub fn weaken(self) -> Self {
        Self::from_parts(self.is_negative_side(), false)
    }

    pub fn holds(self, value: &Rational) -> bool {
        match self {
            Sign::Positive => value.is_positive(),
            Sign::NonNegative => !value.is_negative(),
            Sign::Negative => value.is_negative(),
            Sign::NonPositive => !value.is_positive(),
        }
    }

    /// Sign of a product of factors with these signs.
    pub fn product<I: IntoIterator<Item = Sign>>(signs: I) -> Option<Sign> {
        let mut negative = false;
        let mut strict = true;
        let mut any = false;
        for s in signs {
            any = true;
            negative ^= s.is_negative_side();
            strict &= s.is_strict();
        }
        any.then(|| Self::from_parts(negative, strict))
    }

    /// Whether knowing `self` lets one conclude `target`.
    pub fn implies(self, target: Sign) -> bool {
        self == target || self.weaken() == target
    }

    /// Exact sign of a value, when it is non-zero.
    pub fn of(value: &Rational) -> Option<Sign> {
        if value.is_zero() {
            None
        } else if value.is_positive() {
            Some(Sign::Positive)
        } else {
            Some(Sign::Negative)
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "> 0",
            Sign::NonNegative => ">= 0",
            Sign::Negative => "< 0",
            Sign::NonPositive => "<= 0",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Exact evaluation at the vertices of the region's closure.
    AffineVertex,
    /// Recursive bisection with interval hulls.
    IntervalSubdivision,
    /// An affine expression whose sign follows from the region's own bounds.
    RegionAtom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub expression: BivariatePoly,
    pub sign: Sign,
    pub strategy: Strategy,
}

impl Factor {
    pub fn new(expression: BivariatePoly, sign: Sign, strategy: Strategy) -> Self {
        Self {
            expression,
            sign,
            strategy,
        }
    }

    pub fn constant(c: Rational) -> Self {
        let sign = if c.is_negative() {
            Sign::Negative
        } else if c.is_zero() {
            Sign::NonPositive
        } else {
            Sign::Positive
        };
        Self::new(BivariatePoly::constant(c), sign, Strategy::AffineVertex)
    }

    pub fn affine(text: &str, sign: Sign) -> Self {
        Self::new(parse(text), sign, Strategy::AffineVertex)
    }

    pub fn atom(text: &str, sign: Sign) -> Self {
        Self::new(parse(text), sign, Strategy::RegionAtom)
    }

    pub fn interval(text: &str, sign: Sign) -> Self {
        Self::new(parse(text), sign, Strategy::IntervalSubdivision)
    }
}

fn parse(text: &str) -> BivariatePoly {
    text.parse().unwrap_or_else(|e| panic!("built-in factor {text:?}: {e}"))
}

/// `target` has sign `overall`, argued through a product of signed factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredClaim {
    pub name: String,
    pub target: BivariatePoly,
    pub overall: Sign,
    pub factors: Vec<Factor>,
}

impl FactoredClaim {
    pub fn new(name: impl Into<String>, target: BivariatePoly, overall: Sign, factors: Vec<Factor>) -> Self {
        Self {
            name: name.into(),
            target,
            overall,
            factors,
        }
    }

    pub fn factor_product(&self) -> BivariatePoly {
        self.factors
            .iter()
            .fold(BivariatePoly::constant(Rational::from_integer(1.into())), |acc, f| {
                &acc * &f.expression
            })
    }
}
