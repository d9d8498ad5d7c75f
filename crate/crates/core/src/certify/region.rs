//! Parameter regions in the `(alpha, beta)` plane.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::ParseError;
use crate::kernel::rational::{format_rational, parse_rational, rat, Rational};
use crate::kernel::RationalInterval;

/// Half-plane cut by the diagonal `alpha = -beta`; both sides are closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SideConstraint {
    #[serde(rename = "alpha <= -beta")]
    AlphaAtMostMinusBeta,
    #[serde(rename = "alpha >= -beta")]
    AlphaAtLeastMinusBeta,
}

impl SideConstraint {
    pub const BOTH: [SideConstraint; 2] = [
        SideConstraint::AlphaAtMostMinusBeta,
        SideConstraint::AlphaAtLeastMinusBeta,
    ];

    pub fn holds(self, alpha: &Rational, beta: &Rational) -> bool {
        let g = alpha + beta;
        match self {
            SideConstraint::AlphaAtMostMinusBeta => g <= Rational::zero(),
            SideConstraint::AlphaAtLeastMinusBeta => g >= Rational::zero(),
        }
    }
}

impl fmt::Display for SideConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SideConstraint::AlphaAtMostMinusBeta => "alpha <= -beta",
            SideConstraint::AlphaAtLeastMinusBeta => "alpha >= -beta",
        })
    }
}

/// A box with per-endpoint openness, optionally cut by a side constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub alpha: RationalInterval,
    /// `(lower open, upper open)`
    pub alpha_open: (bool, bool),
    pub beta: RationalInterval,
    pub beta_open: (bool, bool),
    pub side: Option<SideConstraint>,
}

/// A face of the region's closure that the region itself excludes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpenFace {
    AlphaLo,
    AlphaHi,
    BetaLo,
    BetaHi,
}

impl Region {
    /// `beta` in `[-1/2, 0]`, `alpha` in `(0, 1/3)`.
    pub fn standard() -> Self {
        Self::from_ranges(
            RationalInterval::new(rat(-1, 2), rat(0, 1)),
            RationalInterval::new(rat(0, 1), rat(1, 3)),
        )
    }

    /// Closed `beta` range and open `alpha` range, matching the standard region's
    /// boundary conventions.
    pub fn from_ranges(beta: RationalInterval, alpha: RationalInterval) -> Self {
        Self {
            alpha,
            alpha_open: (true, true),
            beta,
            beta_open: (false, false),
            side: None,
        }
    }

    pub fn with_side(&self, side: SideConstraint) -> Self {
        Self {
            side: Some(side),
            ..self.clone()
        }
    }

    pub fn full(&self) -> Self {
        Self {
            side: None,
            ..self.clone()
        }
    }

    /// Parses `blo:bhi,alo:ahi`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::Region(text.to_string());
        let (b, a) = text.split_once(',').ok_or_else(bad)?;
        let range = |s: &str| -> Result<RationalInterval, ParseError> {
            let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
            let lo = parse_rational(lo)?;
            let hi = parse_rational(hi)?;
            if lo >= hi {
                return Err(bad());
            }
            Ok(RationalInterval::new(lo, hi))
        };
        Ok(Self::from_ranges(range(b)?, range(a)?))
    }

    fn in_range(x: &Rational, iv: &RationalInterval, open: (bool, bool)) -> bool {
        let lo_ok = if open.0 { *x > iv.lo } else { *x >= iv.lo };
        let hi_ok = if open.1 { *x < iv.hi } else { *x <= iv.hi };
        lo_ok && hi_ok
    }

    pub fn contains(&self, alpha: &Rational, beta: &Rational) -> bool {
        Self::in_range(alpha, &self.alpha, self.alpha_open)
            && Self::in_range(beta, &self.beta, self.beta_open)
            && self.side.is_none_or(|s| s.holds(alpha, beta))
    }

    pub fn open_faces(&self) -> Vec<OpenFace> {
        let mut out = Vec::new();
        if self.alpha_open.0 {
            out.push(OpenFace::AlphaLo);
        }
        if self.alpha_open.1 {
            out.push(OpenFace::AlphaHi);
        }
        if self.beta_open.0 {
            out.push(OpenFace::BetaLo);
        }
        if self.beta_open.1 {
            out.push(OpenFace::BetaHi);
        }
        out
    }

    pub fn on_face(&self, face: OpenFace, alpha: &Rational, beta: &Rational) -> bool {
        match face {
            OpenFace::AlphaLo => *alpha == self.alpha.lo,
            OpenFace::AlphaHi => *alpha == self.alpha.hi,
            OpenFace::BetaLo => *beta == self.beta.lo,
            OpenFace::BetaHi => *beta == self.beta.hi,
        }
    }

    /// Vertices `(alpha, beta)` of the closure, in a fixed order.
    pub fn closure_vertices(&self) -> Vec<(Rational, Rational)> {
        let (a0, a1) = (&self.alpha.lo, &self.alpha.hi);
        let (b0, b1) = (&self.beta.lo, &self.beta.hi);
        let mut candidates = vec![
            (a0.clone(), b0.clone()),
            (a0.clone(), b1.clone()),
            (a1.clone(), b0.clone()),
            (a1.clone(), b1.clone()),
        ];
        if self.side.is_some() {
            // alpha + beta = 0 against each edge of the box
            for a in [a0, a1] {
                let b = -a.clone();
                if self.beta.contains(&b) {
                    candidates.push((a.clone(), b));
                }
            }
            for b in [b0, b1] {
                let a = -b.clone();
                if self.alpha.contains(&a) {
                    candidates.push((a, b.clone()));
                }
            }
        }
        let mut out: Vec<(Rational, Rational)> = Vec::new();
        for (a, b) in candidates {
            if self.side.is_none_or(|s| s.holds(&a, &b)) && !out.contains(&(a.clone(), b.clone())) {
                out.push((a, b));
            }
        }
        out.sort();
        out
    }

    /// A point of the region strictly inside the box: the centroid of the
    /// closure vertices.
    pub fn interior_point(&self) -> Option<(Rational, Rational)> {
        let verts = self.closure_vertices();
        if verts.is_empty() {
            return None;
        }
        let n = Rational::from_integer((verts.len() as i64).into());
        let a = verts.iter().map(|v| v.0.clone()).sum::<Rational>() / &n;
        let b = verts.iter().map(|v| v.1.clone()).sum::<Rational>() / &n;
        self.contains(&a, &b).then_some((a, b))
    }

    pub fn describe(&self) -> String {
        let iv = |i: &RationalInterval, o: (bool, bool)| {
            format!(
                "{}{}, {}{}",
                if o.0 { '(' } else { '[' },
                format_rational(&i.lo),
                format_rational(&i.hi),
                if o.1 { ')' } else { ']' }
            )
        };
        let mut s = format!(
            "beta in {}, alpha in {}",
            iv(&self.beta, self.beta_open),
            iv(&self.alpha, self.alpha_open)
        );
        if let Some(side) = self.side {
            s.push_str(&format!(", {side}"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    #[test]
    fn standard_region_membership() {
        let r = Region::standard();
        assert!(r.contains(&rat(1, 4), &int(0)));
        assert!(r.contains(&rat(1, 4), &rat(-1, 2)));
        assert!(!r.contains(&int(0), &rat(-1, 4)));
        assert!(!r.contains(&rat(1, 3), &rat(-1, 4)));
        let b = r.with_side(SideConstraint::AlphaAtMostMinusBeta);
        assert!(b.contains(&rat(1, 8), &rat(-3, 8)));
        assert!(b.contains(&rat(1, 4), &rat(-1, 4)));
        assert!(!b.contains(&rat(1, 4), &rat(-1, 8)));
    }

    #[test]
    fn vertices_with_side() {
        let b = Region::standard().with_side(SideConstraint::AlphaAtMostMinusBeta);
        assert_eq!(
            b.closure_vertices(),
            vec![
                (int(0), rat(-1, 2)),
                (int(0), int(0)),
                (rat(1, 3), rat(-1, 2)),
                (rat(1, 3), rat(-1, 3)),
            ]
        );
        let a = Region::standard().with_side(SideConstraint::AlphaAtLeastMinusBeta);
        assert_eq!(
            a.closure_vertices(),
            vec![(int(0), int(0)), (rat(1, 3), rat(-1, 3)), (rat(1, 3), int(0))]
        );
        let (x, y) = a.interior_point().unwrap();
        assert!(a.contains(&x, &y));
    }

    #[test]
    fn parses_overrides() {
        let r = Region::parse("-1/2:1/2,0:1/3").unwrap();
        assert_eq!(r.beta, RationalInterval::new(rat(-1, 2), rat(1, 2)));
        assert!(Region::parse("0:0,0:1").is_err());
        assert!(Region::parse("a:b,0:1").is_err());
        assert!(Region::parse("-1/2:0").is_err());
    }
}
