//! Slope functions, central charges and wall polynomials.
//!
//! With `omega = alpha H` and `B = beta H` every pairing reduces to the
//! twisted coefficients `(r, a_B, b_B, c_B)`:
//!
//! * `mu  = a_B / (alpha r)`
//! * `nu  = (b_B - alpha^2 r / 2) / (alpha a_B)`
//! * `Z   = (-c_B + s d alpha^2 a_B) + i d alpha (b_B - alpha^2 r / 2)`
//!
//! Each has a numeric form at a rational point and a symbolic form as a
//! polynomial in `(a, b)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::chern::{twist, twist_symbolic, ChernCharacter, Threefold};
use crate::kernel::rational::{format_rational, int, rat, Rational};
use crate::kernel::BivariatePoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiltParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub s: Rational,
}

impl TiltParams {
    /// Panics unless `alpha > 0`.
    pub fn new(alpha: Rational, beta: Rational, s: Rational) -> Self {
        assert!(alpha.is_positive(), "alpha must be positive");
        Self { alpha, beta, s }
    }

    pub fn try_new(alpha: Rational, beta: Rational, s: Rational) -> Option<Self> {
        alpha.is_positive().then_some(Self { alpha, beta, s })
    }

    /// `s = 1/6`.
    pub fn at_sixth(alpha: Rational, beta: Rational) -> Self {
        Self::new(alpha, beta, rat(1, 6))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedSlope {
    Finite(Rational),
    PosInfinity,
}

impl ExtendedSlope {
    fn ratio(num: Rational, den: Rational) -> Self {
        if den.is_zero() {
            ExtendedSlope::PosInfinity
        } else {
            ExtendedSlope::Finite(num / den)
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedSlope::Finite(q) => Some(q),
            ExtendedSlope::PosInfinity => None,
        }
    }
}

impl fmt::Display for ExtendedSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedSlope::Finite(q) => f.write_str(&format_rational(q)),
            ExtendedSlope::PosInfinity => f.write_str("+inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(int(0), int(0))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    /// `Re(self) Im(other) - Im(self) Re(other)`.
    pub fn cross(&self, other: &Self) -> Rational {
        &self.re * &other.im - &self.im * &other.re
    }
}

impl Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for ComplexRational {
    type Output = ComplexRational;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + i*({})", format_rational(&self.re), format_rational(&self.im))
    }
}

pub fn mu(v: &ChernCharacter, p: &TiltParams, x: &Threefold) -> ExtendedSlope {
    let t = twist(v, &p.beta, x);
    ExtendedSlope::ratio(t.ch1, &p.alpha * &t.ch0)
}

/// `b_B - alpha^2 r / 2`, the numerator shared by `nu` and `Im Z`.
fn nu_numerator(t: &ChernCharacter, alpha: &Rational) -> Rational {
    &t.ch2 - alpha * alpha * &t.ch0 / int(2)
}

pub fn nu(v: &ChernCharacter, p: &TiltParams, x: &Threefold) -> ExtendedSlope {
    let t = twist(v, &p.beta, x);
    ExtendedSlope::ratio(nu_numerator(&t, &p.alpha), &p.alpha * &t.ch1)
}

pub fn central_charge(v: &ChernCharacter, p: &TiltParams, x: &Threefold) -> ComplexRational {
    let t = twist(v, &p.beta, x);
    let d = x.d();
    let a2 = &p.alpha * &p.alpha;
    let re = -&t.ch3 + &p.s * &d * &a2 * &t.ch1;
    let im = &d * &p.alpha * nu_numerator(&t, &p.alpha);
    ComplexRational::new(re, im)
}

/// `-Re Z / Im Z`, `+inf` when `Im Z = 0`.
pub fn lambda(v: &ChernCharacter, p: &TiltParams, x: &Threefold) -> ExtendedSlope {
    let z = central_charge(v, p, x);
    ExtendedSlope::ratio(-z.re, z.im)
}

/// `s w^2 ch^B_1 - ch^B_3`; the generalized Bogomolov-Gieseker inequality
/// at `nu = 0` asks this to be non-negative (`s = 1/6`) or positive
/// (`s > 1/6`).
pub fn bg_margin(v: &ChernCharacter, p: &TiltParams, x: &Threefold) -> Rational {
    let t = twist(v, &p.beta, x);
    &p.s * x.d() * &p.alpha * &p.alpha * &t.ch1 - &t.ch3
}

/// Whether a margin satisfies the inequality for the given `s`.
pub fn bg_satisfied(margin: &Rational, s: &Rational) -> bool {
    if *s == rat(1, 6) {
        !margin.is_negative()
    } else {
        margin.is_positive()
    }
}

/// `alpha^2` on the `nu = 0` locus at this `beta`, i.e. `2 b_B / r`.
/// Absent for rank zero.
pub fn nu_zero_alpha_squared(v: &ChernCharacter, beta: &Rational, x: &Threefold) -> Option<Rational> {
    if v.ch0.is_zero() {
        return None;
    }
    let t = twist(v, beta, x);
    Some(int(2) * t.ch2 / t.ch0)
}

/// Symbolic twisted character `(r, a_B, b_B, c_B)` as polynomials in `b`.
pub struct SymbolicTwist {
    pub r: BivariatePoly,
    pub a: BivariatePoly,
    pub b: BivariatePoly,
    pub c: BivariatePoly,
}

impl SymbolicTwist {
    pub fn of(v: &ChernCharacter, x: &Threefold) -> Self {
        let [r, a, b, c] = twist_symbolic(v, x);
        Self { r, a, b, c }
    }

    fn nu_numerator(&self) -> BivariatePoly {
        let alpha = BivariatePoly::alpha();
        &self.b - &(&(&alpha * &alpha) * &self.r).scale(&rat(1, 2))
    }
}

/// `(numerator, denominator)` of `mu` as polynomials.
pub fn mu_fraction(v: &ChernCharacter, x: &Threefold) -> (BivariatePoly, BivariatePoly) {
    let t = SymbolicTwist::of(v, x);
    (t.a.clone(), &BivariatePoly::alpha() * &t.r)
}

/// `(numerator, denominator)` of `nu` as polynomials.
pub fn nu_fraction(v: &ChernCharacter, x: &Threefold) -> (BivariatePoly, BivariatePoly) {
    let t = SymbolicTwist::of(v, x);
    (t.nu_numerator(), &BivariatePoly::alpha() * &t.a)
}

/// `(Re Z, Im Z)` as polynomials in `(a, b)`.
pub fn z_polynomials(v: &ChernCharacter, s: &Rational, x: &Threefold) -> (BivariatePoly, BivariatePoly) {
    let t = SymbolicTwist::of(v, x);
    let alpha = BivariatePoly::alpha();
    let d = x.d();
    let re = &(&(&alpha * &alpha) * &t.a).scale(&(s * &d)) - &t.c;
    let im = (&alpha * &t.nu_numerator()).scale(&d);
    (re, im)
}

/// `Re Z(v) Im Z(w) - Im Z(v) Re Z(w)` as a polynomial.
pub fn cross_polynomial(v: &ChernCharacter, w: &ChernCharacter, s: &Rational, x: &Threefold) -> BivariatePoly {
    let (rv, iv) = z_polynomials(v, s, x);
    let (rw, iw) = z_polynomials(w, s, x);
    &(&rv * &iw) - &(&iv * &rw)
}

/// Vanishes where `nu(v) = nu(w)` away from the infinite loci.
pub fn wall_polynomial(v: &ChernCharacter, w: &ChernCharacter, x: &Threefold) -> BivariatePoly {
    let tv = SymbolicTwist::of(v, x);
    let tw = SymbolicTwist::of(w, x);
    &(&tv.nu_numerator() * &tw.a) - &(&tw.nu_numerator() * &tv.a)
}
