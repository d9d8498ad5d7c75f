//! Sparse bivariate polynomials in `a` (alpha) and `b` (beta) over the
//! rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::interval::RationalInterval;
use super::rational::{format_rational, parse_rational, pow, Rational};
use crate::error::ParseError;

/// Exponent pair `a^alpha * b^beta`, ordered graded-lexicographically with
/// `a` before `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub alpha: u32,
    pub beta: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { alpha: 0, beta: 0 };

    pub fn new(alpha: u32, beta: u32) -> Self {
        Self { alpha, beta }
    }

    pub fn degree(self) -> u32 {
        self.alpha + self.beta
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.alpha.cmp(&other.alpha))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with no zero coefficients stored. Structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, alpha: u32, beta: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(alpha, beta), c);
        }
        Self { terms }
    }

    /// The polynomial `a`.
    pub fn alpha() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    /// The polynomial `b`.
    pub fn beta() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// `c0 + ca*a + cb*b`.
    pub fn affine(c0: Rational, ca: Rational, cb: Rational) -> Self {
        let mut p = Self::constant(c0);
        p.add_term(Monomial::new(1, 0), ca);
        p.add_term(Monomial::new(0, 1), cb);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: u32, beta: u32) -> Rational {
        self.terms
            .get(&Monomial::new(alpha, beta))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_alpha(&self) -> u32 {
        self.terms.keys().map(|m| m.alpha).max().unwrap_or(0)
    }

    pub fn degree_beta(&self) -> u32 {
        self.terms.keys().map(|m| m.beta).max().unwrap_or(0)
    }

    pub fn is_affine(&self) -> bool {
        self.degree().is_none_or(|d| d <= 1)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::constant(Rational::one()), |acc, _| &acc * self)
    }

    /// Exact value at `(alpha, beta)`.
    pub fn eval(&self, alpha: &Rational, beta: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c * pow(alpha, m.alpha) * pow(beta, m.beta);
        }
        acc
    }

    /// Naive interval extension: each monomial is bounded by the product of
    /// exact power hulls, and the bounds are summed.
    pub fn eval_interval(&self, alpha: &RationalInterval, beta: &RationalInterval) -> RationalInterval {
        let mut acc = RationalInterval::point(Rational::zero());
        for (m, c) in &self.terms {
            let hull = alpha.powi(m.alpha).mul(&beta.powi(m.beta)).scale(c);
            acc = acc.add(&hull);
        }
        acc
    }

    /// Substitutes `a = value`, leaving a polynomial in `b`.
    pub fn substitute_alpha(&self, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(0, m.beta), c * pow(value, m.alpha));
        }
        out
    }

    /// Substitutes `b = value`, leaving a polynomial in `a`.
    pub fn substitute_beta(&self, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(m.alpha, 0), c * pow(value, m.beta));
        }
        out
    }

    /// Quotient `q` with `self = self(a = t, b) + (a - t) * q`.
    pub fn peel_alpha(&self, t: &Rational) -> Self {
        // a^k = ((a - t) + t)^k; divide (a^k - t^k) by (a - t):
        // sum_{j<k} a^j t^(k-1-j).
        let mut q = Self::zero();
        for (m, c) in &self.terms {
            for j in 0..m.alpha {
                q.add_term(Monomial::new(j, m.beta), c * pow(t, m.alpha - 1 - j));
            }
        }
        q
    }

    /// Quotient `q` with `self = self(a, b = t) + (b - t) * q`.
    pub fn peel_beta(&self, t: &Rational) -> Self {
        let mut q = Self::zero();
        for (m, c) in &self.terms {
            for j in 0..m.beta {
                q.add_term(Monomial::new(m.alpha, j), c * pow(t, m.beta - 1 - j));
            }
        }
        q
    }

    /// `self / a`, when every term carries a factor of `a`.
    pub fn div_alpha(&self) -> Option<Self> {
        self.terms.keys().all(|m| m.alpha >= 1).then(|| Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.alpha - 1, m.beta), c.clone()))
                .collect(),
        })
    }

    /// Copy with the sign of one stored coefficient reversed.
    pub fn negate_term(&self, m: Monomial) -> Self {
        let mut out = self.clone();
        if let Some(c) = out.terms.get_mut(&m) {
            *c = -c.clone();
        }
        out
    }

    /// Affine coefficients `(c0, ca, cb)`, or `None` above degree one.
    pub fn affine_parts(&self) -> Option<(Rational, Rational, Rational)> {
        self.is_affine()
            .then(|| (self.coeff(0, 0), self.coeff(1, 0), self.coeff(0, 1)))
    }
}

/// True iff `p - q` is the zero polynomial.
pub fn poly_equal(p: &BivariatePoly, q: &BivariatePoly) -> bool {
    (p - q).is_zero()
}

impl From<Rational> for BivariatePoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(Monomial::new(m1.alpha + m2.alpha, m1.beta + m2.beta), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr<BivariatePoly> for BivariatePoly {
            type Output = BivariatePoly;
            fn $f(self, rhs: BivariatePoly) -> BivariatePoly { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a BivariatePoly> for BivariatePoly {
            type Output = BivariatePoly;
            fn $f(self, rhs: &BivariatePoly) -> BivariatePoly { (&self).$f(rhs) }
        }
        impl<'a> $tr<BivariatePoly> for &'a BivariatePoly {
            type Output = BivariatePoly;
            fn $f(self, rhs: BivariatePoly) -> BivariatePoly { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        -&self
    }
}

fn write_var(out: &mut String, name: char, exp: u32) {
    match exp {
        0 => {}
        1 => {
            out.push('*');
            out.push(name);
        }
        k => out.push_str(&format!("*{name}^{k}")),
    }
}

/// Terms in descending graded-lex order, each spelled `c*a^i*b^j`.
impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = format_rational(&c.abs());
            match (idx, c.is_negative()) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            out.push_str(&mag);
            write_var(&mut out, 'a', m.alpha);
            write_var(&mut out, 'b', m.beta);
        }
        f.write_str(&out)
    }
}

fn parse_term(term: &str, whole: &str) -> Result<BivariatePoly, ParseError> {
    let err = |msg: &str| ParseError::Polynomial(whole.to_string(), msg.to_string());
    let mut coeff = Rational::one();
    let mut mono = Monomial::ONE;
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(err("empty factor"));
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim().parse::<u32>().map_err(|_| err("bad exponent"))?),
            None => (factor, 1),
        };
        match base {
            "a" => mono.alpha += exp,
            "b" => mono.beta += exp,
            _ if exp == 1 => coeff *= parse_rational(base).map_err(|_| err("bad coefficient"))?,
            _ => return Err(err("exponent on a coefficient")),
        }
    }
    Ok(BivariatePoly::monomial(coeff, mono.alpha, mono.beta))
}

impl FromStr for BivariatePoly {
    type Err = ParseError;

    /// Accepts the `Display` form and looser variants such as `a^2 - 3*b + 1`.
    fn from_str(text: &str) -> Result<Self, ParseError> {
        let err = |msg: &str| ParseError::Polynomial(text.to_string(), msg.to_string());
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut sign_pending = false;
        for ch in text.chars() {
            if ch == '+' || ch == '-' {
                match current.trim_end().chars().last() {
                    None if !sign_pending && pieces.is_empty() => {}
                    None => return Err(err("doubled sign")),
                    Some('*' | '^') => return Err(err("sign inside a term")),
                    Some(_) => pieces.push((negative, std::mem::take(&mut current))),
                }
                negative = ch == '-';
                sign_pending = true;
                continue;
            }
            current.push(ch);
        }
        pieces.push((negative, current));
        let mut out = BivariatePoly::zero();
        for (neg, term) in pieces {
            let term = term.trim();
            if term.is_empty() {
                return Err(err("missing term"));
            }
            let value = parse_term(term, text)?;
            out = if neg { &out - &value } else { &out + &value };
        }
        Ok(out)
    }
}
