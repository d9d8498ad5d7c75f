//! Closed intervals with exact rational endpoints.

use num_traits::{One, Signed, Zero};

use super::rational::{pow, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RationalInterval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval");
        Self { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn bisect(&self) -> (Self, Self) {
        let mid = self.midpoint();
        (Self::new(self.lo.clone(), mid.clone()), Self::new(mid, self.hi.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_negative() {
            Self::new(c * &self.hi, c * &self.lo)
        } else {
            Self::new(c * &self.lo, c * &self.hi)
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Self::new(lo, hi)
    }

    /// Exact range of `x^n` over the interval.
    pub fn powi(&self, n: u32) -> Self {
        if n == 0 {
            return Self::point(Rational::one());
        }
        let lo_p = pow(&self.lo, n);
        let hi_p = pow(&self.hi, n);
        if n % 2 == 1 {
            return Self::new(lo_p, hi_p);
        }
        if self.lo.is_negative() && self.hi.is_positive() {
            Self::new(Rational::zero(), lo_p.max(hi_p))
        } else if lo_p <= hi_p {
            Self::new(lo_p, hi_p)
        } else {
            Self::new(hi_p, lo_p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, rat};

    fn iv(lo: Rational, hi: Rational) -> RationalInterval {
        RationalInterval::new(lo, hi)
    }

    #[test]
    fn power_hulls_are_exact() {
        let x = iv(rat(-1, 2), rat(1, 3));
        assert_eq!(x.powi(2), iv(int(0), rat(1, 4)));
        assert_eq!(x.powi(3), iv(rat(-1, 8), rat(1, 27)));
        assert_eq!(iv(rat(-1, 2), int(0)).powi(2), iv(int(0), rat(1, 4)));
        assert_eq!(iv(int(-3), int(-2)).powi(2), iv(int(4), int(9)));
        assert_eq!(x.powi(0), RationalInterval::point(int(1)));
    }

    #[test]
    fn arithmetic_hulls() {
        let x = iv(int(-1), int(2));
        let y = iv(int(3), int(4));
        assert_eq!(x.add(&y), iv(int(2), int(6)));
        assert_eq!(x.sub(&y), iv(int(-5), int(-1)));
        assert_eq!(x.mul(&y), iv(int(-4), int(8)));
        assert_eq!(x.scale(&int(-2)), iv(int(-4), int(2)));
        assert_eq!(x.neg(), iv(int(-2), int(1)));
        let (l, r) = x.bisect();
        assert_eq!((l.hi.clone(), r.lo.clone()), (rat(1, 2), rat(1, 2)));
    }
}
