//! Exact arithmetic: rationals, bivariate polynomials, rational intervals.

pub mod interval;
pub mod poly;
pub mod rational;

pub use interval::RationalInterval;
pub use poly::{poly_equal, BivariatePoly, Monomial};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
