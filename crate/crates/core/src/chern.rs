//! Chern characters on Picard-rank-one threefolds.
//!
//! A character is stored as `(ch0, ch1, ch2, ch3)` where `ch1` and `ch2` are
//! coefficients of `H` and `H^2`, and `ch3` is the degree of the 0-cycle.
//! The intersection number `H^3 = d` enters exactly where a product lands in
//! the point class.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::kernel::rational::{format_rational, int, rat, serde_rational, Rational};
use crate::kernel::BivariatePoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threefold {
    pub name: String,
    /// `H^3`.
    pub degree: u32,
}

impl Threefold {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        assert!(degree >= 1, "threefold degree must be positive");
        Self {
            name: name.into(),
            degree,
        }
    }

    /// The smooth quadric in P^4, `H^3 = 2`.
    pub fn quadric() -> Self {
        Self::new("Q", 2)
    }

    pub fn projective_space() -> Self {
        Self::new("P3", 1)
    }

    pub fn d(&self) -> Rational {
        int(self.degree as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernCharacter {
    #[serde(with = "serde_rational")]
    pub ch0: Rational,
    #[serde(with = "serde_rational")]
    pub ch1: Rational,
    #[serde(with = "serde_rational")]
    pub ch2: Rational,
    #[serde(with = "serde_rational")]
    pub ch3: Rational,
}

impl ChernCharacter {
    pub fn new(ch0: Rational, ch1: Rational, ch2: Rational, ch3: Rational) -> Self {
        Self { ch0, ch1, ch2, ch3 }
    }

    pub fn zero() -> Self {
        Self::new(int(0), int(0), int(0), int(0))
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.ch0, &self.ch1, &self.ch2, &self.ch3]
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.ch0 * k, &self.ch1 * k, &self.ch2 * k, &self.ch3 * k)
    }
}

/// Input file form: the four rationals plus an optional display name.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedCharacter {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub character: ChernCharacter,
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            format_rational(&self.ch0),
            format_rational(&self.ch1),
            format_rational(&self.ch2),
            format_rational(&self.ch3)
        )
    }
}

impl<'a> Add<&'a ChernCharacter> for &'a ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, o: &ChernCharacter) -> ChernCharacter {
        ChernCharacter::new(
            &self.ch0 + &o.ch0,
            &self.ch1 + &o.ch1,
            &self.ch2 + &o.ch2,
            &self.ch3 + &o.ch3,
        )
    }
}

impl<'a> Sub<&'a ChernCharacter> for &'a ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, o: &ChernCharacter) -> ChernCharacter {
        self + &-o
    }
}

impl Neg for &ChernCharacter {
    type Output = ChernCharacter;
    fn neg(self) -> ChernCharacter {
        self.scale(&int(-1))
    }
}

impl Add for ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, o: ChernCharacter) -> ChernCharacter {
        &self + &o
    }
}

impl Sub for ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, o: ChernCharacter) -> ChernCharacter {
        &self - &o
    }
}

impl Mul<&ChernCharacter> for i64 {
    type Output = ChernCharacter;
    fn mul(self, v: &ChernCharacter) -> ChernCharacter {
        v.scale(&int(self))
    }
}

/// `ch(O(n)) = (1, n, n^2/2, d n^3/6)`.
pub fn line_bundle_ch(n: i64, x: &Threefold) -> ChernCharacter {
    let n = int(n);
    ChernCharacter::new(int(1), n.clone(), &n * &n / int(2), &n * &n * &n * x.d() / int(6))
}

/// `e^{-beta H} * ch`.
pub fn twist(v: &ChernCharacter, beta: &Rational, x: &Threefold) -> ChernCharacter {
    let d = x.d();
    let b2 = beta * beta;
    let b3 = &b2 * beta;
    ChernCharacter::new(
        v.ch0.clone(),
        &v.ch1 - beta * &v.ch0,
        &v.ch2 - beta * &v.ch1 + &b2 * &v.ch0 / int(2),
        &v.ch3 - &d * beta * &v.ch2 + &d * &b2 * &v.ch1 / int(2) - &d * &b3 * &v.ch0 / int(6),
    )
}

/// Character of `v ⊗ O(n)`.
pub fn tensor_line(v: &ChernCharacter, n: i64, x: &Threefold) -> ChernCharacter {
    twist(v, &int(-n), x)
}

/// Character of `v[k]`.
pub fn shift(v: &ChernCharacter, k: i64) -> ChernCharacter {
    if k.rem_euclid(2) == 0 {
        v.clone()
    } else {
        -v
    }
}

/// Twisted character with `beta` left symbolic: each entry is a polynomial
/// in `b` (constant in `a`).
pub fn twist_symbolic(v: &ChernCharacter, x: &Threefold) -> [BivariatePoly; 4] {
    let c = |q: &Rational| BivariatePoly::constant(q.clone());
    let b = BivariatePoly::beta();
    let b2 = &b * &b;
    let b3 = &b2 * &b;
    let d = x.d();
    let ch0 = c(&v.ch0);
    let ch1 = &c(&v.ch1) - &(&b * &c(&v.ch0));
    let ch2 = &(&c(&v.ch2) - &(&b * &c(&v.ch1))) + &(&b2 * &c(&v.ch0)).scale(&rat(1, 2));
    let ch3 = c(&v.ch3) - (&b * &c(&v.ch2)).scale(&d) + (&b2 * &c(&v.ch1)).scale(&(&d / int(2)))
        - (&b3 * &c(&v.ch0)).scale(&(&d / int(6)));
    [ch0, ch1, ch2, ch3]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectLabel {
    Line(i64),
    /// `S(-1)`.
    SpinorTwisted,
    Spinor,
    Skyscraper,
}

impl fmt::Display for ObjectLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectLabel::Line(0) => f.write_str("O"),
            ObjectLabel::Line(n) => write!(f, "O({n})"),
            ObjectLabel::SpinorTwisted => f.write_str("S(-1)"),
            ObjectLabel::Spinor => f.write_str("S"),
            ObjectLabel::Skyscraper => f.write_str("k(x)"),
        }
    }
}

impl FromStr for ObjectLabel {
    type Err = ParseError;

    /// Accepts `O`, `O(n)`, `On`, `S`, `S(-1)`, `S-1`, `k(x)`, `kx`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::Label(s.to_string());
        let t = s.trim();
        match t {
            "O" => return Ok(ObjectLabel::Line(0)),
            "S" => return Ok(ObjectLabel::Spinor),
            "S(-1)" | "S-1" => return Ok(ObjectLabel::SpinorTwisted),
            "k(x)" | "kx" => return Ok(ObjectLabel::Skyscraper),
            _ => {}
        }
        let rest = t.strip_prefix('O').ok_or_else(bad)?;
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
        inner.parse::<i64>().map(ObjectLabel::Line).map_err(|_| bad())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogObject {
    pub label: ObjectLabel,
    pub character: ChernCharacter,
    pub shift: i64,
    /// Recorded slope-stability fact, not derived here.
    pub mu_stable: bool,
}

impl CatalogObject {
    /// Character of the shifted object.
    pub fn shifted_character(&self) -> ChernCharacter {
        shift(&self.character, self.shift)
    }

    pub fn with_shift(&self, k: i64) -> Self {
        Self {
            shift: k,
            ..self.clone()
        }
    }

    pub fn display_name(&self) -> String {
        match self.shift {
            0 => self.label.to_string(),
            k => format!("{}[{k}]", self.label),
        }
    }
}

/// `ch(S(-1))` on the quadric.
pub fn spinor_twisted_ch() -> ChernCharacter {
    ChernCharacter::new(int(2), int(-1), int(0), rat(1, 6))
}

/// Character of a catalog label on the quadric.
pub fn quadric_ch(label: ObjectLabel) -> ChernCharacter {
    let q = Threefold::quadric();
    match label {
        ObjectLabel::Line(n) => line_bundle_ch(n, &q),
        ObjectLabel::SpinorTwisted => spinor_twisted_ch(),
        ObjectLabel::Spinor => tensor_line(&spinor_twisted_ch(), 1, &q),
        ObjectLabel::Skyscraper => ChernCharacter::new(int(0), int(0), int(0), int(1)),
    }
}

/// `O(-1), S(-1), O, O(1), S, k(x)` on the quadric.
pub fn quadric_catalog() -> Vec<CatalogObject> {
    use ObjectLabel::*;
    [Line(-1), SpinorTwisted, Line(0), Line(1), Spinor, Skyscraper]
        .into_iter()
        .map(|label| CatalogObject {
            label,
            character: quadric_ch(label),
            shift: 0,
            mu_stable: !matches!(label, Skyscraper),
        })
        .collect()
}

/// `ch(O(-1)) - 2 ch(S(-1)) + 4 ch(O) - ch(O(1)) + ch(k(x))`, which vanishes
/// by the Kapranov resolution of a point.
pub fn resolution_defect(catalog: &[CatalogObject]) -> ChernCharacter {
    let get = |l: ObjectLabel| -> ChernCharacter {
        catalog
            .iter()
            .find(|o| o.label == l)
            .map(|o| o.character.clone())
            .unwrap_or_else(|| quadric_ch(l))
    };
    use ObjectLabel::*;
    let mut acc = get(Line(-1));
    acc = &acc - &(2 * &get(SpinorTwisted));
    acc = &acc + &(4 * &get(Line(0)));
    acc = &acc - &get(Line(1));
    &acc + &get(Skyscraper)
}

/// `ch(S(-1)) + ch(S) - 4 ch(O)`, zero by the spinor sequence.
pub fn spinor_defect(catalog: &[CatalogObject]) -> ChernCharacter {
    let q = Threefold::quadric();
    let s_minus = catalog
        .iter()
        .find(|o| o.label == ObjectLabel::SpinorTwisted)
        .map(|o| o.character.clone())
        .unwrap_or_else(spinor_twisted_ch);
    let s = tensor_line(&s_minus, 1, &q);
    &(&s_minus + &s) - &(4 * &line_bundle_ch(0, &q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(a: Rational, b: Rational, c: Rational, d: Rational) -> ChernCharacter {
        ChernCharacter::new(a, b, c, d)
    }

    #[test]
    fn line_bundles_on_quadric() {
        let q = Threefold::quadric();
        assert_eq!(line_bundle_ch(1, &q), ch(int(1), int(1), rat(1, 2), rat(1, 3)));
        assert_eq!(line_bundle_ch(0, &q), ch(int(1), int(0), int(0), int(0)));
        assert_eq!(line_bundle_ch(-1, &q), ch(int(1), int(-1), rat(1, 2), rat(-1, 3)));
    }

    #[test]
    fn twist_examples() {
        let q = Threefold::quadric();
        let beta = rat(-2, 7);
        for n in -3..=3 {
            let m = int(n) - &beta;
            let expect = ch(int(1), m.clone(), &m * &m / int(2), &m * &m * &m / int(3));
            assert_eq!(twist(&line_bundle_ch(n, &q), &beta, &q), expect);
        }
        let v = spinor_twisted_ch();
        assert_eq!(twist(&v, &int(0), &q), v);
        let b = &beta;
        let expect = ch(
            int(2),
            int(-1) - int(2) * b,
            b * (b + int(1)),
            rat(1, 6) - b * b - rat(2, 3) * b * b * b,
        );
        assert_eq!(twist(&v, b, &q), expect);
    }

    #[test]
    fn tensor_and_shift() {
        let q = Threefold::quadric();
        let s = tensor_line(&spinor_twisted_ch(), 1, &q);
        assert_eq!(s, ch(int(2), int(1), int(0), rat(-1, 6)));
        // Spinor sequence route.
        assert_eq!(s, &(4 * &line_bundle_ch(0, &q)) - &spinor_twisted_ch());
        assert_eq!(tensor_line(&s, 0, &q), s);
        assert_eq!(tensor_line(&line_bundle_ch(0, &q), 1, &q), line_bundle_ch(1, &q));
        assert_eq!(shift(&s, 2), s);
        assert_eq!(shift(&line_bundle_ch(0, &q), 1), ch(int(-1), int(0), int(0), int(0)));
        assert_eq!(shift(&shift(&s, 1), 1), s);
        assert_eq!(shift(&s, -1), -&s);
    }

    #[test]
    fn skyscraper_from_resolution_alternating_sum() {
        let q = Threefold::quadric();
        let alt = &(&(&line_bundle_ch(1, &q) - &(4 * &line_bundle_ch(0, &q))) + &(2 * &spinor_twisted_ch()))
            - &line_bundle_ch(-1, &q);
        assert_eq!(alt, quadric_ch(ObjectLabel::Skyscraper));
        assert_eq!(alt, ch(int(0), int(0), int(0), int(1)));
        assert!(resolution_defect(&quadric_catalog()).is_zero());
        assert!(spinor_defect(&quadric_catalog()).is_zero());
    }

    #[test]
    fn catalog_contents() {
        let cat = quadric_catalog();
        assert_eq!(cat.len(), 6);
        let s_minus = cat.iter().find(|o| o.label == ObjectLabel::SpinorTwisted).unwrap();
        assert_eq!(s_minus.character, ch(int(2), int(-1), int(0), rat(1, 6)));
        assert!(s_minus.mu_stable);
        assert!(
            !cat.iter()
                .find(|o| o.label == ObjectLabel::Skyscraper)
                .unwrap()
                .mu_stable
        );
    }

    #[test]
    fn labels_parse() {
        assert_eq!("O".parse::<ObjectLabel>().unwrap(), ObjectLabel::Line(0));
        assert_eq!("O(-1)".parse::<ObjectLabel>().unwrap(), ObjectLabel::Line(-1));
        assert_eq!("O2".parse::<ObjectLabel>().unwrap(), ObjectLabel::Line(2));
        assert_eq!("S-1".parse::<ObjectLabel>().unwrap(), ObjectLabel::SpinorTwisted);
        assert_eq!("kx".parse::<ObjectLabel>().unwrap(), ObjectLabel::Skyscraper);
        for bad in ["", "T", "O(x)", "S(1)"] {
            assert!(bad.parse::<ObjectLabel>().is_err());
        }
        for label in [ObjectLabel::Line(-3), ObjectLabel::Spinor, ObjectLabel::Skyscraper] {
            assert_eq!(label.to_string().parse::<ObjectLabel>().unwrap(), label);
        }
    }

    #[test]
    fn json_form() {
        let text = r#"{"ch0":"2","ch1":"-1","ch2":"0","ch3":"1/6","name":"S(-1)"}"#;
        let named: NamedCharacter = serde_json::from_str(text).unwrap();
        assert_eq!(named.character, spinor_twisted_ch());
        assert_eq!(named.name.as_deref(), Some("S(-1)"));
        assert!(serde_json::from_str::<NamedCharacter>(r#"{"ch0":"x","ch1":"0","ch2":"0","ch3":"0"}"#).is_err());
    }

    #[test]
    fn symbolic_twist_matches_numeric() {
        let q = Threefold::quadric();
        let v = spinor_twisted_ch();
        let sym = twist_symbolic(&v, &q);
        let beta = rat(5, 11);
        let num = twist(&v, &beta, &q);
        for (s, n) in sym.iter().zip(num.components()) {
            assert_eq!(&s.eval(&int(0), &beta), n);
        }
    }
}
