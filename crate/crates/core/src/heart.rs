//! The heart generated by `O(-1)[3], S(-1)[2], O[1], O(1)` on the quadric,
//! in terms of dimension vectors.
//!
//! Candidate subobjects of a skyscraper sheaf are enumerated from
//! declarative rules, then reduced to a small base set by Im Z dominance:
//! removing a generator whose Im Z is `<= 0` (or adding one whose Im Z is
//! `>= 0`) cannot decrease Im Z.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::certify::{Region, SideConstraint, Sign};
use crate::chern::{quadric_catalog, CatalogObject, ChernCharacter, ObjectLabel, Threefold};
use crate::error::{Error, Result};
use crate::kernel::rational::{int, Rational};
use crate::kernel::BivariatePoly;
use crate::tilt::{central_charge, z_polynomials, ComplexRational, TiltParams};

/// Multiplicities of `O(-1)[3], S(-1)[2], O[1], O(1)`. JSON form `[a, b, c, d]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 4]", into = "[u32; 4]")]
pub struct DimensionVector(pub [u32; 4]);

impl DimensionVector {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Self([a, b, c, d])
    }

    /// `v(k(x))`, read off the resolution of a point.
    pub const SKYSCRAPER: DimensionVector = DimensionVector([1, 2, 4, 1]);

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }
}

impl From<[u32; 4]> for DimensionVector {
    fn from(v: [u32; 4]) -> Self {
        Self(v)
    }
}

impl From<DimensionVector> for [u32; 4] {
    fn from(v: DimensionVector) -> Self {
        v.0
    }
}

impl std::ops::Add for DimensionVector {
    type Output = DimensionVector;
    fn add(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// The four simple objects, in dimension-vector order.
pub fn heart_generators() -> [CatalogObject; 4] {
    let cat = quadric_catalog();
    let find = |l: ObjectLabel| cat.iter().find(|o| o.label == l).unwrap().clone();
    [
        find(ObjectLabel::Line(-1)).with_shift(3),
        find(ObjectLabel::SpinorTwisted).with_shift(2),
        find(ObjectLabel::Line(0)).with_shift(1),
        find(ObjectLabel::Line(1)),
    ]
}

pub const GENERATOR_NAMES: [&str; 4] = ["O(-1)[3]", "S(-1)[2]", "O[1]", "O(1)"];

/// Same generators with characters taken from a (possibly altered) catalog.
pub fn heart_generators_from(catalog: &[CatalogObject]) -> [CatalogObject; 4] {
    heart_generators().map(|g| {
        let character = catalog
            .iter()
            .find(|o| o.label == g.label)
            .map(|o| o.character.clone())
            .unwrap_or(g.character.clone());
        CatalogObject { character, ..g }
    })
}

pub fn heart_ch(v: DimensionVector, _x: &Threefold) -> ChernCharacter {
    heart_ch_with(v, &heart_generators())
}

pub fn heart_ch_with(v: DimensionVector, gens: &[CatalogObject; 4]) -> ChernCharacter {
    gens.iter().zip(v.0).fold(ChernCharacter::zero(), |acc, (g, k)| {
        &acc + &g.shifted_character().scale(&int(k as i64))
    })
}

pub fn heart_z(v: DimensionVector, p: &TiltParams, x: &Threefold) -> ComplexRational {
    central_charge(&heart_ch(v, x), p, x)
}

/// `(Re Z, Im Z)` of each generator as polynomials.
pub fn generator_z_polynomials(
    gens: &[CatalogObject; 4],
    s: &Rational,
    x: &Threefold,
) -> [(BivariatePoly, BivariatePoly); 4] {
    std::array::from_fn(|i| z_polynomials(&gens[i].shifted_character(), s, x))
}

/// Im Z of `v` summed generator by generator.
pub fn heart_im_by_additivity(
    v: DimensionVector,
    gens: &[CatalogObject; 4],
    s: &Rational,
    x: &Threefold,
) -> BivariatePoly {
    generator_z_polynomials(gens, s, x)
        .iter()
        .zip(v.0)
        .fold(BivariatePoly::zero(), |acc, ((_, im), k)| {
            &acc + &im.scale(&int(k as i64))
        })
}

/// One constraint on dimension vectors of subobjects of `k(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    /// Componentwise `v <= bound`.
    BoundedBy {
        bound: DimensionVector,
        reason: &'static str,
    },
    /// `v[component] == value`.
    Forced {
        component: usize,
        value: u32,
        reason: &'static str,
    },
    /// `v[if_component] == if_value` implies `v[then_component] == then_value`.
    Implies {
        if_component: usize,
        if_value: u32,
        then_component: usize,
        then_value: u32,
        reason: &'static str,
    },
}

impl Rule {
    pub fn admits(&self, v: DimensionVector) -> bool {
        match *self {
            Rule::BoundedBy { bound, .. } => (0..4).all(|i| v.get(i) <= bound.get(i)),
            Rule::Forced { component, value, .. } => v.get(component) == value,
            Rule::Implies {
                if_component,
                if_value,
                then_component,
                then_value,
                ..
            } => v.get(if_component) != if_value || v.get(then_component) == then_value,
        }
    }

    pub fn reason(&self) -> &'static str {
        match self {
            Rule::BoundedBy { reason, .. } | Rule::Forced { reason, .. } | Rule::Implies { reason, .. } => reason,
        }
    }
}

/// Constraints on a proper subobject `F` of `k(x)` in the heart.
pub fn skyscraper_rules() -> Vec<Rule> {
    vec![
        Rule::BoundedBy {
            bound: DimensionVector::SKYSCRAPER,
            reason: "F is a subobject of k(x), so v(F) <= v(k(x))",
        },
        Rule::Forced {
            component: 3,
            value: 1,
            reason: "O(1) is the only simple object mapping nontrivially to k(x), so d = 1",
        },
        Rule::Forced {
            component: 0,
            value: 0,
            reason: "O(-1)[3] is the only simple quotient of k(x), so a = 0",
        },
        Rule::Implies {
            if_component: 1,
            if_value: 2,
            then_component: 2,
            then_value: 4,
            reason: "Hom(k(x), O[1]) = 0 forces b = 2 => c = 4",
        },
    ]
}

/// Largest multiplicity searched when no bounding rule is active.
pub const SEARCH_CAP: u32 = 4;

/// All vectors in `[0, SEARCH_CAP]^4` admitted by every rule, sorted.
pub fn enumerate(rules: &[Rule]) -> Vec<DimensionVector> {
    let r = 0..=SEARCH_CAP;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    let v = DimensionVector::new(a, b, c, d);
                    if rules.iter().all(|rule| rule.admits(v)) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// Subregion of the parameter region a derivation step is valid on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Subregion {
    #[serde(rename = "full")]
    Full,
    #[serde(rename = "side")]
    Side(SideConstraint),
}

impl Subregion {
    fn covers(self, side: SideConstraint) -> bool {
        match self {
            Subregion::Full => true,
            Subregion::Side(s) => s == side,
        }
    }

    pub fn region(self, base: &Region) -> Region {
        match self {
            Subregion::Full => base.full(),
            Subregion::Side(s) => base.with_side(s),
        }
    }
}

impl fmt::Display for Subregion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subregion::Full => f.write_str("full region"),
            Subregion::Side(s) => write!(f, "{s}"),
        }
    }
}

/// A certified sign of one generator's Im Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignFact {
    pub generator: usize,
    pub subregion: Subregion,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominanceEdge {
    pub base: DimensionVector,
    /// `v - base`, per generator.
    pub delta: [i64; 4],
    pub subregion: SideConstraint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Derivation {
    Base,
    Dominated { edges: Vec<DominanceEdge> },
    Pending,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub vector: DimensionVector,
    pub derivation: Derivation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateSet {
    pub candidates: Vec<Candidate>,
}

impl CandidateSet {
    pub fn vectors(&self) -> Vec<DimensionVector> {
        self.candidates.iter().map(|c| c.vector).collect()
    }

    pub fn base(&self) -> Vec<DimensionVector> {
        self.candidates
            .iter()
            .filter(|c| c.derivation == Derivation::Base)
            .map(|c| c.vector)
            .collect()
    }
}

/// `{(0,2,4,1)} ∪ {(0,b,c,1) : b ∈ {0,1}, c ∈ 0..=4}`, derived from the rules.
pub fn skyscraper_candidates() -> CandidateSet {
    CandidateSet {
        candidates: enumerate(&skyscraper_rules())
            .into_iter()
            .map(|vector| Candidate {
                vector,
                derivation: Derivation::Pending,
            })
            .collect(),
    }
}

/// The two vectors checked directly.
pub const SKYSCRAPER_BASE: [DimensionVector; 2] = [DimensionVector([0, 2, 4, 1]), DimensionVector([0, 1, 0, 1])];

fn fact_allows(facts: &[SignFact], generator: usize, side: SideConstraint, delta: i64) -> bool {
    if delta == 0 {
        return true;
    }
    facts.iter().any(|f| {
        f.generator == generator
            && f.subregion.covers(side)
            && if delta < 0 {
                f.sign.is_negative_side()
            } else {
                !f.sign.is_negative_side()
            }
    })
}

/// Attaches to every non-base candidate, on each side of `alpha = -beta`, a
/// dominance edge from the first base vector that reaches it.
pub fn reduce_candidates(cands: &CandidateSet, facts: &[SignFact], base: &[DimensionVector]) -> Result<CandidateSet> {
    let mut out = Vec::with_capacity(cands.candidates.len());
    for cand in &cands.candidates {
        let v = cand.vector;
        if base.contains(&v) {
            out.push(Candidate {
                vector: v,
                derivation: Derivation::Base,
            });
            continue;
        }
        let mut edges = Vec::new();
        for side in SideConstraint::BOTH {
            let edge = base.iter().find_map(|&u| {
                let delta: [i64; 4] = std::array::from_fn(|i| v.get(i) as i64 - u.get(i) as i64);
                (0..4)
                    .all(|g| fact_allows(facts, g, side, delta[g]))
                    .then_some(DominanceEdge {
                        base: u,
                        delta,
                        subregion: side,
                    })
            });
            match edge {
                Some(e) => edges.push(e),
                None => return Err(Error::Uncovered(format!("{v} on {side}"))),
            }
        }
        out.push(Candidate {
            vector: v,
            derivation: Derivation::Dominated { edges },
        });
    }
    Ok(CandidateSet { candidates: out })
}
