//! Sign certification of factored polynomial claims on a region.
//!
//! Affine factors are decided exactly at the vertices of the region's
//! closure; a strict sign that degenerates to zero is still accepted when
//! every zero vertex lies on one excluded (open) face. Other factors go
//! through bisection with naive interval hulls. A cell touching the region
//! boundary may also be settled by expanding the polynomial at that edge,
//! `p = p|edge + (x - t) q`, and recursing on the two smaller pieces; each
//! such expansion costs one level of the depth budget.

use std::collections::VecDeque;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::claim::{Factor, FactoredClaim, Sign, Strategy};
use super::region::{OpenFace, Region, SideConstraint};
use crate::kernel::rational::{int, rat, serde_rational, Rational};
use crate::kernel::{poly_equal, BivariatePoly, RationalInterval};

/// Cells examined per factor before giving up.
pub const BOX_LIMIT: usize = 50_000;
pub const DEFAULT_MAX_DEPTH: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Certified,
    Failed,
    Inconclusive,
}

impl Status {
    /// Failed dominates inconclusive, which dominates certified.
    pub fn combine<I: IntoIterator<Item = Status>>(items: I) -> Status {
        items.into_iter().fold(Status::Certified, |acc, s| match (acc, s) {
            (Status::Failed, _) | (_, Status::Failed) => Status::Failed,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            _ => Status::Certified,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Point {
    #[serde(with = "serde_rational")]
    pub alpha: Rational,
    #[serde(with = "serde_rational")]
    pub beta: Rational,
}

impl Point {
    pub fn new(alpha: Rational, beta: Rational) -> Self {
        Self { alpha, beta }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexValue {
    #[serde(with = "serde_rational")]
    pub alpha: Rational,
    #[serde(with = "serde_rational")]
    pub beta: Rational,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    Vertices {
        vertices: Vec<VertexValue>,
        /// Open face carrying every zero vertex, for strict signs.
        #[serde(skip_serializing_if = "Option::is_none")]
        excluded_face: Option<String>,
    },
    Atom {
        constraints: Vec<String>,
        vertices: Vec<VertexValue>,
    },
    Subdivision {
        boxes: usize,
        depth: u32,
        discarded: usize,
        edge_expansions: usize,
    },
    Rejected {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEvidence {
    pub expression: String,
    pub sign: Sign,
    pub strategy: Strategy,
    pub status: Status,
    pub evidence: Evidence,
    pub witness: Option<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignCertificate {
    pub status: Status,
    pub factors: Vec<FactorEvidence>,
    pub witness: Option<Point>,
    pub boxes: usize,
    pub depth: u32,
    pub notes: Vec<String>,
}

fn face_name(region: &Region, face: OpenFace) -> String {
    use crate::kernel::format_rational as f;
    match face {
        OpenFace::AlphaLo => format!("alpha > {}", f(&region.alpha.lo)),
        OpenFace::AlphaHi => format!("alpha < {}", f(&region.alpha.hi)),
        OpenFace::BetaLo => format!("beta > {}", f(&region.beta.lo)),
        OpenFace::BetaHi => format!("beta < {}", f(&region.beta.hi)),
    }
}

/// Bounds of the region that are tight at a point.
fn tight_constraints(region: &Region, a: &Rational, b: &Rational) -> Vec<String> {
    use crate::kernel::format_rational as f;
    let mut out = Vec::new();
    let rel = |open: bool, lower: bool| match (open, lower) {
        (true, true) => ">",
        (false, true) => ">=",
        (true, false) => "<",
        (false, false) => "<=",
    };
    if *a == region.alpha.lo {
        out.push(format!(
            "alpha {} {}",
            rel(region.alpha_open.0, true),
            f(&region.alpha.lo)
        ));
    }
    if *a == region.alpha.hi {
        out.push(format!(
            "alpha {} {}",
            rel(region.alpha_open.1, false),
            f(&region.alpha.hi)
        ));
    }
    if *b == region.beta.lo {
        out.push(format!("beta {} {}", rel(region.beta_open.0, true), f(&region.beta.lo)));
    }
    if *b == region.beta.hi {
        out.push(format!(
            "beta {} {}",
            rel(region.beta_open.1, false),
            f(&region.beta.hi)
        ));
    }
    if let Some(side) = region.side {
        if (a + b).is_zero() {
            out.push(side.to_string());
        }
    }
    out
}

/// Moves `from` toward the region's interior until `violates` holds inside
/// the region.
fn pull_inside(
    region: &Region,
    from: &(Rational, Rational),
    violates: impl Fn(&Rational, &Rational) -> bool,
) -> Option<Point> {
    if region.contains(&from.0, &from.1) && violates(&from.0, &from.1) {
        return Some(Point::new(from.0.clone(), from.1.clone()));
    }
    let (ca, cb) = region.interior_point()?;
    let mut t = rat(1, 2);
    for _ in 0..64 {
        let a = &from.0 + &t * (&ca - &from.0);
        let b = &from.1 + &t * (&cb - &from.1);
        if region.contains(&a, &b) && violates(&a, &b) {
            return Some(Point::new(a, b));
        }
        t /= int(2);
    }
    None
}

fn certify_affine(factor: &Factor, region: &Region, as_atom: bool) -> FactorEvidence {
    let p = &factor.expression;
    let sign = factor.sign;
    let base = |status, evidence, witness| FactorEvidence {
        expression: p.to_string(),
        sign,
        strategy: factor.strategy,
        status,
        evidence,
        witness,
    };
    if !p.is_affine() {
        return base(
            Status::Inconclusive,
            Evidence::Rejected {
                reason: "expression is not affine".into(),
            },
            None,
        );
    }
    let verts = region.closure_vertices();
    let values: Vec<VertexValue> = verts
        .iter()
        .map(|(a, b)| VertexValue {
            alpha: a.clone(),
            beta: b.clone(),
            value: p.eval(a, b),
        })
        .collect();
    // Orient so the claim reads `g >= 0` or `g > 0`.
    let orient = |v: &Rational| if sign.is_negative_side() { -v.clone() } else { v.clone() };
    let violates = |a: &Rational, b: &Rational| !sign.holds(&p.eval(a, b));
    let Some(min) = values.iter().map(|v| orient(&v.value)).min() else {
        return base(
            Status::Certified,
            Evidence::Vertices {
                vertices: values,
                excluded_face: None,
            },
            None,
        );
    };
    let extremal: Vec<&VertexValue> = values.iter().filter(|v| orient(&v.value) == min).collect();
    let evidence = |excluded_face: Option<String>| {
        if as_atom {
            let mut constraints: Option<Vec<String>> = None;
            for v in &extremal {
                let t = tight_constraints(region, &v.alpha, &v.beta);
                constraints = Some(match constraints {
                    None => t,
                    Some(c) => c.into_iter().filter(|x| t.contains(x)).collect(),
                });
            }
            let mut constraints = constraints.unwrap_or_default();
            if let Some(face) = excluded_face {
                if !constraints.contains(&face) {
                    constraints.push(face);
                }
            }
            Evidence::Atom {
                constraints,
                vertices: values.clone(),
            }
        } else {
            Evidence::Vertices {
                vertices: values.clone(),
                excluded_face,
            }
        }
    };
    if min.is_negative() {
        let worst = extremal[0];
        let witness = pull_inside(region, &(worst.alpha.clone(), worst.beta.clone()), violates);
        let status = if witness.is_some() {
            Status::Failed
        } else {
            Status::Inconclusive
        };
        return base(status, evidence(None), witness);
    }
    if min.is_positive() || !sign.is_strict() {
        return base(Status::Certified, evidence(None), None);
    }
    // Zero minimum under a strict sign: the zero face must be excluded.
    for face in region.open_faces() {
        if extremal.iter().all(|v| region.on_face(face, &v.alpha, &v.beta)) {
            return base(Status::Certified, evidence(Some(face_name(region, face))), None);
        }
    }
    let n = Rational::from_integer((extremal.len() as i64).into());
    let ca = extremal.iter().map(|v| v.alpha.clone()).sum::<Rational>() / &n;
    let cb = extremal.iter().map(|v| v.beta.clone()).sum::<Rational>() / &n;
    let witness = extremal
        .iter()
        .find(|v| region.contains(&v.alpha, &v.beta))
        .map(|v| Point::new(v.alpha.clone(), v.beta.clone()))
        .or_else(|| region.contains(&ca, &cb).then(|| Point::new(ca, cb)));
    let status = if witness.is_some() {
        Status::Failed
    } else {
        Status::Inconclusive
    };
    base(status, evidence(None), witness)
}

#[derive(Debug, Clone)]
struct Cell {
    alpha: RationalInterval,
    beta: RationalInterval,
    depth: u32,
}

fn hull_holds(hull: &RationalInterval, sign: Sign) -> bool {
    match sign {
        Sign::Positive => hull.lo.is_positive(),
        Sign::NonNegative => !hull.lo.is_negative(),
        Sign::Negative => hull.hi.is_negative(),
        Sign::NonPositive => !hull.hi.is_positive(),
    }
}

fn outside_side(cell: &Cell, side: Option<SideConstraint>) -> bool {
    match side {
        Some(SideConstraint::AlphaAtMostMinusBeta) => (&cell.alpha.lo + &cell.beta.lo).is_positive(),
        Some(SideConstraint::AlphaAtLeastMinusBeta) => (&cell.alpha.hi + &cell.beta.hi).is_negative(),
        None => false,
    }
}

/// One edge of a cell lying on the region's boundary.
struct Edge {
    on_alpha: bool,
    at: Rational,
    /// Sign of `x - at` inside the cell: `true` when non-negative.
    upward: bool,
    /// The region excludes this edge, so `x - at` is strictly signed there.
    open: bool,
}

fn boundary_edges(cell: &Cell, region: &Region) -> Vec<Edge> {
    let mut out = Vec::new();
    let pairs = [
        (true, &cell.alpha.lo, &region.alpha.lo, true, region.alpha_open.0),
        (true, &cell.alpha.hi, &region.alpha.hi, false, region.alpha_open.1),
        (false, &cell.beta.lo, &region.beta.lo, true, region.beta_open.0),
        (false, &cell.beta.hi, &region.beta.hi, false, region.beta_open.1),
    ];
    for (on_alpha, c, r, upward, open) in pairs {
        let degenerate = if on_alpha {
            cell.alpha.lo == cell.alpha.hi
        } else {
            cell.beta.lo == cell.beta.hi
        };
        if c == r && !degenerate {
            out.push(Edge {
                on_alpha,
                at: c.clone(),
                upward,
                open,
            });
        }
    }
    out
}

/// Decides `sign(p)` on `cell ∩ region`, returning the number of edge
/// expansions used.
fn decide(p: &BivariatePoly, sign: Sign, cell: &Cell, region: &Region, budget: u32) -> Option<u32> {
    if hull_holds(&p.eval_interval(&cell.alpha, &cell.beta), sign) {
        return Some(0);
    }
    if budget == 0 {
        return None;
    }
    for edge in boundary_edges(cell, region) {
        let (restricted, quotient, edge_cell) = if edge.on_alpha {
            (
                p.substitute_alpha(&edge.at),
                p.peel_alpha(&edge.at),
                Cell {
                    alpha: RationalInterval::point(edge.at.clone()),
                    beta: cell.beta.clone(),
                    depth: cell.depth,
                },
            )
        } else {
            (
                p.substitute_beta(&edge.at),
                p.peel_beta(&edge.at),
                Cell {
                    alpha: cell.alpha.clone(),
                    beta: RationalInterval::point(edge.at.clone()),
                    depth: cell.depth,
                },
            )
        };
        // p = restricted + (x - at) * quotient, with (x - at) of fixed sign.
        let quotient_sign = if edge.upward { sign } else { sign.flip() };
        let mut options = vec![(sign, quotient_sign.weaken())];
        if sign.is_strict() && edge.open {
            options.push((sign.weaken(), quotient_sign));
        }
        for (edge_sign, q_sign) in options {
            let Some(u) = decide(&restricted, edge_sign, &edge_cell, region, budget - 1) else {
                continue;
            };
            if let Some(v) = decide(&quotient, q_sign, cell, region, budget - 1) {
                return Some(1 + u.max(v));
            }
        }
    }
    None
}

fn cell_probes(cell: &Cell) -> Vec<(Rational, Rational)> {
    vec![
        (cell.alpha.midpoint(), cell.beta.midpoint()),
        (cell.alpha.lo.clone(), cell.beta.lo.clone()),
        (cell.alpha.lo.clone(), cell.beta.hi.clone()),
        (cell.alpha.hi.clone(), cell.beta.lo.clone()),
        (cell.alpha.hi.clone(), cell.beta.hi.clone()),
    ]
}

fn split(cell: &Cell, region: &Region) -> (Cell, Cell) {
    // Wider side relative to the region's own extent; alpha on ties.
    let rel_a = cell.alpha.width() / region.alpha.width();
    let rel_b = cell.beta.width() / region.beta.width();
    let depth = cell.depth + 1;
    if rel_a >= rel_b {
        let (l, r) = cell.alpha.bisect();
        (
            Cell {
                alpha: l,
                beta: cell.beta.clone(),
                depth,
            },
            Cell {
                alpha: r,
                beta: cell.beta.clone(),
                depth,
            },
        )
    } else {
        let (l, r) = cell.beta.bisect();
        (
            Cell {
                alpha: cell.alpha.clone(),
                beta: l,
                depth,
            },
            Cell {
                alpha: cell.alpha.clone(),
                beta: r,
                depth,
            },
        )
    }
}

fn certify_subdivision(factor: &Factor, region: &Region, max_depth: u32) -> FactorEvidence {
    let p = &factor.expression;
    let sign = factor.sign;
    let mut queue = VecDeque::from([Cell {
        alpha: region.alpha.clone(),
        beta: region.beta.clone(),
        depth: 0,
    }]);
    let (mut boxes, mut discarded, mut expansions) = (0usize, 0usize, 0usize);
    let mut depth = 0u32;
    let mut exhausted = false;
    let mut witness = None;
    while let Some(cell) = queue.pop_front() {
        boxes += 1;
        depth = depth.max(cell.depth);
        if boxes > BOX_LIMIT {
            exhausted = true;
            break;
        }
        if outside_side(&cell, region.side) {
            discarded += 1;
            continue;
        }
        let budget = (max_depth - cell.depth.min(max_depth)).min(4);
        if let Some(used) = decide(p, sign, &cell, region, budget) {
            depth = depth.max(cell.depth + used);
            expansions += usize::from(used > 0);
            continue;
        }
        if let Some((a, b)) = cell_probes(&cell)
            .into_iter()
            .find(|(a, b)| region.contains(a, b) && !sign.holds(&p.eval(a, b)))
        {
            witness = Some(Point::new(a, b));
            break;
        }
        if cell.depth >= max_depth {
            exhausted = true;
            continue;
        }
        let (l, r) = split(&cell, region);
        queue.push_back(l);
        queue.push_back(r);
    }
    let status = if witness.is_some() {
        Status::Failed
    } else if exhausted {
        Status::Inconclusive
    } else {
        Status::Certified
    };
    FactorEvidence {
        expression: p.to_string(),
        sign,
        strategy: factor.strategy,
        status,
        evidence: Evidence::Subdivision {
            boxes,
            depth,
            discarded,
            edge_expansions: expansions,
        },
        witness,
    }
}

pub fn certify_factor(factor: &Factor, region: &Region, max_depth: u32) -> FactorEvidence {
    match factor.strategy {
        Strategy::AffineVertex => certify_affine(factor, region, false),
        Strategy::RegionAtom => certify_affine(factor, region, true),
        Strategy::IntervalSubdivision => certify_subdivision(factor, region, max_depth),
    }
}

/// Interior grid used to look for a counterexample to the whole claim when a
/// factor's own witness does not violate it.
fn grid_witness(claim: &FactoredClaim, region: &Region, n: i64) -> Option<Point> {
    for i in 0..n {
        let ta = rat(2 * i + 1, 2 * n);
        let a = &region.alpha.lo + ta * region.alpha.width();
        for j in 0..=n {
            let tb = rat(j, n);
            let b = &region.beta.lo + tb * region.beta.width();
            if region.contains(&a, &b) && !claim.overall.holds(&claim.target.eval(&a, &b)) {
                return Some(Point::new(a, b));
            }
        }
    }
    None
}

/// Certifies `claim` on `region`. A certified result is sound; a failed one
/// carries a point of the region where the claim is false.
pub fn certify_sign(claim: &FactoredClaim, region: &Region, max_depth: u32) -> SignCertificate {
    let mut notes = Vec::new();
    let factors: Vec<FactorEvidence> = claim
        .factors
        .par_iter()
        .map(|f| certify_factor(f, region, max_depth))
        .collect();
    let (boxes, depth) = factors.iter().fold((0, 0), |(b, d), f| match &f.evidence {
        Evidence::Subdivision { boxes, depth, .. } => (b + boxes, d.max(*depth)),
        _ => (b, d),
    });
    let mut status = Status::combine(factors.iter().map(|f| f.status));
    let mut witness = None;

    if !poly_equal(&claim.factor_product(), &claim.target) {
        notes.push("factor product does not equal the claimed expression".into());
        status = Status::combine([status, Status::Inconclusive]);
    }
    match Sign::product(claim.factors.iter().map(|f| f.sign)) {
        Some(s) if s.implies(claim.overall) => {}
        _ => {
            notes.push(format!("factor signs do not imply {}", claim.overall));
            status = Status::combine([status, Status::Inconclusive]);
        }
    }
    if status == Status::Failed {
        let violates = |p: &Point| !claim.overall.holds(&claim.target.eval(&p.alpha, &p.beta));
        witness = factors
            .iter()
            .filter_map(|f| f.witness.clone())
            .find(|p| region.contains(&p.alpha, &p.beta) && violates(p))
            .or_else(|| grid_witness(claim, region, 64));
        if witness.is_none() {
            notes.push("a factor failed but no counterexample to the product was found".into());
            status = Status::Inconclusive;
        }
    }
    if status == Status::Certified && region.closure_vertices().is_empty() {
        notes.push("region is empty; claim holds vacuously".into());
    }
    SignCertificate {
        status,
        factors,
        witness,
        boxes,
        depth,
        notes,
    }
}
