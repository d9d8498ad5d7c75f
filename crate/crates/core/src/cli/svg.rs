//! SVG emission. Coordinates are exact rationals until the final
//! fixed-point formatting.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;

use crate::chern::{ChernCharacter, Threefold};
use crate::heart::{heart_generators, GENERATOR_NAMES};
use crate::kernel::rational::{int, rat, Rational};
use crate::kernel::{BivariatePoly, RationalInterval};
use crate::tilt::{central_charge, wall_polynomial, ComplexRational, TiltParams};

/// Six decimals, rounded half away from zero.
pub fn fixed6(q: &Rational) -> String {
    let scaled = q * Rational::from_integer(BigInt::from(1_000_000));
    let half = rat(1, 2);
    let r = if scaled.is_negative() {
        -(-scaled + half).floor()
    } else {
        (scaled + half).floor()
    };
    let n = r.to_integer();
    let neg = n.is_negative();
    let digits = format!("{:07}", n.abs());
    let (whole, frac) = digits.split_at(digits.len() - 6);
    format!("{}{}.{}", if neg { "-" } else { "" }, whole, frac)
}

const SIZE: i64 = 400;

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n<title>{}</title>",
        escape(title)
    );
}

fn line(out: &mut String, class: &str, x1: &Rational, y1: &Rational, x2: &Rational, y2: &Rational, extra: &str) {
    let _ = writeln!(
        out,
        "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"{extra}/>",
        fixed6(x1),
        fixed6(y1),
        fixed6(x2),
        fixed6(y2)
    );
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Z of the four heart generators at `p`, in generator order.
pub fn generator_charges(p: &TiltParams) -> Vec<ComplexRational> {
    let x = Threefold::quadric();
    heart_generators()
        .iter()
        .map(|g| central_charge(&g.shifted_character(), p, &x))
        .collect()
}

/// Four arrows from the origin plus the dividing line for the side of
/// `alpha = -beta` that `p` lies on.
pub fn zvectors_svg(p: &TiltParams) -> String {
    let zs = generator_charges(p);
    let case_a = p.alpha >= -p.beta.clone();
    let o_shift = zs[2].clone();
    let norm = zs
        .iter()
        .map(|z| z.re.abs() + z.im.abs())
        .fold(Rational::zero(), |m, v| if v > m { v } else { m });
    let norm = if norm.is_zero() { Rational::one() } else { norm };
    let half = int(SIZE / 2);
    let k = int(SIZE * 2 / 5) / norm;
    let to_px = |z: &ComplexRational| (&half + &z.re * &k, &half - &z.im * &k);

    let mut out = String::new();
    header(
        &mut out,
        &format!(
            "Z of heart generators, {}",
            if case_a { "alpha >= -beta" } else { "alpha <= -beta" }
        ),
    );
    out.push_str("<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"8\" refY=\"4\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n");
    line(&mut out, "axis", &int(0), &half, &int(SIZE), &half, " stroke=\"#bbb\"");
    line(&mut out, "axis", &half, &int(0), &half, &int(SIZE), " stroke=\"#bbb\"");
    let (dx, dy) = if case_a {
        (Rational::zero(), int(SIZE / 2))
    } else {
        let n = o_shift.re.abs() + o_shift.im.abs();
        if n.is_zero() {
            (Rational::zero(), int(SIZE / 2))
        } else {
            let t = int(SIZE / 2) / n;
            (&o_shift.re * &t, -&o_shift.im * &t)
        }
    };
    line(
        &mut out,
        "divider",
        &(&half - &dx),
        &(&half - &dy),
        &(&half + &dx),
        &(&half + &dy),
        " stroke=\"#c33\" stroke-dasharray=\"6,4\"",
    );
    for (z, name) in zs.iter().zip(GENERATOR_NAMES) {
        let (x, y) = to_px(z);
        line(
            &mut out,
            "arrow",
            &half,
            &half,
            &x,
            &y,
            " stroke=\"black\" marker-end=\"url(#head)\"",
        );
        let _ = writeln!(
            out,
            "<text class=\"label\" x=\"{}\" y=\"{}\">{}</text>",
            fixed6(&x),
            fixed6(&y),
            escape(name)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// A contour segment in `(beta, alpha)` coordinates.
pub type Segment = ((Rational, Rational), (Rational, Rational));

/// Marching squares on the exact sign of `poly` over `grid x grid` cells.
pub fn contour_segments(
    poly: &BivariatePoly,
    beta: &RationalInterval,
    alpha: &RationalInterval,
    grid: u32,
) -> Vec<Segment> {
    if poly.is_zero() || grid == 0 {
        return Vec::new();
    }
    let n = grid as i64;
    let bs: Vec<Rational> = (0..=n).map(|i| &beta.lo + beta.width() * rat(i, n)).collect();
    let as_: Vec<Rational> = (0..=n).map(|j| &alpha.lo + alpha.width() * rat(j, n)).collect();
    let vals: Vec<Vec<Rational>> = bs
        .iter()
        .map(|b| as_.iter().map(|a| poly.eval(a, b)).collect())
        .collect();
    let inside = |v: &Rational| !v.is_negative();
    let mut segs = Vec::new();
    for i in 0..grid as usize {
        for j in 0..grid as usize {
            // Corners counter-clockwise from (i, j).
            let c = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let mut pts = Vec::new();
            for e in 0..4 {
                let (p, q) = (c[e], c[(e + 1) % 4]);
                let (vp, vq) = (&vals[p.0][p.1], &vals[q.0][q.1]);
                if inside(vp) != inside(vq) {
                    let t = vp / (vp - vq);
                    let b = &bs[p.0] + (&bs[q.0] - &bs[p.0]) * &t;
                    let a = &as_[p.1] + (&as_[q.1] - &as_[p.1]) * &t;
                    pts.push((b, a));
                }
            }
            match pts.len() {
                2 => {
                    if pts[0] != pts[1] {
                        segs.push((pts[0].clone(), pts[1].clone()));
                    }
                }
                4 => {
                    let centre = c.iter().fold(Rational::zero(), |s, &(x, y)| s + &vals[x][y]);
                    let first_inside = inside(&vals[c[0].0][c[0].1]);
                    if inside(&centre) == first_inside {
                        segs.push((pts[0].clone(), pts[1].clone()));
                        segs.push((pts[2].clone(), pts[3].clone()));
                    } else {
                        segs.push((pts[1].clone(), pts[2].clone()));
                        segs.push((pts[3].clone(), pts[0].clone()));
                    }
                }
                _ => {}
            }
        }
    }
    segs
}

pub fn wall_svg(
    v: &ChernCharacter,
    w: &ChernCharacter,
    beta: &RationalInterval,
    alpha: &RationalInterval,
    grid: u32,
) -> String {
    let poly = wall_polynomial(v, w, &Threefold::quadric());
    let segs = contour_segments(&poly, beta, alpha, grid);
    let size = int(SIZE);
    let px = |(b, a): &(Rational, Rational)| {
        (
            (b - &beta.lo) / beta.width() * &size,
            &size - (a - &alpha.lo) / alpha.width() * &size,
        )
    };
    let mut out = String::new();
    header(&mut out, &format!("wall {v} vs {w}"));
    let _ = writeln!(out, "<desc>{}</desc>", escape(&poly.to_string()));
    for (p, q) in &segs {
        let (x1, y1) = px(p);
        let (x2, y2) = px(q);
        line(&mut out, "contour", &x1, &y1, &x2, &y2, " stroke=\"black\"");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_format() {
        assert_eq!(fixed6(&rat(1, 3)), "0.333333");
        assert_eq!(fixed6(&rat(2, 3)), "0.666667");
        assert_eq!(fixed6(&rat(-1, 8)), "-0.125000");
        assert_eq!(fixed6(&int(200)), "200.000000");
        assert_eq!(fixed6(&rat(-1, 3_000_000)), "0.000000");
    }

    #[test]
    fn generator_charge_signs() {
        let a = generator_charges(&TiltParams::at_sixth(rat(1, 4), rat(-1, 8)));
        assert_eq!(a[3].im, rat(1, 4) * (rat(81, 64) - rat(1, 16)));
        let b = generator_charges(&TiltParams::at_sixth(rat(1, 8), rat(-3, 8)));
        assert!(b[2].im < Rational::zero());
    }

    #[test]
    fn identical_characters_give_no_contour() {
        let x = Threefold::quadric();
        let v = crate::chern::line_bundle_ch(0, &x);
        let svg = wall_svg(
            &v,
            &v,
            &RationalInterval::new(int(0), int(1)),
            &RationalInterval::new(int(0), rat(3, 5)),
            16,
        );
        assert!(!svg.contains("class=\"contour\""));
    }

    #[test]
    fn wall_contour_tracks_semicircle() {
        let x = Threefold::quadric();
        let w = wall_polynomial(
            &crate::chern::line_bundle_ch(0, &x),
            &crate::chern::line_bundle_ch(1, &x),
            &x,
        );
        let segs = contour_segments(
            &w,
            &RationalInterval::new(int(0), int(1)),
            &RationalInterval::new(int(0), rat(3, 5)),
            32,
        );
        assert!(segs.len() >= 32);
        let tol = rat(1, 100);
        for ((b, a), _) in &segs {
            let off = (b - rat(1, 2)) * (b - rat(1, 2)) + a * a - rat(1, 4);
            assert!(off.abs() < tol, "({b}, {a})");
        }
    }
}
