use std::process::Command;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use tiltcert::certify::{
    certify_sign, verify_half_plane, verify_lemma_computation, verify_skyscraper_condition, Factor, FactoredClaim,
    Region, SideConstraint, Sign, Status, Strategy, VerifyConfig,
};
use tiltcert::chern::{
    quadric_catalog, quadric_ch, resolution_defect, spinor_defect, ChernCharacter, ObjectLabel, Threefold,
};
use tiltcert::kernel::{int, poly_equal, rat, BivariatePoly, Rational, RationalInterval};
use tiltcert::tilt::{bg_margin, central_charge, nu, wall_polynomial, z_polynomials, TiltParams};

fn record(n: u32, title: &str, result: Result<String, String>) -> bool {
    match &result {
        Ok(detail) => println!("criterion {n} PASS  {title}: {detail}"),
        Err(detail) => println!("criterion {n} FAIL  {title}: {detail}"),
    }
    result.is_ok()
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1_lemma_computation() -> bool {
    let run = || -> Result<String, String> {
        let r = verify_lemma_computation();
        check(r.items.len() == 20, format!("{} items", r.items.len()))?;
        for prefix in ["ch^b(", "mu(", "nu(", "Z("] {
            let n = r.items.iter().filter(|i| i.name.starts_with(prefix)).count();
            let want = if prefix == "Z(" { 8 } else { 4 };
            check(n == want, format!("{n} items for {prefix}"))?;
        }
        check(
            r.status == Status::Certified,
            format!("not certified: {:?}", r.problems()),
        )?;
        Ok("4 twisted characters, 4 mu, 4 nu, 4 Z exact".into())
    };
    record(1, "closed forms", run())
}

fn criterion_2_structural_identities() -> bool {
    let run = || -> Result<String, String> {
        let cat = quadric_catalog();
        let x = Threefold::quadric();
        let sum = &(&(&quadric_ch(ObjectLabel::Line(1)) - &(4 * &quadric_ch(ObjectLabel::Line(0))))
            + &(2 * &quadric_ch(ObjectLabel::SpinorTwisted)))
            - &quadric_ch(ObjectLabel::Line(-1));
        let kx = ChernCharacter::new(int(0), int(0), int(0), int(1));
        check(sum == kx, format!("alternating sum {sum}"))?;
        check(resolution_defect(&cat).is_zero(), "resolution defect nonzero")?;
        let spin = &quadric_ch(ObjectLabel::SpinorTwisted) + &quadric_ch(ObjectLabel::Spinor);
        check(
            spin == 4 * &tiltcert::chern::line_bundle_ch(0, &x),
            format!("spinor sum {spin}"),
        )?;
        check(spinor_defect(&cat).is_zero(), "spinor defect nonzero")?;
        Ok("resolution sum = (0,0,0,1), ch(S(-1)) + ch(S) = 4 ch(O)".into())
    };
    record(2, "structural identities", run())
}

fn criterion_3_half_plane() -> bool {
    let run = || -> Result<String, String> {
        let r = verify_half_plane(&Region::standard(), 16);
        check(r.items.len() == 8, format!("{} items", r.items.len()))?;
        check(
            r.status == Status::Certified,
            format!("not certified: {:?}", r.problems()),
        )?;
        let depth = r.items.iter().map(|i| i.depth).max().unwrap_or(0);
        check(depth <= 16, format!("depth {depth}"))?;
        Ok(format!("cases A and B, 4 generators each, max depth used {depth}"))
    };
    record(3, "half-plane certificates", run())
}

fn criterion_4_skyscraper() -> bool {
    let run = || -> Result<String, String> {
        let r = verify_skyscraper_condition(&Region::standard(), 16);
        check(
            r.status == Status::Certified,
            format!("not certified: {:?}", r.problems()),
        )?;
        for name in [
            "Im Z(0,2,4,1) > 0",
            "Im Z(0,1,0,1) > 0",
            "table (0,2,4,1)",
            "table (0,1,0,1)",
            "reduction to two cases",
        ] {
            let item = r.item(name).ok_or(format!("missing {name}"))?;
            check(item.status == Status::Certified, format!("{name} {:?}", item.status))?;
        }
        let direct = r.items.iter().filter(|i| i.name.starts_with("direct:")).count();
        check(direct == 11, format!("{direct} direct candidates"))?;
        let red = r.item("reduction to two cases").unwrap();
        let edges = red.notes.iter().filter(|n| n.contains(" <= ")).count();
        check(edges == 18, format!("{edges} dominance edges"))?;
        let table = r.item("table (0,1,0,1)").unwrap();
        check(
            table.notes.iter().any(|n| n.starts_with("discrepancy")),
            "discrepancy not recorded",
        )?;
        let sky = r.item("Im Z(0,2,4,1) > 0").unwrap();
        check(sky.notes.iter().any(|n| n.contains("region")), "region not recorded")?;
        let expected: BivariatePoly = "-a^3 + a*b^2 + 2*a*b + a".parse().unwrap();
        check(
            poly_equal(&VerifyConfig::default().forms.im_0241, &expected),
            "(0,2,4,1) form",
        )?;
        Ok("both base vectors and 11 candidates certified, 9 reduced vectors on 2 sides".into())
    };
    record(4, "skyscraper condition", run())
}

fn criterion_5_bg_line_bundles() -> bool {
    let run = || -> Result<String, String> {
        let x = Threefold::quadric();
        let mut n_checked = 0;
        for n in -3..=3i64 {
            let v = tiltcert::chern::line_bundle_ch(n, &x);
            for k in 0..50 {
                let beta = rat(2 * k + 1, 14) - int(4);
                let diff = int(n) - &beta;
                let alpha = if diff < Rational::zero() { -diff } else { diff };
                let m = bg_margin(&v, &TiltParams::at_sixth(alpha, beta.clone()), &x);
                check(m.is_zero(), format!("n = {n}, beta = {beta}: margin {m}"))?;
                n_checked += 1;
            }
        }
        Ok(format!("{n_checked} exact zeros"))
    };
    record(5, "BG equality for line bundles", run())
}

fn small(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    rat(rng.gen_range(lo..=hi), rng.gen_range(1..=4))
}

fn random_factor(rng: &mut ChaCha8Rng) -> Factor {
    let sign = [Sign::Positive, Sign::NonNegative, Sign::Negative, Sign::NonPositive][rng.gen_range(0..4)];
    let affine = BivariatePoly::affine(small(rng, -4, 4), small(rng, -4, 4), small(rng, -4, 4));
    match rng.gen_range(0..4) {
        0 => Factor::new(affine, sign, Strategy::AffineVertex),
        1 => Factor::new(affine, sign, Strategy::RegionAtom),
        _ => {
            let quad = &affine * &BivariatePoly::affine(small(rng, -4, 4), small(rng, -4, 4), small(rng, -4, 4))
                + BivariatePoly::constant(small(rng, -2, 2));
            Factor::new(quad, sign, Strategy::IntervalSubdivision)
        }
    }
}

fn random_region(rng: &mut ChaCha8Rng) -> Region {
    let blo = rat(rng.gen_range(-8..=4), 8);
    let bhi = &blo + rat(rng.gen_range(1..=8), 8);
    let alo = rat(rng.gen_range(0..=4), 8);
    let ahi = &alo + rat(rng.gen_range(1..=6), 8);
    let r = Region::from_ranges(RationalInterval::new(blo, bhi), RationalInterval::new(alo, ahi));
    match rng.gen_range(0..4) {
        0 => r.with_side(SideConstraint::AlphaAtLeastMinusBeta),
        1 => r.with_side(SideConstraint::AlphaAtMostMinusBeta),
        _ => r,
    }
}

fn oracle_grid(region: &Region) -> Vec<(Rational, Rational)> {
    let n = 100i64;
    let mut pts = Vec::with_capacity(10_000);
    for i in 0..n {
        for j in 0..n {
            let b = &region.beta.lo + region.beta.width() * rat(2 * i + 1, 2 * n);
            let a = &region.alpha.lo + region.alpha.width() * rat(2 * j + 1, 2 * n);
            pts.push((a, b));
        }
    }
    pts
}

fn criterion_6_certifier_soundness() -> bool {
    let run = || -> Result<String, String> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let claims: Vec<(FactoredClaim, Region)> = (0..120)
            .map(|i| {
                let k = rng.gen_range(1..=3);
                let factors: Vec<Factor> = (0..k).map(|_| random_factor(&mut rng)).collect();
                let overall = Sign::product(factors.iter().map(|f| f.sign)).unwrap();
                let target = factors
                    .iter()
                    .fold(BivariatePoly::constant(int(1)), |acc, f| &acc * &f.expression);
                (
                    FactoredClaim::new(format!("random {i}"), target, overall, factors),
                    random_region(&mut rng),
                )
            })
            .collect();
        let results: Vec<Result<Status, String>> = claims
            .par_iter()
            .map(|(claim, region)| {
                let cert = certify_sign(claim, region, 10);
                match cert.status {
                    Status::Certified => {
                        for (a, b) in oracle_grid(region) {
                            if region.contains(&a, &b) && !claim.overall.holds(&claim.target.eval(&a, &b)) {
                                return Err(format!("{} certified but violated at ({a}, {b})", claim.name));
                            }
                        }
                    }
                    Status::Failed => {
                        let w = cert
                            .witness
                            .as_ref()
                            .ok_or(format!("{} failed without witness", claim.name))?;
                        if !region.contains(&w.alpha, &w.beta) {
                            return Err(format!("{} witness outside region", claim.name));
                        }
                        if claim.overall.holds(&claim.target.eval(&w.alpha, &w.beta)) {
                            return Err(format!("{} witness does not violate", claim.name));
                        }
                    }
                    Status::Inconclusive => {}
                }
                Ok(cert.status)
            })
            .collect();
        let mut counts = [0usize; 3];
        for r in results {
            counts[match r? {
                Status::Certified => 0,
                Status::Failed => 1,
                Status::Inconclusive => 2,
            }] += 1;
        }
        check(counts[0] > 0 && counts[1] > 0, format!("degenerate suite {counts:?}"))?;
        Ok(format!(
            "120 claims: {} certified (10^4-point oracle agrees), {} failed (witnesses violate), {} inconclusive",
            counts[0], counts[1], counts[2]
        ))
    };
    record(6, "certifier soundness", run())
}

fn criterion_7_two_path_agreement() -> bool {
    let run = || -> Result<String, String> {
        let x = Threefold::quadric();
        let s = rat(1, 6);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut n = 0;
        for obj in quadric_catalog() {
            let v = obj.shifted_character();
            let (re, im) = z_polynomials(&v, &s, &x);
            for _ in 0..100 {
                let alpha = rat(rng.gen_range(1..=200), rng.gen_range(1..=97));
                let beta = rat(rng.gen_range(-200..=200), rng.gen_range(1..=97));
                let z = central_charge(&v, &TiltParams::new(alpha.clone(), beta.clone(), s.clone()), &x);
                check(
                    z.re == re.eval(&alpha, &beta) && z.im == im.eval(&alpha, &beta),
                    format!("{} at ({alpha}, {beta})", obj.label),
                )?;
                n += 1;
            }
        }
        Ok(format!("{n} points across {} catalog objects", quadric_catalog().len()))
    };
    record(7, "two-path agreement", run())
}

fn criterion_8_wall_sanity() -> bool {
    let run = || -> Result<String, String> {
        let x = Threefold::quadric();
        let o = quadric_ch(ObjectLabel::Line(0));
        let o1 = quadric_ch(ObjectLabel::Line(1));
        let w = wall_polynomial(&o, &o1, &x);
        check(w.eval(&rat(2, 5), &rat(1, 5)).is_zero(), "W nonzero at (1/5, 2/5)")?;
        let p = TiltParams::at_sixth(rat(2, 5), rat(1, 5));
        check(nu(&o, &p, &x) == nu(&o1, &p, &x), "nu(O) != nu(O(1)) at (1/5, 2/5)")?;
        let circle: BivariatePoly = "b - 1/2".parse().unwrap();
        let circle = (&circle * &circle + "a^2 - 1/4".parse::<BivariatePoly>().unwrap()).scale(&rat(-1, 2));
        check(poly_equal(&w, &circle), format!("W = {w}"))?;
        Ok(format!("W = {w}"))
    };
    record(8, "wall sanity", run())
}

fn tiltcert(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tiltcert"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn criterion_9_cli_contract() -> bool {
    let run = || -> Result<String, String> {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let report = dir.path().join("report.json");
        let (code, _) = tiltcert(&["verify", "--json", report.to_str().unwrap()]);
        check(code == 0, format!("verify exit {code}"))?;
        let json: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&report).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
        check(json["status"] == "certified", format!("aggregate {}", json["status"]))?;

        let (code, stdout) = tiltcert(&["verify", "--region=-1/2:1/2,0:1/3"]);
        check(code == 1, format!("widened region exit {code}"))?;
        check(!stdout.contains("aggregate: certified"), "widened region certified")?;

        let bad_json = dir.path().join("bad.json");
        std::fs::write(&bad_json, "{\"ch0\": ").unwrap();
        for args in [
            vec!["slopes", "--alpha", "1/0", "--beta", "0", "--object", "O"],
            vec!["slopes", "--alpha", "1/4", "--beta", "-1/4", "--object", "T"],
            vec!["bg", "--chern", "missing.json"],
            vec!["bg", "--chern", bad_json.to_str().unwrap()],
            vec!["verify", "--region", "0:1"],
        ] {
            let (code, _) = tiltcert(&args);
            check(code == 2, format!("{args:?} exit {code}"))?;
        }

        let svg = dir.path().join("z.svg");
        let (code, _) = tiltcert(&[
            "plot",
            "zvectors",
            "--alpha",
            "1/4",
            "--beta",
            "-1/8",
            "-o",
            svg.to_str().unwrap(),
        ]);
        check(code == 0, format!("plot exit {code}"))?;
        let text = std::fs::read_to_string(&svg).map_err(|e| e.to_string())?;
        let doc = roxmltree::Document::parse(&text).map_err(|e| format!("malformed SVG: {e}"))?;
        let arrows = doc
            .descendants()
            .filter(|n| n.attribute("class") == Some("arrow"))
            .count();
        check(arrows == 4, format!("{arrows} arrows"))?;
        Ok("exit codes 0/1/2 as required, zvectors SVG well-formed with 4 arrows".into())
    };
    record(9, "CLI contract", run())
}

fn main() {
    let results = [
        criterion_1_lemma_computation(),
        criterion_2_structural_identities(),
        criterion_3_half_plane(),
        criterion_4_skyscraper(),
        criterion_5_bg_line_bundles(),
        criterion_6_certifier_soundness(),
        criterion_7_two_path_agreement(),
        criterion_8_wall_sanity(),
        criterion_9_cli_contract(),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
