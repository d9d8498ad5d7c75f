//! Command-line frontend.

pub mod svg;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::Signed;

use crate::certify::{verify_all_with, Region, Status, VerifyConfig, DEFAULT_MAX_DEPTH};
use crate::chern::{quadric_catalog, quadric_ch, twist, ChernCharacter, NamedCharacter, ObjectLabel, Threefold};
use crate::heart::{
    heart_z, reduce_candidates, skyscraper_candidates, Derivation, SignFact, Subregion, SKYSCRAPER_BASE,
};
use crate::kernel::rational::{format_rational, int, parse_rational, rat, Rational};
use crate::kernel::RationalInterval;
use crate::tilt::{bg_satisfied, central_charge, lambda, mu, nu, nu_zero_alpha_squared, TiltParams};
use crate::{Error, Result};

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn region_arg(s: &str) -> std::result::Result<Region, String> {
    Region::parse(s).map_err(|e| e.to_string())
}

fn label_arg(s: &str) -> std::result::Result<ObjectLabel, String> {
    s.parse::<ObjectLabel>().map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "tiltcert",
    version,
    about = "Exact tilt-stability computations and certificates on the quadric threefold"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct PointArgs {
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub beta: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "1/6")]
    pub s: Rational,
}

impl PointArgs {
    fn params(&self) -> Result<Option<TiltParams>, String> {
        match (&self.alpha, &self.beta) {
            (None, None) => Ok(None),
            (Some(a), Some(b)) => TiltParams::try_new(a.clone(), b.clone(), self.s.clone())
                .map(Some)
                .ok_or_else(|| "--alpha must be positive".to_string()),
            _ => Err("--alpha and --beta must be given together".to_string()),
        }
    }

    fn required(&self) -> Result<TiltParams, String> {
        self.params()?
            .ok_or_else(|| "--alpha and --beta are required".to_string())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chern characters of the catalog, with slopes when a point is given.
    Catalog {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Slopes and central charge of one object at one point.
    Slopes {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_parser = label_arg, allow_hyphen_values = true)]
        object: Option<ObjectLabel>,
        #[arg(long)]
        chern: Option<PathBuf>,
    },
    /// Run every certificate and identity check.
    Verify {
        #[arg(long, value_parser = region_arg, allow_hyphen_values = true)]
        region: Option<Region>,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Candidate dimension vectors of subobjects of a skyscraper sheaf.
    Subobjects {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Scan the nu = 0 locus of a character and print the BG margin.
    Bg {
        #[arg(long)]
        chern: PathBuf,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "1/6")]
        s: Rational,
        #[arg(long, value_parser = region_arg, allow_hyphen_values = true)]
        region: Option<Region>,
        #[arg(long, default_value_t = 16)]
        grid: u32,
    },
    /// SVG figures.
    Plot {
        #[command(subcommand)]
        figure: Figure,
    },
}

#[derive(Debug, Subcommand)]
pub enum Figure {
    /// Z of the four heart generators with the dividing line.
    Zvectors {
        #[command(flatten)]
        point: PointArgs,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Zero set of the wall polynomial of two characters.
    Wall {
        #[arg(long)]
        chern1: Option<PathBuf>,
        #[arg(long)]
        chern2: Option<PathBuf>,
        #[arg(long, value_parser = region_arg, allow_hyphen_values = true)]
        region: Option<Region>,
        #[arg(long, default_value_t = 64)]
        grid: u32,
        #[arg(short, long)]
        out: PathBuf,
    },
}

enum Outcome {
    Ok,
    NotCertified,
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(config.command) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::NotCertified) => 1,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn read_character(path: &Path) -> Result<ChernCharacter> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let named: NamedCharacter = serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.display().to_string(),
        source,
    })?;
    Ok(named.character)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn flag(name: &str) -> impl Fn(Error) -> String + '_ {
    move |e| format!("--{name}: {e}")
}

fn execute(command: Command) -> std::result::Result<Outcome, String> {
    let x = Threefold::quadric();
    match command {
        Command::Catalog { point, json } => {
            let p = point.params()?;
            let mut rows = Vec::new();
            for obj in quadric_catalog() {
                let v = &obj.character;
                let mut line = format!("{:<6} ch = {v}", obj.label.to_string());
                let mut row = serde_json::json!({
                    "object": obj.label.to_string(),
                    "character": v,
                    "mu_stable": obj.mu_stable,
                });
                if let Some(p) = &p {
                    let (m, n, z) = (mu(v, p, &x), nu(v, p, &x), central_charge(v, p, &x));
                    line.push_str(&format!("  mu = {m}  nu = {n}  Z = {z}"));
                    row["mu"] = m.to_string().into();
                    row["nu"] = n.to_string().into();
                    row["z"] = serde_json::json!([format_rational(&z.re), format_rational(&z.im)]);
                }
                println!("{line}");
                rows.push(row);
            }
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&rows).expect("catalog serializes") + "\n";
                write_file(&path, &text).map_err(flag("json"))?;
            }
            Ok(Outcome::Ok)
        }
        Command::Slopes { point, object, chern } => {
            let p = point.required()?;
            let (name, v) = match (object, chern) {
                (Some(l), None) => (l.to_string(), quadric_ch(l)),
                (None, Some(path)) => (
                    path.display().to_string(),
                    read_character(&path).map_err(flag("chern"))?,
                ),
                _ => return Err("exactly one of --object and --chern is required".into()),
            };
            let z = central_charge(&v, &p, &x);
            println!("object {name}  ch = {v}");
            println!("mu     = {}", mu(&v, &p, &x));
            println!("nu     = {}", nu(&v, &p, &x));
            println!("Re Z   = {}", format_rational(&z.re));
            println!("Im Z   = {}", format_rational(&z.im));
            println!("lambda = {}", lambda(&v, &p, &x));
            println!("ch^beta = {}", twist(&v, &p.beta, &x));
            Ok(Outcome::Ok)
        }
        Command::Verify {
            region,
            max_depth,
            json,
        } => {
            let config = VerifyConfig {
                region: region.unwrap_or_else(Region::standard),
                max_depth,
                ..VerifyConfig::default()
            };
            let report = verify_all_with(&config);
            for item in &report.items {
                println!("{:<12} {}", status_word(item.status), item.name);
            }
            println!("aggregate: {}", status_word(report.status));
            if let Some(path) = json {
                write_file(&path, &report.to_json()).map_err(flag("json"))?;
            }
            Ok(if report.status == Status::Certified {
                Outcome::Ok
            } else {
                Outcome::NotCertified
            })
        }
        Command::Subobjects { point, json } => {
            let p = point.params()?;
            let facts = [
                SignFact {
                    generator: 1,
                    subregion: Subregion::Full,
                    sign: crate::certify::Sign::Negative,
                },
                SignFact {
                    generator: 2,
                    subregion: Subregion::Side(crate::certify::SideConstraint::AlphaAtMostMinusBeta),
                    sign: crate::certify::Sign::NonPositive,
                },
                SignFact {
                    generator: 2,
                    subregion: Subregion::Side(crate::certify::SideConstraint::AlphaAtLeastMinusBeta),
                    sign: crate::certify::Sign::NonNegative,
                },
            ];
            let set =
                reduce_candidates(&skyscraper_candidates(), &facts, &SKYSCRAPER_BASE).map_err(|e| e.to_string())?;
            for c in &set.candidates {
                let how = match &c.derivation {
                    Derivation::Base => "base".to_string(),
                    Derivation::Dominated { edges } => edges
                        .iter()
                        .map(|e| format!("from {} on {}", e.base, e.subregion))
                        .collect::<Vec<_>>()
                        .join("; "),
                    Derivation::Pending => "pending".to_string(),
                };
                match &p {
                    Some(p) => println!(
                        "{}  Im Z = {}  {how}",
                        c.vector,
                        format_rational(&heart_z(c.vector, p, &x).im)
                    ),
                    None => println!("{}  {how}", c.vector),
                }
            }
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&set).expect("candidates serialize") + "\n";
                write_file(&path, &text).map_err(flag("json"))?;
            }
            Ok(Outcome::Ok)
        }
        Command::Bg { chern, s, region, grid } => {
            let v = read_character(&chern).map_err(flag("chern"))?;
            if grid == 0 {
                return Err("--grid must be positive".into());
            }
            let beta = region.unwrap_or_else(Region::standard).beta;
            let mut min: Option<Rational> = None;
            let mut failures = 0;
            for k in 0..=grid as i64 {
                let b = &beta.lo + beta.width() * rat(k, grid as i64);
                let Some(a2) = nu_zero_alpha_squared(&v, &b, &x).filter(|a2| a2.is_positive()) else {
                    continue;
                };
                let t = twist(&v, &b, &x);
                let margin = &s * x.d() * &a2 * &t.ch1 - &t.ch3;
                let ok = bg_satisfied(&margin, &s);
                if !ok {
                    failures += 1;
                }
                println!(
                    "beta = {:<8} alpha^2 = {:<10} margin = {}{}",
                    format_rational(&b),
                    format_rational(&a2),
                    format_rational(&margin),
                    if ok { "" } else { "  violated" }
                );
                if min.as_ref().is_none_or(|m| &margin < m) {
                    min = Some(margin);
                }
            }
            match &min {
                Some(m) => println!("minimum margin = {}", format_rational(m)),
                None => println!("no admissible points"),
            }
            Ok(if failures == 0 {
                Outcome::Ok
            } else {
                Outcome::NotCertified
            })
        }
        Command::Plot {
            figure: Figure::Zvectors { point, out },
        } => {
            let p = point.required()?;
            write_file(&out, &svg::zvectors_svg(&p)).map_err(flag("out"))?;
            Ok(Outcome::Ok)
        }
        Command::Plot {
            figure:
                Figure::Wall {
                    chern1,
                    chern2,
                    region,
                    grid,
                    out,
                },
        } => {
            if grid < 16 {
                return Err("--grid must be at least 16".into());
            }
            let load = |path: Option<PathBuf>, name: &str, n: i64| match path {
                Some(p) => read_character(&p).map_err(flag(name)),
                None => Ok(quadric_ch(ObjectLabel::Line(n))),
            };
            let v = load(chern1, "chern1", 0)?;
            let w = load(chern2, "chern2", 1)?;
            let (beta, alpha) = match region {
                Some(r) => (r.beta, r.alpha),
                None => (
                    RationalInterval::new(int(0), int(1)),
                    RationalInterval::new(int(0), rat(3, 5)),
                ),
            };
            write_file(&out, &svg::wall_svg(&v, &w, &beta, &alpha, grid)).map_err(flag("out"))?;
            Ok(Outcome::Ok)
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Certified => "certified",
        Status::Failed => "failed",
        Status::Inconclusive => "inconclusive",
    }
}
