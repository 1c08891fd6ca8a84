//! Command-line front end.

mod place_arg;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::algebra::{BaseField, FieldValue, Poly, Ring};
use crate::curve::place::format_poly;
use crate::curve::{build_trigonal, SuperellipticCurve};
use crate::error::{Error, Result};
use crate::io;
use crate::jacobian::{verify_trigonal_3torsion, weierstrass_subgroup_2torsion, zeta, Verdict, DEFAULT_BUDGET};
use crate::weierstrass::{ell_ladder, vanishing_orders, weierstrass_report, Method};

pub use place_arg::resolve_place;

#[derive(Parser, Debug)]
#[command(name = "weierstrass", version, about = "Weierstrass points, gap sequences and torsion checks on y^n = h(x)")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized step (factoring, field construction).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Starting series precision for local computations (0 picks 2g).
    #[arg(long, global = true, default_value_t = 0)]
    pub precision: usize,
    /// Upper bound on enumerated group and field sizes.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Genus and ramification data.
    Genus { file: PathBuf },
    /// The Weierstrass divisor with weights and gap sequences.
    Weierstrass {
        file: PathBuf,
        #[arg(long, default_value = "both")]
        method: String,
    },
    /// Gap sequence and l(kP) ladder at one place.
    Gaps {
        file: PathBuf,
        /// Place descriptor such as `inf`, `x=1` or `(x=2, y=3)`.
        #[arg(long)]
        place: String,
    },
    /// Weierstrass differences generate the 2-torsion of a hyperelliptic Jacobian.
    Prop5 {
        file: Option<PathBuf>,
        /// Use y^2 = x^(2g+1) + 1.
        #[arg(long)]
        genus: Option<u32>,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// On the trigonal curve of genus g, P1 - P2 has order 3.
    Prop6 {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Point counts, L-polynomial and Jacobian order over F_p.
    Zeta {
        file: PathBuf,
        #[arg(long)]
        prime: Option<u64>,
    },
}

/// Parses `args` and runs; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v).expect("values serialize");
    writeln!(out, "{text}").map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Domain(format!("write failed: {e}"))
}

fn curve_line(c: &SuperellipticCurve) -> String {
    format!("y^{} = {} over {}", c.n(), format_poly(c.h(), "x"), c.field())
}

fn list(xs: &[u32]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn over_prime(curve: SuperellipticCurve, prime: Option<u64>) -> Result<SuperellipticCurve> {
    match (curve.field(), prime) {
        (BaseField::Rational, Some(p)) => curve.reduce_mod(p),
        (BaseField::Rational, None) => Err(Error::Domain("curve is over Q; pass --prime p".into())),
        (f, Some(p)) if f.characteristic() != p => {
            Err(Error::Domain(format!("curve is over {f}, which does not match --prime {p}")))
        }
        _ => Ok(curve),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let cfg = &cli.config;
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(io_err);
    match &cli.command {
        Command::Genus { file } => {
            let c = io::load_curve(file)?;
            if cfg.json {
                emit(out, &io::curve_json(&c))?;
            } else {
                w(out, format!("curve: {}", curve_line(&c)))?;
                w(out, format!("genus: {}", c.genus()))?;
                for b in c.branch() {
                    w(out, format!("branch {{{}=0}} multiplicity {} e={}", format_poly(&b.q, "x"), b.m, c.n()))?;
                }
                w(out, format!("infinity: {} place(s), e={}", c.d_inf(), c.e_inf()))?;
            }
            Ok(0)
        }
        Command::Weierstrass { file, method } => {
            let c = io::load_curve(file)?;
            let method: Method = method.parse()?;
            let r = weierstrass_report(&c, method, cfg.precision)?;
            if cfg.json {
                emit(out, &io::report_json(&r))?;
            } else {
                w(out, format!("curve: {}", curve_line(&c)))?;
                w(out, format!("method: {}", r.method.as_str()))?;
                for e in &r.entries {
                    let gaps = e.gaps.as_deref().map(list).unwrap_or_else(|| "-".into());
                    w(out, format!("{:<40} deg {:<3} weight {:<4} gaps {}", e.place.to_string(), e.place.degree(), e.weight, gaps))?;
                }
                w(out, format!("total {} / expected {} (g={})", r.total_weight, r.expected_total(), r.genus))?;
            }
            Ok(0)
        }
        Command::Gaps { file, place } => {
            let c = io::load_curve(file)?;
            let p = resolve_place(&c, place)?;
            let gd = vanishing_orders(&c, &p, cfg.precision)?;
            let ladder = ell_ladder(&gd, 2 * c.genus());
            if cfg.json {
                emit(out, &io::gaps_json(&gd, &ladder))?;
            } else {
                w(out, format!("place: {}", gd.place))?;
                w(out, format!("orders: {}", list(&gd.orders)))?;
                w(out, format!("gaps: {}", list(&gd.gaps)))?;
                w(out, format!("weight: {}", gd.weight))?;
                w(out, format!("l(kP), k=0..{}: {}", 2 * c.genus(), list(&ladder)))?;
            }
            Ok(0)
        }
        Command::Prop5 { file, genus, prime } => {
            let curve = match (file, genus) {
                (Some(f), None) => io::load_curve(f)?,
                (None, Some(g)) => family_curve(*g)?,
                _ => return Err(Error::Parse("prop5 takes either a curve file or --genus".into())),
            };
            let curve = over_prime(curve, *prime)?;
            let outcome = weierstrass_subgroup_2torsion(&curve, cfg.seed, cfg.budget)?;
            print_verdict(out, cfg.json, &outcome.verdict, || {
                format!(
                    "subgroup size: {} (expected 4^g = {})",
                    outcome.subgroup_size,
                    4u64.pow(outcome.verdict.genus)
                )
            })
        }
        Command::Prop6 { genus, prime } => {
            let field = match prime {
                Some(p) => BaseField::prime(*p)?,
                None => BaseField::Rational,
            };
            let tc = build_trigonal(*genus, &field, None)?;
            let v = verify_trigonal_3torsion(&tc, cfg.precision)?;
            print_verdict(out, cfg.json, &v, || {
                format!(
                    "div(f) = {}\norder: {} (expected 3)",
                    v.datum("div(f)").unwrap_or("?"),
                    v.datum("order").unwrap_or("?")
                )
            })
        }
        Command::Zeta { file, prime } => {
            let c = io::load_curve(file)?;
            let c = over_prime(c, *prime)?;
            let z = zeta(&c, cfg.budget)?;
            if cfg.json {
                emit(out, &io::zeta_json(&z))?;
            } else {
                w(out, format!("curve: {}", curve_line(&c)))?;
                for (k, n) in z.counts.iter().enumerate() {
                    w(out, format!("#C(F_{}^{}) = {n}", z.p, k + 1))?;
                }
                let coeffs: Vec<String> = z.l_poly.iter().map(|b| b.to_string()).collect();
                w(out, format!("L(T) coefficients: {}", coeffs.join(" ")))?;
                w(out, format!("#J(F_{}) = L(1) = {}", z.p, z.jacobian_order))?;
                for a in &z.checks {
                    w(out, format!("{}: {}", a.name, if a.pass { "OK" } else { "FAILED" }))?;
                }
            }
            Ok(0)
        }
    }
}

/// `y^2 = x^(2g+1) + 1` over Q.
fn family_curve(g: u32) -> Result<SuperellipticCurve> {
    if g == 0 {
        return Err(Error::Domain("genus must be positive".into()));
    }
    let q = BaseField::Rational;
    let mut coeffs: Vec<FieldValue> = vec![q.zero(); 2 * g as usize + 2];
    coeffs[0] = q.one();
    coeffs[2 * g as usize + 1] = q.one();
    SuperellipticCurve::new(q.clone(), 2, Poly::from_coeffs(&q, coeffs))
}

fn print_verdict(out: &mut dyn Write, json: bool, v: &Verdict, summary: impl FnOnce() -> String) -> Result<i32> {
    if json {
        emit(out, &io::verdict_json(v))?;
    } else {
        let mut text = format!("{} genus {} over {}\n", v.proposition, v.genus, v.field);
        for a in &v.assertions {
            text.push_str(&format!("  [{}] {}: {}\n", if a.pass { "PASS" } else { "FAIL" }, a.name, a.detail));
        }
        text.push_str(&summary());
        text.push_str(&format!("\nverdict: {}", if v.verdict() { "PASS" } else { "FAIL" }));
        writeln!(out, "{text}").map_err(io_err)?;
    }
    Ok(if v.verdict() { 0 } else { 1 })
}
