//! `splitjac`: one JSON document on standard output per invocation,
//! progress on standard error.
//!
//! Exit codes: 0 success, 2 invalid input, 3 violated precondition
//! (singular curve, `J2 = 0`, degenerate parameters), 4 failed identity
//! check.

mod render;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use splitjac::algebra::{parse_rational, to_canonical_text};
use splitjac::analysis::analyze;
use splitjac::cover_types::{ram_report, rh_check, weierstrass_parity_check, Parity};
use splitjac::hurwitz::{
    audit_row, audit_table, braid_orbits, nielsen_enumerate, parse_cycle_types, TABLE,
};
use splitjac::invariants::{absolute, igusa, Sextic};
use splitjac::l2::{
    derive_l2_locus, l2_curve, l2_group, l2_isogeny, l2_isomorphic, l2_j_pair, l2_locus_report,
    l2_membership, l2_uv, L2NormalForm, L2Point,
};
use splitjac::l3::{
    e3_estimate, l3_curve, l3_j_pair, l3_membership, l3_r_invariants, l3_subcover1, l3_subcover2,
    nu, theta_critical, L3Params, L3Point,
};
use splitjac::{Error, Rational};

use render::rat;

/// Environment variable naming the directory for derived polynomial
/// artifacts.
const ARTIFACT_DIR_VAR: &str = "SPLITJAC_ARTIFACT_DIR";

#[derive(Parser)]
#[command(
    name = "splitjac",
    version,
    about = "Genus-2 curves with split Jacobians, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CurveArg {
    /// Seven rationals `a6,a5,a4,a3,a2,a1,a0` of `Y² = a6X⁶ + … + a0`,
    /// highest degree first.
    #[arg(long, allow_hyphen_values = true)]
    curve: String,
}

#[derive(Args)]
struct UvArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    u: Rational,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    v: Rational,
}

#[derive(Subcommand)]
enum Command {
    /// Igusa invariants J2, J4, J6, J10 and absolute invariants i1, i2, i3.
    Invariants(CurveArg),
    /// Full report: invariants, degree-2 and degree-3 subcover verdicts.
    Analyze(CurveArg),
    /// Degree-2 elliptic subcovers.
    #[command(subcommand)]
    L2(L2Command),
    /// Degree-3 elliptic subcovers.
    #[command(subcommand)]
    L3(L3Command),
    /// Ramification types of maximal elliptic subcovers.
    #[command(subcommand)]
    Ram(RamCommand),
    /// Nielsen classes and braid orbits.
    #[command(subcommand)]
    Hurwitz(HurwitzCommand),
    /// Runs every symbolic identity check.
    VerifyAll,
}

#[derive(Subcommand)]
enum L2Command {
    /// Rational (u, v) parameters of a curve on L2.
    Check(CurveArg),
    /// Curve and (u, v) of the normal form `Y² = X⁶ − s1X⁴ + s2X² − 1`.
    Params {
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        s1: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        s2: Rational,
    },
    /// Reduced automorphism group at (u, v).
    Group(UvArgs),
    /// j-invariants of the two degree-2 subcovers at (u, v).
    Jpair(UvArgs),
    /// Whether the two subcovers are 2- or 3-isogenous at (u, v).
    Isogeny {
        #[command(flatten)]
        uv: UvArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
        degree: u32,
    },
    /// Derives the equation of L2 in i1, i2, i3 and checks it.
    DeriveLocus,
}

#[derive(Subcommand)]
enum L3Command {
    /// Curve `Y² = F·G`, its two subcover maps and their j-invariants.
    Build {
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        b: Rational,
    },
    /// Rational (u, v) parameters of a curve on L3.
    Check(CurveArg),
    /// j-invariants, two-cubic invariants and ν at (u, v).
    Jpair(UvArgs),
    /// Runs the symbolic identities of the degree-3 construction.
    Verify,
}

#[derive(Subcommand)]
enum RamCommand {
    /// Every ramification type in degree n.
    List {
        #[arg(long)]
        degree: u32,
        /// Print `case: type` lines instead of JSON.
        #[arg(long)]
        text: bool,
    },
}

#[derive(Subcommand)]
enum HurwitzCommand {
    /// Nielsen class size, braid orbits and monodromy groups.
    Count {
        #[arg(long)]
        degree: usize,
        /// Cycle types per branch point, e.g. `2.2,2^2,4,2` or `[2^2],[4]`.
        #[arg(long)]
        types: String,
        /// List the class representatives of each orbit.
        #[arg(long)]
        orbits: bool,
        /// Audit every tabulated row, not only rows matching the input.
        #[arg(long)]
        audit_table: bool,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A failed invocation: exit code and error JSON.
struct Failure {
    code: u8,
    message: String,
    note: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let note = match &e {
            Error::J2Vanishes => Some(
                "absolute invariants are defined only for J2 ≠ 0; alternative invariants are not implemented".to_string(),
            ),
            Error::Singular(_) => Some("the curve is not of genus 2 (J10 = 0)".to_string()),
            _ => None,
        };
        Failure {
            code: e.exit_code() as u8,
            message: e.to_string(),
            note,
        }
    }
}

impl Failure {
    fn to_json(&self) -> Value {
        let mut v = json!({ "code": self.code, "message": self.message });
        if let Some(n) = &self.note {
            v["note"] = Value::String(n.clone());
        }
        v
    }
}

/// Standard output and exit code of a completed command.
enum Output {
    Json(Value, u8),
    Text(String),
}

type Outcome = Result<Output, Failure>;

fn ok(v: Value) -> Outcome {
    Ok(Output::Json(v, 0))
}

fn checked(v: Value, passed: bool) -> Outcome {
    Ok(Output::Json(v, if passed { 0 } else { 4 }))
}

fn parse_curve(c: &CurveArg) -> Result<Sextic, Failure> {
    Ok(Sextic::parse(&c.curve)?)
}

/// A genus-2 curve: fails when `J10 = 0`.
fn smooth_curve(c: &CurveArg) -> Result<Sextic, Failure> {
    let s = parse_curve(c)?;
    if !igusa(&s).genus2_valid() {
        return Err(Error::Singular("J10 = 0: the sextic has a repeated root".into()).into());
    }
    Ok(s)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Invariants(c) => {
            let s = parse_curve(&c)?;
            let ig = igusa(&s);
            let abs = absolute(&ig).ok();
            ok(json!({
                "curve": render::curve(&s),
                "invariants": render::invariants(&ig, abs.as_ref()),
            }))
        }
        Command::Analyze(c) => ok(render::analysis(&analyze(&parse_curve(&c)?)?)),
        Command::L2(cmd) => run_l2(cmd),
        Command::L3(cmd) => run_l3(cmd),
        Command::Ram(RamCommand::List { degree, text }) => ram_list(degree, text),
        Command::Hurwitz(HurwitzCommand::Count {
            degree,
            types,
            orbits,
            audit_table,
        }) => hurwitz_count(degree, &types, orbits, audit_table),
        Command::VerifyAll => {
            let mut jobs = verify::L2_JOBS.to_vec();
            jobs.extend(verify::L3_JOBS);
            jobs.extend(verify::HURWITZ_JOBS);
            checks_report(verify::run(&jobs))
        }
    }
}

fn checks_report(checks: Vec<verify::Check>) -> Outcome {
    let passed = checks.iter().all(|c| c.passed);
    let list: Vec<Value> = checks.iter().map(verify::Check::to_json).collect();
    checked(json!({ "passed": passed, "checks": list }), passed)
}

fn run_l2(cmd: L2Command) -> Outcome {
    let point = |uv: &UvArgs| L2Point::new(uv.u.clone(), uv.v.clone());
    match cmd {
        L2Command::Check(c) => {
            let s = smooth_curve(&c)?;
            let abs = absolute(&igusa(&s))?;
            let m = l2_membership(&abs);
            let points: Vec<Value> = m.points.iter().map(render::l2_point).collect();
            ok(json!({
                "curve": render::curve(&s),
                "member": m.status != splitjac::l2::MembershipStatus::OffLocus,
                "status": m.status.as_str(),
                "points": points,
            }))
        }
        L2Command::Params { s1, s2 } => {
            let nf = L2NormalForm::new(s1, s2)?;
            let p = l2_uv(&nf);
            ok(json!({
                "s1": rat(&nf.s1),
                "s2": rat(&nf.s2),
                "curve": render::curve(&l2_curve(&nf)),
                "u": rat(&p.u),
                "v": rat(&p.v),
            }))
        }
        L2Command::Group(uv) => {
            let p = point(&uv)?;
            let g = l2_group(&p);
            ok(json!({
                "u": rat(&p.u),
                "v": rat(&p.v),
                "group": g.as_str(),
                "order": g.order(),
            }))
        }
        L2Command::Jpair(uv) => {
            let p = point(&uv)?;
            ok(json!({
                "u": rat(&p.u),
                "v": rat(&p.v),
                "j_pair": render::quadratic(&l2_j_pair(&p)),
                "isomorphic": l2_isomorphic(&p),
            }))
        }
        L2Command::Isogeny { uv, degree } => {
            let p = point(&uv)?;
            let out = l2_isogeny(&p, degree)?;
            let vanishing: Vec<&str> = out.vanishing.iter().map(|f| f.as_str()).collect();
            ok(json!({
                "u": rat(&p.u),
                "v": rat(&p.v),
                "degree": out.degree,
                "isogenous": out.isogenous,
                "vanishing": vanishing,
            }))
        }
        L2Command::DeriveLocus => derive_locus(),
    }
}

fn derive_locus() -> Outcome {
    eprintln!("splitjac: eliminating u, v from the absolute invariants");
    let locus = derive_l2_locus();
    eprintln!("splitjac: checking the equation");
    let report = l2_locus_report(locus);
    let artifact = match std::env::var_os(ARTIFACT_DIR_VAR) {
        Some(dir) => {
            let dir = PathBuf::from(dir);
            let path = dir.join("l2_locus.txt");
            let write = std::fs::create_dir_all(&dir)
                .and_then(|_| std::fs::write(&path, to_canonical_text(locus)));
            if let Err(e) = write {
                return Err(Failure {
                    code: 3,
                    message: format!("cannot write {}: {e}", path.display()),
                    note: None,
                });
            }
            eprintln!("splitjac: wrote {}", path.display());
            Value::String(path.display().to_string())
        }
        None => Value::Null,
    };
    let spots: Vec<Value> = report
        .spot_checks
        .iter()
        .map(|s| {
            json!({
                "monomial": s.monomial,
                "displayed": rat(&s.displayed),
                "derived": rat(&s.derived),
            })
        })
        .collect();
    checked(
        json!({
            "variables": ["i1", "i2", "i3"],
            "terms": report.terms,
            "total_degree": locus.total_degree(),
            "vanishes": report.vanishes,
            "matches_displayed": report.matches_displayed,
            "spot_checks": spots,
            "polynomial": locus.to_string(),
            "artifact": artifact,
        }),
        report.passed(),
    )
}

fn run_l3(cmd: L3Command) -> Outcome {
    match cmd {
        L3Command::Build { a, b } => {
            let p = L3Params::new(a, b)?;
            let s1 = l3_subcover1(&p)?;
            let s2 = l3_subcover2(&p)?;
            let pt = L3Point::from_params(&p);
            let j = |m: &splitjac::l3::SubcoverMap| render::subcover(m)["j"].clone();
            ok(json!({
                "a": rat(&p.a),
                "b": rat(&p.b),
                "curve": render::curve(&l3_curve(&p)),
                "u": rat(&pt.u),
                "v": rat(&pt.v),
                "subcovers": [render::subcover(&s1), render::subcover(&s2)],
                "j_pair": [j(&s1), j(&s2)],
            }))
        }
        L3Command::Check(c) => {
            let s = smooth_curve(&c)?;
            let abs = absolute(&igusa(&s))?;
            let m = l3_membership(&abs);
            let points: Vec<Value> = m
                .points
                .iter()
                .map(|p| {
                    json!({
                        "u": rat(&p.u),
                        "v": rat(&p.v),
                        "j_pair": l3_j_pair(p).ok().as_ref().map_or(Value::Null, render::pair),
                        "theta_critical": theta_critical(p),
                    })
                })
                .collect();
            ok(json!({
                "curve": render::curve(&s),
                "member": !m.points.is_empty(),
                "e3": e3_estimate(&m).count(),
                "points": points,
            }))
        }
        L3Command::Jpair(uv) => {
            let p = L3Point::new(uv.u, uv.v)?;
            let (j1, j2) = l3_j_pair(&p)?;
            let r = l3_r_invariants(&p).ok().map_or(
                Value::Null,
                |r| json!({ "r1": rat(&r.r1), "r2": rat(&r.r2) }),
            );
            let conj = nu(&p).ok().as_ref().map_or(Value::Null, render::l3_point);
            ok(json!({
                "u": rat(&p.u),
                "v": rat(&p.v),
                "j_pair": [rat(&j1), rat(&j2)],
                "r_invariants": r,
                "nu": conj,
                "theta_critical": theta_critical(&p),
            }))
        }
        L3Command::Verify => checks_report(verify::run(&verify::L3_JOBS)),
    }
}

fn ram_list(degree: u32, text: bool) -> Outcome {
    let report = ram_report(degree)?;
    let parity = Parity::of(degree);
    let lines: Vec<String> = report
        .types
        .iter()
        .map(|(c, t)| format!("{c}: {t}"))
        .collect();
    if text {
        return Ok(Output::Text(lines.join("\n")));
    }
    let types: Vec<Value> = report
        .types
        .iter()
        .map(|(c, t)| {
            json!({
                "case": c.label(),
                "degenerate": c.is_degenerate(),
                "type": t.to_string(),
                "fibers": t.branch_points,
                "rh_sum": t.rh_sum(),
                "rh_check": rh_check(t),
                "weierstrass_parity": weierstrass_parity_check(t, parity),
            })
        })
        .collect();
    let omitted: Vec<Value> = report.omitted.iter().map(render::omission).collect();
    ok(json!({
        "degree": degree,
        "parity": if parity == Parity::Odd { "odd" } else { "even" },
        "lines": lines,
        "types": types,
        "omitted": omitted,
    }))
}

fn hurwitz_count(degree: usize, types: &str, list: bool, full_audit: bool) -> Outcome {
    let slots = parse_cycle_types(types)?;
    if degree > 1 {
        eprintln!("splitjac: enumerating Nielsen classes in degree {degree}");
    }
    let nc = nielsen_enumerate(degree, &slots)?;
    let orbits: Vec<Value> = braid_orbits(&nc)
        .iter()
        .map(|o| {
            let mut v = json!({ "size": o.size, "closure_size": o.closure_size });
            if list {
                let reps: Vec<String> = o.members.iter().map(|t| t.to_string()).collect();
                v["representatives"] = json!(reps);
            }
            v
        })
        .collect();
    let groups: std::collections::BTreeSet<String> =
        nc.representatives.iter().map(|t| t.group().label).collect();
    let (rows, discrepancies) = if full_audit {
        eprintln!("splitjac: auditing the tabulated rows");
        let a = audit_table();
        (a.rows, a.discrepancies)
    } else {
        let mut rows = Vec::new();
        let mut ds = Vec::new();
        let matching = TABLE.iter().filter(|r| {
            r.degree as usize == degree
                && parse_cycle_types(r.cycle_types).is_ok_and(|t| t == slots)
        });
        for r in matching {
            let (a, d) = audit_row(r);
            rows.push(a);
            ds.extend(d);
        }
        (rows, ds)
    };
    ok(json!({
        "degree": degree,
        "cycle_types": render::cycle_types(&nc.types),
        "class_count": nc.len(),
        "orbits": orbits,
        "groups": groups,
        "table_rows": rows.iter().map(render::row_audit).collect::<Vec<_>>(),
        "discrepancies": discrepancies.iter().map(render::discrepancy).collect::<Vec<_>>(),
    }))
}

/// Writes to standard output; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print_json(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let rendered = e.render().to_string();
            let message = rendered
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ")
                .to_string();
            let f = Failure {
                code: 2,
                message,
                note: None,
            };
            eprint!("{rendered}");
            print_json(&f.to_json());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(Output::Json(v, code)) => {
            print_json(&v);
            ExitCode::from(code)
        }
        Ok(Output::Text(t)) => {
            emit(&t);
            ExitCode::SUCCESS
        }
        Err(f) => {
            print_json(&f.to_json());
            ExitCode::from(f.code)
        }
    }
}
