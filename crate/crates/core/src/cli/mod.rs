//! The `jk` command-line tool.
//!
//! Every command builds a JSON report tagged with `"schema": "jk-report/1"`,
//! validates it, and writes it either as JSON (canonical) or as a
//! line-oriented text rendering of the same data.

mod check;
mod report;

pub use check::{run_check, CheckOutcome, CheckResult, CheckSuite, EntryCheck};
pub use report::{render_text, validate_report, SCHEMA};

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, MultiPoly, Rational, RationalStr};
use crate::jk::{
    fundamental_semiinvariant, jk_invariants, semiinvariant_degree_via_pencil, Sampling, DEFAULT_CEILING,
};
use crate::liealg::zoo::{self, ZooEntry, ZooRep, ZOO_NAMES};
use crate::liealg::{AlgebraFile, LieAlgebra, Representation, RepresentationFile};
use crate::pencil::{pencil_invariants, PencilFile};
use crate::shifts::{
    formal_invariant_truncated, formal_span_stable, shift_chain_defect, shift_family, verify_all,
    InvariantsFile, ShiftContext,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_AGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "jk", version, about = "Jordan–Kronecker invariants of pencils and Lie algebra representations")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Seed of the sampling streams.
    #[arg(long, global = true, env = "JK_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Number of random trials per randomized computation (at least 3).
    #[arg(long, global = true, default_value_t = 8)]
    pub trials: usize,
    /// Sampled coordinates lie in [-bound, bound].
    #[arg(long, global = true, default_value_t = 1000)]
    pub bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Maximum number of minors the symbolic semi-invariant path may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CEILING)]
    pub ceiling: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kronecker invariants of the pencil A + λB stored in FILE.
    Pencil { file: PathBuf },
    /// Representation-level invariants.
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Shifts of invariants, trdeg Y_a, degree bounds and formal invariants.
    Shifts(ShiftsArgs),
    /// The built-in example representations.
    Zoo {
        #[command(subcommand)]
        command: ZooCommand,
    },
    /// Run every zoo representation through the full verification suite.
    Check(CheckArgs),
}

#[derive(Debug, Subcommand)]
pub enum RepCommand {
    /// The Jordan–Kronecker invariant with its identity checks.
    Analyze(Source),
    /// The fundamental semi-invariant p_ρ.
    Semiinvariant(Source),
}

#[derive(Debug, Subcommand)]
pub enum ZooCommand {
    List,
    Show { name: String },
}

/// Where the representation comes from: a zoo entry or an algebra file,
/// optionally overridden by `--rep`.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Zoo entry name (`--zoo list` prints the names).
    #[arg(long, conflicts_with = "algebra")]
    pub zoo: Option<String>,
    /// Algebra file: {"dim": n, "brackets": [{"i", "j", "k", "c"}, …]}.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    /// `adjoint`, `coadjoint`, or a representation file.
    #[arg(long)]
    pub rep: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ShiftsArgs {
    #[command(flatten)]
    pub source: Source,
    /// Invariants file: {"polynomials": [poly, …]}.
    #[arg(long)]
    pub invariants: Option<PathBuf>,
    /// Shift origin, e.g. `1,2,-3/4` (default: the generic witness a).
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Truncation order of the formal invariants.
    #[arg(long, default_value_t = 2)]
    pub order: usize,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    /// Restrict to one zoo entry (`list` prints the names).
    #[arg(long)]
    pub zoo: Option<String>,
}

/// Validated global options.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub sampling: Sampling,
    pub format: Format,
    pub ceiling: u128,
}

impl RunConfig {
    pub fn from_opts(o: &GlobalOpts) -> Result<Self> {
        if o.seed == 0 || o.trials == 0 || o.bound == 0 {
            return Err(Error::InvalidArgument("--seed, --trials and --bound must be positive".into()));
        }
        Ok(RunConfig {
            sampling: Sampling::new(o.seed, o.trials, o.bound),
            format: o.format,
            ceiling: o.ceiling,
        })
    }
}

/// A finished command: the report and the exit status it implies.
pub struct Output {
    pub command: &'static str,
    pub body: Value,
    pub exit: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::SymbolicCeiling { .. } => EXIT_FAILED,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (program name first), runs the command, writes the report
/// to `out` and diagnostics to `err`, and returns the exit code.
pub fn run_with(args: impl IntoIterator<Item = impl Into<OsString> + Clone>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => match emit(&output, cli.global.format, out) {
            Ok(()) => output.exit,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_FAILED
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn emit(output: &Output, format: Format, out: &mut dyn Write) -> Result<()> {
    let mut top = Map::new();
    top.insert("schema".into(), json!(SCHEMA));
    top.insert("command".into(), json!(output.command));
    match &output.body {
        Value::Object(fields) => top.extend(fields.clone()),
        other => {
            top.insert("result".into(), other.clone());
        }
    }
    let value = Value::Object(top);
    validate_report(&value)?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &value)?;
            writeln!(out)?;
        }
        Format::Text => out.write_all(render_text(&value).as_bytes())?,
    }
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let config = RunConfig::from_opts(&cli.global)?;
    match &cli.command {
        Command::Pencil { file } => cmd_pencil(file),
        Command::Rep { command } => match command {
            RepCommand::Analyze(src) => match resolve(src)? {
                Resolved::List => Ok(zoo_list()),
                Resolved::Rep(r) => cmd_rep_analyze(&r, &config),
            },
            RepCommand::Semiinvariant(src) => match resolve(src)? {
                Resolved::List => Ok(zoo_list()),
                Resolved::Rep(r) => cmd_rep_semiinvariant(&r, &config),
            },
        },
        Command::Shifts(args) => match resolve(&args.source)? {
            Resolved::List => Ok(zoo_list()),
            Resolved::Rep(r) => cmd_shifts(&r, args, &config),
        },
        Command::Zoo { command } => match command {
            ZooCommand::List => Ok(zoo_list()),
            ZooCommand::Show { name } => zoo_show(name),
        },
        Command::Check(args) => cmd_check(args, &config),
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    Ok(serde_json::to_value(v)?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(path.display().to_string(), e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| Error::input(path.display().to_string(), e.to_string()))
}

pub fn cmd_pencil(file: &Path) -> Result<Output> {
    let pencil = read_json::<PencilFile>(file)?.into_pencil()?;
    let inv = pencil_invariants(&pencil)?;
    Ok(Output {
        command: "pencil",
        body: to_value(&inv)?,
        exit: EXIT_OK,
    })
}

/// A representation together with what is known about it.
pub struct ResolvedRep {
    pub label: String,
    pub rep: Representation,
    /// Invariants shipped with a zoo entry, when the entry's own
    /// representation was selected.
    pub known_invariants: Vec<MultiPoly>,
}

enum Resolved {
    List,
    Rep(ResolvedRep),
}

fn resolve(src: &Source) -> Result<Resolved> {
    if src.zoo.as_deref() == Some("list") {
        return Ok(Resolved::List);
    }
    let (label, algebra, entry): (String, LieAlgebra, Option<ZooEntry>) = match (&src.zoo, &src.algebra) {
        (Some(name), _) => {
            let e = zoo::entry(name)?;
            (name.clone(), e.algebra.clone(), Some(e))
        }
        (None, Some(path)) => {
            let alg = read_json::<AlgebraFile>(path)?.into_algebra()?;
            (path.display().to_string(), alg, None)
        }
        (None, None) => return Err(Error::InvalidArgument("one of --zoo or --algebra is required".into())),
    };
    let (rep, own) = match src.rep.as_deref() {
        None => match &entry {
            Some(e) => (e.representation.clone(), true),
            None => (Representation::coadjoint(&algebra), false),
        },
        Some("coadjoint") => {
            let own = entry.as_ref().is_some_and(|e| e.kind == ZooRep::Coadjoint);
            (Representation::coadjoint(&algebra), own)
        }
        Some("adjoint") => (Representation::adjoint(&algebra), false),
        Some(path) => {
            let file: RepresentationFile = read_json(Path::new(path))?;
            (file.into_representation(&algebra)?, false)
        }
    };
    let known_invariants = match (own, entry) {
        (true, Some(e)) => e.invariants,
        _ => Vec::new(),
    };
    Ok(Resolved::Rep(ResolvedRep {
        label,
        rep,
        known_invariants,
    }))
}

pub fn cmd_rep_analyze(r: &ResolvedRep, config: &RunConfig) -> Result<Output> {
    let report = jk_invariants(&r.rep, &config.sampling)?;
    let exit = if report.witness.agreed { EXIT_OK } else { EXIT_AGREEMENT };
    let mut body = Map::new();
    body.insert("representation".into(), json!(r.label));
    if let Value::Object(fields) = to_value(&report)? {
        body.extend(fields);
    }
    Ok(Output {
        command: "rep analyze",
        body: Value::Object(body),
        exit,
    })
}

pub fn cmd_rep_semiinvariant(r: &ResolvedRep, config: &RunConfig) -> Result<Output> {
    let via_pencil = semiinvariant_degree_via_pencil(&r.rep, &config.sampling)?;
    let mut body = Map::new();
    body.insert("representation".into(), json!(r.label));
    match fundamental_semiinvariant(&r.rep, config.ceiling) {
        Ok(s) => {
            if let Value::Object(fields) = to_value(&s)? {
                body.extend(fields);
            }
            body.insert("degree_via_pencil".into(), json!(via_pencil));
            body.insert("degrees_agree".into(), json!(s.degree == via_pencil));
        }
        Err(e @ Error::SymbolicCeiling { .. }) => {
            body.insert("degree".into(), json!(via_pencil));
            body.insert("degree_via_pencil".into(), json!(via_pencil));
            body.insert("symbolic".into(), json!(e.to_string()));
        }
        Err(e) => return Err(e),
    }
    Ok(Output {
        command: "rep semiinvariant",
        body: Value::Object(body),
        exit: EXIT_OK,
    })
}

/// Comma-separated rationals, optionally in square brackets.
pub fn parse_vector(text: &str) -> Result<Vec<Rational>> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .enumerate()
        .map(|(i, s)| {
            let s = s.trim().trim_matches('"');
            parse_rational(s).map_err(|_| Error::input(format!("--a coordinate {i}"), format!("invalid rational `{s}`")))
        })
        .collect()
}

fn strs(v: &[Rational]) -> Vec<RationalStr> {
    v.iter().cloned().map(RationalStr).collect()
}

pub fn cmd_shifts(r: &ResolvedRep, args: &ShiftsArgs, config: &RunConfig) -> Result<Output> {
    let rep = &r.rep;
    let polys = match &args.invariants {
        Some(path) => read_json::<InvariantsFile>(path)?.polynomials,
        None => r.known_invariants.clone(),
    };
    let invariants = verify_all(rep, &polys)?;
    let ctx = ShiftContext::new(rep, &config.sampling)?.with_ceiling(config.ceiling);
    let a = match &args.a {
        Some(text) => parse_vector(text)?,
        None => ctx.report.a.clone(),
    };
    if a.len() != rep.dim_v() {
        return Err(Error::input(
            "--a",
            format!("expected {} coordinates, found {}", rep.dim_v(), a.len()),
        ));
    }

    let family = shift_family(&invariants, &a)?;
    let trdeg = ctx.trdeg_ya(&invariants, &a)?;
    let vorontsov = ctx.vorontsov_check(&invariants);
    let sums = ctx.degree_sum_bounds(&invariants);
    let independence = ctx.differentials_independence(&invariants, &ctx.report.x)?;
    let chain_property: Vec<bool> = invariants
        .iter()
        .map(|f| Ok(shift_chain_defect(rep, f, &a)?.is_none()))
        .collect::<Result<_>>()?;
    let formal = match formal_invariant_truncated(rep, &a, args.order, &config.sampling) {
        Ok(chains) => json!({
            "order": args.order,
            "chains": to_value(&chains)?,
            "span_stable": formal_span_stable(rep, &a, args.order, &config.sampling)?,
        }),
        Err(e @ Error::NotRegular { .. }) => json!({ "order": args.order, "unavailable": e.to_string() }),
        Err(e) => return Err(e),
    };

    let listed: Vec<Value> = invariants
        .iter()
        .map(|f| json!({ "display": f.poly.to_string(), "degree": f.degree, "verified": f.verified, "poly": f.poly }))
        .collect();
    let body = json!({
        "representation": r.label,
        "a": strs(&a),
        "invariants": listed,
        "shift_family": family,
        "trdeg": trdeg,
        "vorontsov": vorontsov,
        "degree_sums": sums,
        "independence": independence,
        "chain_property": chain_property,
        "formal": formal,
    });
    let ok = trdeg.ok() && sums.ok() && independence.consistent && chain_property.iter().all(|&c| c);
    let exit = if !ok {
        EXIT_FAILED
    } else if !ctx.report.witness.agreed {
        EXIT_AGREEMENT
    } else {
        EXIT_OK
    };
    Ok(Output {
        command: "shifts",
        body,
        exit,
    })
}

pub fn zoo_list() -> Output {
    let entries: Vec<Value> = zoo::all()
        .iter()
        .map(|e| json!({ "name": e.name, "description": e.description }))
        .collect();
    Output {
        command: "zoo list",
        body: json!({ "entries": entries }),
        exit: EXIT_OK,
    }
}

pub fn zoo_show(name: &str) -> Result<Output> {
    let e = zoo::entry(name)?;
    let x = &e.expected;
    let body = json!({
        "name": e.name,
        "description": e.description,
        "algebra": AlgebraFile::from_algebra(&e.algebra),
        "representation": RepresentationFile::from_representation(&e.representation),
        "invariants": e.invariants.iter().map(|f| json!({ "display": f.to_string(), "poly": f })).collect::<Vec<_>>(),
        "expected": {
            "eps": x.eps, "eta": x.eta, "jordan_shape": x.jordan_shape,
            "k_hor": x.k_hor, "k_vert": x.k_vert, "deg_D": x.deg_d,
            "dim_st_reg": x.dim_st_reg, "codim_orbit_reg": x.codim_orbit_reg,
        },
    });
    Ok(Output {
        command: "zoo show",
        body,
        exit: EXIT_OK,
    })
}

pub fn cmd_check(args: &CheckArgs, config: &RunConfig) -> Result<Output> {
    let entries = match args.zoo.as_deref() {
        Some("list") => return Ok(zoo_list()),
        Some(name) => vec![zoo::entry(name)?],
        None => ZOO_NAMES.iter().map(|n| zoo::entry(n)).collect::<Result<_>>()?,
    };
    let suite = run_check(&entries, &config.sampling, config.ceiling)?;
    let exit = match suite.outcome() {
        CheckOutcome::Passed => EXIT_OK,
        CheckOutcome::Failed => EXIT_FAILED,
        CheckOutcome::Unconfirmed => EXIT_AGREEMENT,
    };
    Ok(Output {
        command: "check",
        body: to_value(&suite)?,
        exit,
    })
}

#[cfg(test)]
mod tests;
