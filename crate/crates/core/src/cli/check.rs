//! The self-check suite run by `jk check`.
//!
//! Each zoo entry contributes an `invariants` section that depends only on
//! the representation (never on the sampled witnesses), a list of named
//! checks, and a `witnesses` section with the sampled data.

use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactmath::{Rational, RationalStr};
use crate::jk::{fundamental_semiinvariant, jk_invariants, symmetry_of, JKReport, Sampling};
use crate::liealg::zoo::ZooEntry;
use crate::pencil::recombination_consistent;
use crate::rng::SplitMix64;
use crate::shifts::{
    chain_defect, formal_invariant_truncated, formal_span_stable, shift_chain_defect, verify_all, ShiftContext,
};

const ORIGIN_STREAM: u64 = 0x4348_4543_4B41_5331;
const MOBIUS_STREAM: u64 = 0x4348_4543_4B4D_3331;

/// Number of seeded shift origins and recombinations per entry.
const ORIGINS: u64 = 5;
const RECOMBINATIONS: u64 = 5;
const FORMAL_ORDER: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    /// Exact checks fail only on a genuine error; generic ones can also fail
    /// because the sampled points were not generic enough.
    pub exact: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryCheck {
    pub name: &'static str,
    pub invariants: Value,
    pub checks: Vec<CheckResult>,
    pub witnesses: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    /// `entry/check` for every failed exact check.
    pub failed: Vec<String>,
    /// `entry/check` for every failed generic check.
    pub unconfirmed: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckSuite {
    pub seed: u64,
    pub trials: usize,
    pub bound: u64,
    pub entries: Vec<EntryCheck>,
    pub summary: Summary,
    pub ok: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Passed,
    /// An exact check failed.
    Failed,
    /// Only generic checks failed: the sampling could not confirm the result.
    Unconfirmed,
}

impl CheckSuite {
    pub fn outcome(&self) -> CheckOutcome {
        if !self.summary.failed.is_empty() {
            CheckOutcome::Failed
        } else if !self.summary.unconfirmed.is_empty() {
            CheckOutcome::Unconfirmed
        } else {
            CheckOutcome::Passed
        }
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn exact(&mut self, name: &'static str, passed: bool) {
        self.0.push(CheckResult { name, exact: true, passed });
    }

    fn generic(&mut self, name: &'static str, passed: bool) {
        self.0.push(CheckResult { name, exact: false, passed });
    }
}

fn strs(v: &[Rational]) -> Vec<RationalStr> {
    v.iter().cloned().map(RationalStr).collect()
}

/// Invertible integer recombination coefficients in [−5, 5].
fn recombination(sampling: &Sampling, k: u64) -> [Rational; 4] {
    let mut rng = SplitMix64::stream(sampling.seed ^ MOBIUS_STREAM, k);
    loop {
        let c = [0; 4].map(|_: i32| rng.rational_in(5));
        if !(&c[0] * &c[3] - &c[1] * &c[2]).is_zero() {
            return c;
        }
    }
}

fn type_section(report: &JKReport) -> Value {
    let inv = &report.invariants;
    json!({
        "rank": inv.rank,
        "eps": inv.eps,
        "eta": inv.eta,
        "jordan_shape": inv.jordan.shape(),
        "k_hor": inv.k_hor,
        "k_vert": inv.k_vert,
        "deg_D": inv.deg_d,
        "p": report.p,
        "q": report.q,
        "dim_st_reg": report.dim_st_reg,
        "codim_orbit_reg": report.codim_orbit_reg,
    })
}

fn check_entry(entry: &ZooEntry, sampling: &Sampling, ceiling: u128) -> Result<EntryCheck> {
    let rep = &entry.representation;
    let mut checks = Checks(Vec::new());
    let report = jk_invariants(rep, sampling)?;
    let mut invariants = type_section(&report);
    let mut witnesses = json!({
        "x": strs(&report.x),
        "a": strs(&report.a),
        "jordan": report.invariants.jordan,
        "agreement": report.witness.agreement,
        "escalated": report.witness.escalated,
    });
    checks.generic("agreement", report.witness.agreed);
    if !report.witness.agreed {
        // Nothing derived from an unconfirmed type is reported as checked.
        return Ok(EntryCheck {
            name: entry.name,
            invariants,
            checks: checks.0,
            witnesses,
        });
    }

    let want = &entry.expected;
    checks.exact("identities", report.identities_hold());
    checks.exact("block_sizes", report.invariants.check().is_ok());
    checks.exact(
        "expected_type",
        report.eps() == want.eps.as_slice()
            && report.eta() == want.eta.as_slice()
            && report.invariants.jordan.shape() == want.jordan_shape
            && report.k_hor() == want.k_hor
            && report.k_vert() == want.k_vert
            && report.deg_d() == want.deg_d
            && report.dim_st_reg == want.dim_st_reg
            && report.codim_orbit_reg == want.codim_orbit_reg,
    );

    let semi = match fundamental_semiinvariant(rep, ceiling) {
        Ok(s) => {
            checks.exact("semiinvariant_degree", s.degree == report.deg_d());
            json!({ "degree": s.degree, "display": s.poly.to_string() })
        }
        Err(Error::SymbolicCeiling { .. }) => json!({ "degree": Value::Null, "display": Value::Null }),
        Err(e) => return Err(e),
    };
    invariants["semiinvariant"] = semi;

    if entry.is_coadjoint() {
        checks.exact("coadjoint_symmetry", symmetry_of(&report).ok());
    }

    let pencil = rep.r_pencil(&report.x, &report.a)?;
    let mut moved = true;
    for k in 0..RECOMBINATIONS {
        moved &= recombination_consistent(&pencil, &recombination(sampling, k))?;
    }
    checks.exact("recombination", moved);

    let fs = verify_all(rep, &entry.invariants)?;
    checks.exact("invariants_verified", fs.iter().all(|f| f.verified));
    let ctx = ShiftContext {
        rep,
        report: report.clone(),
        sampling: *sampling,
        ceiling,
    };
    let m = rep.dim_v();
    let mut origins: Vec<Vec<Rational>> = (0..ORIGINS).map(|k| sampling.point(ORIGIN_STREAM, k, m)).collect();
    origins.push(vec![Rational::zero(); m]);
    let mut trdegs = Vec::new();
    let (mut bound_ok, mut equality_ok, mut spans_ok, mut chains_ok) = (true, true, true, true);
    let (mut span_checks, mut skipped) = (0, 0);
    for a in &origins {
        let t = ctx.trdeg_ya(&fs, a)?;
        bound_ok &= t.bound_holds;
        equality_ok &= t.equality_holds != Some(false);
        spans_ok &= t.samples.iter().all(|s| s.spans_equal != Some(false));
        span_checks += t.span_checks();
        skipped += t.skipped;
        trdegs.push(t.trdeg);
        for f in &fs {
            chains_ok &= shift_chain_defect(rep, f, a)?.is_none();
        }
    }
    checks.exact("trdeg_bound", bound_ok);
    checks.generic("trdeg_equality", equality_ok);
    checks.exact("span_identity", spans_ok);
    checks.exact("shift_chains", chains_ok);

    let vorontsov = ctx.vorontsov_check(&fs);
    checks.exact("degree_vs_eta", vorontsov.ok());
    let sums = ctx.degree_sum_bounds(&fs);
    checks.exact("degree_sums", sums.ok());
    let independence = ctx.differentials_independence(&fs, &report.x)?;
    checks.exact("differentials_independence", independence.consistent);

    let formal_origin = if rep.orbit_dim(&report.a)? == rep.dim_v() - report.codim_orbit_reg {
        report.a.clone()
    } else {
        rep.regular_dims(sampling.trials, sampling.seed, sampling.bound)?.witness
    };
    let chains = formal_invariant_truncated(rep, &formal_origin, FORMAL_ORDER, sampling)?;
    let mut formal_ok = true;
    for c in &chains {
        formal_ok &= chain_defect(rep, &formal_origin, &c.omegas)?.is_none();
    }
    checks.exact("formal_chains", formal_ok);
    checks.generic("formal_span_stable", formal_span_stable(rep, &formal_origin, FORMAL_ORDER, sampling)?);

    invariants["invariant_degrees"] = json!(fs.iter().map(|f| f.degree).collect::<Vec<_>>());
    invariants["trdeg_generic"] = json!(&trdegs[..ORIGINS as usize]);
    invariants["trdeg_at_zero"] = json!(trdegs[ORIGINS as usize]);
    invariants["degree_vs_eta"] = serde_json::to_value(&vorontsov)?;
    invariants["degree_sums"] = serde_json::to_value(&sums)?;
    invariants["formal_chains"] = json!(chains.len());
    invariants["obstruction_orders"] = json!(chains.iter().map(|c| c.obstruction_order).collect::<Vec<_>>());

    witnesses["shift_origins"] = json!(origins.iter().map(|a| strs(a)).collect::<Vec<_>>());
    witnesses["span_checks"] = json!(span_checks);
    witnesses["span_samples_skipped"] = json!(skipped);
    witnesses["formal_origin"] = json!(strs(&formal_origin));

    Ok(EntryCheck {
        name: entry.name,
        invariants,
        checks: checks.0,
        witnesses,
    })
}

pub fn run_check(entries: &[ZooEntry], sampling: &Sampling, ceiling: u128) -> Result<CheckSuite> {
    let checked: Vec<EntryCheck> = entries
        .iter()
        .map(|e| check_entry(e, sampling, ceiling))
        .collect::<Result<_>>()?;
    let mut summary = Summary {
        checks: 0,
        passed: 0,
        failed: Vec::new(),
        unconfirmed: Vec::new(),
    };
    for e in &checked {
        for c in &e.checks {
            summary.checks += 1;
            if c.passed {
                summary.passed += 1;
            } else if c.exact {
                summary.failed.push(format!("{}/{}", e.name, c.name));
            } else {
                summary.unconfirmed.push(format!("{}/{}", e.name, c.name));
            }
        }
    }
    let ok = summary.failed.is_empty() && summary.unconfirmed.is_empty();
    Ok(CheckSuite {
        seed: sampling.seed,
        trials: sampling.trials,
        bound: sampling.bound,
        entries: checked,
        summary,
        ok,
    })
}
