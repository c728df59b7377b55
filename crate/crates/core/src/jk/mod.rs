//! Jordan–Kronecker invariants of a representation: the algebraic type of the
//! pencil R_x + λR_a at a generic pair (x, a), the fundamental semi-invariant
//! and the data attached to the singular set.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{multi_gcd, uni_gcd_all, MultiPoly, Rational, RationalStr, UniPoly};
use crate::liealg::{LieAlgebra, RegularDims, Representation};
use crate::linalg::determinant;
use crate::pencil::{l_hor, l_vert, pencil_invariants, pencil_rank, PencilInvariants};
use crate::rng::SplitMix64;

/// Default limit on the number of r×r minors the symbolic path enumerates.
pub const DEFAULT_CEILING: u128 = 20_000;

const PAIR_STREAM: u64 = 0x4A4B_5041_4952_5331;

/// Sampling parameters shared by every randomized computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sampling {
    pub seed: u64,
    pub trials: usize,
    pub bound: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            seed: 1,
            trials: 8,
            bound: 1000,
        }
    }
}

impl Sampling {
    pub fn new(seed: u64, trials: usize, bound: u64) -> Self {
        Sampling { seed, trials, bound }
    }

    /// The escalated configuration: four times the trials, squared bound.
    pub fn escalated(&self) -> Self {
        Sampling {
            seed: self.seed,
            trials: self.trials * 4,
            bound: self.bound.saturating_mul(self.bound),
        }
    }

    /// The k-th sampled point of dimension `dim` in the stream family `tag`.
    pub fn point(&self, tag: u64, k: u64, dim: usize) -> Vec<Rational> {
        SplitMix64::stream(self.seed ^ tag, k).vector(dim, self.bound)
    }
}

/// The pair (x, a) whose pencil is reported, plus the sampling provenance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub x: Vec<RationalStr>,
    pub a: Vec<RationalStr>,
    pub seed: u64,
    pub trials: usize,
    pub bound: u64,
    /// Trials whose pencil had the reported type.
    pub agreement: usize,
    /// Whether every trial agreed (after at most one escalation).
    pub agreed: bool,
    pub escalated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identities {
    /// k_vert + k_hor = dim V + dim St_reg − deg D.
    pub eq5: bool,
    /// p = dim St_reg.
    pub p_is_dim_st: bool,
    /// q = codim O_reg.
    pub q_is_codim: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JKReport {
    pub invariants: PencilInvariants,
    pub dim_g: usize,
    pub dim_v: usize,
    pub p: usize,
    pub q: usize,
    pub dim_st_reg: usize,
    pub codim_orbit_reg: usize,
    pub identities: Identities,
    pub witness: Witness,
    pub x: Vec<Rational>,
    pub a: Vec<Rational>,
}

impl JKReport {
    pub fn k_hor(&self) -> usize {
        self.invariants.k_hor
    }

    pub fn k_vert(&self) -> usize {
        self.invariants.k_vert
    }

    pub fn deg_d(&self) -> usize {
        self.invariants.deg_d
    }

    pub fn eps(&self) -> &[usize] {
        &self.invariants.eps
    }

    pub fn eta(&self) -> &[usize] {
        &self.invariants.eta
    }

    /// The eigenvalue-free type (ε, η, Jordan shape).
    pub fn algebraic_type(&self) -> (Vec<usize>, Vec<usize>, Vec<Vec<usize>>) {
        self.invariants.algebraic_type()
    }

    pub fn identities_hold(&self) -> bool {
        let i = &self.identities;
        i.eq5 && i.p_is_dim_st && i.q_is_codim
    }
}

impl Serialize for JKReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let inv = &self.invariants;
        let mut st = s.serialize_struct("JKReport", 14)?;
        st.serialize_field("rank", &inv.rank)?;
        st.serialize_field("eps", &inv.eps)?;
        st.serialize_field("eta", &inv.eta)?;
        st.serialize_field("jordan", &inv.jordan)?;
        st.serialize_field("k_hor", &inv.k_hor)?;
        st.serialize_field("k_vert", &inv.k_vert)?;
        st.serialize_field("deg_D", &inv.deg_d)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("dim_g", &self.dim_g)?;
        st.serialize_field("dim_V", &self.dim_v)?;
        st.serialize_field("dim_st_reg", &self.dim_st_reg)?;
        st.serialize_field("codim_orbit_reg", &self.codim_orbit_reg)?;
        st.serialize_field("identities", &self.identities)?;
        st.serialize_field("witness", &self.witness)?;
        st.end()
    }
}

struct Trial {
    inv: PencilInvariants,
    x: Vec<Rational>,
    a: Vec<Rational>,
}

fn run_trials(rep: &Representation, s: &Sampling, start: u64) -> Result<Vec<Trial>> {
    let m = rep.dim_v();
    (0..s.trials as u64)
        .map(|t| {
            let mut rng = SplitMix64::stream(s.seed ^ PAIR_STREAM, start + t);
            let x = rng.vector(m, s.bound);
            let a = rng.vector(m, s.bound);
            let inv = pencil_invariants(&rep.r_pencil(&x, &a)?)?;
            Ok(Trial { inv, x, a })
        })
        .collect()
}

type TypeKey = (Vec<usize>, Vec<usize>, Vec<Vec<usize>>);

/// Among the trials of maximal pencil rank, the most frequent algebraic type
/// (ties go to the smaller deg D, then the smaller type). Returns the index
/// of its first trial and its count.
fn select(trials: &[Trial]) -> (usize, usize) {
    let r = trials.iter().map(|t| t.inv.rank).max().unwrap_or(0);
    let mut groups: BTreeMap<(usize, TypeKey), (usize, usize)> = BTreeMap::new();
    for (i, t) in trials.iter().enumerate().filter(|(_, t)| t.inv.rank == r) {
        let g = groups
            .entry((t.inv.deg_d, t.inv.algebraic_type()))
            .or_insert((i, 0));
        g.1 += 1;
    }
    let best = groups
        .values()
        .copied()
        .reduce(|best, g| if g.1 > best.1 { g } else { best })
        .expect("at least one trial");
    best
}

/// Jordan–Kronecker invariant of `rep` from `trials` random pairs.
///
/// Pairs of less than maximal pencil rank are discarded and the most common
/// type among the rest is reported. If any trial disagrees, the sampling is
/// repeated once with four times the trials and the squared bound; if that
/// still disagrees the report carries `agreed = false`.
pub fn jk_invariants(rep: &Representation, sampling: &Sampling) -> Result<JKReport> {
    if sampling.trials < 3 {
        return Err(Error::InvalidArgument("at least 3 trials are required".into()));
    }
    let mut used = *sampling;
    let mut trials = run_trials(rep, &used, 0)?;
    let (mut idx, mut agreement) = select(&trials);
    let mut escalated = false;
    if agreement < used.trials {
        escalated = true;
        used = sampling.escalated();
        trials = run_trials(rep, &used, sampling.trials as u64)?;
        (idx, agreement) = select(&trials);
    }
    let chosen = trials.swap_remove(idx);
    let reg = rep.regular_dims(sampling.trials, sampling.seed, sampling.bound)?;
    Ok(assemble_report(rep, chosen, &reg, used, agreement, escalated))
}

fn assemble_report(
    rep: &Representation,
    chosen: Trial,
    reg: &RegularDims,
    used: Sampling,
    agreement: usize,
    escalated: bool,
) -> JKReport {
    let inv = chosen.inv;
    let (n, m) = (rep.dim_g(), rep.dim_v());
    let p = inv.eps.len();
    let q = inv.eta.len();
    // The pencil rank bounds every sampled orbit dimension, so a larger one
    // means the pairs missed the generic locus.
    let rank_consistent = reg.orbit_dim == inv.rank;
    let identities = Identities {
        eq5: inv.k_vert + inv.k_hor + inv.deg_d == m + reg.dim_st,
        p_is_dim_st: p == reg.dim_st,
        q_is_codim: q == reg.codim_orbit,
    };
    let all_ok = identities.eq5 && identities.p_is_dim_st && identities.q_is_codim;
    JKReport {
        dim_g: n,
        dim_v: m,
        p,
        q,
        dim_st_reg: reg.dim_st,
        codim_orbit_reg: reg.codim_orbit,
        identities,
        witness: Witness {
            x: chosen.x.iter().cloned().map(RationalStr).collect(),
            a: chosen.a.iter().cloned().map(RationalStr).collect(),
            seed: used.seed,
            trials: used.trials,
            bound: used.bound,
            agreement,
            agreed: agreement == used.trials && rank_consistent && all_ok,
            escalated,
        },
        x: chosen.x,
        a: chosen.a,
        invariants: inv,
    }
}

/// Invariants of the single pencil R_x + λR_a, wrapped as a report.
pub fn jk_invariants_at(rep: &Representation, x: &[Rational], a: &[Rational], sampling: &Sampling) -> Result<JKReport> {
    let inv = pencil_invariants(&rep.r_pencil(x, a)?)?;
    let reg = rep.regular_dims(sampling.trials.max(1), sampling.seed, sampling.bound)?;
    let trial = Trial {
        inv,
        x: x.to_vec(),
        a: a.to_vec(),
    };
    Ok(assemble_report(rep, trial, &reg, *sampling, 1, false))
}

/// p_ρ: the normalized gcd of the nonzero r×r minors of the symbolic R_x.
#[derive(Clone, Debug, PartialEq)]
pub struct SemiInvariant {
    pub poly: MultiPoly,
    pub degree: usize,
    /// Size r of the minors.
    pub minor_size: usize,
    /// Number of nonzero minors.
    pub nonzero_minors: usize,
}

impl Serialize for SemiInvariant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SemiInvariant", 5)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("poly", &self.poly)?;
        st.serialize_field("display", &self.poly.to_string())?;
        st.serialize_field("minor_size", &self.minor_size)?;
        st.serialize_field("nonzero_minors", &self.nonzero_minors)?;
        st.end()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Symbolic rank of R_x (rank over the field of rational functions in x).
pub fn symbolic_rank(rep: &Representation) -> usize {
    crate::linalg::bareiss_rank(&rep.r_operator_symbolic())
}

/// The nonzero r×r minors of the symbolic R_x, r its symbolic rank.
pub fn symbolic_minors(rep: &Representation, ceiling: u128) -> Result<(usize, Vec<MultiPoly>)> {
    let (m, n) = (rep.dim_v(), rep.dim_g());
    let r = symbolic_rank(rep);
    let count = binomial(m, r) * binomial(n, r);
    if count > ceiling {
        return Err(Error::SymbolicCeiling { minors: count, ceiling });
    }
    let sym = rep.r_operator_symbolic();
    let mut minors = Vec::new();
    for rows in combinations(m, r) {
        for cols in combinations(n, r) {
            let d = determinant(&sym.submatrix(&rows, &cols));
            if !d.is_zero() {
                minors.push(d.with_nvars(m));
            }
        }
    }
    if minors.is_empty() {
        // r = 0: the single empty minor equals 1.
        minors.push(MultiPoly::one(m));
    }
    Ok((r, minors))
}

pub fn fundamental_semiinvariant(rep: &Representation, ceiling: u128) -> Result<SemiInvariant> {
    let (r, minors) = symbolic_minors(rep, ceiling)?;
    let g = multi_gcd(&minors)?.normalized();
    Ok(SemiInvariant {
        degree: g.total_degree().unwrap_or(0) as usize,
        poly: g,
        minor_size: r,
        nonzero_minors: minors.len(),
    })
}

/// deg p_ρ read off the generic pencil as its total Jordan degree.
pub fn semiinvariant_degree_via_pencil(rep: &Representation, sampling: &Sampling) -> Result<usize> {
    Ok(jk_invariants(rep, sampling)?.deg_d())
}

/// The cofactors h_i = p_i / p_ρ of the nonzero r×r minors.
pub fn cofactors(rep: &Representation, ceiling: u128) -> Result<Vec<MultiPoly>> {
    let (_, minors) = symbolic_minors(rep, ceiling)?;
    let g = multi_gcd(&minors)?;
    minors
        .iter()
        .map(|p| {
            p.div_exact(&g)
                .ok_or_else(|| Error::Internal("gcd does not divide a minor".into()))
        })
        .collect()
}

/// Whether `a` lies in Sing₁ = {h_i = 0 for all i}.
pub fn sing1_membership(rep: &Representation, a: &[Rational], ceiling: u128) -> Result<bool> {
    check_len(rep, a)?;
    Ok(cofactors(rep, ceiling)?.iter().all(|h| h.eval(a).is_zero()))
}

/// Whether the projective line through x and a meets Sing₁: the cofactors
/// restricted to x + λa share a root, or all vanish at a (the point at ∞).
pub fn line_meets_sing1(rep: &Representation, x: &[Rational], a: &[Rational], ceiling: u128) -> Result<bool> {
    check_len(rep, x)?;
    check_len(rep, a)?;
    let hs = cofactors(rep, ceiling)?;
    if hs.iter().all(|h| h.eval(a).is_zero()) {
        return Ok(true);
    }
    let restricted: Vec<UniPoly> = hs.iter().map(|h| restrict_to_line(h, x, a)).collect();
    let g = uni_gcd_all(&restricted);
    Ok(g.is_zero() || g.degree().is_some_and(|d| d > 0))
}

/// h(x + λa) as a polynomial in λ.
pub fn restrict_to_line(h: &MultiPoly, x: &[Rational], a: &[Rational]) -> UniPoly {
    let images: Vec<MultiPoly> = x
        .iter()
        .zip(a)
        .map(|(xi, ai)| &MultiPoly::linear_form(&[ai.clone()]).with_nvars(1) + &MultiPoly::constant(1, xi.clone()))
        .collect();
    let p = h.compose(&images);
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (mono, c) in p.terms() {
        coeffs[mono.exp(0) as usize] = c.clone();
    }
    UniPoly::new(coeffs)
}

fn check_len(rep: &Representation, v: &[Rational]) -> Result<()> {
    if v.len() != rep.dim_v() {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, V has dimension {}",
            v.len(),
            rep.dim_v()
        )));
    }
    Ok(())
}

/// Outcome of the skew-symmetry consequences for a coadjoint representation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryCheck {
    pub eps_equals_eta: bool,
    pub jordan_paired: bool,
    /// 2·k_vert = dim g + ind g − deg D.
    pub index_identity: bool,
    pub dim_g: usize,
    pub index: usize,
    pub k_vert: usize,
    pub deg_d: usize,
}

impl SymmetryCheck {
    pub fn ok(&self) -> bool {
        self.eps_equals_eta && self.jordan_paired && self.index_identity
    }
}

/// Every block size occurs an even number of times for every factor.
pub fn jordan_blocks_paired(inv: &PencilInvariants) -> bool {
    inv.jordan.entries.iter().all(|e| {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &s in &e.sizes {
            *counts.entry(s).or_default() += 1;
        }
        counts.values().all(|c| c % 2 == 0)
    })
}

pub fn coadjoint_symmetry_check(algebra: &LieAlgebra, sampling: &Sampling) -> Result<(JKReport, SymmetryCheck)> {
    let rep = Representation::coadjoint(algebra);
    let report = jk_invariants(&rep, sampling)?;
    let check = symmetry_of(&report);
    Ok((report, check))
}

pub fn symmetry_of(report: &JKReport) -> SymmetryCheck {
    let inv = &report.invariants;
    SymmetryCheck {
        eps_equals_eta: inv.eps == inv.eta,
        jordan_paired: jordan_blocks_paired(inv),
        index_identity: 2 * inv.k_vert + inv.deg_d == report.dim_g + report.dim_st_reg,
        dim_g: report.dim_g,
        index: report.dim_st_reg,
        k_vert: inv.k_vert,
        deg_d: inv.deg_d,
    }
}

/// L_hor(x, a) ⊂ g and L_vert(x, a) ⊂ V* of the pencil R_x + λR_a.
#[derive(Clone, Debug, PartialEq)]
pub struct LSpaces {
    pub l_hor: Vec<Vec<Rational>>,
    pub l_vert: Vec<Vec<Rational>>,
}

/// Rejects pairs whose line lies in the singular set.
pub fn l_spaces(rep: &Representation, x: &[Rational], a: &[Rational], sampling: &Sampling) -> Result<LSpaces> {
    let pencil = rep.r_pencil(x, a)?;
    let rank = pencil_rank(&pencil);
    let regular = rep.regular_dims(sampling.trials.max(1), sampling.seed, sampling.bound)?.orbit_dim;
    if rank < regular {
        return Err(Error::DegenerateSpan { rank, regular });
    }
    Ok(LSpaces {
        l_hor: l_hor(&pencil),
        l_vert: l_vert(&pencil),
    })
}

#[cfg(test)]
mod tests;
