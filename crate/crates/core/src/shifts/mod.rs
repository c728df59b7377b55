//! Shifts of argument: invariant polynomials, their expansions f(a + λx),
//! the subalgebra Y_a they generate, and degree bounds tying invariants to
//! the Jordan–Kronecker indices.

mod formal;

pub use formal::{
    chain_defect, formal_invariant_truncated, formal_invariant_truncated_ordered, formal_span_stable,
    shift_chain_defect, FormalInvariantChain, SolverOrder,
};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{MultiPoly, Rational, RationalStr};
use crate::jk::{jk_invariants, sing1_membership, JKReport, Sampling, DEFAULT_CEILING};
use crate::liealg::Representation;
use crate::linalg::{rank, same_span, Matrix};
use crate::pencil::l_vert;
use crate::rng::SplitMix64;

const SAMPLE_STREAM: u64 = 0x5348_4946_5453_5831;
const SELF_CHECK_SEED: u64 = 0x4558_5041_4E44_3331;

/// A polynomial on V, tagged with whether it passed `verify_invariant`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantPolynomial {
    pub poly: MultiPoly,
    pub degree: u32,
    pub verified: bool,
}

/// The first generator eⱼ whose derivative (R_x* df)ⱼ does not vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantResidual {
    pub generator: usize,
    pub residual: MultiPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InvariantCheck {
    Verified(InvariantPolynomial),
    Residual(InvariantResidual),
}

impl InvariantCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self, InvariantCheck::Verified(_))
    }

    pub fn into_result(self) -> Result<InvariantPolynomial> {
        match self {
            InvariantCheck::Verified(f) => Ok(f),
            InvariantCheck::Residual(r) => Err(Error::NotInvariant {
                generator: r.generator,
                residual: r.residual.to_string(),
            }),
        }
    }
}

/// Symbolic R_x* ω: component j is Σᵢ (ρ(eⱼ)x)ᵢ ωᵢ.
pub(crate) fn r_star_symbolic(rep: &Representation, omega: &[MultiPoly]) -> Vec<MultiPoly> {
    let m = rep.dim_v();
    let rx = rep.r_operator_symbolic();
    (0..rep.dim_g())
        .map(|j| {
            let mut acc = MultiPoly::zero(m);
            for (i, w) in omega.iter().enumerate() {
                if !w.is_zero() {
                    acc = &acc + &(rx.get(i, j) * w);
                }
            }
            acc
        })
        .collect()
}

/// R_a* ω for a fixed point a: component j is Σᵢ (ρ(eⱼ)a)ᵢ ωᵢ.
pub(crate) fn r_star_at(rep: &Representation, a: &[Rational], omega: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    let m = rep.dim_v();
    let ra = rep.r_operator(a)?;
    Ok((0..rep.dim_g())
        .map(|j| {
            let mut acc = MultiPoly::zero(m);
            for (i, w) in omega.iter().enumerate() {
                let c = ra.get(i, j);
                if !c.is_zero() && !w.is_zero() {
                    acc = &acc + &w.scale(c);
                }
            }
            acc
        })
        .collect())
}

fn lift(rep: &Representation, f: &MultiPoly) -> Result<MultiPoly> {
    if f.nvars() > rep.dim_v() {
        return Err(Error::Dimension(format!(
            "polynomial uses {} variables, V has dimension {}",
            f.nvars(),
            rep.dim_v()
        )));
    }
    Ok(f.clone().with_nvars(rep.dim_v()))
}

/// Checks R_x*(df(x)) = 0 as a polynomial identity.
pub fn verify_invariant(rep: &Representation, f: &MultiPoly) -> Result<InvariantCheck> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("the zero polynomial is not a valid invariant".into()));
    }
    let f = lift(rep, f)?;
    let residuals = r_star_symbolic(rep, &f.gradient());
    if let Some((generator, residual)) = residuals.into_iter().enumerate().find(|(_, r)| !r.is_zero()) {
        return Ok(InvariantCheck::Residual(InvariantResidual { generator, residual }));
    }
    Ok(InvariantCheck::Verified(InvariantPolynomial {
        degree: f.total_degree().unwrap_or(0),
        poly: f,
        verified: true,
    }))
}

/// Verifies every polynomial, failing on the first non-invariant one.
pub fn verify_all(rep: &Representation, polys: &[MultiPoly]) -> Result<Vec<InvariantPolynomial>> {
    polys.iter().map(|f| verify_invariant(rep, f)?.into_result()).collect()
}

/// The expansions f_α(a + λx) = Σⱼ λʲ g_{α,j}(x) of a family of invariants.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShiftFamily {
    pub origin: Vec<RationalStr>,
    /// `components[α][j]` = g_{α,j}, homogeneous of degree j.
    pub components: Vec<Vec<MultiPoly>>,
}

impl ShiftFamily {
    /// All g_{α,j} with j ≥ 1, the generators of Y_a that are not constants.
    pub fn generators(&self) -> impl Iterator<Item = &MultiPoly> {
        self.components.iter().flat_map(|c| c.iter().skip(1))
    }
}

/// Homogeneous components of f(a + λx) in λ, g₀ = f(a) through g_d = f.
pub fn shift_expand(f: &InvariantPolynomial, a: &[Rational]) -> Result<Vec<MultiPoly>> {
    if !f.verified {
        return Err(Error::InvalidArgument("shift_expand needs a verified invariant".into()));
    }
    let n = f.poly.nvars();
    if a.len() != n {
        return Err(Error::Dimension(format!("shift origin has {} coordinates, expected {n}", a.len())));
    }
    let translated = f.poly.translate(a);
    let comps: Vec<MultiPoly> = (0..=f.degree).map(|j| translated.homogeneous_component(j)).collect();

    for t in 0..3 {
        let mut rng = SplitMix64::stream(SELF_CHECK_SEED, t);
        let lambda = rng.rational_in(97);
        let x = rng.vector(n, 97);
        let point: Vec<Rational> = a.iter().zip(&x).map(|(ai, xi)| ai + &lambda * xi).collect();
        let mut series = Rational::zero();
        let mut power = Rational::from_integer(1.into());
        for g in &comps {
            series += &power * g.eval(&x);
            power *= &lambda;
        }
        if series != f.poly.eval(&point) {
            return Err(Error::Internal("shift expansion does not reproduce f(a + λx)".into()));
        }
    }
    Ok(comps)
}

pub fn shift_family(invariants: &[InvariantPolynomial], a: &[Rational]) -> Result<ShiftFamily> {
    Ok(ShiftFamily {
        origin: a.iter().cloned().map(RationalStr).collect(),
        components: invariants.iter().map(|f| shift_expand(f, a)).collect::<Result<_>>()?,
    })
}

/// Rows dg(x) for each polynomial g.
pub fn differentials_at<'a>(polys: impl IntoIterator<Item = &'a MultiPoly>, x: &[Rational]) -> Vec<Vec<Rational>> {
    polys
        .into_iter()
        .map(|g| g.gradient().iter().map(|d| d.eval(x)).collect())
        .collect()
}

fn span_rank(rows: &[Vec<Rational>], dim: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows(rows.to_vec(), Some(dim)).expect("uniform differential length"))
}

/// Shared data for the shift computations on one representation: the
/// Jordan–Kronecker report (for k_vert, η and deg p_ρ) and the sampling.
#[derive(Clone, Debug)]
pub struct ShiftContext<'r> {
    pub rep: &'r Representation,
    pub report: JKReport,
    pub sampling: Sampling,
    pub ceiling: u128,
}

impl<'r> ShiftContext<'r> {
    pub fn new(rep: &'r Representation, sampling: &Sampling) -> Result<Self> {
        Ok(ShiftContext {
            rep,
            report: jk_invariants(rep, sampling)?,
            sampling: *sampling,
            ceiling: DEFAULT_CEILING,
        })
    }

    pub fn with_ceiling(mut self, ceiling: u128) -> Self {
        self.ceiling = ceiling;
        self
    }

    fn regular_orbit_dim(&self) -> usize {
        self.rep.dim_v() - self.report.codim_orbit_reg
    }

    fn sample(&self, k: usize) -> Vec<Rational> {
        self.sampling.point(SAMPLE_STREAM, k as u64, self.rep.dim_v())
    }

    /// Generic Jacobian rank of a family of polynomials: the maximum over
    /// the sampled points.
    pub fn generic_rank(&self, polys: &[&MultiPoly]) -> usize {
        let m = self.rep.dim_v();
        (0..self.sampling.trials)
            .map(|k| span_rank(&differentials_at(polys.iter().copied(), &self.sample(k)), m))
            .max()
            .unwrap_or(0)
    }

    fn sing1(&self, point: &[Rational]) -> Option<bool> {
        sing1_membership(self.rep, point, self.ceiling).ok()
    }

    /// trdeg Y_a as the generic rank of the differentials of the shift
    /// components, compared against k_vert, with the span identity
    /// span{dg(x)} = L_vert(x, a) checked at every sample where it applies.
    pub fn trdeg_ya(&self, invariants: &[InvariantPolynomial], a: &[Rational]) -> Result<TrdegReport> {
        let m = self.rep.dim_v();
        let family = shift_family(invariants, a)?;
        let gens: Vec<&MultiPoly> = family.generators().collect();
        let fs: Vec<&MultiPoly> = invariants.iter().map(|f| &f.poly).collect();
        let q = self.report.codim_orbit_reg;
        let k_vert = self.report.k_vert();

        let mut warnings = Vec::new();
        let complete_set = invariants.len() == q && self.generic_rank(&fs) == q;
        if !complete_set {
            warnings.push(format!(
                "{} invariants supplied with generic rank {}, codim O_reg = {q}: equality claims not checked",
                invariants.len(),
                self.generic_rank(&fs)
            ));
        }

        let regular = self.regular_orbit_dim();
        let mut trdeg = 0;
        let mut samples = Vec::with_capacity(self.sampling.trials);
        let mut skipped = 0;
        for k in 0..self.sampling.trials {
            let x = self.sample(k);
            let dg = differentials_at(gens.iter().copied(), &x);
            let r = span_rank(&dg, m);
            trdeg = trdeg.max(r);
            let hypothesis = complete_set
                && self.rep.orbit_dim(&x)? == regular
                && span_rank(&differentials_at(fs.iter().copied(), &x), m) == q;
            let spans_equal = if hypothesis {
                let lv = l_vert(&self.rep.r_pencil(&x, a)?);
                Some(same_span(&dg, &lv, m))
            } else {
                skipped += 1;
                None
            };
            samples.push(SpanSample {
                x: x.into_iter().map(RationalStr).collect(),
                rank: r,
                hypothesis,
                spans_equal,
            });
        }

        let a_in_sing1 = self.sing1(a);
        if a_in_sing1.is_none() {
            warnings.push("Sing₁ membership of a unavailable (symbolic ceiling)".into());
        }
        let equality_checked = complete_set && a_in_sing1 == Some(false);
        Ok(TrdegReport {
            a: a.iter().cloned().map(RationalStr).collect(),
            trdeg,
            k_vert,
            bound_holds: trdeg <= k_vert,
            a_in_sing1,
            equality_checked,
            equality_holds: equality_checked.then_some(trdeg == k_vert),
            complete_set,
            samples,
            skipped,
            warnings,
        })
    }

    /// Sorted degrees against sorted minimal row indices: deg f_α ≥ η_α + 1.
    pub fn vorontsov_check(&self, invariants: &[InvariantPolynomial]) -> VorontsovReport {
        let mut degrees: Vec<usize> = invariants.iter().map(|f| f.degree as usize).collect();
        degrees.sort_unstable();
        let mut eta = self.report.eta().to_vec();
        eta.sort_unstable();
        let fs: Vec<&MultiPoly> = invariants.iter().map(|f| &f.poly).collect();
        let independent = self.generic_rank(&fs) == invariants.len();
        let applicable = independent && degrees.len() <= eta.len();
        let verdicts = if applicable {
            degrees
                .iter()
                .zip(&eta)
                .map(|(&d, &e)| DegreeVerdict {
                    degree: d,
                    eta: e,
                    holds: d > e,
                })
                .collect()
        } else {
            Vec::new()
        };
        let sum: usize = degrees.iter().sum();
        let sum_equals_k_vert = applicable && degrees.len() == eta.len() && sum == self.report.k_vert();
        let equality_branch =
            sum_equals_k_vert.then(|| degrees.iter().zip(&eta).all(|(&d, &e)| e + 1 == d));
        VorontsovReport {
            degrees,
            eta,
            independent,
            applicable,
            verdicts,
            sum_equals_k_vert,
            equality_branch,
        }
    }

    /// Σ deg f_α ≥ k_vert, and the two sharper bounds when St_reg = {0}.
    pub fn degree_sum_bounds(&self, invariants: &[InvariantPolynomial]) -> DegreeSumReport {
        let sum: usize = invariants.iter().map(|f| f.degree as usize).sum();
        let q = self.report.codim_orbit_reg;
        let fs: Vec<&MultiPoly> = invariants.iter().map(|f| &f.poly).collect();
        let applicable = invariants.len() == q && self.generic_rank(&fs) == q;
        let deg_p = self.report.deg_d();
        let dim_v = self.rep.dim_v();
        let st_reg_trivial = self.report.dim_st_reg == 0;
        let eq12 = st_reg_trivial.then(|| Bound::new(sum, dim_v.saturating_sub(deg_p)));
        let eq13 = (st_reg_trivial && deg_p == 0).then(|| Bound::new(sum, dim_v));
        DegreeSumReport {
            sum_deg: sum,
            count: invariants.len(),
            q,
            applicable,
            k_vert: self.report.k_vert(),
            deg_p,
            st_reg_trivial,
            eq11: Bound::new(sum, self.report.k_vert()),
            eq12,
            eq13,
        }
    }

    /// Rank of df_1(x), …, df_q(x), with the hypothesis under which
    /// independence is guaranteed (Σ deg f_α = k_vert and x ∉ Sing₁).
    pub fn differentials_independence(
        &self,
        invariants: &[InvariantPolynomial],
        x: &[Rational],
    ) -> Result<IndependenceReport> {
        if x.len() != self.rep.dim_v() {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, V has dimension {}",
                x.len(),
                self.rep.dim_v()
            )));
        }
        let fs: Vec<&MultiPoly> = invariants.iter().map(|f| &f.poly).collect();
        let rank = span_rank(&differentials_at(fs.iter().copied(), x), self.rep.dim_v());
        let sum: usize = invariants.iter().map(|f| f.degree as usize).sum();
        let degree_sum_equality = invariants.len() == self.report.codim_orbit_reg
            && self.generic_rank(&fs) == invariants.len()
            && sum == self.report.k_vert();
        let x_in_sing1 = self.sing1(x);
        let independent = rank == invariants.len();
        Ok(IndependenceReport {
            rank,
            count: invariants.len(),
            independent,
            degree_sum_equality,
            x_in_sing1,
            consistent: !(degree_sum_equality && x_in_sing1 == Some(false) && !independent),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpanSample {
    pub x: Vec<RationalStr>,
    /// dim span{dg(x) : g a shift component}.
    pub rank: usize,
    /// x regular and the invariant differentials span Ker R_x*.
    pub hypothesis: bool,
    /// span{dg(x)} = L_vert(x, a); absent when the hypothesis fails.
    pub spans_equal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrdegReport {
    pub a: Vec<RationalStr>,
    pub trdeg: usize,
    pub k_vert: usize,
    /// trdeg Y_a ≤ k_vert.
    pub bound_holds: bool,
    /// None when the symbolic Sing₁ test exceeded its ceiling.
    pub a_in_sing1: Option<bool>,
    pub equality_checked: bool,
    pub equality_holds: Option<bool>,
    /// The invariants are q = codim O_reg algebraically independent ones.
    pub complete_set: bool,
    pub samples: Vec<SpanSample>,
    /// Samples at which the span identity does not apply.
    pub skipped: usize,
    pub warnings: Vec<String>,
}

impl TrdegReport {
    pub fn ok(&self) -> bool {
        self.bound_holds
            && self.equality_holds != Some(false)
            && self.samples.iter().all(|s| s.spans_equal != Some(false))
    }

    /// Number of samples at which the span identity was checked.
    pub fn span_checks(&self) -> usize {
        self.samples.iter().filter(|s| s.spans_equal.is_some()).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeVerdict {
    pub degree: usize,
    pub eta: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VorontsovReport {
    pub degrees: Vec<usize>,
    pub eta: Vec<usize>,
    pub independent: bool,
    /// Independent invariants, no more of them than minimal row indices.
    pub applicable: bool,
    pub verdicts: Vec<DegreeVerdict>,
    pub sum_equals_k_vert: bool,
    /// When Σ deg f_α = k_vert: whether η_α = deg f_α − 1 for every α.
    pub equality_branch: Option<bool>,
}

impl VorontsovReport {
    pub fn ok(&self) -> bool {
        self.applicable && self.verdicts.iter().all(|v| v.holds) && self.equality_branch != Some(false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

impl Bound {
    fn new(lhs: usize, rhs: usize) -> Self {
        Bound { lhs, rhs, holds: lhs >= rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSumReport {
    pub sum_deg: usize,
    pub count: usize,
    pub q: usize,
    pub applicable: bool,
    pub k_vert: usize,
    pub deg_p: usize,
    pub st_reg_trivial: bool,
    /// Σ deg f_α ≥ k_vert.
    pub eq11: Bound,
    /// Σ deg f_α ≥ dim V − deg p_ρ, when St_reg = {0}.
    pub eq12: Option<Bound>,
    /// Σ deg f_α ≥ dim V, when additionally deg p_ρ = 0.
    pub eq13: Option<Bound>,
}

impl DegreeSumReport {
    pub fn ok(&self) -> bool {
        !self.applicable
            || (self.eq11.holds && self.eq12.is_none_or(|b| b.holds) && self.eq13.is_none_or(|b| b.holds))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub rank: usize,
    pub count: usize,
    pub independent: bool,
    pub degree_sum_equality: bool,
    pub x_in_sing1: Option<bool>,
    /// False only if the hypothesis holds and the differentials are dependent.
    pub consistent: bool,
}

pub fn trdeg_ya(
    rep: &Representation,
    invariants: &[InvariantPolynomial],
    a: &[Rational],
    sampling: &Sampling,
) -> Result<TrdegReport> {
    ShiftContext::new(rep, sampling)?.trdeg_ya(invariants, a)
}

pub fn vorontsov_check(
    rep: &Representation,
    invariants: &[InvariantPolynomial],
    sampling: &Sampling,
) -> Result<VorontsovReport> {
    Ok(ShiftContext::new(rep, sampling)?.vorontsov_check(invariants))
}

pub fn degree_sum_bounds(
    rep: &Representation,
    invariants: &[InvariantPolynomial],
    sampling: &Sampling,
) -> Result<DegreeSumReport> {
    Ok(ShiftContext::new(rep, sampling)?.degree_sum_bounds(invariants))
}

pub fn differentials_independence(
    rep: &Representation,
    invariants: &[InvariantPolynomial],
    x: &[Rational],
    sampling: &Sampling,
) -> Result<IndependenceReport> {
    ShiftContext::new(rep, sampling)?.differentials_independence(invariants, x)
}

/// Wire form of a list of invariants: `{"polynomials": [poly, …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantsFile {
    pub polynomials: Vec<MultiPoly>,
}
