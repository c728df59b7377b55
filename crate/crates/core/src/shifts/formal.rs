//! Truncated formal invariants at a regular point a.
//!
//! A chain ω₀, ω₁, …, ω_N of polynomial covector fields, ωⱼ homogeneous of
//! degree j, with
//!
//!   R_a*ω₀ = 0,   R_a*ωⱼ + R_x*ωⱼ₋₁ = 0,   ∂ωⱼ,ᵢ/∂x_l = ∂ωⱼ,_l/∂xᵢ.
//!
//! Each ωⱼ is then the differential of g_{j+1} = ⟨ωⱼ, x⟩ / (j + 1), and the
//! series Σ λʲ g_{j+1} is a formal invariant of R_a + λR_x.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{Monomial, MultiPoly, Rational, RationalStr};
use crate::jk::Sampling;
use crate::liealg::Representation;
use crate::linalg::{kernel_basis, rank, rref, same_span, Matrix, QMatrix};

use super::{differentials_at, r_star_at, r_star_symbolic, shift_expand, InvariantPolynomial};

const STABILITY_STREAM: u64 = 0x464F_524D_414C_5331;

/// Column order used by the linear solves. Different orders pick different
/// (equally valid) representatives when a solve is underdetermined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverOrder {
    Natural,
    Reversed,
}

impl SolverOrder {
    fn column(self, u: usize, total: usize) -> usize {
        match self {
            SolverOrder::Natural => u,
            SolverOrder::Reversed => total - 1 - u,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormalInvariantChain {
    pub origin: Vec<RationalStr>,
    /// The requested truncation order N.
    pub order: usize,
    /// ω₀, …, ω_k, each a covector of polynomials of the listed degree.
    pub omegas: Vec<Vec<MultiPoly>>,
    /// g₁, …, g_{k+1} with dg_{j+1} = ωⱼ.
    pub components: Vec<MultiPoly>,
    /// N + 1 if every order up to N was solvable, otherwise the first
    /// order without a gradient solution.
    pub obstruction_order: usize,
}

/// Exponent vectors of all monomials of degree `d` in `m` variables.
pub(super) fn monomials(m: usize, d: u32) -> Vec<Monomial> {
    fn rec(m: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == m {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(m, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(m, d, &mut Vec::with_capacity(m), &mut out);
    out
}

fn coefficient_map(p: &MultiPoly) -> HashMap<Monomial, Rational> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

fn bump(mono: &Monomial, i: usize) -> Monomial {
    mono.mul(&Monomial::var(i))
}

/// Canonical particular solution of M u = b: reduced echelon form of the
/// augmented matrix with every free variable set to zero.
fn solve_canonical(rows: Vec<Vec<Rational>>, rhs: Vec<Rational>, unknowns: usize) -> Option<Vec<Rational>> {
    if rows.is_empty() {
        return Some(vec![Rational::zero(); unknowns]);
    }
    let aug: Vec<Vec<Rational>> = rows
        .into_iter()
        .zip(rhs)
        .map(|(mut r, b)| {
            r.push(b);
            r
        })
        .collect();
    let m = Matrix::from_rows(aug, Some(unknowns + 1)).expect("uniform rows");
    let (r, pivots) = rref(&m);
    if pivots.last() == Some(&unknowns) {
        return None;
    }
    let mut sol = vec![Rational::zero(); unknowns];
    for (row, &p) in pivots.iter().enumerate() {
        sol[p] = r.get(row, unknowns).clone();
    }
    Some(sol)
}

/// Solves R_a*ω + rhs = 0 for a closed covector ω homogeneous of degree d.
fn solve_order(ra: &QMatrix, rhs: &[MultiPoly], d: u32, order: SolverOrder) -> Option<Vec<MultiPoly>> {
    let (m, n) = ra.shape();
    let basis = monomials(m, d);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(k, mono)| (mono, k)).collect();
    let size = basis.len();
    let total = m * size;
    let col = |i: usize, k: usize| order.column(i * size + k, total);

    let mut rows = Vec::new();
    let mut b = Vec::new();
    // Chain equations: for each generator l and monomial μ of degree d,
    // Σᵢ (R_a)_{il} [μ]ωᵢ = −[μ] rhs_l.
    for (l, r) in rhs.iter().enumerate().take(n) {
        let coeffs = coefficient_map(r);
        for (k, mono) in basis.iter().enumerate() {
            let mut row = vec![Rational::zero(); total];
            for i in 0..m {
                row[col(i, k)] = ra.get(i, l).clone();
            }
            rows.push(row);
            b.push(-coeffs.get(mono).cloned().unwrap_or_else(Rational::zero));
        }
    }
    // Closedness: [ν] ∂ωᵢ/∂x_l = [ν] ∂ω_l/∂xᵢ for every ν of degree d − 1.
    if d > 0 {
        for nu in monomials(m, d - 1) {
            for i in 0..m {
                for l in i + 1..m {
                    let mut row = vec![Rational::zero(); total];
                    let up_l = bump(&nu, l);
                    let up_i = bump(&nu, i);
                    row[col(i, index[&up_l])] += Rational::from_integer((nu.exp(l) + 1).into());
                    row[col(l, index[&up_i])] -= Rational::from_integer((nu.exp(i) + 1).into());
                    rows.push(row);
                    b.push(Rational::zero());
                }
            }
        }
    }

    let sol = solve_canonical(rows, b, total)?;
    Some(
        (0..m)
            .map(|i| {
                MultiPoly::from_terms(
                    m,
                    basis
                        .iter()
                        .enumerate()
                        .map(|(k, mono)| (mono.clone(), sol[col(i, k)].clone())),
                )
            })
            .collect(),
    )
}

/// ⟨ω, x⟩ / (d + 1) for a closed covector ω homogeneous of degree d.
fn integrate(omega: &[MultiPoly], d: usize) -> MultiPoly {
    let m = omega.len();
    let mut acc = MultiPoly::zero(m);
    for (i, w) in omega.iter().enumerate() {
        acc = &acc + &(&MultiPoly::var(m, i) * w);
    }
    acc.scale(&Rational::new(1.into(), ((d + 1) as i64).into()))
}

/// Basis of Ker R_a*, canonical for the given column order.
fn cokernel_basis(ra: &QMatrix, order: SolverOrder) -> Vec<Vec<Rational>> {
    let t = ra.transpose();
    match order {
        SolverOrder::Natural => kernel_basis(&t),
        SolverOrder::Reversed => {
            let (r, c) = t.shape();
            let flipped = Matrix::from_fn(r, c, |i, j| t.get(i, c - 1 - j).clone());
            kernel_basis(&flipped)
                .into_iter()
                .map(|mut v| {
                    v.reverse();
                    v
                })
                .collect()
        }
    }
}

pub fn formal_invariant_truncated(
    rep: &Representation,
    a: &[Rational],
    order: usize,
    sampling: &Sampling,
) -> Result<Vec<FormalInvariantChain>> {
    formal_invariant_truncated_ordered(rep, a, order, sampling, SolverOrder::Natural)
}

/// One chain per basis covector of Ker R_a*, built order by order up to N.
pub fn formal_invariant_truncated_ordered(
    rep: &Representation,
    a: &[Rational],
    order: usize,
    sampling: &Sampling,
    solver: SolverOrder,
) -> Result<Vec<FormalInvariantChain>> {
    let ra = rep.r_operator(a)?;
    let regular = rep.regular_dims(sampling.trials.max(1), sampling.seed, sampling.bound)?.orbit_dim;
    let r = rank(&ra);
    if r < regular {
        return Err(Error::NotRegular { rank: r, regular });
    }
    let m = rep.dim_v();
    let origin: Vec<RationalStr> = a.iter().cloned().map(RationalStr).collect();

    let mut chains = Vec::new();
    for w0 in cokernel_basis(&ra, solver) {
        let omega0: Vec<MultiPoly> = w0.into_iter().map(|c| MultiPoly::constant(m, c)).collect();
        let mut omegas = vec![omega0];
        let mut obstruction_order = order + 1;
        for j in 1..=order {
            let rhs = r_star_symbolic(rep, &omegas[j - 1]);
            match solve_order(&ra, &rhs, j as u32, solver) {
                Some(w) => omegas.push(w),
                None => {
                    obstruction_order = j;
                    break;
                }
            }
        }
        let components = omegas.iter().enumerate().map(|(j, w)| integrate(w, j)).collect();
        chains.push(FormalInvariantChain {
            origin: origin.clone(),
            order,
            omegas,
            components,
            obstruction_order,
        });
    }
    Ok(chains)
}

/// Whether the span of dg(x) over all chain components is the same for the
/// natural and the reversed solver order, at `sampling.trials` points.
pub fn formal_span_stable(rep: &Representation, a: &[Rational], order: usize, sampling: &Sampling) -> Result<bool> {
    let first = formal_invariant_truncated_ordered(rep, a, order, sampling, SolverOrder::Natural)?;
    let second = formal_invariant_truncated_ordered(rep, a, order, sampling, SolverOrder::Reversed)?;
    let m = rep.dim_v();
    for k in 0..sampling.trials as u64 {
        let x = sampling.point(STABILITY_STREAM, k, m);
        let d1 = differentials_at(first.iter().flat_map(|c| &c.components), &x);
        let d2 = differentials_at(second.iter().flat_map(|c| &c.components), &x);
        if !same_span(&d1, &d2, m) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_closed(omega: &[MultiPoly]) -> bool {
    (0..omega.len()).all(|i| (i + 1..omega.len()).all(|l| omega[i].partial(l) == omega[l].partial(i)))
}

/// First order at which the chain equations or closedness fail.
pub fn chain_defect(rep: &Representation, a: &[Rational], omegas: &[Vec<MultiPoly>]) -> Result<Option<usize>> {
    for (j, w) in omegas.iter().enumerate() {
        let mut lhs = r_star_at(rep, a, w)?;
        if j > 0 {
            let prev = r_star_symbolic(rep, &omegas[j - 1]);
            lhs = lhs.iter().zip(&prev).map(|(u, v)| u + v).collect();
        }
        if lhs.iter().any(|p| !p.is_zero()) || !is_closed(w) {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// Dividing (R_a + λR_x)* Σ λʲ dg_j = 0 by λ: the differentials of
/// g₁, …, g_m of f(a + λx) form a chain that terminates, R_x* dg_m = 0.
/// Returns the first failing order (m for the terminal condition).
pub fn shift_chain_defect(rep: &Representation, f: &InvariantPolynomial, a: &[Rational]) -> Result<Option<usize>> {
    let comps = shift_expand(f, a)?;
    let omegas: Vec<Vec<MultiPoly>> = comps.iter().skip(1).map(MultiPoly::gradient).collect();
    if let Some(j) = chain_defect(rep, a, &omegas)? {
        return Ok(Some(j));
    }
    if let Some(last) = omegas.last() {
        if r_star_symbolic(rep, last).iter().any(|p| !p.is_zero()) {
            return Ok(Some(omegas.len()));
        }
    }
    Ok(None)
}

impl FormalInvariantChain {
    /// Whether the chain reached the requested order without obstruction.
    pub fn complete(&self) -> bool {
        self.obstruction_order == self.order + 1
    }

    pub fn leading_covector(&self) -> Vec<Rational> {
        self.omegas[0].iter().map(MultiPoly::constant_term).collect()
    }
}
