//! Minimal indices from polynomial solutions of (A + λB) v(λ) = 0.
//!
//! A solution of degree ≤ k is a coefficient vector (v₀, …, v_k) in the
//! kernel of the stacked block matrix S_k with block rows
//! `A v₀ = 0`, `B v_{j−1} + A v_j = 0` (j = 1..k), `B v_k = 0`.
//! A horizontal block with index ε contributes max(0, k − ε + 1) to
//! d_k = dim Ker S_k and nothing else does, hence
//! `#{εᵢ ≤ k} = d_k − d_{k−1}`.

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linalg::{kernel_basis, rank, span_basis, QMatrix};

use super::Pencil;

pub fn toeplitz_stack(p: &Pencil, k: usize) -> QMatrix {
    let (m, n) = p.shape();
    let mut s = QMatrix::zeros((k + 2) * m, (k + 1) * n);
    for j in 0..=k {
        for i in 0..m {
            for c in 0..n {
                s.set(j * m + i, j * n + c, p.a().get(i, c).clone());
                s.set((j + 1) * m + i, j * n + c, p.b().get(i, c).clone());
            }
        }
    }
    s
}

/// d_k = dim Ker S_k.
pub fn solution_space_dim(p: &Pencil, k: usize) -> usize {
    let (_, n) = p.shape();
    (k + 1) * n - rank(&toeplitz_stack(p, k))
}

/// Sorted minimal column indices; exactly `n − r` of them.
pub fn minimal_column_indices_with_rank(p: &Pencil, r: usize) -> Result<Vec<usize>> {
    let (m, n) = p.shape();
    let want = n - r;
    let mut out = Vec::with_capacity(want);
    let mut prev_dim = 0;
    let mut prev_count = 0;
    let mut k = 0;
    while out.len() < want {
        // ε ≤ m for every horizontal block, so the loop ends by k = m.
        if k > m {
            return Err(Error::Internal(format!(
                "minimal index search exceeded {m} with {} of {want} indices",
                out.len()
            )));
        }
        let d = solution_space_dim(p, k);
        let count = d - prev_dim;
        if count < prev_count || count > want {
            return Err(Error::Internal(format!(
                "non-monotone solution counts at k={k}: {prev_count} -> {count}"
            )));
        }
        out.extend(std::iter::repeat_n(k, count - prev_count));
        prev_dim = d;
        prev_count = count;
        k += 1;
    }
    Ok(out)
}

/// Polynomial solutions of (A + λB) v(λ) = 0 chosen greedily by degree so
/// that their initial vectors are independent. Returned as coefficient
/// lists `[v₀, v₁, …]`; the number of solutions is `dim Ker A`.
///
/// When A is a regular member of the pencil the degrees are the minimal
/// column indices.
pub fn minimal_solution_basis(p: &Pencil) -> Vec<Vec<Vec<Rational>>> {
    let (m, n) = p.shape();
    let kernel_a = n - rank(p.a());
    let mut chosen: Vec<Vec<Vec<Rational>>> = Vec::new();
    let mut initials: Vec<Vec<Rational>> = Vec::new();
    let mut k = 0;
    while chosen.len() < kernel_a && k <= m + n {
        for v in kernel_basis(&toeplitz_stack(p, k)) {
            let coeffs: Vec<Vec<Rational>> = v.chunks(n).map(<[Rational]>::to_vec).collect();
            let mut trial = initials.clone();
            trial.push(coeffs[0].clone());
            if span_basis(&trial, n).len() > initials.len() {
                initials.push(coeffs[0].clone());
                chosen.push(trim_chain(coeffs));
            }
        }
        k += 1;
    }
    chosen
}

fn trim_chain(mut c: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    while c.len() > 1 && c.last().is_some_and(|v| v.iter().all(num_traits::Zero::is_zero)) {
        c.pop();
    }
    c
}
