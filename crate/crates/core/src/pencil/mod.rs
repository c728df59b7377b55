//! Invariants of a pencil {A + λB} of maps U → V (A, B are m×n): rank,
//! minimal column and row indices, elementary divisors, total Kronecker
//! indices and the subspaces L_hor ⊂ U, L_vert ⊂ V*.
//!
//! Eigenvalues follow one convention throughout: λ₀ is an eigenvalue when
//! rk(A − λ₀B) < r, and ∞ is an eigenvalue when rk B < r.

pub mod canonical;
mod divisors;
mod indices;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};
use crate::linalg::{kernel_basis, rank, span_basis, Matrix, QMatrix};

pub use divisors::{elementary_divisors, elementary_divisors_via_smith, numeric_roots, ElementaryDivisorStructure, JordanEntry};
pub use indices::{minimal_solution_basis, solution_space_dim, toeplitz_stack};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pencil {
    a: QMatrix,
    b: QMatrix,
}

impl Pencil {
    pub fn new(a: QMatrix, b: QMatrix) -> Result<Self> {
        if a.shape() != b.shape() {
            return Err(Error::ShapeMismatch {
                a_rows: a.rows(),
                a_cols: a.cols(),
                b_rows: b.rows(),
                b_cols: b.cols(),
            });
        }
        Ok(Pencil { a, b })
    }

    pub fn a(&self) -> &QMatrix {
        &self.a
    }

    pub fn b(&self) -> &QMatrix {
        &self.b
    }

    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    pub fn cols(&self) -> usize {
        self.a.cols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.a.shape()
    }

    /// The pencil of transposes, Aᵀ + λBᵀ.
    pub fn transpose(&self) -> Pencil {
        Pencil {
            a: self.a.transpose(),
            b: self.b.transpose(),
        }
    }

    /// A + λ₀B.
    pub fn at(&self, lambda: &Rational) -> QMatrix {
        self.a.add(&self.b.scale(lambda))
    }

    /// The pencil {(αA + βB) + λ(γA + δB)}.
    pub fn recombine(&self, alpha: &Rational, beta: &Rational, gamma: &Rational, delta: &Rational) -> Pencil {
        Pencil {
            a: self.a.scale(alpha).add(&self.b.scale(beta)),
            b: self.a.scale(gamma).add(&self.b.scale(delta)),
        }
    }

    /// (P A Q, P B Q).
    pub fn conjugate(&self, p: &QMatrix, q: &QMatrix) -> Result<Pencil> {
        Ok(Pencil {
            a: p.mul(&self.a)?.mul(q)?,
            b: p.mul(&self.b)?.mul(q)?,
        })
    }

    pub fn direct_sum(&self, other: &Pencil) -> Pencil {
        let z = rat(0);
        Pencil {
            a: self.a.direct_sum(&other.a, &z),
            b: self.b.direct_sum(&other.b, &z),
        }
    }
}

/// r = max over λ of rk(A + λB).
///
/// The rank drops below r only at roots of D_r, which has degree ≤ r, so
/// one of min(m, n) + 1 distinct values attains it.
pub fn pencil_rank(p: &Pencil) -> usize {
    let (m, n) = p.shape();
    let full = m.min(n);
    let mut best = 0;
    for t in 0..=full as i64 {
        best = best.max(rank(&p.at(&rat(t))));
        if best == full {
            break;
        }
    }
    best
}

pub fn minimal_column_indices(p: &Pencil) -> Result<Vec<usize>> {
    indices::minimal_column_indices_with_rank(p, pencil_rank(p))
}

pub fn minimal_row_indices(p: &Pencil) -> Result<Vec<usize>> {
    minimal_column_indices(&p.transpose())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PencilInvariants {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub eps: Vec<usize>,
    pub eta: Vec<usize>,
    pub jordan: ElementaryDivisorStructure,
    pub k_hor: usize,
    pub k_vert: usize,
    pub deg_d: usize,
}

impl PencilInvariants {
    /// Checks every identity relating the fields. An error here means a bug,
    /// never bad input.
    pub fn check(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Internal(what));
        if self.eps.len() != self.cols - self.rank {
            return fail(format!("p = {} but n − r = {}", self.eps.len(), self.cols - self.rank));
        }
        if self.eta.len() != self.rows - self.rank {
            return fail(format!("q = {} but m − r = {}", self.eta.len(), self.rows - self.rank));
        }
        if self.k_hor != self.eps.iter().map(|e| e + 1).sum::<usize>() {
            return fail("k_hor ≠ Σ(εᵢ + 1)".into());
        }
        if self.k_vert != self.eta.iter().map(|e| e + 1).sum::<usize>() {
            return fail("k_vert ≠ Σ(ηⱼ + 1)".into());
        }
        if self.deg_d != self.jordan.total_degree() {
            return fail("deg D_r differs from the total Jordan degree".into());
        }
        if !self.total_index_identity() {
            return fail(format!(
                "k_vert + k_hor = {} but m + n − r − deg D = {}",
                self.k_vert + self.k_hor,
                (self.rows + self.cols) as isize - self.rank as isize - self.deg_d as isize
            ));
        }
        Ok(())
    }

    /// k_vert + k_hor = m + n − r − deg D_r.
    pub fn total_index_identity(&self) -> bool {
        (self.k_vert + self.k_hor + self.rank + self.deg_d) == self.rows + self.cols
    }

    /// Eigenvalue-free algebraic type: (ε, η, Jordan shape).
    pub fn algebraic_type(&self) -> (Vec<usize>, Vec<usize>, Vec<Vec<usize>>) {
        (self.eps.clone(), self.eta.clone(), self.jordan.shape())
    }
}

impl Serialize for PencilInvariants {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PencilInvariants", 8)?;
        st.serialize_field("shape", &[self.rows, self.cols])?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("eps", &self.eps)?;
        st.serialize_field("eta", &self.eta)?;
        st.serialize_field("jordan", &self.jordan)?;
        st.serialize_field("k_hor", &self.k_hor)?;
        st.serialize_field("k_vert", &self.k_vert)?;
        st.serialize_field("deg_D", &self.deg_d)?;
        st.end()
    }
}

impl fmt::Display for PencilInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "shape      {}x{}", self.rows, self.cols)?;
        writeln!(f, "rank       {}", self.rank)?;
        writeln!(f, "eps        {:?}", self.eps)?;
        writeln!(f, "eta        {:?}", self.eta)?;
        writeln!(f, "jordan     {}", self.jordan)?;
        writeln!(f, "k_hor      {}", self.k_hor)?;
        writeln!(f, "k_vert     {}", self.k_vert)?;
        write!(f, "deg_D      {}", self.deg_d)
    }
}

pub fn pencil_invariants(p: &Pencil) -> Result<PencilInvariants> {
    let (m, n) = p.shape();
    let r = pencil_rank(p);
    let eps = indices::minimal_column_indices_with_rank(p, r)?;
    let eta = indices::minimal_column_indices_with_rank(&p.transpose(), r)?;
    let jordan = elementary_divisors(p);
    let inv = PencilInvariants {
        rows: m,
        cols: n,
        rank: r,
        k_hor: eps.iter().map(|e| e + 1).sum(),
        k_vert: eta.iter().map(|e| e + 1).sum(),
        deg_d: jordan.total_degree(),
        eps,
        eta,
        jordan,
    };
    inv.check()?;
    Ok(inv)
}

/// `count` values λ = 0, 1, 2, … at which rk(A + λB) = r.
pub fn regular_parameters(p: &Pencil, r: usize, count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut t = 0i64;
    while out.len() < count {
        let lam = rat(t);
        if rank(&p.at(&lam)) == r {
            out.push(lam);
        }
        t += 1;
    }
    out
}

/// L_hor = Σ Ker(A + λₛB) over min(m, n) + 1 regular parameters, as the
/// rows of a reduced echelon basis.
pub fn l_hor(p: &Pencil) -> Vec<Vec<Rational>> {
    let (m, n) = p.shape();
    let r = pencil_rank(p);
    let mut gens = Vec::new();
    for lam in regular_parameters(p, r, m.min(n) + 1) {
        gens.extend(kernel_basis(&p.at(&lam)));
    }
    span_basis(&gens, n)
}

/// L_vert = Σ Ker(A + λₛB)* ⊂ V*.
pub fn l_vert(p: &Pencil) -> Vec<Vec<Rational>> {
    l_hor(&p.transpose())
}

/// Image of the eigenvalue λ₀ (`None` for ∞) under the recombination
/// (αA + βB) + λ(γA + δB): λ₀ ↦ (αλ₀ + β)/(γλ₀ + δ).
pub fn mobius_image(lambda: Option<&Rational>, c: &[Rational; 4]) -> Option<Rational> {
    let [al, be, ga, de] = c;
    let (num, den) = match lambda {
        Some(l) => (al * l + be, ga * l + de),
        None => (al.clone(), ga.clone()),
    };
    if num_traits::Zero::is_zero(&den) {
        None
    } else {
        Some(num / den)
    }
}

/// Whether an invertible recombination keeps the algebraic type and moves
/// every rational or infinite eigenvalue by `mobius_image`, block sizes
/// included. Eigenvalues of higher-degree factors are compared by shape only.
pub fn recombination_consistent(p: &Pencil, c: &[Rational; 4]) -> Result<bool> {
    let det = &c[0] * &c[3] - &c[1] * &c[2];
    if num_traits::Zero::is_zero(&det) {
        return Err(Error::InvalidArgument("recombination matrix is singular".into()));
    }
    let before = pencil_invariants(p)?;
    let after = pencil_invariants(&p.recombine(&c[0], &c[1], &c[2], &c[3]))?;
    if before.algebraic_type() != after.algebraic_type() {
        return Ok(false);
    }
    let locate = |lam: &Option<Rational>| {
        after.jordan.entries.iter().find(|e| match lam {
            None => e.is_infinite(),
            Some(v) => e.eigenvalue().as_ref() == Some(v),
        })
    };
    for e in &before.jordan.entries {
        if !e.is_infinite() && e.eigenvalue().is_none() {
            continue;
        }
        let image = mobius_image(e.eigenvalue().as_ref(), c);
        match locate(&image) {
            Some(found) if found.sizes == e.sizes => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Wire form of a pencil: `{"A": matrix, "B": matrix}`, with an optional
/// `"shape": [m, n]` that fixes the width of matrices without rows.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PencilFile {
    #[serde(rename = "A")]
    pub a: Vec<Vec<crate::exactmath::RationalStr>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<crate::exactmath::RationalStr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<(usize, usize)>,
}

impl PencilFile {
    pub fn into_pencil(self) -> Result<Pencil> {
        let width = self.shape.map(|s| s.1);
        let conv = |name: &str, rows: Vec<Vec<crate::exactmath::RationalStr>>| {
            Matrix::from_rows(
                rows.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect(),
                width,
            )
            .map_err(|e| Error::input(name, e.to_string()))
        };
        let a = conv("A", self.a)?;
        let b = conv("B", self.b)?;
        if let Some((m, n)) = self.shape {
            if a.shape() != (m, n) {
                return Err(Error::input(
                    "shape",
                    format!("declared {m}x{n} but A is {}x{}", a.rows(), a.cols()),
                ));
            }
        }
        Pencil::new(a, b)
    }

    pub fn from_pencil(p: &Pencil) -> Self {
        let conv = |m: &QMatrix| {
            m.to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(crate::exactmath::RationalStr).collect())
                .collect()
        };
        PencilFile {
            a: conv(p.a()),
            b: conv(p.b()),
            shape: Some(p.shape()),
        }
    }
}
