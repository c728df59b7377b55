//! Lie algebras given by structure constants, their representations, and the
//! operators R_x : g → V, ξ ↦ ρ(ξ)x.

pub mod zoo;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{MultiPoly, Rational, RationalStr};
use crate::linalg::{kernel_basis, rank, Matrix, QMatrix};
use crate::pencil::Pencil;
use crate::rng::SplitMix64;

/// A failed axiom check: the Jacobi identity on (eᵢ, eⱼ, e_k) or the
/// homomorphism identity ρ([eᵢ, eⱼ]) = [ρ(eᵢ), ρ(eⱼ)].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub i: usize,
    pub j: usize,
    /// Third basis index for Jacobi violations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Coordinate (or matrix entry) where the residual is nonzero.
    pub at: Vec<usize>,
    pub residual: RationalStr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ViolationKind {
    Jacobi,
    Homomorphism,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::Jacobi => write!(
                f,
                "Jacobi identity fails on (e{}, e{}, e{}): component {} of the residual is {}",
                self.i,
                self.j,
                self.k.unwrap_or(0),
                self.at[0],
                self.residual
            ),
            ViolationKind::Homomorphism => write!(
                f,
                "rho([e{}, e{}]) != [rho(e{}), rho(e{})]: entry ({}, {}) differs by {}",
                self.i, self.j, self.i, self.j, self.at[0], self.at[1], self.residual
            ),
        }
    }
}

/// Finite-dimensional Lie algebra with basis e₀ … e_{n−1} (zero-based).
///
/// Only brackets [eᵢ, eⱼ] with i < j are stored; the rest follow from
/// antisymmetry.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    /// `table[(i·n + j)·n + k] = c_ij^k` for all i, j.
    table: Vec<Rational>,
}

impl LieAlgebra {
    /// Builds from `(i, j, k, c)` meaning c_ij^k = c; pairs with i > j are
    /// flipped with a sign, repeated pairs accumulate. Checks Jacobi.
    pub fn new(dim: usize, brackets: impl IntoIterator<Item = (usize, usize, usize, Rational)>) -> Result<Self> {
        let alg = Self::new_unchecked(dim, brackets)?;
        alg.validate().map_err(Error::Violation)?;
        Ok(alg)
    }

    /// As [`LieAlgebra::new`] without the Jacobi check.
    pub fn new_unchecked(
        dim: usize,
        brackets: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut table = vec![Rational::zero(); dim * dim * dim];
        for (i, j, k, c) in brackets {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::input(
                    format!("bracket ({i}, {j}, {k})"),
                    format!("index out of range for dimension {dim}"),
                ));
            }
            if i == j {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::input(
                    format!("bracket ({i}, {j}, {k})"),
                    "[e_i, e_i] must vanish",
                ));
            }
            table[(i * dim + j) * dim + k] += &c;
            table[(j * dim + i) * dim + k] -= &c;
        }
        Ok(LieAlgebra { dim, table })
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new_unchecked(dim, []).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// c_ij^k
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero c_ij^k with i < j.
    pub fn brackets(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &uv * c;
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::from_integer(1.into());
        v
    }

    /// Exact Jacobi check on every triple i < j < k.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (self.basis(i), self.basis(j), self.basis(k));
                    let t1 = self.bracket(&self.bracket(&a, &b), &c);
                    let t2 = self.bracket(&self.bracket(&b, &c), &a);
                    let t3 = self.bracket(&self.bracket(&c, &a), &b);
                    for l in 0..n {
                        let s = &t1[l] + &t2[l] + &t3[l];
                        if !s.is_zero() {
                            return Err(Violation {
                                kind: ViolationKind::Jacobi,
                                i,
                                j,
                                k: Some(k),
                                at: vec![l],
                                residual: RationalStr(s),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// ρ : g → gl(V) given by the matrices ρ(e₀), …, ρ(e_{n−1}).
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    algebra: LieAlgebra,
    dim_v: usize,
    rho: Vec<QMatrix>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, rho: Vec<QMatrix>) -> Result<Self> {
        let rep = Self::new_unchecked(algebra, rho)?;
        rep.validate().map_err(Error::Violation)?;
        Ok(rep)
    }

    pub fn new_unchecked(algebra: LieAlgebra, rho: Vec<QMatrix>) -> Result<Self> {
        if rho.len() != algebra.dim() {
            return Err(Error::Dimension(format!(
                "{} matrices for an algebra of dimension {}",
                rho.len(),
                algebra.dim()
            )));
        }
        let dim_v = rho.first().map_or(0, |m| m.rows());
        for (i, m) in rho.iter().enumerate() {
            if m.shape() != (dim_v, dim_v) {
                return Err(Error::Dimension(format!(
                    "rho(e{i}) is {}x{}, expected {dim_v}x{dim_v}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { algebra, dim_v, rho })
    }

    /// ad(eᵢ) with (k, j) entry c_ij^k.
    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim();
        let rho = (0..n)
            .map(|i| Matrix::from_fn(n, n, |k, j| algebra.c(i, j, k).clone()))
            .collect();
        Representation {
            algebra: algebra.clone(),
            dim_v: n,
            rho,
        }
    }

    /// ad*(eᵢ) = −ad(eᵢ)ᵀ on g* in the dual basis.
    pub fn coadjoint(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim();
        let rho = (0..n)
            .map(|i| Matrix::from_fn(n, n, |k, j| -algebra.c(i, k, j)))
            .collect();
        Representation {
            algebra: algebra.clone(),
            dim_v: n,
            rho,
        }
    }

    /// The zero representation of `algebra` on a space of dimension `dim_v`.
    pub fn zero(algebra: &LieAlgebra, dim_v: usize) -> Self {
        Representation {
            algebra: algebra.clone(),
            dim_v,
            rho: vec![QMatrix::zeros(dim_v, dim_v); algebra.dim()],
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim_g(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn matrices(&self) -> &[QMatrix] {
        &self.rho
    }

    /// Exact check of ρ([eᵢ, eⱼ]) = ρ(eᵢ)ρ(eⱼ) − ρ(eⱼ)ρ(eᵢ) for all i < j.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.dim_g();
        for i in 0..n {
            for j in i + 1..n {
                let comm = self.rho[i]
                    .mul(&self.rho[j])
                    .unwrap()
                    .sub(&self.rho[j].mul(&self.rho[i]).unwrap());
                let mut image = QMatrix::zeros(self.dim_v, self.dim_v);
                for k in 0..n {
                    let c = self.algebra.c(i, j, k);
                    if !c.is_zero() {
                        image = image.add(&self.rho[k].scale(c));
                    }
                }
                let diff = image.sub(&comm);
                for r in 0..self.dim_v {
                    for s in 0..self.dim_v {
                        if !diff.get(r, s).is_zero() {
                            return Err(Violation {
                                kind: ViolationKind::Homomorphism,
                                i,
                                j,
                                k: None,
                                at: vec![r, s],
                                residual: RationalStr(diff.get(r, s).clone()),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_point(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dim_v {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, V has dimension {}",
                x.len(),
                self.dim_v
            )));
        }
        Ok(())
    }

    /// The m×n matrix of R_x; column j is ρ(eⱼ)x.
    pub fn r_operator(&self, x: &[Rational]) -> Result<QMatrix> {
        self.check_point(x)?;
        let cols: Vec<Vec<Rational>> = self.rho.iter().map(|m| m.mul_vec(x)).collect();
        Ok(Matrix::from_fn(self.dim_v, self.dim_g(), |i, j| cols[j][i].clone()))
    }

    /// R_x with x = (x₁, …, x_m) symbolic; every entry is a linear form.
    pub fn r_operator_symbolic(&self) -> Matrix<MultiPoly> {
        let m = self.dim_v;
        Matrix::from_fn(m, self.dim_g(), |i, j| {
            MultiPoly::linear_form(self.rho[j].row(i)).with_nvars(m)
        })
    }

    /// The pencil R_x + λR_a.
    pub fn r_pencil(&self, x: &[Rational], a: &[Rational]) -> Result<Pencil> {
        Pencil::new(self.r_operator(x)?, self.r_operator(a)?)
    }

    /// St_x = Ker R_x, as a canonical basis of g.
    pub fn stabilizer(&self, x: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        Ok(kernel_basis(&self.r_operator(x)?))
    }

    pub fn orbit_dim(&self, x: &[Rational]) -> Result<usize> {
        Ok(rank(&self.r_operator(x)?))
    }

    /// dim O_reg, dim St_reg and codim O_reg by seeded sampling.
    ///
    /// Two batches of `trials` integer points in [−bound, bound]^m are drawn;
    /// if their maximal ranks differ, one more batch with `4·trials` points
    /// and bound `bound²` is drawn. The point attaining the maximum is kept
    /// as the regular witness.
    pub fn regular_dims(&self, trials: usize, seed: u64, bound: u64) -> Result<RegularDims> {
        if trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        let m = self.dim_v;
        let seed = seed ^ REGULAR_STREAM;
        let batch = |start: u64, count: usize, bound: u64| -> Result<(usize, Vec<Rational>)> {
            let mut best = (0usize, vec![Rational::zero(); m]);
            for t in 0..count as u64 {
                let x = SplitMix64::stream(seed, start + t).vector(m, bound);
                let r = self.orbit_dim(&x)?;
                if r > best.0 {
                    best = (r, x);
                }
            }
            Ok(best)
        };
        let first = batch(0, trials, bound)?;
        let second = batch(trials as u64, trials, bound)?;
        let mut escalated = false;
        let mut best = if second.0 > first.0 { second.clone() } else { first.clone() };
        if first.0 != second.0 {
            escalated = true;
            let third = batch(2 * trials as u64, 4 * trials, bound.saturating_mul(bound))?;
            if third.0 > best.0 {
                best = third;
            }
        }
        Ok(RegularDims {
            orbit_dim: best.0,
            dim_st: self.dim_g() - best.0,
            codim_orbit: m - best.0,
            witness: best.1,
            escalated,
        })
    }
}

const REGULAR_STREAM: u64 = 0x5245_4755_4C41_5221;

#[derive(Clone, Debug, PartialEq)]
pub struct RegularDims {
    /// r = dim O_reg = max rk R_x.
    pub orbit_dim: usize,
    pub dim_st: usize,
    pub codim_orbit: usize,
    pub witness: Vec<Rational>,
    pub escalated: bool,
}

/// Algebra file: `{"dim": n, "brackets": [{"i":…, "j":…, "k":…, "c": "p/q"}]}`
/// with zero-based indices, meaning c_ij^k = c.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: RationalStr,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &LieAlgebra) -> Self {
        AlgebraFile {
            dim: alg.dim(),
            brackets: alg
                .brackets()
                .into_iter()
                .map(|(i, j, k, c)| BracketEntry { i, j, k, c: RationalStr(c) })
                .collect(),
        }
    }

    pub fn into_algebra(self) -> Result<LieAlgebra> {
        LieAlgebra::new(
            self.dim,
            self.brackets.into_iter().map(|b| (b.i, b.j, b.k, b.c.0)),
        )
    }
}

/// Representation file: either explicit matrices or a derived representation.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepresentationFile {
    Explicit {
        #[serde(rename = "dimV")]
        dim_v: usize,
        matrices: Vec<QMatrix>,
    },
    Derived { derived: DerivedKind },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DerivedKind {
    Adjoint,
    Coadjoint,
}

impl RepresentationFile {
    pub fn into_representation(self, algebra: &LieAlgebra) -> Result<Representation> {
        match self {
            RepresentationFile::Derived { derived: DerivedKind::Adjoint } => {
                Ok(Representation::adjoint(algebra))
            }
            RepresentationFile::Derived { derived: DerivedKind::Coadjoint } => {
                Ok(Representation::coadjoint(algebra))
            }
            RepresentationFile::Explicit { dim_v, matrices } => {
                for (i, m) in matrices.iter().enumerate() {
                    if m.shape() != (dim_v, dim_v) {
                        return Err(Error::input(
                            format!("matrices[{i}]"),
                            format!("expected {dim_v}x{dim_v}, found {}x{}", m.rows(), m.cols()),
                        ));
                    }
                }
                if dim_v == 0 && !matrices.is_empty() {
                    return Ok(Representation::zero(algebra, 0));
                }
                Representation::new(algebra.clone(), matrices)
            }
        }
    }

    pub fn from_representation(rep: &Representation) -> Self {
        RepresentationFile::Explicit {
            dim_v: rep.dim_v(),
            matrices: rep.matrices().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests;
