//! Elementary divisors of a pencil, finite and infinite.

use std::fmt;

use serde::Serialize;

use crate::exactmath::binary::{factor_univariate, BinaryForm};
use crate::exactmath::{Rational, UniPoly};
use crate::linalg::{determinant, rank, smith_normal_form, Matrix, PolyMatrix, QMatrix};
use crate::rng::SplitMix64;

use super::Pencil;

/// Jordan blocks sharing one irreducible factor of the characteristic form.
///
/// The factor vanishes at the eigenvalue points (λ₀ : μ₀) where μ₀A − λ₀B
/// loses rank; a degree-d factor stands for d conjugate eigenvalues with
/// identical block sizes, and the factor μ stands for the eigenvalue ∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanEntry {
    pub factor: BinaryForm,
    /// Block sizes, decreasing.
    pub sizes: Vec<usize>,
}

impl JordanEntry {
    pub fn is_infinite(&self) -> bool {
        self.factor.is_mu()
    }

    /// The rational eigenvalue λ₀ for a linear finite factor λ − λ₀μ.
    pub fn eigenvalue(&self) -> Option<Rational> {
        self.factor.linear_root()
    }

    pub fn degree(&self) -> usize {
        self.factor.degree() * self.sizes.iter().sum::<usize>()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ElementaryDivisorStructure {
    pub entries: Vec<JordanEntry>,
}

impl ElementaryDivisorStructure {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ deg(factor) · Σ sizes, which equals deg D_r.
    pub fn total_degree(&self) -> usize {
        self.entries.iter().map(JordanEntry::degree).sum()
    }

    /// Eigenvalue-free shape: one block-size list per eigenvalue (a degree-d
    /// factor contributes d copies), sorted. Two pencils of the same
    /// algebraic type have equal shapes.
    pub fn shape(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.sizes.clone(), e.factor.degree()))
            .collect();
        out.sort();
        out
    }

    pub fn find(&self, factor: &BinaryForm) -> Option<&JordanEntry> {
        self.entries.iter().find(|e| e.factor.proportional(factor))
    }
}

impl fmt::Display for ElementaryDivisorStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("none");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("({}): {:?}", e.factor, e.sizes))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Serialize)]
struct EntryRepr<'a> {
    factor: String,
    sizes: &'a [usize],
    #[serde(skip_serializing_if = "Option::is_none")]
    eigenvalue: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric_roots: Option<Vec<String>>,
}

impl Serialize for JordanEntry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let eigenvalue = if self.is_infinite() {
            Some("inf".to_string())
        } else {
            self.eigenvalue().map(|c| crate::exactmath::RationalStr(c).to_string())
        };
        let numeric_roots = (self.factor.degree() > 1).then(|| numeric_roots(&self.factor.dehomogenize()));
        EntryRepr {
            factor: self.factor.to_string(),
            sizes: &self.sizes,
            eigenvalue,
            numeric_roots,
        }
        .serialize(s)
    }
}

impl Serialize for ElementaryDivisorStructure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// Approximate complex roots for display only (Durand–Kerner iteration in
/// double precision), sorted by real then imaginary part and printed with
/// six decimals.
pub fn numeric_roots(p: &UniPoly) -> Vec<String> {
    use num_complex::Complex64;
    use num_traits::ToPrimitive;
    let Some(d) = p.degree().filter(|&d| d > 0) else {
        return Vec::new();
    };
    let monic = p.monic();
    let c: Vec<f64> = monic.coeffs().iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &k| acc * z + k);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let zi = roots[i];
            let denom = (0..d)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (zi - roots[j]));
            let step = eval(zi) / denom;
            roots[i] = zi - step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    roots
        .into_iter()
        .map(|z| {
            let re = if z.re.abs() < 5e-7 { 0.0 } else { z.re };
            let im = if z.im.abs() < 5e-7 { 0.0 } else { z.im };
            if im == 0.0 {
                format!("{re:.6}")
            } else {
                format!("{re:.6}{}{:.6}i", if im < 0.0 { "-" } else { "+" }, im.abs())
            }
        })
        .collect()
}

/// μ-adic valuation of a univariate polynomial (index of its lowest nonzero
/// coefficient).
fn lowest_order(p: &UniPoly) -> usize {
    p.coeffs().iter().take_while(|c| num_traits::Zero::is_zero(*c)).count()
}

fn multiplicity(p: &UniPoly, factor: &UniPoly) -> usize {
    let mut q = p.clone();
    let mut k = 0;
    loop {
        let (d, r) = q.div_rem(factor);
        if !r.is_zero() {
            return k;
        }
        q = d;
        k += 1;
    }
}

/// Elementary divisors by local rank counting.
///
/// Every eigenvalue is a root of D_r, and D_r divides det(U(A − λB)V) for
/// any r×m matrix U and n×r matrix V; the irreducible factors of such a
/// determinant are the candidates. At a root α of a candidate f, the pencil
/// over Q[t]/tᵏ (λ = α + t) has a kernel of dimension
/// k·(n − r) + Σⱼ min(k, sⱼ), where sⱼ are the block sizes at α; ranks of
/// the block bidiagonal matrices T_k give the sizes exactly, and a spurious
/// candidate shows no blocks. Conjugate roots are handled together through
/// A⊗I − B⊗C_f with C_f the companion matrix of f.
pub fn elementary_divisors(p: &Pencil) -> ElementaryDivisorStructure {
    let n = p.cols();
    let r = super::pencil_rank(p);
    if r == 0 {
        return ElementaryDivisorStructure::default();
    }
    let candidate = projected_determinant(p, r, 0).unwrap_or_else(UniPoly::zero);
    let candidate = match projected_determinant(p, r, 1) {
        Some(other) => crate::exactmath::uni_gcd(&candidate, &other),
        None => candidate,
    };
    let horizontal = n - r;
    let mut entries = Vec::new();
    for (factor, _) in factor_univariate(&candidate) {
        let c = companion(&factor);
        let d = c.rows();
        let m0 = kron_identity(p.a(), d).sub(&kron(p.b(), &c));
        let m1 = kron_identity(p.b(), d).scale(&Rational::from_integer((-1).into()));
        let sizes = local_block_sizes(&m0, &m1, horizontal * d, d);
        if !sizes.is_empty() {
            entries.push(JordanEntry {
                factor: BinaryForm::homogenize(&factor, d),
                sizes,
            });
        }
    }
    entries.sort_by(|x, y| {
        x.factor
            .degree()
            .cmp(&y.factor.degree())
            .then_with(|| x.factor.coeffs().cmp(y.factor.coeffs()))
    });
    // At ∞: μA − B at μ = t.
    let minus_b = p.b().scale(&Rational::from_integer((-1).into()));
    let infinite = local_block_sizes(&minus_b, p.a(), horizontal, 1);
    if !infinite.is_empty() {
        entries.push(JordanEntry {
            factor: BinaryForm::mu(),
            sizes: infinite,
        });
    }
    ElementaryDivisorStructure { entries }
}

/// det(U(A − λB)V) for seeded integer U (r×m) and V (n×r), interpolated
/// from r + 1 values; `None` when that projection loses rank.
fn projected_determinant(p: &Pencil, r: usize, index: u64) -> Option<UniPoly> {
    let (m, n) = p.shape();
    let mut rng = SplitMix64::stream(PROJECTION_SEED, index);
    let u = QMatrix::from_fn(r, m, |_, _| rng.rational_in(3));
    let v = QMatrix::from_fn(n, r, |_, _| rng.rational_in(3));
    let ua = u.mul(p.a()).ok()?.mul(&v).ok()?;
    let ub = u.mul(p.b()).ok()?.mul(&v).ok()?;
    let xs: Vec<Rational> = (0..=r as i64).map(|t| Rational::from_integer(t.into())).collect();
    let ys: Vec<Rational> = xs.iter().map(|x| determinant(&ua.sub(&ub.scale(x)))).collect();
    if ys.iter().all(num_traits::Zero::is_zero) {
        return None;
    }
    Some(interpolate(&xs, &ys))
}

const PROJECTION_SEED: u64 = 0x5052_4F4A_4543_5431;

/// Newton interpolation through (xs[i], ys[i]).
fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
    let mut coef = ys.to_vec();
    for j in 1..xs.len() {
        for i in (j..xs.len()).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut out = UniPoly::zero();
    for i in (0..xs.len()).rev() {
        out = &(&out * &UniPoly::linear(-xs[i].clone(), Rational::from_integer(1.into())))
            + &UniPoly::constant(coef[i].clone());
    }
    out
}

fn companion(f: &UniPoly) -> QMatrix {
    let f = f.monic();
    let d = f.degree().expect("nonzero factor");
    QMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -f.coeff(i)
        } else if i == j + 1 {
            Rational::from_integer(1.into())
        } else {
            Rational::from_integer(0.into())
        }
    })
}

fn kron(x: &QMatrix, y: &QMatrix) -> QMatrix {
    let (yr, yc) = y.shape();
    QMatrix::from_fn(x.rows() * yr, x.cols() * yc, |i, j| {
        x.get(i / yr, j / yc) * y.get(i % yr, j % yc)
    })
}

fn kron_identity(x: &QMatrix, d: usize) -> QMatrix {
    kron(x, &QMatrix::identity(d))
}

/// Block sizes (decreasing) of the local structure of M₀ + tM₁ at t = 0,
/// where `horizontal` kernel dimensions per power of t come from the
/// horizontal blocks and every root is counted `copies` times.
fn local_block_sizes(m0: &QMatrix, m1: &QMatrix, horizontal: usize, copies: usize) -> Vec<usize> {
    let (rows, cols) = m0.shape();
    // at_least[k − 1] = number of blocks of size ≥ k.
    let mut at_least = Vec::new();
    let mut prev_kernel = 0;
    for k in 1..=rows.min(cols) + 1 {
        let mut t = QMatrix::zeros(k * rows, k * cols);
        for b in 0..k {
            for i in 0..rows {
                for j in 0..cols {
                    t.set(b * rows + i, b * cols + j, m0.get(i, j).clone());
                    if b + 1 < k {
                        t.set((b + 1) * rows + i, b * cols + j, m1.get(i, j).clone());
                    }
                }
            }
        }
        let kernel = k * cols - rank(&t);
        let count = (kernel - prev_kernel - horizontal) / copies;
        prev_kernel = kernel;
        if count == 0 {
            break;
        }
        at_least.push(count);
    }
    let mut sizes = Vec::new();
    for (k, &c) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(k + 1, c - next));
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// The same structure from Smith normal forms over Q[λ]: finite divisors
/// from the invariant factors of A − λB, infinite ones from the μ-adic
/// valuations of the invariant factors of μA − B. Much slower; kept as an
/// independent reference.
pub fn elementary_divisors_via_smith(p: &Pencil) -> ElementaryDivisorStructure {
    let finite: PolyMatrix = Matrix::from_fn(p.rows(), p.cols(), |i, j| {
        UniPoly::linear(p.a().get(i, j).clone(), -p.b().get(i, j))
    });
    let invariant = smith_normal_form(&finite);
    let mut entries = Vec::new();
    if let Some(last) = invariant.last() {
        // Every invariant factor divides the last one.
        for (factor, _) in factor_univariate(last) {
            let mut sizes: Vec<usize> = invariant
                .iter()
                .map(|d| multiplicity(d, &factor))
                .filter(|&k| k > 0)
                .collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let deg = factor.degree().unwrap();
            entries.push(JordanEntry {
                factor: BinaryForm::homogenize(&factor, deg),
                sizes,
            });
        }
    }
    entries.sort_by(|x, y| {
        x.factor
            .degree()
            .cmp(&y.factor.degree())
            .then_with(|| x.factor.coeffs().cmp(y.factor.coeffs()))
    });

    let reversed: PolyMatrix = Matrix::from_fn(p.rows(), p.cols(), |i, j| {
        UniPoly::linear(-p.b().get(i, j), p.a().get(i, j).clone())
    });
    let mut infinite: Vec<usize> = smith_normal_form(&reversed)
        .iter()
        .map(lowest_order)
        .filter(|&k| k > 0)
        .collect();
    if !infinite.is_empty() {
        infinite.sort_unstable_by(|a, b| b.cmp(a));
        entries.push(JordanEntry {
            factor: BinaryForm::mu(),
            sizes: infinite,
        });
    }
    ElementaryDivisorStructure { entries }
}
