//! Brute-force reference computations used to cross-check the library.
//!
//! Everything here is deliberately naive and shares no code with the
//! library's linear algebra: plain Gauss–Jordan elimination over Q, kernel
//! dimensions of the stacked coefficient systems S_k, and determinantal
//! divisors from explicitly enumerated minors over Q[λ].

#![allow(dead_code)]

use std::collections::BTreeMap;

use jk_core::linalg::QMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type Mat = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_qmatrix(m: &QMatrix) -> Mat {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect()
}

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![Q::zero(); c]; r]
}

pub fn transpose(m: &Mat, cols: usize) -> Mat {
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn comb(a: &Mat, b: &Mat, lam: &Q) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + lam * y).collect())
        .collect()
}

pub fn matmul(a: &Mat, b: &Mat, inner: usize, cols: usize) -> Mat {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Gauss–Jordan elimination; returns the reduced rows and pivot columns.
pub fn rref(m: &Mat, cols: usize) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][c].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != row && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[row][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    (a, pivots)
}

pub fn rank(m: &Mat, cols: usize) -> usize {
    rref(m, cols).1.len()
}

pub fn kernel(m: &Mat, cols: usize) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(m, cols);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

pub fn same_span(a: &[Vec<Q>], b: &[Vec<Q>], dim: usize) -> bool {
    let ra = rank(&a.to_vec(), dim);
    let rb = rank(&b.to_vec(), dim);
    let both: Mat = a.iter().chain(b).cloned().collect();
    ra == rb && rank(&both, dim) == ra
}

/// A pencil A + λB with explicit shape (so empty matrices keep their width).
#[derive(Clone, Debug)]
pub struct P {
    pub a: Mat,
    pub b: Mat,
    pub m: usize,
    pub n: usize,
}

impl P {
    pub fn from_lib(p: &jk_core::pencil::Pencil) -> Self {
        let (m, n) = p.shape();
        P {
            a: from_qmatrix(p.a()),
            b: from_qmatrix(p.b()),
            m,
            n,
        }
    }

    pub fn transposed(&self) -> P {
        P {
            a: transpose(&self.a, self.n),
            b: transpose(&self.b, self.n),
            m: self.n,
            n: self.m,
        }
    }

    pub fn reversed(&self) -> P {
        P {
            a: self.b.clone(),
            b: self.a.clone(),
            m: self.m,
            n: self.n,
        }
    }

    /// max rk(A + λB) over λ = 0, …, min(m, n): the rank can drop at no
    /// more than r values.
    pub fn rank(&self) -> usize {
        (0..=self.m.min(self.n) as i64)
            .map(|t| rank(&comb(&self.a, &self.b, &q(t)), self.n))
            .max()
            .unwrap_or(0)
    }

    /// dim of {v₀, …, v_k : (A + λB)Σ vᵢλⁱ = 0}: the kernel of the
    /// (k + 2)m × (k + 1)n block system S_k.
    pub fn s_k(&self, k: usize) -> usize {
        let (m, n) = (self.m, self.n);
        let cols = (k + 1) * n;
        let mut s = zeros((k + 2) * m, cols);
        for blk in 0..=k {
            for i in 0..m {
                for j in 0..n {
                    s[blk * m + i][blk * n + j] = self.a[i][j].clone();
                    s[(blk + 1) * m + i][blk * n + j] = self.b[i][j].clone();
                }
            }
        }
        cols - rank(&s, cols)
    }

    /// Minimal column indices from second differences of dim S_k:
    /// #{εᵢ = k} = d_k − 2d_{k−1} + d_{k−2}.
    pub fn column_indices(&self) -> Vec<usize> {
        let count = self.n - self.rank();
        let mut eps = Vec::new();
        let mut d = vec![0i64, 0];
        let mut k = 0;
        while eps.len() < count {
            let dk = self.s_k(k) as i64;
            let l = d.len();
            let here = dk - 2 * d[l - 1] + d[l - 2];
            for _ in 0..here {
                eps.push(k);
            }
            d.push(dk);
            k += 1;
            assert!(k <= self.n + 1, "column indices did not close");
        }
        eps
    }

    pub fn row_indices(&self) -> Vec<usize> {
        self.transposed().column_indices()
    }
}

// Univariate polynomials over Q, coefficients from degree 0 up.

#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    pub fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn c(x: Q) -> Self {
        Poly(vec![x]).trim()
    }

    pub fn lin(c0: Q, c1: Q) -> Self {
        Poly(vec![c0, c1]).trim()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = Q::zero();
        Poly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).trim()
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly(Vec::new());
        }
        let mut r = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            for (j, y) in o.0.iter().enumerate() {
                r[i + j] += x * y;
            }
        }
        Poly(r).trim()
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let mut r = self.clone();
        let mut quo = vec![Q::zero(); self.0.len().saturating_sub(d.0.len()) + 1];
        let lead = d.0.last().unwrap().clone();
        while !r.is_zero() && r.0.len() >= d.0.len() {
            let shift = r.0.len() - d.0.len();
            let f = r.0.last().unwrap() / &lead;
            for (i, x) in d.0.iter().enumerate() {
                r.0[i + shift] -= &f * x;
            }
            quo[shift] = f;
            r = r.trim();
        }
        (Poly(quo).trim(), r)
    }

    pub fn monic(&self) -> Poly {
        match self.0.last() {
            None => self.clone(),
            Some(l) => {
                let l = l.clone();
                Poly(self.0.iter().map(|x| x / &l).collect())
            }
        }
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of the root −c, i.e. of the factor λ + c.
    pub fn order_at(&self, c: &Q) -> usize {
        let f = Poly::lin(c.clone(), Q::one());
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (quo, r) = p.divrem(&f);
            if !r.is_zero() {
                break;
            }
            p = quo;
            k += 1;
        }
        k
    }
}

fn det(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => Poly::c(Q::one()),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Poly(Vec::new());
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.add(&term.neg()) };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut with_last: Vec<Vec<usize>> = subsets(n - 1, k - 1)
        .into_iter()
        .map(|mut s| {
            s.push(n - 1);
            s
        })
        .collect();
    with_last.extend(subsets(n - 1, k));
    with_last
}

impl P {
    fn entry(&self, i: usize, j: usize) -> Poly {
        Poly::lin(self.a[i][j].clone(), self.b[i][j].clone())
    }

    /// D_k: monic gcd of all k×k minors of A + λB.
    pub fn determinantal_divisor(&self, k: usize) -> Poly {
        let mut g = Poly(Vec::new());
        for rows in subsets(self.m, k) {
            for cols in subsets(self.n, k) {
                let sub: Vec<Vec<Poly>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| self.entry(i, j)).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        g
    }

    /// Invariant factors i_k = D_k / D_{k−1}, k = 1..r.
    pub fn invariant_factors(&self) -> Vec<Poly> {
        let r = self.rank();
        let ds: Vec<Poly> = (0..=r).map(|k| self.determinantal_divisor(k)).collect();
        (1..=r).map(|k| ds[k].divrem(&ds[k - 1]).0.monic()).collect()
    }

    /// Jordan block sizes at the finite eigenvalue c, where rk(A − cB) < r,
    /// i.e. at the root λ = −c of A + λB; decreasing.
    pub fn jordan_sizes_at(&self, c: &Q) -> Vec<usize> {
        let mut s: Vec<usize> = self.invariant_factors().iter().map(|f| f.order_at(c)).filter(|&e| e > 0).collect();
        s.sort_unstable_by(|x, y| y.cmp(x));
        s
    }

    /// Block sizes at ∞: the finite structure of B + νA at ν = 0.
    pub fn infinite_sizes(&self) -> Vec<usize> {
        self.reversed().jordan_sizes_at(&Q::zero())
    }

    /// deg of the homogeneous D_r(λ, μ): finite degree plus multiplicity at ∞.
    pub fn total_jordan_degree(&self) -> usize {
        let r = self.rank();
        let dr = self.determinantal_divisor(r);
        dr.degree() + self.reversed().determinantal_divisor(r).order_at(&Q::zero())
    }

    /// The finite eigenvalues that are rational: the negated rational roots
    /// of D_r, found by trial over the candidates.
    pub fn rational_eigenvalues(&self, candidates: &[Q]) -> BTreeMap<Q, Vec<usize>> {
        candidates
            .iter()
            .map(|c| (c.clone(), self.jordan_sizes_at(c)))
            .filter(|(_, s)| !s.is_empty())
            .collect()
    }
}

/// Fraction-free integer determinant, for invertibility tests.
pub fn int_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

pub fn abs_max(v: &[Q]) -> Q {
    v.iter().map(|x| x.abs()).fold(Q::zero(), |a, b| if b > a { b } else { a })
}

impl Poly {
    pub fn derivative(&self) -> Poly {
        Poly(self.0.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect()).trim()
    }

    /// The single root of the squarefree part, when that part is linear.
    pub fn lone_root(&self) -> Option<Q> {
        if self.degree() == 0 {
            return None;
        }
        let g = self.gcd(&self.derivative());
        let sqf = self.divrem(&g).0;
        (sqf.degree() == 1).then(|| -&sqf.0[0] / &sqf.0[1])
    }
}

/// Coefficients c₀..c_d of the polynomial taking `values[t]` at t = 0..=d.
pub fn interpolate(values: &[Q]) -> Vec<Q> {
    let d = values.len();
    let system: Mat = (0..d)
        .map(|t| {
            let mut row: Vec<Q> = (0..d as u32).map(|k| q(t as i64).pow(k as i32)).collect();
            row.push(values[t].clone());
            row
        })
        .collect();
    let (r, _) = rref(&system, d + 1);
    r.iter().map(|row| row[d].clone()).collect()
}

/// ∂ᵢ of `f` at `p` from the t-coefficient of f(p + t·eᵢ), by interpolation.
pub fn gradient(f: &dyn Fn(&[Q]) -> Q, p: &[Q], degree: usize) -> Vec<Q> {
    (0..p.len())
        .map(|i| {
            let vals: Vec<Q> = (0..=degree as i64)
                .map(|t| {
                    let mut pt = p.to_vec();
                    pt[i] += q(t);
                    f(&pt)
                })
                .collect();
            interpolate(&vals).get(1).cloned().unwrap_or_else(Q::zero)
        })
        .collect()
}

/// d g_j(x) for j = 1..=degree, where f(a + λx) = Σ λʲ g_j(x): the row
/// ∂ᵢ g_j(x) is the λ^{j−1} coefficient of (∂ᵢ f)(a + λx).
pub fn shift_differentials(f: &dyn Fn(&[Q]) -> Q, degree: usize, a: &[Q], x: &[Q]) -> Vec<Vec<Q>> {
    if degree == 0 {
        return Vec::new();
    }
    // Columns: for each λ = 0..degree−1, the gradient at a + λx.
    let grads: Vec<Vec<Q>> = (0..degree as i64)
        .map(|l| {
            let p: Vec<Q> = a.iter().zip(x).map(|(ai, xi)| ai + q(l) * xi).collect();
            gradient(f, &p, degree)
        })
        .collect();
    let per_coord: Vec<Vec<Q>> = (0..a.len())
        .map(|i| interpolate(&grads.iter().map(|g| g[i].clone()).collect::<Vec<_>>()))
        .collect();
    (1..=degree).map(|j| per_coord.iter().map(|c| c[j - 1].clone()).collect()).collect()
}

/// L_vert = Σ_λ Ker(A + λB)ᵀ over enough regular λ (left kernels, in V*).
pub fn l_vert(p: &P) -> Vec<Vec<Q>> {
    let r = p.rank();
    let mut gens = Vec::new();
    for t in 0..=(p.m + p.n) as i64 {
        let c = comb(&p.a, &p.b, &q(t));
        if rank(&c, p.n) == r {
            gens.extend(kernel(&transpose(&c, p.n), p.m));
        }
    }
    gens
}
