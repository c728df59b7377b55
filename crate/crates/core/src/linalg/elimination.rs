use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::{Matrix, PolyMatrix, QMatrix};
use crate::exactmath::rational::common_denominator;
use crate::exactmath::{Domain, Rational};

/// Fraction-free (Bareiss) forward elimination. Returns the rank and the
/// signed final pivot, which is the determinant for square full-rank input.
fn bareiss<T: Domain>(m: &Matrix<T>) -> (usize, T) {
    let (rows, cols) = m.shape();
    let mut a = m.clone().into_data();
    let at = |i: usize, j: usize| i * cols + j;
    let mut prev = T::ring_one();
    let mut rank = 0;
    let mut negate = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows)
            .filter(|&i| !a[at(i, c)].ring_is_zero())
            .min_by_key(|&i| a[at(i, c)].weight());
        let Some(p) = pivot else { continue };
        if p != rank {
            for j in 0..cols {
                a.swap(at(p, j), at(rank, j));
            }
            negate = !negate;
        }
        let piv = a[at(rank, c)].clone();
        for i in rank + 1..rows {
            let lead = a[at(i, c)].clone();
            for j in c + 1..cols {
                let v = piv
                    .ring_mul(&a[at(i, j)])
                    .ring_sub(&lead.ring_mul(&a[at(rank, j)]))
                    .exact_div(&prev);
                a[at(i, j)] = v;
            }
            a[at(i, c)] = T::ring_zero();
        }
        prev = piv;
        rank += 1;
    }
    let last = if negate { prev.ring_neg() } else { prev };
    (rank, last)
}

pub fn bareiss_rank<T: Domain>(m: &Matrix<T>) -> usize {
    bareiss(m).0
}

/// Determinant of a square matrix over an integral domain.
pub fn determinant<T: Domain>(m: &Matrix<T>) -> T {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    if m.rows() == 0 {
        return T::ring_one();
    }
    let (rank, last) = bareiss(m);
    if rank < m.rows() {
        T::ring_zero()
    } else {
        last
    }
}

/// Row-scales to integers; the rank is unchanged.
pub fn integer_rows(m: &QMatrix) -> Matrix<BigInt> {
    let mut data = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        let den = Rational::from_integer(common_denominator(m.row(i)));
        data.extend(m.row(i).iter().map(|x| (x * &den).to_integer()));
    }
    Matrix::new(m.rows(), m.cols(), data).expect("shape preserved")
}

/// Exact rank over Q.
pub fn rank(m: &QMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    if m.rows() > m.cols() {
        // Eliminating along the shorter dimension is cheaper.
        return bareiss_rank(&integer_rows(&m.transpose()));
    }
    bareiss_rank(&integer_rows(m))
}

/// Reduced row echelon form over Q and its pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.get(r, c).recip();
        for j in c..cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..cols {
                let v = a.get(i, j) - &f * a.get(r, j);
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of the right kernel {v : M v = 0}.
///
/// One vector per free column f of the reduced echelon form: v_f = 1, the
/// pivot coordinates are minus the corresponding echelon entries, and all
/// other free coordinates vanish. The basis is therefore canonical for the
/// kernel and independent of elimination order.
pub fn kernel_basis(m: &QMatrix) -> Vec<Vec<Rational>> {
    let cols = m.cols();
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect()
}

/// Basis of the left kernel {w : wᵀ M = 0}.
pub fn left_kernel_basis(m: &QMatrix) -> Vec<Vec<Rational>> {
    kernel_basis(&m.transpose())
}

/// Canonical basis (rows of the reduced echelon form) of the span of `vectors`.
pub fn span_basis(vectors: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec(), Some(dim)).expect("uniform vector length");
    let (r, pivots) = rref(&m);
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Exact equality of two spans.
pub fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>], dim: usize) -> bool {
    span_basis(a, dim) == span_basis(b, dim)
}

/// Rank of a polynomial matrix over the rational function field Q(λ),
/// by fraction-free elimination with polynomial pivots.
pub fn rank_over_function_field(p: &PolyMatrix) -> usize {
    bareiss_rank(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, UniPoly};
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&QMatrix::zeros(3, 4)), 0);
        assert_eq!(rank(&QMatrix::identity(3)), 3);
        assert_eq!(rank(&QMatrix::from_ints(&[&[1, 2], &[2, 4], &[3, 6]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&QMatrix::identity(2)).is_empty());
        assert_eq!(kernel_basis(&QMatrix::zeros(2, 3)).len(), 3);
        let m = QMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel_basis(&m);
        assert_eq!(k, vec![vec![rat(-2), rat(1), rat(0)], vec![rat(-3), rat(0), rat(1)]]);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn determinant_sign() {
        let m = QMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&m), rat(-1));
        let m = QMatrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(determinant(&m), rat(18));
    }

    #[test]
    fn function_field_rank_examples() {
        let lam = UniPoly::from_ints(&[0, 1]);
        let row = Matrix::from_rows(vec![vec![UniPoly::one(), lam.clone()]], None).unwrap();
        assert_eq!(rank_over_function_field(&row), 1);
        let diag = Matrix::from_rows(
            vec![vec![lam.clone(), UniPoly::zero()], vec![UniPoly::zero(), lam.clone()]],
            None,
        )
        .unwrap();
        assert_eq!(rank_over_function_field(&diag), 2);
        assert_eq!(rank_over_function_field(&PolyMatrix::zeros(2, 3)), 0);
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = QMatrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            prop::collection::vec(-2i64..=2, r * c).prop_map(move |v| {
                Matrix::new(r, c, v.into_iter().map(rat).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity_both_sides(m in small_matrix(5)) {
            let r = rank(&m);
            prop_assert_eq!(kernel_basis(&m).len(), m.cols() - r);
            prop_assert_eq!(left_kernel_basis(&m).len(), m.rows() - r);
            for v in kernel_basis(&m) {
                prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
            }
            prop_assert_eq!(rref(&m).1.len(), r);
        }

        #[test]
        fn function_field_rank_dominates_specializations(
            a in prop::collection::vec(-2i64..=2, 12),
            b in prop::collection::vec(-2i64..=2, 12),
        ) {
            let qa = Matrix::new(3, 4, a.into_iter().map(rat).collect()).unwrap();
            let qb = Matrix::new(3, 4, b.into_iter().map(rat).collect()).unwrap();
            let p = QMatrix::linear_pencil(&qa, &qb);
            let r = rank_over_function_field(&p);
            // A nonzero r×r minor has degree ≤ 3, so 4 points certify r.
            let best = (0..4).map(|t| rank(&p.eval(&rat(t)))).max().unwrap();
            prop_assert_eq!(r, best);
            for t in -3..8 {
                prop_assert!(rank(&p.eval(&rat(t))) <= r);
            }
        }
    }
}
