use super::matrix::PolyMatrix;
use crate::exactmath::UniPoly;

fn min_degree_entry(a: &PolyMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in from..a.rows() {
        for j in from..a.cols() {
            if let Some(d) = a.get(i, j).degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                    if d == 0 {
                        return Some((i, j));
                    }
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Invariant factors d₁ | d₂ | … | d_r (monic, nonzero) of a matrix over Q[λ].
///
/// Elimination by Euclidean row and column operations with a minimal-degree
/// pivot at every step; the product of the first k factors is the monic gcd
/// of all k×k minors.
pub fn smith_normal_form(p: &PolyMatrix) -> Vec<UniPoly> {
    let mut a = p.clone();
    let (rows, cols) = a.shape();
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_degree_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let piv = a.get(t, t).clone();
            let mut smaller: Option<(usize, usize)> = None;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = a.get(i, t).div_rem(&piv);
                for j in t..cols {
                    let v = a.get(i, j) - &(&q * a.get(t, j));
                    a.set(i, j, v);
                }
                if !r.is_zero() && smaller.is_none() {
                    smaller = Some((i, t));
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = a.get(t, j).div_rem(&piv);
                for i in t..rows {
                    let v = a.get(i, j) - &(&q * a.get(i, t));
                    a.set(i, j, v);
                }
                if !r.is_zero() && smaller.is_none() {
                    smaller = Some((t, j));
                }
            }
            if let Some((i, j)) = smaller {
                // A remainder of lower degree than the pivot: promote it.
                let (i, j) = lowest_in_cross(&a, t).unwrap_or((i, j));
                a.swap_rows(t, i);
                a.swap_cols(t, j);
                continue;
            }
            let offending = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).rem(&piv).is_zero());
            match offending {
                Some((i, _)) => {
                    // Fold the row in; the next sweep produces a remainder.
                    for j in t..cols {
                        let v = a.get(t, j) + a.get(i, j);
                        a.set(t, j, v);
                    }
                }
                None => break,
            }
        }
        out.push(a.get(t, t).monic());
        t += 1;
    }
    out
}

/// Minimal-degree nonzero entry in row t or column t, excluding the pivot.
fn lowest_in_cross(a: &PolyMatrix, t: usize) -> Option<(usize, usize)> {
    let col = (t + 1..a.rows()).map(|i| (i, t));
    let row = (t + 1..a.cols()).map(|j| (t, j));
    col.chain(row)
        .filter_map(|(i, j)| a.get(i, j).degree().map(|d| (d, i, j)))
        .min_by_key(|&(d, _, _)| d)
        .map(|(_, i, j)| (i, j))
}
