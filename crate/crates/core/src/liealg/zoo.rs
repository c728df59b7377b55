//! Built-in example representations with their known invariants.

use crate::error::{Error, Result};
use crate::exactmath::{rat, MultiPoly, Rational};
use crate::linalg::QMatrix;

use super::{LieAlgebra, Representation};

/// Which representation of the algebra an entry denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZooRep {
    Coadjoint,
    /// Explicit matrices shipped with the entry.
    Standard,
}

/// Expected Jordan–Kronecker data for an entry, used by the self-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZooExpectation {
    pub eps: Vec<usize>,
    pub eta: Vec<usize>,
    /// Eigenvalue-free Jordan shape (see `ElementaryDivisorStructure::shape`).
    pub jordan_shape: Vec<Vec<usize>>,
    pub k_hor: usize,
    pub k_vert: usize,
    pub deg_d: usize,
    pub dim_st_reg: usize,
    pub codim_orbit_reg: usize,
}

#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: LieAlgebra,
    pub kind: ZooRep,
    pub representation: Representation,
    /// Known polynomial invariants of the representation (possibly none).
    pub invariants: Vec<MultiPoly>,
    pub expected: ZooExpectation,
}

impl ZooEntry {
    pub fn is_coadjoint(&self) -> bool {
        self.kind == ZooRep::Coadjoint
    }
}

pub const ZOO_NAMES: [&str; 6] = ["abelian2", "aff1", "h3", "sl2", "so3", "sl2-std"];

fn algebra(dim: usize, brackets: &[(usize, usize, usize, i64)]) -> LieAlgebra {
    LieAlgebra::new(dim, brackets.iter().map(|&(i, j, k, c)| (i, j, k, rat(c))))
        .expect("zoo algebras satisfy Jacobi")
}

fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
    MultiPoly::from_int_terms(nvars, terms)
}

fn expect(
    eps: &[usize],
    eta: &[usize],
    jordan_shape: &[&[usize]],
    dims: (usize, usize),
) -> ZooExpectation {
    let deg_d = jordan_shape.iter().map(|s| s.iter().sum::<usize>()).sum();
    ZooExpectation {
        eps: eps.to_vec(),
        eta: eta.to_vec(),
        jordan_shape: jordan_shape.iter().map(|s| s.to_vec()).collect(),
        k_hor: eps.iter().map(|e| e + 1).sum(),
        k_vert: eta.iter().map(|e| e + 1).sum(),
        deg_d,
        dim_st_reg: dims.0,
        codim_orbit_reg: dims.1,
    }
}

fn coadjoint_entry(
    name: &'static str,
    description: &'static str,
    algebra: LieAlgebra,
    invariants: Vec<MultiPoly>,
    expected: ZooExpectation,
) -> ZooEntry {
    ZooEntry {
        name,
        description,
        representation: Representation::coadjoint(&algebra),
        algebra,
        kind: ZooRep::Coadjoint,
        invariants,
        expected,
    }
}

/// sl₂ in the basis (e, h, f): [h,e] = 2e, [h,f] = −2f, [e,f] = h.
pub fn sl2() -> LieAlgebra {
    algebra(3, &[(0, 1, 0, -2), (1, 2, 2, -2), (0, 2, 1, 1)])
}

pub fn entry(name: &str) -> Result<ZooEntry> {
    let e = match name {
        "abelian2" => coadjoint_entry(
            "abelian2",
            "abelian 2-dimensional algebra; its coadjoint representation is zero",
            LieAlgebra::abelian(2),
            vec![poly(2, &[(&[1], 1)]), poly(2, &[(&[0, 1], 1)])],
            expect(&[0, 0], &[0, 0], &[], (2, 2)),
        ),
        "aff1" => coadjoint_entry(
            "aff1",
            "affine line algebra aff(1): [e1, e2] = e2",
            algebra(2, &[(0, 1, 1, 1)]),
            vec![],
            expect(&[], &[], &[&[1, 1]], (0, 0)),
        ),
        "h3" => coadjoint_entry(
            "h3",
            "Heisenberg algebra: [e1, e2] = e3",
            algebra(3, &[(0, 1, 2, 1)]),
            vec![poly(3, &[(&[0, 0, 1], 1)])],
            expect(&[0], &[0], &[&[1, 1]], (1, 1)),
        ),
        "sl2" => coadjoint_entry(
            "sl2",
            "sl(2) in the basis (e, h, f)",
            sl2(),
            vec![poly(3, &[(&[0, 2], 1), (&[1, 0, 1], 4)])],
            expect(&[1], &[1], &[], (1, 1)),
        ),
        "so3" => coadjoint_entry(
            "so3",
            "so(3): [e1, e2] = e3, [e2, e3] = e1, [e3, e1] = e2",
            algebra(3, &[(0, 1, 2, 1), (1, 2, 0, 1), (0, 2, 1, -1)]),
            vec![poly(3, &[(&[2], 1), (&[0, 2], 1), (&[0, 0, 2], 1)])],
            expect(&[1], &[1], &[], (1, 1)),
        ),
        "sl2-std" => {
            let alg = sl2();
            let rho = vec![
                QMatrix::from_ints(&[&[0, 1], &[0, 0]]),
                QMatrix::from_ints(&[&[1, 0], &[0, -1]]),
                QMatrix::from_ints(&[&[0, 0], &[1, 0]]),
            ];
            ZooEntry {
                name: "sl2-std",
                description: "standard 2-dimensional representation of sl(2)",
                representation: Representation::new(alg.clone(), rho)
                    .expect("standard representation is a homomorphism"),
                algebra: alg,
                kind: ZooRep::Standard,
                invariants: vec![],
                expected: expect(&[2], &[], &[], (1, 0)),
            }
        }
        other => return Err(Error::UnknownZoo(other.to_string())),
    };
    Ok(e)
}

pub fn all() -> Vec<ZooEntry> {
    ZOO_NAMES.iter().map(|n| entry(n).unwrap()).collect()
}

/// A point of V given by small integers.
pub fn point(coords: &[i64]) -> Vec<Rational> {
    coords.iter().map(|&c| rat(c)).collect()
}
