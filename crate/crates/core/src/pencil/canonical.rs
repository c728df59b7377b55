//! Canonical blocks of the Kronecker–Jordan normal form, for building
//! pencils with known invariants.

use crate::exactmath::{rat, Rational};
use crate::linalg::QMatrix;

use super::Pencil;

#[derive(Clone, Debug, PartialEq)]
pub enum Block {
    /// A = λ₀I + N (superdiagonal ones), B = I. Rank of A − λB drops at λ₀.
    Jordan { eigenvalue: Rational, size: usize },
    /// A = I, B = N.
    Infinite { size: usize },
    /// ε × (ε + 1): A = [I | 0], B = [0 | I].
    Horizontal { eps: usize },
    /// (η + 1) × η: A = [I ; 0], B = [0 ; I].
    Vertical { eta: usize },
}

impl Block {
    pub fn pencil(&self) -> Pencil {
        let (a, b) = match self {
            Block::Jordan { eigenvalue, size } => {
                let n = *size;
                let a = QMatrix::from_fn(n, n, |i, j| {
                    if i == j {
                        eigenvalue.clone()
                    } else if j == i + 1 {
                        rat(1)
                    } else {
                        rat(0)
                    }
                });
                (a, QMatrix::identity(n))
            }
            Block::Infinite { size } => {
                let n = *size;
                let b = QMatrix::from_fn(n, n, |i, j| rat((j == i + 1) as i64));
                (QMatrix::identity(n), b)
            }
            Block::Horizontal { eps } => {
                let e = *eps;
                (
                    QMatrix::from_fn(e, e + 1, |i, j| rat((i == j) as i64)),
                    QMatrix::from_fn(e, e + 1, |i, j| rat((j == i + 1) as i64)),
                )
            }
            Block::Vertical { eta } => {
                let e = *eta;
                (
                    QMatrix::from_fn(e + 1, e, |i, j| rat((i == j) as i64)),
                    QMatrix::from_fn(e + 1, e, |i, j| rat((i == j + 1) as i64)),
                )
            }
        };
        Pencil::new(a, b).expect("block shapes agree")
    }
}

/// Block-diagonal assembly.
pub fn assemble(blocks: &[Block]) -> Pencil {
    blocks.iter().fold(
        Pencil::new(QMatrix::zeros(0, 0), QMatrix::zeros(0, 0)).unwrap(),
        |acc, b| acc.direct_sum(&b.pencil()),
    )
}
