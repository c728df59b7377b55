use std::fmt;

use algebraics::polynomial::Polynomial;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, integer_content, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Homogeneous binary form in (λ, μ).
///
/// `coeffs[i]` is the coefficient of λ^i μ^(d−i), so `coeffs.len() = d + 1`.
/// A point (λ₀ : μ₀) of the projective line is a root when the form vanishes
/// there; the factor μ vanishes exactly at (1 : 0), the infinite point.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Dimension("a binary form needs degree + 1 coefficients".into()));
        }
        Ok(BinaryForm { coeffs })
    }

    /// μ^(d − deg p) · p(λ/μ) · μ^deg p, i.e. the degree-`d` homogenization of `p`.
    pub fn homogenize(p: &UniPoly, degree: usize) -> Self {
        assert!(p.degree().is_none_or(|k| k <= degree));
        BinaryForm {
            coeffs: (0..=degree).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn mu() -> Self {
        BinaryForm {
            coeffs: vec![Rational::one(), Rational::zero()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// F(λ, 1).
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Exponent of μ dividing the form.
    pub fn mu_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    pub fn is_mu(&self) -> bool {
        self.degree() == 1 && self.coeffs[1].is_zero()
    }

    pub fn eval(&self, lambda: &Rational, mu: &Rational) -> Rational {
        let d = self.degree();
        let mut acc = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * pow(lambda, i) * pow(mu, d - i);
        }
        acc
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> BinaryForm {
        let one = BinaryForm {
            coeffs: vec![Rational::one()],
        };
        (0..k).fold(one, |acc, _| acc.mul(self))
    }

    /// For a linear form λ − cμ, the finite eigenvalue c; `None` for μ or for
    /// forms of higher degree.
    pub fn linear_root(&self) -> Option<Rational> {
        if self.degree() != 1 || self.coeffs[1].is_zero() {
            return None;
        }
        Some(-&self.coeffs[0] / &self.coeffs[1])
    }

    /// True when `self = c · other` for a nonzero rational c.
    pub fn proportional(&self, other: &BinaryForm) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let pivot = self.coeffs.iter().position(|c| !c.is_zero());
        let Some(i) = pivot else {
            return other.is_zero();
        };
        if other.coeffs[i].is_zero() {
            return false;
        }
        let c = &other.coeffs[i] / &self.coeffs[i];
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| &(a * &c) == b)
    }
}

fn pow(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mut mono = String::new();
                match i {
                    0 => {}
                    1 => mono.push('λ'),
                    _ => mono.push_str(&format!("λ^{i}")),
                }
                match d - i {
                    0 => {}
                    1 => mono.push('μ'),
                    k => mono.push_str(&format!("μ^{k}")),
                }
                (c.clone(), mono)
            });
        f.write_str(&super::render_terms(terms))
    }
}

/// Factor a nonzero binary form into irreducible factors over Q.
///
/// Finite factors are normalized monic in λ and sorted by degree and then
/// coefficients; the factor μ, when present, comes last. The product of
/// `factor^multiplicity` equals the input up to a nonzero rational constant.
pub fn binary_factor(form: &BinaryForm) -> Result<Vec<(BinaryForm, usize)>> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    let mu_mult = form.mu_multiplicity();
    let finite = form.dehomogenize();
    let mut out: Vec<(BinaryForm, usize)> = factor_univariate(&finite)
        .into_iter()
        .map(|(p, m)| {
            let d = p.degree().unwrap();
            (BinaryForm::homogenize(&p, d), m)
        })
        .collect();
    out.sort_by(|a, b| factor_order(&a.0, &b.0));
    if mu_mult > 0 {
        out.push((BinaryForm::mu(), mu_mult));
    }
    Ok(out)
}

fn factor_order(a: &BinaryForm, b: &BinaryForm) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs.cmp(&b.coeffs))
}

/// Irreducible factorization over Q of a univariate polynomial, monic factors.
pub fn factor_univariate(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    if p.is_constant() {
        return Vec::new();
    }
    // Clear denominators and content so the integer factorizer sees a
    // primitive polynomial.
    let den = common_denominator(p.coeffs());
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let content = integer_content(&ints);
    let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    let factors = Polynomial::<BigInt>::from(prim).factor();
    factors
        .polynomial_factors
        .into_iter()
        .map(|f| {
            let coeffs: Vec<Rational> = f
                .polynomial
                .into_coefficients()
                .into_iter()
                .map(Rational::from_integer)
                .collect();
            (UniPoly::new(coeffs).monic(), f.power)
        })
        .filter(|(q, _)| !q.is_constant())
        .collect()
}

/// Positive-leading primitive integer representative, used for display.
pub fn primitive_integer_form(form: &BinaryForm) -> BinaryForm {
    let den = common_denominator(form.coeffs());
    let ints: Vec<BigInt> = form
        .coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let content = integer_content(&ints);
    if content.is_zero() {
        return form.clone();
    }
    let lead_negative = ints.iter().rev().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    let sign = if lead_negative { -BigInt::one() } else { BigInt::one() };
    BinaryForm {
        coeffs: ints
            .iter()
            .map(|c| Rational::from_integer(c * &sign / &content))
            .collect(),
    }
}
