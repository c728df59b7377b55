//! Sparse multivariate polynomials over Q.
//!
//! Terms are kept in a map ordered by graded lexicographic order (total
//! degree first, then lexicographic with x₁ > x₂ > …), so the last entry is
//! the leading term. Exponent vectors are stored without trailing zeros,
//! which lets constants and polynomials in fewer variables mix freely; the
//! declared variable count only affects serialization and evaluation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::domain::Domain;
use super::rational::{common_denominator, integer_content, rat, Rational, RationalStr};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n.max(self.0.len())).map(|i| self.exp(i)).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e <= other.exp(i))
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let n = other.0.len();
        Monomial::new((0..n).map(|i| other.exp(i) - self.exp(i)).collect())
    }

    fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.padded(i + 1);
        v[i] = e;
        Monomial::new(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, [(Monomial::one(), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The coordinate function x_{i+1} (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        Self::from_terms(nvars, [(Monomial::var(i), Rational::one())])
    }

    /// Σ coeffs[i] · x_{i+1}
    pub fn linear_form(coeffs: &[Rational]) -> Self {
        Self::from_terms(
            coeffs.len(),
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(i), c.clone())),
        )
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            p.nvars = p.nvars.max(m.0.len());
            p.add_term(m, c);
        }
        p
    }

    /// Builds from `(exponents, coefficient)` pairs with integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.to_vec()), rat(*c))),
        )
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn with_nvars(mut self, nvars: usize) -> Self {
        self.nvars = self.nvars.max(nvars);
        self
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.0.is_empty())
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::total_degree)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        MultiPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(k, v)| (k.mul(m), v * c)),
        )
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        MultiPoly::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.exp(var) > 0).map(|(m, c)| {
                let e = m.exp(var);
                (m.with_exp(var, e - 1), c * rat(e as i64))
            }),
        )
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// f(x + shift).
    pub fn translate(&self, shift: &[Rational]) -> Self {
        let n = self.nvars.max(shift.len());
        let shifted_vars: Vec<MultiPoly> = (0..n)
            .map(|i| {
                let s = shift.get(i).cloned().unwrap_or_else(Rational::zero);
                &MultiPoly::var(n, i) + &MultiPoly::constant(n, s)
            })
            .collect();
        self.compose(&shifted_vars)
    }

    /// Substitutes `images[i]` for x_{i+1}.
    pub fn compose(&self, images: &[MultiPoly]) -> Self {
        let nv = images.iter().map(|p| p.nvars).max().unwrap_or(0);
        let mut out = MultiPoly::zero(nv);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(nv, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &images[i];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Homogeneous part of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient when `divisor` divides `self`, else `None`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lm_d, lc_d) = divisor.leading_term()?;
        let (lm_d, lc_d) = (lm_d.clone(), lc_d.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars.max(divisor.nvars));
        while let Some((lm_r, lc_r)) = rem.leading_term() {
            if !lm_d.divides(lm_r) {
                return None;
            }
            let m = lm_d.quotient_of(lm_r);
            let c = lc_r / &lc_d;
            rem = &rem - &divisor.mul_monomial(&m, &c);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Scales to primitive integer coefficients with a positive leading
    /// coefficient. The zero polynomial is returned unchanged.
    pub fn normalized(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let den = common_denominator(self.terms.values());
        let ints: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let content = integer_content(&ints);
        let mut factor = Rational::new(den, content);
        if self.leading_term().unwrap().1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        (0..k).fold(MultiPoly::one(self.nvars), |acc, _| &acc * self)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms = self.terms.iter().rev().map(|(m, c)| {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            (c.clone(), mono.join("*"))
        });
        super::render_terms(terms)
    }

    /// Splits into coefficients of powers of x_{var+1}: `self = Σ cᵢ·x^i`.
    fn as_univariate(&self, var: usize) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(self.nvars); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            out[m.exp(var) as usize].add_term(m.with_exp(var, 0), c.clone());
        }
        out
    }

    fn from_univariate(nvars: usize, coeffs: &[MultiPoly], var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                out.add_term(m.with_exp(var, k as u32), v.clone());
            }
        }
        out
    }

    fn first_variable(&self) -> Option<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
            .min()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl std::ops::Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl std::ops::Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars.max(rhs.nvars));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Domain for MultiPoly {
    fn ring_zero() -> Self {
        MultiPoly::zero(0)
    }
    fn ring_one() -> Self {
        MultiPoly::one(0)
    }
    fn ring_is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, divisor: &Self) -> Self {
        self.div_exact(divisor)
            .expect("inexact multivariate division")
    }
    fn weight(&self) -> usize {
        self.terms.len()
    }
}

/// Normalized gcd of two polynomials (see [`MultiPoly::normalized`]);
/// `gcd(0, 0) = 0`.
pub fn gcd2(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let nvars = f.nvars.max(g.nvars);
    if f.is_zero() {
        return g.normalized().with_nvars(nvars);
    }
    if g.is_zero() {
        return f.normalized().with_nvars(nvars);
    }
    let var = match (f.first_variable(), g.first_variable()) {
        (None, _) | (_, None) => return MultiPoly::one(nvars),
        (Some(a), Some(b)) => a.min(b),
    };
    let fu = f.as_univariate(var);
    let gu = g.as_univariate(var);
    let cf = content(&fu);
    let cg = content(&gu);
    let c = gcd2(&cf, &cg);
    let mut a = divide_coeffs(&fu, &cf);
    let mut b = divide_coeffs(&gu, &cg);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while b.len() > 1 {
        let r = pseudo_remainder(&a, &b);
        a = b;
        if r.is_empty() {
            b = Vec::new();
            break;
        }
        let cr = content(&r);
        b = divide_coeffs(&r, &cr);
    }
    if b.len() == 1 {
        // A nonzero remainder of degree 0: the primitive parts are coprime.
        return c.with_nvars(nvars);
    }
    let cpa = content(&a);
    let pa = MultiPoly::from_univariate(nvars, &divide_coeffs(&a, &cpa), var);
    (&pa * &c).normalized().with_nvars(nvars)
}

fn content(coeffs: &[MultiPoly]) -> MultiPoly {
    let mut g = MultiPoly::zero(0);
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd2(&g, c);
        if g.is_constant() {
            break;
        }
    }
    g
}

fn divide_coeffs(coeffs: &[MultiPoly], d: &MultiPoly) -> Vec<MultiPoly> {
    let out: Vec<MultiPoly> = coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect();
    // Keep integer coefficients small between pseudo-division steps.
    let values: Vec<&Rational> = out.iter().flat_map(|c| c.terms.values()).collect();
    if values.is_empty() {
        return Vec::new();
    }
    let den = common_denominator(values.iter().copied());
    let ints: Vec<BigInt> = values
        .iter()
        .map(|c| (*c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let scale = Rational::new(den, integer_content(&ints));
    trim(out.into_iter().map(|c| c.scale(&scale)).collect())
}

fn trim(mut v: Vec<MultiPoly>) -> Vec<MultiPoly> {
    while v.last().is_some_and(MultiPoly::is_zero) {
        v.pop();
    }
    v
}

/// Sparse pseudo-remainder of `a` by `b` (univariate over a polynomial ring).
fn pseudo_remainder(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = trim(a.to_vec());
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<MultiPoly> = r.iter().map(|c| c * lb).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = &next[i + shift] - &(&lr * bc);
        }
        r = trim(next);
    }
    r
}

/// Normalized gcd of a family; errors when every member is zero.
pub fn multi_gcd(ps: &[MultiPoly]) -> Result<MultiPoly> {
    if ps.iter().all(MultiPoly::is_zero) {
        return Err(Error::AllZero);
    }
    let nvars = ps.iter().map(|p| p.nvars).max().unwrap_or(0);
    let mut g = MultiPoly::zero(nvars);
    for p in ps {
        if p.is_zero() {
            continue;
        }
        g = gcd2(&g, p);
        if g.is_constant() {
            break;
        }
    }
    Ok(g.with_nvars(nvars))
}

/// Wire form: `{exponents: [...], coeff: "p/q"}`, leading term first.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TermRepr {
    pub exponents: Vec<u32>,
    pub coeff: RationalStr,
}

impl MultiPoly {
    pub fn to_repr(&self) -> Vec<TermRepr> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermRepr {
                exponents: m.padded(self.nvars),
                coeff: RationalStr(c.clone()),
            })
            .collect()
    }

    pub fn from_repr(terms: &[TermRepr], nvars: Option<usize>) -> Result<Self> {
        let n = match nvars {
            Some(n) => n,
            None => terms.first().map_or(0, |t| t.exponents.len()),
        };
        for (i, t) in terms.iter().enumerate() {
            if t.exponents.len() != n {
                return Err(Error::input(
                    format!("term {i}"),
                    format!("expected {n} exponents, found {}", t.exponents.len()),
                ));
            }
        }
        Ok(MultiPoly::from_terms(
            n,
            terms
                .iter()
                .map(|t| (Monomial::new(t.exponents.clone()), t.coeff.0.clone())),
        ))
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(d)?;
        MultiPoly::from_repr(&terms, None).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![0, 2]);
        let b = Monomial::new(vec![1, 0, 0]);
        let c = Monomial::new(vec![1, 1]);
        let d = Monomial::new(vec![2]);
        assert!(b < a);
        assert!(a < c);
        assert!(c < d);
    }

    #[test]
    fn monomial_gcd() {
        // gcd(x1 x2, x1 x3) = x1
        let f = &x(3, 0) * &x(3, 1);
        let g = &x(3, 0) * &x(3, 2);
        assert_eq!(multi_gcd(&[f, g]).unwrap(), x(3, 0));
    }

    #[test]
    fn self_gcd_is_normalized() {
        // gcd(p, p) for p = −(1/2)x1² + 3x2
        let p = &x(2, 0).pow(2).scale(&Rational::new((-1).into(), 2.into()))
            + &x(2, 1).scale(&rat(3));
        let g = multi_gcd(&[p.clone(), p]).unwrap();
        assert_eq!(g, &x(2, 0).pow(2) - &x(2, 1).scale(&rat(6)));
    }

    #[test]
    fn planted_common_factor() {
        // gcd(x3²(x1+x2), x3(x1²−x2²)) = x3(x1+x2)
        let s = &x(3, 0) + &x(3, 1);
        let d = &x(3, 0) - &x(3, 1);
        let f = &x(3, 2).pow(2) * &s;
        let g = &x(3, 2) * &(&s * &d);
        let want = &x(3, 2) * &s;
        let got = multi_gcd(&[f.clone(), g.clone()]).unwrap();
        assert_eq!(got, want);
        assert!(f.div_exact(&got).is_some());
        assert!(g.div_exact(&got).is_some());
    }

    #[test]
    fn all_zero_rejected() {
        assert!(matches!(
            multi_gcd(&[MultiPoly::zero(2), MultiPoly::zero(2)]),
            Err(Error::AllZero)
        ));
    }

    #[test]
    fn exact_division_detects_nondivisibility() {
        let f = &x(2, 0).pow(2) + &x(2, 1);
        assert!(f.div_exact(&x(2, 0)).is_none());
        let g = &f * &(&x(2, 0) - &x(2, 1));
        assert_eq!(g.div_exact(&f).unwrap(), &x(2, 0) - &x(2, 1));
    }

    #[test]
    fn translate_and_components() {
        // f = x1 x2, f(x + (1, 2)) = x1 x2 + 2 x1 + x2 + 2
        let f = &x(2, 0) * &x(2, 1);
        let t = f.translate(&[rat(1), rat(2)]);
        assert_eq!(t.homogeneous_component(0), MultiPoly::constant(2, rat(2)));
        assert_eq!(t.homogeneous_component(1), &x(2, 0).scale(&rat(2)) + &x(2, 1));
        assert_eq!(t.homogeneous_component(2), f);
    }

    #[test]
    fn wire_format() {
        let f = &x(2, 0).scale(&Rational::new(1.into(), 2.into())) - &x(2, 1).pow(2);
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(
            js,
            r#"[{"exponents":[0,2],"coeff":"-1"},{"exponents":[1,0],"coeff":"1/2"}]"#
        );
        let back: MultiPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
    }

    fn small_poly(nv: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, nv), -4i64..=4), 0..4).prop_map(
            move |ts| {
                MultiPoly::from_terms(nv, ts.into_iter().map(|(e, c)| (Monomial::new(e), rat(c))))
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn gcd_divides_and_cofactors_coprime(
            a in small_poly(3), b in small_poly(3), c in small_poly(3)
        ) {
            let f = &a * &c;
            let g = &b * &c;
            prop_assume!(!f.is_zero() || !g.is_zero());
            let h = multi_gcd(&[f.clone(), g.clone()]).unwrap();
            let qf = f.div_exact(&h);
            let qg = g.div_exact(&h);
            prop_assert!(qf.is_some());
            prop_assert!(qg.is_some());
            let rest = multi_gcd(&[qf.unwrap(), qg.unwrap()]).unwrap();
            prop_assert!(rest.is_constant());
            if !c.is_zero() {
                prop_assert!(h.div_exact(&c).is_some());
            }
        }
    }
}
