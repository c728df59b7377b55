//! Exact scalars and polynomial rings.

pub mod binary;
pub mod domain;
pub mod multipoly;
pub mod rational;
pub mod unipoly;

pub use binary::{binary_factor, BinaryForm};
pub use domain::Domain;
pub use multipoly::{multi_gcd, Monomial, MultiPoly};
pub use rational::{parse_rational, rat, ratio, Rational, RationalStr};
pub use unipoly::{uni_gcd, uni_gcd_all, UniPoly};

use num_traits::{One, Signed};

/// Joins `(coefficient, monomial)` pairs into `a·m + b·n - …` form.
/// An empty monomial string denotes the constant term.
pub(crate) fn render_terms(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (i, (c, mono)) in terms.enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else if a.is_integer() {
            out.push_str(&format!("{a}{mono}"));
        } else {
            out.push_str(&format!("({a}){mono}"));
        }
    }
    out
}
