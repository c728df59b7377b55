//! Deterministic splittable PRNG (SplitMix64).
//!
//! State advances by the golden-ratio increment `0x9E3779B97F4A7C15`; the
//! output mix is `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
//! z *= 0x94D049BB133111EB; z ^= z >> 31`. A child stream for index `i` is
//! seeded with the mixed value of `seed ^ mix(i + 1)`, so trial streams
//! depend only on `(seed, trial index)`.

use num_bigint::BigInt;

use crate::exactmath::Rational;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for `(seed, index)`.
    pub fn stream(seed: u64, index: u64) -> Self {
        SplitMix64::new(mix(seed ^ mix(index.wrapping_add(1))))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform integer in `[-bound, bound]`.
    pub fn int_in(&mut self, bound: u64) -> i128 {
        let span = 2 * bound as u128 + 1;
        // Lemire's widening multiply; the bias is below 2^-64 · span.
        let r = ((self.next_u64() as u128 * span) >> 64) as i128;
        r - bound as i128
    }

    pub fn rational_in(&mut self, bound: u64) -> Rational {
        Rational::from_integer(BigInt::from(self.int_in(bound)))
    }

    pub fn vector(&mut self, len: usize, bound: u64) -> Vec<Rational> {
        (0..len).map(|_| self.rational_in(bound)).collect()
    }
}
