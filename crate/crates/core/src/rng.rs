//! Seeded draws for instance generation.
//!
//! The generator is SplitMix64 with its state set to the seed:
//!
//! ```text
//! state ← state + 0x9E3779B97F4A7C15            (mod 2⁶⁴)
//! z ← state
//! z ← (z ⊕ (z ≫ 30)) · 0xBF58476D1CE4E5B9       (mod 2⁶⁴)
//! z ← (z ⊕ (z ≫ 27)) · 0x94D049BB133111EB       (mod 2⁶⁴)
//! output z ⊕ (z ≫ 31)
//! ```
//!
//! A draw below `n` is `⌊output · n / 2⁶⁴⌋`. An integer in `[lo, hi]` is
//! `lo + below(hi − lo + 1)`, and a rational within bound `M` is
//! `p/q` with `p` in `[−M, M]` then `q` in `[1, M]`, in that order.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::projective::PPoint;
use crate::scalar::Rat;

#[derive(Clone, Debug)]
pub struct Draws {
    inner: SplitMix64,
}

impl Draws {
    pub fn new(seed: u64) -> Self {
        Draws { inner: SplitMix64::seed_from_u64(seed) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi as i128 - lo as i128 + 1) as u64;
        (lo as i128 + self.below(span) as i128) as i64
    }

    pub fn rat(&mut self, bound: u32) -> Rat {
        let m = bound.max(1) as i64;
        let p = self.int_in(-m, m);
        let q = self.int_in(1, m);
        Rat::frac(p, q)
    }

    pub fn nonzero_rat(&mut self, bound: u32) -> Rat {
        loop {
            let r = self.rat(bound);
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn point(&mut self, bound: u32) -> PPoint {
        let x = self.rat(bound);
        let y = self.rat(bound);
        PPoint::affine(x, y)
    }
}
