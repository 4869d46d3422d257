//! A tiny deterministic PRNG.
//!
//! Seeded generation and the audit harness must produce byte-identical output
//! across platforms and releases, so we use a fixed splitmix64 rather than an
//! external RNG whose stream may change between versions.

use crate::sign::Sign;

/// splitmix64: a small, fast, well-mixed 64-bit generator with a fixed stream.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..bound`. Plain modulo: the bias is irrelevant
    /// for the tiny bounds used here and keeps the stream trivially portable.
    ///
    /// # Panics
    /// Panics if `bound == 0`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below(0)");
        self.next_u64() % bound
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    pub fn sign(&mut self) -> Sign {
        if self.coin() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Derives an independent child generator. Used to give each instance in a
    /// seeded sweep its own stream regardless of evaluation order.
    pub fn split(&mut self) -> SplitMix64 {
        SplitMix64::new(self.next_u64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_stream() {
        // Reference values for seed 0; these pin the stream forever.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn same_seed_same_stream() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }
}
