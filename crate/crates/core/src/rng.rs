//! Minimal deterministic RNG.
//!
//! SplitMix64 (Steele, Lea, Vigna; public domain reference constants). The
//! harness freezes byte-identical reports per seed, so the generator is owned
//! here rather than borrowed from a crate whose stream could shift between
//! versions.

pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..bound` via the multiply-shift reduction.
    /// The modulo bias is below 2^-53 at this crate's bounds, far under any
    /// statistical sensitivity of the harness.
    ///
    /// # Panics
    ///
    /// Panics if `bound == 0`.
    pub(crate) fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        (((self.next_u64() as u128) * (bound as u128)) >> 64) as u64
    }
}
