//! Seeded pseudorandomness for sampling and search.
//!
//! Every randomized operation in this crate draws from [`SplitMix64`]
//! (Steele/Lea/Vigna), a fixed 64-bit generator chosen so that runs reproduce
//! bit-exactly across platforms, versions, and thread counts. Parallel workers
//! never share a generator: worker `i` uses the substream
//! [`SplitMix64::stream`]`(seed, i)`, so results depend only on `(seed, i)`
//! and not on scheduling.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// SplitMix64 generator with a documented, frozen stepping rule:
/// `state += GOLDEN; output = mix(state)` where `mix` is the standard
/// 30/27/31 xor-multiply finalizer.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Substream `index` of `seed`: a fresh generator seeded with
    /// `mix(seed ^ mix((index + 1) * GOLDEN))`. Distinct indices give
    /// decorrelated streams; `stream(seed, i)` never equals `new(seed)`.
    pub fn stream(seed: u64, index: u64) -> Self {
        SplitMix64::new(mix(seed ^ mix(index.wrapping_add(1).wrapping_mul(GOLDEN))))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform draw in `0..bound` via the 128-bit multiply-shift reduction
    /// (Lemire). No rejection loop; the bias is below 2^-40 for every bound
    /// used in this crate and the mapping is part of the frozen algorithm.
    #[inline]
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        ((u128::from(self.next_u64()) * u128::from(bound)) >> 64) as u64
    }

    /// Fisher-Yates shuffle driven by this stream.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_reference_outputs_for_seed_zero() {
        // First two outputs of the published splitmix64 with seed 0.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn streams_are_deterministic_and_distinct() {
        let a: Vec<u64> = (0..8).map(|_| 0).scan(SplitMix64::stream(42, 0), |r, _| Some(r.next_u64())).collect();
        let b: Vec<u64> = (0..8).map(|_| 0).scan(SplitMix64::stream(42, 0), |r, _| Some(r.next_u64())).collect();
        let c: Vec<u64> = (0..8).map(|_| 0).scan(SplitMix64::stream(42, 1), |r, _| Some(r.next_u64())).collect();
        let d: Vec<u64> = (0..8).map(|_| 0).scan(SplitMix64::stream(43, 0), |r, _| Some(r.next_u64())).collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }

    #[test]
    fn next_below_stays_in_range() {
        let mut rng = SplitMix64::new(7);
        for bound in [1u64, 2, 3, 13, 169, 2197] {
            for _ in 0..200 {
                assert!(rng.next_below(bound) < bound);
            }
        }
    }
}
