//! Small deterministic pseudo-random generator (SplitMix64).
//!
//! Every randomized choice in the library — witness points, generic coordinates,
//! interpolation samples — flows through this generator with an explicit seed, so runs
//! are reproducible byte-for-byte across platforms and dependency upgrades.

/// SplitMix64: a tiny, high-quality, fully deterministic 64-bit generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, bound) with rejection sampling; bound must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// Uniform integer in the closed range [lo, hi].
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }

    /// A small nonzero integer in [−bound, bound] \ {0}.
    pub fn small_nonzero(&mut self, bound: i64) -> i64 {
        assert!(bound >= 1);
        loop {
            let v = self.range_i64(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_is_stable() {
        // Reference values for seed 0 from the published SplitMix64 test vector.
        let mut r = SplitMix64::new(0);
        let got: Vec<u64> = (0..3).map(|_| r.next_u64()).collect();
        assert_eq!(got, vec![0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]);
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut r = SplitMix64::new(42);
        for _ in 0..1000 {
            let v = r.below(7);
            assert!(v < 7);
            let w = r.range_i64(-3, 3);
            assert!((-3..=3).contains(&w));
            let s = r.small_nonzero(5);
            assert!(s != 0 && (-5..=5).contains(&s));
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let mut a = SplitMix64::new(123456789);
        let mut b = SplitMix64::new(123456789);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }
}
