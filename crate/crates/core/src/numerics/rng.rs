//! Counter-based deterministic RNG with splittable sub-streams.
//!
//! Output depends only on (key, counter), so a stream can be reproduced from
//! its seed alone and sub-streams can be derived per (layer, purpose) without
//! sharing state. The mixer is the splitmix64 finalizer over a Weyl sequence.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn hash_str(s: &str) -> u64 {
    // FNV-1a 64
    let mut h = 0xCBF2_9CE4_8422_2325u64;
    for b in s.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

/// Deterministic counter-based generator.
#[derive(Debug, Clone)]
pub struct Rng {
    key: u64,
    counter: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { key: mix(seed ^ GOLDEN), counter: 0 }
    }

    /// Derive an independent sub-stream keyed by a purpose tag and an index
    /// (layer id, expert id, step, ...). Derivation does not advance `self`.
    pub fn substream(&self, purpose: &str, index: u64) -> Rng {
        let key = mix(self.key ^ hash_str(purpose) ^ index.wrapping_mul(GOLDEN));
        Rng { key, counter: 0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN)))
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn next_f32(&mut self) -> f32 {
        self.next_f64() as f32
    }

    /// Uniform integer in [0, n). n must be > 0.
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Standard normal via Box-Muller, computed in f64.
    pub fn normal(&mut self) -> f64 {
        let u1 = loop {
            let u = self.next_f64();
            if u > 0.0 {
                break u;
            }
        };
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }

    pub fn normal_f32(&mut self, std: f32) -> f32 {
        (self.normal() * std as f64) as f32
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Rng::new(7);
        let mut b = Rng::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn different_seeds_diverge_quickly() {
        let mut a = Rng::new(1);
        let mut b = Rng::new(2);
        let diverged = (0..64).any(|_| a.next_u64() != b.next_u64());
        assert!(diverged);
    }

    #[test]
    fn substreams_are_independent_of_parent_state() {
        let parent = Rng::new(9);
        let mut s1 = parent.substream("weights", 0);
        let mut s2 = parent.substream("weights", 0);
        assert_eq!(s1.next_u64(), s2.next_u64());
        let mut s3 = parent.substream("weights", 1);
        assert_ne!(s1.next_u64(), s3.next_u64());
        let mut s4 = parent.substream("data", 0);
        assert_ne!(s2.next_u64(), s4.next_u64());
    }

    #[test]
    fn uniform_in_unit_interval() {
        let mut r = Rng::new(3);
        for _ in 0..1000 {
            let x = r.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }
}
