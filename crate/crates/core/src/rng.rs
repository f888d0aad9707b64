//! Deterministic counter-based random streams.
//!
//! Every random draw in this crate comes from a [`Stream`] addressed by a
//! `(seed, label, index...)` derivation chain. Deriving a child stream never
//! mutates the parent, so independent consumers (scan points, probe reviews,
//! epoch shuffles) can each be handed their own stream and the output is
//! independent of evaluation order and thread schedule.
//!
//! The generator is splitmix64: a 64-bit counter stepped by the golden-ratio
//! increment and passed through a finalizer mix. Gaussian samples come from a
//! Box-Muller transform over the stream.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xCBF2_9CE4_8422_2325u64;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01B3);
    }
    hash
}

/// A deterministic random stream. Cheap to clone and derive.
#[derive(Clone, Debug)]
pub struct Stream {
    key: u64,
    counter: u64,
}

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream {
            key: mix64(seed ^ 0x6A09_E667_F3BC_C909),
            counter: 0,
        }
    }

    /// Derive an independent child stream named by `label`.
    pub fn derive(&self, label: &str) -> Self {
        Stream {
            key: mix64(self.key ^ fnv1a64(label.as_bytes())),
            counter: 0,
        }
    }

    /// Derive an independent child stream for an index (seed number, epoch,
    /// review index, bit pattern of a grid value, ...).
    pub fn derive_index(&self, index: u64) -> Self {
        Stream {
            key: mix64(self.key ^ mix64(index ^ 0x9216_D5D9_8979_FB1B)),
            counter: 0,
        }
    }

    /// A raw seed for APIs that take `u64` seeds, derived by label.
    pub fn derive_seed(&self, label: &str) -> u64 {
        mix64(self.key ^ fnv1a64(label.as_bytes()) ^ 0x4528_21E6_38D0_1377)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(GOLDEN);
        mix64(self.key.wrapping_add(self.counter))
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `(0, 1]`; safe as a logarithm argument.
    pub fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn next_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in `[0, n)` by rejection, bias-free.
    pub fn next_below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "next_below: n must be positive");
        let zone = u64::MAX - (u64::MAX % n + 1) % n;
        loop {
            let v = self.next_u64();
            if v <= zone {
                return v % n;
            }
        }
    }

    /// A pair of independent standard normal deviates (Box-Muller).
    pub fn normal_pair(&mut self) -> (f64, f64) {
        let u1 = self.next_open01();
        let u2 = self.next_f64();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = std::f64::consts::TAU * u2;
        (radius * angle.cos(), radius * angle.sin())
    }

    /// `dim` independent normal deviates; the spare from an odd count is
    /// discarded so the output depends only on `dim` and the stream state.
    pub fn normal_vec(&mut self, dim: usize, sigma: f64) -> Vec<f64> {
        let mut out = Vec::with_capacity(dim);
        while out.len() < dim {
            let (a, b) = self.normal_pair();
            out.push(sigma * a);
            if out.len() < dim {
                out.push(sigma * b);
            }
        }
        out
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, slice: &mut [T]) {
        for i in (1..slice.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            slice.swap(i, j);
        }
    }
}
