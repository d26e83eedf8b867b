use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Counter-based stream generator: ChaCha8 keyed by the campaign seed, with
/// one independent stream per instance index.
///
/// The key is the seed's 8 little-endian bytes followed by 24 zero bytes.
/// Uniform reals take the top 53 bits of each 64-bit word.
#[derive(Debug, Clone)]
pub struct StreamRng {
    inner: ChaCha8Rng,
}

impl StreamRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        let mut inner = ChaCha8Rng::from_seed(key);
        inner.set_stream(stream);
        Self { inner }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Angle uniform on `[0, 2 pi)`.
    pub fn angle(&mut self) -> f64 {
        std::f64::consts::TAU * self.uniform()
    }

    /// Radius in `[lo, hi]` distributed uniformly by area.
    pub fn area_radius(&mut self, lo: f64, hi: f64) -> f64 {
        let u = self.uniform();
        (lo * lo + u * (hi * hi - lo * lo)).sqrt()
    }
}
