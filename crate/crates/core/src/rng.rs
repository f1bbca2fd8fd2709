//! Random streams consumed by the optimizers.
//!
//! Every optimizer draws through [`RandomSource`], so a run is fully
//! determined by the stream it is handed. [`SeededStream`] wraps a
//! ChaCha8 generator seeded from a `u64`; the generator is fixed so that
//! results stay bit-identical across platforms and releases.
//! [`ScriptedStream`] replays a fixed list of draws and exists for
//! hand-worked checks of single iterations.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub trait RandomSource {
    /// A uniform draw in `[0, 1)`.
    fn next_f64(&mut self) -> f64;

    /// A uniform index in `0..n`. `n` must be positive.
    fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((self.next_f64() * n as f64) as usize).min(n - 1)
    }

    /// A uniform draw in `[lo, hi)`.
    fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.next_f64() * (hi - lo)
    }
}

impl<R: RandomSource + ?Sized> RandomSource for &mut R {
    fn next_f64(&mut self) -> f64 {
        (**self).next_f64()
    }

    fn index(&mut self, n: usize) -> usize {
        (**self).index(n)
    }
}

/// Seeded ChaCha8 stream. Identical seeds give identical draw sequences.
#[derive(Debug, Clone)]
pub struct SeededStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl SeededStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RandomSource for SeededStream {
    fn next_f64(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }
}

/// Replays a fixed sequence of `[0, 1)` draws, panicking when it runs dry.
///
/// Index draws map `u` to `floor(u * n)`, so forcing index `k` of `n`
/// means scripting any `u` in `[k/n, (k+1)/n)`.
#[derive(Debug, Clone, Default)]
pub struct ScriptedStream {
    draws: VecDeque<f64>,
}

impl ScriptedStream {
    pub fn new(draws: impl IntoIterator<Item = f64>) -> Self {
        let draws: VecDeque<f64> = draws.into_iter().collect();
        assert!(
            draws.iter().all(|u| (0.0..1.0).contains(u)),
            "scripted draws must lie in [0, 1)"
        );
        Self { draws }
    }

    pub fn remaining(&self) -> usize {
        self.draws.len()
    }
}

impl RandomSource for ScriptedStream {
    fn next_f64(&mut self) -> f64 {
        self.draws.pop_front().expect("scripted stream exhausted")
    }
}
