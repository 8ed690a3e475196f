//! Seeded sample streams.

use bicyclic_core::{Elem, QElem, Rational};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScalarMode {
    /// `p/q` with `0 <= p <= max_num`, `1 <= q <= max_den`.
    Rational { max_num: u64, max_den: u64 },
    /// `0..=max`.
    Integer { max: u64 },
}

impl Default for ScalarMode {
    fn default() -> Self {
        ScalarMode::Rational { max_num: 120, max_den: 8 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenConfig {
    pub seed: u64,
    pub scalar_mode: ScalarMode,
    pub cases: usize,
}

impl GenConfig {
    pub fn new(seed: u64, cases: usize) -> Self {
        GenConfig { seed, scalar_mode: ScalarMode::default(), cases }
    }

    pub fn with_mode(self, scalar_mode: ScalarMode) -> Self {
        GenConfig { scalar_mode, ..self }
    }
}

pub struct Gen {
    rng: ChaCha8Rng,
    mode: ScalarMode,
}

impl Gen {
    pub fn new(cfg: &GenConfig) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(cfg.seed), mode: cfg.scalar_mode }
    }

    pub fn mode(&self) -> ScalarMode {
        self.mode
    }

    pub fn scalar(&mut self) -> Rational {
        match self.mode {
            ScalarMode::Rational { max_num, max_den } => {
                let p = self.rng.gen_range(0..=max_num);
                let q = self.rng.gen_range(1..=max_den.max(1));
                Rational::new(BigInt::from(p), BigInt::from(q))
            }
            ScalarMode::Integer { max } => Rational::from_integer(self.rng.gen_range(0..=max).into()),
        }
    }

    /// A positive scalar.
    pub fn positive(&mut self) -> Rational {
        loop {
            let v = self.scalar();
            if v > Rational::from_integer(0.into()) {
                return v;
            }
        }
    }

    pub fn elem(&mut self) -> QElem {
        Elem::new(self.scalar(), self.scalar()).expect("generated scalars are non-negative")
    }

    pub fn integer(&mut self, max: u64) -> u64 {
        self.rng.gen_range(0..=max)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn seed(&mut self) -> u64 {
        self.rng.gen()
    }
}

/// The element stream for a configuration; `cfg.cases` elements.
pub fn gen_elem(cfg: &GenConfig) -> impl Iterator<Item = QElem> {
    let mut g = Gen::new(cfg);
    (0..cfg.cases).map(move |_| g.elem())
}
