use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0xA1;

/// Seed for the randomized searches and whether to re-check results that
/// are otherwise assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub verify: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            verify: false,
        }
    }
}

impl Options {
    pub fn verifying(self) -> Self {
        Options {
            verify: true,
            ..self
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}
