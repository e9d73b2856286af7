//! Seed derivation. A master seed plus a fixed per-component offset gives a
//! stream seed; independent trials use distinct ChaCha stream ids.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const HSP_COSET_OFFSET: u64 = 0x1000;
pub const HSP_OUTCOME_OFFSET: u64 = 0x2000;
pub const EH_SAMPLE_OFFSET: u64 = 0x3000;
pub const EH_SWEEP_OFFSET: u64 = 0x4000;
pub const CLONE_PAIR_OFFSET: u64 = 0x5000;
pub const REFUTER_OFFSET: u64 = 0x6000;
pub const SLOPE_OFFSET: u64 = 0x7000;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for stream `stream` of the component seeded by `seed + offset`.
pub fn stream_rng(seed: u64, offset: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(offset));
    rng.set_stream(stream);
    rng
}
