//! Deterministic seeding.
//!
//! Every randomized operation takes an explicit 64-bit seed. Child seeds are
//! derived with a SplitMix64 finalizer over `(parent, label, index)` so that a
//! run replays bit-identically regardless of evaluation order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_a11c_0ffe_e001;

#[inline]
fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn label_hash(label: &str) -> u64 {
    // FNV-1a
    label
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
        })
}

/// Child seed for the `index`-th use of `label` under `parent`.
pub fn derive(parent: u64, label: &str, index: u64) -> u64 {
    splitmix(splitmix(parent ^ label_hash(label)).wrapping_add(index))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
