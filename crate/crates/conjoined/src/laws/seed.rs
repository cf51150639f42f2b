//! Deterministic seed derivation.
//!
//! Every generated case is reproducible from three numbers: the root
//! seed, the law's index in its suite, and the case index. [`mix`] is the
//! splitmix64 finalizer, a cheap bijection on `u64` with good avalanche;
//! the derivation functions fold the coordinates through it so that
//! neighboring coordinates land on unrelated seeds. Replaying a reported
//! case seed reproduces its inputs exactly.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The splitmix64 finalizer: a bijective scrambler on `u64`.
pub fn mix(z: u64) -> u64 {
    let z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    let z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The seed for one (law, case) cell under a root seed.
pub fn derive_case_seed(root: u64, law_index: u64, case_index: u64) -> u64 {
    mix(root ^ mix(law_index.wrapping_add(1)) ^ mix(case_index.wrapping_add(1)).rotate_left(32))
}

/// A lane-local seed below a case seed, for cases that draw several
/// independent values.
pub fn sub_seed(seed: u64, lane: u64) -> u64 {
    mix(seed ^ mix(lane.wrapping_add(0xA5A5)))
}

/// A reproducible stream for generators that want more than one draw.
pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    use rand_chacha::rand_core::RngCore;

    #[test]
    fn mix_is_deterministic_and_spreads_neighbors() {
        assert_eq!(mix(0), mix(0));
        assert_ne!(mix(0), mix(1));
        let spread = (mix(0) ^ mix(1)).count_ones();
        assert!(spread > 8, "neighboring inputs must diverge, got {spread} differing bits");
    }

    #[test]
    fn case_seeds_separate_all_three_coordinates() {
        let base = derive_case_seed(42, 0, 0);
        assert_ne!(base, derive_case_seed(43, 0, 0));
        assert_ne!(base, derive_case_seed(42, 1, 0));
        assert_ne!(base, derive_case_seed(42, 0, 1));
        assert_ne!(derive_case_seed(42, 1, 0), derive_case_seed(42, 0, 1));
    }

    #[test]
    fn case_seeds_rarely_collide_across_a_grid() {
        let mut seen = std::collections::HashSet::new();
        for law in 0..16u64 {
            for case in 0..512u64 {
                seen.insert(derive_case_seed(42, law, case));
            }
        }
        assert_eq!(seen.len(), 16 * 512, "grid of case seeds must be collision-free");
    }

    #[test]
    fn sub_seeds_differ_by_lane() {
        let seed = derive_case_seed(42, 3, 7);
        assert_ne!(sub_seed(seed, 0), sub_seed(seed, 1));
        assert_ne!(sub_seed(seed, 1), sub_seed(seed, 2));
    }

    #[test]
    fn rng_streams_replay_exactly() {
        let mut first = rng_from(99);
        let mut second = rng_from(99);
        for _ in 0..32 {
            assert_eq!(first.next_u64(), second.next_u64());
        }
    }
}
