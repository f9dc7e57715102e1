//! Seeded instance generation.
//!
//! Instance `i` of a sweep with seed `s` draws from
//! `ChaCha8Rng::seed_from_u64(instance_seed(s, i))`, so any instance can be
//! regenerated on its own. The generators consume the stream in a fixed order
//! documented on each function.

use rainbow_core::graph::edge;
use rainbow_core::{ColoredFamily, Matching};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `splitmix64(seed ^ index)`.
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ index)
}

pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(instance_seed(seed, index))
}

/// A matching of `size` edges over `0..vertex_budget`: repeatedly pick `u`
/// uniformly among the free vertices, then `v` uniformly among the free
/// vertices other than `u`. Free vertices are kept in ascending order.
///
/// # Panics
///
/// Panics if `2 * size > vertex_budget`.
pub fn random_matching<R: Rng>(rng: &mut R, vertex_budget: usize, size: usize) -> Matching {
    assert!(
        2 * size <= vertex_budget,
        "{size} edges do not fit on {vertex_budget} vertices"
    );
    let mut free: Vec<usize> = (0..vertex_budget).collect();
    let mut m = Matching::new();
    for _ in 0..size {
        let u = free.remove(rng.random_range(0..free.len()));
        let v = free.remove(rng.random_range(0..free.len()));
        m.insert(edge(u, v)).expect("endpoints were free");
    }
    m
}

/// `m` matchings drawn one after another with [`random_matching`].
pub fn random_family<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    vertex_budget: usize,
) -> ColoredFamily {
    let matchings = (0..m)
        .map(|_| random_matching(rng, vertex_budget, n))
        .collect();
    ColoredFamily::new(vertex_budget, matchings).expect("vertices drawn from the budget")
}

/// A matching of `size` edges between `0..side` and `side..2*side`: pick a
/// free left vertex uniformly, then a free right vertex uniformly.
pub fn random_bipartite_matching<R: Rng>(rng: &mut R, side: usize, size: usize) -> Matching {
    assert!(size <= side, "{size} edges do not fit on sides of {side}");
    let mut left: Vec<usize> = (0..side).collect();
    let mut right: Vec<usize> = (side..2 * side).collect();
    let mut m = Matching::new();
    for _ in 0..size {
        let u = left.remove(rng.random_range(0..left.len()));
        let v = right.remove(rng.random_range(0..right.len()));
        m.insert(edge(u, v)).expect("endpoints were free");
    }
    m
}

pub fn random_bipartite_family<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    side: usize,
) -> ColoredFamily {
    let matchings = (0..m)
        .map(|_| random_bipartite_matching(rng, side, n))
        .collect();
    ColoredFamily::new(2 * side, matchings).expect("vertices drawn from the sides")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // First outputs of the reference SplitMix64 generator seeded with 0.
        assert_eq!(splitmix64(0), 0xE220_A839_7B1D_CDAF);
        assert_eq!(splitmix64(0x9E37_79B9_7F4A_7C15), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn generation_is_reproducible() {
        let a = random_family(&mut instance_rng(7, 3), 3, 7, 10);
        let b = random_family(&mut instance_rng(7, 3), 3, 7, 10);
        assert_eq!(a, b);
        let c = random_family(&mut instance_rng(7, 4), 3, 7, 10);
        assert_ne!(a, c);
    }

    #[test]
    fn sizes_and_ranges() {
        let mut rng = instance_rng(1, 0);
        for budget in 4..=14 {
            let m = random_matching(&mut rng, budget, budget / 2);
            assert_eq!(m.len(), budget / 2);
            assert!(m.vertex_bound() <= budget);
        }
        let fam = random_bipartite_family(&mut rng, 3, 5, 4);
        assert_eq!(fam.vertex_count(), 8);
        for m in fam.matchings() {
            assert_eq!(m.len(), 3);
            assert!(m.edges().iter().all(|e| e.lo() < 4 && e.hi() >= 4));
        }
    }
}
