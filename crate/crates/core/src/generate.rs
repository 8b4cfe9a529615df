//! Seeded construction of test instances: random permutations, and
//! permutations with a pattern planted at chosen windows. Planting rewrites
//! a window in place, reordering the values already there so the window
//! realizes the pattern's relative order; the result is still a permutation.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

use crate::mobius::carrier_element;
use crate::perm::Permutation;

/// A seed-determined generator; every random choice in the crate flows
/// through one of these so runs are reproducible.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random permutation of `{1..n}`.
pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut values: Vec<u32> = (1..=n as u32).collect();
    values.shuffle(rng);
    Permutation::from_values(values).expect("shuffle preserves the value set")
}

/// Uniformly random non-monotone permutation of `{1..n}`; requires `n >= 3`.
pub fn random_non_monotone(n: usize, rng: &mut impl Rng) -> Permutation {
    assert!(n >= 3, "every permutation of length <= 2 is monotone");
    loop {
        let p = random_permutation(n, rng);
        if !p.is_monotone() {
            return p;
        }
    }
}

/// Rewrites the window of length `|pattern|` starting at `at` (0-based) so
/// that it realizes `pattern`, using the values already in the window.
fn plant(values: &mut [u32], at: usize, pattern: &Permutation) {
    let k = pattern.len();
    let mut window: Vec<u32> = values[at..at + k].to_vec();
    window.sort_unstable();
    for (i, &rank) in pattern.values().iter().enumerate() {
        values[at + i] = window[rank as usize - 1];
    }
}

/// Random tau of length `n` with sigma occurring at both ends (tails
/// (0, 0)), sigma also occurring in the interior so the dispatch reaches
/// the carrier scan, and no carrier element, so the scan visits every
/// candidate length and comes up empty. This is the worst-case shape for
/// the fast algorithm.
pub fn both_ends_instance(sigma: &Permutation, n: usize, rng: &mut impl Rng) -> Permutation {
    let k = sigma.len();
    assert!(n >= k + 3, "need rank >= 3");
    loop {
        let mut values: Vec<u32> = (1..=n as u32).collect();
        values.shuffle(rng);
        plant(&mut values, 0, sigma);
        plant(&mut values, n - k, sigma);
        let tau = Permutation::from_values(values).expect("planting preserves values");
        let occs = tau.occurrences_of(sigma);
        if occs.len() < 2 || occs[0] != 1 || *occs.last().unwrap() != n - k + 1 {
            continue;
        }
        let interior = tau.interior().expect("n >= 4");
        if interior.contains(sigma) && carrier_element(sigma, &tau).is_none() {
            return tau;
        }
    }
}

/// Random tau of length `n` in which sigma occurs at least twice, the rank
/// is at least 3, and the left tail has length at least `left_tail >= 2`,
/// so the fast algorithm resolves it through the long-tail case.
pub fn long_tail_instance(
    sigma: &Permutation,
    n: usize,
    left_tail: usize,
    rng: &mut impl Rng,
) -> Permutation {
    let k = sigma.len();
    assert!(left_tail >= 2);
    assert!(n >= left_tail + 2 * k, "no room for two disjoint occurrences");
    loop {
        let mut values: Vec<u32> = (1..=n as u32).collect();
        values.shuffle(rng);
        let first = left_tail; // 0-based start, leaving `left_tail` letters before it
        let second = first + k + rng.gen_range(0..=(n - first - 2 * k));
        plant(&mut values, first, sigma);
        plant(&mut values, second, sigma);
        let tau = Permutation::from_values(values).expect("planting preserves values");
        let occs = tau.occurrences_of(sigma);
        if occs.len() >= 2 && occs[0] == first + 1 && tau.len() - sigma.len() >= 3 {
            return tau;
        }
    }
}

/// Random tau in which sigma occurs exactly once, with the given tail
/// lengths; `|tau| = left + |sigma| + right`.
pub fn single_occurrence_instance(
    sigma: &Permutation,
    left: usize,
    right: usize,
    rng: &mut impl Rng,
) -> Permutation {
    let k = sigma.len();
    let n = left + k + right;
    loop {
        let mut values: Vec<u32> = (1..=n as u32).collect();
        values.shuffle(rng);
        plant(&mut values, left, sigma);
        let tau = Permutation::from_values(values).expect("planting preserves values");
        if tau.occurrences_of(sigma) == [left + 1] {
            return tau;
        }
    }
}

/// Standardization of a uniformly random window of tau, together with its
/// length; used to draw contained patterns.
pub fn random_window_pattern(tau: &Permutation, rng: &mut impl Rng) -> Permutation {
    let n = tau.len();
    let start = rng.gen_range(0..n);
    let end = rng.gen_range(start..n);
    Permutation::standardize(&tau.values()[start..=end]).expect("windows are non-empty")
}
