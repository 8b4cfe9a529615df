//! Cross-validation engines: exhaustive sweeps over all pairs up to a
//! length bound, and seeded random sampling. Every pair is pushed through
//! the fast algorithm, both oracle directions and the screens, and the
//! first disagreement (in ascending pair order) is reported.

use std::collections::HashSet;

use rand::Rng;

use crate::error::Error;
use crate::generate::{random_permutation, random_window_pattern, rng_from_seed};
use crate::mobius::{mobius_fast_with, FastOptions};
use crate::perm::Permutation;
use crate::poset::{mobius_oracle_bounded, mobius_oracle_topdown_bounded};
use crate::screen::screen;

/// Counts of the Mobius values seen during a check run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MuCounts {
    pub minus_one: u64,
    pub zero: u64,
    pub plus_one: u64,
}

impl MuCounts {
    fn record(&mut self, value: i64) {
        match value {
            -1 => self.minus_one += 1,
            0 => self.zero += 1,
            1 => self.plus_one += 1,
            _ => unreachable!("range violations fail before counting"),
        }
    }
}

/// First failing pair of a check run, with a human-readable reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    pub sigma: Permutation,
    pub tau: Permutation,
    pub reason: String,
}

/// Aggregate outcome of a check run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub pairs: u64,
    pub counts: MuCounts,
    pub failure: Option<CheckFailure>,
}

impl CheckOutcome {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs one pair through every route and reports the first inconsistency.
///
/// The oracle routes run only when `|tau|` is within `oracle_bound`; the
/// range check and, for contained pairs, the screen consistency checks run
/// unconditionally.
pub fn check_pair(
    sigma: &Permutation,
    tau: &Permutation,
    oracle_bound: usize,
    verify_uniqueness: bool,
) -> Result<i64, String> {
    let fast = mobius_fast_with(sigma, tau, FastOptions { verify_uniqueness });
    if !(-1..=1).contains(&fast.value) {
        return Err(format!("fast value {} outside {{-1, 0, 1}}", fast.value));
    }
    if tau.len() <= oracle_bound {
        let oracle = match mobius_oracle_bounded(sigma, tau, oracle_bound) {
            Ok(v) => v,
            Err(e) => return Err(format!("oracle failed: {e}")),
        };
        let topdown = match mobius_oracle_topdown_bounded(sigma, tau, oracle_bound) {
            Ok(v) => v,
            Err(e) => return Err(format!("top-down oracle failed: {e}")),
        };
        if fast.value != oracle || oracle != topdown {
            return Err(format!(
                "fast={} oracle={} topdown={}",
                fast.value, oracle, topdown
            ));
        }
    }
    match screen(sigma, tau) {
        Ok(report) => {
            if report.excluded_value == Some(fast.value) {
                return Err(format!(
                    "screen excluded value {} yet the fast algorithm returned it",
                    fast.value
                ));
            }
            if report.forces_zero && fast.value != 0 {
                return Err(format!(
                    "screen forces 0 but the fast value is {}",
                    fast.value
                ));
            }
        }
        Err(Error::NotContained { .. }) => {} // nothing to screen
        Err(e) => return Err(format!("screen failed: {e}")),
    }
    Ok(fast.value)
}

/// Exhaustive sweep: every tau of length at most `max_n`, every distinct
/// pattern sigma occurring in tau, in ascending `(length, lex)` order, so a
/// reported failure is the minimal counterexample.
pub fn exhaustive_check(
    max_n: usize,
    oracle_bound: usize,
    verify_uniqueness: bool,
) -> CheckOutcome {
    let mut outcome = CheckOutcome {
        pairs: 0,
        counts: MuCounts::default(),
        failure: None,
    };
    for n in 1..=max_n {
        let mut values: Vec<u32> = (1..=n as u32).collect();
        loop {
            let tau = Permutation::from_values(values.clone()).expect("valid by construction");
            for sigma in window_patterns(&tau) {
                outcome.pairs += 1;
                match check_pair(&sigma, &tau, oracle_bound, verify_uniqueness) {
                    Ok(value) => outcome.counts.record(value),
                    Err(reason) => {
                        outcome.failure = Some(CheckFailure { sigma, tau, reason });
                        return outcome;
                    }
                }
            }
            if !next_permutation(&mut values) {
                break;
            }
        }
    }
    outcome
}

/// Seeded random sampling: `samples` pairs with `|tau|` up to `max_n`.
/// Most sigmas are drawn as window patterns of tau (contained); a fifth are
/// drawn independently to exercise the non-containment path.
pub fn random_check(
    samples: u64,
    max_n: usize,
    seed: u64,
    oracle_bound: usize,
    verify_uniqueness: bool,
) -> CheckOutcome {
    let mut rng = rng_from_seed(seed);
    let mut outcome = CheckOutcome {
        pairs: 0,
        counts: MuCounts::default(),
        failure: None,
    };
    for _ in 0..samples {
        let n = rng.gen_range(1..=max_n);
        let tau = random_permutation(n, &mut rng);
        let sigma = if rng.gen_range(0..5) == 0 {
            random_permutation(rng.gen_range(1..=n), &mut rng)
        } else {
            random_window_pattern(&tau, &mut rng)
        };
        outcome.pairs += 1;
        match check_pair(&sigma, &tau, oracle_bound, verify_uniqueness) {
            Ok(value) => outcome.counts.record(value),
            Err(reason) => {
                outcome.failure = Some(CheckFailure { sigma, tau, reason });
                return outcome;
            }
        }
    }
    outcome
}

/// Distinct standardizations of the contiguous windows of tau, sorted by
/// `(length, lexicographic)`. These are exactly the patterns below tau.
pub fn window_patterns(tau: &Permutation) -> Vec<Permutation> {
    let n = tau.len();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for start in 0..n {
        for end in start..n {
            let w = Permutation::standardize(&tau.values()[start..=end])
                .expect("windows are non-empty");
            if seen.insert(w.clone()) {
                out.push(w);
            }
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Lexicographic successor in place; false once the sequence is the last.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn next_permutation_is_lexicographic() {
        let mut v = vec![1, 2, 3];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 6);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(seen[0], vec![1, 2, 3]);
        assert_eq!(seen[5], vec![3, 2, 1]);
    }

    #[test]
    fn window_patterns_of_a_chain() {
        let pats = window_patterns(&p("1234"));
        assert_eq!(pats, vec![p("1"), p("12"), p("123"), p("1234")]);
    }

    #[test]
    fn exhaustive_small_sweep_is_clean() {
        let outcome = exhaustive_check(4, 60, true);
        assert!(outcome.ok(), "failure: {:?}", outcome.failure);
        assert!(outcome.pairs > 0);
        // The rank-1 cover (12, 123) contributes a -1.
        assert!(outcome.counts.minus_one > 0);
    }

    #[test]
    fn random_sampling_is_deterministic_and_clean() {
        let a = random_check(200, 8, 99, 60, false);
        let b = random_check(200, 8, 99, 60, false);
        assert_eq!(a, b);
        assert!(a.ok(), "failure: {:?}", a.failure);
    }
}
