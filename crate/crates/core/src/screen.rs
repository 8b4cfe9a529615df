//! Necessary-condition screens for the Mobius value, driven by the tail
//! sum and by bifix structure. These are diagnostics: a report can exclude
//! a value or force 0, and the fast algorithm must always agree, but the
//! dispatcher never consults them.

use crate::error::Result;
use crate::mobius::socle_chain;
use crate::perm::{Permutation, Side};

/// Outcome of the screening predicates for a pair `sigma <= tau`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScreenReport {
    /// Tail lengths clamped to 1 and summed, so always in `{0, 1, 2}`.
    /// Any tail of length 2 or more already forces zero on its own.
    pub tail_sum: u8,
    /// A value `mu` provably cannot take: `(-1)^(tail_sum + 1)` when the
    /// corresponding bifix condition fails.
    pub excluded_value: Option<i64>,
    /// True when the screens prove `mu = 0`.
    pub forces_zero: bool,
    /// Longest bifix pattern of tau containing sigma, of length at most
    /// `|sigma| + 2`.
    pub omega: Option<Permutation>,
    /// Shortest prefix pattern of tau containing the first two occurrences
    /// of omega; present only when omega occurs at least twice.
    pub alpha: Option<Permutation>,
    /// Shortest suffix pattern of tau containing the last two occurrences
    /// of omega.
    pub beta: Option<Permutation>,
}

/// Runs all screening predicates on `[sigma, tau]`.
pub fn screen(sigma: &Permutation, tau: &Permutation) -> Result<ScreenReport> {
    let tails = tau.tails_of(sigma)?;
    let (a, b) = (tails.left, tails.right);
    let tail_sum = (a.min(1) + b.min(1)) as u8;
    let k0 = sigma.len();

    // The stated conditions assume, for tail sum 1, an occurrence of sigma
    // at the right end of tau; when the occurrence is at the left end the
    // suffix condition becomes a prefix condition.
    let monotone_end = if a >= 1 { Side::Right } else { Side::Left };

    let excluded_value = match tail_sum {
        0 => (!has_monotone_bifix(tau, k0 + 1)).then_some(-1),
        1 => (!has_bifix_with_monotone_affix(tau, k0 + 2, k0 + 1, monotone_end)).then_some(1),
        _ => Some(-1),
    };

    let omega = longest_bifix_containing(sigma, tau, k0 + 2);
    let (alpha, beta) = match &omega {
        Some(w) => {
            let occs = tau.occurrences_of(w);
            if occs.len() >= 2 {
                let second = occs[1];
                let second_last = occs[occs.len() - 2];
                let alpha = tau
                    .prefix_pattern(second + w.len() - 1)
                    .expect("occurrence end in range");
                let beta = tau
                    .suffix_pattern(tau.len() - second_last + 1)
                    .expect("occurrence start in range");
                (Some(alpha), Some(beta))
            } else {
                (None, None)
            }
        }
        None => (None, None),
    };

    let forces_zero = if tails.has_long_tail() {
        true
    } else {
        let by_bifix_absence = match a + b {
            0 => {
                // The value can be 1 with no helpful bifix when sigma itself
                // is where the carrier recursion bottoms out.
                let sigma_is_socle =
                    sigma == tau || socle_chain(sigma, tau).last() == Some(sigma);
                !sigma_is_socle
                    && !has_monotone_bifix(tau, k0 + 1)
                    && !has_monotone_alternating_bifix(tau, k0 + 2)
            }
            1 => {
                !has_bifix(tau, k0 + 1)
                    && !has_bifix_with_monotone_affix(tau, k0 + 2, k0 + 1, monotone_end)
            }
            _ => !has_bifix(tau, k0 + 2),
        };
        let by_split_ends = match (&omega, &alpha, &beta) {
            (Some(_), Some(al), Some(be)) => al != be,
            _ => false,
        };
        by_bifix_absence || by_split_ends
    };

    Ok(ScreenReport {
        tail_sum,
        excluded_value,
        forces_zero,
        omega,
        alpha,
        beta,
    })
}

fn has_bifix(tau: &Permutation, k: usize) -> bool {
    k >= 1 && k <= tau.len() && tau.is_bifix(k).unwrap_or(false)
}

fn has_monotone_bifix(tau: &Permutation, k: usize) -> bool {
    has_bifix(tau, k)
        && tau
            .prefix_pattern(k)
            .map(|p| p.is_monotone())
            .unwrap_or(false)
}

fn has_monotone_alternating_bifix(tau: &Permutation, k: usize) -> bool {
    has_bifix(tau, k)
        && tau
            .prefix_pattern(k)
            .map(|p| p.is_monotone_alternating())
            .unwrap_or(false)
}

/// Bifix of length `k` whose affix pattern of length `j` on the given side
/// is monotone.
fn has_bifix_with_monotone_affix(tau: &Permutation, k: usize, j: usize, side: Side) -> bool {
    if !has_bifix(tau, k) {
        return false;
    }
    tau.prefix_pattern(k)
        .and_then(|bifix| bifix.affix_pattern(j, side))
        .map(|affix| affix.is_monotone())
        .unwrap_or(false)
}

/// Longest bifix pattern of tau containing sigma with length at most
/// `max_len` (and at least `|sigma|`).
fn longest_bifix_containing(
    sigma: &Permutation,
    tau: &Permutation,
    max_len: usize,
) -> Option<Permutation> {
    let hi = max_len.min(tau.len());
    for k in (sigma.len()..=hi).rev() {
        if !has_bifix(tau, k) {
            continue;
        }
        let bifix = tau.prefix_pattern(k).expect("k in range");
        if bifix.contains(sigma) {
            return Some(bifix);
        }
    }
    None
}
