//! The fast decision procedure for `mu(sigma, tau)`: case dispatch on
//! occurrence count, rank, tails and interior membership, followed by the
//! descending carrier-element scan and, when a carrier exists, recursion
//! into the interval it generates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Permutation, TailProfile};

/// Which dispatch case decided a Mobius value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MobiusCase {
    NotContained,
    Equal,
    SmallRank,
    OneOccurrence,
    InteriorAbsent,
    LongTail,
    NoCarrier,
    ViaSocle,
}

impl fmt::Display for MobiusCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MobiusCase::NotContained => "not-contained",
            MobiusCase::Equal => "equal",
            MobiusCase::SmallRank => "small-rank",
            MobiusCase::OneOccurrence => "one-occurrence",
            MobiusCase::InteriorAbsent => "interior-absent",
            MobiusCase::LongTail => "long-tail",
            MobiusCase::NoCarrier => "no-carrier",
            MobiusCase::ViaSocle => "via-socle",
        };
        f.write_str(s)
    }
}

/// Outcome of the fast algorithm: the value, the case that decided it, and
/// the chain of successive carriers when the carrier recursion ran.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusResult {
    pub sigma: Permutation,
    pub tau: Permutation,
    pub value: i64,
    pub case: MobiusCase,
    /// Successive carriers found by the recursion; empty unless the case is
    /// `ViaSocle`. Each entry is at least two letters shorter than its
    /// predecessor and is a bifix pattern of the interval it was found in.
    pub carrier_chain: Vec<Permutation>,
}

impl MobiusResult {
    /// The last carrier of the chain, when the carrier recursion ran.
    pub fn socle(&self) -> Option<&Permutation> {
        self.carrier_chain.last()
    }

    /// The flat record form `{sigma, tau, mu, case, carrier_chain, socle}`.
    pub fn to_record(&self) -> MobiusRecord {
        MobiusRecord {
            sigma: self.sigma.clone(),
            tau: self.tau.clone(),
            mu: self.value,
            case: self.case,
            carrier_chain: self.carrier_chain.clone(),
            socle: self.socle().cloned(),
        }
    }
}

/// Serialized form of a [`MobiusResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobiusRecord {
    pub sigma: Permutation,
    pub tau: Permutation,
    pub mu: i64,
    pub case: MobiusCase,
    pub carrier_chain: Vec<Permutation>,
    pub socle: Option<Permutation>,
}

impl MobiusRecord {
    /// Rebuilds the in-memory result, checking that the socle field is
    /// consistent with the chain.
    pub fn into_result(self) -> Result<MobiusResult> {
        if self.socle.as_ref() != self.carrier_chain.last() {
            return Err(Error::InvalidInput(
                "socle does not match the last carrier of the chain".into(),
            ));
        }
        Ok(MobiusResult {
            sigma: self.sigma,
            tau: self.tau,
            value: self.mu,
            case: self.case,
            carrier_chain: self.carrier_chain,
        })
    }
}

/// Options for [`mobius_fast_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct FastOptions {
    /// Scan every candidate length instead of stopping at the first
    /// accepted carrier, and panic if two distinct carriers are found.
    pub verify_uniqueness: bool,
}

/// Result of the carrier-element search on an interval `[sigma, tau]`.
///
/// `prefix_chain` holds the prefix patterns of tau lying in the interval,
/// strictly below tau-minus-last-letter and not below the interior;
/// `suffix_chain` is the suffix-pattern counterpart. Both are totally
/// ordered by containment, and their intersection has at most one element:
/// the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarrierSearchReport {
    pub prefix_chain: Vec<Permutation>,
    pub suffix_chain: Vec<Permutation>,
    pub carrier: Option<Permutation>,
}

impl CarrierSearchReport {
    /// Elements common to both chains. The carrier when it exists; provably
    /// never more than one element.
    pub fn common_elements(&self) -> Vec<Permutation> {
        self.prefix_chain
            .iter()
            .filter(|p| self.suffix_chain.contains(p))
            .cloned()
            .collect()
    }
}

/// `mu(sigma, tau)` for a rank at most 2.
///
/// Rank 0 is a singleton and rank 1 a two-element chain. At rank 2 the
/// interval contains an end-deletion of tau only when the matching tail of
/// tau has length at most 1, so it is a four-element Boolean algebra
/// (mu = 1) exactly when tau is non-monotone and both tails are short;
/// otherwise it is a three-element chain (mu = 0). A non-monotone tau with
/// a tail of length 2 can only arise from a single occurrence, where the
/// tail rule gives the same 0.
pub fn mobius_small_rank(sigma: &Permutation, tau: &Permutation) -> Result<i64> {
    let tails = tau.tails_of(sigma)?;
    match tau.len() - sigma.len() {
        0 => Ok(1),
        1 => Ok(-1),
        2 => {
            if tau.is_monotone() || tails.has_long_tail() {
                Ok(0)
            } else {
                Ok(1)
            }
        }
        r => Err(Error::InvalidInput(format!("rank {r} exceeds 2"))),
    }
}

/// `mu(sigma, tau)` when sigma occurs precisely once, as a function of the
/// tail lengths alone: the closed interval is a grid (a direct product of
/// two chains), so only four tail profiles give a nonzero value.
pub fn mobius_one_occurrence(tails: TailProfile) -> i64 {
    match (tails.left, tails.right) {
        (0, 0) | (1, 1) => 1,
        (0, 1) | (1, 0) => -1,
        _ => 0,
    }
}

/// Searches `[sigma, tau]` for its carrier element and reports the full
/// prefix/suffix chains it was found in.
///
/// A candidate of length `k` (for `k` from `|tau| - 2` down to `|sigma|`)
/// is accepted when it is a bifix pattern of tau, contains sigma, and does
/// not occur in the interior of tau. `carrier` is the accepted candidate;
/// at most one length can accept.
pub fn find_carrier(sigma: &Permutation, tau: &Permutation) -> Result<CarrierSearchReport> {
    if !tau.contains(sigma) {
        return Err(Error::NotContained {
            sigma: sigma.to_string(),
            tau: tau.to_string(),
        });
    }
    let n = tau.len();
    let k0 = sigma.len();
    let mut report = CarrierSearchReport {
        prefix_chain: Vec::new(),
        suffix_chain: Vec::new(),
        carrier: None,
    };
    if n < k0 + 2 {
        return Ok(report); // no candidate lengths at rank <= 1
    }
    let interior = tau.interior().expect("|tau| >= 3 here");
    for k in k0..=n - 2 {
        let pref = tau.prefix_pattern(k).expect("k in range");
        let suff = tau.suffix_pattern(k).expect("k in range");
        let pref_qualifies = pref.contains(sigma) && !interior.contains(&pref);
        let suff_qualifies = suff.contains(sigma) && !interior.contains(&suff);
        let is_bifix = pref == suff;
        if pref_qualifies {
            report.prefix_chain.push(pref.clone());
        }
        if suff_qualifies {
            report.suffix_chain.push(suff);
        }
        if is_bifix && pref_qualifies {
            // Scanning ascending; the last hit is the one the descending
            // scan would report first. Uniqueness makes this moot.
            report.carrier = Some(pref);
        }
    }
    Ok(report)
}

/// Descending carrier scan, first acceptance only. Assumes containment.
fn carrier_scan_first(
    sigma: &Permutation,
    tau: &Permutation,
    interior: &Permutation,
) -> Option<Permutation> {
    let n = tau.len();
    let k0 = sigma.len();
    for k in (k0..=n - 2).rev() {
        let pref = tau.prefix_pattern(k).expect("k in range");
        if pref != tau.suffix_pattern(k).expect("k in range") {
            continue;
        }
        if !pref.contains(sigma) || interior.contains(&pref) {
            continue;
        }
        return Some(pref);
    }
    None
}

/// Full descending carrier scan; collects every acceptance so uniqueness
/// can be asserted.
fn carrier_scan_all(
    sigma: &Permutation,
    tau: &Permutation,
    interior: &Permutation,
) -> Vec<Permutation> {
    let n = tau.len();
    let k0 = sigma.len();
    let mut found = Vec::new();
    for k in (k0..=n - 2).rev() {
        let pref = tau.prefix_pattern(k).expect("k in range");
        if pref != tau.suffix_pattern(k).expect("k in range") {
            continue;
        }
        if pref.contains(sigma) && !interior.contains(&pref) {
            found.push(pref);
        }
    }
    found
}

/// The fast algorithm for `mu(sigma, tau)`.
pub fn mobius_fast(sigma: &Permutation, tau: &Permutation) -> MobiusResult {
    mobius_fast_with(sigma, tau, FastOptions::default())
}

/// The fast algorithm with explicit options.
///
/// Dispatch order: non-containment and equality; rank at most 2; a single
/// occurrence (value from the tails alone); a tail of length at least 2
/// (value 0 without any carrier scan); sigma absent from the interior
/// (value 1); otherwise the carrier scan, recursing on `[sigma, carrier]`
/// when one exists and returning 0 when none does.
pub fn mobius_fast_with(
    sigma: &Permutation,
    tau: &Permutation,
    options: FastOptions,
) -> MobiusResult {
    let result = |value, case, carrier_chain| MobiusResult {
        sigma: sigma.clone(),
        tau: tau.clone(),
        value,
        case,
        carrier_chain,
    };

    let occs = tau.occurrences_of(sigma);
    if occs.is_empty() {
        return result(0, MobiusCase::NotContained, Vec::new());
    }
    if sigma == tau {
        return result(1, MobiusCase::Equal, Vec::new());
    }
    let rank = tau.len() - sigma.len();
    let tails = TailProfile {
        left: occs[0] - 1,
        right: tau.len() - (occs[occs.len() - 1] + sigma.len() - 1),
    };
    if rank <= 2 {
        let value = match rank {
            1 => -1,
            _ => {
                if tau.is_monotone() || tails.has_long_tail() {
                    0
                } else {
                    1
                }
            }
        };
        return result(value, MobiusCase::SmallRank, Vec::new());
    }
    if occs.len() == 1 {
        return result(
            mobius_one_occurrence(tails),
            MobiusCase::OneOccurrence,
            Vec::new(),
        );
    }
    if tails.has_long_tail() {
        return result(0, MobiusCase::LongTail, Vec::new());
    }
    let interior = tau.interior().expect("rank >= 3 so |tau| >= 4");
    if !interior.contains(sigma) {
        // Both occurrences sit at the two ends of tau.
        debug_assert_eq!(occs, vec![1, tau.len() - sigma.len() + 1]);
        return result(1, MobiusCase::InteriorAbsent, Vec::new());
    }
    let carrier = if options.verify_uniqueness {
        let found = carrier_scan_all(sigma, tau, &interior);
        assert!(
            found.len() <= 1,
            "carrier uniqueness violated for [{sigma}, {tau}]: {found:?}"
        );
        found.into_iter().next()
    } else {
        carrier_scan_first(sigma, tau, &interior)
    };
    match carrier {
        None => result(0, MobiusCase::NoCarrier, Vec::new()),
        Some(kappa) => {
            let sub = mobius_fast_with(sigma, &kappa, options);
            let mut chain = Vec::with_capacity(1 + sub.carrier_chain.len());
            chain.push(kappa);
            chain.extend(sub.carrier_chain);
            result(sub.value, MobiusCase::ViaSocle, chain)
        }
    }
}

/// The carrier element of `[sigma, tau]` when one exists, by the lean
/// descending scan. `None` when sigma does not occur in tau, the rank is
/// below 2, or no candidate is accepted.
pub fn carrier_element(sigma: &Permutation, tau: &Permutation) -> Option<Permutation> {
    if tau.len() < sigma.len() + 2 || !tau.contains(sigma) {
        return None;
    }
    let interior = tau.interior().expect("|tau| >= 3 here");
    carrier_scan_first(sigma, tau, &interior)
}

/// Iterates the carrier search: the carrier of `[sigma, tau]`, then the
/// carrier of the interval it generates, and so on until an interval with
/// no carrier remains. The last entry is the socle. Empty when sigma does
/// not occur in tau or `[sigma, tau]` has no carrier to begin with.
pub fn socle_chain(sigma: &Permutation, tau: &Permutation) -> Vec<Permutation> {
    let mut chain = Vec::new();
    let mut current = tau.clone();
    while let Some(kappa) = carrier_element(sigma, &current) {
        chain.push(kappa.clone());
        current = kappa;
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::mobius_oracle;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_rank_examples() {
        assert_eq!(mobius_small_rank(&p("12"), &p("1234")).unwrap(), 0);
        assert_eq!(mobius_small_rank(&p("12"), &p("123")).unwrap(), -1);
        assert_eq!(mobius_small_rank(&p("12"), &p("1324")).unwrap(), 1);
        assert_eq!(mobius_small_rank(&p("12"), &p("12")).unwrap(), 1);
        assert!(mobius_small_rank(&p("12"), &p("13245")).is_err());
        assert!(mobius_small_rank(&p("21"), &p("1234")).is_err());
    }

    #[test]
    fn small_rank_single_occurrence_with_long_tail_is_zero() {
        // 21 occurs in 1243 only at position 3; the interval is the chain
        // {21, 132, 1243} even though 1243 is not monotone.
        assert_eq!(mobius_small_rank(&p("21"), &p("1243")).unwrap(), 0);
        assert_eq!(mobius_oracle(&p("21"), &p("1243")).unwrap(), 0);
        // Same shape one size up, caught by the exhaustive sweep.
        assert_eq!(mobius_small_rank(&p("3421"), &p("463521")).unwrap(), 0);
        assert_eq!(mobius_oracle(&p("3421"), &p("463521")).unwrap(), 0);
    }

    #[test]
    fn one_occurrence_table() {
        let tp = |left, right| TailProfile { left, right };
        assert_eq!(mobius_one_occurrence(tp(0, 0)), 1);
        assert_eq!(mobius_one_occurrence(tp(1, 1)), 1);
        assert_eq!(mobius_one_occurrence(tp(0, 1)), -1);
        assert_eq!(mobius_one_occurrence(tp(1, 0)), -1);
        assert_eq!(mobius_one_occurrence(tp(3, 2)), 0);
        assert_eq!(mobius_one_occurrence(tp(2, 0)), 0);
    }

    #[test]
    fn find_carrier_examples() {
        let r = find_carrier(&p("321"), &p("431825976")).unwrap();
        assert_eq!(r.carrier, Some(p("321")));

        let r = find_carrier(&p("231"), &p("2,5,7,1,4,8,9,3,6,10")).unwrap();
        assert_eq!(r.carrier, Some(p("245136")));

        let r = find_carrier(&p("231"), &p("245136")).unwrap();
        assert_eq!(r.carrier, None);

        assert!(find_carrier(&p("231"), &p("253641")).is_err());
    }

    #[test]
    fn carrier_chains_are_chains() {
        for (s, t) in [
            ("321", "431825976"),
            ("231", "2,5,7,1,4,8,9,3,6,10"),
            ("231", "245136"),
            ("12", "1324"),
        ] {
            let r = find_carrier(&p(s), &p(t)).unwrap();
            for chain in [&r.prefix_chain, &r.suffix_chain] {
                for w in chain.windows(2) {
                    assert!(w[1].contains(&w[0]), "not a chain: {w:?}");
                }
            }
            assert!(r.common_elements().len() <= 1);
        }
    }

    #[test]
    fn fast_worked_examples() {
        let r = mobius_fast(&p("321"), &p("431825976"));
        assert_eq!(r.value, 1);
        assert_eq!(r.case, MobiusCase::InteriorAbsent);

        let r = mobius_fast(&p("231"), &p("2,5,7,1,4,8,9,3,6,10"));
        assert_eq!(r.value, 0);
        assert_eq!(r.case, MobiusCase::LongTail);

        let r = mobius_fast(&p("123"), &p("68513427"));
        assert_eq!(r.value, 0);
        assert_eq!(r.case, MobiusCase::OneOccurrence);

        let r = mobius_fast(&p("231"), &p("231"));
        assert_eq!(r.value, 1);
        assert_eq!(r.case, MobiusCase::Equal);

        let r = mobius_fast(&p("231"), &p("253641"));
        assert_eq!(r.value, 0);
        assert_eq!(r.case, MobiusCase::NotContained);
    }

    #[test]
    fn socle_chain_examples() {
        assert_eq!(socle_chain(&p("321"), &p("431825976")), vec![p("321")]);
        assert_eq!(
            socle_chain(&p("231"), &p("2,5,7,1,4,8,9,3,6,10")),
            vec![p("245136")]
        );
        assert_eq!(socle_chain(&p("123"), &p("68513427")), Vec::<Permutation>::new());
        assert_eq!(socle_chain(&p("12"), &p("21")), Vec::<Permutation>::new());
    }

    #[test]
    fn via_socle_recursion_runs_the_full_dispatch() {
        // The carrier of [231, 2 5 7 1 4 8 9 3 6 10] is 245136, and the
        // sub-interval [231, 245136] is decided by the one-occurrence case.
        let sub = mobius_fast(&p("231"), &p("245136"));
        assert_eq!(sub.case, MobiusCase::OneOccurrence);
        assert_eq!(sub.value, 0);
        assert_eq!(mobius_oracle(&p("231"), &p("245136")).unwrap(), 0);
    }

    #[test]
    fn via_socle_chain_is_populated() {
        // 21 occurs five times in 431825976 with tails (0,0) and also in
        // the interior, so the dispatch reaches the carrier scan; the bifix
        // 321 is the carrier and [21, 321] is a rank-1 chain.
        let sigma = p("21");
        let tau = p("431825976");
        let r = mobius_fast(&sigma, &tau);
        assert_eq!(r.case, MobiusCase::ViaSocle, "got {:?}", r.case);
        assert_eq!(r.carrier_chain, vec![p("321")]);
        assert_eq!(r.socle(), Some(&p("321")));
        assert_eq!(r.value, -1);
        assert_eq!(r.value, mobius_oracle(&sigma, &tau).unwrap());
    }

    #[test]
    fn record_round_trip() {
        let r = mobius_fast(&p("21"), &p("431825976"));
        let json = serde_json::to_string(&r.to_record()).unwrap();
        let back: MobiusRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.clone().into_result().unwrap(), r);
        assert_eq!(back, r.to_record());
    }
}
