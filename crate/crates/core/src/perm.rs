//! Permutations in one-line notation and the primitive operations on them:
//! standardization, consecutive-occurrence detection, tails, affix patterns
//! and monotonicity tests.
//!
//! All positions reported by this module are 1-based, matching the usual
//! convention for one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, 2, ..., n}` written in one-line notation.
///
/// Equality is positionwise equality of the values. The derived `Ord` is
/// lexicographic on the value sequence; sorts that need the canonical
/// "(length, lexicographic)" order should key on `(p.len(), p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

/// Which end of a permutation an affix is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Left and right tail lengths of a permutation with respect to a pattern:
/// the letters before the first, and after the last, letter involved in any
/// occurrence of the pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TailProfile {
    pub left: usize,
    pub right: usize,
}

impl TailProfile {
    /// True when either tail has length at least 2.
    pub fn has_long_tail(&self) -> bool {
        self.left >= 2 || self.right >= 2
    }
}

impl Permutation {
    /// Builds a permutation from explicit one-line values, checking that they
    /// are exactly a rearrangement of `1..=n`.
    pub fn from_values(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty permutation".into()));
        }
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidInput(format!(
                    "value {v} out of range for a permutation of length {n}"
                )));
            }
            if seen[v as usize - 1] {
                return Err(Error::InvalidInput(format!("duplicate value {v}")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    /// The standard form of a sequence of distinct integers: the unique
    /// permutation of `{1..n}` whose letters appear in the same order of
    /// size. Idempotent on permutations.
    pub fn standardize<T: Ord + Copy>(seq: &[T]) -> Result<Self> {
        let n = seq.len();
        if n == 0 {
            return Err(Error::InvalidInput("cannot standardize an empty sequence".into()));
        }
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| seq[i]);
        for w in idx.windows(2) {
            if seq[w[0]] == seq[w[1]] {
                return Err(Error::InvalidInput("duplicate entries in sequence".into()));
            }
        }
        let mut values = vec![0u32; n];
        for (rank, &i) in idx.iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Ok(Permutation { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty() // never true: construction requires n >= 1
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// All 1-based start positions of consecutive occurrences of `pattern`
    /// in `self`, in ascending order.
    pub fn occurrences_of(&self, pattern: &Permutation) -> Vec<usize> {
        let n = self.len();
        let k = pattern.len();
        if k > n {
            return Vec::new();
        }
        // Reading a window's letters in the order pattern's values would
        // sort them must give an increasing sequence. argsort(pattern) is
        // computed once, making each window test O(k).
        let order = pattern.argsort();
        let mut out = Vec::new();
        'windows: for start in 0..=(n - k) {
            let w = &self.values[start..start + k];
            for j in 1..k {
                if w[order[j - 1]] >= w[order[j]] {
                    continue 'windows;
                }
            }
            out.push(start + 1);
        }
        out
    }

    /// True when `pattern` has at least one consecutive occurrence in `self`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        !self.occurrences_of(pattern).is_empty()
    }

    /// Tail lengths of `self` with respect to `pattern`, over all
    /// occurrences. Errors when `pattern` does not occur.
    pub fn tails_of(&self, pattern: &Permutation) -> Result<TailProfile> {
        let occs = self.occurrences_of(pattern);
        match (occs.first(), occs.last()) {
            (Some(&first), Some(&last)) => Ok(TailProfile {
                left: first - 1,
                right: self.len() - (last + pattern.len() - 1),
            }),
            _ => Err(Error::NotContained {
                sigma: pattern.to_string(),
                tau: self.to_string(),
            }),
        }
    }

    /// The prefix or suffix pattern of length `k`: the standardization of
    /// the first (left) or last (right) `k` letters.
    pub fn affix_pattern(&self, k: usize, side: Side) -> Result<Permutation> {
        let n = self.len();
        if k == 0 || k > n {
            return Err(Error::InvalidInput(format!(
                "affix length {k} out of range 1..={n}"
            )));
        }
        let window = match side {
            Side::Left => &self.values[..k],
            Side::Right => &self.values[n - k..],
        };
        Permutation::standardize(window)
    }

    pub fn prefix_pattern(&self, k: usize) -> Result<Permutation> {
        self.affix_pattern(k, Side::Left)
    }

    pub fn suffix_pattern(&self, k: usize) -> Result<Permutation> {
        self.affix_pattern(k, Side::Right)
    }

    /// True when the prefix and suffix patterns of length `k` coincide.
    pub fn is_bifix(&self, k: usize) -> Result<bool> {
        Ok(self.prefix_pattern(k)? == self.suffix_pattern(k)?)
    }

    /// Standardization of `self` with the indicated end letters removed.
    /// `trim(true, true)` yields the interior.
    pub fn trim(&self, drop_first: bool, drop_last: bool) -> Result<Permutation> {
        let lo = usize::from(drop_first);
        let hi = self.len() - usize::from(drop_last);
        if lo >= hi {
            return Err(Error::InvalidInput(
                "trim would leave an empty permutation".into(),
            ));
        }
        Permutation::standardize(&self.values[lo..hi])
    }

    /// Standard form after removing the first letter.
    pub fn drop_first(&self) -> Result<Permutation> {
        self.trim(true, false)
    }

    /// Standard form after removing the last letter.
    pub fn drop_last(&self) -> Result<Permutation> {
        self.trim(false, true)
    }

    /// The interior: standard form after removing both end letters.
    pub fn interior(&self) -> Result<Permutation> {
        self.trim(true, true)
    }

    /// True for the increasing permutation `12...n`, the decreasing
    /// permutation `n...21`, and every permutation of length 1.
    pub fn is_monotone(&self) -> bool {
        is_monotone_seq(&self.values)
    }

    /// True when the permutation alternates (ascent-first or descent-first)
    /// and the subsequences at odd and at even positions are each monotone.
    /// Length <= 2 is accepted vacuously.
    pub fn is_monotone_alternating(&self) -> bool {
        let v = &self.values;
        let n = v.len();
        if n > 2 {
            for i in 0..n - 2 {
                let up = v[i] < v[i + 1];
                let then_up = v[i + 1] < v[i + 2];
                if up == then_up {
                    return false;
                }
            }
        }
        let odd: Vec<u32> = v.iter().copied().step_by(2).collect();
        let even: Vec<u32> = v.iter().copied().skip(1).step_by(2).collect();
        is_monotone_seq(&odd) && is_monotone_seq(&even)
    }

    /// Positions (0-based) of the values in increasing order of value.
    fn argsort(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| self.values[i]);
        idx
    }
}

fn is_monotone_seq(v: &[u32]) -> bool {
    v.len() <= 1 || v.windows(2).all(|w| w[0] < w[1]) || v.windows(2).all(|w| w[0] > w[1])
}

/// Canonical text form: comma-separated values.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Two accepted text forms: a comma-separated value list ("2,5,1,4,3"), or a
/// compact digit string ("231") which is unambiguous only for n <= 9.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidInput("empty permutation string".into()));
        }
        let values: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidInput(format!("bad value {part:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            // Compact form: single digits only, so "10" cannot be mistaken
            // for the pair (1, 0).
            if s.len() > 9 {
                return Err(Error::InvalidInput(
                    "compact digit form is only allowed for length <= 9; use commas".into(),
                ));
            }
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d @ 1..=9) => Ok(d),
                    _ => Err(Error::InvalidInput(format!(
                        "bad character {c:?} in compact permutation"
                    ))),
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_values(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}
