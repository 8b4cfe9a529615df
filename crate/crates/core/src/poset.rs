//! Explicit intervals in the consecutive-pattern containment poset, their
//! Hasse diagrams, and the brute-force Mobius oracle computed straight from
//! the defining recursion. This is the ground truth the fast algorithm is
//! cross-checked against, so everything here stays as direct as possible.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default guard on `|tau|` for the oracle: pairwise order tests inside an
/// interval are quartic in `|tau|`, and the oracle exists for small-instance
/// ground truth only.
pub const DEFAULT_ORACLE_BOUND: usize = 60;

/// The permutations covered by `t`: the standardizations obtained by
/// deleting the first or the last letter. One element when `t` is monotone,
/// two otherwise.
pub fn covered_by(t: &Permutation) -> Result<Vec<Permutation>> {
    if t.len() < 2 {
        return Err(Error::InvalidInput(
            "nothing lies below a permutation of length 1".into(),
        ));
    }
    let a = t.drop_first()?;
    let b = t.drop_last()?;
    if a == b {
        Ok(vec![a])
    } else {
        Ok(vec![a, b])
    }
}

/// The interval `[sigma, tau]`: its deduplicated element set together with
/// the containment relation restricted to it.
///
/// Elements are stored sorted by `(length, lexicographic)`; index 0 is sigma
/// and the last index is tau.
#[derive(Debug, Clone)]
pub struct Interval {
    sigma: Permutation,
    tau: Permutation,
    elements: Vec<Permutation>,
    /// `le[i * n + j]` is true when element i occurs in element j.
    le: Vec<bool>,
}

/// Cover edges of an interval. `edges` holds `(lower, upper)` index pairs
/// into `nodes`, with the upper element covering the lower.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    nodes: Vec<Permutation>,
    edges: Vec<(usize, usize)>,
    sigma: Permutation,
    tau: Permutation,
    rank: usize,
}

#[derive(Serialize)]
struct HasseRecord {
    nodes: Vec<String>,
    edges: Vec<[String; 2]>,
    sigma: String,
    tau: String,
    rank: usize,
}

impl Interval {
    /// Enumerates `[sigma, tau]`. Every element below tau standardizes some
    /// contiguous window of tau, so candidates are the O(n^2) windows that
    /// contain an occurrence of sigma.
    pub fn build(sigma: &Permutation, tau: &Permutation) -> Result<Interval> {
        let occs = tau.occurrences_of(sigma);
        if occs.is_empty() {
            return Err(Error::NotContained {
                sigma: sigma.to_string(),
                tau: tau.to_string(),
            });
        }
        let n = tau.len();
        let k = sigma.len();
        let mut elements: Vec<Permutation> = Vec::new();
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        for start in 1..=n {
            for end in (start + k - 1)..=n {
                // Window [start, end] (1-based, inclusive) must contain a
                // full occurrence of sigma.
                let covers = occs.iter().any(|&o| start <= o && o + k - 1 <= end);
                if !covers {
                    continue;
                }
                let w = Permutation::standardize(&tau.values()[start - 1..end])?;
                if seen.insert(w.clone(), ()).is_none() {
                    elements.push(w);
                }
            }
        }
        elements.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let m = elements.len();
        let mut le = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                if elements[i].len() <= elements[j].len() {
                    le[i * m + j] = elements[j].contains(&elements[i]);
                }
            }
        }
        Ok(Interval {
            sigma: sigma.clone(),
            tau: tau.clone(),
            elements,
            le,
        })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    /// Rank of the interval: `|tau| - |sigma|`.
    pub fn rank(&self) -> usize {
        self.tau.len() - self.sigma.len()
    }

    /// Elements sorted by `(length, lexicographic)`.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty() // never true: sigma and tau are members
    }

    /// Containment between elements by index.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i * self.elements.len() + j]
    }

    /// Cover edges. Intervals of this poset are graded by length (deleting
    /// an end letter of the upper element outside a fixed occurrence of the
    /// lower one stays inside the interval), so covers are exactly the
    /// related pairs whose lengths differ by 1.
    pub fn hasse(&self) -> HasseDiagram {
        let mut edges = Vec::new();
        for j in 0..self.elements.len() {
            for i in 0..self.elements.len() {
                if self.elements[j].len() == self.elements[i].len() + 1 && self.le(i, j) {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        HasseDiagram {
            nodes: self.elements.clone(),
            edges,
            sigma: self.sigma.clone(),
            tau: self.tau.clone(),
            rank: self.rank(),
        }
    }

    /// Cover edges computed by the generic definition: `u < v` with no
    /// element strictly between. Kept as an independent route for tests.
    pub fn hasse_by_filtering(&self) -> HasseDiagram {
        let m = self.elements.len();
        let mut edges = Vec::new();
        for j in 0..m {
            for i in 0..m {
                if i == j || !self.le(i, j) {
                    continue;
                }
                let blocked =
                    (0..m).any(|w| w != i && w != j && self.le(i, w) && self.le(w, j));
                if !blocked {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        HasseDiagram {
            nodes: self.elements.clone(),
            edges,
            sigma: self.sigma.clone(),
            tau: self.tau.clone(),
            rank: self.rank(),
        }
    }

    /// Mobius values `mu(sigma, z)` for every element `z`, computed bottom-up
    /// from the defining recursion. Order matches `elements()`.
    pub fn mobius_from_bottom(&self) -> Vec<i64> {
        let m = self.elements.len();
        let mut mu = vec![0i64; m];
        for j in 0..m {
            if self.elements[j] == self.sigma {
                mu[j] = 1;
            } else {
                let below: i64 = mu
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j && self.le(i, j))
                    .map(|(_, &v)| v)
                    .sum();
                mu[j] = -below;
            }
        }
        mu
    }

    /// Mobius values `mu(z, tau)` for every element `z`, computed from the
    /// upside-down recursion. Order matches `elements()`.
    pub fn mobius_from_top(&self) -> Vec<i64> {
        let m = self.elements.len();
        let mut mu = vec![0i64; m];
        for j in (0..m).rev() {
            if self.elements[j] == self.tau {
                mu[j] = 1;
            } else {
                let above: i64 = mu
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j && self.le(j, i))
                    .map(|(_, &v)| v)
                    .sum();
                mu[j] = -above;
            }
        }
        mu
    }
}

impl HasseDiagram {
    pub fn nodes(&self) -> &[Permutation] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cover pairs as permutations, `(covered, covering)`.
    pub fn edge_perms(&self) -> impl Iterator<Item = (&Permutation, &Permutation)> {
        self.edges.iter().map(|&(i, j)| (&self.nodes[i], &self.nodes[j]))
    }

    /// DOT text: one node per permutation labeled with its comma-separated
    /// form and a rank attribute, one directed edge per cover.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph interval {\n");
        out.push_str("  rankdir=BT;\n");
        for node in &self.nodes {
            let rank = node.len() - self.sigma.len();
            let _ = writeln!(out, "  \"{node}\" [rank={rank}];");
        }
        for (u, v) in self.edge_perms() {
            let _ = writeln!(out, "  \"{u}\" -> \"{v}\";");
        }
        out.push_str("}\n");
        out
    }

    /// Structured record `{nodes, edges, sigma, tau, rank}` as JSON.
    pub fn to_json(&self) -> String {
        let record = HasseRecord {
            nodes: self.nodes.iter().map(|p| p.to_string()).collect(),
            edges: self
                .edge_perms()
                .map(|(u, v)| [u.to_string(), v.to_string()])
                .collect(),
            sigma: self.sigma.to_string(),
            tau: self.tau.to_string(),
            rank: self.rank,
        };
        serde_json::to_string_pretty(&record).expect("hasse record serializes")
    }
}

/// `mu(sigma, tau)` from the defining recursion with the default size guard.
pub fn mobius_oracle(sigma: &Permutation, tau: &Permutation) -> Result<i64> {
    mobius_oracle_bounded(sigma, tau, DEFAULT_ORACLE_BOUND)
}

/// `mu(sigma, tau)` from the upside-down recursion with the default guard.
/// Agrees with `mobius_oracle` on every input by Hall's theorem.
pub fn mobius_oracle_topdown(sigma: &Permutation, tau: &Permutation) -> Result<i64> {
    mobius_oracle_topdown_bounded(sigma, tau, DEFAULT_ORACLE_BOUND)
}

pub fn mobius_oracle_bounded(
    sigma: &Permutation,
    tau: &Permutation,
    bound: usize,
) -> Result<i64> {
    oracle_guard(tau, bound)?;
    if sigma == tau {
        return Ok(1);
    }
    if !tau.contains(sigma) {
        return Ok(0);
    }
    let interval = Interval::build(sigma, tau)?;
    Ok(*interval.mobius_from_bottom().last().expect("tau is a member"))
}

pub fn mobius_oracle_topdown_bounded(
    sigma: &Permutation,
    tau: &Permutation,
    bound: usize,
) -> Result<i64> {
    oracle_guard(tau, bound)?;
    if sigma == tau {
        return Ok(1);
    }
    if !tau.contains(sigma) {
        return Ok(0);
    }
    let interval = Interval::build(sigma, tau)?;
    Ok(interval.mobius_from_top()[0])
}

fn oracle_guard(tau: &Permutation, bound: usize) -> Result<()> {
    if tau.len() > bound {
        return Err(Error::OracleTooLarge {
            len: tau.len(),
            bound,
        });
    }
    Ok(())
}
