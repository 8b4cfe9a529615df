//! Scaling benchmark for the fast algorithm on worst-case instances: sigma
//! planted at both ends of a random tau with no carrier, which forces the
//! descending scan to visit every candidate length. Reports per-size wall
//! times and the fitted log-log slope.

use std::time::Instant;

use crate::generate::{both_ends_instance, random_non_monotone, rng_from_seed};
use crate::mobius::{mobius_fast, MobiusCase};
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub sigma_len: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![250, 500, 1000, 2000],
            seed: 1,
            sigma_len: 5,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: usize,
    pub sigma: Permutation,
    pub case: MobiusCase,
    pub value: i64,
    pub seconds: f64,
    pub iterations: u32,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of `ln(time)` against `ln(n)`; absent with
    /// fewer than two distinct sizes.
    pub slope: Option<f64>,
}

/// Runs the benchmark. Instance generation is seed-deterministic and not
/// timed; each size is timed over enough iterations to smooth out clock
/// noise and the fastest iteration is reported.
pub fn run_bench(config: &BenchConfig) -> BenchReport {
    let mut rng = rng_from_seed(config.seed);
    let mut rows = Vec::new();
    for &n in &config.sizes {
        let sigma = random_non_monotone(config.sigma_len, &mut rng);
        let tau = both_ends_instance(&sigma, n, &mut rng);
        // One untimed run pins down the dispatch case.
        let reference = mobius_fast(&sigma, &tau);
        let iterations = pick_iterations(&sigma, &tau);
        let mut best = f64::INFINITY;
        for _ in 0..iterations {
            let start = Instant::now();
            let result = mobius_fast(&sigma, &tau);
            let elapsed = start.elapsed().as_secs_f64();
            assert_eq!(result.value, reference.value);
            best = best.min(elapsed);
        }
        rows.push(BenchRow {
            n,
            sigma,
            case: reference.case,
            value: reference.value,
            seconds: best,
            iterations,
        });
    }
    let slope = fit_log_log_slope(
        &rows.iter().map(|r| r.n as f64).collect::<Vec<_>>(),
        &rows.iter().map(|r| r.seconds).collect::<Vec<_>>(),
    );
    BenchReport { rows, slope }
}

fn pick_iterations(sigma: &Permutation, tau: &Permutation) -> u32 {
    let start = Instant::now();
    let _ = mobius_fast(sigma, tau);
    let once = start.elapsed().as_secs_f64().max(1e-9);
    // Aim for roughly 100 ms of total measurement per size.
    (0.1 / once).clamp(3.0, 1000.0) as u32
}

/// Least-squares slope of `ln(y)` on `ln(x)`.
pub fn fit_log_log_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    if ys.iter().any(|&y| y <= 0.0) || xs.iter().any(|&x| x <= 0.0) {
        return None;
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / lx.len() as f64;
    let my = ly.iter().sum::<f64>() / ly.len() as f64;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in lx.iter().zip(&ly) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    if den == 0.0 {
        return None;
    }
    Some(num / den)
}
