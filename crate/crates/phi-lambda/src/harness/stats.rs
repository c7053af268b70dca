//! Fits and estimators over Monte Carlo point estimates.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use thiserror::Error;

use super::PointEstimate;

/// Points with fewer failures than this are excluded from log-space fits.
pub const DEFAULT_MIN_FIT_FAILURES: u64 = 10;

/// Bootstrap resamples used for the threshold confidence interval.
pub const BOOTSTRAP_RESAMPLES: usize = 1000;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("need at least {needed} usable points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("no crossing in range: the size curves never intersect")]
    NoCrossing,
}

/// Least-squares fit of `ln P = ln c - alpha * L`.
#[derive(Clone, Copy, Debug)]
pub struct FitResult {
    pub alpha: f64,
    pub c: f64,
    /// Sum of squared residuals in log space.
    pub residual: f64,
    pub points_used: usize,
}

pub fn fit_alpha(points: &[PointEstimate], min_failures: u64) -> Result<FitResult, StatsError> {
    let usable: Vec<(f64, f64)> = points
        .iter()
        .filter(|pt| pt.failures >= min_failures && pt.p > 0.0)
        .map(|pt| (pt.l as f64, pt.p.ln()))
        .collect();
    if usable.len() < 3 {
        return Err(StatsError::TooFewPoints {
            needed: 3,
            got: usable.len(),
        });
    }
    let n = usable.len() as f64;
    let sx: f64 = usable.iter().map(|&(x, _)| x).sum();
    let sy: f64 = usable.iter().map(|&(_, y)| y).sum();
    let sxx: f64 = usable.iter().map(|&(x, _)| x * x).sum();
    let sxy: f64 = usable.iter().map(|&(x, y)| x * y).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    let residual = usable
        .iter()
        .map(|&(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    Ok(FitResult {
        alpha: -slope,
        c: intercept.exp(),
        residual,
        points_used: usable.len(),
    })
}

/// Threshold estimate from pairwise crossings of the size curves.
#[derive(Clone, Debug)]
pub struct ThresholdEstimate {
    pub p_c: f64,
    /// 2.5%..97.5% bootstrap interval over per-point binomial uncertainty.
    pub interval: (f64, f64),
    /// One crossing per adjacent size pair: (smaller L, larger L, p).
    pub crossings: Vec<(usize, usize, f64)>,
}

/// Minimal sweep data needed by the crossing search: per size, the
/// `(p, samples, failures)` rows sorted by p.
type Curves = BTreeMap<usize, Vec<(f64, u64, u64)>>;

fn curves_of(points: &[PointEstimate]) -> Curves {
    let mut curves: Curves = BTreeMap::new();
    for pt in points {
        curves
            .entry(pt.l)
            .or_default()
            .push((pt.p_phi, pt.samples, pt.failures));
    }
    for rows in curves.values_mut() {
        rows.sort_by(|a, b| a.0.total_cmp(&b.0));
    }
    curves
}

/// Crossings of `ln P` between adjacent sizes, linearly interpolated in p.
/// Below threshold the larger size has the smaller rate, so the difference
/// `ln P_small - ln P_large` starts positive and crosses zero.
fn pair_crossings(curves: &Curves) -> Vec<(usize, usize, f64)> {
    let sizes: Vec<usize> = curves.keys().copied().collect();
    let mut out = Vec::new();
    for pair in sizes.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let rows_a = &curves[&a];
        let rows_b = &curves[&b];
        let mut diffs: Vec<(f64, f64)> = Vec::new();
        for &(p, n1, f1) in rows_a {
            if f1 == 0 {
                continue;
            }
            if let Some(&(_, n2, f2)) = rows_b.iter().find(|&&(q, _, f)| q == p && f > 0) {
                let d = (f1 as f64 / n1 as f64).ln() - (f2 as f64 / n2 as f64).ln();
                diffs.push((p, d));
            }
        }
        for w in diffs.windows(2) {
            let (p0, d0) = w[0];
            let (p1, d1) = w[1];
            if d0 > 0.0 && d1 <= 0.0 {
                let t = d0 / (d0 - d1);
                out.push((a, b, p0 + t * (p1 - p0)));
                break;
            }
        }
    }
    out
}

/// Estimate the threshold as the mean pairwise crossing, with a bootstrap
/// interval over binomial resampling of every point's failure count.
pub fn threshold_estimate(
    points: &[PointEstimate],
    seed: u64,
) -> Result<ThresholdEstimate, StatsError> {
    let curves = curves_of(points);
    if curves.len() < 2 {
        return Err(StatsError::TooFewPoints {
            needed: 2,
            got: curves.len(),
        });
    }
    let crossings = pair_crossings(&curves);
    if crossings.is_empty() {
        return Err(StatsError::NoCrossing);
    }
    let p_c = crossings.iter().map(|&(_, _, p)| p).sum::<f64>() / crossings.len() as f64;

    let mut rng = Pcg64::seed_from_u64(seed ^ 0xB007_57AB);
    let mut resampled = Vec::with_capacity(BOOTSTRAP_RESAMPLES);
    for _ in 0..BOOTSTRAP_RESAMPLES {
        let mut perturbed = curves.clone();
        for rows in perturbed.values_mut() {
            for row in rows.iter_mut() {
                row.2 = resample_binomial(row.1, row.2, &mut rng);
            }
        }
        let cs = pair_crossings(&perturbed);
        if !cs.is_empty() {
            resampled.push(cs.iter().map(|&(_, _, p)| p).sum::<f64>() / cs.len() as f64);
        }
    }
    let interval = if resampled.is_empty() {
        (p_c, p_c)
    } else {
        resampled.sort_by(f64::total_cmp);
        let lo = resampled[(resampled.len() as f64 * 0.025) as usize];
        let hi = resampled[((resampled.len() as f64 * 0.975) as usize).min(resampled.len() - 1)];
        (lo, hi)
    };
    Ok(ThresholdEstimate {
        p_c,
        interval,
        crossings,
    })
}

/// Normal-approximation binomial resample; adequate for the failure counts
/// (hundreds and up) the stopping rule produces.
fn resample_binomial<R: Rng>(n: u64, f: u64, rng: &mut R) -> u64 {
    if n == 0 {
        return 0;
    }
    let p = f as f64 / n as f64;
    let sd = (n as f64 * p * (1.0 - p)).sqrt();
    let u1: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.gen();
    let z = (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
    let drawn = (f as f64 + sd * z).round();
    drawn.clamp(0.0, n as f64) as u64
}

/// One-sided Wilson score upper bound for a binomial proportion.
pub fn wilson_upper(failures: u64, samples: u64, z: f64) -> f64 {
    if samples == 0 {
        return 1.0;
    }
    let n = samples as f64;
    let p = failures as f64 / n;
    let z2 = z * z;
    ((p + z2 / (2.0 * n) + z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt()) / (1.0 + z2 / n))
        .min(1.0)
}
