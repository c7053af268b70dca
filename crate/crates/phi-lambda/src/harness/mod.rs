//! Monte Carlo experiment engine: logical-error-rate estimation with a
//! failure-count stopping rule, threshold and decay fits, minimum-size
//! scans, and the static-decoder control experiment.
//!
//! Sampling is deterministic for a fixed master seed regardless of worker
//! count: every sample owns a counter-derived random stream keyed by
//! `(seed, L, p_index, sample_index)`, results are folded strictly in
//! sample-index order, and the stopping rule is evaluated on that order.

pub mod output;
pub mod stats;
pub mod validate;

pub use output::{points_to_csv, points_to_json, points_to_svg, CSV_HEADER};
pub use stats::{
    fit_alpha, threshold_estimate, wilson_upper, FitResult, StatsError, ThresholdEstimate,
    BOOTSTRAP_RESAMPLES, DEFAULT_MIN_FIT_FAILURES,
};
pub use validate::{constants_json, validate_all, Check, ValidationReport};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::decoder::{self, DecoderVariant, Verdict};
use crate::lattice::{Geometry, GeometryError, SpinConfig};
use crate::noise::{apply_record, sample_errors, ErrorParams, NoiseError, RngSpec};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Noise(#[from] NoiseError),
    #[error("failed to build worker pool: {0}")]
    Pool(String),
}

/// Sampling stops at `target_failures` logical errors or at the
/// `max_samples` cap, whichever the sample-index order reaches first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StopRule {
    pub target_failures: u64,
    pub max_samples: u64,
}

impl Default for StopRule {
    fn default() -> Self {
        StopRule {
            target_failures: 1000,
            max_samples: 1_000_000,
        }
    }
}

/// Parameters of a sweep over lattice sizes and error rates.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub sizes: Vec<usize>,
    /// Symmetric rates: p_phi = p_lambda = p unless overridden below.
    pub error_rates: Vec<f64>,
    pub p_phi_override: Option<f64>,
    pub p_lambda_override: Option<f64>,
    pub stop: StopRule,
    pub master_seed: u64,
    /// 0 means one worker per logical CPU.
    pub workers: usize,
    pub variant: DecoderVariant,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            sizes: Vec::new(),
            error_rates: Vec::new(),
            p_phi_override: None,
            p_lambda_override: None,
            stop: StopRule::default(),
            master_seed: 0,
            workers: 0,
            variant: DecoderVariant::Adaptive,
        }
    }
}

/// Logical-error-rate estimate for one `(L, p)` cell.
#[derive(Clone, Debug, Serialize)]
pub struct PointEstimate {
    #[serde(rename = "L")]
    pub l: usize,
    pub p_phi: f64,
    pub p_lambda: f64,
    pub samples: u64,
    pub failures: u64,
    pub lambda_failures: u64,
    pub phi_failures: u64,
    #[serde(rename = "P")]
    pub p: f64,
    pub stderr: f64,
    /// True when the sample cap was hit before the failure target.
    pub censored: bool,
    pub seed: u64,
    #[serde(skip)]
    pub max_inspections: u64,
    #[serde(skip)]
    pub max_k: usize,
}

struct SampleOutcome {
    verdict: Verdict,
    inspections: u64,
    max_k: usize,
}

fn run_sample(
    geom: &Geometry,
    params: &ErrorParams,
    spec: RngSpec,
    l: usize,
    p_index: usize,
    sample_index: u64,
    variant: DecoderVariant,
) -> SampleOutcome {
    let mut rng = spec.sample_rng(l, p_index, sample_index);
    let mut config = SpinConfig::vacuum(geom);
    let record = sample_errors(geom, params, &mut rng);
    apply_record(geom, &mut config, &record);
    let report = decoder::decode_with(geom, &mut config, variant);
    SampleOutcome {
        verdict: report.verdict,
        inspections: report.candidate_inspections,
        max_k: report.max_k,
    }
}

/// Batch size for dispatching samples to the pool. Fixed (never derived
/// from the worker count) so batching cannot influence results.
const SAMPLE_BATCH: u64 = 4096;

/// Estimate the logical error rate at one `(L, p_phi, p_lambda)` cell.
pub fn estimate_point(
    config: &SweepConfig,
    l: usize,
    p_index: usize,
    p_phi: f64,
    p_lambda: f64,
) -> Result<PointEstimate, HarnessError> {
    let geom = Geometry::new(l)?;
    let params = ErrorParams::new(p_phi, p_lambda)?;
    let spec = RngSpec::new(config.master_seed);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;

    let stop = config.stop;
    let variant = config.variant;
    let mut samples = 0u64;
    let mut failures = 0u64;
    let mut lambda_failures = 0u64;
    let mut phi_failures = 0u64;
    let mut max_inspections = 0u64;
    let mut max_k = 0usize;

    'sampling: while samples < stop.max_samples && failures < stop.target_failures {
        let start = samples;
        let end = (start + SAMPLE_BATCH).min(stop.max_samples);
        let outcomes: Vec<SampleOutcome> = pool.install(|| {
            (start..end)
                .into_par_iter()
                .map(|i| run_sample(&geom, &params, spec, l, p_index, i, variant))
                .collect()
        });
        for out in outcomes {
            samples += 1;
            max_inspections = max_inspections.max(out.inspections);
            max_k = max_k.max(out.max_k);
            match out.verdict {
                Verdict::Success => {}
                Verdict::LambdaLogical => {
                    failures += 1;
                    lambda_failures += 1;
                }
                Verdict::PhiLogical => {
                    failures += 1;
                    phi_failures += 1;
                }
            }
            if failures == stop.target_failures {
                break 'sampling;
            }
        }
    }

    let p = failures as f64 / samples as f64;
    Ok(PointEstimate {
        l,
        p_phi,
        p_lambda,
        samples,
        failures,
        lambda_failures,
        phi_failures,
        p,
        stderr: (p * (1.0 - p) / samples as f64).sqrt(),
        censored: failures < stop.target_failures,
        seed: config.master_seed,
        max_inspections,
        max_k,
    })
}

/// Run the full grid, reporting each finished point to the callback.
pub fn sweep_with(
    config: &SweepConfig,
    mut on_point: impl FnMut(&PointEstimate),
) -> Result<Vec<PointEstimate>, HarnessError> {
    let mut points = Vec::with_capacity(config.sizes.len() * config.error_rates.len());
    for &l in &config.sizes {
        for (p_index, &p) in config.error_rates.iter().enumerate() {
            let p_phi = config.p_phi_override.unwrap_or(p);
            let p_lambda = config.p_lambda_override.unwrap_or(p);
            let pt = estimate_point(config, l, p_index, p_phi, p_lambda)?;
            on_point(&pt);
            points.push(pt);
        }
    }
    Ok(points)
}

pub fn sweep(config: &SweepConfig) -> Result<Vec<PointEstimate>, HarnessError> {
    sweep_with(config, |_| {})
}

/// The same grid decoded by the predetermined static sweep.
pub fn static_control_experiment(
    config: &SweepConfig,
) -> Result<Vec<PointEstimate>, HarnessError> {
    let mut config = config.clone();
    config.variant = DecoderVariant::Static;
    sweep(&config)
}

/// Result of the minimum-useful-size scan at a fixed physical rate.
#[derive(Clone, Debug, Serialize)]
pub struct LstarScan {
    pub p: f64,
    /// Smallest size with `P < p`, or `None` if not found up to `l_max`.
    pub found: Option<usize>,
    pub l_max: usize,
    pub points: Vec<PointEstimate>,
}

/// Scan sizes upward until the logical error rate beats the physical rate:
/// uncensored points need `P < p` with at least 10 failures; censored
/// points qualify when their Wilson upper bound is below `p`.
pub fn find_lstar(
    p: f64,
    config: &SweepConfig,
    l_max: usize,
) -> Result<LstarScan, HarnessError> {
    if p == 0.0 {
        // P is identically zero; the smallest lattice already achieves it
        return Ok(LstarScan {
            p,
            found: Some(2),
            l_max,
            points: Vec::new(),
        });
    }
    let mut points = Vec::new();
    let mut found = None;
    for l in 2..=l_max {
        let pt = estimate_point(config, l, 0, p, p)?;
        let hit = if pt.censored {
            wilson_upper(pt.failures, pt.samples, 1.96) < p
        } else {
            pt.p < p && pt.failures >= DEFAULT_MIN_FIT_FAILURES
        };
        points.push(pt);
        if hit {
            found = Some(l);
            break;
        }
    }
    Ok(LstarScan {
        p,
        found,
        l_max,
        points,
    })
}
