//! Independent per-spin flip noise and reproducible random streams.
//!
//! Each spin independently suffers no flip with probability
//! `1 - p_phi - p_lambda`, the Lambda-creating flip (g = 3) with probability
//! `p_lambda`, and one of the four Phi-creating flips (g in {1,2,4,5}, each
//! `p_phi / 4`) with probability `p_phi`. One round per sample; errors do not
//! accumulate over time.

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Charge, PHI_RESIDUES};
use crate::lattice::{Geometry, SpinConfig};

#[derive(Debug, Error, PartialEq)]
pub enum NoiseError {
    #[error("error probabilities must be in [0,1] with p_phi + p_lambda <= 1 (got p_phi={p_phi}, p_lambda={p_lambda})")]
    InvalidRates { p_phi: f64, p_lambda: f64 },
}

/// Validated per-spin flip probabilities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorParams {
    p_phi: f64,
    p_lambda: f64,
}

impl ErrorParams {
    pub fn new(p_phi: f64, p_lambda: f64) -> Result<ErrorParams, NoiseError> {
        let in_range = |p: f64| (0.0..=1.0).contains(&p);
        if !in_range(p_phi) || !in_range(p_lambda) || p_phi + p_lambda > 1.0 {
            return Err(NoiseError::InvalidRates { p_phi, p_lambda });
        }
        Ok(ErrorParams { p_phi, p_lambda })
    }

    /// The regime used throughout the experiments: `p_phi = p_lambda = p`.
    pub fn symmetric(p: f64) -> Result<ErrorParams, NoiseError> {
        ErrorParams::new(p, p)
    }

    pub fn p_phi(&self) -> f64 {
        self.p_phi
    }

    pub fn p_lambda(&self) -> f64 {
        self.p_lambda
    }
}

/// The flips applied in one error round: at most one `(spin, g)` per spin.
/// Serializes as `[[spin, g], ...]` for trace replay.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FlipRecord(pub Vec<(usize, u8)>);

impl FlipRecord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The record undoing this one (each g replaced by 6 - g).
    pub fn inverse(&self) -> FlipRecord {
        FlipRecord(self.0.iter().map(|&(s, g)| (s, (6 - g) % 6)).collect())
    }
}

/// Draw one error round for every spin of the lattice.
pub fn sample_errors<R: Rng + ?Sized>(
    geom: &Geometry,
    params: &ErrorParams,
    rng: &mut R,
) -> FlipRecord {
    let mut flips = Vec::new();
    for spin in 0..geom.spin_count() {
        let u: f64 = rng.gen();
        if u < params.p_lambda {
            flips.push((spin, 3));
        } else if u < params.p_lambda + params.p_phi {
            flips.push((spin, PHI_RESIDUES[rng.gen_range(0..4)]));
        }
    }
    FlipRecord(flips)
}

/// Apply every recorded flip to the configuration.
pub fn apply_record(geom: &Geometry, config: &mut SpinConfig, record: &FlipRecord) {
    for &(spin, g) in &record.0 {
        config.apply_flip(geom, spin, Charge::new(g));
    }
}

// ---------------------------------------------------------------------------
// Stream derivation
// ---------------------------------------------------------------------------

/// Counter-based derivation of independent per-sample random streams.
///
/// The stream for a sample depends only on `(master_seed, L, p_index,
/// sample_index)`, never on execution order, so runs are reproducible for any
/// worker count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RngSpec {
    pub master_seed: u64,
}

impl RngSpec {
    pub fn new(master_seed: u64) -> RngSpec {
        RngSpec { master_seed }
    }

    pub fn sample_rng(&self, l: usize, p_index: usize, sample_index: u64) -> Pcg64 {
        let mut h = splitmix64(self.master_seed);
        for v in [l as u64, p_index as u64, sample_index] {
            h = splitmix64(h ^ splitmix64(v.wrapping_add(0x9E37_79B9_7F4A_7C15)));
        }
        Pcg64::seed_from_u64(h)
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
