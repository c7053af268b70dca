//! Simulator, decoder and Monte Carlo benchmark suite for the Phi-Lambda
//! non-Abelian anyon model on a planar lattice of six-level spins.
//!
//! The crate has three layers:
//!
//! * exact model data: Z6 charge algebra, pair-splitting statistics, fusion
//!   tables and a braid-order witness ([`algebra`]), plus a 1296-amplitude
//!   quantum oracle for one plaquette that certifies the classical rules
//!   ([`ds3`]);
//! * the lattice simulation: geometry and charge bookkeeping ([`lattice`]),
//!   the independent spin-flip error model ([`noise`]), and the two-phase
//!   adaptive decoder with its syndrome-blind static control ([`decoder`]);
//! * the experiment engine: deterministic parallel logical-error-rate
//!   estimation, threshold and decay fits, and CSV/JSON/SVG output
//!   ([`harness`]).
//!
//! Each major capability has a runnable example; start with
//! `cargo run --release --example fusion_algebra` and see the README for the
//! full catalog. The `phi-lambda` binary drives the same machinery from the
//! command line.

pub mod algebra;
pub mod decoder;
pub mod ds3;
pub mod harness;
pub mod lattice;
pub mod noise;
pub mod rational;

pub use algebra::{AnyonKind, Charge};
pub use decoder::{decode, decode_with, static_decode, DecodeReport, DecoderVariant, Verdict};
pub use lattice::{Geometry, Region, Side, SpinConfig};
pub use noise::{apply_record, sample_errors, ErrorParams, FlipRecord, RngSpec};
