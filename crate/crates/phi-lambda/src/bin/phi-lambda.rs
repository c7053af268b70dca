//! Command-line driver for the Phi-Lambda simulator and decoder toolkit.
//!
//! Thin layer over the library: every subcommand maps onto one harness
//! entry point. Exit codes: 0 ok, 1 validation failure, 2 bad arguments,
//! 3 no crossing / insufficient data.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use phi_lambda::harness::{
    constants_json, find_lstar, fit_alpha, points_to_csv, points_to_json, points_to_svg,
    static_control_experiment, sweep_with, threshold_estimate, validate_all, PointEstimate,
    StatsError, StopRule, SweepConfig, DEFAULT_MIN_FIT_FAILURES,
};
use phi_lambda::{
    apply_record, decode_with, sample_errors, DecoderVariant, ErrorParams, FlipRecord, Geometry,
    RngSpec, SpinConfig,
};

#[derive(Parser)]
#[command(name = "phi-lambda", version, about = "Non-Abelian anyon decoder benchmark suite")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Adaptive,
    Static,
    StrictSinglePass,
}

impl From<VariantArg> for DecoderVariant {
    fn from(v: VariantArg) -> DecoderVariant {
        match v {
            VariantArg::Adaptive => DecoderVariant::Adaptive,
            VariantArg::Static => DecoderVariant::Static,
            VariantArg::StrictSinglePass => DecoderVariant::StrictSinglePass,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Svg,
}

#[derive(Args)]
struct McArgs {
    /// Lattice size (repeatable)
    #[arg(short = 'L', long = "size")]
    sizes: Vec<usize>,

    /// Symmetric error rate p_phi = p_lambda = p (repeatable)
    #[arg(long = "p")]
    p: Vec<f64>,

    /// Override p_phi independently of --p
    #[arg(long)]
    p_phi: Option<f64>,

    /// Override p_lambda independently of --p
    #[arg(long)]
    p_lambda: Option<f64>,

    /// Master seed; fixes every sample stream
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Stop a point once this many logical failures occurred
    #[arg(long, default_value_t = 1000)]
    failures: u64,

    /// Hard cap on samples per point (censored if hit first)
    #[arg(long, default_value_t = 1_000_000)]
    max_samples: u64,

    /// Worker threads; 0 uses every core
    #[arg(long, default_value_t = 0)]
    workers: usize,

    #[arg(long, value_enum, default_value_t = VariantArg::Adaptive)]
    variant: VariantArg,

    /// Write the data here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

impl McArgs {
    fn sweep_config(&self) -> SweepConfig {
        SweepConfig {
            sizes: self.sizes.clone(),
            error_rates: self.p.clone(),
            p_phi_override: self.p_phi,
            p_lambda_override: self.p_lambda,
            stop: StopRule {
                target_failures: self.failures,
                max_samples: self.max_samples,
            },
            master_seed: self.seed,
            workers: self.workers,
            variant: self.variant.into(),
        }
    }

    fn render(&self, points: &[PointEstimate]) -> String {
        match self.format {
            FormatArg::Csv => points_to_csv(points),
            FormatArg::Json => points_to_json(points),
            FormatArg::Svg => points_to_svg(points),
        }
    }

    fn emit(&self, payload: &str) -> std::io::Result<()> {
        match &self.out {
            Some(path) => fs::write(path, payload),
            None => {
                print!("{payload}");
                Ok(())
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every exact identity of the model data and quantum oracle
    Validate {
        /// Also print the model constants as JSON
        #[arg(long)]
        dump_constants: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate, decode and judge a single noisy sample
    Run {
        #[arg(short = 'L', long = "size", default_value_t = 8)]
        size: usize,
        #[arg(long, default_value_t = 0.03)]
        p: f64,
        #[arg(long)]
        p_phi: Option<f64>,
        #[arg(long)]
        p_lambda: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample index within the seed's stream
        #[arg(long, default_value_t = 0)]
        sample: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Adaptive)]
        variant: VariantArg,
        /// Emit the flip record, post-error state and decode report as JSON
        #[arg(long)]
        trace: bool,
        /// Replay a flip record from a JSON file instead of sampling noise
        #[arg(long)]
        replay: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Logical error rates over a (size, rate) grid
    Sweep {
        #[command(flatten)]
        mc: McArgs,
    },
    /// Sweep plus threshold estimate from the size-curve crossings
    Threshold {
        #[command(flatten)]
        mc: McArgs,
    },
    /// Fit P = c exp(-alpha L) across sizes at one rate
    Fit {
        #[command(flatten)]
        mc: McArgs,
    },
    /// Smallest size whose logical error rate beats the physical rate
    Lstar {
        #[arg(long)]
        p: f64,
        /// Give up beyond this size
        #[arg(long, default_value_t = 32)]
        l_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        failures: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_samples: u64,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The sweep under the syndrome-blind static decoder
    StaticControl {
        #[command(flatten)]
        mc: McArgs,
    },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Validate { dump_constants, out } => {
            let report = validate_all();
            let mut payload = report.render();
            if dump_constants {
                payload.push_str(&serde_json::to_string_pretty(&constants_json())?);
                payload.push('\n');
            }
            match out {
                Some(path) => fs::write(path, &payload)?,
                None => print!("{payload}"),
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Run {
            size,
            p,
            p_phi,
            p_lambda,
            seed,
            sample,
            variant,
            trace,
            replay,
            out,
        } => {
            let geom = Geometry::new(size)?;
            let mut config = SpinConfig::vacuum(&geom);
            let record = match replay {
                Some(path) => serde_json::from_str::<FlipRecord>(&fs::read_to_string(path)?)?,
                None => {
                    let params = ErrorParams::new(p_phi.unwrap_or(p), p_lambda.unwrap_or(p))?;
                    let mut rng = RngSpec::new(seed).sample_rng(size, 0, sample);
                    sample_errors(&geom, &params, &mut rng)
                }
            };
            apply_record(&geom, &mut config, &record);
            let post_error = config.to_json(&geom);
            let syndrome = config.syndrome(&geom);
            let report = decode_with(&geom, &mut config, variant.into());
            if trace {
                let payload = serde_json::to_string_pretty(&serde_json::json!({
                    "flips": record,
                    "config": post_error,
                    "report": report,
                }))?;
                match out {
                    Some(path) => fs::write(path, payload)?,
                    None => println!("{payload}"),
                }
            } else {
                println!("L={size} errors={} anyons={}", record.len(), syndrome.anyons.len());
                println!(
                    "pairings={} max_k={} inspections={} passes={}",
                    report.pairings.len(),
                    report.max_k,
                    report.candidate_inspections,
                    report.passes
                );
                let (bl, br) = (
                    config.charge(&geom, phi_lambda::Region::Left),
                    config.charge(&geom, phi_lambda::Region::Right),
                );
                println!(
                    "edges=({},{}) verdict={}",
                    bl.value(),
                    br.value(),
                    report.verdict.label()
                );
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Sweep { mc } => {
            let config = mc.sweep_config();
            let points = sweep_with(&config, progress)?;
            mc.emit(&mc.render(&points))?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Threshold { mc } => {
            let config = mc.sweep_config();
            let points = sweep_with(&config, progress)?;
            if mc.out.is_some() {
                mc.emit(&mc.render(&points))?;
            }
            match threshold_estimate(&points, config.master_seed) {
                Ok(est) => {
                    println!("{}", serde_json::to_string_pretty(&serde_json::json!({
                        "p_c": est.p_c,
                        "interval": est.interval,
                        "crossings": est.crossings,
                    }))?);
                    Ok(ExitCode::SUCCESS)
                }
                Err(err @ StatsError::NoCrossing) | Err(err @ StatsError::TooFewPoints { .. }) => {
                    eprintln!("error: {err}");
                    Ok(ExitCode::from(3))
                }
            }
        }

        Command::Fit { mc } => {
            let config = mc.sweep_config();
            if config.error_rates.len() != 1 {
                eprintln!("error: fit needs exactly one --p");
                return Ok(ExitCode::from(2));
            }
            let points = sweep_with(&config, progress)?;
            if mc.out.is_some() {
                mc.emit(&mc.render(&points))?;
            }
            match fit_alpha(&points, DEFAULT_MIN_FIT_FAILURES) {
                Ok(fit) => {
                    println!("{}", serde_json::to_string_pretty(&serde_json::json!({
                        "p": config.error_rates[0],
                        "alpha": fit.alpha,
                        "c": fit.c,
                        "residual": fit.residual,
                        "points_used": fit.points_used,
                    }))?);
                    Ok(ExitCode::SUCCESS)
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    Ok(ExitCode::from(3))
                }
            }
        }

        Command::Lstar {
            p,
            l_max,
            seed,
            failures,
            max_samples,
            workers,
            out,
        } => {
            let config = SweepConfig {
                stop: StopRule {
                    target_failures: failures,
                    max_samples,
                },
                master_seed: seed,
                workers,
                ..SweepConfig::default()
            };
            let scan = find_lstar(p, &config, l_max)?;
            for pt in &scan.points {
                eprintln!(
                    "L={} P={:.6} ({}/{}{})",
                    pt.l,
                    pt.p,
                    pt.failures,
                    pt.samples,
                    if pt.censored { ", censored" } else { "" }
                );
            }
            let payload = serde_json::to_string_pretty(&scan)?;
            match out {
                Some(path) => fs::write(path, payload)?,
                None => println!("{payload}"),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::StaticControl { mc } => {
            let config = mc.sweep_config();
            let points = static_control_experiment(&config)?;
            mc.emit(&mc.render(&points))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn progress(pt: &PointEstimate) {
    eprintln!(
        "L={:<3} p={:<7} P={:.6} ({}/{} samples{})",
        pt.l,
        pt.p_phi,
        pt.p,
        pt.failures,
        pt.samples,
        if pt.censored { ", censored" } else { "" }
    );
}
