//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture` or on failure).
//!
//! Criteria 7 and 13 share one full-size threshold sweep through a
//! `OnceLock` so the expensive grid runs once.

use std::sync::OnceLock;

use phi_lambda::algebra::{
    braid_order_experiment, cross_pair_fusion_table, AnyonKind, BraidOrder, Charge,
};
use phi_lambda::decoder::{decode, decode_with, work_bound_check, DecoderVariant, Verdict};
use phi_lambda::ds3::correspondence_cases;
use phi_lambda::harness::{
    estimate_point, find_lstar, fit_alpha, static_control_experiment, sweep, threshold_estimate,
    validate_all, PointEstimate, StopRule, SweepConfig, DEFAULT_MIN_FIT_FAILURES,
};
use phi_lambda::lattice::{Geometry, SpinConfig};
use phi_lambda::noise::{apply_record, sample_errors, ErrorParams, FlipRecord, RngSpec};
use phi_lambda::rational::Rational;

fn verdict_line(criterion: &str, passed: bool, detail: &str) -> bool {
    println!(
        "criterion {:<36} {}  {}",
        criterion,
        if passed { "PASS" } else { "FAIL" },
        detail
    );
    passed
}

#[test]
fn criterion_01_exact_algebra() {
    let quarter = Rational::new(1, 4);
    let half = Rational::new(1, 2);
    let mut ok = true;
    for x in [AnyonKind::Vacuum, AnyonKind::Lambda] {
        let t = cross_pair_fusion_table(x);
        ok &= t.vacuum == quarter && t.lambda == quarter && t.phi == half;
    }
    let t = cross_pair_fusion_table(AnyonKind::Phi);
    ok &= t.vacuum == half && t.lambda == half && t.phi == Rational::ZERO;
    assert!(verdict_line(
        "01 exact-algebra",
        ok,
        "cross-pair tables equal (1/4,1/4,1/2), (1/4,1/4,1/2), (1/2,1/2,0) exactly"
    ));
}

#[test]
fn criterion_02_braid_order_witness() {
    let same = braid_order_experiment(BraidOrder::IiThenI);
    let cross = braid_order_experiment(BraidOrder::IThenIi);
    let ok = same.vacuum == Rational::ONE
        && same.lambda == Rational::ZERO
        && same.phi == Rational::ZERO
        && cross == cross_pair_fusion_table(AnyonKind::Vacuum)
        && cross != same;
    assert!(verdict_line(
        "02 braid-order-witness",
        ok,
        "one order deterministic vacuum, the other (1/4,1/4,1/2); exchange order matters"
    ));
}

#[test]
fn criterion_03_quantum_oracle_identities() {
    let report = validate_all();
    let wanted = ["ds3/group-axioms", "ds3/projectors", "ds3/creation-identities"];
    let mut ok = true;
    let mut details = Vec::new();
    for name in wanted {
        let check = report
            .checks
            .iter()
            .find(|c| c.name == name)
            .expect("check present");
        ok &= check.passed;
        details.push(format!("{}: {}", name, check.detail));
    }
    assert!(verdict_line(
        "03 quantum-oracle-identities",
        ok,
        &details.join("; ")
    ));
}

#[test]
fn criterion_04_classical_quantum_correspondence() {
    let cases = correspondence_cases();
    let mismatches = cases.iter().filter(|c| !c.passed()).count();
    let worst = cases.iter().map(|c| c.max_deviation).fold(0.0f64, f64::max);
    assert!(verdict_line(
        "04 correspondence",
        mismatches == 0,
        &format!(
            "{} ordered creation cases, {} mismatches, worst deviation {:.2e}",
            cases.len(),
            mismatches,
            worst
        )
    ));
}

#[test]
fn criterion_05_conservation_and_termination() {
    let spec = RngSpec::new(0x5EED);
    let params = ErrorParams::symmetric(0.05).unwrap();
    let mut checked = 0u64;
    for l in 2..=9usize {
        let geom = Geometry::new(l).unwrap();
        for i in 0..10_000u64 {
            let mut config = SpinConfig::vacuum(&geom);
            config.set_audit(true); // panics on any conservation violation
            let record = sample_errors(&geom, &params, &mut spec.sample_rng(l, 0, i));
            apply_record(&geom, &mut config, &record);
            decode(&geom, &mut config);
            assert!(config.bulk_empty(&geom), "bulk not emptied at L={l} sample={i}");
            let (bl, br) = config.edge_charges(&geom);
            assert_eq!(bl.fuse(br), Charge::ZERO, "edge charges unbalanced at L={l}");
            checked += 1;
        }
    }
    assert!(verdict_line(
        "05 conservation-and-termination",
        true,
        &format!("{checked} samples over L in 2..=9 at p=0.05; audited every flip")
    ));
}

#[test]
fn criterion_06_weight_one_correction() {
    // This check includes L = 2, where edge-adjacent single flips are
    // information-theoretically uncorrectable (any deterministic decoder
    // maps the identical lone-Phi syndromes of left- and right-boundary
    // spin errors to the same side). The failing cases are exactly those;
    // see the decisions ledger. L >= 3 must be perfect.
    let mut failures: Vec<(usize, usize, u8)> = Vec::new();
    let mut total = 0u64;
    for l in 2..=9usize {
        let geom = Geometry::new(l).unwrap();
        for spin in 0..geom.spin_count() {
            for g in 1..6u8 {
                let mut config = SpinConfig::vacuum(&geom);
                config.apply_flip(&geom, spin, Charge::new(g));
                let report = decode(&geom, &mut config);
                total += 1;
                if report.verdict != Verdict::Success {
                    failures.push((l, spin, g));
                }
            }
        }
    }
    let beyond_l2 = failures.iter().filter(|&&(l, _, _)| l > 2).count();
    let ok = failures.is_empty();
    verdict_line(
        "06 weight-one-correction",
        ok,
        &format!(
            "{total} cases; {} failures at L=2, {} at L>=3",
            failures.len() - beyond_l2,
            beyond_l2
        ),
    );
    assert_eq!(beyond_l2, 0, "single errors must always be corrected for L >= 3");
    assert!(
        ok,
        "weight-1 correction fails for {} L=2 boundary cases; a lone Phi at L=2 \
         is equidistant from both boundaries and its two single-flip preimages \
         need opposite corrections, so no kind-level decoder can fix both \
         (consistent with the minimum-error count L/2 = 1 at L=2)",
        failures.len() - beyond_l2
    );
}

fn threshold_grid() -> &'static Vec<PointEstimate> {
    static GRID: OnceLock<Vec<PointEstimate>> = OnceLock::new();
    GRID.get_or_init(|| {
        let config = SweepConfig {
            sizes: vec![8, 12, 16],
            error_rates: (0..9).map(|i| 0.025 + 0.0025 * f64::from(i)).collect(),
            stop: StopRule {
                target_failures: 1000,
                max_samples: 1_000_000,
            },
            master_seed: 0xF16,
            ..SweepConfig::default()
        };
        sweep(&config).expect("sweep runs")
    })
}

#[test]
fn criterion_07_threshold_reproduction() {
    let points = threshold_grid();
    let result = threshold_estimate(points, 0xF16);
    let (ok, detail) = match &result {
        Ok(est) => (
            (0.030..=0.040).contains(&est.p_c),
            format!(
                "p_c = {:.4}, interval {:.4}..{:.4} (want 0.035 +- 0.005)",
                est.p_c, est.interval.0, est.interval.1
            ),
        ),
        Err(err) => {
            // summarize the curves so the failure is interpretable
            let ends: Vec<String> = [8usize, 12, 16]
                .iter()
                .map(|&l| {
                    let hi = points
                        .iter()
                        .find(|pt| pt.l == l && (pt.p_phi - 0.045).abs() < 1e-9)
                        .unwrap();
                    format!("P({l},0.045)={:.4}", hi.p)
                })
                .collect();
            (
                false,
                format!(
                    "{err}; {} — the logical error rate still falls with L at \
                     every rate in the grid, so this implementation's threshold \
                     lies above 0.045 (measured crossing ~0.05); see ledger",
                    ends.join(", ")
                ),
            )
        }
    };
    assert!(verdict_line("07 threshold-reproduction", ok, &detail));
}

#[test]
fn criterion_08_subthreshold_decay() {
    let config = SweepConfig {
        sizes: vec![5, 9, 13, 17],
        error_rates: vec![0.01],
        stop: StopRule {
            target_failures: 1000,
            max_samples: 1_000_000,
        },
        master_seed: 0xDECA,
        ..SweepConfig::default()
    };
    let points = sweep(&config).unwrap();
    let strictly_decreasing = points.windows(2).all(|w| w[1].p < w[0].p);
    let (first, last) = (&points[0], &points[3]);
    let separated = first.p - 2.0 * first.stderr > last.p + 2.0 * last.stderr;
    let fit = fit_alpha(&points, DEFAULT_MIN_FIT_FAILURES).expect("enough points");
    let ok = strictly_decreasing && separated && fit.alpha > 0.0;
    let curve: Vec<String> = points.iter().map(|pt| format!("P({})={:.2e}", pt.l, pt.p)).collect();
    assert!(verdict_line(
        "08 subthreshold-decay",
        ok,
        &format!(
            "{}; alpha = {:.3} > 0, L=5 and L=17 separated by >2 stderr: {}",
            curve.join(" "),
            fit.alpha,
            separated
        )
    ));
}

#[test]
fn criterion_09_lstar_small_below_a_third_of_threshold() {
    let config = SweepConfig {
        stop: StopRule {
            target_failures: 1000,
            max_samples: 1_000_000,
        },
        master_seed: 0x15A,
        ..SweepConfig::default()
    };
    let scan = find_lstar(0.01, &config, 32).unwrap();
    let ok = matches!(scan.found, Some(l) if l < 10);
    assert!(verdict_line(
        "09 lstar-behavior",
        ok,
        &format!("L*(0.01) = {:?} (want < 10)", scan.found)
    ));
}

#[test]
fn criterion_10_static_control() {
    let p = 0.02;
    let base = SweepConfig {
        sizes: vec![8, 16],
        error_rates: vec![p],
        stop: StopRule {
            target_failures: 1000,
            max_samples: 1_000_000,
        },
        master_seed: 0x57A7,
        ..SweepConfig::default()
    };
    let static_points = static_control_experiment(&base).unwrap();
    let adaptive_points = sweep(&base).unwrap();
    let (s8, s16) = (&static_points[0], &static_points[1]);
    let (a8, a16) = (&adaptive_points[0], &adaptive_points[1]);

    let bound = s8.p >= p && s16.p >= p;
    let no_decay = s16.p >= s8.p - 2.0 * s8.stderr;
    let adaptive_decays = a16.p < a8.p;
    let ok = bound && no_decay && adaptive_decays;
    assert!(verdict_line(
        "10 static-control",
        ok,
        &format!(
            "static P(8)={:.4}, P(16)={:.4} (both >= {p}, no decay); adaptive P(8)={:.4} -> P(16)={:.4}",
            s8.p, s16.p, a8.p, a16.p
        )
    ));
}

/// Exhaustive weighted enumeration over every flip assignment at L=2: the
/// independent oracle for the Monte Carlo estimator.
fn exact_failure_rate_l2(p: f64) -> f64 {
    let geom = Geometry::new(2).unwrap();
    let n = geom.spin_count();
    let weight = |g: u8| match g {
        0 => 1.0 - 2.0 * p,
        3 => p,
        _ => p / 4.0,
    };
    let mut total = 0.0;
    let mut assignment = vec![0u8; n];
    loop {
        let prob: f64 = assignment.iter().map(|&g| weight(g)).product();
        let flips: Vec<(usize, u8)> = assignment
            .iter()
            .enumerate()
            .filter(|&(_, &g)| g != 0)
            .map(|(s, &g)| (s, g))
            .collect();
        let mut config = SpinConfig::vacuum(&geom);
        apply_record(&geom, &mut config, &FlipRecord(flips));
        if decode(&geom, &mut config).verdict != Verdict::Success {
            total += prob;
        }
        let mut i = 0;
        loop {
            if i == n {
                return total;
            }
            assignment[i] += 1;
            if assignment[i] < 6 {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn criterion_11_brute_force_oracle_agreement() {
    let mut ok = true;
    let mut details = Vec::new();
    for (idx, p) in [0.1, 0.3, 0.5].into_iter().enumerate() {
        let exact = exact_failure_rate_l2(p);
        let config = SweepConfig {
            stop: StopRule {
                target_failures: 1000,
                max_samples: 1_000_000,
            },
            master_seed: 0xB00F,
            ..SweepConfig::default()
        };
        let pt = estimate_point(&config, 2, idx, p, p).unwrap();
        let sigmas = (pt.p - exact).abs() / pt.stderr;
        ok &= sigmas <= 4.0;
        details.push(format!("p={p}: exact={exact:.5} mc={:.5} ({sigmas:.2} sigma)", pt.p));
    }
    assert!(verdict_line(
        "11 brute-force-oracle",
        ok,
        &details.join("; ")
    ));
}

#[test]
fn criterion_12_worker_determinism() {
    use phi_lambda::harness::points_to_csv;
    let stop = StopRule {
        target_failures: 200,
        max_samples: 100_000,
    };
    let mut outputs = Vec::new();
    for workers in [1usize, 4, 16] {
        let config = SweepConfig {
            sizes: vec![3, 6],
            error_rates: vec![0.02, 0.05],
            stop,
            master_seed: 0xDE7,
            workers,
            ..SweepConfig::default()
        };
        outputs.push(points_to_csv(&sweep(&config).unwrap()));
    }
    let ok = outputs[0] == outputs[1] && outputs[1] == outputs[2];
    assert!(verdict_line(
        "12 worker-determinism",
        ok,
        &format!("CSV byte-identical for workers 1/4/16 ({} bytes)", outputs[0].len())
    ));
}

/// Minimum failing error weight by exhaustive search (weights 1..=4, one
/// flip per spin, values canonical under global charge conjugation).
fn minimum_failing_weight(l: usize) -> Option<usize> {
    let geom = Geometry::new(l).unwrap();
    let n = geom.spin_count();
    const VALUES: [u8; 5] = [1, 2, 3, 4, 5];
    for w in 1..=4usize {
        let mut subset: Vec<usize> = (0..w).collect();
        loop {
            let mut vals = vec![0usize; w];
            'values: loop {
                // skip conjugate duplicates: require the first value <= its inverse
                if VALUES[vals[0]] <= 6 - VALUES[vals[0]] {
                    let flips: Vec<(usize, u8)> = subset
                        .iter()
                        .zip(&vals)
                        .map(|(&s, &v)| (s, VALUES[v]))
                        .collect();
                    let mut config = SpinConfig::vacuum(&geom);
                    apply_record(&geom, &mut config, &FlipRecord(flips));
                    if decode(&geom, &mut config).verdict != Verdict::Success {
                        return Some(w);
                    }
                }
                let mut i = 0;
                loop {
                    if i == w {
                        break 'values;
                    }
                    vals[i] += 1;
                    if vals[i] < VALUES.len() {
                        break;
                    }
                    vals[i] = 0;
                    i += 1;
                }
            }
            // next combination of spins
            let mut i = w;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if subset[i] != i + n - w {
                    subset[i] += 1;
                    for j in i + 1..w {
                        subset[j] = subset[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    None
}

#[test]
fn criterion_13_work_bound_and_failure_weight() {
    // inspection budget over every sample of the criterion-7 grid (the
    // estimator keeps the per-point maximum), plus fresh reports through
    // the checker itself
    let points = threshold_grid();
    let coeff = phi_lambda::decoder::WORK_BOUND_COEFF;
    let mut budget_ok = points
        .iter()
        .all(|pt| pt.max_inspections as f64 <= coeff * (pt.l as f64).powi(4));
    let spec = RngSpec::new(0xB0B);
    let geom = Geometry::new(16).unwrap();
    let params = ErrorParams::symmetric(0.045).unwrap();
    for i in 0..500u64 {
        let mut config = SpinConfig::vacuum(&geom);
        apply_record(&geom, &mut config, &sample_errors(&geom, &params, &mut spec.sample_rng(16, 0, i)));
        let report = decode_with(&geom, &mut config, DecoderVariant::Adaptive);
        budget_ok &= work_bound_check(&report, 16);
    }
    let worst_ratio = points
        .iter()
        .map(|pt| pt.max_inspections as f64 / (pt.l as f64).powi(4))
        .fold(0.0f64, f64::max);

    // minimum failing weight per size: inside the band and growing
    let mut band_ok = true;
    let mut growth: Vec<(usize, usize)> = Vec::new();
    for l in 4..=9usize {
        let w = minimum_failing_weight(l).unwrap_or(5);
        let lo = l / 8;
        let hi = l.div_ceil(4) + 1;
        band_ok &= (lo..=hi).contains(&w);
        growth.push((l, w));
    }
    let grows = growth.last().unwrap().1 > growth.first().unwrap().1;

    let ok = budget_ok && band_ok && grows;
    assert!(verdict_line(
        "13 work-bound-and-failure-weight",
        ok,
        &format!(
            "worst inspections/L^4 = {:.4} (C = {}); w*(L) = {:?}, within floor(L/8)..=ceil(L/4)+1 and growing",
            worst_ratio,
            phi_lambda::decoder::WORK_BOUND_COEFF,
            growth
        )
    ));
}
