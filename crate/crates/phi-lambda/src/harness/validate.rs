//! The validation suite: every exact identity of the model data and the
//! quantum oracle, aggregated into one pass/fail report.
//!
//! Checks that guard constants take those constants as arguments so tests
//! can inject faults; `validate_all` wires in the canonical ones.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

use crate::algebra::{
    braid_order_experiment, cross_pair_fusion_table, f_matrix, fusion_channels, r_phase,
    split_pair_distribution, AnyonKind, BraidOrder, Charge, KindDistribution, SplitDistribution,
};
use crate::ds3::{
    all_triples, correspondence_cases, omega_factor, ChargeLabel, Color, PlaquetteState, S3,
    WOperator,
};
use crate::lattice::{Geometry, Region, SpinConfig};
use crate::rational::Rational;

const TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Check {
        Check {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Check {
        Check {
            name,
            passed: false,
            detail: detail.into(),
        }
    }

    fn from_deviation(name: &'static str, deviation: f64, tol: f64) -> Check {
        if deviation <= tol {
            Check::pass(name, format!("max deviation {deviation:.3e}"))
        } else {
            Check::fail(name, format!("max deviation {deviation:.3e} > {tol:.0e}"))
        }
    }
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {:<28} {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        out.push_str(&format!(
            "{}/{} checks passed\n",
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        ));
        out
    }
}

/// Run the whole suite against the canonical constants.
pub fn validate_all() -> ValidationReport {
    ValidationReport {
        checks: vec![
            check_split_distributions(split_pair_distribution),
            check_cross_pair_table(cross_pair_fusion_table),
            check_braid_witness(),
            check_f_matrix(&f_matrix()),
            check_fusion_constants(),
            check_fuse_monoid(),
            check_geometry(),
            check_lattice_conservation(0xC0DE),
            check_group_axioms(),
            check_projector_identities(),
            check_creation_identities(),
            check_correspondence(),
        ],
    }
}

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

pub fn check_split_distributions(
    dist: impl Fn(Charge) -> SplitDistribution,
) -> Check {
    let name = "algebra/split-distributions";
    let expected: [(u8, &[(u8, u8)]); 6] = [
        (0, &[(1, 5), (2, 4), (4, 2), (5, 1)]),
        (1, &[(2, 5), (5, 2)]),
        (2, &[(1, 1), (4, 4)]),
        (3, &[(1, 2), (2, 1), (4, 5), (5, 4)]),
        (4, &[(2, 2), (5, 5)]),
        (5, &[(1, 4), (4, 1)]),
    ];
    for (parent, want) in expected {
        let d = dist(Charge::new(parent));
        let got: Vec<(u8, u8)> = d
            .outcomes()
            .iter()
            .map(|&(a, b, _)| (a.value(), b.value()))
            .collect();
        if got != want {
            return Check::fail(name, format!("parent {parent}: outcomes {got:?} != {want:?}"));
        }
        let w = Rational::new(1, want.len() as i64);
        if d.outcomes().iter().any(|&(_, _, q)| q != w) || d.weight_sum() != Rational::ONE {
            return Check::fail(name, format!("parent {parent}: weights are not uniform/sum 1"));
        }
        for &(a, b, _) in d.outcomes() {
            if a.fuse(b) != Charge::new(parent) || !a.is_phi() || !b.is_phi() {
                return Check::fail(name, format!("parent {parent}: conservation violated"));
            }
        }
    }
    Check::pass(name, "all 6 parents match the closed form exactly")
}

pub fn check_cross_pair_table(table: impl Fn(AnyonKind) -> KindDistribution) -> Check {
    let name = "algebra/cross-pair-table";
    let want = |n: (i64, i64), l: (i64, i64), p: (i64, i64)| KindDistribution {
        vacuum: Rational::new(n.0, n.1),
        lambda: Rational::new(l.0, l.1),
        phi: Rational::new(p.0, p.1),
    };
    let cases = [
        (AnyonKind::Vacuum, want((1, 4), (1, 4), (1, 2))),
        (AnyonKind::Lambda, want((1, 4), (1, 4), (1, 2))),
        (AnyonKind::Phi, want((1, 2), (1, 2), (0, 1))),
    ];
    for (x, expected) in cases {
        let got = table(x);
        if got != expected {
            return Check::fail(
                name,
                format!(
                    "x={}: got ({}, {}, {})",
                    x.label(),
                    got.vacuum,
                    got.lambda,
                    got.phi
                ),
            );
        }
    }
    Check::pass(name, "enumeration equals the closed form, zero tolerance")
}

pub fn check_braid_witness() -> Check {
    let name = "algebra/braid-order-witness";
    let same = braid_order_experiment(BraidOrder::IiThenI);
    let cross = braid_order_experiment(BraidOrder::IThenIi);
    if same.vacuum != Rational::ONE {
        return Check::fail(name, "same-pair fusion is not deterministic vacuum");
    }
    if cross != cross_pair_fusion_table(AnyonKind::Vacuum) || cross == same {
        return Check::fail(name, "cross-pair order does not give the random table");
    }
    Check::pass(name, "exchange order changes the outcome distribution")
}

pub fn check_f_matrix(m: &[[f64; 3]; 3]) -> Check {
    let name = "algebra/f-matrix";
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let allowed = [0.0, 0.5, -0.5, s, -s];
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            if !allowed.iter().any(|&a| (m[i][j] - a).abs() < 1e-15) {
                return Check::fail(name, format!("entry ({i},{j}) = {} not in the form", m[i][j]));
            }
            worst = worst.max((m[i][j] - m[j][i]).abs());
            let mut dot = 0.0;
            for k in 0..3 {
                dot += m[i][k] * m[k][j];
            }
            worst = worst.max((dot - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    Check::from_deviation(name, worst, TOL)
}

fn check_fusion_constants() -> Check {
    let name = "algebra/fusion-rules";
    use AnyonKind::*;
    let ok = fusion_channels(Lambda, Lambda) == [Vacuum]
        && fusion_channels(Phi, Lambda) == [Phi]
        && fusion_channels(Lambda, Phi) == [Phi]
        && fusion_channels(Phi, Phi) == [Vacuum, Lambda, Phi]
        && r_phase(Vacuum) == 1.0
        && r_phase(Phi) == 1.0
        && r_phase(Lambda) == -1.0;
    if ok {
        Check::pass(name, "fusion rules and exchange phases match the model")
    } else {
        Check::fail(name, "fusion rules or R phases are wrong")
    }
}

fn check_fuse_monoid() -> Check {
    let name = "algebra/fuse-monoid";
    for a in Charge::all() {
        if a.fuse(Charge::ZERO) != a {
            return Check::fail(name, "vacuum is not the identity");
        }
        for b in Charge::all() {
            if a.fuse(b) != b.fuse(a) {
                return Check::fail(name, "fusion not commutative");
            }
            if !fusion_channels(a.kind(), b.kind()).contains(&a.fuse(b).kind()) {
                return Check::fail(name, format!("{}+{} lands outside its channels", a.value(), b.value()));
            }
            for c in Charge::all() {
                if a.fuse(b).fuse(c) != a.fuse(b.fuse(c)) {
                    return Check::fail(name, "fusion not associative");
                }
            }
        }
    }
    Check::pass(name, "commutative, associative, identity, channel closure")
}

// ---------------------------------------------------------------------------
// Lattice
// ---------------------------------------------------------------------------

fn check_geometry() -> Check {
    let name = "lattice/geometry";
    for l in 2..=9usize {
        let geom = match Geometry::new(l) {
            Ok(g) => g,
            Err(e) => return Check::fail(name, format!("L={l}: {e}")),
        };
        if geom.spin_count() != l * l + (l - 1) * (l - 1) || geom.plaquette_count() != l * (l - 1)
        {
            return Check::fail(name, format!("L={l}: wrong element counts"));
        }
        let mut edge_counts = [0usize; 2];
        for s in 0..geom.spin_count() {
            let [(ra, sa), (rb, sb)] = geom.spin_regions(s);
            if ra == rb || sa + sb != 0 {
                return Check::fail(name, format!("L={l}: spin {s} memberships broken"));
            }
            for (r, _) in [(ra, sa), (rb, sb)] {
                match r {
                    Region::Left => edge_counts[0] += 1,
                    Region::Right => edge_counts[1] += 1,
                    Region::Plaquette(_) => {}
                }
            }
        }
        if edge_counts != [l, l] {
            return Check::fail(name, format!("L={l}: boundaries see {edge_counts:?} spins"));
        }
        for p in 0..geom.plaquette_count() {
            let (r, _) = geom.plaq_coords(p);
            let want = if r == 0 || r == l - 1 { 3 } else { 4 };
            if geom.plaquette_spins(p).len() != want {
                return Check::fail(name, format!("L={l}: plaquette {p} has wrong spin count"));
            }
        }
    }
    if Geometry::new(1).is_ok() {
        return Check::fail(name, "L=1 must be rejected");
    }
    Check::pass(name, "all structural invariants hold for L in 2..=9")
}

pub fn check_lattice_conservation(seed: u64) -> Check {
    let name = "lattice/conservation";
    let mut rng = Pcg64::seed_from_u64(seed);
    for l in 2..=6usize {
        let geom = Geometry::new(l).unwrap();
        for _ in 0..40 {
            let mut config = SpinConfig::vacuum(&geom);
            for _ in 0..200 {
                let spin = rng.gen_range(0..geom.spin_count());
                config.apply_flip(&geom, spin, Charge::new(rng.gen_range(1..6)));
                if config.total_charge() != Charge::ZERO {
                    return Check::fail(name, format!("L={l}: total charge drifted"));
                }
            }
            let recomputed = config.recomputed_charges(&geom);
            for idx in 0..geom.region_count() {
                let cached = config.charge(&geom, geom.region_from_index(idx)).value();
                if cached != recomputed[idx] {
                    return Check::fail(name, format!("L={l}: cache disagrees with recompute"));
                }
            }
        }
    }
    Check::pass(name, "incremental charges exact over random flip sequences")
}

// ---------------------------------------------------------------------------
// Quantum oracle
// ---------------------------------------------------------------------------

fn check_group_axioms() -> Check {
    let name = "ds3/group-axioms";
    for a in S3::all() {
        if a.mul(S3::E) != a || S3::E.mul(a) != a || a.mul(a.inv()) != S3::E {
            return Check::fail(name, "identity/inverse broken");
        }
        for b in S3::all() {
            for c in S3::all() {
                if a.mul(b).mul(c) != a.mul(b.mul(c)) {
                    return Check::fail(name, "associativity broken");
                }
            }
        }
    }
    if S3::T.mul(S3::C) != S3::TC || S3::C2.mul(S3::T) != S3::TC {
        return Check::fail(name, "presentation tc = c^2 t violated");
    }
    Check::pass(name, "S3 table satisfies all group axioms exactly")
}

fn check_projector_identities() -> Check {
    let name = "ds3/projectors";
    let mut worst = 0.0f64;
    let zero = Complex64::new(0.0, 0.0);
    for color in [Color::White, Color::Grey] {
        for h in all_triples() {
            let vac = PlaquetteState::vacuum(h, color);
            worst = worst.max(vac.project(ChargeLabel::One).max_amp_deviation(&vac));
            for label in [ChargeLabel::Lambda, ChargeLabel::Phi, ChargeLabel::PhiBar] {
                worst = worst.max(vac.project(label).norm_sq().sqrt());
            }
        }
        // idempotence, orthogonality, hermiticity and identity resolution on
        // states spanning the diagonally generated subspace, plus a dense
        // pseudo-random state
        let h = [S3::C, S3::T, S3::TC2];
        let vac = PlaquetteState::vacuum(h, color);
        let mut dense_amps = vec![zero; 1296];
        let mut rng = Pcg64::seed_from_u64(17);
        for a in dense_amps.iter_mut() {
            *a = Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
        }
        let states = [
            vac.clone(),
            vac.apply_w(WOperator::Lambda, 0),
            vac.apply_w(WOperator::Phi, 1),
            vac.apply_w(WOperator::PhiBar, 2),
            vac.apply_w(WOperator::PhiPair, 3),
            PlaquetteState::from_amplitudes(color, dense_amps),
        ];
        for s in &states {
            let mut resolved: Option<PlaquetteState> = None;
            for x in ChargeLabel::ALL {
                let px = s.project(x);
                worst = worst.max(px.project(x).max_amp_deviation(&px));
                for y in ChargeLabel::ALL {
                    if x != y {
                        worst = worst.max(px.project(y).norm_sq().sqrt());
                    }
                }
                // hermiticity: <s|P s> real
                worst = worst.max(s.inner(&px).im.abs());
                resolved = Some(match resolved {
                    None => px,
                    Some(acc) => acc.add(&px),
                });
            }
            worst = worst.max(resolved.unwrap().max_amp_deviation(s));
        }
    }
    Check::from_deviation(name, worst, 1e-9)
}

fn check_creation_identities() -> Check {
    let name = "ds3/creation-identities";
    let mut worst = 0.0f64;
    for color in [Color::White, Color::Grey] {
        let (phi_here, phibar_here) = match color {
            Color::White => (ChargeLabel::Phi, ChargeLabel::PhiBar),
            Color::Grey => (ChargeLabel::PhiBar, ChargeLabel::Phi),
        };
        for h in all_triples() {
            let vac = PlaquetteState::vacuum(h, color);

            // W_Lambda creates an exact Lambda eigenstate
            let lam = vac.apply_w(WOperator::Lambda, 0);
            worst = worst.max(lam.project(ChargeLabel::Lambda).max_amp_deviation(&lam));

            // single Phi-type creator gives the color-dependent quasiparticle
            let phi = vac.apply_w(WOperator::Phi, 0).normalize().unwrap();
            let spec = phi.measure_charge().unwrap();
            worst = worst.max((spec.get(phi_here) - 1.0).abs());

            for spin in 1..4usize {
                // (W_phi)^2 = W_phibar on the same spin
                let same = vac.apply_w(WOperator::Phi, spin).apply_w(WOperator::Phi, spin);
                worst = worst.max(same.max_amp_deviation(&vac.apply_w(WOperator::PhiBar, spin)));

                // cross-spin creation picks up the Omega factor
                let double = vac.apply_w(WOperator::Phi, 0).apply_w(WOperator::Phi, spin);
                let reference = vac
                    .apply_w(WOperator::PhiBar, 0)
                    .scaled(omega_factor(h[spin - 1]));
                worst = worst.max(double.max_amp_deviation(&reference));

                // phi x phibar is an even vacuum/Lambda mixture when alive
                if let Some(fused) = vac
                    .apply_w(WOperator::Phi, spin)
                    .apply_w(WOperator::PhiBar, 0)
                    .normalize()
                {
                    let spec = fused.measure_charge().unwrap();
                    worst = worst.max((spec.get(ChargeLabel::One) - 0.5).abs());
                    worst = worst.max((spec.get(ChargeLabel::Lambda) - 0.5).abs());
                } else if !h[spin - 1].is_reflection() {
                    return Check::fail(name, "phi x phibar vanished on a rotation factor");
                }

                // the Lambda is hidden behind a Phi-type quasiparticle
                let hidden = vac
                    .apply_w(WOperator::Phi, 0)
                    .apply_w(WOperator::Lambda, spin)
                    .normalize()
                    .unwrap();
                let spec = hidden.measure_charge().unwrap();
                worst = worst.max((spec.get(phi_here) - 1.0).abs());
                let hidden_bar = vac
                    .apply_w(WOperator::PhiBar, 0)
                    .apply_w(WOperator::Lambda, spin)
                    .normalize()
                    .unwrap();
                let spec = hidden_bar.measure_charge().unwrap();
                worst = worst.max((spec.get(phibar_here) - 1.0).abs());

                // W_Lambda twice is the identity up to a global sign
                let twice = vac
                    .apply_w(WOperator::Lambda, 0)
                    .apply_w(WOperator::Lambda, spin);
                let sign = if h[spin - 1].is_reflection() { -1.0 } else { 1.0 };
                worst = worst
                    .max(twice.max_amp_deviation(&vac.scaled(Complex64::new(sign, 0.0))));
            }
        }
    }
    Check::from_deviation(name, worst, TOL)
}

fn check_correspondence() -> Check {
    let name = "ds3/correspondence";
    let cases = correspondence_cases();
    let worst = cases
        .iter()
        .map(|c| c.max_deviation)
        .fold(0.0f64, f64::max);
    let failed: Vec<String> = cases
        .iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{:?} flips {:?} spins {:?}", c.color, c.flips, c.spins))
        .collect();
    if failed.is_empty() {
        Check::pass(
            name,
            format!("{} ordered cases, max deviation {worst:.3e}", cases.len()),
        )
    } else {
        Check::fail(name, format!("{} mismatches: {failed:?}", failed.len()))
    }
}

/// Model constants as JSON, for `validate --dump-constants`.
pub fn constants_json() -> serde_json::Value {
    let rules: Vec<serde_json::Value> = AnyonKind::ALL
        .iter()
        .flat_map(|&a| {
            AnyonKind::ALL.iter().map(move |&b| {
                serde_json::json!({
                    "a": a.label(),
                    "b": b.label(),
                    "channels": fusion_channels(a, b).iter().map(|k| k.label()).collect::<Vec<_>>(),
                })
            })
        })
        .collect();
    let splits: Vec<serde_json::Value> = Charge::all()
        .map(|parent| {
            let d = split_pair_distribution(parent);
            serde_json::json!({
                "parent": parent.value(),
                "outcomes": d.outcomes().iter()
                    .map(|&(a, b, w)| serde_json::json!([a.value(), b.value(), w.to_string()]))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({
        "fusion_rules": rules,
        "f_matrix": f_matrix(),
        "r_phases": {
            "1": r_phase(AnyonKind::Vacuum),
            "Lambda": r_phase(AnyonKind::Lambda),
            "Phi": r_phase(AnyonKind::Phi),
        },
        "split_distributions": splits,
        "cross_pair_table": AnyonKind::ALL.iter().map(|&x| {
            let t = cross_pair_fusion_table(x);
            serde_json::json!({
                "x": x.label(),
                "1": t.vacuum.to_string(),
                "Lambda": t.lambda.to_string(),
                "Phi": t.phi.to_string(),
            })
        }).collect::<Vec<_>>(),
    })
}
