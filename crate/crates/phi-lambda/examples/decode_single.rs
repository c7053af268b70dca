//! One noisy sample, decoded step by step with the full pairing log.
//!
//! ```bash
//! cargo run --release --example decode_single
//! ```

use phi_lambda::{
    apply_record, decode, sample_errors, AnyonKind, ErrorParams, Geometry, Region, RngSpec,
    SpinConfig,
};

fn region_name(geom: &Geometry, region: Region) -> String {
    match region {
        Region::Plaquette(p) => format!("{:?}", geom.plaq_coords(p)),
        Region::Left => "left edge".into(),
        Region::Right => "right edge".into(),
    }
}

fn main() {
    let l = 8;
    let p = 0.04;
    let geom = Geometry::new(l).unwrap();
    let params = ErrorParams::symmetric(p).unwrap();
    let mut rng = RngSpec::new(2024).sample_rng(l, 0, 5);

    let mut config = SpinConfig::vacuum(&geom);
    let record = sample_errors(&geom, &params, &mut rng);
    apply_record(&geom, &mut config, &record);

    println!("=== One error round at L = {l}, p_phi = p_lambda = {p} ===\n");
    println!("errors: {} flips on {} spins", record.len(), geom.spin_count());
    let syn = config.syndrome(&geom);
    let phis = syn.anyons.iter().filter(|&&(_, k)| k == AnyonKind::Phi).count();
    let lams = syn.anyons.len() - phis;
    println!("syndrome: {phis} Phi anyons, {lams} Lambda anyons");
    println!(
        "boundary charges after errors: b_l = {}, b_r = {}\n",
        syn.edge_charges.0.value(),
        syn.edge_charges.1.value()
    );

    let report = decode(&geom, &mut config);

    println!("pairing log (Phi phase first, then Lambda, distance k grows on demand):");
    for pairing in &report.pairings {
        let outcome = match pairing.outcome {
            Some(kind) => format!("measured {}", kind.label()),
            None => "absorbed".into(),
        };
        println!(
            "  [{}] k={}  {} -> {}  ({outcome})",
            pairing.species.label(),
            pairing.k,
            region_name(&geom, pairing.source),
            region_name(&geom, pairing.target),
        );
    }

    println!("\ncounters: {} passes, max k = {}, {} candidate inspections (budget {} = C*L^4)",
        report.passes,
        report.max_k,
        report.candidate_inspections,
        (phi_lambda::decoder::WORK_BOUND_COEFF * (l as f64).powi(4)) as u64,
    );
    println!("correction applied {} flips", report.correction_flips.len());
    let (bl, br) = config.edge_charges(&geom);
    println!("final boundary charges: b_l = {}, b_r = {}", bl.value(), br.value());
    println!("verdict: {}", report.verdict.label());
    println!("\n(the equivalent CLI invocation: phi-lambda run -L {l} --p {p} --seed 2024 --sample 5 --trace)");
}
