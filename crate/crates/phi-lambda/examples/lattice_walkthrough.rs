//! Geometry, spin flips, syndromes and anyon transport on a small lattice.
//!
//! ```bash
//! cargo run --release --example lattice_walkthrough
//! ```

use phi_lambda::{AnyonKind, Charge, Geometry, Region, Side, SpinConfig};

fn print_syndrome(geom: &Geometry, config: &SpinConfig) {
    let l = geom.size();
    for r in 0..l {
        print!("    ");
        for c in 0..l - 1 {
            let p = geom.plaq_index(r, c);
            let ch = match config.kind(p) {
                AnyonKind::Vacuum => '.',
                AnyonKind::Lambda => 'L',
                AnyonKind::Phi => 'P',
            };
            let color = if geom.plaq_sign(p) > 0 { 'w' } else { 'g' };
            print!("{ch}{color} ");
        }
        println!();
    }
    let (bl, br) = config.edge_charges(geom);
    println!("    b_l = {}, b_r = {}", bl.value(), br.value());
}

fn main() {
    let l = 5;
    let geom = Geometry::new(l).unwrap();
    println!("=== Lattice L = {l} ===\n");
    println!("  spins:      {} ({} vertical + {} horizontal)", geom.spin_count(), l * l, (l - 1) * (l - 1));
    println!("  plaquettes: {} ({} rows x {} columns, w = white, g = grey)", geom.plaquette_count(), l, l - 1);
    println!("  boundaries: left and right absorb charge through {l} spins each\n");

    let mut config = SpinConfig::vacuum(&geom);
    config.set_audit(true);

    println!("vacuum state:");
    print_syndrome(&geom, &config);

    println!("\nflip the spin between (2,1) and (2,2) by g = 2: a Phi pair appears");
    config.apply_flip(&geom, geom.vertical_spin(2, 2), Charge::new(2));
    print_syndrome(&geom, &config);
    println!("    (the white plaquette holds b = 2, the grey one b = 4; both classify as Phi,");
    println!("     and only the classification is observable)");

    println!("\nflip a horizontal spin by g = 3: a Lambda pair on top");
    config.apply_flip(&geom, geom.horizontal_spin(1, 0), Charge::LAMBDA);
    print_syndrome(&geom, &config);

    println!("\nmove the Phi at (2,1) one plaquette left, twice, onto the left boundary");
    let src = Region::Plaquette(geom.plaq_index(2, 1));
    let mid = Region::Plaquette(geom.plaq_index(2, 0));
    let step = config.move_anyon(&geom, src, mid).unwrap();
    println!("    hop 1: flip g = {} on spin {} -> landed as {:?}", step.flip.value(), step.spin, step.landed);
    let step = config.move_anyon(&geom, mid, Region::Left).unwrap();
    println!("    hop 2: flip g = {} on spin {} -> absorbed by the boundary", step.flip.value(), step.spin);
    print_syndrome(&geom, &config);

    println!("\nfuse the remaining Phi into a Lambda neighbor and watch the charge add");
    // move the Phi at (2,2) up onto the Lambda at (1,2)... the Lambda pair
    // sits at (1,0)/(2,0)-adjacent plaquettes; fuse Phi with one of them
    let phi_pos = (0..geom.plaquette_count())
        .find(|&p| config.kind(p) == AnyonKind::Phi)
        .expect("one Phi left");
    let lam_pos = (0..geom.plaquette_count())
        .find(|&p| config.kind(p) == AnyonKind::Lambda)
        .expect("a Lambda");
    println!(
        "    Phi at {:?}, Lambda at {:?}",
        geom.plaq_coords(phi_pos),
        geom.plaq_coords(lam_pos)
    );
    // walk the Phi onto the Lambda
    let (mut r, mut c) = geom.plaq_coords(phi_pos);
    let (rt, ct) = geom.plaq_coords(lam_pos);
    let mut cur = phi_pos;
    while (r, c) != (rt, ct) {
        let (nr, nc) = if c != ct {
            (r, if c < ct { c + 1 } else { c - 1 })
        } else {
            (if r < rt { r + 1 } else { r - 1 }, c)
        };
        let next = geom.plaq_index(nr, nc);
        let step = config
            .move_anyon(&geom, Region::Plaquette(cur), Region::Plaquette(next))
            .unwrap();
        println!("    hop: -> {:?} now holds {:?}", (nr, nc), step.landed);
        cur = next;
        (r, c) = (nr, nc);
    }
    print_syndrome(&geom, &config);
    println!("    (Phi x Lambda = Phi: the Lambda is absorbed, Phi-ness survives)");

    println!("\ndistances used by the decoder:");
    let a = geom.plaq_index(1, 2);
    let b = geom.plaq_index(3, 3);
    println!(
        "    manhattan((1,2), (3,3)) = {}",
        geom.manhattan(a, b)
    );
    println!(
        "    edge distances of (2,1): left = {}, right = {}",
        geom.edge_distance(geom.plaq_index(2, 1), Side::Left),
        geom.edge_distance(geom.plaq_index(2, 1), Side::Right)
    );

    println!("\ntotal charge over all regions: {} (conserved, audited on every flip)", config.total_charge().value());
}
