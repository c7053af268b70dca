//! Minimum lattice size at which encoding starts to pay off (P < p).
//!
//! ```bash
//! cargo run --release --example lstar_scan
//! ```

use phi_lambda::harness::{find_lstar, StopRule, SweepConfig};

fn main() {
    let config = SweepConfig {
        stop: StopRule {
            target_failures: 300,
            max_samples: 400_000,
        },
        master_seed: 11,
        ..SweepConfig::default()
    };

    println!("=== L*: smallest L with P < p ===\n");
    for p in [0.005, 0.01, 0.02, 0.03] {
        let scan = find_lstar(p, &config, 32).unwrap();
        for pt in &scan.points {
            println!(
                "  p={p:<6} L={:<3} P={:.6}{}",
                pt.l,
                pt.p,
                if pt.censored { " (censored)" } else { "" }
            );
        }
        match scan.found {
            Some(l) => println!("  -> L*({p}) = {l}\n"),
            None => println!("  -> not found up to L = {}\n", scan.l_max),
        }
    }
    println!("(small codes already beat the physical rate well below threshold;");
    println!(" near threshold L* grows quickly)");
}
