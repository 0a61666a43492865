//! A seeded random sweep of the two-class bound.

use std::time::Instant;
use torus_arcs::{run_sweep_parallel, SweepParams};

fn main() {
    let params = SweepParams {
        count: std::env::args()
            .nth(1)
            .and_then(|s| s.parse().ok())
            .unwrap_or(2000),
        seed: 42,
        ..SweepParams::default()
    };
    let start = Instant::now();
    let report = run_sweep_parallel(&params);
    let mut kinds = std::collections::BTreeMap::new();
    for o in &report.outcomes {
        *kinds
            .entry(o.report.classification.kind().name())
            .or_insert(0) += 1;
    }
    println!("{kinds:?}");
    println!(
        "{}/{} pass, {} oracle checks, {:.2?}",
        report.passed(),
        params.count,
        report.oracle_checked(),
        start.elapsed()
    );
}
