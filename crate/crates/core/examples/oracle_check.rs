//! Compares the solver with the brute-force scan.
//!
//! `cargo run --example oracle_check -- 3,2;1,1 30 12`

use torus_arcs::{agree, brute_force, solve, MappingClass};

fn main() -> torus_arcs::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: MappingClass = args.next().unwrap_or_else(|| "3,2;1,1".into()).parse()?;
    let bound = args.next().and_then(|s| s.parse().ok()).unwrap_or(30);
    let cap = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);

    let set = solve(&m)?;
    let oracle = brute_force(&m, bound, cap)?;
    println!(
        "{m}: {} solver classes, {} oracle groups",
        set.classes.len(),
        oracle.groups.len()
    );
    for g in &oracle.groups {
        let head: Vec<String> = g.iter().take(6).map(ToString::to_string).collect();
        println!("  {} solutions: {} ...", g.len(), head.join(", "));
    }
    println!("agree: {}", agree(&set, &oracle));
    Ok(())
}
