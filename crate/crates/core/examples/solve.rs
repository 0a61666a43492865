//! Solution classes for the figure-eight and trefoil monodromies, or any
//! matrix given on the command line.

use torus_arcs::{solve, MappingClass};

fn show(m: &MappingClass) -> torus_arcs::Result<()> {
    let set = solve(m)?;
    println!("{m}: {}", set.classification);
    for class in &set.classes {
        let members: Vec<String> = class
            .sample_members
            .iter()
            .map(ToString::to_string)
            .collect();
        let side = class.side.map(|s| format!(" [{s}]")).unwrap_or_default();
        println!(
            "  {} via {}{side}: {}",
            class.representative,
            class.provenance,
            members.join(", ")
        );
    }
    println!("  at most two classes: {}", set.theorem_bound_satisfied);
    Ok(())
}

fn main() -> torus_arcs::Result<()> {
    match std::env::args().nth(1) {
        Some(text) => show(&text.parse()?),
        None => {
            show(&MappingClass::new(2, 1, 1, 1)?)?;
            show(&MappingClass::new(1, 1, -1, 0)?)
        }
    }
}
