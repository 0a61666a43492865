use torus_arcs::{monodromy, unknotting_crossing_change_count, GenusOneKnot};

fn main() -> torus_arcs::Result<()> {
    for name in ["figure8", "trefoil", "doubled:whitehead"] {
        let k: GenusOneKnot = name.parse()?;
        let mono = match monodromy(&k) {
            Ok(m) => format!("{m} ({})", m.classify().kind().name()),
            Err(_) => "not fibred".to_string(),
        };
        let count = unknotting_crossing_change_count(&k)?;
        println!(
            "{:<18} {mono:<28} {count} unknotting crossing change(s)",
            k.to_string()
        );
    }
    Ok(())
}
