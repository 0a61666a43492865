//! Powers of a Dehn twist: one extra class exists only for `n = ±1`.

use torus_arcs::{solve, MappingClass};

fn main() -> torus_arcs::Result<()> {
    for n in -4i64..=4 {
        if n == 0 {
            continue;
        }
        let m = MappingClass::new(1, n, 0, 1)?;
        let set = solve(&m)?;
        let reps: Vec<String> = set
            .classes
            .iter()
            .map(|c| c.representative.to_string())
            .collect();
        println!(
            "n = {n:>2}: {} class(es) {{{}}}",
            set.classes.len(),
            reps.join(", ")
        );
    }
    // a conjugate twist fixing 2/3
    let g = MappingClass::new(2, 1, 3, 2)?;
    let m = g
        .compose(&MappingClass::new(1, -1, 0, 1)?)
        .compose(&g.inverse());
    let nf = m.parabolic_normal_form()?;
    println!("{m} fixes {} with n = {}", nf.fixed_slope, nf.n);
    for c in solve(&m)?.classes {
        println!("  class of {}", c.representative);
    }
    Ok(())
}
