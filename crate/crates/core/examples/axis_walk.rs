//! Walks the axis of a pseudo-Anosov class and checks it is periodic.
//!
//! `cargo run --example axis_walk -- 5,3;3,2`

use torus_arcs::MappingClass;

fn main() -> torus_arcs::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "5,3;3,2".into());
    let m: MappingClass = text.parse()?;
    let axis = m.axis()?;
    println!("{m}: A- = {}, A+ = {}", axis.repelling(), axis.attracting());
    println!("side form Q(p, q) = {}", axis.side_form());
    for (i, e) in axis.edges().iter().enumerate() {
        let (x, y) = e.endpoints();
        println!("  e{i:<2} {e}  sides {} / {}", axis.side(x), axis.side(y));
    }
    let first = &axis.edges()[0];
    let last = axis.edges().last().unwrap();
    println!(
        "h(e0) = {}, last edge = {last}, period {}",
        m.act_on_edge(first),
        axis.period()
    );
    Ok(())
}
