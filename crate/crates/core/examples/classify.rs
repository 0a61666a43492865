//! The trichotomy on a handful of matrices, with the data each case carries.

use torus_arcs::{Classification, MappingClass};

fn main() -> torus_arcs::Result<()> {
    let samples = [
        "1,0;0,1",
        "-1,0;0,-1",
        "0,-1;1,0",
        "1,1;-1,0",
        "1,3;0,1",
        "-1,2;0,-1",
        "2,1;1,1",
        "3,-1;1,0",
    ];
    for text in samples {
        let m: MappingClass = text.parse()?;
        println!("{text:>10}  trace {:>2}  {}", m.trace(), m.classify());
        match m.classify() {
            Classification::Periodic { .. } => {
                let cell = m.elliptic_fixed_cell()?;
                let verts: Vec<String> = cell.vertices().iter().map(ToString::to_string).collect();
                println!("            fixed cell {{{}}}", verts.join(", "));
            }
            Classification::Reducible { .. } => {
                let nf = m.parabolic_normal_form()?;
                println!(
                    "            fixes {}, conjugate to a twist by {}",
                    nf.fixed_slope, nf.n
                );
            }
            Classification::PseudoAnosov { .. } => {
                let (rep, att) = m.fixed_boundary_points()?;
                println!(
                    "            A- ~ {:.6}, A+ ~ {:.6}",
                    rep.to_f64(),
                    att.to_f64()
                );
            }
            Classification::TrivialAction => {}
        }
    }
    Ok(())
}
