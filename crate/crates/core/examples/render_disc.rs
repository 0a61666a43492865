//! Writes the figure-eight picture to `figure8.svg` (or the path given).

use torus_arcs::{render_svg, MappingClass, RenderOptions};

fn main() -> std::io::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "figure8.svg".into());
    let m = MappingClass::new(2, 1, 1, 1).expect("valid matrix");
    let svg = render_svg(
        Some(&m),
        &RenderOptions {
            display_bound: 10,
            ..Default::default()
        },
    );
    std::fs::write(&path, svg)?;
    println!("wrote {path}");
    Ok(())
}
