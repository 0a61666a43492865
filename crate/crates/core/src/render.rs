//! SVG drawings of the Farey tessellation in the Poincaré disc.
//!
//! The upper half-plane is mapped to the disc by `z ↦ (z − i)/(z + i)`, so a
//! real boundary point `x` lands at `((x² − 1), −2x)/(x² + 1)` and `∞` at `1`.
//! Coordinates are the only floating-point values this crate produces.

use std::fmt::Write as _;

use crate::boundary::BoundaryPoint;
use crate::farey::farey_edges;
use crate::mapclass::{Classification, MappingClass};
use crate::solver::{solve, SolutionSet};

const PALETTE: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Draw edges whose endpoints have `|p|, q ≤ display_bound`.
    pub display_bound: u32,
    /// Width and height in pixels.
    pub size: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            display_bound: 12,
            size: 800.0,
        }
    }
}

fn disc_point(x: f64) -> (f64, f64) {
    if x.is_infinite() {
        return (1.0, 0.0);
    }
    let n = x * x + 1.0;
    ((x * x - 1.0) / n, -2.0 * x / n)
}

struct Canvas {
    out: String,
    centre: f64,
    radius: f64,
}

impl Canvas {
    fn to_screen(&self, (u, v): (f64, f64)) -> (f64, f64) {
        (self.centre + self.radius * u, self.centre - self.radius * v)
    }

    /// The hyperbolic geodesic between two boundary points.
    fn geodesic(&mut self, x: f64, y: f64, stroke: &str, width: f64) {
        let (p1, p2) = (disc_point(x), disc_point(y));
        let (a, b) = (self.to_screen(p1), self.to_screen(p2));
        let cross = p1.0 * p2.1 - p1.1 * p2.0;
        let dot = p1.0 * p2.0 + p1.1 * p2.1;
        let path = if cross.abs() < 1e-12 {
            format!("M {:.3} {:.3} L {:.3} {:.3}", a.0, a.1, b.0, b.1)
        } else {
            // orthogonal circle: radius tan(θ/2) for the angle θ between the points
            let r = ((1.0 - dot) / (1.0 + dot)).sqrt() * self.radius;
            let sweep = if cross > 0.0 { 1 } else { 0 };
            format!(
                "M {:.3} {:.3} A {r:.3} {r:.3} 0 0 {sweep} {:.3} {:.3}",
                a.0, a.1, b.0, b.1
            )
        };
        let _ = writeln!(
            self.out,
            r#"<path d="{path}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"#
        );
    }

    fn dot(&mut self, x: f64, fill: &str, r: f64, label: Option<&str>) {
        let (sx, sy) = self.to_screen(disc_point(x));
        let _ = writeln!(
            self.out,
            r#"<circle cx="{sx:.3}" cy="{sy:.3}" r="{r}" fill="{fill}"/>"#
        );
        if let Some(text) = label {
            let (dx, dy) = (sx - self.centre, sy - self.centre);
            let len = (dx * dx + dy * dy).sqrt().max(1e-9);
            let (tx, ty) = (sx + 18.0 * dx / len, sy + 18.0 * dy / len);
            let _ = writeln!(
                self.out,
                r#"<text x="{tx:.3}" y="{ty:.3}" font-family="sans-serif" font-size="13" fill="{fill}" text-anchor="middle" dominant-baseline="middle">{text}</text>"#
            );
        }
    }
}

/// Renders the tessellation, plus the axis and solution classes of `m`
/// when given (nothing extra for a trivial action).
pub fn render_svg(m: Option<&MappingClass>, opts: &RenderOptions) -> String {
    let solution = m.and_then(|m| solve(m).ok());
    render_with(solution.as_ref(), opts)
}

pub fn render_with(solution: Option<&SolutionSet>, opts: &RenderOptions) -> String {
    let size = opts.size;
    let mut c = Canvas {
        out: String::new(),
        centre: size / 2.0,
        radius: size / 2.0 - 40.0,
    };
    let _ = writeln!(c.out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        c.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(c.out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        c.out,
        r##"<circle cx="{0}" cy="{0}" r="{1}" fill="#fafafa" stroke="black" stroke-width="1.5"/>"##,
        c.centre, c.radius
    );
    for e in farey_edges(opts.display_bound) {
        let (x, y) = e.endpoints();
        c.geodesic(x.to_f64(), y.to_f64(), "#9a9a9a", 0.6);
    }
    if let Some(set) = solution {
        if let Some(ax) = &set.axis {
            for e in ax.edges() {
                let (x, y) = e.endpoints();
                c.geodesic(x.to_f64(), y.to_f64(), "#ff7f0e", 2.0);
            }
            c.geodesic(
                ax.repelling().to_f64(),
                ax.attracting().to_f64(),
                "#000000",
                2.5,
            );
            c.dot(ax.repelling().to_f64(), "#000000", 3.5, Some("A-"));
            c.dot(ax.attracting().to_f64(), "#000000", 3.5, Some("A+"));
        }
        if let Classification::Reducible { fixed_slope, .. } = &set.classification {
            c.dot(
                BoundaryPoint::from(fixed_slope).to_f64(),
                "#000000",
                3.0,
                None,
            );
        }
        for (k, class) in set.classes.iter().enumerate() {
            let colour = PALETTE[k % PALETTE.len()];
            for member in &class.sample_members {
                c.dot(member.to_f64(), colour, 3.0, None);
            }
            let label = class.representative.to_string();
            c.dot(class.representative.to_f64(), colour, 6.0, Some(&label));
        }
    }
    let _ = writeln!(c.out, "</svg>");
    c.out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_transform_landmarks() {
        let close =
            |a: (f64, f64), b: (f64, f64)| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12;
        assert!(close(disc_point(0.0), (-1.0, 0.0)));
        assert!(close(disc_point(f64::INFINITY), (1.0, 0.0)));
        assert!(close(disc_point(1.0), (0.0, -1.0)));
        assert!(close(disc_point(-1.0), (0.0, 1.0)));
    }

    #[test]
    fn arcs_bend_into_the_disc() {
        let mut c = Canvas {
            out: String::new(),
            centre: 100.0,
            radius: 100.0,
        };
        // 0 and 1 sit at the left and bottom; the arc is centred on the corner (0, 200)
        c.geodesic(0.0, 1.0, "black", 1.0);
        assert!(
            c.out
                .contains("M 0.000 100.000 A 100.000 100.000 0 0 1 100.000 200.000"),
            "{}",
            c.out
        );
    }

    #[test]
    fn figure_eight_drawing() {
        let m = MappingClass::new(2, 1, 1, 1).unwrap();
        let svg = render_svg(Some(&m), &RenderOptions::default());
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        let edges = farey_edges(12).len();
        // tessellation + 3 axis edges + the axis itself
        assert_eq!(svg.matches("<path").count(), edges + 4);
        assert!(svg.contains(">A+<") && svg.contains(">inf<") && svg.contains(">0/1<"));
    }

    #[test]
    fn trivial_action_draws_only_the_tessellation() {
        let svg = render_svg(Some(&MappingClass::identity()), &RenderOptions::default());
        assert_eq!(svg.matches("<path").count(), farey_edges(12).len());
        assert!(!svg.contains("<text"));
    }
}
