//! Exact computations in the arc complex of the once-punctured torus.
//!
//! Arcs are slopes in `Q ∪ {∞}`, disjointness is Farey adjacency, and a
//! mapping class is an element of SL(2,Z) acting by Möbius maps. The
//! [`solver`] finds every arc `α` whose image `h(α)` can be made disjoint
//! from `α`, grouped up to `h`-equivalence, and [`oracle`] checks it
//! against a brute-force scan.

pub mod boundary;
pub mod cli;
pub mod error;
pub mod farey;
pub mod knots;
pub mod mapclass;
pub mod oracle;
pub mod quadratic;
pub mod render;
pub mod slope;
pub mod solver;
pub mod sweep;

pub use boundary::{circular_order, compare_boundary, interleaved, BoundaryPoint};
pub use error::{Error, Result};
pub use farey::{farey_edges, FareyEdge, FareyTriangle};
pub use knots::{monodromy, unknotting_crossing_change_count, GenusOneKnot};
pub use mapclass::{
    Axis, Classification, EllipticCell, Kind, MappingClass, Matrix2, ParabolicNormalForm,
    QuadraticForm, Side,
};
pub use oracle::{agree, brute_force, OracleResult};
pub use quadratic::QuadraticIrrational;
pub use render::{render_svg, render_with, RenderOptions};
pub use slope::{enumerate_slopes, Slope};
pub use solver::{
    check_class_bound, h_equivalent, is_solution, solve, ArcClass, Provenance, SolutionSet,
    TheoremReport, TheoremStatus,
};
pub use sweep::{run_sweep, run_sweep_parallel, sweep_matrix, SweepParams, SweepReport};
