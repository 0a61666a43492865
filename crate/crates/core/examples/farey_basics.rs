//! Slopes, intersection numbers, mediants and circular order.

use torus_arcs::{
    circular_order, interleaved, BoundaryPoint, FareyEdge, QuadraticIrrational, Slope,
};

fn main() -> torus_arcs::Result<()> {
    let a: Slope = "2/3".parse()?;
    let b: Slope = "3/4".parse()?;
    println!("i({a}, {b}) = {}", a.intersection_number(&b));
    println!(
        "i({a}, inf) = {}",
        a.intersection_number(&Slope::infinity())
    );

    let e = FareyEdge::new(a.clone(), b.clone())?;
    let (x, y) = e.mediant_neighbors();
    println!("triangles on {e}: apexes {x} and {y}");

    let phi = QuadraticIrrational::new(1, 1, 5, 2)?;
    let psi = phi.conjugate();
    println!("{psi} < {phi}: {}", psi.try_cmp(&phi)?.is_lt());

    let pts: [BoundaryPoint; 3] = [
        Slope::integer(0).into(),
        phi.clone().into(),
        Slope::infinity().into(),
    ];
    println!(
        "0 -> {phi} -> inf is in circular order: {}",
        circular_order(&pts[0], &pts[1], &pts[2])?
    );
    println!(
        "{{{psi}, {phi}}} crosses {{0, inf}}: {}",
        interleaved(
            (&psi.clone().into(), &phi.clone().into()),
            (&Slope::integer(0).into(), &Slope::infinity().into())
        )?
    );
    println!(
        "slopes with |p|, q <= 3: {}",
        torus_arcs::enumerate_slopes(3).len()
    );
    Ok(())
}
