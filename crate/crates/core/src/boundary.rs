//! Points of the circle at infinity `R ∪ {∞}` and its circular order.
//!
//! The circle is traversed in the direction of increasing reals and wraps
//! through `∞`. Interleaving does not depend on that choice.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::quadratic::QuadraticIrrational;
use crate::slope::Slope;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryPoint {
    /// A finite slope (`q > 0`).
    Rational(Slope),
    Infinity,
    Irrational(QuadraticIrrational),
}

impl From<Slope> for BoundaryPoint {
    fn from(s: Slope) -> Self {
        if s.is_infinity() {
            BoundaryPoint::Infinity
        } else {
            BoundaryPoint::Rational(s)
        }
    }
}

impl From<&Slope> for BoundaryPoint {
    fn from(s: &Slope) -> Self {
        s.clone().into()
    }
}

impl From<QuadraticIrrational> for BoundaryPoint {
    fn from(x: QuadraticIrrational) -> Self {
        BoundaryPoint::Irrational(x)
    }
}

impl From<&QuadraticIrrational> for BoundaryPoint {
    fn from(x: &QuadraticIrrational) -> Self {
        BoundaryPoint::Irrational(x.clone())
    }
}

impl BoundaryPoint {
    pub fn to_f64(&self) -> f64 {
        match self {
            BoundaryPoint::Rational(s) => s.to_f64(),
            BoundaryPoint::Infinity => f64::INFINITY,
            BoundaryPoint::Irrational(x) => x.to_f64(),
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Rational(s) => s.fmt(f),
            BoundaryPoint::Infinity => f.write_str("inf"),
            BoundaryPoint::Irrational(x) => x.fmt(f),
        }
    }
}

/// Exact linear comparison on `R ∪ {∞}` with `∞` maximal.
pub fn compare_boundary(x: &BoundaryPoint, y: &BoundaryPoint) -> Result<Ordering> {
    use BoundaryPoint::*;
    Ok(match (x, y) {
        (Infinity, Infinity) => Ordering::Equal,
        (Infinity, _) => Ordering::Greater,
        (_, Infinity) => Ordering::Less,
        (Rational(a), Rational(b)) => a.cmp(b),
        (Irrational(a), Rational(b)) => a.cmp_rational(b.p(), b.q()),
        (Rational(a), Irrational(b)) => b.cmp_rational(a.p(), a.q()).reverse(),
        (Irrational(a), Irrational(b)) => a.try_cmp(b)?,
    })
}

/// True iff walking the circle from `x` in the positive direction meets `y`
/// before `z`.
pub fn circular_order(x: &BoundaryPoint, y: &BoundaryPoint, z: &BoundaryPoint) -> Result<bool> {
    let xy = compare_boundary(x, y)?;
    let yz = compare_boundary(y, z)?;
    let zx = compare_boundary(z, x)?;
    if [xy, yz, zx].contains(&Ordering::Equal) {
        return Err(Error::Degenerate);
    }
    let lt = Ordering::Less;
    // exactly one of the three cyclic rotations is increasing
    Ok((xy == lt && yz == lt) || (yz == lt && zx == lt) || (zx == lt && xy == lt))
}

/// True iff the pairs `{a, c}` and `{b, d}` alternate around the circle.
pub fn interleaved(
    pair1: (&BoundaryPoint, &BoundaryPoint),
    pair2: (&BoundaryPoint, &BoundaryPoint),
) -> Result<bool> {
    let (a, c) = pair1;
    let (b, d) = pair2;
    if b == d {
        return Err(Error::Degenerate);
    }
    Ok(circular_order(a, b, c)? != circular_order(a, d, c)?)
}
