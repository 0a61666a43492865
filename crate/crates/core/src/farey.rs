//! Edges and triangles of the Farey tessellation.

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::slope::Slope;

/// An edge of the Farey graph, endpoints stored in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyEdge {
    lo: Slope,
    hi: Slope,
}

impl FareyEdge {
    pub fn new(x: Slope, y: Slope) -> Result<Self> {
        if !x.is_adjacent(&y) {
            return Err(Error::NotAdjacent(x.to_string(), y.to_string()));
        }
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        Ok(FareyEdge { lo, hi })
    }

    pub fn endpoints(&self) -> (&Slope, &Slope) {
        (&self.lo, &self.hi)
    }

    pub fn contains(&self, s: &Slope) -> bool {
        &self.lo == s || &self.hi == s
    }

    /// The endpoint other than `s`, if `s` is an endpoint.
    pub fn other(&self, s: &Slope) -> Option<&Slope> {
        if &self.lo == s {
            Some(&self.hi)
        } else if &self.hi == s {
            Some(&self.lo)
        } else {
            None
        }
    }

    /// Apexes of the two Farey triangles containing this edge.
    ///
    /// With the endpoint vectors ordered so that `p·q′ − q·p′ = 1`, these
    /// are the mediant `(p+p′)/(q+q′)` and the co-mediant `(p−p′)/(q−q′)`.
    pub fn mediant_neighbors(&self) -> (Slope, Slope) {
        let det = self.lo.p() * self.hi.q() - self.lo.q() * self.hi.p();
        let (x, y) = if det.is_positive() {
            (&self.lo, &self.hi)
        } else {
            (&self.hi, &self.lo)
        };
        debug_assert!((x.p() * y.q() - x.q() * y.p()).is_one());
        (
            x.mediant(y),
            Slope::from_vector(x.p() - y.p(), x.q() - y.q()),
        )
    }
}

impl fmt::Display for FareyEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

/// A Farey triangle, vertices stored in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FareyTriangle {
    vertices: [Slope; 3],
}

impl FareyTriangle {
    pub fn new(x: Slope, y: Slope, z: Slope) -> Result<Self> {
        for (u, v) in [(&x, &y), (&y, &z), (&z, &x)] {
            if !u.is_adjacent(v) {
                return Err(Error::NotAdjacent(u.to_string(), v.to_string()));
            }
        }
        let mut vertices = [x, y, z];
        vertices.sort();
        Ok(FareyTriangle { vertices })
    }

    pub fn vertices(&self) -> &[Slope; 3] {
        &self.vertices
    }

    /// The three sides, each paired with the opposite vertex.
    pub fn sides(&self) -> [(FareyEdge, &Slope); 3] {
        let [a, b, c] = &self.vertices;
        let e = |u: &Slope, v: &Slope| FareyEdge::new(u.clone(), v.clone()).unwrap();
        [(e(b, c), a), (e(a, c), b), (e(a, b), c)]
    }

    /// The triangle on the other side of `edge`.
    pub fn across(&self, edge: &FareyEdge) -> FareyTriangle {
        let (m, n) = edge.mediant_neighbors();
        let apex = if self.vertices.contains(&m) { n } else { m };
        let (u, v) = edge.endpoints();
        FareyTriangle::new(u.clone(), v.clone(), apex).unwrap()
    }
}

impl fmt::Display for FareyTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.vertices;
        write!(f, "{{{a}, {b}, {c}}}")
    }
}

/// Every Farey edge whose endpoints both have `|p| ≤ bound` and `q ≤ bound`.
///
/// Generated by Stern–Brocot descent inside each unit interval; mediant
/// numerators and denominators only grow, so pruning is exact.
pub fn farey_edges(bound: u32) -> Vec<FareyEdge> {
    let b = i64::from(bound);
    let mut out = Vec::new();
    let inf = Slope::infinity();
    for k in -b..=b {
        out.push(FareyEdge::new(Slope::integer(k), inf.clone()).unwrap());
        if k < b {
            let (l, r) = (Slope::integer(k), Slope::integer(k + 1));
            out.push(FareyEdge::new(l.clone(), r.clone()).unwrap());
            descend(&l, &r, bound, &mut out);
        }
    }
    out.sort();
    out
}

fn descend(l: &Slope, r: &Slope, bound: u32, out: &mut Vec<FareyEdge>) {
    let m = l.mediant(r);
    let limit = num_bigint::BigInt::from(bound);
    if m.q() > &limit || m.p().abs() > limit {
        return;
    }
    out.push(FareyEdge::new(l.clone(), m.clone()).unwrap());
    out.push(FareyEdge::new(m.clone(), r.clone()).unwrap());
    descend(l, &m, bound, out);
    descend(&m, r, bound, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slope::enumerate_slopes;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    fn edge(a: &str, b: &str) -> FareyEdge {
        FareyEdge::new(s(a), s(b)).unwrap()
    }

    #[test]
    fn mediant_neighbor_examples() {
        assert_eq!(edge("0", "inf").mediant_neighbors(), (s("1"), s("-1")));
        assert_eq!(edge("1", "inf").mediant_neighbors(), (s("2"), s("0")));
        let e = edge("1/2", "1/3");
        let (m, n) = e.mediant_neighbors();
        assert_eq!((m.clone(), n.clone()), (s("2/5"), s("0")));
        for apex in [m, n] {
            assert!(apex.is_adjacent(&s("1/2")) && apex.is_adjacent(&s("1/3")));
        }
    }

    #[test]
    fn rejects_non_adjacent() {
        assert!(FareyEdge::new(s("0"), s("2")).is_err());
        assert!(FareyTriangle::new(s("0"), s("1"), s("2")).is_err());
        assert!(FareyTriangle::new(s("0"), s("1"), s("inf")).is_ok());
    }

    #[test]
    fn across_flips_triangle() {
        let t = FareyTriangle::new(s("0"), s("1"), s("inf")).unwrap();
        let u = t.across(&edge("0", "inf"));
        assert_eq!(u, FareyTriangle::new(s("-1"), s("0"), s("inf")).unwrap());
        assert_eq!(u.across(&edge("0", "inf")), t);
    }

    #[test]
    fn edge_generation_matches_pairwise_scan() {
        for bound in 1..=7 {
            let slopes = enumerate_slopes(bound);
            let mut brute = Vec::new();
            for (i, x) in slopes.iter().enumerate() {
                for y in &slopes[i + 1..] {
                    if x.is_adjacent(y) {
                        brute.push(FareyEdge::new(x.clone(), y.clone()).unwrap());
                    }
                }
            }
            brute.sort();
            assert_eq!(farey_edges(bound), brute, "bound {bound}");
        }
    }
}
