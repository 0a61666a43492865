//! Mapping classes of the once-punctured torus as elements of SL(2,Z).
//!
//! All boundary and tessellation computations use the PSL(2,Z)
//! representative, which acts on slopes exactly as the input matrix does.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::boundary::{interleaved, BoundaryPoint};
use crate::error::{Error, Result};
use crate::farey::{FareyEdge, FareyTriangle};
use crate::quadratic::QuadraticIrrational;
use crate::slope::Slope;

/// A 2×2 integer matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Matrix2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Matrix2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Matrix2::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        Matrix2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    /// Inverse of a determinant-one matrix.
    fn adjugate(&self) -> Matrix2 {
        Matrix2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    fn neg(&self) -> Matrix2 {
        Matrix2 {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    fn is_identity(&self) -> bool {
        self.a.is_one() && self.d.is_one() && self.b.is_zero() && self.c.is_zero()
    }

    /// Canonical sign: positive trace; for trace 0, `c > 0` (or `c = 0, b > 0`).
    fn psl_normalized(&self) -> Matrix2 {
        let keep = match self.trace().sign() {
            num_bigint::Sign::Plus => true,
            num_bigint::Sign::Minus => false,
            num_bigint::Sign::NoSign => {
                self.c.is_positive() || (self.c.is_zero() && self.b.is_positive())
            }
        };
        if keep {
            self.clone()
        } else {
            self.neg()
        }
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

/// An element of SL(2,Z) together with its canonical PSL(2,Z) sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MappingClass {
    matrix: Matrix2,
    psl: Matrix2,
}

impl MappingClass {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        Self::from_matrix(Matrix2::new(a, b, c, d))
    }

    pub fn from_matrix(matrix: Matrix2) -> Result<Self> {
        let det = matrix.det();
        if !det.is_one() {
            return Err(Error::Determinant(det.to_string()));
        }
        let psl = matrix.psl_normalized();
        Ok(MappingClass { matrix, psl })
    }

    fn from_sl2(matrix: Matrix2) -> Self {
        debug_assert!(matrix.det().is_one());
        let psl = matrix.psl_normalized();
        MappingClass { matrix, psl }
    }

    pub fn identity() -> Self {
        Self::from_sl2(Matrix2::identity())
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.matrix
    }

    pub fn psl_rep(&self) -> &Matrix2 {
        &self.psl
    }

    /// Trace of the PSL representative (never negative).
    pub fn trace(&self) -> BigInt {
        self.psl.trace()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MappingClass) -> MappingClass {
        Self::from_sl2(self.matrix.mul(&other.matrix))
    }

    pub fn inverse(&self) -> MappingClass {
        Self::from_sl2(self.matrix.adjugate())
    }

    pub fn negate(&self) -> MappingClass {
        Self::from_sl2(self.matrix.neg())
    }

    pub fn pow(&self, n: i64) -> MappingClass {
        let mut base = if n < 0 {
            self.matrix.adjugate()
        } else {
            self.matrix.clone()
        };
        let mut e = n.unsigned_abs();
        let mut acc = Matrix2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Self::from_sl2(acc)
    }

    /// `p/q ↦ (ap + bq)/(cp + dq)`.
    pub fn act_on_slope(&self, s: &Slope) -> Slope {
        let m = &self.psl;
        Slope::from_vector(&m.a * s.p() + &m.b * s.q(), &m.c * s.p() + &m.d * s.q())
    }

    pub fn act_on_edge(&self, e: &FareyEdge) -> FareyEdge {
        let (x, y) = e.endpoints();
        FareyEdge::new(self.act_on_slope(x), self.act_on_slope(y))
            .expect("SL(2,Z) preserves adjacency")
    }

    pub fn act_on_boundary(&self, x: &BoundaryPoint) -> BoundaryPoint {
        let m = &self.psl;
        match x {
            BoundaryPoint::Rational(s) => self.act_on_slope(s).into(),
            BoundaryPoint::Infinity => self.act_on_slope(&Slope::infinity()).into(),
            BoundaryPoint::Irrational(q) => {
                // x = (α + β√D)/γ; clear γ from numerator and denominator
                let (al, be, ga, dd) = (q.a(), q.b(), q.c(), q.d());
                let u = &m.a * al + &m.b * ga;
                let v = &m.a * be;
                let w = &m.c * al + &m.d * ga;
                let z = &m.c * be;
                let den = &w * &w - &z * &z * dd;
                let re = &u * &w - &v * &z * dd;
                let sq = &v * &w - &u * &z;
                debug_assert!(!sq.is_zero(), "Möbius image of an irrational is irrational");
                QuadraticIrrational::new(re, sq, dd.clone(), den)
                    .expect("image is a quadratic irrational")
                    .into()
            }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.psl.is_identity()
    }

    pub fn classify(&self) -> Classification {
        if self.is_trivial() {
            return Classification::TrivialAction;
        }
        let t = self.trace();
        let two = BigInt::from(2);
        match t.cmp(&two) {
            Ordering::Less => Classification::Periodic {
                psl_order: if t.is_zero() { 2 } else { 3 },
            },
            Ordering::Equal => {
                let nf = self.normal_form_unchecked();
                Classification::Reducible {
                    n: nf.n,
                    fixed_slope: nf.fixed_slope,
                    conjugator: nf.conjugator,
                }
            }
            Ordering::Greater => {
                let (repelling, attracting) = self.fixed_points_unchecked();
                Classification::PseudoAnosov {
                    repelling,
                    attracting,
                }
            }
        }
    }

    fn require(&self, kind: Kind) -> Result<()> {
        let found = self.classify().kind();
        if found == kind {
            Ok(())
        } else {
            Err(Error::WrongClassification {
                expected: kind.name(),
                found: found.name(),
            })
        }
    }

    /// `(repelling, attracting)` fixed points of a pseudo-Anosov class.
    pub fn fixed_boundary_points(&self) -> Result<(QuadraticIrrational, QuadraticIrrational)> {
        self.require(Kind::PseudoAnosov)?;
        Ok(self.fixed_points_unchecked())
    }

    /// Roots of `c·x² + (d−a)·x − b`, i.e. `((a−d) ± √(t²−4))/(2c)`.
    ///
    /// The eigenvalue at the root `x` is `c·x + d = (t ± √(t²−4))/2`, and
    /// `t > 2` for the PSL representative, so the `+` root is attracting.
    fn fixed_points_unchecked(&self) -> (QuadraticIrrational, QuadraticIrrational) {
        let m = &self.psl;
        let t = m.trace();
        let disc = &t * &t - BigInt::from(4);
        let num = &m.a - &m.d;
        let den = &m.c * BigInt::from(2);
        let attracting = QuadraticIrrational::new(num.clone(), 1, disc.clone(), den.clone())
            .expect("loxodromic fixed points are irrational");
        let repelling = QuadraticIrrational::new(num, -1, disc, den)
            .expect("loxodromic fixed points are irrational");
        (repelling, attracting)
    }

    pub fn parabolic_normal_form(&self) -> Result<ParabolicNormalForm> {
        self.require(Kind::Reducible)?;
        Ok(self.normal_form_unchecked())
    }

    fn normal_form_unchecked(&self) -> ParabolicNormalForm {
        let m = &self.psl;
        let fixed_slope = if m.c.is_zero() {
            Slope::infinity()
        } else {
            Slope::from_vector(BigInt::one() - &m.d, m.c.clone())
        };
        let conjugator = Self::from_sl2(completing_matrix(&fixed_slope));
        let normal = conjugator.matrix.adjugate().mul(m).mul(&conjugator.matrix);
        debug_assert!(normal.a.is_one() && normal.d.is_one() && normal.c.is_zero());
        ParabolicNormalForm {
            fixed_slope,
            n: normal.b,
            conjugator,
        }
    }

    /// The Farey triangle or edge containing the fixed point in `H²`.
    ///
    /// The fixed point is `z₀ = ((a−d) + i·√(4−t²))/(2c)`; its real part and
    /// the square of its imaginary part are rational, so every side test is
    /// exact. The walk starts at `{0, 1, ∞}` and crosses the side that
    /// separates the current triangle from `z₀`.
    pub fn elliptic_fixed_cell(&self) -> Result<EllipticCell> {
        self.require(Kind::Periodic)?;
        let m = &self.psl;
        assert!(!m.c.is_zero(), "elliptic elements have c ≠ 0");
        let t = m.trace();
        let re = BigRational::new(&m.a - &m.d, &m.c * 2);
        let im_sq = BigRational::new(BigInt::from(4) - &t * &t, &m.c * &m.c * 4);
        let mut tri =
            FareyTriangle::new(Slope::integer(0), Slope::integer(1), Slope::infinity()).unwrap();
        loop {
            let mut crossing = None;
            for (edge, opposite) in tri.sides() {
                let here = side_of_point(&edge, &re, &im_sq);
                if here == Ordering::Equal {
                    return Ok(EllipticCell::FixedEdge(edge));
                }
                if here != side_of_vertex(&edge, opposite) {
                    crossing = Some(edge);
                    break;
                }
            }
            match crossing {
                Some(edge) => tri = tri.across(&edge),
                None => return Ok(EllipticCell::FixedTriangle(tri)),
            }
        }
    }

    /// `Q(p, q) = c·p² + (d−a)·p·q − b·q²`, which vanishes exactly at the
    /// fixed points.
    pub fn side_form(&self) -> QuadraticForm {
        let m = &self.psl;
        QuadraticForm {
            pp: m.c.clone(),
            pq: &m.d - &m.a,
            qq: -&m.b,
        }
    }

    /// The axis of a pseudo-Anosov class: one period of the separating
    /// Farey edges, walked towards the attracting fixed point.
    pub fn axis(&self) -> Result<Axis> {
        let (repelling, attracting) = self.fixed_boundary_points()?;
        let form = self.side_form();
        let e0 = initial_axis_edge(&form, &repelling);
        let target = self.act_on_edge(&e0);
        let (m1, m2) = e0.mediant_neighbors();
        let (lo, hi) = e0.endpoints();
        let toward: BoundaryPoint = (&attracting).into();
        let m1_ahead = !interleaved((&(&m1).into(), &toward), (&lo.into(), &hi.into()))
            .expect("distinct boundary points");
        let behind = if m1_ahead { m2 } else { m1 };
        let mut walker = AxisWalker {
            form: form.clone(),
            current: e0.clone(),
            behind,
        };
        let mut edges = vec![e0];
        while edges.last() != Some(&target) {
            edges.push(walker.step());
        }
        Ok(Axis {
            edges,
            attracting,
            repelling,
            form,
        })
    }
}

/// Integer matrix in SL(2,Z) with first column the vector of `s`.
fn completing_matrix(s: &Slope) -> Matrix2 {
    let (p, q) = (s.p(), s.q());
    let eg = p.extended_gcd(q);
    let (x, y) = if eg.gcd.is_negative() {
        (-eg.x, -eg.y)
    } else {
        (eg.x, eg.y)
    };
    // p·x + q·y = 1, so [[p, −y], [q, x]] has determinant 1
    let m = Matrix2::new(p.clone(), -y, q.clone(), x);
    debug_assert!(m.det().is_one());
    m
}

/// Sign of the point `re + i·√im_sq` relative to the geodesic of `edge`:
/// for a vertical geodesic `Re = k`, the sign of `re − k`; otherwise the
/// sign of `|z − centre|² − radius²`.
fn side_of_point(edge: &FareyEdge, re: &BigRational, im_sq: &BigRational) -> Ordering {
    let (lo, hi) = edge.endpoints();
    let lo = BigRational::new(lo.p().clone(), lo.q().clone());
    if hi.is_infinity() {
        return re.cmp(&lo);
    }
    let hi = BigRational::new(hi.p().clone(), hi.q().clone());
    let two = BigRational::from_integer(2.into());
    let centre = (&lo + &hi) / &two;
    let radius = (&hi - &lo) / &two;
    let dx = re - &centre;
    (&dx * &dx + im_sq).cmp(&(&radius * &radius))
}

fn side_of_vertex(edge: &FareyEdge, v: &Slope) -> Ordering {
    let zero = BigRational::zero();
    if v.is_infinity() {
        return Ordering::Greater;
    }
    side_of_point(edge, &BigRational::new(v.p().clone(), v.q().clone()), &zero)
}

fn initial_axis_edge(form: &QuadraticForm, repelling: &QuadraticIrrational) -> FareyEdge {
    let inf = Slope::infinity();
    let sign_inf = form.sign(&inf);
    let separates = |s: &Slope| form.sign(s) != sign_inf;
    // the integers strictly between the roots form [lo, hi]
    let other = repelling.conjugate();
    let (r_lo, r_hi) = match repelling.try_cmp(&other).unwrap() {
        Ordering::Less => (repelling.clone(), other),
        _ => (other, repelling.clone()),
    };
    let lo = r_lo.floor() + 1;
    let hi = r_hi.floor();
    if lo <= hi {
        let k = num_traits::clamp(BigInt::zero(), lo, hi);
        let edge = FareyEdge::new(Slope::integer(k), inf).unwrap();
        debug_assert!(separates(edge.endpoints().0));
        return edge;
    }
    // both roots in (k, k+1): descend by mediants towards the form's vertex
    let vertex = Slope::new(-form.pq.clone(), &form.pp * 2).unwrap();
    let k = r_lo.floor();
    let mut l = Slope::integer(k.clone());
    let mut r = Slope::integer(k + 1);
    loop {
        let m = l.mediant(&r);
        if separates(&m) {
            return FareyEdge::new(l, m).unwrap();
        }
        if vertex < m {
            r = m;
        } else {
            l = m;
        }
    }
}

struct AxisWalker {
    form: QuadraticForm,
    current: FareyEdge,
    /// Apex of the triangle on the repelling side of `current`.
    behind: Slope,
}

impl AxisWalker {
    fn step(&mut self) -> FareyEdge {
        let (m1, m2) = self.current.mediant_neighbors();
        let ahead = if m1 == self.behind { m2 } else { m1 };
        let (lo, hi) = self.current.endpoints();
        let ahead_sign = self.form.sign(&ahead);
        let (keep, drop) = if self.form.sign(lo) != ahead_sign {
            (lo.clone(), hi.clone())
        } else {
            (hi.clone(), lo.clone())
        };
        let next = FareyEdge::new(keep, ahead).unwrap();
        self.current = next.clone();
        self.behind = drop;
        next
    }
}

/// Integer binary quadratic form `pp·p² + pq·p·q + qq·q²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    pp: BigInt,
    pq: BigInt,
    qq: BigInt,
}

impl QuadraticForm {
    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.pp, &self.pq, &self.qq)
    }

    pub fn eval(&self, s: &Slope) -> BigInt {
        let (p, q) = (s.p(), s.q());
        &self.pp * p * p + &self.pq * p * q + &self.qq * q * q
    }

    pub fn sign(&self, s: &Slope) -> Ordering {
        self.eval(s).cmp(&BigInt::zero())
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}p² {:+}pq {:+}q²", self.pp, self.pq, self.qq)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Negative,
    Positive,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Negative => "negative",
            Side::Positive => "positive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axis {
    edges: Vec<FareyEdge>,
    attracting: QuadraticIrrational,
    repelling: QuadraticIrrational,
    form: QuadraticForm,
}

impl Axis {
    /// `e₀ … e_L`, where `e_L` is the image of `e₀`.
    pub fn edges(&self) -> &[FareyEdge] {
        &self.edges
    }

    pub fn period(&self) -> usize {
        self.edges.len() - 1
    }

    pub fn attracting(&self) -> &QuadraticIrrational {
        &self.attracting
    }

    pub fn repelling(&self) -> &QuadraticIrrational {
        &self.repelling
    }

    pub fn side_form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn side(&self, x: &Slope) -> Side {
        match self.form.sign(x) {
            Ordering::Less => Side::Negative,
            Ordering::Greater => Side::Positive,
            Ordering::Equal => unreachable!("the side form has no rational zeros"),
        }
    }

    pub fn same_side(&self, x: &Slope, y: &Slope) -> bool {
        self.side(x) == self.side(y)
    }

    /// `x < y` on one side: `{x, A₊}` is interleaved with `{y, A₋}`.
    pub fn order_less(&self, x: &Slope, y: &Slope) -> Result<bool> {
        if x == y {
            return Err(Error::Degenerate);
        }
        if !self.same_side(x, y) {
            return Err(Error::DifferentSides(x.to_string(), y.to_string()));
        }
        interleaved(
            (&x.into(), &(&self.attracting).into()),
            (&y.into(), &(&self.repelling).into()),
        )
    }

    /// The walk continued for `extra` edges beyond `e_L`.
    pub fn extended(&self, extra: usize) -> Vec<FareyEdge> {
        let n = self.edges.len();
        let last = self.edges[n - 1].clone();
        let prev = &self.edges[n - 2];
        let (x, y) = prev.endpoints();
        let behind = if last.contains(x) {
            y.clone()
        } else {
            x.clone()
        };
        let mut walker = AxisWalker {
            form: self.form.clone(),
            current: last,
            behind,
        };
        let mut out = self.edges.clone();
        out.extend((0..extra).map(|_| walker.step()));
        out
    }

    /// Every slope that is an endpoint of some edge in `edges()`, in walk
    /// order.
    pub fn visible_vertices(&self) -> Vec<Slope> {
        let mut out: Vec<Slope> = Vec::new();
        for e in &self.edges {
            let (x, y) = e.endpoints();
            for v in [x, y] {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicNormalForm {
    pub fixed_slope: Slope,
    pub n: BigInt,
    pub conjugator: MappingClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EllipticCell {
    FixedTriangle(FareyTriangle),
    FixedEdge(FareyEdge),
}

impl EllipticCell {
    pub fn vertices(&self) -> Vec<Slope> {
        match self {
            EllipticCell::FixedTriangle(t) => t.vertices().to_vec(),
            EllipticCell::FixedEdge(e) => {
                let (x, y) = e.endpoints();
                vec![x.clone(), y.clone()]
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `±identity`: every slope is invariant.
    TrivialAction,
    Periodic {
        psl_order: u8,
    },
    Reducible {
        n: BigInt,
        fixed_slope: Slope,
        conjugator: MappingClass,
    },
    PseudoAnosov {
        repelling: QuadraticIrrational,
        attracting: QuadraticIrrational,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    TrivialAction,
    Periodic,
    Reducible,
    PseudoAnosov,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::TrivialAction => "TrivialAction",
            Kind::Periodic => "Periodic",
            Kind::Reducible => "Reducible",
            Kind::PseudoAnosov => "PseudoAnosov",
        }
    }
}

impl Classification {
    pub fn kind(&self) -> Kind {
        match self {
            Classification::TrivialAction => Kind::TrivialAction,
            Classification::Periodic { .. } => Kind::Periodic,
            Classification::Reducible { .. } => Kind::Reducible,
            Classification::PseudoAnosov { .. } => Kind::PseudoAnosov,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::TrivialAction => f.write_str("TrivialAction"),
            Classification::Periodic { psl_order } => write!(f, "Periodic (order {psl_order})"),
            Classification::Reducible { n, fixed_slope, .. } => {
                write!(f, "Reducible (n = {n}, fixed slope {fixed_slope})")
            }
            Classification::PseudoAnosov {
                repelling,
                attracting,
            } => write!(f, "PseudoAnosov (A- = {repelling}, A+ = {attracting})"),
        }
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

impl FromStr for MappingClass {
    type Err = Error;

    /// Parses the row-major text form `a,b;c,d`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedMatrix(s.to_string());
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(bad());
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(bad());
            }
            for c in cols {
                entries.push(c.trim().parse::<BigInt>().map_err(|_| bad())?);
            }
        }
        let [a, b, c, d]: [BigInt; 4] = entries.try_into().map_err(|_| bad())?;
        MappingClass::new(a, b, c, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mc(a: i64, b: i64, c: i64, d: i64) -> MappingClass {
        MappingClass::new(a, b, c, d).unwrap()
    }

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    fn edge(a: &str, b: &str) -> FareyEdge {
        FareyEdge::new(s(a), s(b)).unwrap()
    }

    fn qi(a: i64, b: i64, d: i64, c: i64) -> QuadraticIrrational {
        QuadraticIrrational::new(a, b, d, c).unwrap()
    }

    #[test]
    fn construction_and_normalization() {
        assert!(mc(1, 0, 0, 1).is_trivial());
        assert_eq!(mc(-2, -1, -1, -1).psl_rep(), &Matrix2::new(2, 1, 1, 1));
        assert_eq!(mc(0, 1, -1, 0).psl_rep(), &Matrix2::new(0, -1, 1, 0));
        assert!(matches!(
            MappingClass::new(1, 1, 1, 0),
            Err(Error::Determinant(_))
        ));
        assert_eq!(
            "2, 1; 1, 1".parse::<MappingClass>().unwrap(),
            mc(2, 1, 1, 1)
        );
        for bad in ["2,1,1,1", "2,1;1", "a,1;1,1", "2,1;1,1;0,0"] {
            assert!(matches!(
                bad.parse::<MappingClass>(),
                Err(Error::MalformedMatrix(_))
            ));
        }
        assert!(matches!(
            "1,1;1,1".parse::<MappingClass>(),
            Err(Error::Determinant(_))
        ));
    }

    #[test]
    fn action_examples() {
        let cat = mc(2, 1, 1, 1);
        assert_eq!(cat.act_on_slope(&Slope::infinity()), s("2"));
        assert_eq!(cat.act_on_slope(&s("0")), s("1"));
        assert_eq!(mc(1, 1, -1, 0).act_on_slope(&s("-1")), s("0"));
    }

    #[test]
    fn powers_and_inverses() {
        let m = mc(2, 1, 1, 1);
        assert_eq!(m.pow(2).matrix(), &Matrix2::new(5, 3, 3, 2));
        assert!(m.pow(3).compose(&m.pow(-3)).matrix() == &Matrix2::identity());
        assert!(mc(1, 1, -1, 0).pow(3).is_trivial());
        assert_eq!(mc(1, 1, -1, 0).pow(3).matrix(), &Matrix2::new(-1, 0, 0, -1));
        assert!(mc(1, 1, -1, 0).pow(6).matrix() == &Matrix2::identity());
    }

    #[test]
    fn classification_examples() {
        match mc(1, 5, 0, 1).classify() {
            Classification::Reducible { n, fixed_slope, .. } => {
                assert_eq!(n, BigInt::from(5));
                assert_eq!(fixed_slope, Slope::infinity());
            }
            other => panic!("{other}"),
        }
        assert_eq!(
            mc(2, 1, 1, 1).classify(),
            Classification::PseudoAnosov {
                attracting: qi(1, 1, 5, 2),
                repelling: qi(1, -1, 5, 2),
            }
        );
        assert_eq!(
            mc(1, 1, -1, 0).classify(),
            Classification::Periodic { psl_order: 3 }
        );
        assert_eq!(
            mc(0, -1, 1, 0).classify(),
            Classification::Periodic { psl_order: 2 }
        );
        assert_eq!(mc(-1, 0, 0, -1).classify(), Classification::TrivialAction);
        assert_eq!(mc(-1, 3, 0, -1).classify().kind(), Kind::Reducible);
    }

    #[test]
    fn fixed_points() {
        let (rep, att) = mc(2, 1, 1, 1).fixed_boundary_points().unwrap();
        assert_eq!(
            (rep.clone(), att.clone()),
            (qi(1, -1, 5, 2), qi(1, 1, 5, 2))
        );
        assert_eq!(att.cmp_rational(&3.into(), &2.into()), Ordering::Greater);
        assert_eq!(rep.cmp_rational(&3.into(), &2.into()), Ordering::Less);
        let (rep, att) = mc(1, 1, 1, 2).fixed_boundary_points().unwrap();
        assert_eq!((rep, att.clone()), (qi(-1, -1, 5, 2), qi(-1, 1, 5, 2)));
        // 0 ↦ 1/2 ↦ 3/5 → 0.618…
        let m = mc(1, 1, 1, 2);
        let mut x = s("0");
        for _ in 0..24 {
            x = m.act_on_slope(&x);
        }
        assert!((x.to_f64() - att.to_f64()).abs() < 1e-12);
        assert!(matches!(
            mc(0, -1, 1, 0).fixed_boundary_points(),
            Err(Error::WrongClassification { .. })
        ));
        // fixed points are fixed by the boundary action
        for m in [
            mc(2, 1, 1, 1),
            mc(1, 1, 1, 2),
            mc(5, 7, 2, 3),
            mc(-5, 1, -6, 1),
        ] {
            let (rep, att) = m.fixed_boundary_points().unwrap();
            for x in [rep, att] {
                let p: BoundaryPoint = x.into();
                assert_eq!(m.act_on_boundary(&p), p);
            }
        }
    }

    #[test]
    fn parabolic_normal_forms() {
        let nf = mc(1, 1, 0, 1).parabolic_normal_form().unwrap();
        assert_eq!(
            (nf.fixed_slope, nf.n, nf.conjugator),
            (Slope::infinity(), 1.into(), MappingClass::identity())
        );
        let nf = mc(1, 0, -1, 1).parabolic_normal_form().unwrap();
        assert_eq!(nf.fixed_slope, s("0"));
        assert_eq!(nf.n, BigInt::from(1));
        assert_eq!(nf.conjugator.matrix(), &Matrix2::new(0, -1, 1, 0));
        let p = nf.conjugator.matrix();
        assert_eq!(
            p.adjugate().mul(&Matrix2::new(1, 0, -1, 1)).mul(p),
            Matrix2::new(1, 1, 0, 1)
        );
        let nf = mc(1, -3, 0, 1).parabolic_normal_form().unwrap();
        assert_eq!((nf.fixed_slope, nf.n), (Slope::infinity(), (-3).into()));
        assert!(mc(2, 1, 1, 1).parabolic_normal_form().is_err());
    }

    #[test]
    fn elliptic_cells() {
        let cell = mc(0, -1, 1, 0).elliptic_fixed_cell().unwrap();
        assert_eq!(cell, EllipticCell::FixedEdge(edge("0", "inf")));
        let cell = mc(1, 1, -1, 0).elliptic_fixed_cell().unwrap();
        let tri = FareyTriangle::new(s("0"), s("-1"), s("inf")).unwrap();
        assert_eq!(cell, EllipticCell::FixedTriangle(tri));
        let cell = mc(0, -1, 1, -1).elliptic_fixed_cell().unwrap();
        let tri = FareyTriangle::new(s("0"), s("1"), s("inf")).unwrap();
        assert_eq!(cell, EllipticCell::FixedTriangle(tri));
        assert!(mc(1, 1, 0, 1).elliptic_fixed_cell().is_err());
    }

    #[test]
    fn elliptic_cells_far_from_base() {
        // conjugates of the order-2 and order-3 rotations by a long word
        let w = mc(7, 3, 2, 1).compose(&mc(1, 4, 0, 1));
        for r in [mc(0, -1, 1, 0), mc(1, 1, -1, 0)] {
            let m = w.compose(&r).compose(&w.inverse());
            let cell = m.elliptic_fixed_cell().unwrap();
            let vs = cell.vertices();
            let mut images: Vec<Slope> = vs.iter().map(|v| m.act_on_slope(v)).collect();
            images.sort();
            assert_eq!(images, vs);
            assert!(vs.iter().all(|v| &m.act_on_slope(v) != v));
        }
    }

    #[test]
    fn axis_of_cat_map() {
        let ax = mc(2, 1, 1, 1).axis().unwrap();
        assert_eq!(
            ax.edges(),
            &[edge("0", "inf"), edge("1", "inf"), edge("1", "2")]
        );
        assert_eq!(ax.period(), 2);
        assert_eq!(
            ax.side_form().coefficients(),
            (&1.into(), &(-1).into(), &(-1).into())
        );
        let ax2 = mc(5, 3, 3, 2).axis().unwrap();
        assert_eq!(ax2.period(), 4);
        assert_eq!(ax2.edges(), &ax.extended(2)[..]);
    }

    #[test]
    fn axis_of_inverse_cat() {
        let m = mc(1, 1, 1, 2);
        let ax = m.axis().unwrap();
        assert_eq!(ax.edges()[0], edge("0", "inf"));
        assert_eq!(ax.edges().last().unwrap(), &m.act_on_edge(&ax.edges()[0]));
        for e in ax.edges() {
            let (x, y) = e.endpoints();
            assert!(!ax.same_side(x, y));
        }
    }

    #[test]
    fn axis_when_no_integer_separates() {
        // x ↦ x/(x+1) after x ↦ x+2 moves the cat map's fixed points to ≈ 0.58, 0.78
        let g = mc(1, 2, 1, 3);
        let m = g.compose(&mc(2, 1, 1, 1)).compose(&g.inverse());
        let (rep, att) = m.fixed_boundary_points().unwrap();
        assert_eq!(rep.floor(), att.floor());
        let ax = m.axis().unwrap();
        let (x, y) = ax.edges()[0].endpoints();
        assert!(!ax.same_side(x, y));
        assert_eq!(ax.period(), 2);
    }

    #[test]
    fn same_side_and_order() {
        let ax = mc(2, 1, 1, 1).axis().unwrap();
        assert!(ax.same_side(&s("0"), &s("1")));
        assert!(!ax.same_side(&s("0"), &Slope::infinity()));
        assert!(ax.same_side(&s("3/7"), &s("3/7")));
        assert!(ax.order_less(&s("0"), &s("1")).unwrap());
        assert!(!ax.order_less(&s("1"), &s("0")).unwrap());
        assert!(ax.order_less(&Slope::infinity(), &s("2")).unwrap());
        assert!(matches!(
            ax.order_less(&s("0"), &s("2")),
            Err(Error::DifferentSides(..))
        ));
    }
}
