//! Slopes `p/q ∈ Q ∪ {∞}`, one per isotopy class of essential arc on the
//! once-punctured torus.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A reduced fraction `p/q` with `q ≥ 0`; infinity is stored as `1/0`.
///
/// The representation is canonical, so derived equality and hashing agree
/// with equality of slopes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Normalizes an arbitrary pair `(p, q)`; only `(0, 0)` is rejected.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroSlope);
        }
        let g = p.gcd(&q);
        p /= &g;
        q /= &g;
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    /// Builds a slope from a column vector, which is never `(0, 0)` for the
    /// images of slopes under invertible matrices.
    pub(crate) fn from_vector(p: BigInt, q: BigInt) -> Self {
        Slope::new(p, q).expect("nonzero vector")
    }

    pub fn infinity() -> Self {
        Slope {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn integer(k: impl Into<BigInt>) -> Self {
        Slope {
            p: k.into(),
            q: BigInt::one(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    /// Geometric intersection number `|p·q′ − q·p′|` of the two arcs.
    pub fn intersection_number(&self, other: &Slope) -> BigInt {
        (&self.p * &other.q - &self.q * &other.p).abs()
    }

    pub fn is_adjacent(&self, other: &Slope) -> bool {
        self.intersection_number(other).is_one()
    }

    /// The mediant `(p+p′)/(q+q′)`.
    pub fn mediant(&self, other: &Slope) -> Slope {
        Slope::from_vector(&self.p + &other.p, &self.q + &other.q)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        if self.is_infinity() {
            return f64::INFINITY;
        }
        // Ratio conversion keeps precision for large numerators.
        num_rational::BigRational::new(self.p.clone(), self.q.clone())
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

/// The linear order on `R ∪ {∞}` with `∞` as the maximum.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `p/q`, a bare integer, or `inf` / `∞` for `1/0`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Slope::infinity());
        }
        let bad = || Error::MalformedSlope(s.to_string());
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        Slope::new(p, q).map_err(|_| bad())
    }
}

/// All reduced `p/q` with `0 ≤ q ≤ bound` and `|p| ≤ bound`, sorted, `∞` last.
pub fn enumerate_slopes(bound: u32) -> Vec<Slope> {
    let b = i64::from(bound);
    let mut out = Vec::new();
    for q in 1..=b {
        for p in -b..=b {
            if p.gcd(&q) == 1 {
                out.push(Slope::new(p, q).unwrap());
            }
        }
    }
    out.sort();
    out.push(Slope::infinity());
    out
}
