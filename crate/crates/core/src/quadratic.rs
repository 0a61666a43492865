//! Real quadratic irrationals `(a + b·√d)/c` with exact comparison.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `(a + b·√d)/c` with `b ≠ 0`, `c > 0`, `d ≥ 2` squarefree and
/// `gcd(a, b, c) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    a: BigInt,
    b: BigInt,
    d: BigInt,
    c: BigInt,
}

impl QuadraticIrrational {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        d: impl Into<BigInt>,
        c: impl Into<BigInt>,
    ) -> Result<Self> {
        let (mut a, mut b, d, mut c) = (a.into(), b.into(), d.into(), c.into());
        if c.is_zero() {
            return Err(Error::InvalidQuadratic("zero denominator"));
        }
        if b.is_zero() {
            return Err(Error::InvalidQuadratic("zero surd coefficient"));
        }
        if d < BigInt::from(2) {
            return Err(Error::InvalidQuadratic("radicand must be at least 2"));
        }
        let (root, d) = split_square(&d);
        if d.is_one() {
            return Err(Error::InvalidQuadratic("radicand is a perfect square"));
        }
        b *= root;
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        Ok(QuadraticIrrational {
            a: a / &g,
            b: b / &g,
            d,
            c: c / &g,
        })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// The Galois conjugate `(a − b·√d)/c`.
    pub fn conjugate(&self) -> Self {
        QuadraticIrrational {
            b: -&self.b,
            ..self.clone()
        }
    }

    /// Exact comparison; fails for different radicands.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        if self.d != other.d {
            return Err(Error::MixedDiscriminant(
                self.d.to_string(),
                other.d.to_string(),
            ));
        }
        let a = &self.a * &other.c - &other.a * &self.c;
        let b = &self.b * &other.c - &other.b * &self.c;
        Ok(surd_sign(&a, &b, &self.d))
    }

    /// Exact comparison with the finite rational `p/q`, `q > 0`.
    pub fn cmp_rational(&self, p: &BigInt, q: &BigInt) -> Ordering {
        debug_assert!(q.is_positive());
        let a = &self.a * q - p * &self.c;
        let b = &self.b * q;
        surd_sign(&a, &b, &self.d)
    }

    /// Exact `⌊(a + b·√d)/c⌋`.
    pub fn floor(&self) -> BigInt {
        let r = (&self.b * &self.b * &self.d).sqrt();
        // √(b²d) is irrational, so ⌊−x⌋ = −⌊x⌋ − 1
        let surd_floor = if self.b.is_positive() { r } else { -r - 1 };
        (&self.a + surd_floor).div_floor(&self.c)
    }

    pub fn to_f64(&self) -> f64 {
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let c = self.c.to_f64().unwrap_or(f64::NAN);
        (a + b * d.sqrt()) / c
    }
}

/// Sign of `a + b·√d` for nonsquare `d > 0`; zero only when `a = b = 0`.
pub(crate) fn surd_sign(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    let zero = BigInt::zero();
    match (a.cmp(&zero), b.cmp(&zero)) {
        (Ordering::Equal, sb) => sb,
        (sa, Ordering::Equal) => sa,
        (sa, sb) if sa == sb => sa,
        // a > 0 > b: positive iff a² > b²d
        (Ordering::Greater, _) => (a * a).cmp(&(b * b * d)),
        // a < 0 < b: positive iff b²d > a²
        _ => (b * b * d).cmp(&(a * a)),
    }
}

/// Writes `n = s²·m` with `m` squarefree and returns `(s, m)`.
///
/// Trial division stops once `p³` exceeds the unfactored part; whatever
/// remains then has at most two prime factors, so it is either squarefree or a perfect square.
pub(crate) fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    if let Some(small) = n.to_u128() {
        let (s, m) = split_square_u128(small);
        return (BigInt::from(s), BigInt::from(m));
    }
    let mut rest = n.clone();
    let mut root = BigInt::one();
    let mut core = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p * &p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= &p;
            }
        }
        p += 1;
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        root *= r;
    } else {
        core *= rest;
    }
    (root, core)
}

fn split_square_u128(n: u128) -> (u128, u128) {
    let mut rest = n;
    let mut root = 1u128;
    let mut core = 1u128;
    let mut p = 2u128;
    while p.checked_pow(3).is_some_and(|c| c <= rest) {
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
        }
        p += 1;
    }
    let r = rest.sqrt();
    if r * r == rest {
        root *= r;
    } else {
        core *= rest;
    }
    (root, core)
}

impl fmt::Display for QuadraticIrrational {
    /// Formats as `(a+b√d)/c`, dropping unit coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        if !self.a.is_zero() {
            num.push_str(&self.a.to_string());
            num.push(if self.b.is_negative() { '-' } else { '+' });
        } else if self.b.is_negative() {
            num.push('-');
        }
        let mag = self.b.abs();
        if !mag.is_one() {
            num.push_str(&mag.to_string());
        }
        num.push('√');
        num.push_str(&self.d.to_string());
        if self.c.is_one() {
            f.write_str(&num)
        } else {
            write!(f, "({})/{}", num, self.c)
        }
    }
}
