//! Coordinates of a fraction relative to a reference interval.
//!
//! For `f` in `[lo, hi]` the coordinates are `m = |lo, f|` and `n = |f, hi|`.
//! With `d = |lo, hi|` they satisfy `d·f.num = n·lo.num + m·hi.num` and
//! `d·f.den = n·lo.den + m·hi.den`. When the ends are adjacent `d = 1`, the
//! pair is coprime and `m/n` behaves like a numerator/denominator of `f`
//! relative to the interval.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fraction::{distance, Distance, Fraction, Interval};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coordinates {
    m: BigUint,
    n: BigUint,
}

impl Coordinates {
    pub fn new(m: impl Into<BigUint>, n: impl Into<BigUint>) -> Result<Self> {
        let (m, n) = (m.into(), n.into());
        if m.is_zero() && n.is_zero() {
            return Err(Error::ZeroCoordinates);
        }
        Ok(Coordinates { m, n })
    }

    /// Distance from the lower end.
    pub fn m(&self) -> &BigUint {
        &self.m
    }

    /// Distance to the upper end.
    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn is_coprime(&self) -> bool {
        self.m.gcd(&self.n).is_one()
    }

    /// The coordinate fraction `m/n`, reduced.
    pub fn as_fraction(&self) -> Fraction {
        Fraction::new(self.m.clone(), self.n.clone()).expect("coordinates are never (0, 0)")
    }

    /// Componentwise sum, reduced to lowest terms.
    pub fn mediant(&self, other: &Coordinates) -> Coordinates {
        let m = &self.m + &other.m;
        let n = &self.n + &other.n;
        let g = m.gcd(&n);
        Coordinates {
            m: m / &g,
            n: n / g,
        }
    }

    /// Signed distance between the coordinate fractions, `n1·m2 − m1·n2`.
    pub fn cross(&self, other: &Coordinates) -> BigInt {
        BigInt::from(&self.n * &other.m) - BigInt::from(&self.m * &other.n)
    }
}

impl fmt::Display for Coordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

impl fmt::Debug for Coordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn outside(f: &Fraction, interval: &Interval) -> Error {
    Error::OutsideInterval {
        fraction: f.clone(),
        interval: Box::new(interval.clone()),
    }
}

fn distance_or_zero(a: &Fraction, b: &Fraction) -> BigUint {
    if a == b {
        BigUint::zero()
    } else {
        distance(a, b).expect("ordered by the caller").into_inner()
    }
}

/// Coordinates of `f` with respect to `interval`; any interval is accepted.
pub fn coordinates_of(f: &Fraction, interval: &Interval) -> Result<Coordinates> {
    if !interval.contains(f) {
        return Err(outside(f, interval));
    }
    let m = distance_or_zero(interval.lo(), f);
    let n = distance_or_zero(f, interval.hi());
    Ok(Coordinates { m, n })
}

/// The fraction with coordinates `coords` in an adjacent-bound interval.
pub fn fraction_at(coords: &Coordinates, interval: &Interval) -> Result<Fraction> {
    interval.require_adjacent()?;
    if !coords.is_coprime() {
        return Err(Error::NotCoprime {
            m: coords.m.to_string(),
            n: coords.n.to_string(),
        });
    }
    let (lo, hi) = (interval.lo(), interval.hi());
    let num = &coords.n * lo.num() + &coords.m * hi.num();
    let den = &coords.n * lo.den() + &coords.m * hi.den();
    Ok(Fraction::from_coprime(num, den))
}

/// `|f1, f2|`, computed as the distance between the coordinate fractions of
/// `f1` and `f2` in the adjacent-bound `interval`.
pub fn coordinate_distance(f1: &Fraction, f2: &Fraction, interval: &Interval) -> Result<Distance> {
    interval.require_adjacent()?;
    let direct = distance(f1, f2)?;
    let c1 = coordinates_of(f1, interval)?;
    let c2 = coordinates_of(f2, interval)?;
    let via_coords = c1.cross(&c2);
    assert_eq!(
        via_coords,
        BigInt::from(direct.value().clone()),
        "coordinate distance disagrees with direct distance for {f1}, {f2} in {interval}"
    );
    Ok(direct)
}
