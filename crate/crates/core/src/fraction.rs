//! Nonnegative fractions in lowest terms and the distance/adjacency/mediant
//! calculus on them.
//!
//! A [`Fraction`] is a pair of coprime naturals. Besides the positive
//! fractions, exactly two boundary elements are admitted: `0/1` (zero) and
//! `1/0` (infinity). The distance between `p/q < r/s` is the integer
//! `qr - ps`; two fractions at distance one are *adjacent*.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A nonnegative fraction in lowest terms, including `0/1` and `1/0`.
///
/// Equality is structural. Ordering is by cross products, which places `0/1`
/// below and `1/0` above every other fraction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigUint,
    den: BigUint,
}

impl Fraction {
    /// Builds the lowest-terms representative of `num/den`.
    ///
    /// `0/k` becomes `0/1` and `k/0` becomes `1/0`; only `0/0` is rejected.
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Ok(Fraction { num, den })
        } else {
            Ok(Fraction {
                num: num / &g,
                den: den / g,
            })
        }
    }

    /// Wraps a pair already known to be coprime.
    pub(crate) fn from_coprime(num: BigUint, den: BigUint) -> Self {
        debug_assert!(num.gcd(&den).is_one(), "{num}/{den} is not reduced");
        Fraction { num, den }
    }

    pub fn zero() -> Self {
        Fraction::from_coprime(BigUint::zero(), BigUint::one())
    }

    pub fn one() -> Self {
        Fraction::from_coprime(BigUint::one(), BigUint::one())
    }

    pub fn infinity() -> Self {
        Fraction::from_coprime(BigUint::one(), BigUint::zero())
    }

    /// The integer `n/1`.
    pub fn integer(n: impl Into<BigUint>) -> Self {
        Fraction::from_coprime(n.into(), BigUint::one())
    }

    pub fn num(&self) -> &BigUint {
        &self.num
    }

    pub fn den(&self) -> &BigUint {
        &self.den
    }

    pub fn into_parts(self) -> (BigUint, BigUint) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// True for the two boundary elements `0/1` and `1/0`.
    pub fn is_boundary(&self) -> bool {
        self.is_zero() || self.is_infinite()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is strictly less than one.
    pub fn is_below_one(&self) -> bool {
        self.num < self.den
    }

    /// True when the fraction is `n/1`, including `0/1`.
    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// `q/p`. Swaps `0/1` and `1/0`.
    pub fn reciprocal(&self) -> Self {
        Fraction::from_coprime(self.den.clone(), self.num.clone())
    }

    /// Integer part, `None` for `1/0`.
    pub fn floor(&self) -> Option<BigUint> {
        (!self.is_infinite()).then(|| &self.num / &self.den)
    }

    /// `n + self`, keeping `1/0` fixed.
    pub fn add_integer(&self, n: &BigUint) -> Self {
        Fraction::from_coprime(&self.num + n * &self.den, self.den.clone())
    }

    /// The exact rational value, `None` for `1/0`.
    pub fn to_rational(&self) -> Option<BigRational> {
        (!self.is_infinite()).then(|| {
            BigRational::new(
                BigInt::from(self.num.clone()),
                BigInt::from(self.den.clone()),
            )
        })
    }

    /// `self.den * other.num - self.num * other.den`, the signed distance.
    pub(crate) fn signed_cross(&self, other: &Fraction) -> BigInt {
        BigInt::from(&self.den * &other.num) - BigInt::from(&self.num * &other.den)
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Parses `"num/den"` in base 10 with no sign and no whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_owned());
        let (num, den) = s.split_once('/').ok_or_else(bad)?;
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !digits(num) || !digits(den) {
            return Err(bad());
        }
        let num = BigUint::from_str(num).map_err(|_| bad())?;
        let den = BigUint::from_str(den).map_err(|_| bad())?;
        Fraction::new(num, den)
    }
}

/// Ordering of two fractions; same as `a.cmp(b)`.
pub fn compare(a: &Fraction, b: &Fraction) -> Ordering {
    a.cmp(b)
}

/// A distance between two distinct fractions; always at least one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Distance(BigUint);

impl Distance {
    pub(crate) fn new(value: BigUint) -> Self {
        debug_assert!(!value.is_zero());
        Distance(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl PartialEq<u64> for Distance {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

/// A closed interval `[lo, hi]` with `lo < hi`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Fraction,
    hi: Fraction,
}

impl Interval {
    pub fn new(lo: Fraction, hi: Fraction) -> Result<Self> {
        if lo < hi {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::NotOrdered { lo, hi })
        }
    }

    /// Like [`Interval::new`], additionally requiring adjacent ends.
    pub fn adjacent(lo: Fraction, hi: Fraction) -> Result<Self> {
        let interval = Interval::new(lo, hi)?;
        interval.require_adjacent()?;
        Ok(interval)
    }

    pub(crate) fn from_ordered(lo: Fraction, hi: Fraction) -> Self {
        debug_assert!(lo < hi);
        Interval { lo, hi }
    }

    /// `[0/1, 1/0]`.
    pub fn full() -> Self {
        Interval::from_ordered(Fraction::zero(), Fraction::infinity())
    }

    pub fn lo(&self) -> &Fraction {
        &self.lo
    }

    pub fn hi(&self) -> &Fraction {
        &self.hi
    }

    pub fn into_ends(self) -> (Fraction, Fraction) {
        (self.lo, self.hi)
    }

    pub fn width(&self) -> Distance {
        Distance::new(self.lo.signed_cross(&self.hi).magnitude().clone())
    }

    pub fn is_adjacent(&self) -> bool {
        self.width().is_one()
    }

    pub fn is_full(&self) -> bool {
        self.lo.is_zero() && self.hi.is_infinite()
    }

    /// True when `lo <= f <= hi`.
    pub fn contains(&self, f: &Fraction) -> bool {
        &self.lo <= f && f <= &self.hi
    }

    pub fn mediant(&self) -> Fraction {
        mediant(&self.lo, &self.hi)
    }

    pub(crate) fn require_adjacent(&self) -> Result<()> {
        if self.is_adjacent() {
            Ok(())
        } else {
            Err(Error::NotAdjacent {
                a: self.lo.clone(),
                b: self.hi.clone(),
            })
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `q·|x - p/q| = |qx - p|` for `f = p/q`.
pub fn normalized_error(x: &BigRational, f: &Fraction) -> Result<BigRational> {
    if f.is_infinite() {
        return Err(Error::Infinite);
    }
    let q = BigRational::from_integer(BigInt::from(f.den.clone()));
    let p = BigRational::from_integer(BigInt::from(f.num.clone()));
    Ok((q * x - p).abs())
}

/// `|a, b| = a.den·b.num − a.num·b.den` for `a < b`.
pub fn distance(a: &Fraction, b: &Fraction) -> Result<Distance> {
    if a >= b {
        return Err(Error::NotOrdered {
            lo: a.clone(),
            hi: b.clone(),
        });
    }
    Ok(Distance::new(&a.den * &b.num - &a.num * &b.den))
}

/// Whether two fractions, taken in either order, are at distance one.
pub fn is_adjacent(a: &Fraction, b: &Fraction) -> bool {
    a.signed_cross(b).magnitude().is_one()
}

/// The four mutually exclusive shapes an adjacent pair `p/q < r/s` can take.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AdjacencyCase {
    /// `0/1` and `1/0`.
    Boundary,
    /// `1/(n+1)` and `1/n`, `n >= 0`.
    UnitFractions { n: BigUint },
    /// `n/1` and `(n+1)/1`, `n >= 0`.
    Integers { n: BigUint },
    /// `p < r` and `q < s` when `ascending`, otherwise `p > r` and `q > s`.
    StrictlyOrdered { ascending: bool },
}

/// Classifies an adjacent pair `a < b`.
pub fn classify_adjacent_pair(a: &Fraction, b: &Fraction) -> Result<AdjacencyCase> {
    if a >= b {
        return Err(Error::NotOrdered {
            lo: a.clone(),
            hi: b.clone(),
        });
    }
    if !is_adjacent(a, b) {
        return Err(Error::NotAdjacent {
            a: a.clone(),
            b: b.clone(),
        });
    }
    let (p, q, r, s) = (&a.num, &a.den, &b.num, &b.den);
    let case = if p.is_zero() && s.is_zero() {
        AdjacencyCase::Boundary
    } else if p.is_one() && r.is_one() {
        AdjacencyCase::UnitFractions { n: s.clone() }
    } else if q.is_one() && s.is_one() {
        AdjacencyCase::Integers { n: p.clone() }
    } else {
        debug_assert!((p < r && q < s) || (p > r && q > s));
        AdjacencyCase::StrictlyOrdered { ascending: p < r }
    };
    Ok(case)
}

/// `(a.num + b.num)/(a.den + b.den)`, reduced if the pair is not adjacent.
pub fn mediant(a: &Fraction, b: &Fraction) -> Fraction {
    let num = &a.num + &b.num;
    let den = &a.den + &b.den;
    if is_adjacent(a, b) {
        Fraction::from_coprime(num, den)
    } else {
        Fraction::new(num, den).expect("a mediant is never 0/0")
    }
}

/// The fraction `c` such that one of `a`, `b` is the mediant of `c` and the
/// other. Requires `a < b` adjacent and not `[0/1, 1/0]`.
///
/// When `a.num <= b.num` and `a.den <= b.den` the result lies above `b`,
/// otherwise below `a`.
pub fn medidifference(a: &Fraction, b: &Fraction) -> Result<Fraction> {
    let case = classify_adjacent_pair(a, b)?;
    if case == AdjacencyCase::Boundary {
        return Err(Error::NoMedidifference);
    }
    let (num, den) = if a.num <= b.num && a.den <= b.den {
        (&b.num - &a.num, &b.den - &a.den)
    } else {
        (&a.num - &b.num, &a.den - &b.den)
    };
    // Adjacent to both inputs, hence already coprime (0/1 and 1/0 included).
    Ok(Fraction::from_coprime(num, den))
}

/// `|lo, hi| / (lo.den + hi.den)`: the common normalized error with which the
/// two ends approximate their mediant.
pub fn mediant_error(interval: &Interval) -> Result<BigRational> {
    if interval.hi.is_infinite() {
        return Err(Error::Infinite);
    }
    let width = BigInt::from(interval.width().into_inner());
    let den_sum = BigInt::from(&interval.lo.den + &interval.hi.den);
    Ok(BigRational::new(width, den_sum))
}
