//! Mediant subdivision and its inverse: parents, handedness and the L/R paths
//! that locate a fraction below `[0/1, 1/0]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fraction::{is_adjacent, mediant, medidifference, Fraction, Interval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    L,
    R,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::L => Step::R,
            Step::R => Step::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::L => 'L',
            Step::R => 'R',
        }
    }
}

/// A finite sequence of left/right choices starting at a tree root.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(Vec<Step>);

impl Path {
    pub fn new() -> Self {
        Path(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, step: Step) {
        self.0.push(step);
    }

    /// Swaps every `L` with `R`.
    pub fn mirror(&self) -> Path {
        self.0.iter().map(|s| s.flip()).collect()
    }

    /// Reads the path as a binary number, `L = 0`, `R = 1`, first step most
    /// significant.
    pub fn to_bits(&self) -> BigUint {
        self.0.iter().fold(BigUint::zero(), |acc, s| {
            (acc << 1u32) + if *s == Step::R { 1u32 } else { 0u32 }
        })
    }

    /// Inverse of [`Path::to_bits`] for a path of known length.
    pub fn from_bits(bits: &BigUint, len: usize) -> Path {
        (0..len)
            .rev()
            .map(|i| if bits.bit(i as u64) { Step::R } else { Step::L })
            .collect()
    }
}

impl FromIterator<Step> for Path {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        Path(iter.into_iter().collect())
    }
}

impl From<Vec<Step>> for Path {
    fn from(steps: Vec<Step>) -> Self {
        Path(steps)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({self})")
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'L' => Ok(Step::L),
                'R' => Ok(Step::R),
                _ => Err(Error::ParsePath(s.to_owned())),
            })
            .collect()
    }
}

/// The unique adjacent pair whose mediant is a given fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParentPair {
    pub left: Fraction,
    pub right: Fraction,
}

impl ParentPair {
    pub fn child(&self) -> Fraction {
        mediant(&self.left, &self.right)
    }

    pub fn as_interval(&self) -> Interval {
        Interval::from_ordered(self.left.clone(), self.right.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Handedness {
    Left,
    Right,
    Root,
}

impl fmt::Display for Handedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Handedness::Left => "left",
            Handedness::Right => "right",
            Handedness::Root => "root",
        })
    }
}

/// Splits an adjacent-bound interval at its mediant.
pub fn subdivide(interval: &Interval) -> Result<(Interval, Interval)> {
    interval.require_adjacent()?;
    let m = interval.mediant();
    Ok((
        Interval::from_ordered(interval.lo().clone(), m.clone()),
        Interval::from_ordered(m, interval.hi().clone()),
    ))
}

/// The adjacent-bound interval of which `interval` is a subdivision half.
///
/// The side that moves is fixed by the shape of the pair: if both numerator
/// and denominator grow from `lo` to `hi`, `hi` is the mediant of `lo` and the
/// new upper end, otherwise `lo` is the mediant of the new lower end and `hi`.
pub fn extend(interval: &Interval) -> Result<Interval> {
    interval.require_adjacent()?;
    if interval.is_full() {
        return Err(Error::RootInterval);
    }
    let (lo, hi) = (interval.lo(), interval.hi());
    let outer = medidifference(lo, hi)?;
    if lo.num() <= hi.num() && lo.den() <= hi.den() {
        Ok(Interval::from_ordered(lo.clone(), outer))
    } else {
        Ok(Interval::from_ordered(outer, hi.clone()))
    }
}

fn require_positive_finite(f: &Fraction) -> Result<()> {
    if f.is_boundary() {
        Err(Error::Boundary(f.clone()))
    } else {
        Ok(())
    }
}

/// Parents of a positive finite fraction `p/q`.
///
/// The left parent `a/b` is the solution of `p·b − q·a = 1` with
/// `1 <= b <= q`, i.e. `b` is the inverse of `p` modulo `q`.
pub fn parents(f: &Fraction) -> Result<ParentPair> {
    require_positive_finite(f)?;
    let (p, q) = (f.num(), f.den());
    let b = if q.is_one() {
        BigUint::one()
    } else {
        let (p_i, q_i) = (BigInt::from(p.clone()), BigInt::from(q.clone()));
        let inverse = p_i.extended_gcd(&q_i).x.mod_floor(&q_i);
        inverse.magnitude().clone()
    };
    let a = (p * &b - 1u32) / q;
    let right = Fraction::from_coprime(p - &a, q - &b);
    let left = Fraction::from_coprime(a, b);
    debug_assert!(is_adjacent(&left, &right));
    Ok(ParentPair { left, right })
}

/// `Right` iff the left parent is also the grandparent.
pub fn handedness(f: &Fraction) -> Result<Handedness> {
    require_positive_finite(f)?;
    if f.is_one() {
        return Ok(Handedness::Root);
    }
    let ParentPair { left, right } = parents(f)?;
    // The older parent has the smaller numerator + denominator.
    if left.num() + left.den() < right.num() + right.den() {
        Ok(Handedness::Right)
    } else {
        Ok(Handedness::Left)
    }
}

/// L/R descent from `[0/1, 1/0]` down to the interval whose mediant is `f`.
pub fn path_to(f: &Fraction) -> Result<Path> {
    require_positive_finite(f)?;
    let (mut lo, mut hi) = (Fraction::zero(), Fraction::infinity());
    let mut path = Path::new();
    loop {
        let m = mediant(&lo, &hi);
        match f.cmp(&m) {
            std::cmp::Ordering::Equal => return Ok(path),
            std::cmp::Ordering::Less => {
                path.push(Step::L);
                hi = m;
            }
            std::cmp::Ordering::Greater => {
                path.push(Step::R);
                lo = m;
            }
        }
    }
}

/// The adjacent-bound interval reached by following `path` from `[0/1, 1/0]`.
pub fn interval_of_path(path: &Path) -> Interval {
    let (mut lo, mut hi) = (Fraction::zero(), Fraction::infinity());
    for step in path.steps() {
        let m = mediant(&lo, &hi);
        match step {
            Step::L => hi = m,
            Step::R => lo = m,
        }
    }
    Interval::from_ordered(lo, hi)
}

/// The fraction at the end of `path`; inverse of [`path_to`].
pub fn fraction_of_path(path: &Path) -> Fraction {
    interval_of_path(path).mediant()
}

/// The integer `n` with `n <= a < b <= n + 1` for an adjacent finite pair.
pub fn confining_unit_interval(a: &Fraction, b: &Fraction) -> Result<BigUint> {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    if !is_adjacent(lo, hi) {
        return Err(Error::NotAdjacent {
            a: a.clone(),
            b: b.clone(),
        });
    }
    if hi.is_infinite() {
        return Err(Error::Infinite);
    }
    let n = lo.floor().expect("lo is finite");
    debug_assert!(hi <= &Fraction::integer(&n + 1u32));
    Ok(n)
}
