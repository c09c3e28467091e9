//! Bounded-denominator approximation by mediant descent, and adjacent
//! neighbours arbitrarily close to a fraction.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fraction::{is_adjacent, mediant, normalized_error, Fraction, Interval};
use crate::genealogy::parents;

/// How candidates are ranked against the target.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Ranking {
    /// `|target − x|`.
    #[default]
    Absolute,
    /// `x.den · |target − x|`.
    Normalized,
}

/// The adjacent pair bracketing a target among the fractions with bounded
/// denominators, and the better of the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationResult {
    pub below: Fraction,
    pub above: Fraction,
    pub best: Fraction,
    pub interval_certificate: Interval,
}

/// Mediants visited while descending from `[0/1, 1/0]` towards a target.
///
/// Each item is the interval before the split together with its mediant.
/// Iteration stops after the mediant equal to the target.
#[derive(Clone, Debug)]
pub struct Descent {
    target: Fraction,
    lo: Fraction,
    hi: Fraction,
    done: bool,
}

impl Descent {
    pub fn new(target: Fraction) -> Result<Self> {
        if target.is_boundary() {
            return Err(Error::Boundary(target));
        }
        Ok(Descent {
            target,
            lo: Fraction::zero(),
            hi: Fraction::infinity(),
            done: false,
        })
    }

    /// The current bracketing interval.
    pub fn interval(&self) -> Interval {
        Interval::from_ordered(self.lo.clone(), self.hi.clone())
    }
}

impl Iterator for Descent {
    type Item = (Interval, Fraction);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let before = self.interval();
        let m = mediant(&self.lo, &self.hi);
        match self.target.cmp(&m) {
            Ordering::Equal => self.done = true,
            Ordering::Less => self.hi = m.clone(),
            Ordering::Greater => self.lo = m.clone(),
        }
        Some((before, m))
    }
}

fn rank_key(target: &BigRational, x: &Fraction, ranking: Ranking) -> BigRational {
    let value = x.to_rational().expect("candidates are finite");
    match ranking {
        Ranking::Absolute => (target - value).abs(),
        Ranking::Normalized => normalized_error(target, x).expect("candidates are finite"),
    }
}

/// Picks the better of two candidates: lower error, then smaller denominator,
/// then smaller value.
fn better<'a>(
    target: &BigRational,
    a: &'a Fraction,
    b: &'a Fraction,
    ranking: Ranking,
) -> &'a Fraction {
    let ka = rank_key(target, a, ranking);
    let kb = rank_key(target, b, ranking);
    let order = ka
        .cmp(&kb)
        .then_with(|| a.den().cmp(b.den()))
        .then_with(|| a.cmp(b));
    if order == Ordering::Greater {
        b
    } else {
        a
    }
}

/// Best approximation of `target` by fractions with denominator at most
/// `max_den`, ranked by absolute difference.
pub fn best_bounded(target: &Fraction, max_den: &BigUint) -> Result<ApproximationResult> {
    best_bounded_with(target, max_den, Ranking::Absolute)
}

/// [`best_bounded`] with a choice of ranking.
///
/// If the target itself is admissible it is returned as `best`, paired with
/// its left parent as `below`.
pub fn best_bounded_with(
    target: &Fraction,
    max_den: &BigUint,
    ranking: Ranking,
) -> Result<ApproximationResult> {
    if max_den.is_zero() {
        return Err(Error::ZeroDenominatorBound);
    }
    let mut descent = Descent::new(target.clone())?;
    let target_value = target.to_rational().expect("target is finite");
    loop {
        let (interval, m) = descent.next().expect("descent ends at the target");
        if &m == target && m.den() <= max_den {
            let below = interval.lo().clone();
            return Ok(ApproximationResult {
                interval_certificate: Interval::from_ordered(below.clone(), m.clone()),
                below,
                above: m.clone(),
                best: m,
            });
        }
        if m.den() > max_den {
            // Everything strictly inside has a denominator of at least m.den.
            let (below, above) = interval.clone().into_ends();
            let best = better(&target_value, &below, &above, ranking).clone();
            return Ok(ApproximationResult {
                below,
                above,
                best,
                interval_certificate: interval,
            });
        }
    }
}

/// Fractions adjacent to `f` on either side, each closer than `epsilon`.
///
/// Starting from a parent `g`, the neighbours `g ⊕ f, g ⊕ 2f, ...` approach
/// `f` with gaps `1/(f.den · den)`; the fewest steps meeting `epsilon` are
/// taken on each side.
pub fn adjacent_neighbors_within(
    f: &Fraction,
    epsilon: &BigRational,
) -> Result<(Fraction, Fraction)> {
    if f.is_boundary() {
        return Err(Error::Boundary(f.clone()));
    }
    if !epsilon.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    let pair = parents(f)?;
    let eps_num = epsilon.numer().magnitude().clone();
    let eps_den = epsilon.denom().magnitude().clone();
    let below = approach(f, &pair.left, &eps_num, &eps_den);
    let above = approach(f, &pair.right, &eps_num, &eps_den);
    debug_assert!(is_adjacent(&below, f) && is_adjacent(f, &above));
    Ok((below, above))
}

/// `g + k·f` (componentwise) for the least `k` with
/// `f.den · (g.den + k·f.den) · eps_num > eps_den`.
fn approach(f: &Fraction, g: &Fraction, eps_num: &BigUint, eps_den: &BigUint) -> Fraction {
    let q = f.den();
    let start = q * g.den() * eps_num;
    let k = if &start > eps_den {
        BigUint::zero()
    } else {
        (eps_den - start) / (q * q * eps_num) + 1u32
    };
    Fraction::from_coprime(g.num() + &k * f.num(), g.den() + &k * q)
}

/// Scans every fraction with denominator up to `max(lo.den, hi.den)` for one
/// strictly inside `interval`; true when none is found.
///
/// For a finite interval this holds exactly when the ends are adjacent.
pub fn verify_adjacency_by_denominators(interval: &Interval, scan_bound: &BigUint) -> Result<bool> {
    let (lo, hi) = (interval.lo(), interval.hi());
    if hi.is_infinite() {
        return Err(Error::Infinite);
    }
    let needed = lo.den().max(hi.den()).clone();
    if scan_bound < &needed {
        return Err(Error::ScanBoundTooSmall {
            bound: scan_bound.to_string(),
            needed: needed.to_string(),
        });
    }
    let mut b = BigUint::from(1u32);
    let mut clear = true;
    while b <= needed {
        // Smallest a with a/b > lo, then check a/b < hi.
        let a = lo.num() * &b / lo.den() + 1u32;
        if &a * hi.den() < hi.num() * &b {
            clear = false;
            break;
        }
        b += 1u32;
    }
    debug_assert_eq!(clear, interval.is_adjacent(), "{interval}");
    Ok(clear)
}
