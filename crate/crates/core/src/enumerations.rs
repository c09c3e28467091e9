//! Linear enumerations of the positive fractions.
//!
//! Stern's diatomic sequence `f(1) = 1, f(2n) = f(n), f(2n+1) = f(n) + f(n+1)`
//! yields the Calkin-Wilf tree in breadth-first order as `f(n)/f(n+1)`; the
//! successor map `x -> 1/(2⌊x⌋ + 1 − x)` produces the same order in constant
//! space. Breadth-first indices give explicit bijections between the positive
//! integers and the positive fractions for each unreduced tree.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::genealogy::Path;
use crate::trees::{node_at_path, tree_path, TreeKind};

/// `(f(n), f(n+1))`, walking the bits of `n` below the leading one.
fn stern_pair(n: &BigUint) -> (BigUint, BigUint) {
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for i in (0..n.bits().saturating_sub(1)).rev() {
        if n.bit(i) {
            a += &b;
        } else {
            b += &a;
        }
    }
    (a, b)
}

/// Stern's diatomic function `f(n)` for `n >= 1`.
pub fn stern(n: impl Into<BigUint>) -> Result<BigUint> {
    let n = n.into();
    if n.is_zero() {
        return Err(Error::ZeroIndex);
    }
    Ok(stern_pair(&n).0)
}

/// The ratio `f(n)/f(n+1)`, i.e. the `n`-th Calkin-Wilf fraction.
pub fn stern_ratio(n: impl Into<BigUint>) -> Result<Fraction> {
    let n = n.into();
    if n.is_zero() {
        return Err(Error::ZeroIndex);
    }
    let (a, b) = stern_pair(&n);
    Ok(Fraction::from_coprime(a, b))
}

/// Consecutive Stern ratios `f(n)/f(n+1)` for `n = 1, 2, ...`.
#[derive(Clone, Debug)]
pub struct SternRatios {
    next: BigUint,
}

impl SternRatios {
    pub fn new() -> Self {
        SternRatios {
            next: BigUint::one(),
        }
    }
}

impl Default for SternRatios {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for SternRatios {
    type Item = Fraction;

    fn next(&mut self) -> Option<Fraction> {
        let (a, b) = stern_pair(&self.next);
        self.next += 1u32;
        Some(Fraction::from_coprime(a, b))
    }
}

/// The first `count` ratios `f(n)/f(n+1)`.
pub fn cw_sequence(count: usize) -> Vec<Fraction> {
    SternRatios::new().take(count).collect()
}

/// `1/(2⌊x⌋ + 1 − x)`: the Calkin-Wilf breadth-first successor of `x`.
pub fn newman_successor(x: &Fraction) -> Result<Fraction> {
    if x.is_boundary() {
        return Err(Error::Boundary(x.clone()));
    }
    let (p, q) = (x.num(), x.den());
    let floor = p / q;
    // (2k + 1)q − p with k = ⌊p/q⌋; positive and coprime to q.
    let den = ((floor << 1u32) + 1u32) * q - p;
    Ok(Fraction::from_coprime(q.clone(), den))
}

/// Iterates Newman's successor map from `1/1`. The only state is the current
/// fraction.
#[derive(Clone, Debug)]
pub struct Newman {
    current: Fraction,
}

impl Newman {
    pub fn new() -> Self {
        Newman::starting_at(Fraction::one()).expect("1/1 is positive and finite")
    }

    pub fn starting_at(x: Fraction) -> Result<Self> {
        if x.is_boundary() {
            return Err(Error::Boundary(x));
        }
        Ok(Newman { current: x })
    }
}

impl Default for Newman {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Newman {
    type Item = Fraction;

    fn next(&mut self) -> Option<Fraction> {
        let next = newman_successor(&self.current).expect("successors stay positive and finite");
        Some(std::mem::replace(&mut self.current, next))
    }
}

fn require_unreduced(kind: TreeKind) -> Result<()> {
    if kind.is_reduced() {
        Err(Error::ReducedKind(kind))
    } else {
        Ok(())
    }
}

/// 1-based breadth-first index of `f` in an unreduced tree.
pub fn index_of(f: &Fraction, kind: TreeKind) -> Result<BigUint> {
    require_unreduced(kind)?;
    if f.is_boundary() {
        return Err(Error::Boundary(f.clone()));
    }
    let path = tree_path(kind, f)?;
    Ok((BigUint::one() << path.len()) + path.to_bits())
}

/// The fraction at 1-based breadth-first index `i`; inverse of [`index_of`].
pub fn fraction_at_index(i: impl Into<BigUint>, kind: TreeKind) -> Result<Fraction> {
    require_unreduced(kind)?;
    let i = i.into();
    if i.is_zero() {
        return Err(Error::ZeroIndex);
    }
    let depth = (i.bits() - 1) as usize;
    let bits = &i - (BigUint::one() << depth);
    Ok(node_at_path(kind, &Path::from_bits(&bits, depth)))
}

/// A triple `(a², ab, b²)` with `a`, `b` coprime and positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Triple {
    x: BigUint,
    y: BigUint,
    z: BigUint,
}

impl Triple {
    pub fn new(
        x: impl Into<BigUint>,
        y: impl Into<BigUint>,
        z: impl Into<BigUint>,
    ) -> Result<Self> {
        let (x, y, z) = (x.into(), y.into(), z.into());
        let (a, b) = (x.sqrt(), z.sqrt());
        let valid = !a.is_zero()
            && !b.is_zero()
            && &a * &a == x
            && &b * &b == z
            && &a * &b == y
            && a.gcd(&b).is_one();
        if valid {
            Ok(Triple { x, y, z })
        } else {
            Err(Error::MalformedTriple {
                x: x.to_string(),
                y: y.to_string(),
                z: z.to_string(),
            })
        }
    }

    /// `(1, 1, 1)`.
    pub fn unit() -> Self {
        Triple {
            x: BigUint::one(),
            y: BigUint::one(),
            z: BigUint::one(),
        }
    }

    pub fn x(&self) -> &BigUint {
        &self.x
    }

    pub fn y(&self) -> &BigUint {
        &self.y
    }

    pub fn z(&self) -> &BigUint {
        &self.z
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(x, y, z) -> (x, x+y, x+2y+z)` and `(x+2y+z, y+z, z)`.
pub fn triple_children(t: &Triple) -> (Triple, Triple) {
    let outer = &t.x + (&t.y << 1u32) + &t.z;
    let left = Triple {
        x: t.x.clone(),
        y: &t.x + &t.y,
        z: outer.clone(),
    };
    let right = Triple {
        x: outer,
        y: &t.y + &t.z,
        z: t.z.clone(),
    };
    (left, right)
}

/// The ratio `a/b` carried by `(a², ab, b²)`.
pub fn triple_to_ratio(t: &Triple) -> Fraction {
    Fraction::new(t.x.clone(), t.y.clone()).expect("x is positive")
}

/// Generation `r` of the triple process started from `(1, 1, 1)`.
pub fn triple_row(r: usize) -> Vec<Triple> {
    let mut current = vec![Triple::unit()];
    for _ in 0..r {
        current = current
            .iter()
            .flat_map(|t| {
                let (l, r) = triple_children(t);
                [l, r]
            })
            .collect();
    }
    current
}
