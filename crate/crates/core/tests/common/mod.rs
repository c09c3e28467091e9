//! Brute-force enumerators shared by the integration tests. Everything here
//! works on plain machine integers so it stays independent of the library.

#![allow(dead_code)]

use posrat::Fraction;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn fr(s: &str) -> Fraction {
    s.parse().unwrap()
}

pub fn frac(p: u64, q: u64) -> Fraction {
    Fraction::new(p, q).unwrap()
}

/// Every `(p, q, r, s)` with entries in `0..=bound` and `qr − ps = 1`.
pub fn adjacent_pairs(bound: u64) -> Vec<(u64, u64, u64, u64)> {
    let mut out = Vec::new();
    for q in 1..=bound {
        for s in 0..=bound {
            for p in 0..=bound {
                let qr = 1 + p * s;
                if qr % q == 0 && qr / q <= bound {
                    out.push((p, q, qr / q, s));
                }
            }
        }
    }
    out
}

/// Reduced positive finite fractions `p/q` with `1 <= p, q <= bound`.
pub fn positive_fractions(bound: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in 1..=bound {
        for q in 1..=bound {
            if gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

pub fn row_text(row: &[Fraction]) -> String {
    row.iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
