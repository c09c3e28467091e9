//! Acceptance suite. Each criterion is checked exactly and reported on one
//! line with its elapsed time; the process fails if any criterion does.

mod common;

use std::collections::{HashMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{adjacent_pairs, frac, gcd, positive_fractions, row_text};
use num_bigint::BigUint;
use num_integer::Integer;
use posrat::{
    best_bounded, classify_adjacent_pair, coordinate_distance, coordinates_of, distance,
    fraction_at, fraction_at_index, fraction_of_path, is_adjacent, mediant, parents, path_to, row,
    rows_equivalent, stern, triple_row, triple_to_ratio, verify_adjacency_by_denominators,
    AdjacencyCase, Coordinates, Fraction, Interval, Newman, Path, Step, SternRatios, TreeKind,
};

type Check = std::result::Result<(), String>;

/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Check, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const FIGURE: [(TreeKind, [&str; 5]); 4] = [
    (
        TreeKind::SternBrocot,
        [
            "1/1",
            "1/2 2/1",
            "1/3 2/3 3/2 3/1",
            "1/4 2/5 3/5 3/4 4/3 5/3 5/2 4/1",
            "1/5 2/7 3/8 3/7 4/7 5/8 5/7 4/5 5/4 7/5 8/5 7/4 7/3 8/3 7/2 5/1",
        ],
    ),
    (
        TreeKind::CalkinWilf,
        [
            "1/1",
            "1/2 2/1",
            "1/3 3/2 2/3 3/1",
            "1/4 4/3 3/5 5/2 2/5 5/3 3/4 4/1",
            "1/5 5/4 4/7 7/3 3/8 8/5 5/7 7/2 2/7 7/5 5/8 8/3 3/7 7/4 4/5 5/1",
        ],
    ),
    (
        TreeKind::ShenAndreev,
        [
            "1/1",
            "2/1 1/2",
            "3/1 1/3 3/2 2/3",
            "4/1 1/4 4/3 3/4 5/2 2/5 5/3 3/5",
            "5/1 1/5 5/4 4/5 7/3 3/7 7/4 4/7 7/2 2/7 7/5 5/7 8/3 3/8 8/5 5/8",
        ],
    ),
    (
        TreeKind::Kepler,
        [
            "1/2",
            "1/3 2/3",
            "1/4 3/4 2/5 3/5",
            "1/5 4/5 3/7 4/7 2/7 5/7 3/8 5/8",
            "1/6 5/6 4/9 5/9 3/10 7/10 4/11 7/11 2/9 7/9 5/12 7/12 3/11 8/11 5/13 8/13",
        ],
    ),
];

fn figure_rows() -> Check {
    for (kind, rows) in FIGURE {
        for (r, expected) in rows.iter().enumerate() {
            let got = row_text(&row(kind, r));
            ensure(got == *expected, || format!("{kind} row {r}: {got}"))?;
        }
        ensure(row(kind, 4).len() == 16, || format!("{kind} row 4 length"))?;
    }
    Ok(())
}

fn row_equivalence() -> Check {
    let kinds = [
        TreeKind::SternBrocot,
        TreeKind::CalkinWilf,
        TreeKind::ShenAndreev,
    ];
    for r in 0..=12 {
        for pair in [
            (kinds[0], kinds[1]),
            (kinds[0], kinds[2]),
            (kinds[1], kinds[2]),
        ] {
            let same = rows_equivalent(pair.0, pair.1, r).map_err(|e| e.to_string())?;
            ensure(same, || {
                format!("{} / {} differ on row {r}", pair.0, pair.1)
            })?;
        }
        for kind in kinds {
            let fractions = row(kind, r);
            let set: HashSet<_> = fractions.iter().cloned().collect();
            ensure(set.len() == fractions.len(), || {
                format!("{kind} row {r} repeats")
            })?;
            for f in &fractions {
                ensure(set.contains(&f.reciprocal()), || {
                    format!("{kind} row {r}: reciprocal of {f} missing")
                })?;
            }
        }
    }
    Ok(())
}

fn unique_parents() -> Check {
    let mut origin: HashMap<Fraction, Vec<(Fraction, Fraction)>> = HashMap::new();
    for (p, q, r, s) in adjacent_pairs(60) {
        let (a, b) = (frac(p, q), frac(r, s));
        origin.entry(mediant(&a, &b)).or_default().push((a, b));
    }
    for (m, pairs) in &origin {
        ensure(pairs.len() == 1, || {
            format!("{m} has {} parent pairs", pairs.len())
        })?;
        let found = parents(m).map_err(|e| e.to_string())?;
        ensure(
            (found.left.clone(), found.right.clone()) == pairs[0],
            || format!("parents({m}) disagrees with brute force"),
        )?;
    }
    ensure(origin.len() > 1000, || "too few mediants".into())
}

fn generation_completeness() -> Check {
    for (p, q) in positive_fractions(199) {
        if p + q > 200 {
            continue;
        }
        let f = frac(p, q);
        let path = path_to(&f).map_err(|e| e.to_string())?;
        ensure(fraction_of_path(&path) == f, || format!("{f} via {path}"))?;
    }
    let mut seen = HashSet::new();
    let mut frontier = vec![Path::new()];
    for _ in 0..=12 {
        let mut next = Vec::new();
        for path in frontier {
            let f = fraction_of_path(&path);
            ensure(seen.insert(f.clone()), || format!("{f} reached twice"))?;
            for step in [Step::L, Step::R] {
                let mut child = path.clone();
                child.push(step);
                next.push(child);
            }
        }
        frontier = next;
    }
    ensure(seen.len() == (1 << 13) - 1, || "path count".into())
}

fn coordinates() -> Check {
    let iv = |lo: &str, hi: &str| Interval::new(common::fr(lo), common::fr(hi)).unwrap();
    let pairs: Vec<(u64, u64)> = (0..=60u64)
        .flat_map(|m| (0..=60 - m).map(move |n| (m, n)))
        .filter(|&(m, n)| gcd(m, n) == 1)
        .collect();
    for interval in [iv("0/1", "1/0"), iv("1/2", "3/5"), iv("2/1", "1/0")] {
        let mut points = Vec::with_capacity(pairs.len());
        for &(m, n) in &pairs {
            let c = Coordinates::new(m, n).unwrap();
            let f = fraction_at(&c, &interval).map_err(|e| e.to_string())?;
            let back = coordinates_of(&f, &interval).map_err(|e| e.to_string())?;
            ensure(back == c, || format!("{c} -> {f} -> {back} in {interval}"))?;
            points.push(f);
        }
        points.sort();
        for w in points.windows(2) {
            let direct = distance(&w[0], &w[1]).map_err(|e| e.to_string())?;
            let via = coordinate_distance(&w[0], &w[1], &interval).map_err(|e| e.to_string())?;
            ensure(direct == via, || format!("{} {} in {interval}", w[0], w[1]))?;
        }
        for (i, f1) in points.iter().enumerate().step_by(7) {
            for f2 in &points[i + 1..] {
                let direct = distance(f1, f2).map_err(|e| e.to_string())?;
                let via = coordinate_distance(f1, f2, &interval).map_err(|e| e.to_string())?;
                ensure(direct == via, || format!("{f1} {f2} in {interval}"))?;
            }
        }
    }

    // Raw images (n·p + m·r)/(n·q + m·s) on intervals of width d.
    for (lo, hi, d) in [
        ((0, 1), (2, 1), 2i128),
        ((0, 1), (3, 1), 3),
        ((1, 3), (3, 4), 5),
        ((1, 2), (4, 3), 5),
    ] {
        let (p, q, r, s) = (lo.0 as i128, lo.1 as i128, hi.0 as i128, hi.1 as i128);
        ensure(q * r - p * s == d, || format!("width of {p}/{q}, {r}/{s}"))?;
        let all: Vec<(i128, i128)> = (0..=60i128)
            .flat_map(|m| (0..=60 - m).map(move |n| (m, n)))
            .filter(|&(m, n)| m + n > 0)
            .collect();
        for &(m1, n1) in all.iter().step_by(5) {
            for &(m2, n2) in &all {
                let (a, b) = (n1 * p + m1 * r, n1 * q + m1 * s);
                let (c, e) = (n2 * p + m2 * r, n2 * q + m2 * s);
                ensure(b * c - a * e == d * (n1 * m2 - m1 * n2), || {
                    format!("({m1},{n1}) ({m2},{n2}) on width {d}")
                })?;
            }
        }
        let interval = Interval::new(frac(lo.0, lo.1), frac(hi.0, hi.1)).unwrap();
        for &(m1, n1) in all.iter().step_by(11) {
            for &(m2, n2) in all.iter().step_by(3) {
                let f1 = frac((n1 * p + m1 * r) as u64, (n1 * q + m1 * s) as u64);
                let f2 = frac((n2 * p + m2 * r) as u64, (n2 * q + m2 * s) as u64);
                if f1 >= f2 {
                    continue;
                }
                let c1 = coordinates_of(&f1, &interval).map_err(|e| e.to_string())?;
                let c2 = coordinates_of(&f2, &interval).map_err(|e| e.to_string())?;
                let dist = distance(&f1, &f2).unwrap().into_inner();
                ensure(
                    c1.cross(&c2) == (dist * BigUint::from(d as u64)).into(),
                    || format!("{f1} {f2} on width {d}"),
                )?;
            }
        }
    }
    Ok(())
}

fn enumeration_agreement() -> Check {
    let count = (1usize << 12) - 1;
    let stern_ratios: Vec<Fraction> = SternRatios::new().take(count).collect();
    let newman: Vec<Fraction> = Newman::new().take(count).collect();
    let bfs: Vec<Fraction> = (0..12).flat_map(|r| row(TreeKind::CalkinWilf, r)).collect();
    ensure(stern_ratios == bfs, || {
        "stern ratios differ from CW rows".into()
    })?;
    ensure(newman == bfs, || "Newman differs from CW rows".into())?;
    for (i, f) in bfs.iter().enumerate() {
        let at = fraction_at_index(i + 1, TreeKind::CalkinWilf).map_err(|e| e.to_string())?;
        ensure(&at == f, || format!("index {}", i + 1))?;
    }

    // Plain-integer diatomic oracle alongside the library values.
    let limit = 100_001usize;
    let mut oracle = vec![0u64; limit + 1];
    oracle[1] = 1;
    for n in 2..=limit {
        oracle[n] = if n % 2 == 0 {
            oracle[n / 2]
        } else {
            oracle[n / 2] + oracle[n / 2 + 1]
        };
    }
    let mut previous = stern(1u32).map_err(|e| e.to_string())?;
    for (n, &expected) in oracle.iter().enumerate().take(limit).skip(1) {
        let next = stern(n + 1).map_err(|e| e.to_string())?;
        ensure(previous == BigUint::from(expected), || format!("f({n})"))?;
        ensure(previous.gcd(&next) == BigUint::from(1u32), || {
            format!("gcd at {n}")
        })?;
        previous = next;
    }
    Ok(())
}

fn ancient_process() -> Check {
    for r in 0..=10 {
        let triples = triple_row(r);
        for t in &triples {
            ensure(t.y() * t.y() == t.x() * t.z(), || {
                format!("generation {r}: {t:?}")
            })?;
        }
        let ratios: Vec<Fraction> = triples.iter().map(triple_to_ratio).collect();
        ensure(ratios == row(TreeKind::CalkinWilf, r), || {
            format!("generation {r} ratios")
        })?;
    }
    Ok(())
}

/// Exhaustive search over every `a/b` with `b <= max_den`. Ranked by the
/// absolute error `|a·tq − b·tp| / (b·tq)`, then denominator, then value.
fn brute_best(tp: u64, tq: u64, max_den: u64) -> (u64, u64) {
    let mut best = (0u64, 1u64);
    let mut best_key: Option<(u128, u128)> = None;
    for b in 1..=max_den {
        for a in 0..=(tp * b / tq + 1) {
            if gcd(a, b) != 1 {
                continue;
            }
            let num = (a as i128 * tq as i128 - b as i128 * tp as i128).unsigned_abs();
            let key = (num, b as u128 * tq as u128);
            let better = match best_key {
                None => true,
                Some((n0, d0)) => {
                    let (lhs, rhs) = (num * d0, n0 * key.1);
                    lhs < rhs
                        || (lhs == rhs && (b < best.1 || (b == best.1 && a * best.1 < best.0 * b)))
                }
            };
            if better {
                best = (a, b);
                best_key = Some(key);
            }
        }
    }
    best
}

fn approximation_oracle() -> Check {
    for (p, q) in positive_fractions(79) {
        if p + q > 80 {
            continue;
        }
        let target = frac(p, q);
        for max_den in 1..=20u64 {
            let got = best_bounded(&target, &max_den.into()).map_err(|e| e.to_string())?;
            let (a, b) = brute_best(p, q, max_den);
            ensure(got.best == frac(a, b), || {
                format!("{target} max_den {max_den}: {} vs {a}/{b}", got.best)
            })?;
        }
    }
    Ok(())
}

fn scan_equivalence() -> Check {
    let mut fractions: Vec<Fraction> = (0..=30u64)
        .flat_map(|p| (1..=30u64).map(move |q| (p, q)))
        .filter(|&(p, q)| gcd(p, q) == 1)
        .map(|(p, q)| frac(p, q))
        .collect();
    fractions.sort();
    let bound = BigUint::from(30u32);
    for (i, lo) in fractions.iter().enumerate() {
        for hi in &fractions[i + 1..] {
            let interval = Interval::new(lo.clone(), hi.clone()).unwrap();
            let scanned =
                verify_adjacency_by_denominators(&interval, &bound).map_err(|e| e.to_string())?;
            ensure(scanned == is_adjacent(lo, hi), || format!("{interval}"))?;
        }
    }
    Ok(())
}

fn classification() -> Check {
    let mut counts = [0usize; 4];
    let pairs = adjacent_pairs(100);
    for &(p, q, r, s) in &pairs {
        let (a, b) = (frac(p, q), frac(r, s));
        let case = classify_adjacent_pair(&a, &b).map_err(|e| e.to_string())?;
        // Independent membership tests on the raw entries.
        let boundary = p == 0 && s == 0;
        let unit = !boundary && p == 1 && r == 1;
        let integers = !boundary && q == 1 && s == 1;
        let ordered = !boundary && !unit && !integers;
        let memberships = [boundary, unit, integers, ordered];
        ensure(memberships.iter().filter(|&&x| x).count() == 1, || {
            format!("{a} {b} in several cases")
        })?;
        let slot = match &case {
            AdjacencyCase::Boundary => 0,
            AdjacencyCase::UnitFractions { n } => {
                ensure(*n == BigUint::from(s), || format!("{a} {b} unit index"))?;
                1
            }
            AdjacencyCase::Integers { n } => {
                ensure(*n == BigUint::from(p), || format!("{a} {b} integer index"))?;
                2
            }
            AdjacencyCase::StrictlyOrdered { ascending } => {
                ensure(*ascending == (p < r && q < s), || {
                    format!("{a} {b} direction")
                })?;
                ensure((p < r) == (q < s), || format!("{a} {b} mixed"))?;
                3
            }
        };
        ensure(memberships[slot], || {
            format!("{a} {b} classified as {case:?}")
        })?;
        counts[slot] += 1;
    }
    ensure(counts.iter().sum::<usize>() == pairs.len(), || {
        "lost pairs".into()
    })?;
    ensure(counts.iter().all(|&c| c > 0), || {
        format!("empty case: {counts:?}")
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 figure rows 0-4 (SB, CW, SA, Kepler)", figure_rows, 1),
        (
            "2 row-wise equivalence and reciprocal closure, rows 0-12",
            row_equivalence,
            5,
        ),
        (
            "3 unique parents, adjacent pairs with entries <= 60",
            unique_parents,
            10,
        ),
        (
            "4 generation completeness, num+den <= 200 and paths <= 12",
            generation_completeness,
            10,
        ),
        (
            "5 coordinates and distance multiplicativity",
            coordinates,
            5,
        ),
        (
            "6 stern / Newman / CW BFS agreement and coprimality",
            enumeration_agreement,
            5,
        ),
        ("7 triple process, generations 0-10", ancient_process, 5),
        (
            "8 best_bounded against exhaustive search",
            approximation_oracle,
            30,
        ),
        (
            "9 denominator scan against is_adjacent, entries <= 30",
            scan_equivalence,
            10,
        ),
        (
            "10 adjacent pair classification, entries <= 100",
            classification,
            5,
        ),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(limit);
        match (&outcome, over) {
            (Ok(()), false) => println!(
                "PASS  {name}  ({:.3}s, limit {limit}s)",
                elapsed.as_secs_f64()
            ),
            (Ok(()), true) => {
                failed += 1;
                println!(
                    "FAIL  {name}  ({:.3}s exceeds {limit}s)",
                    elapsed.as_secs_f64()
                );
            }
            (Err(msg), _) => {
                failed += 1;
                println!("FAIL  {name}  ({:.3}s): {msg}", elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
