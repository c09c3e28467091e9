//! The classic binary trees of the positive fractions and their rows.
//!
//! Unreduced trees (Stern-Brocot, Calkin-Wilf, Shen-Andreev) are rooted at
//! `1/1` and contain every positive fraction exactly once. Reduced trees are
//! what is left of them after removing `1/1` and every fraction above one;
//! they are rooted at `1/2` and hold exactly the fractions in `(0, 1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::fraction::{mediant, Fraction};
use crate::genealogy::{parents, path_to, Path, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeKind {
    SternBrocot,
    CalkinWilf,
    ShenAndreev,
    /// The reduced Shen-Andreev tree.
    Kepler,
    SternBrocotReduced,
    CalkinWilfReduced,
}

impl TreeKind {
    pub const ALL: [TreeKind; 6] = [
        TreeKind::SternBrocot,
        TreeKind::CalkinWilf,
        TreeKind::ShenAndreev,
        TreeKind::Kepler,
        TreeKind::SternBrocotReduced,
        TreeKind::CalkinWilfReduced,
    ];

    pub const UNREDUCED: [TreeKind; 3] = [
        TreeKind::SternBrocot,
        TreeKind::CalkinWilf,
        TreeKind::ShenAndreev,
    ];

    pub fn is_reduced(self) -> bool {
        matches!(
            self,
            TreeKind::Kepler | TreeKind::SternBrocotReduced | TreeKind::CalkinWilfReduced
        )
    }

    pub fn root(self) -> Fraction {
        if self.is_reduced() {
            Fraction::from_coprime(1u32.into(), 2u32.into())
        } else {
            Fraction::one()
        }
    }

    /// Short name as used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            TreeKind::SternBrocot => "sb",
            TreeKind::CalkinWilf => "cw",
            TreeKind::ShenAndreev => "sa",
            TreeKind::Kepler => "kepler",
            TreeKind::SternBrocotReduced => "sb-reduced",
            TreeKind::CalkinWilfReduced => "cw-reduced",
        }
    }

    /// Whether `f` is a node of this tree.
    pub fn contains(self, f: &Fraction) -> bool {
        if f.is_boundary() {
            return false;
        }
        !self.is_reduced() || f.is_below_one()
    }

    fn require_node(self, f: &Fraction) -> Result<()> {
        if self.contains(f) {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                kind: self,
                fraction: f.clone(),
            })
        }
    }
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TreeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TreeKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_owned()))
    }
}

/// A tree node together with its position: `index` counts from zero, left
/// to right, within `row`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeNode {
    pub value: Fraction,
    pub row: usize,
    pub index: BigUint,
}

fn frac(num: BigUint, den: BigUint) -> Fraction {
    Fraction::from_coprime(num, den)
}

/// The `(left, right)` children of `f` in the tree of the given kind.
pub fn children(kind: TreeKind, f: &Fraction) -> Result<(Fraction, Fraction)> {
    kind.require_node(f)?;
    let (p, q) = (f.num(), f.den());
    let sum = p + q;
    Ok(match kind {
        TreeKind::SternBrocot | TreeKind::SternBrocotReduced => {
            let pair = parents(f)?;
            (mediant(&pair.left, f), mediant(f, &pair.right))
        }
        TreeKind::CalkinWilf => (frac(p.clone(), sum.clone()), frac(sum, q.clone())),
        TreeKind::ShenAndreev => (frac(sum.clone(), q.clone()), frac(q.clone(), sum)),
        TreeKind::Kepler => (frac(p.clone(), sum.clone()), frac(q.clone(), sum)),
        // Node a/b stands for the left Calkin-Wilf child of a/(b-a); its
        // children are the left children of that node's two children.
        TreeKind::CalkinWilfReduced => {
            let right_den = (q << 1u32) - p;
            (frac(p.clone(), sum), frac(q.clone(), right_den))
        }
    })
}

/// The tree parent of `f` and which child of it `f` is; `None` at the root.
fn tree_parent(kind: TreeKind, f: &Fraction) -> Option<(Fraction, Step)> {
    if f == &kind.root() {
        return None;
    }
    let (p, q) = (f.num(), f.den());
    Some(match kind {
        TreeKind::SternBrocot | TreeKind::SternBrocotReduced => {
            let pair = parents(f).expect("nodes are positive and finite");
            // The younger parent is the tree parent.
            if pair.left.num() + pair.left.den() < pair.right.num() + pair.right.den() {
                (pair.right, Step::L)
            } else {
                (pair.left, Step::R)
            }
        }
        TreeKind::CalkinWilf => {
            if p < q {
                (frac(p.clone(), q - p), Step::L)
            } else {
                (frac(p - q, q.clone()), Step::R)
            }
        }
        TreeKind::ShenAndreev => {
            if p > q {
                (frac(p - q, q.clone()), Step::L)
            } else {
                (frac(q - p, p.clone()), Step::R)
            }
        }
        TreeKind::Kepler => {
            if (p << 1u32) < *q {
                (frac(p.clone(), q - p), Step::L)
            } else {
                (frac(q - p, p.clone()), Step::R)
            }
        }
        TreeKind::CalkinWilfReduced => {
            if (p << 1u32) < *q {
                (frac(p.clone(), q - p), Step::L)
            } else {
                (frac((p << 1u32) - q, p.clone()), Step::R)
            }
        }
    })
}

/// The L/R path from the root of the tree to `f`.
pub fn tree_path(kind: TreeKind, f: &Fraction) -> Result<Path> {
    kind.require_node(f)?;
    match kind {
        TreeKind::SternBrocot => path_to(f),
        TreeKind::SternBrocotReduced => {
            let full = path_to(f)?;
            Ok(full.steps()[1..].iter().copied().collect())
        }
        _ => {
            let mut steps = Vec::new();
            let mut current = f.clone();
            while let Some((parent, step)) = tree_parent(kind, &current) {
                steps.push(step);
                current = parent;
            }
            steps.reverse();
            Ok(Path::from(steps))
        }
    }
}

/// The node reached from the root by following `path`.
pub fn node_at_path(kind: TreeKind, path: &Path) -> Fraction {
    path.steps().iter().fold(kind.root(), |node, step| {
        let (left, right) = children(kind, &node).expect("children of a node are nodes");
        match step {
            Step::L => left,
            Step::R => right,
        }
    })
}

/// Random access by `(row, index)`, replaying the index's binary digits.
pub fn node_at(kind: TreeKind, row: usize, index: &BigUint) -> Result<TreeNode> {
    if index.bits() > row as u64 {
        return Err(Error::IndexOutOfRange {
            row,
            index: index.to_string(),
        });
    }
    let value = node_at_path(kind, &Path::from_bits(index, row));
    Ok(TreeNode {
        value,
        row,
        index: index.clone(),
    })
}

/// Locates `f` in the tree: its row and position within the row.
pub fn locate(kind: TreeKind, f: &Fraction) -> Result<TreeNode> {
    let path = tree_path(kind, f)?;
    Ok(TreeNode {
        value: f.clone(),
        row: path.len(),
        index: path.to_bits(),
    })
}

fn next_row(kind: TreeKind, row: &[Fraction]) -> Vec<Fraction> {
    let mut out = Vec::with_capacity(row.len() * 2);
    for f in row {
        let (left, right) = children(kind, f).expect("rows only hold nodes");
        out.push(left);
        out.push(right);
    }
    out
}

/// Successive rows of a tree, starting at row 0. Only the current row is kept.
#[derive(Clone, Debug)]
pub struct Rows {
    kind: TreeKind,
    current: Option<Vec<Fraction>>,
}

impl Rows {
    pub fn new(kind: TreeKind) -> Self {
        Rows {
            kind,
            current: None,
        }
    }
}

impl Iterator for Rows {
    type Item = Vec<Fraction>;

    fn next(&mut self) -> Option<Vec<Fraction>> {
        let row = match &self.current {
            None => vec![self.kind.root()],
            Some(prev) => next_row(self.kind, prev),
        };
        self.current = Some(row.clone());
        Some(row)
    }
}

/// Row `r`, left to right; `2^r` fractions.
pub fn row(kind: TreeKind, r: usize) -> Vec<Fraction> {
    Rows::new(kind).nth(r).expect("rows never run out")
}

/// Whether row `r` of two unreduced trees holds the same fractions.
pub fn rows_equivalent(kind1: TreeKind, kind2: TreeKind, r: usize) -> Result<bool> {
    for kind in [kind1, kind2] {
        if kind.is_reduced() {
            return Err(Error::ReducedKind(kind));
        }
    }
    let mut a = row(kind1, r);
    let mut b = row(kind2, r);
    a.sort_unstable();
    b.sort_unstable();
    Ok(a == b)
}

/// The tree left after dropping `1/1` and all fractions above one.
pub fn reduce_tree(kind: TreeKind) -> Result<TreeKind> {
    match kind {
        TreeKind::SternBrocot => Ok(TreeKind::SternBrocotReduced),
        TreeKind::CalkinWilf => Ok(TreeKind::CalkinWilfReduced),
        TreeKind::ShenAndreev => Ok(TreeKind::Kepler),
        reduced => Err(Error::AlreadyReduced(reduced)),
    }
}
