use thiserror::Error;

use crate::fraction::{Fraction, Interval};
use crate::trees::TreeKind;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a fraction")]
    ZeroOverZero,

    #[error("cannot parse {0:?} as a fraction (expected \"num/den\")")]
    Parse(String),

    #[error("cannot parse {0:?} as a path (expected a string over L and R)")]
    ParsePath(String),

    #[error("expected {lo} < {hi}")]
    NotOrdered { lo: Fraction, hi: Fraction },

    #[error("{a} and {b} are not adjacent")]
    NotAdjacent { a: Fraction, b: Fraction },

    #[error("{0} is a boundary fraction; a positive finite fraction is required")]
    Boundary(Fraction),

    #[error("operation is undefined at 1/0")]
    Infinite,

    #[error("{fraction} lies outside {interval}")]
    OutsideInterval {
        fraction: Fraction,
        interval: Box<Interval>,
    },

    #[error("coordinates ({m}, {n}) are not coprime")]
    NotCoprime { m: String, n: String },

    #[error("coordinates (0, 0) do not locate a fraction")]
    ZeroCoordinates,

    #[error("0/1 and 1/0 have no medidifference")]
    NoMedidifference,

    #[error("[0/1, 1/0] cannot be extended")]
    RootInterval,

    #[error("{fraction} is not a node of the {kind} tree")]
    InvalidNode { kind: TreeKind, fraction: Fraction },

    #[error("{0} is a reduced tree; an unreduced tree (sb, cw, sa) is required")]
    ReducedKind(TreeKind),

    #[error("{0} is already a reduced tree")]
    AlreadyReduced(TreeKind),

    #[error("unknown tree kind {0:?}")]
    UnknownKind(String),

    #[error("indices start at 1")]
    ZeroIndex,

    #[error("index {index} is out of range for row {row}")]
    IndexOutOfRange { row: usize, index: String },

    #[error("({x}, {y}, {z}) is not of the form (a², ab, b²) with coprime a, b")]
    MalformedTriple { x: String, y: String, z: String },

    #[error("epsilon must be positive")]
    NonPositiveEpsilon,

    #[error("maximum denominator must be at least 1")]
    ZeroDenominatorBound,

    #[error("scan bound {bound} is below the largest end denominator {needed}")]
    ScanBoundTooSmall { bound: String, needed: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
