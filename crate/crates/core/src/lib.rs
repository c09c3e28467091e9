//! Exact arithmetic on the set of positive fractions: normalized distance,
//! adjacency, mediants, coordinates relative to an interval, unique parents,
//! the Stern-Brocot, Calkin-Wilf, Shen-Andreev and Kepler trees, and the
//! Stern and Newman enumerations.
//!
//! All integers are arbitrary precision; every operation is a pure function
//! over immutable values.
//!
//! ```
//! use posrat::{best_bounded, parents, path_to, Fraction};
//!
//! let f: Fraction = "4/7".parse()?;
//! assert_eq!(path_to(&f)?.to_string(), "LRLL");
//! let p = parents(&f)?;
//! assert_eq!((p.left.to_string(), p.right.to_string()), ("1/2".into(), "3/5".into()));
//!
//! let r = best_bounded(&"7/5".parse()?, &3u32.into())?;
//! assert_eq!(r.best.to_string(), "4/3");
//! # Ok::<(), posrat::Error>(())
//! ```

pub mod approximation;
pub mod coordinates;
pub mod enumerations;
pub mod error;
pub mod fraction;
pub mod genealogy;
pub mod trees;

pub use approximation::{
    adjacent_neighbors_within, best_bounded, best_bounded_with, verify_adjacency_by_denominators,
    ApproximationResult, Descent, Ranking,
};
pub use coordinates::{coordinate_distance, coordinates_of, fraction_at, Coordinates};
pub use enumerations::{
    cw_sequence, fraction_at_index, index_of, newman_successor, stern, stern_ratio,
    triple_children, triple_row, triple_to_ratio, Newman, SternRatios, Triple,
};
pub use error::{Error, Result};
pub use fraction::{
    classify_adjacent_pair, compare, distance, is_adjacent, mediant, mediant_error, medidifference,
    normalized_error, AdjacencyCase, Distance, Fraction, Interval,
};
pub use genealogy::{
    confining_unit_interval, extend, fraction_of_path, handedness, interval_of_path, parents,
    path_to, subdivide, Handedness, ParentPair, Path, Step,
};
pub use trees::{
    children, locate, node_at, node_at_path, reduce_tree, row, rows_equivalent, tree_path, Rows,
    TreeKind, TreeNode,
};
