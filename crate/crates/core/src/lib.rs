//! Exact enumeration of injectively k-colored rooted forests.
//!
//! An injective k-coloring of a rooted forest (arrows oriented away from
//! the roots) assigns each vertex one of k colors so that every closed
//! out-neighborhood sees each color at most once. This crate counts and
//! enumerates such forests by character (the per-color vertex census) and
//! root color sequence, exactly, in big integers:
//!
//! * [`combinatorics`] — binomials, compositions, partitions, orbit sizes,
//!   Fuss-Catalan numbers.
//! * [`keypoly`] — the key polynomial `P_k`, symbolically and as a direct
//!   evaluator, plus the identities it satisfies.
//! * [`counting`] — closed-form counts: forests, trees, totals, the
//!   `xi`/`alpha` Fuss-Catalan distributions, triangulation type counts.
//! * [`enumeration`] — canonical representatives of forest isomorphism
//!   classes, the memoized brute-force oracle, and the structural maps
//!   (last-root deletion/attachment, root decomposition).
//! * [`triangulation`] — polygon triangulations, their essentially unique
//!   proper 3-colorings, the dual-tree bijection, and the type census.
//! * [`table`] — census tables with byte-stable CSV/JSON export.
//! * [`checks`] — the self-verification sweeps the `verify` CLI command
//!   drives.
//!
//! Everything is pure, deterministic, and exact: divisions the formulas
//! promise to be integral are asserted to be so.

pub mod checks;
pub mod combinatorics;
pub mod counting;
pub mod enumeration;
pub mod error;
pub mod keypoly;
pub mod table;
pub mod triangulation;

pub use combinatorics::{
    binomial, compositions, fuss_catalan, fuss_catalan_series, partitions, Composition,
    Compositions, Count, Partition, WeightMode,
};
pub use counting::{
    alpha, alpha_formula, count_forests, count_forests_total, count_trees,
    count_triangulations_by_type, feasible, xi, ColorSeq,
};
pub use enumeration::{
    attach_root, brute_count, brute_count_with_limit, decompose_tree, delete_last_root,
    enumerate_forests, enumerate_trees, parse_forest, BruteCounter, ColoredForest, ColoredTree,
    DEFAULT_BRUTE_LIMIT,
};
pub use error::Error;
pub use keypoly::{
    build_pk, build_pk_shift, eval_pk, eval_pk_ints, pk_zy_min_coefficient, verify_pk_identity,
    PkIdentity, SparsePoly,
};
pub use table::{CountTable, TableLayout};
pub use triangulation::{
    census, chi, chi_inverse, enumerate_triangulations, is_equitable, proper_three_coloring,
    type_of, TriColoring, Triangulation,
};
