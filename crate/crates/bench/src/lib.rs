//! Benchmark-only crate; see `benches/counts.rs`.
//!
//! Shared fixtures for the benchmarks live here so the bench target stays
//! a thin harness.

use colorforest::{ColorSeq, Composition};

/// The heavy worked example: a 32-vertex four-color character.
pub fn headline_instance() -> (Composition, ColorSeq) {
    (
        Composition::new(vec![11, 7, 8, 6]).unwrap(),
        ColorSeq::new(4, vec![1, 1, 3]).unwrap(),
    )
}

/// A mid-sized three-color character for the enumeration-path benchmarks.
pub fn medium_instance() -> (Composition, ColorSeq) {
    (
        Composition::new(vec![4, 4, 3]).unwrap(),
        ColorSeq::new(3, vec![1, 2]).unwrap(),
    )
}
