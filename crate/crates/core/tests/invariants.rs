//! Property sweeps beyond the acceptance gate: the complete check battery
//! at standard depth, plus randomized structural properties (codec round
//! trips, ring laws, stream order).

use proptest::prelude::*;

use colorforest::checks::{self, Depths};
use colorforest::{
    compositions, parse_forest, ColorSeq, ColoredForest, ColoredTree, Composition, SparsePoly,
    WeightMode,
};

#[test]
fn full_check_battery_passes_at_standard_depth() {
    for outcome in checks::run_all(&Depths::standard()) {
        assert!(
            outcome.passed,
            "{} failed after {} cases: {}",
            outcome.name,
            outcome.cases,
            outcome.detail.unwrap_or_default()
        );
        assert!(outcome.cases > 0, "{} ran no cases", outcome.name);
    }
}

#[test]
fn ci_depths_are_a_subset() {
    let ci = Depths::ci();
    let std = Depths::standard();
    assert!(ci.oracle_k3_n <= std.oracle_k3_n);
    assert!(ci.census_n <= std.census_n);
    for outcome in checks::run_all(&ci) {
        assert!(outcome.passed, "{} failed at CI depth", outcome.name);
    }
}

/// Strategy for a valid colored tree over k colors: pick a root color,
/// then a sub-map of differently colored children.
fn arb_tree(k: usize) -> impl Strategy<Value = ColoredTree> {
    let leaf = (1..=k).prop_map(ColoredTree::leaf);
    leaf.prop_recursive(4, 24, k as u32, move |inner| {
        (1..=k, proptest::collection::vec(inner, 0..k)).prop_map(move |(color, candidates)| {
            let mut taken = std::collections::BTreeSet::new();
            let children: Vec<ColoredTree> = candidates
                .into_iter()
                .filter(|c| c.root_color() != color && taken.insert(c.root_color()))
                .collect();
            ColoredTree::new(color, children).unwrap()
        })
    })
}

fn arb_forest(k: usize) -> impl Strategy<Value = ColoredForest> {
    proptest::collection::vec(arb_tree(k), 0..4)
        .prop_map(move |trees| ColoredForest::new(k, trees).unwrap())
}

proptest! {
    #[test]
    fn forest_text_round_trips(forest in arb_forest(4)) {
        let text = forest.canonical_text();
        prop_assert_eq!(parse_forest(4, &text).unwrap(), forest);
    }

    #[test]
    fn forest_character_weight_is_vertex_count(forest in arb_forest(3)) {
        prop_assert_eq!(forest.character().total(), forest.vertex_count());
    }

    #[test]
    fn theta_round_trip_on_random_forests(mut forest in arb_forest(4)) {
        prop_assume!(!forest.trees().is_empty());
        let color = forest.trees().last().unwrap().root_color();
        let (reduced, subset) = colorforest::delete_last_root(&forest).unwrap();
        let back = colorforest::attach_root(&reduced, &subset, color).unwrap();
        prop_assert_eq!(&back, &forest);
        // and the other composition order on the reduced forest
        if !reduced.trees().is_empty() {
            let (again, s2) = colorforest::delete_last_root(&back).unwrap();
            prop_assert_eq!(again, reduced);
            prop_assert_eq!(s2, subset);
        }
        forest = back;
        prop_assert_eq!(forest.k(), 4);
    }

    #[test]
    fn binomial_symmetry(a in 0i64..60, b in 0i64..60) {
        prop_assert_eq!(
            colorforest::binomial(a, b),
            colorforest::binomial(a, a - b)
        );
    }

    #[test]
    fn composition_streams_are_sorted_and_unique(k in 1usize..4, n in 0u64..9) {
        let all: Vec<Composition> = compositions(k, n, WeightMode::AtMost).collect();
        for w in all.windows(2) {
            prop_assert!(w[0].parts() < w[1].parts());
        }
        let exact: Vec<Composition> = compositions(k, n, WeightMode::Exact).collect();
        prop_assert!(exact.iter().all(|c| c.total() == n));
    }
}

/// Random sparse polynomials for ring-law checks.
fn arb_poly() -> impl Strategy<Value = SparsePoly> {
    proptest::collection::vec(((-5i64..=5), proptest::collection::vec(0u32..3, 4)), 0..6)
        .prop_map(|terms| SparsePoly::from_terms(4, terms))
}

proptest! {
    #[test]
    fn poly_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn poly_eval_is_a_ring_map(a in arb_poly(), b in arb_poly(), x0 in -4i64..4, x1 in -4i64..4) {
        let point: Vec<num_bigint::BigInt> =
            [x0, x1, x0 - x1, x1 + 1].iter().map(|&v| v.into()).collect();
        prop_assert_eq!(
            a.mul(&b).unwrap().eval(&point),
            a.eval(&point) * b.eval(&point)
        );
        prop_assert_eq!(
            a.add(&b).unwrap().eval(&point),
            a.eval(&point) + b.eval(&point)
        );
    }
}

#[test]
fn enumerate_streams_are_deterministic() {
    let lambda = Composition::new(vec![3, 2, 1]).unwrap();
    let roots = ColorSeq::new(3, vec![1, 2]).unwrap();
    let first = colorforest::enumerate_forests(&lambda, &roots).unwrap();
    let second = colorforest::enumerate_forests(&lambda, &roots).unwrap();
    assert_eq!(first, second);
    assert!(checks::forest_is_canonical(&first[0]));
}

#[test]
fn zy_reports_stay_informational() {
    let r = checks::zy_report(4);
    assert!(r.passed);
}

/// Values are immutable and the counting functions are pure, so parallel
/// callers must see identical results.
#[test]
fn counting_is_thread_safe() {
    let lambda = std::sync::Arc::new(Composition::new(vec![4, 3, 2]).unwrap());
    let roots = std::sync::Arc::new(ColorSeq::new(3, vec![1, 2]).unwrap());
    let expected = colorforest::count_forests(&lambda, &roots).unwrap();
    let handles: Vec<_> = (0..8)
        .map(|_| {
            let lambda = lambda.clone();
            let roots = roots.clone();
            let expected = expected.clone();
            std::thread::spawn(move || {
                for _ in 0..50 {
                    assert_eq!(
                        colorforest::count_forests(&lambda, &roots).unwrap(),
                        expected
                    );
                    assert_eq!(colorforest::brute_count(&lambda, &roots).unwrap(), expected);
                }
            })
        })
        .collect();
    for h in handles {
        h.join().unwrap();
    }
}
