//! Acceptance suite: one test per exit criterion, each printing a
//! pass/fail line and enforcing both the exact expected values and the
//! stated time budget. Run with `--nocapture` to see the lines:
//!
//! ```text
//! cargo test -p colorforest --test acceptance -- --nocapture
//! ```

use std::time::{Duration, Instant};

use colorforest::checks;
use colorforest::keypoly::xy_names;
use colorforest::table::{table_alpha, table_xi, TableLayout};
use colorforest::{
    build_pk, census, count_forests, enumerate_forests, fuss_catalan, ColorSeq, Composition, Count,
    Partition, SparsePoly,
};

fn comp(parts: &[u64]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn seq(k: usize, entries: &[usize]) -> ColorSeq {
    ColorSeq::new(k, entries.to_vec()).unwrap()
}

fn report(criterion: &str, ok: bool, elapsed: Duration, detail: &str) {
    println!(
        "acceptance {criterion}: {} in {elapsed:.2?} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn within(elapsed: Duration, budget: Duration, criterion: &str) {
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its {budget:.0?} budget: {elapsed:.2?}"
    );
}

/// 1. The headline forest count, exactly, in under a millisecond.
#[test]
fn criterion_1_headline_count() {
    let lambda = comp(&[11, 7, 8, 6]);
    let roots = seq(4, &[1, 1, 3]);
    let expected: Count = "2223687758798502796800".parse().unwrap();

    // warm once, then take the fastest of a few runs
    let mut value = count_forests(&lambda, &roots).unwrap();
    let mut best = Duration::MAX;
    for _ in 0..10 {
        let t0 = Instant::now();
        value = count_forests(&lambda, &roots).unwrap();
        best = best.min(t0.elapsed());
    }
    let ok = value == expected;
    report("1 (headline count)", ok, best, &format!("value={value}"));
    within(best, Duration::from_millis(1), "1");
}

/// 2. The 20-forest gallery: count and explicit enumeration agree, all
///    canonical texts pairwise distinct.
#[test]
fn criterion_2_gallery() {
    let t0 = Instant::now();
    let lambda = comp(&[3, 1, 1]);
    let roots = seq(3, &[1, 1]);
    let count = count_forests(&lambda, &roots).unwrap();
    let stream = enumerate_forests(&lambda, &roots).unwrap();
    let texts: std::collections::BTreeSet<String> = stream
        .iter()
        .map(colorforest::ColoredForest::canonical_text)
        .collect();
    let ok = count == Count::from(20u32) && stream.len() == 20 && texts.len() == 20;
    let elapsed = t0.elapsed();
    report(
        "2 (gallery of 20)",
        ok,
        elapsed,
        &format!(
            "count={count} stream={} distinct={}",
            stream.len(),
            texts.len()
        ),
    );
    within(elapsed, Duration::from_secs(1), "2");
}

/// 3. Oracle equivalence: memoized enumeration count equals the closed
///    form on every character and root multiplicity in the stated ranges.
#[test]
fn criterion_3_oracle_equivalence() {
    let t0 = Instant::now();
    let k3 = checks::check_oracle_equivalence(3, 8, 3);
    let k4 = checks::check_oracle_equivalence(4, 6, 2);
    let ok = k3.passed && k4.passed;
    let elapsed = t0.elapsed();
    report(
        "3 (oracle equivalence)",
        ok,
        elapsed,
        &format!(
            "k=3: {} cases, k=4: {} cases{}",
            k3.cases,
            k4.cases,
            k3.detail
                .or(k4.detail)
                .map(|d| format!(" [{d}]"))
                .unwrap_or_default()
        ),
    );
    within(elapsed, Duration::from_secs(300), "3");
}

/// The xi distribution tables for n = 1..8, exactly as printed (dots are
/// zeros; row/column range 0..floor(n/2)).
const XI_TABLES: [&[&[u64]]; 8] = [
    &[&[1]],
    &[&[0, 1], &[1, 0]],
    &[&[0, 1], &[1, 3]],
    &[&[0, 0, 1], &[0, 8, 2], &[1, 2, 0]],
    &[&[0, 0, 1], &[0, 5, 15], &[1, 15, 5]],
    &[
        &[0, 0, 0, 1],
        &[0, 0, 27, 8],
        &[0, 27, 54, 3],
        &[1, 8, 3, 0],
    ],
    &[
        &[0, 0, 0, 1],
        &[0, 0, 14, 42],
        &[0, 14, 168, 70],
        &[1, 42, 70, 7],
    ],
    &[
        &[0, 0, 0, 0, 1],
        &[0, 0, 0, 64, 20],
        &[0, 0, 200, 400, 30],
        &[0, 64, 400, 192, 4],
        &[1, 20, 30, 4, 0],
    ],
];

/// 4. All eight xi tables cell-for-cell, zeros included, with Catalan
///    checksums.
#[test]
fn criterion_4_xi_tables() {
    let t0 = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for (idx, expected) in XI_TABLES.iter().enumerate() {
        let n = idx as u64 + 1;
        let table = table_xi(n).unwrap();
        let TableLayout::Grid { rows, cols, .. } = &table.layout else {
            panic!("xi table must be a grid")
        };
        if rows.len() != expected.len() || cols.len() != expected[0].len() {
            ok = false;
            detail = format!("n={n}: shape {}x{}", rows.len(), cols.len());
            break;
        }
        'cells: for (r, row) in expected.iter().enumerate() {
            for (c, &want) in row.iter().enumerate() {
                let got = table.cell(r as u64, c as u64).unwrap();
                if got != &Count::from(want) {
                    ok = false;
                    detail = format!("n={n} cell ({r},{c}): {got} != {want}");
                    break 'cells;
                }
            }
        }
        let catalan = fuss_catalan(n, 2, 1).unwrap();
        if table.cells_sum() != catalan || table.total != catalan {
            ok = false;
            detail = format!("n={n}: sum {} != C_n {catalan}", table.cells_sum());
        }
        if !ok {
            break;
        }
    }
    let elapsed = t0.elapsed();
    report("4 (xi tables)", ok, elapsed, &detail);
    within(elapsed, Duration::from_secs(1), "4");
}

/// The alpha distribution tables at n = 6 for the three weight-3 shapes.
const ALPHA_TABLES: [(&[u64], &[&[u64]]); 3] = [
    (
        &[3, 0, 0],
        &[
            &[0, 0, 81, 300, 81],
            &[0, 135, 1350, 1350, 135],
            &[18, 540, 1458, 540, 18],
            &[10, 81, 81, 10, 0],
            &[0, 0, 0, 0, 0],
        ],
    ),
    (
        &[2, 1, 0],
        &[
            &[0, 0, 55, 140, 15],
            &[0, 145, 1150, 786, 31],
            &[34, 860, 1830, 460, 6],
            &[50, 339, 265, 22, 0],
            &[0, 0, 0, 0, 0],
        ],
    ),
    (
        &[1, 1, 1],
        &[
            &[0, 0, 10, 64, 10],
            &[0, 32, 640, 640, 32],
            &[10, 640, 2000, 640, 10],
            &[64, 640, 640, 64, 0],
            &[10, 32, 10, 0, 0],
        ],
    ),
];

/// 5. All three alpha tables cell-for-cell, each summing to
///    A_6(2,6) = 6188.
#[test]
fn criterion_5_alpha_tables() {
    let t0 = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for (rho_parts, expected) in ALPHA_TABLES {
        let rho = Partition::new(rho_parts.to_vec()).unwrap();
        let table = table_alpha(6, &rho).unwrap();
        let TableLayout::Grid { rows, cols, .. } = &table.layout else {
            panic!("alpha table must be a grid")
        };
        if rows.len() != 5 || cols.len() != 5 {
            ok = false;
            detail = format!("rho={rho}: shape {}x{}", rows.len(), cols.len());
            break;
        }
        'cells: for (r, row) in expected.iter().enumerate() {
            for (c, &want) in row.iter().enumerate() {
                let got = table.cell(r as u64, c as u64).unwrap();
                if got != &Count::from(want) {
                    ok = false;
                    detail = format!("rho={rho} cell ({r},{c}): {got} != {want}");
                    break 'cells;
                }
            }
        }
        if table.cells_sum() != Count::from(6188u32) || table.total != Count::from(6188u32) {
            ok = false;
            detail = format!("rho={rho}: sum {}", table.cells_sum());
        }
        if !ok {
            break;
        }
    }
    let elapsed = t0.elapsed();
    report("5 (alpha tables)", ok, elapsed, &detail);
    within(elapsed, Duration::from_secs(1), "5");
}

/// One census row: a weakly decreasing type and its count.
type CensusRow = (&'static [u64], u64);

/// The triangulation type census for 3 <= n <= 16: every (type, count)
/// row, in table order.
const CENSUS_ROWS: &[(u64, &[CensusRow])] = &[
    (3, &[(&[1, 1, 1], 1)]),
    (4, &[(&[2, 1, 1], 2)]),
    (5, &[(&[2, 2, 1], 5)]),
    (6, &[(&[3, 2, 1], 6), (&[2, 2, 2], 8)]),
    (7, &[(&[3, 3, 1], 7), (&[3, 2, 2], 35)]),
    (8, &[(&[4, 3, 1], 8), (&[4, 2, 2], 16), (&[3, 3, 2], 108)]),
    (9, &[(&[4, 4, 1], 9), (&[4, 3, 2], 252), (&[3, 3, 3], 168)]),
    (
        10,
        &[
            (&[5, 4, 1], 10),
            (&[5, 3, 2], 100),
            (&[4, 4, 2], 320),
            (&[4, 3, 3], 1000),
        ],
    ),
    (
        11,
        &[
            (&[5, 5, 1], 11),
            (&[5, 4, 2], 660),
            (&[5, 3, 3], 891),
            (&[4, 4, 3], 3300),
        ],
    ),
    (
        12,
        &[
            (&[6, 5, 1], 12),
            (&[6, 4, 2], 240),
            (&[6, 3, 3], 294),
            (&[5, 5, 2], 750),
            (&[5, 4, 3], 10500),
            (&[4, 4, 4], 5000),
        ],
    ),
    (
        13,
        &[
            (&[6, 6, 1], 13),
            (&[6, 5, 2], 1430),
            (&[6, 4, 3], 8008),
            (&[5, 5, 3], 14300),
            (&[5, 4, 4], 35035),
        ],
    ),
    (
        14,
        &[
            (&[7, 6, 1], 14),
            (&[7, 5, 2], 490),
            (&[7, 4, 3], 2352),
            (&[6, 6, 2], 1512),
            (&[6, 5, 3], 39690),
            (&[6, 4, 4], 43904),
            (&[5, 5, 4], 120050),
        ],
    ),
    (
        15,
        &[
            (&[7, 7, 1], 15),
            (&[7, 6, 2], 2730),
            (&[7, 5, 3], 27300),
            (&[7, 4, 4], 28080),
            (&[6, 6, 3], 47775),
            (&[6, 5, 4], 458640),
            (&[5, 5, 5], 178360),
        ],
    ),
    (
        16,
        &[
            (&[8, 7, 1], 16),
            (&[8, 6, 2], 896),
            (&[8, 5, 3], 7392),
            (&[8, 4, 4], 7200),
            (&[7, 7, 2], 2744),
            (&[7, 6, 3], 120736),
            (&[7, 5, 4], 493920),
            (&[6, 6, 4], 658560),
            (&[6, 5, 5], 1382976),
        ],
    ),
];

/// 6. Formula census matches the reference table for 3 <= n <= 16;
///    brute-force census matches the formula for 3 <= n <= 12.
#[test]
fn criterion_6_census() {
    let t0 = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for &(n, rows) in CENSUS_ROWS {
        let table = census(n as usize, false).unwrap();
        let TableLayout::Keyed { entries, .. } = &table.layout else {
            panic!("census must be keyed")
        };
        let expected: Vec<(Vec<u64>, Count)> = rows
            .iter()
            .map(|&(lam, c)| (lam.to_vec(), Count::from(c)))
            .collect();
        if entries != &expected {
            ok = false;
            detail = format!("n={n}: {entries:?} != {expected:?}");
            break;
        }
        if table.cells_sum() != table.total {
            ok = false;
            detail = format!(
                "n={n}: rows sum {} != C_(n-2) {}",
                table.cells_sum(),
                table.total
            );
            break;
        }
    }
    if ok {
        let agreement = checks::check_census_agreement(12);
        if !agreement.passed {
            ok = false;
            detail = agreement.detail.unwrap_or_default();
        }
    }
    let elapsed = t0.elapsed();
    report("6 (triangulation census)", ok, elapsed, &detail);
    within(elapsed, Duration::from_secs(120), "6");
}

/// 7. The dual-tree bijection round-trips in both directions for n <= 9,
///    with the character bridge holding on every instance.
#[test]
fn criterion_7_bijection() {
    let t0 = Instant::now();
    let outcome = checks::check_chi_roundtrip(9);
    let elapsed = t0.elapsed();
    report(
        "7 (dual-tree bijection)",
        outcome.passed,
        elapsed,
        &format!(
            "{} instances{}",
            outcome.cases,
            outcome
                .detail
                .map(|d| format!(" [{d}]"))
                .unwrap_or_default()
        ),
    );
    within(elapsed, Duration::from_secs(60), "7");
}

/// 8. The polynomial identities, symbolically, plus the printed forms of
///    the k = 2 and k = 3 key polynomials token-for-token.
#[test]
fn criterion_8_polynomial_identities() {
    use colorforest::PkIdentity;

    let t0 = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    for k in 2..=5 {
        for which in [
            PkIdentity::YZero,
            PkIdentity::TwoSupport,
            PkIdentity::Symmetry,
        ] {
            if !colorforest::verify_pk_identity(k, which) {
                ok = false;
                detail = format!("identity {which:?} fails at k={k}");
            }
        }
    }
    for k in 2..=4 {
        if !colorforest::verify_pk_identity(k, PkIdentity::Shift) {
            ok = false;
            detail = format!("shift identity fails at k={k}");
        }
    }

    // printed forms, canonicalized
    let p2_printed = SparsePoly::from_terms(
        4,
        [
            (1, vec![1, 0, 0, 1]),  // x1 y2
            (1, vec![0, 1, 1, 0]),  // x2 y1
            (-1, vec![0, 0, 1, 1]), // -y1 y2
        ],
    );
    let p3_printed = SparsePoly::from_terms(
        6,
        [
            (1, vec![2, 0, 0, 0, 1, 0]),  // x1^2 y2
            (1, vec![2, 0, 0, 0, 0, 1]),  // x1^2 y3
            (1, vec![0, 2, 0, 1, 0, 0]),  // x2^2 y1
            (1, vec![0, 2, 0, 0, 0, 1]),  // x2^2 y3
            (1, vec![0, 0, 2, 1, 0, 0]),  // x3^2 y1
            (1, vec![0, 0, 2, 0, 1, 0]),  // x3^2 y2
            (2, vec![0, 0, 0, 1, 1, 1]),  // 2 y1 y2 y3
            (1, vec![1, 1, 0, 1, 0, 0]),  // x1 x2 y1
            (1, vec![1, 1, 0, 0, 1, 0]),  // x1 x2 y2
            (2, vec![1, 1, 0, 0, 0, 1]),  // 2 x1 x2 y3
            (1, vec![1, 0, 1, 1, 0, 0]),  // x1 x3 y1
            (2, vec![1, 0, 1, 0, 1, 0]),  // 2 x1 x3 y2
            (1, vec![1, 0, 1, 0, 0, 1]),  // x1 x3 y3
            (2, vec![0, 1, 1, 1, 0, 0]),  // 2 x2 x3 y1
            (1, vec![0, 1, 1, 0, 1, 0]),  // x2 x3 y2
            (1, vec![0, 1, 1, 0, 0, 1]),  // x2 x3 y3
            (-1, vec![1, 0, 0, 1, 1, 0]), // -x1 y1 y2
            (-1, vec![1, 0, 0, 1, 0, 1]), // -x1 y1 y3
            (-2, vec![1, 0, 0, 0, 1, 1]), // -2 x1 y2 y3
            (-1, vec![0, 1, 0, 1, 1, 0]), // -x2 y1 y2
            (-2, vec![0, 1, 0, 1, 0, 1]), // -2 x2 y1 y3
            (-1, vec![0, 1, 0, 0, 1, 1]), // -x2 y2 y3
            (-2, vec![0, 0, 1, 1, 1, 0]), // -2 x3 y1 y2
            (-1, vec![0, 0, 1, 1, 0, 1]), // -x3 y1 y3
            (-1, vec![0, 0, 1, 0, 1, 1]), // -x3 y2 y3
        ],
    );
    let names2 = xy_names(2);
    let names2: Vec<&str> = names2.iter().map(String::as_str).collect();
    let names3 = xy_names(3);
    let names3: Vec<&str> = names3.iter().map(String::as_str).collect();

    let built2 = build_pk(2);
    let built3 = build_pk(3);
    if built2 != p2_printed || built2.canonical_text(&names2) != p2_printed.canonical_text(&names2)
    {
        ok = false;
        detail = format!("P_2 mismatch: {}", built2.canonical_text(&names2));
    }
    if p3_printed.num_terms() != 25 {
        ok = false;
        detail = "transcribed P_3 does not have 25 terms".into();
    }
    if built3 != p3_printed || built3.canonical_text(&names3) != p3_printed.canonical_text(&names3)
    {
        ok = false;
        detail = format!("P_3 mismatch: {}", built3.canonical_text(&names3));
    }
    if built2.canonical_text(&names2) != "x1*y2 + x2*y1 - y1*y2" {
        ok = false;
        detail = format!(
            "P_2 canonical text drifted: {}",
            built2.canonical_text(&names2)
        );
    }

    let elapsed = t0.elapsed();
    report("8 (polynomial identities)", ok, elapsed, &detail);
    within(elapsed, Duration::from_secs(120), "8");
}

/// 9. The forest and tree recurrences on every feasible instance of
///    weight at most 7 with three colors.
#[test]
fn criterion_9_recurrences() {
    let t0 = Instant::now();
    let forest = checks::check_forest_recurrence(3, 7);
    let tree = checks::check_tree_recurrence(3, 7);
    let ok = forest.passed && tree.passed;
    let elapsed = t0.elapsed();
    report(
        "9 (recurrences)",
        ok,
        elapsed,
        &format!(
            "forest: {} cases, tree: {} cases{}",
            forest.cases,
            tree.cases,
            forest
                .detail
                .or(tree.detail)
                .map(|d| format!(" [{d}]"))
                .unwrap_or_default()
        ),
    );
    within(elapsed, Duration::from_secs(60), "9");
}

/// 10. The Fuss-Catalan layer: closed form vs. recurrence, series power
///     law, and the total-forest identity.
#[test]
fn criterion_10_fuss_catalan_layer() {
    let t0 = Instant::now();
    let recurrence = checks::check_fuss_recurrence(3, 10);
    let series = checks::check_series_power(3, 4, 12);
    let totals = checks::check_forest_totals(3, 8, 3);
    let ok = recurrence.passed && series.passed && totals.passed;
    let elapsed = t0.elapsed();
    report(
        "10 (Fuss-Catalan layer)",
        ok,
        elapsed,
        &format!(
            "recurrence: {}, series: {}, totals: {} cases{}",
            recurrence.cases,
            series.cases,
            totals.cases,
            recurrence
                .detail
                .or(series.detail)
                .or(totals.detail)
                .map(|d| format!(" [{d}]"))
                .unwrap_or_default()
        ),
    );
    within(elapsed, Duration::from_secs(60), "10");
}
