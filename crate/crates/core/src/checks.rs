//! Self-verification sweeps: every structural identity the library relies
//! on, exercised over bounded parameter ranges with an exact pass/fail
//! outcome. The CLI `verify` command and the acceptance test suite both
//! drive these.
//!
//! Each check pits two independently implemented routes against each
//! other (closed form vs. recurrence, formula vs. explicit enumeration,
//! map vs. inverse map) and reports the number of instances compared.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{
    compositions, fuss_catalan, fuss_catalan_series, partitions, Composition, Count, WeightMode,
};
use crate::counting::{
    alpha, alpha_formula, count_forests, count_forests_total, count_trees, feasible, ColorSeq,
};
use crate::enumeration::{
    attach_root, delete_last_root, enumerate_forests, enumerate_trees, BruteCounter, ColoredForest,
};
use crate::keypoly::{build_pk, eval_pk, verify_pk_identity, PkIdentity};
use crate::table::TableLayout;
use crate::triangulation::{census, chi, chi_inverse, enumerate_triangulations, type_of};

/// Result of one verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    /// Number of instances compared.
    pub cases: u64,
    pub passed: bool,
    /// Description of the first failing instance, if any.
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn pass(name: &str, cases: u64) -> Self {
        CheckOutcome {
            name: name.to_string(),
            cases,
            passed: true,
            detail: None,
        }
    }

    fn fail(name: &str, cases: u64, detail: String) -> Self {
        CheckOutcome {
            name: name.to_string(),
            cases,
            passed: false,
            detail: Some(detail),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "cases": self.cases,
            "passed": self.passed,
            "detail": self.detail,
        })
    }
}

/// Run `body` over instances until it reports a failure.
fn sweep<I, F>(name: &str, instances: I, mut body: F) -> CheckOutcome
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Result<(), String>,
{
    let mut cases = 0u64;
    for inst in instances {
        cases += 1;
        if let Err(detail) = body(inst) {
            return CheckOutcome::fail(name, cases, detail);
        }
    }
    CheckOutcome::pass(name, cases)
}

/// All multiplicity vectors over `k` colors with `m` total roots, each as
/// a canonical color sequence.
fn all_root_seqs(k: usize, max_m: u64) -> Vec<ColorSeq> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        for mults in compositions(k, m, WeightMode::Exact) {
            out.push(ColorSeq::from_multiplicities(mults.parts()).unwrap());
        }
    }
    out
}

/// Composition stream length against `C(n+k-1, k-1)`.
pub fn check_composition_counts(max_k: usize, max_n: u64) -> CheckOutcome {
    sweep(
        "composition-counts",
        (1..=max_k).flat_map(|k| (0..=max_n).map(move |n| (k, n))),
        |(k, n)| {
            let got = Count::from(compositions(k, n, WeightMode::Exact).count());
            let want = crate::combinatorics::binomial((n + k as u64 - 1) as i64, (k - 1) as i64);
            if got == want {
                Ok(())
            } else {
                Err(format!("k={k} n={n}: stream length {got} != {want}"))
            }
        },
    )
}

/// Fuss-Catalan closed form against the convolution recurrence
/// `A_n(p,1) = sum over p-part compositions of n-1 of products`.
pub fn check_fuss_recurrence(max_p: u64, max_n: u64) -> CheckOutcome {
    sweep(
        "fuss-recurrence",
        (1..=max_p).flat_map(|p| (0..=max_n).map(move |n| (p, n))),
        |(p, n)| {
            let want = if n == 0 {
                Count::from(1u32)
            } else {
                let mut total = Count::zero();
                for lam in compositions(p as usize, n - 1, WeightMode::Exact) {
                    let mut prod = Count::from(1u32);
                    for &v in lam.parts() {
                        prod *= fuss_catalan(v, p, 1).unwrap();
                    }
                    total += prod;
                }
                total
            };
            let got = fuss_catalan(n, p, 1).unwrap();
            if got == want {
                Ok(())
            } else {
                Err(format!(
                    "p={p} n={n}: closed form {got} != recurrence {want}"
                ))
            }
        },
    )
}

/// Truncated product of power series.
fn series_mul(a: &[Count], b: &[Count], len: usize) -> Vec<Count> {
    let mut out = vec![Count::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `B_{p,r} = B_{p,1}^r` coefficientwise, via truncated series powering.
pub fn check_series_power(max_p: u64, max_r: u64, terms: usize) -> CheckOutcome {
    sweep(
        "fuss-series-power",
        (0..=max_p).flat_map(|p| (1..=max_r).map(move |r| (p, r))),
        |(p, r)| {
            let base = fuss_catalan_series(p, 1, terms).unwrap();
            let mut power = vec![Count::zero(); terms];
            power[0] = Count::from(1u32);
            for _ in 0..r {
                power = series_mul(&power, &base, terms);
            }
            let got = fuss_catalan_series(p, r, terms).unwrap();
            if got == power {
                Ok(())
            } else {
                Err(format!("p={p} r={r}: series power mismatch"))
            }
        },
    )
}

/// Orbit sizes over partitions sum to the number of compositions.
pub fn check_orbit_sums(max_k: usize, max_n: u64) -> CheckOutcome {
    sweep(
        "orbit-sums",
        (1..=max_k).flat_map(|k| (0..=max_n).map(move |n| (k, n))),
        |(k, n)| {
            let sum: Count = partitions(k, n).iter().map(|p| p.orbit_size()).sum();
            let want = Count::from(compositions(k, n, WeightMode::Exact).count());
            if sum == want {
                Ok(())
            } else {
                Err(format!("k={k} n={n}: orbit sum {sum} != {want}"))
            }
        },
    )
}

/// `P_k` is homogeneous of degree k.
pub fn check_pk_homogeneous(max_k: usize) -> CheckOutcome {
    sweep("pk-homogeneous", 1..=max_k, |k| {
        if build_pk(k).is_homogeneous(k as u32) {
            Ok(())
        } else {
            Err(format!("P_{k} is not homogeneous of degree {k}"))
        }
    })
}

/// The subset-sum evaluator against the expanded polynomial at
/// pseudorandom integer points.
pub fn check_pk_eval_agreement(ks: &[usize], points: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = 0u64;
    for &k in ks {
        let expanded = build_pk(k);
        for _ in 0..points {
            cases += 1;
            let point: Vec<num_bigint::BigInt> = (0..2 * k)
                .map(|_| num_bigint::BigInt::from(rand::Rng::random_range(&mut rng, -20i64..=20)))
                .collect();
            let direct = eval_pk(&point[..k], &point[k..]);
            let symbolic = expanded.eval(&point);
            if direct != symbolic {
                return CheckOutcome::fail(
                    "pk-eval-agreement",
                    cases,
                    format!("k={k} point {point:?}: direct {direct} != symbolic {symbolic}"),
                );
            }
        }
    }
    CheckOutcome::pass("pk-eval-agreement", cases)
}

/// Evaluation-level symmetry of `P_k` under sampled color permutations.
pub fn check_pk_eval_symmetry(ks: &[usize], samples: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = 0u64;
    for &k in ks {
        for _ in 0..samples {
            cases += 1;
            let xs: Vec<i64> = (0..k)
                .map(|_| rand::Rng::random_range(&mut rng, -15i64..=15))
                .collect();
            let ys: Vec<i64> = (0..k)
                .map(|_| rand::Rng::random_range(&mut rng, -15i64..=15))
                .collect();
            let mut sigma: Vec<usize> = (0..k).collect();
            sigma.shuffle(&mut rng);
            let pxs: Vec<i64> = sigma.iter().map(|&i| xs[i]).collect();
            let pys: Vec<i64> = sigma.iter().map(|&i| ys[i]).collect();
            let base = crate::keypoly::eval_pk_ints(&xs, &ys);
            let perm = crate::keypoly::eval_pk_ints(&pxs, &pys);
            if base != perm {
                return CheckOutcome::fail(
                    "pk-eval-symmetry",
                    cases,
                    format!("k={k} sigma={sigma:?}: {base} != {perm}"),
                );
            }
        }
    }
    CheckOutcome::pass("pk-eval-symmetry", cases)
}

/// One `P_k` identity over a range of k.
pub fn check_pk_identity(ks: &[usize], which: PkIdentity) -> CheckOutcome {
    let name = match which {
        PkIdentity::YZero => "pk-identity-i",
        PkIdentity::TwoSupport => "pk-identity-ii",
        PkIdentity::Symmetry => "pk-identity-iii",
        PkIdentity::Shift => "pk-identity-iv",
    };
    sweep(name, ks.iter().copied(), |k| {
        if verify_pk_identity(k, which) {
            Ok(())
        } else {
            Err(format!("identity fails symbolically at k={k}"))
        }
    })
}

/// Oracle equivalence: the memoized enumeration count against the closed
/// form, over every character of weight at most `max_n` and every root
/// multiplicity vector with at most `max_m` roots.
pub fn check_oracle_equivalence(k: usize, max_n: u64, max_m: u64) -> CheckOutcome {
    let mut counter = BruteCounter::new();
    let roots = all_root_seqs(k, max_m);
    sweep(
        "oracle-equivalence",
        compositions(k, max_n, WeightMode::AtMost)
            .flat_map(|lam| roots.clone().into_iter().map(move |r| (lam.clone(), r))),
        |(lambda, roots)| {
            let brute = counter.count_forests(&lambda, &roots).unwrap();
            let formula = count_forests(&lambda, &roots).unwrap();
            if brute == formula {
                Ok(())
            } else {
                Err(format!(
                    "lambda={lambda} roots={roots}: oracle {brute} != formula {formula}"
                ))
            }
        },
    )
}

/// The last-root recurrence: with the last root colored k and the
/// feasibility criterion satisfied,
/// `f(lambda, c) = sum over subsets S of [1,k-1] of f(lambda - e_k, c(S))`.
pub fn check_forest_recurrence(k: usize, max_n: u64) -> CheckOutcome {
    let other_colors: Vec<usize> = (1..k).collect();
    let roots = all_root_seqs(k, 3);
    sweep(
        "forest-recurrence",
        compositions(k, max_n, WeightMode::AtMost)
            .flat_map(|lam| roots.clone().into_iter().map(move |r| (lam.clone(), r))),
        |(lambda, base)| {
            // append a k-colored last root
            let mut entries = base.entries().to_vec();
            entries.push(k);
            let cseq = ColorSeq::new(k, entries).unwrap();
            if !feasible(&lambda, &cseq).unwrap() {
                return Ok(());
            }
            let Some(reduced) = lambda.minus_unit(k) else {
                return Ok(());
            };
            let lhs = count_forests(&lambda, &cseq).unwrap();
            let mut rhs = Count::zero();
            for mask in 0u32..(1 << other_colors.len()) {
                let subset: Vec<usize> = other_colors
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &c)| c)
                    .collect();
                let extended = cseq.recurse_with(&subset).unwrap();
                rhs += count_forests(&reduced, &extended).unwrap();
            }
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!(
                    "lambda={lambda} roots={cseq}: recurrence {rhs} != direct {lhs}"
                ))
            }
        },
    )
}

/// The root-decomposition convolution for trees: stripping the root
/// splits the count into a convolution over per-color subtree characters
/// (the extended count gives the empty character one class).
pub fn check_tree_recurrence(k: usize, max_n: u64) -> CheckOutcome {
    fn ext(lambda: &Composition, c: usize) -> Count {
        if lambda.is_zero() {
            Count::from(1u32)
        } else {
            count_trees(lambda, c).unwrap()
        }
    }
    fn conv(rem: &Composition, colors: &[usize]) -> Count {
        match colors {
            [] => {
                if rem.is_zero() {
                    Count::from(1u32)
                } else {
                    Count::zero()
                }
            }
            [c, rest @ ..] => {
                let mut total = Count::zero();
                for nu in compositions(rem.k(), rem.total(), WeightMode::AtMost) {
                    if let Some(left) = rem.checked_sub(&nu) {
                        let f = ext(&nu, *c);
                        if !f.is_zero() {
                            total += f * conv(&left, rest);
                        }
                    }
                }
                total
            }
        }
    }
    sweep(
        "tree-recurrence",
        compositions(k, max_n, WeightMode::AtMost)
            .flat_map(|lam| (1..=k).map(move |c| (lam.clone(), c))),
        |(lambda, c)| {
            let lhs = ext(&lambda, c);
            let rhs = if lambda.is_zero() {
                Count::from(1u32)
            } else if lambda.part(c) == 0 {
                Count::zero()
            } else {
                let rem = lambda.minus_unit(c).unwrap();
                let others: Vec<usize> = (1..=k).filter(|&i| i != c).collect();
                conv(&rem, &others)
            };
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!(
                    "lambda={lambda} c={c}: convolution {rhs} != formula {lhs}"
                ))
            }
        },
    )
}

/// Single-root forests are trees: `t(lambda, c) = f(lambda, (c))`.
pub fn check_tree_forest_bridge(k: usize, max_n: u64) -> CheckOutcome {
    sweep(
        "tree-forest-bridge",
        compositions(k, max_n, WeightMode::AtMost)
            .flat_map(|lam| (1..=k).map(move |c| (lam.clone(), c))),
        |(lambda, c)| {
            let trees = count_trees(&lambda, c).unwrap();
            let forests = count_forests(&lambda, &ColorSeq::new(k, vec![c]).unwrap()).unwrap();
            if trees == forests {
                Ok(())
            } else {
                Err(format!("lambda={lambda} c={c}: {trees} != {forests}"))
            }
        },
    )
}

/// Counts depend only on root color multiplicities, not their order.
pub fn check_root_order_invariance(k: usize, max_n: u64, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sweep(
        "root-order-invariance",
        compositions(k, max_n, WeightMode::AtMost).flat_map(|lam| {
            all_root_seqs(k, 3)
                .into_iter()
                .map(move |r| (lam.clone(), r))
        }),
        |(lambda, base)| {
            let mut entries = base.entries().to_vec();
            entries.shuffle(&mut rng);
            let shuffled = ColorSeq::new(k, entries).unwrap();
            let a = count_forests(&lambda, &base).unwrap();
            let b = count_forests(&lambda, &shuffled).unwrap();
            if a == b {
                Ok(())
            } else {
                Err(format!(
                    "lambda={lambda}: {base} gives {a} but {shuffled} gives {b}"
                ))
            }
        },
    )
}

/// Counts are equivariant under simultaneous permutation of the colors of
/// the character and the root sequence.
pub fn check_color_permutation(k: usize, max_n: u64, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sweep(
        "color-permutation",
        compositions(k, max_n, WeightMode::AtMost).flat_map(|lam| {
            all_root_seqs(k, 2)
                .into_iter()
                .map(move |r| (lam.clone(), r))
        }),
        |(lambda, roots)| {
            let mut sigma: Vec<usize> = (0..k).collect();
            sigma.shuffle(&mut rng);
            // lambda' = sigma . lambda places lambda_i at slot sigma(i)
            let mut inverse = vec![0usize; k];
            for (i, &s) in sigma.iter().enumerate() {
                inverse[s] = i;
            }
            let plam = lambda.permuted(&inverse);
            let proots = roots.permuted(&sigma);
            let a = count_forests(&lambda, &roots).unwrap();
            let b = count_forests(&plam, &proots).unwrap();
            if a == b {
                Ok(())
            } else {
                Err(format!(
                    "lambda={lambda} roots={roots} sigma={sigma:?}: {a} != {b}"
                ))
            }
        },
    )
}

/// Infeasible inputs count zero.
pub fn check_infeasibility(k: usize, max_n: u64, max_m: u64) -> CheckOutcome {
    sweep(
        "infeasibility",
        compositions(k, max_n, WeightMode::AtMost).flat_map(|lam| {
            all_root_seqs(k, max_m)
                .into_iter()
                .map(move |r| (lam.clone(), r))
        }),
        |(lambda, roots)| {
            if feasible(&lambda, &roots).unwrap() {
                return Ok(());
            }
            let f = count_forests(&lambda, &roots).unwrap();
            if f.is_zero() {
                Ok(())
            } else {
                Err(format!(
                    "lambda={lambda} roots={roots} infeasible but counts {f}"
                ))
            }
        },
    )
}

/// `A_n(p,1)` decomposes as the sum of `xi_n` over its support.
pub fn check_xi_sum(max_p: usize, max_n: u64) -> CheckOutcome {
    sweep(
        "xi-distribution",
        (1..=max_p).flat_map(|p| (1..=max_n).map(move |n| (p, n))),
        |(p, n)| {
            let total: Count = compositions(p, n, WeightMode::LessThan)
                .map(|nu| crate::counting::xi(n, &nu).unwrap())
                .sum();
            let want = fuss_catalan(n, p as u64, 1).unwrap();
            if total == want {
                Ok(())
            } else {
                Err(format!("p={p} n={n}: xi sum {total} != {want}"))
            }
        },
    )
}

/// `A_n(p, p*l)` decomposes as the sum of `alpha_n(rho, .)` for every
/// (p+1)-part partition `rho` of `l`; both alpha routes must agree.
pub fn check_alpha_sum(max_ell: u64, max_n: u64) -> CheckOutcome {
    sweep(
        "alpha-distribution",
        (1..=max_ell).flat_map(|ell| (0..=max_n).map(move |n| (ell, n))),
        |(ell, n)| {
            for rho in partitions(3, ell) {
                let mut total = Count::zero();
                for mu in compositions(2, n, WeightMode::AtMost) {
                    let via_forests = alpha(n, &rho, &mu).unwrap();
                    let via_formula = alpha_formula(n, &rho, &mu).unwrap();
                    if via_forests != via_formula {
                        return Err(format!(
                            "n={n} rho={rho} mu={mu}: {via_forests} != {via_formula}"
                        ));
                    }
                    total += via_forests;
                }
                let want = fuss_catalan(n, 2, 2 * ell).unwrap();
                if total != want {
                    return Err(format!("n={n} rho={rho}: alpha sum {total} != {want}"));
                }
            }
            Ok(())
        },
    )
}

/// `sum over characters of weight n of t(lambda, c) = A_n(k-1, 1)`.
pub fn check_tree_totals(max_k: usize, max_n: u64) -> CheckOutcome {
    sweep(
        "tree-totals",
        (2..=max_k).flat_map(|k| (1..=max_n).map(move |n| (k, n))),
        |(k, n)| {
            let total: Count = compositions(k, n, WeightMode::Exact)
                .map(|lam| count_trees(&lam, k).unwrap())
                .sum();
            let want = fuss_catalan(n, k as u64 - 1, 1).unwrap();
            if total == want {
                Ok(())
            } else {
                Err(format!("k={k} n={n}: tree total {total} != {want}"))
            }
        },
    )
}

/// The closed-form total forest count against the character-by-character
/// sum.
pub fn check_forest_totals(max_k: usize, max_n: u64, max_m: u64) -> CheckOutcome {
    sweep(
        "forest-totals",
        (2..=max_k)
            .flat_map(move |k| (1..=max_n).map(move |n| (k, n)))
            .flat_map(move |(k, n)| (1..=max_m.min(n)).map(move |m| (k, n, m))),
        |(k, n, m)| {
            let roots = ColorSeq::new(k, (0..m).map(|j| (j as usize % k) + 1).collect()).unwrap();
            let total: Count = compositions(k, n, WeightMode::Exact)
                .map(|lam| count_forests(&lam, &roots).unwrap())
                .sum();
            let want = count_forests_total(n, k as u64, m).unwrap();
            if total == want {
                Ok(())
            } else {
                Err(format!(
                    "k={k} n={n} m={m}: sum {total} != closed form {want}"
                ))
            }
        },
    )
}

/// Every enumerated forest is canonical, matches the requested character
/// and roots, and appears exactly once; the stream length equals both
/// counting routes.
pub fn check_stream_validity(k: usize, max_n: u64, max_m: u64) -> CheckOutcome {
    let mut counter = BruteCounter::new();
    sweep(
        "stream-validity",
        compositions(k, max_n, WeightMode::AtMost).flat_map(|lam| {
            all_root_seqs(k, max_m)
                .into_iter()
                .map(move |r| (lam.clone(), r))
        }),
        |(lambda, roots)| {
            let stream = enumerate_forests(&lambda, &roots).unwrap();
            let mut texts = std::collections::BTreeSet::new();
            for forest in &stream {
                if forest.character() != lambda {
                    return Err(format!(
                        "lambda={lambda} roots={roots}: streamed character {}",
                        forest.character()
                    ));
                }
                if forest.root_colors() != roots {
                    return Err(format!(
                        "lambda={lambda} roots={roots}: streamed roots {}",
                        forest.root_colors()
                    ));
                }
                if !texts.insert(forest.canonical_text()) {
                    return Err(format!(
                        "lambda={lambda} roots={roots}: duplicate {}",
                        forest.canonical_text()
                    ));
                }
            }
            let brute = counter.count_forests(&lambda, &roots).unwrap();
            if Count::from(stream.len()) != brute {
                return Err(format!(
                    "lambda={lambda} roots={roots}: stream {} != memoized {brute}",
                    stream.len()
                ));
            }
            Ok(())
        },
    )
}

/// Last-root deletion and attachment are mutually inverse on every
/// enumerated forest, and grouping deletions by emitted color subset
/// reproduces the recurrence summands.
pub fn check_theta_roundtrip(k: usize, max_n: u64) -> CheckOutcome {
    sweep(
        "theta-roundtrip",
        compositions(k, max_n, WeightMode::AtMost).flat_map(|lam| {
            all_root_seqs(k, 3)
                .into_iter()
                .filter(|r| !r.is_empty())
                .map(move |r| (lam.clone(), r))
        }),
        |(lambda, roots)| {
            let last_color = *roots.entries().last().unwrap();
            let mut by_subset: std::collections::BTreeMap<Vec<usize>, u64> = Default::default();
            for forest in enumerate_forests(&lambda, &roots).unwrap() {
                let (reduced, subset) = delete_last_root(&forest).unwrap();
                let back = attach_root(&reduced, &subset, last_color).unwrap();
                if back != forest {
                    return Err(format!(
                        "lambda={lambda} roots={roots}: roundtrip broke {}",
                        forest.canonical_text()
                    ));
                }
                *by_subset.entry(subset).or_default() += 1;
            }
            // each subset bin must match the reduced-forest count
            let Some(reduced_lambda) = lambda.minus_unit(last_color) else {
                return Ok(());
            };
            for (subset, seen) in by_subset {
                let extended = roots.recurse_with(&subset).unwrap();
                let want = count_forests(&reduced_lambda, &extended).unwrap();
                if Count::from(seen) != want {
                    return Err(format!(
                        "lambda={lambda} roots={roots} S={subset:?}: bin {seen} != {want}"
                    ));
                }
            }
            Ok(())
        },
    )
}

/// Triangulation enumeration sizes against Catalan numbers.
pub fn check_triangulation_counts(max_n: usize) -> CheckOutcome {
    sweep("triangulation-counts", 3..=max_n, |n| {
        let got = Count::from(enumerate_triangulations(n).len());
        let want = fuss_catalan(n as u64 - 2, 2, 1).unwrap();
        if got == want {
            Ok(())
        } else {
            Err(format!(
                "n={n}: {got} triangulations != C_{} = {want}",
                n - 2
            ))
        }
    })
}

/// Brute-force census against the closed-form census, cell by cell, plus
/// the Catalan checksum.
pub fn check_census_agreement(max_n: usize) -> CheckOutcome {
    sweep("census-agreement", 3..=max_n, |n| {
        let formula = census(n, false).unwrap();
        let brute = census(n, true).unwrap();
        let (TableLayout::Keyed { entries: fe, .. }, TableLayout::Keyed { entries: be, .. }) =
            (&formula.layout, &brute.layout)
        else {
            return Err("census tables must be keyed".to_string());
        };
        if fe != be {
            return Err(format!("n={n}: census rows differ: {fe:?} vs {be:?}"));
        }
        if formula.cells_sum() != formula.total {
            return Err(format!(
                "n={n}: census sum {} != total {}",
                formula.cells_sum(),
                formula.total
            ));
        }
        Ok(())
    })
}

/// The dual-tree map and its constructive inverse are mutually inverse,
/// the map is injective, and the character bridge holds: a triangulation
/// colored with character `lambda` maps into trees of character
/// `lambda - e_1 - e_2`.
pub fn check_chi_roundtrip(max_n: usize) -> CheckOutcome {
    let mut cases = 0u64;
    for n in 3..=max_n {
        let mut images = std::collections::BTreeSet::new();
        for t in enumerate_triangulations(n) {
            cases += 1;
            let tree = chi(&t);
            if !images.insert(tree.canonical_text()) {
                return CheckOutcome::fail(
                    "chi-roundtrip",
                    cases,
                    format!("n={n}: chi not injective at {}", tree.canonical_text()),
                );
            }
            match chi_inverse(&tree) {
                Ok(back) if back == t => {}
                Ok(back) => {
                    return CheckOutcome::fail(
                        "chi-roundtrip",
                        cases,
                        format!("n={n}: inverse returned {back:?} for {t:?}"),
                    )
                }
                Err(e) => {
                    return CheckOutcome::fail(
                        "chi-roundtrip",
                        cases,
                        format!("n={n}: inverse failed: {e}"),
                    )
                }
            }
            // character bridge
            let coloring = crate::triangulation::proper_three_coloring(&t);
            let lam = coloring.character();
            let expect =
                Composition::new(vec![lam.part(1) - 1, lam.part(2) - 1, lam.part(3)]).unwrap();
            let got = tree.character(3).unwrap();
            if got != expect {
                return CheckOutcome::fail(
                    "chi-roundtrip",
                    cases,
                    format!("n={n}: character bridge {got} != {expect}"),
                );
            }
            if type_of(&t) != lam.sorted() {
                return CheckOutcome::fail("chi-roundtrip", cases, format!("n={n}: type mismatch"));
            }
        }
        // surjectivity: every 3-colored tree with root 3 and n-2 vertices
        // is hit
        let mut tree_total = 0u64;
        for lam in compositions(3, n as u64 - 2, WeightMode::Exact) {
            for tree in enumerate_trees(&lam, 3).unwrap() {
                cases += 1;
                tree_total += 1;
                let t = match chi_inverse(&tree) {
                    Ok(t) => t,
                    Err(e) => {
                        return CheckOutcome::fail(
                            "chi-roundtrip",
                            cases,
                            format!("n={n}: inverse rejected a valid tree: {e}"),
                        )
                    }
                };
                if chi(&t) != tree {
                    return CheckOutcome::fail(
                        "chi-roundtrip",
                        cases,
                        format!("n={n}: chi(inverse(T)) != T for {}", tree.canonical_text()),
                    );
                }
            }
        }
        if Count::from(tree_total) != fuss_catalan(n as u64 - 2, 2, 1).unwrap() {
            return CheckOutcome::fail(
                "chi-roundtrip",
                cases,
                format!("n={n}: tree side has {tree_total} elements"),
            );
        }
    }
    CheckOutcome::pass("chi-roundtrip", cases)
}

/// Depth settings for [`run_all`].
#[derive(Debug, Clone, Copy)]
pub struct Depths {
    pub oracle_k3_n: u64,
    pub oracle_k4_n: u64,
    pub recurrence_n: u64,
    pub poly_kmax: usize,
    pub poly_shift_kmax: usize,
    pub chi_n: usize,
    pub census_n: usize,
    pub seed: u64,
}

impl Depths {
    /// Full verification depths (the acceptance-grade sweep).
    pub fn standard() -> Self {
        Depths {
            oracle_k3_n: 8,
            oracle_k4_n: 6,
            recurrence_n: 7,
            poly_kmax: 5,
            poly_shift_kmax: 4,
            chi_n: 9,
            census_n: 12,
            seed: 0xC0FFEE,
        }
    }

    /// Trimmed depths for time-boxed CI runs.
    pub fn ci() -> Self {
        Depths {
            oracle_k3_n: 7,
            oracle_k4_n: 5,
            recurrence_n: 6,
            poly_kmax: 4,
            poly_shift_kmax: 3,
            chi_n: 8,
            census_n: 10,
            seed: 0xC0FFEE,
        }
    }
}

/// Run every verification sweep at the given depths.
pub fn run_all(d: &Depths) -> Vec<CheckOutcome> {
    let poly_ks: Vec<usize> = (2..=d.poly_kmax).collect();
    let shift_ks: Vec<usize> = (2..=d.poly_shift_kmax).collect();
    vec![
        check_composition_counts(4, 12),
        check_fuss_recurrence(3, 10),
        check_series_power(3, 4, 12),
        check_orbit_sums(4, 10),
        check_pk_homogeneous(6),
        check_pk_eval_agreement(&poly_ks, 200, d.seed),
        check_pk_eval_symmetry(&poly_ks, 50, d.seed),
        check_pk_identity(&poly_ks, PkIdentity::YZero),
        check_pk_identity(&poly_ks, PkIdentity::TwoSupport),
        check_pk_identity(&poly_ks, PkIdentity::Symmetry),
        check_pk_identity(&shift_ks, PkIdentity::Shift),
        check_oracle_equivalence(3, d.oracle_k3_n, 3),
        check_oracle_equivalence(4, d.oracle_k4_n, 2),
        check_forest_recurrence(3, d.recurrence_n),
        check_tree_recurrence(3, d.recurrence_n),
        check_tree_forest_bridge(3, 8),
        check_tree_forest_bridge(4, 6),
        check_root_order_invariance(3, 6, d.seed),
        check_color_permutation(3, 6, d.seed),
        check_infeasibility(3, 7, 3),
        check_xi_sum(3, 10),
        check_alpha_sum(3, 8),
        check_tree_totals(4, 10),
        check_forest_totals(3, 8, 3),
        check_stream_validity(3, 6, 2),
        check_theta_roundtrip(3, 6),
        check_triangulation_counts(d.census_n.min(10)),
        check_census_agreement(d.census_n),
        check_chi_roundtrip(d.chi_n),
    ]
}

/// Informational report of the `P_k` rewrite in `z = x - y` variables;
/// the minimum coefficient is returned, never asserted (the observation
/// is unproven).
pub fn zy_report(k: usize) -> CheckOutcome {
    let min = crate::keypoly::pk_zy_min_coefficient(k);
    CheckOutcome {
        name: format!("pk-zy-min-coefficient-k{k}"),
        cases: 1,
        passed: true,
        detail: Some(format!("minimum coefficient after z-rewrite: {min}")),
    }
}

/// Helper: verify a single forest's internal consistency; used by the
/// stream checks and exposed for the CLI enumerate path.
pub fn forest_is_canonical(forest: &ColoredForest) -> bool {
    fn node_ok(tree: &crate::enumeration::ColoredTree) -> bool {
        tree.children()
            .iter()
            .all(|(&c, child)| c == child.root_color() && c != tree.root_color() && node_ok(child))
    }
    forest.trees().iter().all(node_ok)
}
