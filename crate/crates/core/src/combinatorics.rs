//! Exact integer primitives: big-integer binomials, composition and
//! partition generation, orbit sizes, and Fuss-Catalan numbers.
//!
//! Everything here is pure and exact; divisions that are mathematically
//! exact are asserted to leave no remainder.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact nonnegative count. All enumeration results in this crate are
/// `Count`s; nothing is ever rounded.
pub type Count = BigUint;

/// Divide `num` by `den`, panicking if the division is not exact.
///
/// The closed-form counting formulas all contain divisions that are exact
/// for valid inputs; a remainder means a formula was transcribed wrong,
/// so we fail hard rather than return a silently truncated value.
pub(crate) fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division: {} % {} != 0", q, den);
    q
}

/// Convert a signed exact result to a `Count`, panicking if negative.
pub(crate) fn to_count(v: BigInt) -> Count {
    assert!(
        !v.is_negative(),
        "count formula produced a negative value: {v}"
    );
    v.to_biguint().unwrap()
}

/// Binomial coefficient `C(a, b)` with the convention that out-of-range
/// arguments give 0: nonzero only for `0 <= b <= a`.
///
/// The guard cases of the counting formulas (infeasible color sequences,
/// empty ranges) all fall out to zero through this convention.
pub fn binomial(a: i64, b: i64) -> Count {
    binomial_big(a as i128, b as i128)
}

pub(crate) fn binomial_big(a: i128, b: i128) -> Count {
    if b < 0 || a < 0 || b > a {
        return Count::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut res = Count::one();
    for i in 0..b {
        res = res * Count::from(a - i) / Count::from(i + 1);
    }
    res
}

/// A k-part composition: a vector of k nonnegative integers. The weight
/// `|lambda|` is cached at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
    total: u64,
}

impl Composition {
    /// Build a composition from its parts. `parts` must be nonempty.
    pub fn new(parts: Vec<u64>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::invalid("a composition needs at least one part"));
        }
        let total = parts.iter().sum();
        Ok(Composition { parts, total })
    }

    /// The zero composition with `k` parts.
    pub fn zero(k: usize) -> Self {
        Composition {
            parts: vec![0; k],
            total: 0,
        }
    }

    /// The generator `epsilon_i`: part `i` (1-based) equal to 1, all others 0.
    pub fn unit(k: usize, i: usize) -> Result<Self, Error> {
        if i < 1 || i > k {
            return Err(Error::ColorOutOfRange { color: i, k });
        }
        let mut parts = vec![0; k];
        parts[i - 1] = 1;
        Ok(Composition { parts, total: 1 })
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Part `i`, 1-based.
    pub fn part(&self, i: usize) -> u64 {
        self.parts[i - 1]
    }

    /// The weight `|lambda|`.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_zero(&self) -> bool {
        self.total == 0
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Composition) -> Result<Composition, Error> {
        if self.k() != other.k() {
            return Err(Error::ColorCountMismatch {
                expected: self.k(),
                got: other.k(),
            });
        }
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a + b)
            .collect();
        Composition::new(parts)
    }

    /// Componentwise difference; `None` if any part would go negative.
    pub fn checked_sub(&self, other: &Composition) -> Option<Composition> {
        if self.k() != other.k() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.k());
        for (a, b) in self.parts.iter().zip(&other.parts) {
            parts.push(a.checked_sub(*b)?);
        }
        Some(Composition::new(parts).unwrap())
    }

    /// Subtract 1 from part `i` (1-based); `None` if that part is 0.
    pub fn minus_unit(&self, i: usize) -> Option<Composition> {
        if self.part(i) == 0 {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        Some(Composition {
            parts,
            total: self.total - 1,
        })
    }

    /// Apply a permutation of `[1,k]`: part `i` of the result is part
    /// `sigma[i]` of `self` (`sigma` is 0-based as a slice).
    pub fn permuted(&self, sigma: &[usize]) -> Composition {
        let parts: Vec<u64> = sigma.iter().map(|&j| self.parts[j]).collect();
        Composition {
            parts,
            total: self.total,
        }
    }

    /// Sort parts weakly decreasing, forgetting the order.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(Composition {
            parts,
            total: self.total,
        })
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A composition with weakly decreasing parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition(Composition::new(parts)?))
    }

    pub fn composition(&self) -> &Composition {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.k()
    }

    pub fn parts(&self) -> &[u64] {
        self.0.parts()
    }

    pub fn part(&self, i: usize) -> u64 {
        self.0.part(i)
    }

    pub fn total(&self) -> u64 {
        self.0.total()
    }

    /// Orbit size `o(lambda)`: the number of distinct rearrangements of the
    /// parts under coordinate permutation, `k! / prod(mult_v!)`.
    pub fn orbit_size(&self) -> Count {
        let k = self.k() as u64;
        let mut num = Count::one();
        for i in 1..=k {
            num *= Count::from(i);
        }
        let mut den = Count::one();
        let mut run = 1u64;
        for w in self.parts().windows(2) {
            if w[0] == w[1] {
                run += 1;
                den *= Count::from(run);
            } else {
                run = 1;
            }
        }
        let (q, r) = num.div_rem(&den);
        debug_assert!(r.is_zero());
        let _ = r;
        q
    }

    /// All distinct rearrangements of the parts, in descending
    /// lexicographic order. The number of results is `orbit_size()`.
    pub fn orbit(&self) -> Vec<Composition> {
        let mut current = self.parts().to_vec();
        let mut out = Vec::new();
        loop {
            out.push(Composition::new(current.clone()).unwrap());
            // next permutation in descending lex order
            let Some(i) = (0..current.len() - 1)
                .rev()
                .find(|&i| current[i] > current[i + 1])
            else {
                break;
            };
            let j = (i + 1..current.len())
                .rev()
                .find(|&j| current[j] < current[i])
                .unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Which weight set a composition stream ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    /// `|lambda| = n`
    Exact,
    /// `|lambda| < n`
    LessThan,
    /// `|lambda| <= n`
    AtMost,
}

/// Lazy stream of all k-part compositions with the requested weight,
/// in lexicographic order on part vectors.
///
/// In `Exact` mode the stream has length `C(n+k-1, k-1)`.
pub fn compositions(k: usize, n: u64, mode: WeightMode) -> Compositions {
    assert!(k >= 1, "compositions need k >= 1");
    let bound = match mode {
        WeightMode::Exact => Some(n),
        WeightMode::AtMost => None,
        WeightMode::LessThan => {
            if n == 0 {
                // empty stream
                return Compositions {
                    k,
                    n: 0,
                    exact: false,
                    state: None,
                };
            }
            None
        }
    };
    let max = match mode {
        WeightMode::Exact => n,
        WeightMode::AtMost => n,
        WeightMode::LessThan => n - 1,
    };
    let mut first = vec![0; k];
    if let Some(w) = bound {
        first[k - 1] = w;
    }
    Compositions {
        k,
        n: max,
        exact: matches!(mode, WeightMode::Exact),
        state: Some(first),
    }
}

/// Iterator produced by [`compositions`].
#[derive(Debug, Clone)]
pub struct Compositions {
    k: usize,
    n: u64,
    exact: bool,
    state: Option<Vec<u64>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.state.take()?;
        let item = Composition::new(current.clone()).unwrap();

        // Advance to the lexicographic successor within the weight set.
        let mut next = current;
        if self.exact {
            // Move one unit from the tail to the rightmost possible slot,
            // dumping the remaining tail weight into the last part.
            let tail_pos = (0..self.k - 1).rev().find(|&j| {
                let tail: u64 = next[j + 1..].iter().sum();
                tail > 0
            });
            if let Some(j) = tail_pos {
                let tail: u64 = next[j + 1..].iter().sum();
                next[j] += 1;
                for p in next[j + 1..].iter_mut() {
                    *p = 0;
                }
                next[self.k - 1] = tail - 1;
                self.state = Some(next);
            }
        } else {
            let weight: u64 = next.iter().sum();
            if weight < self.n {
                next[self.k - 1] += 1;
                self.state = Some(next);
            } else if let Some(j) = (0..self.k - 1).rev().find(|&j| {
                let tail: u64 = next[j + 1..].iter().sum();
                tail > 0
            }) {
                next[j] += 1;
                for p in next[j + 1..].iter_mut() {
                    *p = 0;
                }
                self.state = Some(next);
            }
        }
        Some(item)
    }
}

/// All k-part partitions of `n` (weakly decreasing parts), in descending
/// lexicographic order. This is the row order of the census tables.
pub fn partitions(k: usize, n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = vec![0u64; k];
    descend(&mut out, &mut parts, 0, n, n, k);
    out
}

fn descend(
    out: &mut Vec<Partition>,
    parts: &mut Vec<u64>,
    idx: usize,
    left: u64,
    cap: u64,
    k: usize,
) {
    if idx == k {
        if left == 0 {
            out.push(Partition::new(parts.clone()).unwrap());
        }
        return;
    }
    let hi = left.min(cap);
    // largest first so the output is descending lexicographic
    for v in (0..=hi).rev() {
        // remaining parts are each at most v, so prune when v*(k-idx-1) < left-v
        if v.saturating_mul((k - idx - 1) as u64) < left - v {
            break;
        }
        parts[idx] = v;
        descend(out, parts, idx + 1, left - v, v, k);
    }
    parts[idx] = 0;
}

/// Fuss-Catalan (Raney) number `A_n(p, r) = (r / (np + r)) * C(np + r, n)`.
///
/// The division is exact in the integers; this is asserted. `r = 0` is
/// rejected.
pub fn fuss_catalan(n: u64, p: u64, r: u64) -> Result<Count, Error> {
    if r == 0 {
        return Err(Error::ZeroRaneyParameter);
    }
    let np_r = (n as i128) * (p as i128) + r as i128;
    let num = BigInt::from(binomial_big(np_r, n as i128)) * BigInt::from(r);
    Ok(to_count(exact_div(num, &BigInt::from(np_r))))
}

/// The first `len` coefficients `[A_0(p,r), ..., A_{len-1}(p,r)]` of the
/// generating series `B_{p,r}`.
pub fn fuss_catalan_series(p: u64, r: u64, len: usize) -> Result<Vec<Count>, Error> {
    (0..len as u64).map(|n| fuss_catalan(n, p, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), Count::from(10u32));
        assert_eq!(binomial(4, -1), Count::zero());
        assert_eq!(binomial(3, 5), Count::zero());
        assert_eq!(binomial(-2, 0), Count::zero());
        assert_eq!(binomial(0, 0), Count::one());
    }

    #[test]
    fn binomial_matches_factorial_oracle() {
        // C(10, 3) = 10! / (3! * 7!)
        let fact = |n: u64| -> Count {
            let mut r = Count::one();
            for i in 1..=n {
                r *= Count::from(i);
            }
            r
        };
        let expected = fact(10) / (fact(3) * fact(7));
        assert_eq!(expected, Count::from(120u32));
        assert_eq!(binomial(10, 3), expected);
    }

    #[test]
    fn compositions_exact_tiny() {
        let got: Vec<_> = compositions(2, 2, WeightMode::Exact).collect();
        assert_eq!(got, vec![comp(&[0, 2]), comp(&[1, 1]), comp(&[2, 0])]);

        let got: Vec<_> = compositions(3, 0, WeightMode::Exact).collect();
        assert_eq!(got, vec![comp(&[0, 0, 0])]);
    }

    #[test]
    fn compositions_less_than_count() {
        // |Lambda_2(<3)| = 1 + 2 + 3
        let got: Vec<_> = compositions(2, 3, WeightMode::LessThan).collect();
        assert_eq!(got.len(), 6);
        // globally lexicographic and duplicate-free
        for w in got.windows(2) {
            assert!(w[0].parts() < w[1].parts());
        }
        assert_eq!(compositions(2, 0, WeightMode::LessThan).count(), 0);
        assert_eq!(compositions(3, 0, WeightMode::AtMost).count(), 1);
    }

    #[test]
    fn compositions_exact_is_lex_and_counted_by_binomial() {
        for k in 1..=4usize {
            for n in 0..=12u64 {
                let all: Vec<_> = compositions(k, n, WeightMode::Exact).collect();
                let expected = binomial((n + k as u64 - 1) as i64, (k - 1) as i64);
                assert_eq!(Count::from(all.len()), expected, "k={k} n={n}");
                for w in all.windows(2) {
                    assert!(w[0].parts() < w[1].parts());
                }
                for c in &all {
                    assert_eq!(c.total(), n);
                }
            }
        }
    }

    #[test]
    fn orbit_sizes_from_census_cases() {
        assert_eq!(
            Partition::new(vec![3, 2, 1]).unwrap().orbit_size(),
            Count::from(6u32)
        );
        assert_eq!(
            Partition::new(vec![2, 2, 2]).unwrap().orbit_size(),
            Count::from(1u32)
        );
        assert_eq!(
            Partition::new(vec![4, 4, 1]).unwrap().orbit_size(),
            Count::from(3u32)
        );
    }

    #[test]
    fn orbit_members_are_distinct_and_counted() {
        let p = Partition::new(vec![4, 4, 1]).unwrap();
        let orbit = p.orbit();
        assert_eq!(Count::from(orbit.len()), p.orbit_size());
        let set: std::collections::BTreeSet<_> = orbit.iter().collect();
        assert_eq!(set.len(), orbit.len());
    }

    #[test]
    fn orbit_sizes_sum_to_composition_count() {
        for k in 1..=4usize {
            for n in 0..=10u64 {
                let sum: Count = partitions(k, n).iter().map(|p| p.orbit_size()).sum();
                let all = Count::from(compositions(k, n, WeightMode::Exact).count());
                assert_eq!(sum, all, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn partition_rejects_increasing_parts() {
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::NotWeaklyDecreasing(_))
        ));
    }

    #[test]
    fn fuss_catalan_values() {
        assert_eq!(fuss_catalan(4, 2, 1).unwrap(), Count::from(14u32));
        assert_eq!(fuss_catalan(6, 2, 6).unwrap(), Count::from(6188u32));
        for p in 0..4 {
            for r in 1..4 {
                assert_eq!(fuss_catalan(0, p, r).unwrap(), Count::one());
            }
        }
        assert_eq!(fuss_catalan(3, 2, 0), Err(Error::ZeroRaneyParameter));
    }

    #[test]
    fn catalan_prefix() {
        let catalans = fuss_catalan_series(2, 1, 6).unwrap();
        let expected: Vec<Count> = [1u32, 1, 2, 5, 14, 42].iter().map(|&v| v.into()).collect();
        assert_eq!(catalans, expected);
    }

    #[test]
    fn series_starts_one_one_for_r_one() {
        for p in 0..5 {
            let s = fuss_catalan_series(p, 1, 2).unwrap();
            assert_eq!(s, vec![Count::one(), Count::one()]);
        }
    }
}
