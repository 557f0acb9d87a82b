//! Closed-form counting of injectively k-colored rooted forests and the
//! distributions derived from them.
//!
//! The master count: for a character `lambda` and root color sequence `c`
//! with multiplicities `i_c`, if `|lambda| = lambda_i` for some color `i`
//! the count degenerates to a delta expression; otherwise
//!
//! ```text
//! f = P_k(lambda_1..lambda_k, 1_c..k_c)
//!     * prod_i C(|lambda| - lambda_i, lambda_i - i_c) / (|lambda| - lambda_i)
//! ```
//!
//! with the binomial convention sending infeasible inputs to zero. The
//! degenerate branch is tested first because the product divides by
//! `|lambda| - lambda_i`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial_big, exact_div, to_count, Composition, Count, Partition};
use crate::error::Error;
use crate::keypoly::eval_pk;

/// A root color sequence `c = (c_1, ..., c_m)` over colors `[1, k]`,
/// with its derived multiplicity vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorSeq {
    k: usize,
    entries: Vec<usize>,
}

impl ColorSeq {
    pub fn new(k: usize, entries: Vec<usize>) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::invalid("need at least one color"));
        }
        for &c in &entries {
            if c < 1 || c > k {
                return Err(Error::ColorOutOfRange { color: c, k });
            }
        }
        Ok(ColorSeq { k, entries })
    }

    /// Empty root sequence (the empty forest's roots).
    pub fn empty(k: usize) -> Self {
        ColorSeq {
            k,
            entries: Vec::new(),
        }
    }

    /// The canonical sequence `1^m_1 2^m_2 ... k^m_k` with the given
    /// multiplicities. Counts depend only on multiplicities, so this is a
    /// convenient normal form.
    pub fn from_multiplicities(mults: &[u64]) -> Result<Self, Error> {
        let k = mults.len();
        if k == 0 {
            return Err(Error::invalid("need at least one color"));
        }
        let mut entries = Vec::new();
        for (i, &m) in mults.iter().enumerate() {
            for _ in 0..m {
                entries.push(i + 1);
            }
        }
        Ok(ColorSeq { k, entries })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Multiplicity vector `(1_c, ..., k_c)`.
    pub fn multiplicities(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.k];
        for &c in &self.entries {
            m[c - 1] += 1;
        }
        m
    }

    /// The extended sequence `c(S) = (c_1, .., c_{m-1}, s_1, .., s_{|S|})`:
    /// drop the last root and append the colors of `S` in increasing order.
    /// Used by the last-root recurrence.
    pub fn recurse_with(&self, subset: &[usize]) -> Result<ColorSeq, Error> {
        if self.entries.is_empty() {
            return Err(Error::EmptyForest);
        }
        let mut entries = self.entries[..self.entries.len() - 1].to_vec();
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subset.len() {
            return Err(Error::invalid("subset colors must be distinct"));
        }
        entries.extend_from_slice(&sorted);
        ColorSeq::new(self.k, entries)
    }

    /// Apply a color permutation (`sigma` 0-based: new color of old color
    /// `i+1` is `sigma[i]+1`).
    pub fn permuted(&self, sigma: &[usize]) -> ColorSeq {
        let entries = self.entries.iter().map(|&c| sigma[c - 1] + 1).collect();
        ColorSeq { k: self.k, entries }
    }
}

impl std::fmt::Display for ColorSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn require_same_k(lambda: &Composition, roots: &ColorSeq) -> Result<(), Error> {
    if lambda.k() != roots.k() {
        return Err(Error::ColorCountMismatch {
            expected: lambda.k(),
            got: roots.k(),
        });
    }
    Ok(())
}

/// The necessary feasibility criterion: nonzero counts require
/// `0 <= lambda_i - i_c <= |lambda| - lambda_i` for every color `i`.
pub fn feasible(lambda: &Composition, roots: &ColorSeq) -> Result<bool, Error> {
    require_same_k(lambda, roots)?;
    let n = lambda.total();
    let mults = roots.multiplicities();
    Ok(lambda
        .parts()
        .iter()
        .zip(&mults)
        .all(|(&li, &mi)| mi <= li && li - mi <= n - li))
}

/// Exact number of forest isomorphism classes with character `lambda` and
/// root colors `roots`.
pub fn count_forests(lambda: &Composition, roots: &ColorSeq) -> Result<Count, Error> {
    require_same_k(lambda, roots)?;
    if lambda.k() > 31 {
        // the 2^k subset sum below masks colors into a u32
        return Err(Error::invalid("at most 31 colors are supported"));
    }
    let n = lambda.total();
    let m = roots.len() as u64;
    let mults = roots.multiplicities();

    // Degenerate branch: some color holds every vertex (this includes the
    // empty character). The general product would divide by zero here.
    if let Some(i) = lambda.parts().iter().position(|&p| p == n) {
        let hit = m == n && m == mults[i];
        return Ok(if hit { Count::one() } else { Count::zero() });
    }

    let xs: Vec<BigInt> = lambda.parts().iter().map(|&v| BigInt::from(v)).collect();
    let ys: Vec<BigInt> = mults.iter().map(|&v| BigInt::from(v)).collect();
    let mut num = eval_pk(&xs, &ys);
    let mut den = BigInt::one();
    for (&li, &mi) in lambda.parts().iter().zip(&mults) {
        let gap = (n - li) as i128;
        num *= BigInt::from(binomial_big(gap, li as i128 - mi as i128));
        den *= BigInt::from(gap);
    }
    if num.is_zero() {
        return Ok(Count::zero());
    }
    Ok(to_count(exact_div(num, &den)))
}

/// Exact number of tree isomorphism classes with character `lambda` and
/// root colored `c`, via the simplified single-root formula
///
/// ```text
/// t = |lambda|^(k-2) * C(|lambda| - lambda_c, lambda_c - 1)
///     * prod_{i != c} C(|lambda| - lambda_i, lambda_i) / (|lambda| - lambda_i)
/// ```
///
/// The formula applies for k >= 2; with one color the only tree is the
/// single root, so the count is 1 when `lambda = (1)` and 0 otherwise.
pub fn count_trees(lambda: &Composition, c: usize) -> Result<Count, Error> {
    let k = lambda.k();
    if c < 1 || c > k {
        return Err(Error::ColorOutOfRange { color: c, k });
    }
    let n = lambda.total();
    if lambda.part(c) == 0 {
        return Ok(Count::zero());
    }
    if lambda.parts().contains(&n) {
        // single-color character: only the one-vertex tree survives
        return Ok(if n == 1 { Count::one() } else { Count::zero() });
    }
    // here n > lambda_i for all i, so k >= 2 and every divisor is positive
    let mut num = BigInt::from(n).pow(k as u32 - 2);
    let mut den = BigInt::one();
    for i in 1..=k {
        let li = lambda.part(i) as i128;
        let gap = (n - lambda.part(i)) as i128;
        if i == c {
            num *= BigInt::from(binomial_big(gap, li - 1));
        } else {
            num *= BigInt::from(binomial_big(gap, li));
            den *= BigInt::from(gap);
        }
    }
    if num.is_zero() {
        return Ok(Count::zero());
    }
    Ok(to_count(exact_div(num, &den)))
}

/// Total number of injectively k-colored forests with `n` vertices and a
/// root color sequence of length `m` — independent of which colors the
/// roots actually take: `(m/n) C(kn - n, n - m)`.
pub fn count_forests_total(n: u64, k: u64, m: u64) -> Result<Count, Error> {
    if n == 0 || m == 0 {
        return Err(Error::invalid("total forest count needs n >= 1 and m >= 1"));
    }
    let c = binomial_big((k as i128 - 1) * n as i128, n as i128 - m as i128);
    let num = BigInt::from(c) * BigInt::from(m);
    Ok(to_count(exact_div(num, &BigInt::from(n))))
}

/// The p-parameter distribution of `A_n(p, 1)`:
///
/// ```text
/// xi_n(nu) = n^(p-1) * C(|nu|, n - |nu| - 1)
///            * prod_i C(n - nu_i, nu_i) / (n - nu_i)
/// ```
///
/// for `nu` with `|nu| < n`. Equals the tree count of character
/// `(nu_1, .., nu_p, n - |nu|)` rooted in color `p + 1`.
pub fn xi(n: u64, nu: &Composition) -> Result<Count, Error> {
    if nu.total() >= n {
        return Err(Error::invalid(format!(
            "xi needs |nu| < n, got |nu| = {} and n = {}",
            nu.total(),
            n
        )));
    }
    let p = nu.k();
    let mut num = BigInt::from(n).pow(p as u32 - 1)
        * BigInt::from(binomial_big(
            nu.total() as i128,
            n as i128 - nu.total() as i128 - 1,
        ));
    let mut den = BigInt::one();
    for &v in nu.parts() {
        num *= BigInt::from(binomial_big((n - v) as i128, v as i128));
        den *= BigInt::from(n - v);
    }
    if num.is_zero() {
        return Ok(Count::zero());
    }
    Ok(to_count(exact_div(num, &den)))
}

/// Sum of a row of the `xi_n` table for `p = 2`: all `xi_n((t, h))` with
/// `t + h < n`.
pub fn xi_row_sum(n: u64, h: u64) -> Result<Count, Error> {
    let mut total = Count::zero();
    if h >= n {
        return Ok(total);
    }
    for t in 0..n - h {
        total += xi(n, &Composition::new(vec![t, h]).unwrap())?;
    }
    Ok(total)
}

/// The main antidiagonal of the `xi_n` table for `p = 2`: the values
/// `xi_n((h, D - h))` for `h = 0..D` with `D = floor(n/2)`.
pub fn xi_antidiagonal(n: u64) -> Result<Vec<Count>, Error> {
    let d = n / 2;
    (0..=d)
        .map(|h| xi(n, &Composition::new(vec![h, d - h]).unwrap()))
        .collect()
}

fn validate_alpha_args(n: u64, rho: &Partition, mu: &Composition) -> Result<(), Error> {
    if rho.k() != mu.k() + 1 {
        return Err(Error::ColorCountMismatch {
            expected: mu.k() + 1,
            got: rho.k(),
        });
    }
    if mu.total() > n {
        return Err(Error::invalid(format!(
            "alpha needs |mu| <= n, got |mu| = {} and n = {}",
            mu.total(),
            n
        )));
    }
    Ok(())
}

/// The character `rho + (mu_1, .., mu_p, n - |mu|)` underlying
/// `alpha_n(rho, mu)`, together with its root sequence.
fn alpha_instance(n: u64, rho: &Partition, mu: &Composition) -> (Composition, ColorSeq) {
    let p = mu.k();
    let mut parts: Vec<u64> = Vec::with_capacity(p + 1);
    for i in 1..=p {
        parts.push(rho.part(i) + mu.part(i));
    }
    parts.push(rho.part(p + 1) + n - mu.total());
    let lambda = Composition::new(parts).unwrap();
    let roots = ColorSeq::from_multiplicities(rho.parts()).unwrap();
    (lambda, roots)
}

/// The distribution `alpha_n(rho, mu)` of the Fuss-Catalan number
/// `A_n(p, p*|rho|)`, computed through its forest-count reduction: count
/// forests of character `rho + (mu, n - |mu|)` whose root colors have
/// multiplicity vector `rho`.
pub fn alpha(n: u64, rho: &Partition, mu: &Composition) -> Result<Count, Error> {
    validate_alpha_args(n, rho, mu)?;
    let (lambda, roots) = alpha_instance(n, rho, mu);
    count_forests(&lambda, &roots)
}

/// `alpha_n(rho, mu)` transcribed from its displayed closed form, kept as
/// an independent cross-check of [`alpha`]:
///
/// ```text
/// alpha = P_{p+1}(rho_1 + mu_1, .., rho_p + mu_p, rho_{p+1} + n - |mu|,
///                 rho_1, .., rho_{p+1})
///         * C(l + |mu| - rho_{p+1}, n - |mu|) / (l + |mu| - rho_{p+1})
///         * prod_i C(l + n - rho_i - mu_i, mu_i) / (l + n - rho_i - mu_i)
/// ```
///
/// with `l = |rho|`, degenerating to `delta_{n,0}` when `rho_1 = l` and
/// `mu_1 = n`.
pub fn alpha_formula(n: u64, rho: &Partition, mu: &Composition) -> Result<Count, Error> {
    validate_alpha_args(n, rho, mu)?;
    let p = mu.k();
    let ell = rho.total();
    if rho.part(1) == ell && mu.part(1) == n {
        return Ok(if n == 0 { Count::one() } else { Count::zero() });
    }
    // A vanishing divisor outside the guard happens only for l = 0 with the
    // weight concentrated in one slot; the count there is 0 (no roots, a
    // nonempty character).
    let last_gap = ell as i128 + mu.total() as i128 - rho.part(p + 1) as i128;
    let gaps: Vec<i128> = (1..=p)
        .map(|i| ell as i128 + n as i128 - rho.part(i) as i128 - mu.part(i) as i128)
        .collect();
    if last_gap == 0 || gaps.contains(&0) {
        return Ok(Count::zero());
    }

    let mut xs: Vec<BigInt> = Vec::with_capacity(p + 1);
    for i in 1..=p {
        xs.push(BigInt::from(rho.part(i) + mu.part(i)));
    }
    xs.push(BigInt::from(rho.part(p + 1) + n - mu.total()));
    let ys: Vec<BigInt> = rho.parts().iter().map(|&v| BigInt::from(v)).collect();

    let mut num =
        eval_pk(&xs, &ys) * BigInt::from(binomial_big(last_gap, n as i128 - mu.total() as i128));
    let mut den = BigInt::from(last_gap);
    for (i, &gap) in gaps.iter().enumerate() {
        num *= BigInt::from(binomial_big(gap, mu.part(i + 1) as i128));
        den *= BigInt::from(gap);
    }
    if num.is_zero() {
        return Ok(Count::zero());
    }
    Ok(to_count(exact_div(num, &den)))
}

/// Number of triangulations of the convex n-gon of type `lambda` (a
/// 3-part partition of `n`):
///
/// ```text
/// o(lambda) * n * (n-2) / (3 * prod_i (n - lambda_i - 1))
///   * prod_i C(n - lambda_i - 1, lambda_i - 1)
/// ```
///
/// and 0 whenever `lambda_3 = 0` (every triangle uses all three colors).
pub fn count_triangulations_by_type(n: u64, lambda: &Partition) -> Result<Count, Error> {
    if lambda.k() != 3 {
        return Err(Error::ColorCountMismatch {
            expected: 3,
            got: lambda.k(),
        });
    }
    if lambda.total() != n {
        return Err(Error::invalid(format!(
            "type {lambda} does not sum to n = {n}"
        )));
    }
    if n < 3 {
        return Err(Error::invalid("triangulations need n >= 3"));
    }
    if lambda.part(3) == 0 {
        return Ok(Count::zero());
    }
    let mut num = BigInt::from(lambda.orbit_size()) * BigInt::from(n) * BigInt::from(n - 2);
    let mut den = BigInt::from(3);
    for i in 1..=3 {
        let li = lambda.part(i);
        num *= BigInt::from(binomial_big((n - li - 1) as i128, li as i128 - 1));
        den *= BigInt::from(n - li - 1);
    }
    if num.is_zero() {
        return Ok(Count::zero());
    }
    Ok(to_count(exact_div(num, &den)))
}
