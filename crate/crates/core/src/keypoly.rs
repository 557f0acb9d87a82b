//! The key polynomial `P_k` behind the master forest count, in two
//! interchangeable views:
//!
//! * a symbolic [`SparsePoly`] expansion over `Z[x_1..x_k, y_1..y_k]`,
//!   used to verify the polynomial identities the counting formulas
//!   depend on, and
//! * a direct subset-sum evaluator [`eval_pk`] (2^k terms, no expansion),
//!   used by the counting layer.
//!
//! `P_k` is defined as
//!
//! ```text
//! P_k = sum over S subset of [1,k] of
//!       (-1)^|S| * (x_(S,+) - |S| * X) * X^(k-|S|-1) * prod_{i in S} y_i
//! ```
//!
//! where `X = x_1 + ... + x_k`, the empty sum is 0, the empty product is 1,
//! and the `S = [1,k]` summand is read as `(-1)^k (1-k) y_1 ... y_k`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A multivariate polynomial with exact integer coefficients, stored as a
/// map from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    pub fn zero(num_vars: usize) -> Self {
        SparsePoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = SparsePoly::zero(num_vars);
        p.add_term(vec![0; num_vars], c.into());
        p
    }

    /// The monomial `v_idx` (0-based variable index).
    pub fn var(num_vars: usize, idx: usize) -> Self {
        assert!(idx < num_vars);
        let mut exps = vec![0; num_vars];
        exps[idx] = 1;
        let mut p = SparsePoly::zero(num_vars);
        p.add_term(exps, BigInt::one());
        p
    }

    /// Build a polynomial from `(coefficient, exponents)` pairs.
    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (i64, Vec<u32>)>) -> Self {
        let mut p = SparsePoly::zero(num_vars);
        for (c, e) in terms {
            assert_eq!(e.len(), num_vars, "exponent vector arity mismatch");
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &SparsePoly) -> Result<(), Error> {
        if self.num_vars != other.num_vars {
            return Err(Error::ColorCountMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly, Error> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SparsePoly) -> Result<SparsePoly, Error> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly, Error> {
        self.check_arity(other)?;
        let mut out = SparsePoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> SparsePoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> SparsePoly {
        let c = c.into();
        let mut out = SparsePoly::zero(self.num_vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * &c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut out = SparsePoly::constant(self.num_vars, 1);
        for _ in 0..e {
            out = out.mul(self).unwrap();
        }
        out
    }

    /// Substitute polynomials for variables: variable `i` (0-based) is
    /// replaced by `assignments[&i]`; unmapped variables stay themselves.
    /// Every replacement must have the same arity as `self`.
    pub fn substitute(
        &self,
        assignments: &BTreeMap<usize, SparsePoly>,
    ) -> Result<SparsePoly, Error> {
        for sub in assignments.values() {
            self.check_arity(sub)?;
        }
        let mut out = SparsePoly::zero(self.num_vars);
        for (exps, coeff) in &self.terms {
            let mut term = SparsePoly::constant(self.num_vars, coeff.clone());
            let mut plain = vec![0u32; self.num_vars];
            for (idx, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match assignments.get(&idx) {
                    Some(sub) => term = term.mul(&sub.pow(e))?,
                    None => plain[idx] = e,
                }
            }
            if plain.iter().any(|&e| e > 0) {
                let mut mono = SparsePoly::zero(self.num_vars);
                mono.add_term(plain, BigInt::one());
                term = term.mul(&mono)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Rename variables: variable `i` of the result carries the exponent of
    /// variable `perm[i]` of `self`. `perm` must be a permutation.
    pub fn permute_vars(&self, perm: &[usize]) -> SparsePoly {
        assert_eq!(perm.len(), self.num_vars);
        let mut out = SparsePoly::zero(self.num_vars);
        for (exps, coeff) in &self.terms {
            let new_exps: Vec<u32> = perm.iter().map(|&j| exps[j]).collect();
            out.add_term(new_exps, coeff.clone());
        }
        out
    }

    /// Evaluate at an integer point.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.num_vars);
        let mut total = BigInt::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (v, &e) in point.iter().zip(exps) {
                term *= v.pow(e);
            }
            total += term;
        }
        total
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// True iff every term has total degree exactly `deg` (the zero
    /// polynomial is homogeneous of any degree).
    pub fn is_homogeneous(&self, deg: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == deg)
    }

    /// Smallest coefficient, if any term exists.
    pub fn min_coefficient(&self) -> Option<BigInt> {
        self.terms.values().min().cloned()
    }

    /// Canonical text: terms in graded-lexicographic order (higher total
    /// degree first, then descending lex on exponent vectors), explicit
    /// `+`/`-` separators, `^` powers, `*` products.
    pub fn canonical_text(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.num_vars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, exps) in keys.iter().enumerate() {
            let coeff = &self.terms[*exps];
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else if coeff.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(mag.to_string());
            }
            for (v, &e) in names.iter().zip(exps.iter()) {
                match e {
                    0 => {}
                    1 => factors.push((*v).to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Variable names `x1..xk, y1..yk` for polynomials in `R_k`.
pub fn xy_names(k: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    names.extend((1..=k).map(|i| format!("y{i}")));
    names
}

/// Symbolic expansion of `P_k` in `2k` variables (`x` block then `y`
/// block). Homogeneous of total degree `k`; this is asserted.
pub fn build_pk(k: usize) -> SparsePoly {
    assert!(k >= 1);
    let nv = 2 * k;
    let x_sum = {
        let mut s = SparsePoly::zero(nv);
        for i in 0..k {
            s = s.add(&SparsePoly::var(nv, i)).unwrap();
        }
        s
    };
    let mut total = SparsePoly::zero(nv);
    for mask in 0u32..(1 << k) {
        let size = mask.count_ones();
        let sign = if size % 2 == 0 { 1 } else { -1 };
        let y_prod = {
            let mut p = SparsePoly::constant(nv, 1);
            for i in 0..k {
                if mask >> i & 1 == 1 {
                    p = p.mul(&SparsePoly::var(nv, k + i)).unwrap();
                }
            }
            p
        };
        let summand = if size as usize == k {
            // X^(k-|S|-1) would have exponent -1; the summand collapses to
            // (-1)^k (1-k) y_1..y_k
            y_prod.scale(sign * (1 - k as i64))
        } else {
            let mut xs_sum = SparsePoly::zero(nv);
            for i in 0..k {
                if mask >> i & 1 == 1 {
                    xs_sum = xs_sum.add(&SparsePoly::var(nv, i)).unwrap();
                }
            }
            let linear = xs_sum.sub(&x_sum.scale(size as i64)).unwrap();
            linear
                .mul(&x_sum.pow(k as u32 - size - 1))
                .unwrap()
                .mul(&y_prod)
                .unwrap()
                .scale(sign)
        };
        total = total.add(&summand).unwrap();
    }
    assert!(total.is_homogeneous(k as u32), "P_{k} is not homogeneous");
    total
}

/// The shifted polynomial `P_k^(I)` for `I` a subset of `[1, k-1]`:
/// `P_k` composed with `x_k -> x_k - 1`, `y_i -> y_i + 1` for `i` in `I`,
/// and `y_k -> y_k - 1`.
pub fn build_pk_shift(k: usize, shift_set: &[usize]) -> Result<SparsePoly, Error> {
    for &i in shift_set {
        if i < 1 || i >= k {
            return Err(Error::ColorOutOfRange { color: i, k: k - 1 });
        }
    }
    let nv = 2 * k;
    let mut subs: BTreeMap<usize, SparsePoly> = BTreeMap::new();
    subs.insert(
        k - 1,
        SparsePoly::var(nv, k - 1)
            .sub(&SparsePoly::constant(nv, 1))
            .unwrap(),
    );
    subs.insert(
        2 * k - 1,
        SparsePoly::var(nv, 2 * k - 1)
            .sub(&SparsePoly::constant(nv, 1))
            .unwrap(),
    );
    for &i in shift_set {
        subs.insert(
            k + i - 1,
            SparsePoly::var(nv, k + i - 1)
                .add(&SparsePoly::constant(nv, 1))
                .unwrap(),
        );
    }
    build_pk(k).substitute(&subs)
}

/// Evaluate `P_k` directly by summing over the `2^k` subsets, without any
/// symbolic expansion. This is the evaluation route the counting layer
/// uses; it is checked against [`build_pk`] in the test suites.
pub fn eval_pk(xs: &[BigInt], ys: &[BigInt]) -> BigInt {
    let k = xs.len();
    assert_eq!(k, ys.len(), "x and y blocks must have equal length");
    assert!((1..32).contains(&k), "subset masks cover 1 <= k <= 31");
    let x_total: BigInt = xs.iter().sum();
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << k) {
        let size = mask.count_ones();
        let sign = if size % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let mut y_prod = BigInt::one();
        for (i, y) in ys.iter().enumerate() {
            if mask >> i & 1 == 1 {
                y_prod *= y;
            }
        }
        if y_prod.is_zero() {
            continue;
        }
        if size as usize == k {
            total += sign * BigInt::from(1 - k as i64) * y_prod;
        } else {
            let mut xs_sum = BigInt::zero();
            for (i, x) in xs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    xs_sum += x;
                }
            }
            let linear = xs_sum - BigInt::from(size) * &x_total;
            total += sign * linear * x_total.pow(k as u32 - size - 1) * y_prod;
        }
    }
    total
}

/// Convenience wrapper over [`eval_pk`] for machine integers.
pub fn eval_pk_ints(xs: &[i64], ys: &[i64]) -> BigInt {
    let xs: Vec<BigInt> = xs.iter().map(|&v| BigInt::from(v)).collect();
    let ys: Vec<BigInt> = ys.iter().map(|&v| BigInt::from(v)).collect();
    eval_pk(&xs, &ys)
}

/// Which of the four `P_k` identities to verify symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PkIdentity {
    /// `P_k(x, 0) = 0`
    YZero,
    /// two-support specialization collapses to `2^(k-2) (y_a + y_b - y_a y_b)`
    TwoSupport,
    /// invariance under simultaneous permutation of the x and y blocks
    Symmetry,
    /// the shift identity relating `P_k` to the `P_k^(I)`
    Shift,
}

/// Verify one of the `P_k` identities by full symbolic expansion.
/// Returns `true` iff the identity holds exactly; a `false` return means
/// a transcription bug in the polynomial constructions.
///
/// `TwoSupport` and `Shift` need `k >= 2`. `Symmetry` checks all `k!`
/// permutations for `k <= 4` and a generating set of adjacent
/// transpositions for larger `k`. `Shift` expands `2^(k-1)` shifted
/// polynomials, so keep `k` modest.
pub fn verify_pk_identity(k: usize, which: PkIdentity) -> bool {
    let nv = 2 * k;
    let pk = build_pk(k);
    match which {
        PkIdentity::YZero => {
            let subs: BTreeMap<usize, SparsePoly> =
                (k..2 * k).map(|i| (i, SparsePoly::zero(nv))).collect();
            pk.substitute(&subs).unwrap().is_zero()
        }
        PkIdentity::TwoSupport => {
            if k < 2 {
                return false;
            }
            for a in 1..=k {
                for b in a + 1..=k {
                    let mut subs: BTreeMap<usize, SparsePoly> = BTreeMap::new();
                    for i in 1..=k {
                        let keep = i == a || i == b;
                        subs.insert(i - 1, SparsePoly::constant(nv, if keep { 1 } else { 0 }));
                        if !keep {
                            subs.insert(k + i - 1, SparsePoly::zero(nv));
                        }
                    }
                    let lhs = pk.substitute(&subs).unwrap();
                    let ya = SparsePoly::var(nv, k + a - 1);
                    let yb = SparsePoly::var(nv, k + b - 1);
                    let rhs = ya
                        .add(&yb)
                        .unwrap()
                        .sub(&ya.mul(&yb).unwrap())
                        .unwrap()
                        .scale(BigInt::from(2).pow(k as u32 - 2));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            true
        }
        PkIdentity::Symmetry => {
            let perms: Vec<Vec<usize>> = if k <= 4 {
                use itertools::Itertools;
                (0..k).permutations(k).collect()
            } else {
                // adjacent transpositions generate the full symmetric group
                (0..k - 1)
                    .map(|i| {
                        let mut p: Vec<usize> = (0..k).collect();
                        p.swap(i, i + 1);
                        p
                    })
                    .collect()
            };
            perms.iter().all(|sigma| {
                let mut full = vec![0usize; nv];
                for i in 0..k {
                    full[i] = sigma[i];
                    full[k + i] = k + sigma[i];
                }
                pk.permute_vars(&full) == pk
            })
        }
        PkIdentity::Shift => {
            if k < 2 {
                return false;
            }
            let x_sum = {
                let mut s = SparsePoly::zero(nv);
                for i in 0..k {
                    s = s.add(&SparsePoly::var(nv, i)).unwrap();
                }
                s
            };
            let mut lhs = pk.clone();
            for i in 0..k - 1 {
                let factor = x_sum
                    .sub(&SparsePoly::var(nv, i))
                    .unwrap()
                    .sub(&SparsePoly::constant(nv, 1))
                    .unwrap();
                lhs = lhs.mul(&factor).unwrap();
            }
            let mut rhs = SparsePoly::zero(nv);
            for mask in 0u32..(1 << (k - 1)) {
                let shift_set: Vec<usize> = (1..k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let mut term = build_pk_shift(k, &shift_set).unwrap();
                for i in 1..k {
                    let xi = SparsePoly::var(nv, i - 1);
                    let yi = SparsePoly::var(nv, k + i - 1);
                    let factor = if shift_set.contains(&i) {
                        xi.sub(&yi).unwrap()
                    } else {
                        x_sum.sub(&xi.scale(2)).unwrap().add(&yi).unwrap()
                    };
                    term = term.mul(&factor).unwrap();
                }
                rhs = rhs.add(&term).unwrap();
            }
            lhs == rhs
        }
    }
}

/// Rewrite `P_k` in the variables `z_i = x_i - y_i` (substituting
/// `x_i -> z_i + y_i`, with the `z_i` reusing the x slots) and report the
/// smallest coefficient. The coefficients appear to be nonnegative for
/// every `k` tried; this is reported, never asserted.
pub fn pk_zy_min_coefficient(k: usize) -> BigInt {
    let nv = 2 * k;
    let subs: BTreeMap<usize, SparsePoly> = (0..k)
        .map(|i| {
            (
                i,
                SparsePoly::var(nv, i)
                    .add(&SparsePoly::var(nv, k + i))
                    .unwrap(),
            )
        })
        .collect();
    build_pk(k)
        .substitute(&subs)
        .unwrap()
        .min_coefficient()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// P_2 from its printed form: x1*y2 + x2*y1 - y1*y2.
    fn example_p2() -> SparsePoly {
        SparsePoly::from_terms(
            4,
            [
                (1, vec![1, 0, 0, 1]),
                (1, vec![0, 1, 1, 0]),
                (-1, vec![0, 0, 1, 1]),
            ],
        )
    }

    #[test]
    fn pk2_matches_printed_form() {
        assert_eq!(build_pk(2), example_p2());
        let names = xy_names(2);
        let names: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        assert_eq!(build_pk(2).canonical_text(&names), "x1*y2 + x2*y1 - y1*y2");
    }

    #[test]
    fn monomial_product() {
        let x1 = SparsePoly::var(4, 0);
        let y1 = SparsePoly::var(4, 2);
        let got = x1.mul(&y1).unwrap();
        assert_eq!(got, SparsePoly::from_terms(4, [(1, vec![1, 0, 1, 0])]));
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = build_pk(3);
        assert!(p.sub(&p).unwrap().is_zero());
        assert_eq!(p.sub(&p).unwrap().num_terms(), 0);
    }

    #[test]
    fn square_of_binomial() {
        // (x1 + y1)^2 = x1^2 + 2 x1 y1 + y1^2
        let s = SparsePoly::var(4, 0).add(&SparsePoly::var(4, 2)).unwrap();
        let expected = SparsePoly::from_terms(
            4,
            [
                (1, vec![2, 0, 0, 0]),
                (2, vec![1, 0, 1, 0]),
                (1, vec![0, 0, 2, 0]),
            ],
        );
        assert_eq!(s.pow(2), expected);
    }

    #[test]
    fn arity_mismatch_rejected() {
        let a = SparsePoly::var(4, 0);
        let b = SparsePoly::var(6, 0);
        assert!(a.mul(&b).is_err());
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn identity_substitution_is_identity() {
        let p = build_pk(3);
        assert_eq!(p.substitute(&BTreeMap::new()).unwrap(), p);
        let subs: BTreeMap<usize, SparsePoly> =
            (0..6).map(|i| (i, SparsePoly::var(6, i))).collect();
        assert_eq!(p.substitute(&subs).unwrap(), p);
    }

    #[test]
    fn shift_of_p2_expands_by_hand() {
        // P_2(x1, x2-1, y1, y2-1) = x1 y2 + x2 y1 - y1 y2 - x1
        let empty = build_pk_shift(2, &[]).unwrap();
        let expected = example_p2().sub(&SparsePoly::var(4, 0)).unwrap();
        assert_eq!(empty, expected);

        // P_2(x1, x2-1, y1+1, y2-1) = x1 y2 + x2 y1 - y1 y2 - x1 + x2 - y2
        let shifted = build_pk_shift(2, &[1]).unwrap();
        let expected = example_p2()
            .sub(&SparsePoly::var(4, 0))
            .unwrap()
            .add(&SparsePoly::var(4, 1))
            .unwrap()
            .sub(&SparsePoly::var(4, 3))
            .unwrap();
        assert_eq!(shifted, expected);
    }

    #[test]
    fn shift_set_must_exclude_last_color() {
        assert!(matches!(
            build_pk_shift(2, &[2]),
            Err(Error::ColorOutOfRange { .. })
        ));
        assert!(build_pk_shift(3, &[3]).is_err());
    }

    #[test]
    fn pk_homogeneous_small_k() {
        for k in 1..=6 {
            assert!(build_pk(k).is_homogeneous(k as u32), "k={k}");
        }
    }

    #[test]
    fn eval_tiny_cases() {
        assert_eq!(eval_pk_ints(&[1, 1], &[1, 1]), BigInt::from(1));
        // Lemma-style: all ys zero kills the polynomial
        assert_eq!(eval_pk_ints(&[7, -3, 11], &[0, 0, 0]), BigInt::zero());
    }

    #[test]
    fn eval_single_rooted_specialization() {
        // P_k(x, e_k) = (X - x_k) X^(k-2); this is the simplification behind
        // the tree-count formula.
        for k in 2..=5usize {
            let xs: Vec<i64> = (0..k as i64).map(|i| 3 * i + 2).collect();
            let mut ys = vec![0i64; k];
            ys[k - 1] = 1;
            let x_total: i64 = xs.iter().sum();
            let expected =
                BigInt::from(x_total - xs[k - 1]) * BigInt::from(x_total).pow(k as u32 - 2);
            assert_eq!(eval_pk_ints(&xs, &ys), expected, "k={k}");
        }
    }

    #[test]
    fn identities_hold_for_small_k() {
        for k in 2..=4 {
            assert!(verify_pk_identity(k, PkIdentity::YZero), "y-zero k={k}");
            assert!(
                verify_pk_identity(k, PkIdentity::TwoSupport),
                "two-support k={k}"
            );
            assert!(
                verify_pk_identity(k, PkIdentity::Symmetry),
                "symmetry k={k}"
            );
        }
        assert!(verify_pk_identity(2, PkIdentity::Shift));
        assert!(verify_pk_identity(3, PkIdentity::Shift));
    }

    #[test]
    fn zy_rewrite_reports_nonnegative_for_tiny_k() {
        // observed, not proven; the library only reports this value
        for k in 1..=4 {
            assert!(pk_zy_min_coefficient(k) >= BigInt::zero(), "k={k}");
        }
    }

    #[test]
    fn canonical_text_of_zero_and_constants() {
        assert_eq!(SparsePoly::zero(2).canonical_text(&["a", "b"]), "0");
        assert_eq!(
            SparsePoly::constant(2, -7).canonical_text(&["a", "b"]),
            "-7"
        );
        let p = SparsePoly::from_terms(2, [(1, vec![3, 0]), (-2, vec![0, 1])]);
        assert_eq!(p.canonical_text(&["a", "b"]), "a^3 - 2*b");
    }
}
