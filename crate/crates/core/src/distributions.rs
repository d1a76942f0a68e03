//! Column distributions of a single symbol and the constraints a PSCA puts
//! on them.
//!
//! For a symbol `w` of a PSCA(v, t, λ), `d(j)` counts the rows holding `w`
//! in column `j`. The vector has sum `t!λ` and must satisfy the power-sum
//! identities `v·Σ j^s d(j) = t!λ·Σ i^s` for `1 ≤ s < t`; such vectors are
//! called feasible. Deleting a different symbol maps a feasible vector at
//! order `v` to a compatible one at order `v-1`, which gives a chain test
//! used to discard feasible vectors that cannot occur.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::array::PermArray;
use crate::coverage::factorial;
use crate::error::{input, Error, Result};

pub type Distribution = Vec<u64>;

/// The parameters `(v, t, λ)` of a PSCA.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub v: usize,
    pub t: usize,
    pub lambda: u64,
}

impl Params {
    pub fn new(v: usize, t: usize, lambda: u64) -> Result<Self> {
        if t < 2 || v < t {
            return input(format!("parameters need v ≥ t ≥ 2 (got v={v}, t={t})"));
        }
        if lambda == 0 {
            return input("λ must be positive");
        }
        if v > 64 || t > 20 {
            return input(format!("parameters v={v}, t={t} are out of range"));
        }
        Ok(Params { v, t, lambda })
    }

    /// Number of rows of a PSCA with these parameters, `t!·λ`.
    pub fn rows(&self) -> u64 {
        factorial(self.t) * self.lambda
    }

    fn with_v(&self, v: usize) -> Params {
        Params { v, ..*self }
    }

    fn check(&self, d: &[u64]) -> Result<()> {
        if d.len() != self.v {
            return input(format!("distribution has length {}, expected v={}", d.len(), self.v));
        }
        let sum: u64 = d.iter().sum();
        if sum != self.rows() {
            return input(format!("distribution sums to {sum}, expected t!λ={}", self.rows()));
        }
        Ok(())
    }
}

/// Generalised binomial coefficient `C(n, k)` for any integer `n`.
fn binom(n: i128, k: usize) -> i128 {
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn binom_nonneg(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        0
    } else {
        binom(n as i128, k as usize)
    }
}

/// Checks `λ(v-1)!/(v-t)! = Σ_j d(j)·C(j,i)·C(v-1-j, t-1-i)`, the number of
/// t-sequences with `w` at index `i` counted through the rows.
pub fn binomial_identity_holds(d: &[u64], p: Params, i: usize) -> Result<bool> {
    if d.len() != p.v {
        return input(format!("distribution has length {}, expected v={}", d.len(), p.v));
    }
    if i >= p.t {
        return input(format!("index i={i} must be below t={}", p.t));
    }
    let (v, t) = (p.v as i64, p.t as i64);
    let lhs = ((v - t + 1)..v).fold(p.lambda as i128, |acc, k| acc * k as i128);
    let rhs: i128 = d
        .iter()
        .enumerate()
        .map(|(j, &dj)| dj as i128 * binom_nonneg(j as i64, i as i64) * binom_nonneg(v - 1 - j as i64, t - 1 - i as i64))
        .sum();
    Ok(lhs == rhs)
}

/// Power-sum feasibility, evaluated exactly.
pub fn is_feasible(d: &[u64], p: Params) -> Result<bool> {
    p.check(d)?;
    let total = p.rows() as i128;
    let v = p.v as i128;
    for s in 1..p.t as u32 {
        let mut lhs: i128 = 0;
        let mut rhs: i128 = 0;
        for (j, &dj) in d.iter().enumerate() {
            let js = (j as i128).checked_pow(s).ok_or(Error::Arithmetic("power sum"))?;
            lhs = js.checked_mul(dj as i128).and_then(|x| x.checked_add(lhs)).ok_or(Error::Arithmetic("power sum"))?;
            rhs = rhs.checked_add(js).ok_or(Error::Arithmetic("power sum"))?;
        }
        let lhs = lhs.checked_mul(v).ok_or(Error::Arithmetic("power sum"))?;
        let rhs = rhs.checked_mul(total).ok_or(Error::Arithmetic("power sum"))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The feasible vectors for one parameter set and, once chain filtering has
/// run, the ones that survive it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibleSet {
    pub params: Params,
    /// All feasible vectors in lexicographic order.
    pub vectors: Vec<Distribution>,
    /// Chain survivors in lexicographic order, when computed.
    pub survivors: Option<Vec<Distribution>>,
}

impl FeasibleSet {
    pub fn survivor_count(&self) -> Option<usize> {
        self.survivors.as_ref().map(Vec::len)
    }
}

/// Per-parameter tables for the depth-first enumeration.
///
/// Feasibility is linear in `d`, so it can be tested against any basis of
/// the polynomials of degree `< t`. Using `C(j - b, s)` with `b = v - t`
/// makes the last `t` columns an upper unitriangular system, so those
/// entries are solved for instead of searched.
struct Enumerator {
    v: usize,
    t: usize,
    base: usize,
    /// coef[j][s] = C(j - base, s)
    coef: Vec<Vec<i128>>,
    /// Bounds of coef[j'][s] over j' ≥ j.
    suffix_min: Vec<Vec<i128>>,
    suffix_max: Vec<Vec<i128>>,
    targets: Vec<i128>,
}

impl Enumerator {
    fn new(p: Params) -> Option<Self> {
        let (v, t) = (p.v, p.t);
        let base = v - t;
        let coef: Vec<Vec<i128>> =
            (0..v).map(|j| (0..t).map(|s| binom(j as i128 - base as i128, s)).collect()).collect();
        let total = p.rows() as i128;
        let mut targets = Vec::with_capacity(t);
        for s in 0..t {
            let sum: i128 = (0..v).map(|j| coef[j][s]).sum();
            let num = total * sum;
            if num % v as i128 != 0 {
                return None;
            }
            targets.push(num / v as i128);
        }
        let mut suffix_min = vec![vec![i128::MAX; t]; v + 1];
        let mut suffix_max = vec![vec![i128::MIN; t]; v + 1];
        for j in (0..v).rev() {
            for s in 0..t {
                suffix_min[j][s] = suffix_min[j + 1][s].min(coef[j][s]);
                suffix_max[j][s] = suffix_max[j + 1][s].max(coef[j][s]);
            }
        }
        Some(Enumerator { v, t, base, coef, suffix_min, suffix_max, targets })
    }

    /// Can the columns `j..v` absorb the residual `rem` at all?
    fn residual_plausible(&self, j: usize, rem: &[i128]) -> bool {
        let mass = rem[0];
        if mass < 0 {
            return false;
        }
        for s in 1..self.t {
            if rem[s] < self.suffix_min[j][s] * mass || rem[s] > self.suffix_max[j][s] * mass {
                return false;
            }
        }
        if self.t >= 3 && mass > 0 {
            // With n = j' - base over the remaining columns, the first moment M
            // and second moment Q satisfy (n - lo)(n - hi) ≤ 0 and
            // (n - k)(n - k - 1) ≥ 0 for every integer k.
            let lo = j as i128 - self.base as i128;
            let hi = self.t as i128 - 1;
            let m = rem[1];
            let q = 2 * rem[2] + m;
            if q > (lo + hi) * m - lo * hi * mass {
                return false;
            }
            let k = m.div_euclid(mass);
            if q < (2 * k + 1) * m - k * (k + 1) * mass {
                return false;
            }
        }
        true
    }

    /// Solves the last `t` columns given the residual; `None` if the solution
    /// is not a nonnegative integer vector.
    fn solve_tail(&self, rem: &[i128], out: &mut [u64]) -> bool {
        let t = self.t;
        let mut tail = vec![0i128; t];
        for s in (0..t).rev() {
            let mut val = rem[s];
            for (k, &dk) in tail.iter().enumerate().skip(s + 1) {
                val -= dk * binom(k as i128, s);
            }
            if val < 0 {
                return false;
            }
            tail[s] = val;
        }
        for (k, &x) in tail.iter().enumerate() {
            out[self.base + k] = x as u64;
        }
        true
    }

    fn dfs(&self, j: usize, rem: &[i128], cur: &mut Vec<u64>, out: &mut Vec<Distribution>) {
        if j == self.base {
            if self.solve_tail(rem, cur) {
                out.push(cur.clone());
            }
            return;
        }
        // The first-moment bounds give an interval for d(j) directly.
        let mass = rem[0];
        let gap = (self.base - j) as i128;
        let n0 = j as i128 + 1 - self.base as i128;
        let lo = (n0 * mass - rem[1]).max(0);
        let hi_num = (self.t as i128 - 1) * mass - rem[1];
        if hi_num < 0 {
            return;
        }
        let hi = (hi_num / (gap + self.t as i128 - 1)).min(mass);
        let mut next = vec![0i128; self.t];
        for dj in lo..=hi {
            for s in 0..self.t {
                next[s] = rem[s] - dj * self.coef[j][s];
            }
            if !self.residual_plausible(j + 1, &next) {
                continue;
            }
            cur[j] = dj as u64;
            self.dfs(j + 1, &next, cur, out);
        }
        cur[j] = 0;
    }

    fn run(&self) -> Vec<Distribution> {
        let mut cur = vec![0u64; self.v];
        if self.base == 0 {
            let mut out = Vec::new();
            if self.solve_tail(&self.targets, &mut cur) {
                out.push(cur);
            }
            return out;
        }
        // Split on d(0) across threads; concatenation keeps lexicographic order.
        let total = self.targets[0];
        let firsts: Vec<i128> = (0..=total).collect();
        let parts: Vec<Vec<Distribution>> = firsts
            .par_iter()
            .map(|&d0| {
                let mut out = Vec::new();
                let rem: Vec<i128> = (0..self.t).map(|s| self.targets[s] - d0 * self.coef[0][s]).collect();
                if !self.residual_plausible(1, &rem) {
                    return out;
                }
                let mut cur = vec![0u64; self.v];
                cur[0] = d0 as u64;
                self.dfs(1, &rem, &mut cur, &mut out);
                out
            })
            .collect();
        parts.into_iter().flatten().collect()
    }
}

/// All feasible vectors for `p`, in lexicographic order.
pub fn enumerate_feasible(p: Params) -> FeasibleSet {
    let vectors = match Enumerator::new(p) {
        Some(e) => e.run(),
        None => Vec::new(),
    };
    FeasibleSet { params: p, vectors, survivors: None }
}

/// Modular test for prime strength: with `t = p` an odd prime
/// and `p ∤ v`, each residue class of columns mod `p` holds a multiple of `p`
/// occurrences.
pub fn prime_class_check(d: &[u64], params: Params) -> Result<bool> {
    let p = params.t;
    if p < 3 || !(2..p).all(|k| p % k != 0) {
        return input(format!("strength t={p} is not an odd prime"));
    }
    if params.v % p == 0 {
        return input(format!("v={} is divisible by t={p}", params.v));
    }
    params.check(d)?;
    let mut sums = vec![0u64; p];
    for (i, &x) in d.iter().enumerate() {
        sums[i % p] += x;
    }
    Ok(sums.iter().all(|&y| y % p as u64 == 0))
}

/// For `v = t + 1` with `t` even, feasible vectors are palindromes.
pub fn palindrome_check(d: &[u64], params: Params) -> Result<bool> {
    if params.v != params.t + 1 || params.t % 2 != 0 {
        return input("palindrome test needs v = t + 1 with t even");
    }
    params.check(d)?;
    Ok(d.iter().eq(d.iter().rev()))
}

/// For `v = t + 1` and `λ = 1`, `C(t, i)` divides `d(i)`.
pub fn divisibility_check(d: &[u64], params: Params) -> Result<bool> {
    if params.v != params.t + 1 || params.lambda != 1 {
        return input("divisibility test needs v = t + 1 and λ = 1");
    }
    params.check(d)?;
    Ok(d.iter().enumerate().all(|(i, &x)| x as i128 % binom(params.t as i128, i) == 0))
}

/// Could `d_prime` (order `v-1`) be the distribution of the same symbol after
/// another symbol is deleted from an array where it had distribution `d`?
///
/// With `δ_k = Σ_{i≤k} (d'(i) - d(i))` the test is `0 ≤ δ_k ≤ d'(k)` for
/// `0 ≤ k ≤ v-2`.
pub fn compatible(d: &[u64], d_prime: &[u64]) -> Result<bool> {
    if d.is_empty() || d_prime.len() + 1 != d.len() {
        return input(format!(
            "compatibility needs lengths v and v-1 (got {} and {})",
            d.len(),
            d_prime.len()
        ));
    }
    if d.iter().sum::<u64>() != d_prime.iter().sum::<u64>() {
        return input("distributions have different sums");
    }
    let mut delta: i128 = 0;
    for (k, &dp) in d_prime.iter().enumerate() {
        delta += dp as i128 - d[k] as i128;
        if delta < 0 || delta > dp as i128 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is there a vector in the sorted list `lower` compatible with `d`?
///
/// Compatibility says the prefix sums interleave, `P(k) ≤ P'(k) ≤ P(k+1)`,
/// so the candidates are walked as a trie over the sorted list.
fn has_compatible(d: &[u64], lower: &[Distribution]) -> bool {
    let mut prefix = Vec::with_capacity(d.len() + 1);
    let mut acc = 0u64;
    for &x in d {
        acc += x;
        prefix.push(acc);
    }
    fn walk(prefix: &[u64], lower: &[Distribution], depth: usize, sofar: u64) -> bool {
        if lower.is_empty() {
            return false;
        }
        let width = lower[0].len();
        if depth == width {
            return true;
        }
        let lo = prefix[depth].saturating_sub(sofar);
        let hi = prefix[depth + 1] - sofar;
        let mut start = lower.partition_point(|e| e[depth] < lo);
        while start < lower.len() && lower[start][depth] <= hi {
            let val = lower[start][depth];
            let end = start + lower[start..].partition_point(|e| e[depth] == val);
            if walk(prefix, &lower[start..end], depth + 1, sofar + val) {
                return true;
            }
            start = end;
        }
        false
    }
    walk(&prefix, lower, 0, 0)
}

/// Feasible vectors at every order from `t` to `p.v`, each restricted to
/// the ones reachable by a chain of compatible feasible vectors down to
/// order `t`. Index `k` of the result holds order `t + k`.
pub fn chain_levels(p: Params) -> Vec<FeasibleSet> {
    let mut levels: Vec<FeasibleSet> = Vec::new();
    for v in p.t..=p.v {
        let mut set = enumerate_feasible(p.with_v(v));
        let survivors = match levels.last() {
            // At order t the only PSCA is λ copies of S_t, whose distribution
            // is uniform and feasible.
            None => set.vectors.clone(),
            Some(prev) => {
                let lower = prev.survivors.as_ref().expect("filled in below");
                set.vectors.par_iter().filter(|d| has_compatible(d, lower)).cloned().collect()
            }
        };
        set.survivors = Some(survivors);
        levels.push(set);
    }
    levels
}

/// Feasible vectors for `p` together with the chain survivors.
pub fn filter_chain(p: Params) -> FeasibleSet {
    chain_levels(p).pop().expect("at least one level")
}

/// For each `i`-subset `I` of the other symbols, the number of rows with `w`
/// in column `i` whose first `i` entries are exactly `I`.
pub fn subset_profile(x: &PermArray, w: usize, i: usize) -> Result<BTreeMap<Vec<u8>, u64>> {
    if w >= x.v() {
        return input(format!("symbol {w} out of range for v={}", x.v()));
    }
    if i >= x.v() {
        return input(format!("column {i} out of range for v={}", x.v()));
    }
    let others: Vec<u8> = (0..x.v() as u8).filter(|&s| s as usize != w).collect();
    let mut profile: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
    for subset in k_subsets(&others, i) {
        profile.insert(subset, 0);
    }
    for r in x.rows() {
        if r.get(i) == w {
            let mut prefix = r.row()[..i].to_vec();
            prefix.sort_unstable();
            *profile.get_mut(&prefix).expect("all subsets present") += 1;
        }
    }
    Ok(profile)
}

fn k_subsets(items: &[u8], k: usize) -> Vec<Vec<u8>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<u8>> = k_subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    with.extend(k_subsets(&items[1..], k));
    with
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(v: usize, t: usize, l: u64) -> Params {
        Params::new(v, t, l).unwrap()
    }

    #[test]
    fn feasibility_examples() {
        assert!(is_feasible(&[3, 6, 0, 6, 3], params(5, 3, 3)).unwrap());
        assert!(!is_feasible(&[0, 0, 6, 0, 0], params(5, 3, 1)).unwrap());
        assert!(is_feasible(&[3; 6], params(6, 3, 3)).unwrap());
        assert!(is_feasible(&[4; 6], params(6, 4, 1)).unwrap());
        assert!(is_feasible(&[1, 1, 1], params(3, 2, 1)).is_err());
        assert!(is_feasible(&[1, 1], params(3, 2, 1)).is_err());
    }

    #[test]
    fn binomial_identity_examples() {
        let p = params(5, 3, 1);
        let d = [0, 0, 6, 0, 0];
        // LHS = 4!/2! = 12; i = 1 gives 6·C(2,1)·C(2,1) = 24.
        assert!(!binomial_identity_holds(&d, p, 1).unwrap());
        let results: Vec<bool> = (0..3).map(|i| binomial_identity_holds(&d, p, i).unwrap()).collect();
        assert!(results.contains(&false));
        assert!(binomial_identity_holds(&d, p, 3).is_err());
        let uniform = [3u64; 6];
        for i in 0..3 {
            assert!(binomial_identity_holds(&uniform, params(6, 3, 3), i).unwrap());
        }
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_feasible(params(5, 3, 1)).vectors.len(), 3);
        assert_eq!(enumerate_feasible(params(6, 3, 1)).vectors.len(), 1);
        assert_eq!(
            enumerate_feasible(params(4, 3, 3)).vectors,
            vec![vec![3, 9, 0, 6], vec![4, 6, 3, 5], vec![5, 3, 6, 4], vec![6, 0, 9, 3]]
        );
        assert_eq!(enumerate_feasible(params(3, 3, 2)).vectors, vec![vec![4, 4, 4]]);
    }

    #[test]
    fn enumeration_is_sorted() {
        let set = enumerate_feasible(params(7, 4, 2));
        assert!(set.vectors.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn compatibility_examples() {
        assert!(compatible(&[2, 6, 1, 1, 6, 2], &[3, 6, 0, 6, 3]).unwrap());
        assert!(!compatible(&[3, 6, 0, 6, 3], &[3, 9, 0, 6]).unwrap());
        assert!(compatible(&[3, 6, 0, 6, 3], &[3, 6, 0]).is_err());
    }

    #[test]
    fn chain_matches_direct_compatibility() {
        let levels = chain_levels(params(6, 3, 3));
        for k in 1..levels.len() {
            let lower = levels[k - 1].survivors.as_ref().unwrap();
            for d in &levels[k].vectors {
                let direct = lower.iter().any(|dp| compatible(d, dp).unwrap());
                assert_eq!(has_compatible(d, lower), direct, "{d:?}");
            }
        }
    }

    #[test]
    fn structural_check_guards() {
        let p = params(5, 3, 3);
        assert!(prime_class_check(&[3, 6, 0, 6, 3], p).unwrap());
        assert!(prime_class_check(&[0, 0, 6, 0, 0], params(5, 3, 1)).unwrap());
        assert!(prime_class_check(&[6, 6, 6, 6], params(4, 4, 1)).is_err());
        assert!(prime_class_check(&[2, 2, 2], params(3, 3, 1)).is_err());
        assert!(palindrome_check(&[6, 0, 9, 3], params(4, 3, 3)).is_err());
        let p541 = params(5, 4, 1);
        let set = enumerate_feasible(p541);
        assert_eq!(set.vectors.len(), 3);
        assert!(set.vectors.iter().all(|d| palindrome_check(d, p541).unwrap()));
        assert!(palindrome_check(&[12, 0, 0, 0, 12], p541).unwrap());
        assert!(divisibility_check(&[6; 6], params(6, 4, 4)).is_err());
    }

    #[test]
    fn subset_profile_of_symmetric_group() {
        let x = PermArray::symmetric(4, 2);
        let prof = subset_profile(&x, 1, 0).unwrap();
        assert_eq!(prof.len(), 1);
        assert_eq!(prof[&Vec::new()], 12);
        for i in 0..4 {
            let prof = subset_profile(&x, 2, i).unwrap();
            let expect = factorial(i) * factorial(3 - i) * 2;
            assert!(prof.values().all(|&c| c == expect));
        }
        assert!(subset_profile(&x, 4, 0).is_err());
    }
}
