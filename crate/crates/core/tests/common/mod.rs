//! Brute-force oracles shared by the integration tests. They work on raw
//! rows and share no code with the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use psca_core::{PermArray, Permutation};

pub type Rows = Vec<Vec<u8>>;

pub fn rows_of(x: &PermArray) -> Rows {
    x.rows().iter().map(|r| r.row().to_vec()).collect()
}

pub fn array(v: usize, rows: &[Vec<u8>]) -> PermArray {
    PermArray::new(v, rows.iter().map(|r| Permutation::from_row(r.clone()).unwrap()).collect()).unwrap()
}

pub fn perms(v: usize) -> Rows {
    (0..v as u8).permutations(v).collect()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn covers(row: &[u8], seq: &[u8]) -> bool {
    let mut it = row.iter();
    seq.iter().all(|s| it.any(|x| x == s))
}

/// Coverage multiplicity of every ordered t-tuple of distinct symbols.
pub fn coverage(rows: &[Vec<u8>], v: usize, t: usize) -> BTreeMap<Vec<u8>, u64> {
    (0..v as u8)
        .permutations(t)
        .map(|s| {
            let n = rows.iter().filter(|r| covers(r, &s)).count() as u64;
            (s, n)
        })
        .collect()
}

/// `Some(λ)` when every t-tuple is covered exactly λ times.
pub fn psca_lambda(rows: &[Vec<u8>], v: usize, t: usize) -> Option<u64> {
    let counts = coverage(rows, v, t);
    let first = *counts.values().next()?;
    counts.values().all(|&c| c == first).then_some(first)
}

fn encode(mut rows: Rows) -> Vec<u8> {
    rows.sort();
    rows.concat()
}

fn apply(sigma: &[u8], rows: &[Vec<u8>], reverse: bool) -> Rows {
    rows.iter()
        .map(|r| {
            let mut out: Vec<u8> = r.iter().map(|&s| sigma[s as usize]).collect();
            if reverse {
                out.reverse();
            }
            out
        })
        .collect()
}

/// Least encoding over all relabellings and both orientations.
pub fn naive_canonical(rows: &[Vec<u8>], v: usize) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    for sigma in perms(v) {
        for rev in [false, true] {
            let e = encode(apply(&sigma, rows, rev));
            if best.as_ref().map_or(true, |b| e < *b) {
                best = Some(e);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn naive_automorphisms(rows: &[Vec<u8>], v: usize) -> u64 {
    let target = encode(rows.to_vec());
    let mut n = 0;
    for sigma in perms(v) {
        for rev in [false, true] {
            if encode(apply(&sigma, rows, rev)) == target {
                n += 1;
            }
        }
    }
    n
}

/// Power-sum feasibility, cross-multiplied to stay in integers:
/// `v·Σ_j j^s d(j) = t!λ·Σ_i i^s` for `1 ≤ s < t`.
pub fn naive_feasible(d: &[u64], t: usize, lambda: u64) -> bool {
    let v = d.len();
    let rows = (factorial(t) * lambda) as i128;
    (1..t as u32).all(|s| {
        let lhs: i128 = d.iter().enumerate().map(|(j, &x)| (j as i128).pow(s) * x as i128).sum();
        let rhs: i128 = (0..v).map(|i| (i as i128).pow(s)).sum();
        v as i128 * lhs == rows * rhs
    })
}

/// Count of t-sequences through a fixed symbol `w` placed at index `i`.
pub fn naive_binomial(d: &[u64], t: usize, lambda: u64, i: usize) -> bool {
    let v = d.len() as i64;
    let lhs = lambda as i128 * (factorial(v as usize - 1) / factorial(v as usize - t)) as i128;
    let rhs: i128 = d
        .iter()
        .enumerate()
        .map(|(j, &x)| x as i128 * binomial(j as i64, i as i64) * binomial(v - 1 - j as i64, t as i64 - 1 - i as i64))
        .sum();
    lhs == rhs
}

/// Every nonnegative vector of length `v` with the given sum.
pub fn compositions(v: usize, sum: u64) -> Vec<Vec<u64>> {
    fn go(v: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() + 1 == v {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            go(v, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(v, sum, &mut Vec::new(), &mut out);
    out
}

/// Column counts of symbol `w`.
pub fn distribution(rows: &[Vec<u8>], v: usize, w: u8) -> Vec<u64> {
    let mut d = vec![0u64; v];
    for r in rows {
        d[r.iter().position(|&s| s == w).unwrap()] += 1;
    }
    d
}

/// The same compatibility condition stated as a deletion: removing a
/// symbol from a column-`k` position shifts it one column to the left
/// exactly when it sat to the right of the deleted symbol, so `d` over `v`
/// and `e` over `v-1` are compatible iff some flow `m(k)` of occurrences
/// moving from column `k` to `k-1` satisfies `d(k) - m(k) + m(k+1) = e(k)`
/// with `0 ≤ m(k) ≤ d(k)`.
pub fn naive_compatible(d: &[u64], e: &[u64]) -> bool {
    let v = d.len();
    let mut m_next: i64 = 0;
    // e(k) = d(k) - m(k) + m(k+1), m(0) = 0, m(v) = 0; solve downward.
    for k in (0..v).rev() {
        let e_k = if k < v - 1 { e[k] as i64 } else { 0 };
        let m_k = d[k] as i64 + m_next - e_k;
        if m_k < 0 || m_k > d[k] as i64 || (k == 0 && m_k != 0) {
            return false;
        }
        m_next = m_k;
    }
    true
}

/// Closure of a generating set by breadth-first multiplication.
pub fn naive_closure(v: usize, gens: &[Vec<u8>]) -> BTreeSet<Vec<u8>> {
    let id: Vec<u8> = (0..v as u8).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for h in gens {
            let gh: Vec<u8> = h.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(gh.clone()) {
                queue.push_back(gh);
            }
        }
    }
    seen
}

/// True when the set is closed under composition after moving its first
/// element to the identity.
pub fn naive_is_group(rows: &[Vec<u8>]) -> bool {
    let Some(first) = rows.first() else { return false };
    let mut inv = vec![0u8; first.len()];
    for (i, &s) in first.iter().enumerate() {
        inv[s as usize] = i as u8;
    }
    let set: BTreeSet<Vec<u8>> = rows.iter().map(|r| r.iter().map(|&s| inv[s as usize]).collect()).collect();
    set.iter().all(|a| set.iter().all(|b| set.contains(&b.iter().map(|&i| a[i as usize]).collect::<Vec<u8>>())))
}
