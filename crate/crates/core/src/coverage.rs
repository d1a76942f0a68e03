//! Coverage counting and λ-verification.
//!
//! Every t-sequence of distinct symbols is given a dense rank in
//! `0 .. v!/(v-t)!`: the first symbol contributes its value, each later
//! symbol its index among the symbols not yet used (mixed radix
//! `v, v-1, ..`). Verification walks the `C(v,t)` subsequences of each row
//! once and increments the corresponding counter.

use std::fmt;

use rayon::prelude::*;

use crate::array::PermArray;
use crate::error::{input, Result};
use crate::perm::Permutation;

/// An ordered tuple of distinct symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence(Vec<u8>);

impl Sequence {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        let mut seen = 0u64;
        for &s in &symbols {
            if s as usize >= 64 || seen & (1 << s) != 0 {
                return input(format!("sequence {symbols:?} does not consist of distinct symbols"));
            }
            seen |= 1 << s;
        }
        Ok(Sequence(symbols))
    }

    pub fn from_slice(symbols: &[usize]) -> Result<Self> {
        Self::new(symbols.iter().map(|&s| s.min(255) as u8).collect())
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Does `p` contain the symbols of `s` in the given relative order?
pub fn covers(p: &Permutation, s: &Sequence) -> Result<bool> {
    let inv = p.inverse();
    if let Some(&bad) = s.symbols().iter().find(|&&x| x as usize >= p.v()) {
        return input(format!("symbol {bad} out of range for v={}", p.v()));
    }
    Ok(s.symbols().windows(2).all(|w| inv.get(w[0] as usize) < inv.get(w[1] as usize)))
}

/// Dense ranking of t-sequences over `[v]`.
#[derive(Clone, Copy, Debug)]
pub struct SequenceRanker {
    v: usize,
    t: usize,
    size: usize,
}

impl SequenceRanker {
    pub fn new(v: usize, t: usize) -> Result<Self> {
        if t == 0 || t > v {
            return input(format!("strength t={t} must satisfy 1 ≤ t ≤ v={v}"));
        }
        let size = ((v - t + 1)..=v).try_fold(1usize, |acc, k| acc.checked_mul(k));
        match size {
            Some(size) if size <= 1 << 32 => Ok(SequenceRanker { v, t, size }),
            _ => input(format!("too many {t}-sequences over {v} symbols to tabulate")),
        }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of t-sequences, `v!/(v-t)!`.
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn rank(&self, s: &[u8]) -> usize {
        let mut mask = 0u64;
        let mut r = 0usize;
        for (k, &x) in s.iter().enumerate() {
            let below = (mask & ((1u64 << x) - 1)).count_ones() as usize;
            r = r * (self.v - k) + (x as usize - below);
            mask |= 1 << x;
        }
        r
    }

    pub fn unrank(&self, mut r: usize) -> Sequence {
        let mut digits = vec![0usize; self.t];
        for k in (0..self.t).rev() {
            let radix = self.v - k;
            digits[k] = r % radix;
            r /= radix;
        }
        let mut free: Vec<u8> = (0..self.v as u8).collect();
        let symbols = digits.into_iter().map(|d| free.remove(d)).collect();
        Sequence(symbols)
    }
}

/// Adds one to the counter of every t-subsequence of `row`.
pub(crate) fn count_row(row: &[u8], ranker: &SequenceRanker, counts: &mut [u32]) {
    fn walk(row: &[u8], start: usize, depth: usize, t: usize, rank: usize, mask: u64, counts: &mut [u32]) {
        let v = row.len();
        if depth == t {
            counts[rank] += 1;
            return;
        }
        for c in start..=(v - (t - depth)) {
            let x = row[c];
            let below = (mask & ((1u64 << x) - 1)).count_ones() as usize;
            let next = rank * (v - depth) + (x as usize - below);
            walk(row, c + 1, depth + 1, t, next, mask | (1 << x), counts);
        }
    }
    walk(row, 0, 0, ranker.t, 0, 0, counts);
}

/// Adds one to the counter of every t-subsequence of `row` in which the
/// symbol at position `anchor` of `row` appears as the `slot`-th entry.
fn count_row_anchored(row: &[u8], ranker: &SequenceRanker, anchor: usize, slot: usize, counts: &mut [u32]) {
    // Choose `slot` positions before the anchor and `t-1-slot` after it.
    fn walk(
        row: &[u8],
        t: usize,
        anchor: usize,
        slot: usize,
        start: usize,
        depth: usize,
        rank: usize,
        mask: u64,
        counts: &mut [u32],
    ) {
        let v = row.len();
        if depth == t {
            counts[rank] += 1;
            return;
        }
        let push = |c: usize| {
            let x = row[c];
            let below = (mask & ((1u64 << x) - 1)).count_ones() as usize;
            (rank * (v - depth) + (x as usize - below), mask | (1 << x))
        };
        if depth == slot {
            let (r, m) = push(anchor);
            walk(row, t, anchor, slot, anchor + 1, depth + 1, r, m, counts);
            return;
        }
        let (lo, hi) = if depth < slot {
            (start, anchor - (slot - depth))
        } else {
            (start, v - (t - depth))
        };
        if lo > hi {
            return;
        }
        for c in lo..=hi {
            let (r, m) = push(c);
            walk(row, t, anchor, slot, c + 1, depth + 1, r, m, counts);
        }
    }
    let t = ranker.t;
    if slot > anchor || t - 1 - slot > row.len() - 1 - anchor {
        return;
    }
    walk(row, t, anchor, slot, 0, 0, 0, 0, counts);
}

/// Counter for every t-sequence across all rows of `x`.
pub fn coverage_counts(x: &PermArray, t: usize) -> Result<(SequenceRanker, Vec<u32>)> {
    let ranker = SequenceRanker::new(x.v(), t)?;
    let rows = x.rows();
    const CHUNK: usize = 2048;
    let counts = if rows.len() <= CHUNK {
        let mut counts = vec![0u32; ranker.size()];
        for r in rows {
            count_row(r.row(), &ranker, &mut counts);
        }
        counts
    } else {
        rows.par_chunks(CHUNK)
            .map(|chunk| {
                let mut counts = vec![0u32; ranker.size()];
                for r in chunk {
                    count_row(r.row(), &ranker, &mut counts);
                }
                counts
            })
            .reduce_with(|mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            })
            .unwrap_or_else(|| vec![0u32; ranker.size()])
    };
    Ok((ranker, counts))
}

/// A t-sequence whose coverage differs from the expected multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub sequence: Sequence,
    pub observed: u64,
    pub expected: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyResult {
    pub is_psca: bool,
    /// Set only when `is_psca`.
    pub lambda: Option<u64>,
    pub first_violation: Option<Violation>,
}

impl VerifyResult {
    pub fn psca(lambda: u64) -> Self {
        VerifyResult { is_psca: true, lambda: Some(lambda), first_violation: None }
    }

    pub fn failed(first_violation: Option<Violation>) -> Self {
        VerifyResult { is_psca: false, lambda: None, first_violation }
    }
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn check_strength(x: &PermArray, t: usize) -> Result<()> {
    if t < 2 || t > x.v() {
        return input(format!("strength t={t} must satisfy 2 ≤ t ≤ v={}", x.v()));
    }
    if x.is_empty() {
        return input("array has no rows");
    }
    Ok(())
}

fn judge(ranker: &SequenceRanker, counts: &[u32], expected: u64, relevant: impl Fn(usize) -> bool) -> VerifyResult {
    let bad = counts.iter().enumerate().find(|&(r, &c)| c as u64 != expected && relevant(r));
    match bad {
        None => VerifyResult::psca(expected),
        Some((r, &c)) => {
            VerifyResult::failed(Some(Violation { sequence: ranker.unrank(r), observed: c as u64, expected }))
        }
    }
}

/// Checks that every t-sequence is covered by exactly `len/t!` rows.
pub fn verify(x: &PermArray, t: usize) -> Result<VerifyResult> {
    check_strength(x, t)?;
    let tf = factorial(t);
    if x.len() as u64 % tf != 0 {
        return Ok(VerifyResult::failed(None));
    }
    let (ranker, counts) = coverage_counts(x, t)?;
    Ok(judge(&ranker, &counts, x.len() as u64 / tf, |_| true))
}

/// Like [`verify`], but examines only the sequences whose entry at index
/// `slot` is the symbol `w`. For arrays made of right cosets of a transitive
/// group the verdict is the same as the full check.
pub fn verify_anchored(x: &PermArray, t: usize, w: usize, slot: usize) -> Result<VerifyResult> {
    check_strength(x, t)?;
    if w >= x.v() || slot >= t {
        return input(format!("anchor symbol {w} / index {slot} out of range"));
    }
    let tf = factorial(t);
    if x.len() as u64 % tf != 0 {
        return Ok(VerifyResult::failed(None));
    }
    let ranker = SequenceRanker::new(x.v(), t)?;
    let rows = x.rows();
    let counts = rows
        .par_chunks(1024)
        .map(|chunk| {
            let mut counts = vec![0u32; ranker.size()];
            for r in chunk {
                let anchor = r.row().iter().position(|&s| s as usize == w).expect("bijection");
                count_row_anchored(r.row(), &ranker, anchor, slot, &mut counts);
            }
            counts
        })
        .reduce_with(|mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        })
        .unwrap_or_else(|| vec![0u32; ranker.size()]);
    Ok(judge(&ranker, &counts, x.len() as u64 / tf, |r| ranker.unrank(r).symbols()[slot] as usize == w))
}
