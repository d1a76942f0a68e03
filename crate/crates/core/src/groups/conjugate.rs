//! Searching the column permutations `h` for which the translate `Gh` of a
//! group is a PSCA. Since `Gh` and `h⁻¹Gh` cover sequences alike up to a
//! relabelling, this explores all conjugates of `G`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coverage::{factorial, verify, SequenceRanker};
use crate::error::{input, Result};
use crate::perm::Permutation;

use super::{coset, PermGroup, Side};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Lexicographically least witness found.
    pub witness: Option<Permutation>,
    /// True when the whole space was explored (no budget cut-off).
    pub exhausted: bool,
    /// Column assignments tried.
    pub nodes: u64,
}

struct ColumnSearch<'a> {
    rows: &'a [Permutation],
    ranker: SequenceRanker,
    v: usize,
    t: usize,
    lambda: u32,
    budget: Option<u64>,
}

struct State {
    counts: Vec<u32>,
    h: Vec<u8>,
    used: u64,
    nodes: u64,
    out_of_budget: bool,
}

impl ColumnSearch<'_> {
    /// Adds the sequences ending at the newest column. If some counter goes
    /// above λ the update is rolled back and false is returned.
    fn apply(&self, st: &mut State) -> bool {
        let c = st.h.len() - 1;
        if c + 1 < self.t {
            return true;
        }
        let mut prefix = vec![0u8; c + 1];
        for (ri, row) in self.rows.iter().enumerate() {
            for (k, &col) in st.h.iter().enumerate() {
                prefix[k] = row.row()[col as usize];
            }
            if !self.walk(&prefix, c, 0, 0, 0, 0, &mut st.counts, true) {
                self.remove_rows(st, &self.rows[..=ri]);
                return false;
            }
        }
        true
    }

    fn remove_rows(&self, st: &mut State, rows: &[Permutation]) {
        let c = st.h.len() - 1;
        if c + 1 < self.t {
            return;
        }
        let mut prefix = vec![0u8; c + 1];
        for row in rows {
            for (k, &col) in st.h.iter().enumerate() {
                prefix[k] = row.row()[col as usize];
            }
            self.walk(&prefix, c, 0, 0, 0, 0, &mut st.counts, false);
        }
    }

    /// Visits every t-subsequence of `prefix` ending at position `last`,
    /// incrementing or decrementing its counter. Returns false if an
    /// increment pushed some counter above λ.
    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        prefix: &[u8],
        last: usize,
        start: usize,
        depth: usize,
        rank: usize,
        mask: u64,
        counts: &mut [u32],
        add: bool,
    ) -> bool {
        let push = |x: u8, rank: usize, mask: u64, depth: usize| {
            let below = (mask & ((1u64 << x) - 1)).count_ones() as usize;
            (rank * (self.v - depth) + (x as usize - below), mask | (1 << x))
        };
        if depth == self.t - 1 {
            let (r, _) = push(prefix[last], rank, mask, depth);
            if add {
                counts[r] += 1;
                return counts[r] <= self.lambda;
            }
            counts[r] -= 1;
            return true;
        }
        let remaining = self.t - 1 - depth;
        let mut ok = true;
        for p in start..=(last - remaining) {
            let (r, m) = push(prefix[p], rank, mask, depth);
            ok &= self.walk(prefix, last, p + 1, depth + 1, r, m, counts, add);
        }
        ok
    }

    fn dfs(&self, st: &mut State) -> bool {
        if st.h.len() == self.v {
            return true;
        }
        for col in 0..self.v as u8 {
            if st.used & (1 << col) != 0 {
                continue;
            }
            if let Some(b) = self.budget {
                if st.nodes >= b {
                    st.out_of_budget = true;
                    return false;
                }
            }
            st.nodes += 1;
            st.h.push(col);
            st.used |= 1 << col;
            if self.apply(st) {
                if self.dfs(st) {
                    return true;
                }
                self.remove_rows(st, self.rows);
            }
            st.used &= !(1 << col);
            st.h.pop();
            if st.out_of_budget {
                return false;
            }
        }
        false
    }

    fn run_branch(&self, first: u8) -> (Option<Permutation>, u64, bool) {
        let mut st = State {
            counts: vec![0; self.ranker.size()],
            h: vec![first],
            used: 1 << first,
            nodes: 1,
            out_of_budget: false,
        };
        let found = self.apply(&mut st) && self.dfs(&mut st);
        let witness = found.then(|| Permutation::from_row_unchecked(st.h.clone()));
        (witness, st.nodes, st.out_of_budget)
    }
}

/// Backtracking over `h` one column at a time, pruning as soon as a
/// t-sequence is covered more than λ times. Without a budget the search is
/// exhaustive and runs its top-level branches in parallel.
pub fn conjugate_search(g: &PermGroup, t: usize, lambda: u64, budget: Option<u64>) -> Result<SearchOutcome> {
    if g.order() as u64 != factorial(t) * lambda {
        return input(format!("group order {} differs from t!λ = {}", g.order(), factorial(t) * lambda));
    }
    if t < 2 || t > g.v() {
        return input(format!("strength t={t} must satisfy 2 ≤ t ≤ v={}", g.v()));
    }
    let search = ColumnSearch {
        rows: g.elements(),
        ranker: SequenceRanker::new(g.v(), t)?,
        v: g.v(),
        t,
        lambda: lambda as u32,
        budget,
    };
    let firsts: Vec<u8> = (0..g.v() as u8).collect();
    if budget.is_none() {
        let results: Vec<(Option<Permutation>, u64, bool)> =
            firsts.par_iter().map(|&f| search.run_branch(f)).collect();
        let nodes = results.iter().map(|r| r.1).sum();
        let witness = results.into_iter().find_map(|r| r.0);
        return Ok(SearchOutcome { witness, exhausted: true, nodes });
    }
    let mut nodes = 0;
    let mut remaining = budget.unwrap();
    for f in firsts {
        let branch = ColumnSearch { budget: Some(remaining), ..search };
        let (witness, used, cut) = branch.run_branch(f);
        nodes += used;
        remaining = remaining.saturating_sub(used);
        if witness.is_some() {
            return Ok(SearchOutcome { witness, exhausted: false, nodes });
        }
        if cut || remaining == 0 {
            return Ok(SearchOutcome { witness: None, exhausted: false, nodes });
        }
    }
    Ok(SearchOutcome { witness: None, exhausted: true, nodes })
}

/// Tries `samples` uniformly random column permutations from a seeded
/// generator; returns the first that makes `Gh` a PSCA(v,t,λ) and the
/// number of samples used.
pub fn sample_conjugates(
    g: &PermGroup,
    t: usize,
    lambda: u64,
    samples: u64,
    seed: u64,
) -> Result<(Option<Permutation>, u64)> {
    if g.order() as u64 != factorial(t) * lambda {
        return input(format!("group order {} differs from t!λ = {}", g.order(), factorial(t) * lambda));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut row: Vec<u8> = (0..g.v() as u8).collect();
    for k in 0..samples {
        row.shuffle(&mut rng);
        let h = Permutation::from_row_unchecked(row.clone());
        let res = verify(&coset(g, &h, Side::Right)?, t)?;
        if res.lambda == Some(lambda) {
            return Ok((Some(h), k + 1));
        }
    }
    Ok((None, samples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{close, GroupSpec};

    #[test]
    fn a4_identity_is_a_witness() {
        let g = close(&GroupSpec::parse(4, &["(1,2,3)", "(0,1,2)"]).unwrap(), 100).unwrap();
        let out = conjugate_search(&g, 3, 2, None).unwrap();
        assert!(out.witness.unwrap().is_identity());
    }

    #[test]
    fn regular_cyclic_group_has_no_witness() {
        let g = close(&GroupSpec::parse(6, &["(0,1,2,3,4,5)"]).unwrap(), 100).unwrap();
        let out = conjugate_search(&g, 3, 1, None).unwrap();
        assert_eq!(out.witness, None);
        assert!(out.exhausted);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let g = close(&GroupSpec::parse(6, &["(0,1,2,3,4,5)"]).unwrap(), 100).unwrap();
        assert!(conjugate_search(&g, 3, 2, None).is_err());
    }

    #[test]
    fn witnesses_verify() {
        // A4 acting on [4]: every witness must give a PSCA(4,3,2).
        let g = close(&GroupSpec::parse(4, &["(0,1)(2,3)", "(0,1,2)"]).unwrap(), 100).unwrap();
        let out = conjugate_search(&g, 3, 2, None).unwrap();
        let h = out.witness.unwrap();
        assert_eq!(verify(&coset(&g, &h, Side::Right).unwrap(), 3).unwrap().lambda, Some(2));
    }

    #[test]
    fn budget_stops_the_search() {
        let g = close(&GroupSpec::parse(6, &["(0,1,2,3,4,5)"]).unwrap(), 100).unwrap();
        let out = conjugate_search(&g, 3, 1, Some(5)).unwrap();
        assert!(!out.exhausted);
        assert_eq!(out.witness, None);
    }

    #[test]
    fn sampling_is_reproducible() {
        let g = close(&GroupSpec::parse(4, &["(1,2,3)", "(0,1,2)"]).unwrap(), 100).unwrap();
        let a = sample_conjugates(&g, 3, 2, 50, 7).unwrap();
        let b = sample_conjugates(&g, 3, 2, 50, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.0.is_some());
    }
}
