//! Multisets of permutations over a common alphabet, plus the text format
//! used to store them.

use std::fmt::Write as _;

use crate::error::{input, Error, Result};
use crate::perm::{Permutation, MAX_V};

/// A multiset of permutations of `[v]`.
///
/// Rows are kept sorted lexicographically with repeats adjacent, so two
/// arrays are equal exactly when they are equal as multisets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermArray {
    v: usize,
    rows: Vec<Permutation>,
}

impl PermArray {
    pub fn new(v: usize, mut rows: Vec<Permutation>) -> Result<Self> {
        if v > MAX_V {
            return input(format!("v={v} exceeds maximum {MAX_V}"));
        }
        if let Some(bad) = rows.iter().find(|r| r.v() != v) {
            return input(format!("row of length {} in an array over v={v}", bad.v()));
        }
        rows.sort_unstable();
        Ok(PermArray { v, rows })
    }

    pub fn from_rows(v: usize, rows: &[&[usize]]) -> Result<Self> {
        let rows = rows.iter().map(|r| Permutation::from_slice(r)).collect::<Result<Vec<_>>>()?;
        Self::new(v, rows)
    }

    /// `copies` copies of the full symmetric group on `[v]`.
    pub fn symmetric(v: usize, copies: usize) -> Self {
        let mut rows = Vec::new();
        for p in all_permutations(v) {
            for _ in 0..copies {
                rows.push(p.clone());
            }
        }
        PermArray::new(v, rows).expect("rows have length v")
    }

    #[inline]
    pub fn v(&self) -> usize {
        self.v
    }

    #[inline]
    pub fn rows(&self) -> &[Permutation] {
        &self.rows
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn into_rows(self) -> Vec<Permutation> {
        self.rows
    }

    /// Distinct rows, ignoring multiplicity.
    pub fn distinct_rows(&self) -> Vec<&Permutation> {
        let mut out: Vec<&Permutation> = self.rows.iter().collect();
        out.dedup();
        out
    }

    fn check_symbol(&self, w: usize) -> Result<()> {
        if w >= self.v {
            return input(format!("symbol {w} out of range for v={}", self.v));
        }
        Ok(())
    }

    /// Number of rows holding `w` in each column.
    pub fn distribution_vector(&self, w: usize) -> Result<Vec<u64>> {
        self.check_symbol(w)?;
        let mut d = vec![0u64; self.v];
        for r in &self.rows {
            let pos = r.row().iter().position(|&x| x as usize == w).expect("bijection");
            d[pos] += 1;
        }
        Ok(d)
    }

    /// Removes `w` from every row and closes the gap in the labels.
    pub fn delete_symbol(&self, w: usize) -> Result<Self> {
        self.check_symbol(w)?;
        if self.v < 2 {
            return input("cannot delete a symbol from an array over fewer than two symbols");
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let row = r
                    .row()
                    .iter()
                    .filter(|&&x| x as usize != w)
                    .map(|&x| if x as usize > w { x - 1 } else { x })
                    .collect();
                Permutation::from_row_unchecked(row)
            })
            .collect();
        PermArray::new(self.v - 1, rows)
    }

    /// The reduced array on `keep`: all other symbols are removed and the
    /// survivors relabelled to `[|keep|]` preserving their order.
    pub fn reduce(&self, keep: &[usize]) -> Result<Self> {
        let mut label = vec![u8::MAX; self.v];
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() < 2 {
            return input("reduced array needs at least two symbols");
        }
        for (k, &w) in sorted.iter().enumerate() {
            if w >= self.v {
                return input(format!("symbol {w} is not in [{}]", self.v));
            }
            label[w] = k as u8;
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let row = r.row().iter().map(|&x| label[x as usize]).filter(|&x| x != u8::MAX).collect();
                Permutation::from_row_unchecked(row)
            })
            .collect();
        PermArray::new(sorted.len(), rows)
    }

    pub fn reverse(&self) -> Self {
        let rows = self.rows.iter().map(Permutation::reversed).collect();
        PermArray::new(self.v, rows).expect("same v")
    }

    /// Applies the symbol relabelling `sigma` to every row (`π ↦ σ ∘ π`).
    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.v() != self.v {
            return input("relabelling has the wrong length");
        }
        let rows = self.rows.iter().map(|r| sigma.compose_unchecked(r)).collect();
        PermArray::new(self.v, rows)
    }

    /// Permutes columns of every row by `h` (`π ↦ π ∘ h`).
    pub fn permute_columns(&self, h: &Permutation) -> Result<Self> {
        if h.v() != self.v {
            return input("column permutation has the wrong length");
        }
        let rows = self.rows.iter().map(|r| r.compose_unchecked(h)).collect();
        PermArray::new(self.v, rows)
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.v != other.v {
            return input("cannot join arrays over different alphabets");
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        PermArray::new(self.v, rows)
    }

    /// Parses the array text format: `#` comments and blank lines are
    /// skipped; a row is either whitespace separated decimals or, when it is
    /// a single token and `v ≤ 10`, a string of digits such as `0123465`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut v = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |msg: String| Error::Parse { line: line_no, msg };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let symbols: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].len() <= 10 {
                tokens[0]
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| parse_err(format!("bad digit {c:?}"))))
                    .collect::<Result<_>>()?
            } else {
                tokens
                    .iter()
                    .map(|t| t.parse::<usize>().map_err(|_| parse_err(format!("bad symbol {t:?}"))))
                    .collect::<Result<_>>()?
            };
            match v {
                None => v = Some(symbols.len()),
                Some(v) if v != symbols.len() => {
                    return Err(parse_err(format!("row has {} symbols, expected {v}", symbols.len())));
                }
                _ => {}
            }
            let perm = Permutation::from_slice(&symbols).map_err(|e| parse_err(e.to_string()))?;
            rows.push(perm);
        }
        let Some(v) = v else {
            return input("array file contains no rows");
        };
        PermArray::new(v, rows)
    }

    /// Renders one row per line, compact digits when `v ≤ 10`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            writeln!(out, "{r}").unwrap();
        }
        out
    }
}

/// All permutations of `[v]` in lexicographic order.
pub fn all_permutations(v: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..v as u8).collect();
    loop {
        out.push(Permutation::from_row_unchecked(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..v).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..v).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_permutations_is_sorted_and_complete() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn distribution_of_single_identity_row() {
        let x = PermArray::from_rows(4, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(x.distribution_vector(2).unwrap(), vec![0, 0, 1, 0]);
        assert!(x.distribution_vector(4).is_err());
    }

    #[test]
    fn symmetric_distribution_is_uniform() {
        let x = PermArray::symmetric(4, 2);
        for w in 0..4 {
            assert_eq!(x.distribution_vector(w).unwrap(), vec![12; 4]);
        }
    }

    #[test]
    fn delete_relabels_order_preservingly() {
        let x = PermArray::from_rows(4, &[&[0, 3, 1, 2]]).unwrap();
        let y = x.delete_symbol(3).unwrap();
        assert_eq!(y.rows()[0].row(), &[0, 1, 2]);
        let z = x.delete_symbol(1).unwrap();
        assert_eq!(z.rows()[0].row(), &[0, 2, 1]);
        assert!(x.delete_symbol(4).is_err());
    }

    #[test]
    fn delete_from_symmetric_group() {
        // Deleting a symbol from λ copies of S_t gives tλ copies of S_{t-1}.
        let x = PermArray::symmetric(4, 2);
        assert_eq!(x.delete_symbol(1).unwrap(), PermArray::symmetric(3, 8));
    }

    #[test]
    fn reduce_cases() {
        let x = PermArray::from_rows(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(x.reduce(&[1, 3]).unwrap().rows()[0].row(), &[0, 1]);
        assert_eq!(x.reduce(&[0, 1, 2, 3, 4]).unwrap(), x);
        assert!(x.reduce(&[1, 7]).is_err());
        assert!(x.reduce(&[1]).is_err());
    }

    #[test]
    fn reverse_is_an_involution() {
        let x = PermArray::from_rows(4, &[&[0, 1, 2, 3], &[2, 0, 3, 1]]).unwrap();
        assert_eq!(x.reverse().rows()[0].row(), &[1, 3, 0, 2]);
        assert!(x.reverse().rows().iter().any(|r| r.row() == [3, 2, 1, 0]));
        assert_eq!(x.reverse().reverse(), x);
    }

    #[test]
    fn parse_formats() {
        let x = PermArray::parse("# comment\n0123\n\n3 2 1 0\n").unwrap();
        assert_eq!(x.v(), 4);
        assert_eq!(x.len(), 2);
        let wide = PermArray::parse("0 1 2 3 4 5 6 7 8 9 10 11\n11 10 9 8 7 6 5 4 3 2 1 0\n").unwrap();
        assert_eq!(wide.v(), 12);
        assert_eq!(PermArray::parse(&wide.to_text()).unwrap(), wide);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match PermArray::parse("0123\n012\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match PermArray::parse("0123\n\n0113\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(PermArray::parse("# nothing\n").is_err());
    }
}
