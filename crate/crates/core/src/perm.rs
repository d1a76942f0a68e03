//! Permutations of `[v] = {0, .., v-1}` stored as their one-line row.
//!
//! A permutation `p` is the row `(p(0), .., p(v-1))`; reading the row left to
//! right gives the order in which symbols appear. Composition follows the
//! usual function convention: `(f ∘ g)(x) = f(g(x))`.

use std::fmt;

use crate::error::{input, Error, Result};

/// Largest supported alphabet.
pub const MAX_V: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    row: Vec<u8>,
}

impl Permutation {
    pub fn identity(v: usize) -> Self {
        assert!(v <= MAX_V, "alphabet larger than {MAX_V}");
        Permutation { row: (0..v as u8).collect() }
    }

    /// Builds a permutation from its row, checking it is a bijection on `[v]`.
    pub fn from_row(row: Vec<u8>) -> Result<Self> {
        let v = row.len();
        if v > MAX_V {
            return input(format!("permutation of length {v} exceeds maximum {MAX_V}"));
        }
        let mut seen = 0u64;
        for &x in &row {
            if x as usize >= v {
                return input(format!("symbol {x} out of range for v={v}"));
            }
            if seen & (1 << x) != 0 {
                return input(format!("symbol {x} repeated"));
            }
            seen |= 1 << x;
        }
        Ok(Permutation { row })
    }

    pub fn from_slice(row: &[usize]) -> Result<Self> {
        if row.iter().any(|&x| x >= MAX_V) {
            return input("symbol exceeds maximum alphabet");
        }
        Self::from_row(row.iter().map(|&x| x as u8).collect())
    }

    /// Unchecked constructor for rows produced internally.
    pub(crate) fn from_row_unchecked(row: Vec<u8>) -> Self {
        debug_assert!(Self::from_row(row.clone()).is_ok());
        Permutation { row }
    }

    #[inline]
    pub fn v(&self) -> usize {
        self.row.len()
    }

    #[inline]
    pub fn row(&self) -> &[u8] {
        &self.row
    }

    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.row[i] as usize
    }

    pub fn into_row(self) -> Vec<u8> {
        self.row
    }

    pub fn is_identity(&self) -> bool {
        self.row.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.v()];
        for (i, &x) in self.row.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { row: inv }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.v() != other.v() {
            return input(format!("cannot compose permutations of lengths {} and {}", self.v(), other.v()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Permutation { row: other.row.iter().map(|&x| self.row[x as usize]).collect() }
    }

    pub fn reversed(&self) -> Self {
        let mut row = self.row.clone();
        row.reverse();
        Permutation { row }
    }

    /// Smallest `k ≥ 1` with `self^k = id`.
    pub fn order(&self) -> u64 {
        let mut seen = 0u64;
        let mut order = 1u64;
        for start in 0..self.v() {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while seen & (1 << x) == 0 {
                seen |= 1 << x;
                x = self.get(x);
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Permutation::identity(self.v());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.v() {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while seen & (1 << x) == 0 {
                seen |= 1 << x;
                cycle.push(x);
                x = self.get(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses cycle notation such as `(0,5,4)(1,2,3)` or `(0 1)(2 3)` on `[v]`.
    /// Fixed points may be omitted; `()` or an empty string is the identity.
    pub fn parse_cycles(text: &str, v: usize) -> Result<Self> {
        if v > MAX_V {
            return input(format!("v={v} exceeds maximum {MAX_V}"));
        }
        let mut row: Vec<u8> = (0..v as u8).collect();
        let mut seen = 0u64;
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return input(format!("expected '(' in cycle notation near {rest:?}"));
            };
            let Some(close) = body.find(')') else {
                return input("unterminated cycle");
            };
            let points = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Input(format!("bad point {s:?} in cycle notation")))
                })
                .collect::<Result<Vec<_>>>()?;
            for &p in &points {
                if p >= v {
                    return input(format!("point {p} out of range for v={v}"));
                }
                if seen & (1 << p) != 0 {
                    return input(format!("point {p} appears in more than one cycle"));
                }
                seen |= 1 << p;
            }
            for (k, &p) in points.iter().enumerate() {
                row[p] = points[(k + 1) % points.len()] as u8;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { row })
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.row)
    }
}

impl fmt::Display for Permutation {
    /// Compact digits when `v ≤ 10`, otherwise space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v() <= 10 {
            for &x in &self.row {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.row.iter().map(|x| x.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}
