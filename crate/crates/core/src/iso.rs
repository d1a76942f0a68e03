//! Isomorphism of permutation multisets under relabelling of symbols and
//! reversal of every row.
//!
//! The canonical form is the lexicographically least encoding of the sorted
//! rows over the whole orbit. The least possible first row is the identity
//! and it is always attainable, so only the relabellings `π⁻¹` for rows `π`
//! (of the array and of its reverse) can reach the minimum; the search is
//! exact and needs at most `2·(distinct rows)` candidates; only rows of
//! greatest multiplicity are tried, since the minimum starts with as many
//! identity rows as possible.

use std::fmt;

use sha2::{Digest, Sha256};

use crate::array::PermArray;
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    v: usize,
    rows: usize,
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    /// Sorted rows concatenated, one byte per symbol.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The canonical representative.
    pub fn to_array(&self) -> PermArray {
        let rows = if self.v == 0 {
            Vec::new()
        } else {
            self.bytes.chunks(self.v).map(|c| Permutation::from_row_unchecked(c.to_vec())).collect()
        };
        PermArray::new(self.v, rows).expect("canonical rows share v")
    }

    /// Hex SHA-256 of the encoding.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update([self.v as u8]);
        h.update((self.rows as u64).to_le_bytes());
        h.update(&self.bytes);
        hex::encode(h.finalize())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(v={}, rows={}, {})", self.v, self.rows, &self.digest()[..12])
    }
}

/// Rows of the orientation, sorted, and the distinct rows of greatest
/// multiplicity: only relabellings sending one of those to the identity can
/// put the longest run of identity rows first.
fn candidates(rows: &mut Vec<&[u8]>) -> Vec<usize> {
    rows.sort_unstable();
    let mut best = 0;
    let mut out = Vec::new();
    let mut i = 0;
    while i < rows.len() {
        let j = i + rows[i..].iter().take_while(|r| **r == rows[i]).count();
        if j - i > best {
            best = j - i;
            out.clear();
        }
        if j - i == best {
            out.push(i);
        }
        i = j;
    }
    out
}

fn inverse_of(row: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; row.len()];
    for (i, &x) in row.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

/// Least encoding over relabellings and reversal of the rows stored
/// back to back in `flat`.
pub(crate) fn canonical_bytes(v: usize, flat: &[u8]) -> Vec<u8> {
    if v == 0 || flat.is_empty() {
        return Vec::new();
    }
    if v <= 16 {
        packed(v, flat)
    } else {
        generic(v, flat)
    }
}

fn reversed_rows(v: usize, flat: &[u8]) -> Vec<u8> {
    flat.chunks(v).flat_map(|r| r.iter().rev().copied()).collect()
}

fn packed(v: usize, flat: &[u8]) -> Vec<u8> {
    let reversed = reversed_rows(v, flat);
    let orientations = [flat, &reversed[..]];
    {
        // One nibble per symbol, first column most significant, so integer
        // order is lexicographic order.
        let pack = |row: &[u8], sigma: &[u8]| -> u64 {
            row.iter().fold(0u64, |acc, &x| (acc << 4) | sigma[x as usize] as u64) << (4 * (16 - v))
        };
        let mut best: Vec<u64> = Vec::new();
        let mut buf: Vec<u64> = Vec::with_capacity(flat.len() / v);
        for o in orientations {
            let mut rows: Vec<&[u8]> = o.chunks(v).collect();
            for c in candidates(&mut rows) {
                let sigma = inverse_of(rows[c]);
                buf.clear();
                buf.extend(rows.iter().map(|r| pack(r, &sigma)));
                buf.sort_unstable();
                if best.is_empty() || buf < best {
                    std::mem::swap(&mut best, &mut buf);
                }
            }
        }
        let mut out = Vec::with_capacity(flat.len());
        for w in best {
            out.extend((0..v).map(|j| ((w >> (4 * (15 - j))) & 0xf) as u8));
        }
        out
    }
}

fn generic(v: usize, flat: &[u8]) -> Vec<u8> {
    let reversed = reversed_rows(v, flat);
    let orientations = [flat, &reversed[..]];
    let mut best: Option<Vec<Vec<u8>>> = None;
    for o in orientations {
        let mut rows: Vec<&[u8]> = o.chunks(v).collect();
        for c in candidates(&mut rows) {
            let sigma = inverse_of(rows[c]);
            let mut enc: Vec<Vec<u8>> = rows.iter().map(|r| r.iter().map(|&x| sigma[x as usize]).collect()).collect();
            enc.sort_unstable();
            if best.as_ref().map_or(true, |b| enc < *b) {
                best = Some(enc);
            }
        }
    }
    best.unwrap_or_default().concat()
}

impl CanonicalForm {
    /// Canonical form of the rows stored back to back in `flat`.
    pub(crate) fn from_flat(v: usize, flat: &[u8]) -> Self {
        let rows = if v == 0 { 0 } else { flat.len() / v };
        CanonicalForm { v, rows, bytes: canonical_bytes(v, flat) }
    }
}

pub fn canonical_form(x: &PermArray) -> CanonicalForm {
    let flat: Vec<u8> = x.rows().iter().flat_map(|r| r.row().iter().copied()).collect();
    CanonicalForm { v: x.v(), rows: x.len(), bytes: canonical_bytes(x.v(), &flat) }
}

/// Canonical representative as an array.
pub fn canonicalise(x: &PermArray) -> PermArray {
    canonical_form(x).to_array()
}

pub fn isomorphic(x: &PermArray, y: &PermArray) -> bool {
    x.v() == y.v() && x.len() == y.len() && canonical_form(x) == canonical_form(y)
}

/// Number of pairs (relabelling, reverse-or-not) that map `x` onto itself.
pub fn automorphism_count(x: &PermArray) -> u64 {
    if x.is_empty() {
        return 2 * crate::coverage::factorial(x.v());
    }
    let reversed = x.reverse();
    let mut count = 0;
    for y in [x, &reversed] {
        let first_inv = y.rows()[0].inverse();
        for rho in x.distinct_rows() {
            let sigma = rho.compose_unchecked(&first_inv);
            if y.relabel(&sigma).expect("same v") == *x {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::all_permutations;

    fn naive_min(x: &PermArray) -> Vec<u8> {
        let mut best: Option<Vec<u8>> = None;
        for y in [x.clone(), x.reverse()] {
            for sigma in all_permutations(x.v()) {
                let z = y.relabel(&sigma).unwrap();
                let enc: Vec<u8> = z.rows().iter().flat_map(|r| r.row().to_vec()).collect();
                if best.as_ref().map_or(true, |b| enc < *b) {
                    best = Some(enc);
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn matches_naive_minimum() {
        let x = PermArray::from_rows(5, &[&[3, 1, 4, 0, 2], &[2, 4, 0, 1, 3], &[3, 1, 4, 0, 2], &[1, 0, 2, 4, 3]])
            .unwrap();
        assert_eq!(canonical_form(&x).bytes(), naive_min(&x).as_slice());
    }

    #[test]
    fn packed_and_generic_encodings_agree() {
        let x = PermArray::from_rows(6, &[&[5, 1, 4, 0, 2, 3], &[2, 4, 0, 1, 3, 5], &[5, 1, 4, 0, 2, 3], &[1, 0, 2, 4, 3, 5]])
            .unwrap();
        let flat: Vec<u8> = x.rows().iter().flat_map(|r| r.row().to_vec()).collect();
        assert_eq!(packed(6, &flat), generic(6, &flat));
        assert_eq!(packed(6, &flat), naive_min(&x));
    }

    #[test]
    fn large_alphabets_are_invariant() {
        let id: Vec<usize> = (0..18).collect();
        let mut a = id.clone();
        a.swap(0, 17);
        a.swap(3, 9);
        let mut b = id.clone();
        b.reverse();
        let x = PermArray::from_rows(18, &[&id, &a, &b, &a]).unwrap();
        let sigma = Permutation::from_slice(&a).unwrap();
        let c = canonical_form(&x);
        assert_eq!(c, canonical_form(&x.relabel(&sigma).unwrap().reverse()));
        assert_eq!(&c.bytes()[..18], &id.iter().map(|&i| i as u8).collect::<Vec<_>>()[..]);
        assert_eq!(&c.bytes()[18..36], &id.iter().map(|&i| i as u8).collect::<Vec<_>>()[..]);
    }

    #[test]
    fn symmetric_group_automorphisms() {
        for t in 2..=4 {
            let x = PermArray::symmetric(t, 2);
            assert_eq!(automorphism_count(&x), 2 * crate::coverage::factorial(t));
        }
    }

    #[test]
    fn invariant_under_action() {
        let x = PermArray::from_rows(4, &[&[3, 1, 0, 2], &[2, 0, 1, 3], &[0, 1, 2, 3]]).unwrap();
        let sigma = Permutation::from_slice(&[2, 3, 1, 0]).unwrap();
        assert_eq!(canonical_form(&x), canonical_form(&x.reverse()));
        assert_eq!(canonical_form(&x), canonical_form(&x.relabel(&sigma).unwrap()));
        assert!(isomorphic(&x, &x.relabel(&sigma).unwrap().reverse()));
        let rep = canonicalise(&x);
        assert_eq!(canonicalise(&rep), rep);
    }

    #[test]
    fn different_sizes_are_not_isomorphic() {
        let x = PermArray::from_rows(3, &[&[0, 1, 2]]).unwrap();
        let y = PermArray::from_rows(3, &[&[0, 1, 2], &[0, 1, 2]]).unwrap();
        assert!(!isomorphic(&x, &y));
    }
}
