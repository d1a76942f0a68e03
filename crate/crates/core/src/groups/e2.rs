//! Elementary abelian 2-groups acting sharply transitively on `[v]`, the
//! three coset types of the order-4 case, and the reduced-array test for
//! arrays built from right cosets of such a group.

use std::collections::BTreeMap;
use std::fmt;

use crate::array::PermArray;
use crate::coverage::{verify, VerifyResult, Violation};
use crate::error::{input, Result};
use crate::perm::Permutation;

use super::PermGroup;

/// An elementary abelian 2-group on `[v]` with identity 0, given by its
/// regular representation `T = {ψ_g : x ↦ g ⊕ x}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Structure {
    v: usize,
    /// psi[g] is the element of T sending 0 to g.
    psi: Vec<Permutation>,
}

impl E2Structure {
    /// The structure where `⊕` is bitwise XOR of symbol indices.
    pub fn xor(v: usize) -> Result<Self> {
        if !matches!(v, 4 | 8 | 16 | 32) {
            return input(format!("unsupported order {v}; expected 4, 8, 16 or 32"));
        }
        let psi = (0..v)
            .map(|g| Permutation::from_row_unchecked((0..v).map(|x| (g ^ x) as u8).collect()))
            .collect();
        Ok(E2Structure { v, psi })
    }

    /// Reads the structure off a sharply transitive group of involutions.
    pub fn from_group(t: &PermGroup) -> Result<Self> {
        if !t.is_sharply_transitive() {
            return input("group is not sharply transitive");
        }
        let v = t.v();
        if !v.is_power_of_two() || v < 4 {
            return input(format!("order {v} is not a power of two ≥ 4"));
        }
        let id = Permutation::identity(v);
        if t.elements().iter().any(|g| g.compose_unchecked(g) != id) {
            return input("group is not elementary abelian");
        }
        let mut psi = vec![id; v];
        for g in t.elements() {
            psi[g.get(0)] = g.clone();
        }
        Ok(E2Structure { v, psi })
    }

    /// The identity together with the fixed-point-free involutions among the
    /// rows of `x`, if those form a sharply transitive group.
    pub fn find_in(x: &PermArray) -> Result<Self> {
        let v = x.v();
        let id = Permutation::identity(v);
        let mut elems: Vec<Permutation> = x
            .distinct_rows()
            .into_iter()
            .filter(|r| r.row().iter().enumerate().all(|(i, &s)| s as usize != i) && r.compose_unchecked(r) == id)
            .cloned()
            .collect();
        elems.push(id);
        let group = PermGroup::from_elements(v, elems)?;
        Self::from_group(&group)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.psi[a].get(b)
    }

    pub fn group(&self) -> PermGroup {
        PermGroup::from_elements(self.v, self.psi.clone()).expect("regular representation is a group")
    }

    /// All subgroups of order 4, each as its sorted elements.
    pub fn order4_subgroups(&self) -> Vec<[u8; 4]> {
        let mut out = Vec::new();
        for a in 1..self.v {
            for b in (a + 1)..self.v {
                let c = self.op(a, b);
                if c > b {
                    out.push([0, a as u8, b as u8, c as u8]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Is `f` an automorphism: `f(0) = 0` and `f(a ⊕ b) = f(a) ⊕ f(b)`?
    pub fn is_automorphism(&self, f: &Permutation) -> bool {
        f.v() == self.v
            && f.get(0) == 0
            && (0..self.v).all(|a| (0..self.v).all(|b| f.get(self.op(a, b)) == self.op(f.get(a), f.get(b))))
    }

    /// Key shared by the rows of one right coset `Th`: `ψ_{π(0)} ∘ π`.
    fn coset_key(&self, row: &Permutation) -> Permutation {
        self.psi[row.get(0)].compose_unchecked(row)
    }

    /// Splits `x` into right cosets of `T`; each entry is a coset
    /// representative (with 0 in column 0) and how many times the whole
    /// coset occurs.
    pub fn right_cosets(&self, x: &PermArray) -> Result<Vec<(Permutation, usize)>> {
        if x.v() != self.v {
            return input("array and group act on different alphabets");
        }
        let mut groups: BTreeMap<Permutation, BTreeMap<&Permutation, usize>> = BTreeMap::new();
        for r in x.rows() {
            *groups.entry(self.coset_key(r)).or_default().entry(r).or_default() += 1;
        }
        let mut out = Vec::new();
        for (key, members) in groups {
            let counts: Vec<usize> = members.values().copied().collect();
            if members.len() != self.v || counts.iter().any(|&c| c != counts[0]) {
                return input(format!("rows with coset key {key} do not form whole right cosets"));
            }
            out.push((key, counts[0]));
        }
        Ok(out)
    }
}

/// The sharply transitive elementary abelian group of order `n` under XOR.
pub fn e2_group(n: usize) -> Result<PermGroup> {
    Ok(E2Structure::xor(n)?.group())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CosetType {
    A,
    B,
    C,
}

impl fmt::Display for CosetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CosetType::A => "A",
            CosetType::B => "B",
            CosetType::C => "C",
        };
        f.write_str(s)
    }
}

const UNCOVERED_A: [[u8; 3]; 8] =
    [[0, 2, 1], [0, 3, 1], [1, 2, 0], [1, 3, 0], [2, 0, 3], [2, 1, 3], [3, 0, 2], [3, 1, 2]];
const UNCOVERED_B: [[u8; 3]; 8] =
    [[0, 1, 2], [0, 3, 2], [1, 0, 3], [1, 2, 3], [2, 1, 0], [2, 3, 0], [3, 0, 1], [3, 2, 1]];
const UNCOVERED_C: [[u8; 3]; 8] =
    [[0, 1, 3], [0, 2, 3], [1, 0, 2], [1, 3, 2], [2, 0, 1], [2, 3, 1], [3, 1, 0], [3, 2, 0]];

/// The eight triples of `[4]` left uncovered by a coset of each type.
pub fn e4_uncovered_triples(kind: CosetType) -> [[u8; 3]; 8] {
    match kind {
        CosetType::A => UNCOVERED_A,
        CosetType::B => UNCOVERED_B,
        CosetType::C => UNCOVERED_C,
    }
}

fn uncovered_triples(rows: &[&[u8]]) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                if a == b || b == c || a == c {
                    continue;
                }
                let covered = rows.iter().any(|r| {
                    let pos = |s: u8| r.iter().position(|&x| x == s).unwrap();
                    pos(a) < pos(b) && pos(b) < pos(c)
                });
                if !covered {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Type of a 4-row coset of the XOR group on `[4]`.
pub fn e4_coset_type(c: &PermArray) -> Result<CosetType> {
    if c.v() != 4 || c.len() != 4 || c.distinct_rows().len() != 4 {
        return input("expected four distinct permutations of [4]");
    }
    let first = c.rows()[0].row();
    let same_coset = c.rows().iter().all(|r| {
        let g = r.get(0) as u8 ^ first[0];
        r.row().iter().zip(first).all(|(&x, &y)| x == y ^ g)
    });
    if !same_coset {
        return input("rows are not a coset of the sharply transitive group of order 4");
    }
    let rows: Vec<&[u8]> = c.rows().iter().map(|r| r.row()).collect();
    let uncovered = uncovered_triples(&rows);
    for kind in [CosetType::A, CosetType::B, CosetType::C] {
        if uncovered == e4_uncovered_triples(kind) {
            return Ok(kind);
        }
    }
    unreachable!("every coset of the order-4 group leaves one of the three families uncovered")
}

/// Orbits of the order-4 subgroups under `H ↦ f(H)`, each listed from its
/// least member by repeated application of `f`; orbits are ordered by that
/// least member.
pub fn subgroup_orbits(e: &E2Structure, f: &Permutation) -> Result<Vec<Vec<[u8; 4]>>> {
    if !e.is_automorphism(f) {
        return input("permutation is not an automorphism of the group");
    }
    let image = |h: &[u8; 4]| {
        let mut out = h.map(|x| f.get(x as usize) as u8);
        out.sort_unstable();
        out
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut orbits = Vec::new();
    for h in e.order4_subgroups() {
        if seen.contains(&h) {
            continue;
        }
        let mut orbit = vec![h];
        seen.insert(h);
        let mut cur = image(&h);
        while cur != h {
            seen.insert(cur);
            orbit.push(cur);
            cur = image(&cur);
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Outcome of the reduced-array test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCheck {
    pub result: VerifyResult,
    /// For each examined subgroup, the number of cosets of type A, B, C in
    /// the reduced array.
    pub type_counts: Vec<([u8; 4], [usize; 3])>,
}

fn reduced_type_counts(x: &PermArray, h: &[u8; 4]) -> Result<[usize; 3]> {
    let keep: Vec<usize> = h.iter().map(|&s| s as usize).collect();
    let reduced = x.reduce(&keep)?;
    let mut groups: BTreeMap<Vec<u8>, BTreeMap<Vec<u8>, usize>> = BTreeMap::new();
    for r in reduced.rows() {
        let g = r.row()[0];
        let key: Vec<u8> = r.row().iter().map(|&s| s ^ g).collect();
        *groups.entry(key).or_default().entry(r.row().to_vec()).or_default() += 1;
    }
    let mut counts = [0usize; 3];
    for (key, members) in groups {
        let mult = *members.values().next().expect("non-empty");
        if members.len() != 4 || members.values().any(|&m| m != mult) {
            return input("reduced array does not split into cosets of the order-4 group");
        }
        let coset = PermArray::new(
            4,
            (0..4u8).map(|g| Permutation::from_row_unchecked(key.iter().map(|&s| s ^ g).collect())).collect(),
        )?;
        let idx = match e4_coset_type(&coset)? {
            CosetType::A => 0,
            CosetType::B => 1,
            CosetType::C => 2,
        };
        counts[idx] += mult;
    }
    Ok(counts)
}

/// Strength-3 test for an array made of right cosets of `T`: only triples
/// inside an order-4 subgroup matter, and on each such subgroup the reduced
/// array is a PSCA(4,3,λ) exactly when it holds equally many cosets of
/// each type. `subgroups` restricts the test to chosen representatives
/// (one per orbit of an automorphism relating the cosets); `None` checks
/// every subgroup.
pub fn e2_psca_check(x: &PermArray, e: &E2Structure, subgroups: Option<&[[u8; 4]]>) -> Result<ReducedCheck> {
    e.right_cosets(x)?;
    let all;
    let subgroups = match subgroups {
        Some(s) => s,
        None => {
            all = e.order4_subgroups();
            &all
        }
    };
    let mut type_counts = Vec::with_capacity(subgroups.len());
    let mut failure = None;
    for h in subgroups {
        let counts = reduced_type_counts(x, h)?;
        type_counts.push((*h, counts));
        if failure.is_none() && !(counts[0] == counts[1] && counts[1] == counts[2]) {
            failure = Some(*h);
        }
    }
    let result = match failure {
        None if x.len() % 6 == 0 => VerifyResult::psca(x.len() as u64 / 6),
        None => VerifyResult::failed(None),
        Some(h) => {
            let keep: Vec<usize> = h.iter().map(|&s| s as usize).collect();
            let witness = verify(&x.reduce(&keep)?, 3)?.first_violation.map(|v| Violation {
                sequence: crate::coverage::Sequence::new(v.sequence.symbols().iter().map(|&s| h[s as usize]).collect())
                    .expect("distinct"),
                ..v
            });
            VerifyResult::failed(witness)
        }
    };
    Ok(ReducedCheck { result, type_counts })
}
