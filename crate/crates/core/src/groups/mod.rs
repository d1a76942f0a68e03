//! Permutation groups: closure from generators, cosets, transitivity, and
//! the group-based constructions of PSCAs.

mod builtin;
mod conjugate;
mod e2;
mod order;

use std::collections::HashSet;

use crate::array::PermArray;
use crate::coverage::{verify_anchored, VerifyResult};
use crate::error::{input, Error, Result};
use crate::perm::Permutation;

pub use builtin::{builtin, builtin_names, Builtin, BuiltinKind, E16_AUTOMORPHISM, E16_GENERATORS, E32_AUTOMORPHISMS, E32_GENERATORS};
pub use conjugate::{conjugate_search, sample_conjugates, SearchOutcome};
pub use e2::{
    e2_group, e2_psca_check, e4_coset_type, e4_uncovered_triples, subgroup_orbits, CosetType, E2Structure,
    ReducedCheck,
};
pub use order::{group_order, StabChain};

/// Default bound on the number of elements `close` will materialise.
pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

/// Generators of a permutation group of degree `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub v: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn new(v: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.v() != v) {
            return input(format!("generator {g} is not a permutation of [{v}]"));
        }
        Ok(GroupSpec { v, generators })
    }

    /// Parses generators written in cycle notation.
    pub fn parse(v: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators.iter().map(|g| Permutation::parse_cycles(g, v)).collect::<Result<Vec<_>>>()?;
        Self::new(v, gens)
    }

    pub fn to_cycle_strings(&self) -> Vec<String> {
        self.generators.iter().map(Permutation::to_cycle_string).collect()
    }
}

/// A finite permutation group with all of its elements listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    v: usize,
    /// Sorted, without repeats; contains the identity.
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Wraps a set of permutations after checking that it is a group.
    pub fn from_elements(v: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        if elements.iter().any(|g| g.v() != v) {
            return input("elements act on different degrees");
        }
        elements.sort_unstable();
        elements.dedup();
        if !is_closed(v, &elements) || !elements.iter().any(Permutation::is_identity) {
            return input("the given permutations do not form a group");
        }
        Ok(PermGroup { v, elements })
    }

    pub fn trivial(v: usize) -> Self {
        PermGroup { v, elements: vec![Permutation::identity(v)] }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn to_array(&self) -> PermArray {
        PermArray::new(self.v, self.elements.clone()).expect("same degree")
    }

    /// Orbit of point 0 covers every point.
    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.v];
        for g in &self.elements {
            seen[g.get(0)] = true;
        }
        seen.iter().all(|&s| s)
    }

    /// The image of each point under exactly one element.
    pub fn is_sharply_transitive(&self) -> bool {
        self.order() == self.v && self.is_transitive()
    }
}

/// Whether a set of distinct permutations containing the identity is a
/// group. Every element lies in the group generated by the elements picked
/// along the way, so the set is a group exactly when that group is no
/// larger than the set.
fn is_closed(v: usize, elements: &[Permutation]) -> bool {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = StabChain::new(v, &gens);
    for p in elements {
        if !chain.contains(p) {
            gens.push(p.clone());
            chain = StabChain::new(v, &gens);
            if chain.order() > elements.len() as u128 {
                return false;
            }
        }
    }
    chain.order() == elements.len() as u128
}

/// The group generated by `spec`, provided it has at most `max_order`
/// elements; a larger group gives [`Error::Overflow`].
pub fn close(spec: &GroupSpec, max_order: usize) -> Result<PermGroup> {
    if max_order == 0 {
        return input("max_order must be at least 1");
    }
    let order = group_order(spec);
    if order > max_order as u128 {
        return Err(Error::Overflow { limit: max_order });
    }
    let id = Permutation::identity(spec.v);
    let gens: Vec<&Permutation> = spec.generators.iter().filter(|g| !g.is_identity()).collect();
    let mut seen: HashSet<Permutation> = HashSet::with_capacity(order as usize);
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for s in &gens {
            let h = g.compose_unchecked(s);
            if !seen.contains(&h) {
                seen.insert(h.clone());
                frontier.push(h);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    debug_assert_eq!(elements.len() as u128, order);
    Ok(PermGroup { v: spec.v, elements })
}

/// Relabels so that some row is the identity, then checks closure of the
/// underlying set (multiplicities ignored).
pub fn is_group(x: &PermArray) -> bool {
    let Some(first) = x.rows().first() else {
        return false;
    };
    let inv = first.inverse();
    let set: Vec<Permutation> = x.distinct_rows().into_iter().map(|r| inv.compose_unchecked(r)).collect();
    is_closed(x.v(), &set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `Hg`: columns permuted by `g`.
    Right,
    /// `gH`: symbols permuted by `g`.
    Left,
}

pub fn coset(g: &PermGroup, h: &Permutation, side: Side) -> Result<PermArray> {
    if h.v() != g.v {
        return input(format!("coset representative has length {}, group has degree {}", h.v(), g.v));
    }
    let rows = g
        .elements
        .iter()
        .map(|e| match side {
            Side::Right => e.compose_unchecked(h),
            Side::Left => h.compose_unchecked(e),
        })
        .collect();
    PermArray::new(g.v, rows)
}

/// Verification of an array made of right cosets of the transitive group
/// `g`: only the sequences with `w` at index `i` are counted.
pub fn verify_transitive(x: &PermArray, g: &PermGroup, t: usize, w: usize, i: usize) -> Result<VerifyResult> {
    if !g.is_transitive() {
        return input("group is not transitive");
    }
    if g.v != x.v() {
        return input("group and array act on different alphabets");
    }
    verify_anchored(x, t, w, i)
}
