//! Named constructions: explicit arrays, generator sets of groups that are
//! PSCAs, and arrays assembled from cosets of elementary abelian groups.

use std::collections::BTreeMap;

use super::{close, coset, GroupSpec, Side, DEFAULT_MAX_ORDER};
use crate::array::PermArray;
use crate::error::{input, Result};
use crate::perm::Permutation;

/// What a built-in name resolves to.
#[derive(Clone, Debug)]
pub enum BuiltinKind {
    Array(PermArray),
    Group(GroupSpec),
}

#[derive(Clone, Debug)]
pub struct Builtin {
    pub name: String,
    pub description: String,
    /// Strength and index the construction is known to achieve.
    pub t: usize,
    pub lambda: u64,
    pub kind: BuiltinKind,
}

impl Builtin {
    /// The rows of the construction; groups are closed first.
    pub fn to_array(&self, max_order: usize) -> Result<PermArray> {
        match &self.kind {
            BuiltinKind::Array(x) => Ok(x.clone()),
            BuiltinKind::Group(spec) => Ok(close(spec, max_order)?.to_array()),
        }
    }

    pub fn v(&self) -> usize {
        match &self.kind {
            BuiltinKind::Array(x) => x.v(),
            BuiltinKind::Group(spec) => spec.v,
        }
    }
}

struct GroupEntry {
    t: usize,
    v: usize,
    lambda: u64,
    group: &'static str,
    generators: &'static [&'static str],
}

const GROUP_TABLE: &[GroupEntry] = &[
    GroupEntry { t: 3, v: 4, lambda: 2, group: "A4", generators: &["(1,2,3)", "(0,1,2)"] },
    GroupEntry { t: 3, v: 6, lambda: 2, group: "A4", generators: &["(0,5,4)(1,2,3)", "(0,5,1)(2,3,4)"] },
    GroupEntry { t: 3, v: 6, lambda: 2, group: "D12", generators: &["(0,5,4,2,1,3)", "(0,5)(1,2)(3,4)"] },
    GroupEntry { t: 3, v: 6, lambda: 2, group: "D12", generators: &["(0,4,5,2,1,3)", "(0,4)(1,2)(3,5)"] },
    GroupEntry { t: 3, v: 6, lambda: 2, group: "D12", generators: &["(0,3,1,5,4,2)", "(0,5)(1,3)(2,4)"] },
    GroupEntry { t: 3, v: 6, lambda: 2, group: "D12", generators: &["(0,3,1,4,5,2)", "(0,4)(1,3)(2,5)"] },
    GroupEntry { t: 3, v: 6, lambda: 4, group: "C2xA4", generators: &["(0,5,1,2,3,4)", "(0,5,4)(1,2,3)"] },
    GroupEntry { t: 3, v: 6, lambda: 4, group: "S4", generators: &["(0,2)(1,3)(4,5)", "(0,4,5)(1,3,2)"] },
    GroupEntry { t: 3, v: 6, lambda: 4, group: "S4", generators: &["(0,2)(1,3)(4,5)", "(0,4,5)(1,2,3)"] },
    GroupEntry { t: 3, v: 6, lambda: 4, group: "S4", generators: &["(0,5)(1,3)(2,4)", "(0,2,4)(1,3,5)"] },
    GroupEntry { t: 3, v: 6, lambda: 4, group: "S4", generators: &["(1,3)(4,5)", "(0,1,5)(2,4,3)"] },
    GroupEntry { t: 3, v: 6, lambda: 4, group: "S4", generators: &["(1,3)(2,4)", "(0,1,4)(2,3,5)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "SL(2,3)", generators: &["(0,7,4,2)(1,5,3,6)", "(0,7,1)(2,3,4)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "SL(2,3)", generators: &["(0,7,6,4)(1,3,2,5)", "(0,7,3)(4,5,6)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,5,4,2)(1,7,3,6)", "(0,7,4)(1,3,2)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,5,4,2)(1,6,3,7)", "(0,7,4)(1,3,5)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,5,6,3)(1,4,7,2)", "(0,7,6)(2,4,5)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,5,7,3)(1,4,6,2)", "(0,7,6)(2,5,4)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,5,7,4)(1,3,6,2)", "(0,7,6)(2,5,3)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,5,6,4)(1,3,7,2)", "(0,7,6)(2,3,5)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,6,4,3)(1,7,5,2)", "(0,5,4)(2,7,6)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,7,3,6)(1,2,4,5)", "(0,5,3)(1,4,7)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,7,3,6)(1,5,4,2)", "(0,5,3)(1,4,6)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,7,4,3)(1,6,5,2)", "(0,5,4)(2,6,7)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,7,4,6)(1,3,5,2)", "(0,5,4)(2,3,7)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "S4", generators: &["(0,7,5,2)(1,6,4,3)", "(0,5,4)(2,3,6)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "C2xA4", generators: &["(1,4,7)(2,5,3)", "(0,1)(2,7)(3,6)(4,5)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "C2xA4", generators: &["(1,4,6)(2,5,3)", "(0,1)(2,6)(3,7)(4,5)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "C2xA4", generators: &["(1,2,5)(4,7,6)", "(0,1)(2,7)(3,6)(4,5)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "C2xA4", generators: &["(1,2,5)(4,6,7)", "(0,1)(2,6)(3,7)(4,5)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "C2xA4", generators: &["(1,6,7)(2,5,4)", "(0,2)(1,5)(3,6)(4,7)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "C2xA4", generators: &["(1,6,7)(2,4,5)", "(0,2)(1,5)(3,7)(4,6)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "C2xA4", generators: &["(1,6,7)(2,5,3)", "(0,2)(1,5)(3,7)(4,6)"] },
    GroupEntry { t: 3, v: 8, lambda: 4, group: "C2xA4", generators: &["(1,6,7)(2,3,5)", "(0,2)(1,5)(3,6)(4,7)"] },
    GroupEntry { t: 3, v: 12, lambda: 6, group: "C6xS3", generators: &["(0,11,9,10,1,4)(2,7,6,3,8,5)", "(0,8,9,2,1,6)(3,4,5,11,7,10)"] },
    GroupEntry { t: 3, v: 12, lambda: 6, group: "S3xS3", generators: &["(0,11,9,10,1,4)(2,5,8,3,6,7)", "(0,8,9,2,1,6)(3,4,7,10,5,11)"] },
    GroupEntry { t: 3, v: 12, lambda: 6, group: "C3xA4", generators: &["(2,5,9)(3,6,8)(4,10,11)", "(0,2,4)(1,10,8)(3,9,7)(5,11,6)"] },
    GroupEntry { t: 3, v: 12, lambda: 6, group: "C3xA4", generators: &["(2,5,9)(3,6,8)(4,11,10)", "(0,2,4)(1,11,8)(3,9,7)(5,10,6)"] },
    GroupEntry { t: 3, v: 12, lambda: 6, group: "C3xA4", generators: &["(2,5,9)(3,6,8)(4,7,11)", "(0,2,4)(1,7,8)(3,9,10)(5,11,6)"] },
    GroupEntry { t: 3, v: 12, lambda: 6, group: "C3xA4", generators: &["(2,5,9)(3,6,8)(4,7,10)", "(0,2,4)(1,7,8)(3,9,11)(5,10,6)"] },
    GroupEntry { t: 3, v: 12, lambda: 6, group: "C3xA4", generators: &["(2,5,9)(3,6,8)(4,11,7)", "(0,2,4)(1,11,8)(3,9,10)(5,7,6)"] },
    GroupEntry { t: 3, v: 12, lambda: 6, group: "C3xA4", generators: &["(2,5,9)(3,6,8)(4,10,7)", "(0,2,4)(1,10,8)(3,9,11)(5,7,6)"] },
    GroupEntry { t: 3, v: 12, lambda: 6, group: "C3xA4", generators: &["(1,7,9)(2,6,5)(4,10,8)", "(0,1,8)(2,7,10)(3,5,9)(4,6,11)"] },
    GroupEntry { t: 3, v: 14, lambda: 7, group: "C7:C6", generators: &["(1,4,7)(2,11,5)(3,9,13)(6,8,12)", "(0,2)(1,11)(3,10)(4,8)(5,13)(6,7)(9,12)"] },
    GroupEntry { t: 3, v: 14, lambda: 7, group: "C7:C6", generators: &["(1,4,7)(2,11,5)(3,9,12)(6,8,13)", "(0,2)(1,11)(3,10)(4,8)(5,12)(6,7)(9,13)"] },
    GroupEntry { t: 3, v: 16, lambda: 16, group: "(E16:C2):C3", generators: &["(1,8,9)(2,4,15,11,5,7)(3,12,6,10,13,14)", "(0,4,7)(1,13,15)(2,3,10)(5,14,8)(6,9,12)"] },
    GroupEntry { t: 3, v: 19, lambda: 19, group: "C19:C6", generators: &["(1,11,5,18,15,9)(2,7,12,8,3,13)(4,6,10,14,16,17)", "(0,1,2,3,4,13,16,5,11,10,17,15,9,6,12,14,7,8,18)"] },
    GroupEntry { t: 4, v: 6, lambda: 1, group: "S4", generators: &["(1,3)(4,5)", "(0,1,4)(2,5,3)"] },
    GroupEntry { t: 4, v: 6, lambda: 2, group: "C2xS4", generators: &["(0,5,2,1)", "(0,1,3,2,5,4)"] },
    GroupEntry { t: 4, v: 7, lambda: 7, group: "PSL(3,2)", generators: &["(0,2,3,4,6,5,1)", "(0,5,4)(2,6,3)"] },
    GroupEntry { t: 4, v: 8, lambda: 56, group: "E8:PSL(3,2)", generators: &["(0,7,4,2,3,1,5)", "(0,1,3,4)(2,6,7,5)"] },
    GroupEntry { t: 4, v: 9, lambda: 18, group: "((E9:Q8):C3):C2", generators: &["(0,8)(1,3)(4,5)", "(0,3,8)(1,6,4)(2,7,5)"] },
    GroupEntry { t: 4, v: 10, lambda: 30, group: "S6", generators: &["(0,7)(2,9)(3,4)", "(0,7,5,9,1)(2,3,6,8,4)"] },
    GroupEntry { t: 4, v: 10, lambda: 30, group: "A6.C2", generators: &["(0,7,3)(1,2,6)(4,8,5)", "(0,5,1,6,2,4,7,3)(8,9)"] },
    GroupEntry { t: 4, v: 12, lambda: 18, group: "((E9:Q8):C3):C2", generators: &["(2,8)(3,11)(6,9)(7,10)", "(0,1,9)(2,4,11)(3,7,5)(6,10,8)"] },
    GroupEntry { t: 4, v: 13, lambda: 234, group: "PSL(3,3)", generators: &["(3,9)(5,7)(8,10)(11,12)", "(0,1,2,3)(4,11,9,8)(5,12)(6,10)"] },
    GroupEntry { t: 4, v: 21, lambda: 5040, group: "PSL(3,4):S3", generators: &["(0,16,8,9)(1,4,3,20,5,13,18,19)(2,6,10,7,14,17,11,12)", "(0,17,7,11,10,5,4,19)(1,2,16,14,15,9,12,3)(8,13,18,20)"] },
];

struct ArrayEntry {
    name: &'static str,
    t: usize,
    lambda: u64,
    rows: &'static [&'static str],
}

const ARRAYS: &[ArrayEntry] = &[
    ArrayEntry {
        name: "psca-4-3-2",
        t: 3,
        lambda: 2,
        rows: &["0123", "1032", "2301", "3210", "0231", "1320", "2013", "3102", "0312", "1203", "2130", "3021"],
    },
    ArrayEntry {
        name: "psca-7-3-2",
        t: 3,
        lambda: 2,
        rows: &[
            "0123465", "0642315", "1540362", "1634052", "2405163", "2610543", "3054261", "3625401", "4312560",
            "4651230", "5231064", "5603124",
        ],
    },
    ArrayEntry {
        name: "psca-8-3-3",
        t: 3,
        lambda: 3,
        rows: &[
            "04712563", "05672341", "06432157", "07351462", "16547203", "17453026", "17630245", "25476301",
            "26751043", "27410365", "31526074", "34675102", "37206154", "42351067", "46051327", "50213476",
            "53764201", "61234075",
        ],
    },
    ArrayEntry {
        name: "psca-8-3-4",
        t: 3,
        lambda: 4,
        rows: &[
            "01234567", "42671053", "10543276", "53106742", "25076143", "60435217", "34701652", "71342506",
            "43610725", "07245316", "52167034", "16532407", "67452301", "23061754", "76325410", "32716045",
            "06253471", "45607132", "17524360", "54170623", "24017635", "61423570", "35760124", "70354261",
        ],
    },
    ArrayEntry {
        name: "psca-7-4-2",
        t: 4,
        lambda: 2,
        rows: &[
            "0123465", "0254163", "0351264", "0432165", "0621435", "0634125", "0651432", "0652341", "1045263",
            "1254063", "1432560", "1530264", "1632045", "1635402", "1640253", "1652043", "2045361", "2103564",
            "2341560", "2530164", "2601534", "2635104", "2643015", "2645103", "3015462", "3214065", "3402561",
            "3520461", "3604521", "3610254", "3614520", "3625401", "4015362", "4123065", "4351062", "4520163",
            "4610352", "4620351", "4621530", "4653012", "5103462", "5214360", "5341260", "5402361", "5603214",
            "5604123", "5612340", "5643210",
        ],
    },
];

/// Generators of an elementary abelian group of order 16 acting regularly.
pub const E16_GENERATORS: &[&str] = &[
    "(0 1)(2 3)(4 5)(6 7)(8 9)(10 11)(12 13)(14 15)",
    "(0 2)(1 3)(4 14)(5 15)(6 12)(7 13)(8 10)(9 11)",
    "(0 4)(1 5)(2 14)(3 15)(6 10)(7 11)(8 12)(9 13)",
    "(0 8)(1 9)(2 10)(3 11)(4 12)(5 13)(6 14)(7 15)",
];

/// An automorphism of order 6 of the group generated by [`E16_GENERATORS`].
pub const E16_AUTOMORPHISM: &str = "(1 8 9)(2 4 15 11 5 7)(3 12 6 10 13 14)";

/// Generators of an elementary abelian group of order 32 acting regularly.
pub const E32_GENERATORS: &[&str] = &[
    "(0 1)(2 3)(4 5)(6 7)(8 9)(10 11)(12 13)(14 15)(16 17)(18 19)(20 21)(22 23)(24 25)(26 27)(28 29)(30 31)",
    "(0 2)(1 3)(4 28)(5 29)(6 30)(7 31)(8 10)(9 11)(12 20)(13 21)(14 22)(15 23)(16 18)(17 19)(24 26)(25 27)",
    "(0 4)(1 5)(2 28)(3 29)(6 26)(7 27)(8 14)(9 15)(10 22)(11 23)(12 18)(13 19)(16 20)(17 21)(24 30)(25 31)",
    "(0 8)(1 9)(2 10)(3 11)(4 14)(5 15)(6 12)(7 13)(16 24)(17 25)(18 26)(19 27)(20 30)(21 31)(22 28)(23 29)",
    "(0 16)(1 17)(2 18)(3 19)(4 20)(5 21)(6 22)(7 23)(8 24)(9 25)(10 26)(11 27)(12 28)(13 29)(14 30)(15 31)",
];

/// Automorphisms of orders 2, 3 and 3 of the group generated by [`E32_GENERATORS`].
pub const E32_AUTOMORPHISMS: [&str; 3] = [
    "(2 8)(3 9)(4 6)(5 7)(12 28)(13 29)(14 30)(15 31)(18 24)(19 25)(20 22)(21 23)",
    "(2 12 24)(3 13 25)(4 6 10)(5 7 11)(8 18 28)(9 19 29)(20 22 26)(21 23 27)",
    "(1 16 17)(3 18 19)(5 20 21)(6 7 23)(9 24 25)(11 26 27)(12 13 29)(15 30 31)",
];

struct MathieuEntry {
    name: &'static str,
    v: usize,
    t: usize,
    lambda: u64,
    generators: &'static [&'static str],
}

const MATHIEU: &[MathieuEntry] = &[
    MathieuEntry { name: "m11", v: 11, t: 5, lambda: 66, generators: &["(1,7)(2,8)(3,4)(6,9)", "(0,2,10,6)(3,7,5,8)"] },
    MathieuEntry {
        name: "m12",
        v: 12,
        t: 6,
        lambda: 132,
        generators: &["(2,11,8,6)(3,10,4,5)", "(0,1,2,3,4,5,11,6,7,10,8)", "(0,9)(1,8)(2,5)(3,6)(4,7)(10,11)"],
    },
    MathieuEntry {
        name: "m22",
        v: 22,
        t: 5,
        lambda: 3696,
        generators: &[
            "(0,1,20,4,2)(3,8,9,12,13)(5,16,10,11,18)(6,7,15,19,14)",
            "(0,13,16,5,10)(1,14,19,4,2)(3,18,7,12,15)(9,21,11,20,17)",
        ],
    },
    MathieuEntry {
        name: "m24",
        v: 24,
        t: 6,
        lambda: 340_032,
        generators: &[
            "(0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22)",
            "(0,23)(1,22)(2,11)(3,15)(4,17)(5,9)(6,19)(7,13)(8,20)(10,16)(12,21)(14,18)",
            "(2,16,9,6,8)(3,12,13,18,4)(7,17,10,11,22)(14,19,21,20,15)",
        ],
    },
];

const COSET_BUILTINS: &[(&str, &str)] = &[
    ("e16", "elementary abelian group of order 16 acting regularly on 16 points"),
    ("e32", "elementary abelian group of order 32 acting regularly on 32 points"),
    ("psca-16-3-16", "union of the six right cosets G f^i of E16 under an automorphism f of order 6"),
    ("psca-32-3-96", "G192 together with its left translates by f3 and f3^2"),
    ("psca-32-3-96-right", "as psca-32-3-96 but with right translates; not a PSCA"),
];

/// Names of the groups in the strength-3 and strength-4 tables, keyed as
/// `t{t}-{v}-{lambda}-{i}` with `i` counting from 1 within a cell.
fn table_names() -> BTreeMap<String, &'static GroupEntry> {
    let mut seen: BTreeMap<(usize, usize, u64), usize> = BTreeMap::new();
    let mut out = BTreeMap::new();
    for e in GROUP_TABLE {
        let i = seen.entry((e.t, e.v, e.lambda)).or_insert(0);
        *i += 1;
        out.insert(format!("t{}-{}-{}-{}", e.t, e.v, e.lambda, i), e);
    }
    out
}

/// All registered names, in a stable order.
pub fn builtin_names() -> Vec<String> {
    let mut names: Vec<String> = ARRAYS.iter().map(|a| a.name.to_string()).collect();
    names.extend(COSET_BUILTINS.iter().map(|(n, _)| n.to_string()));
    names.extend(MATHIEU.iter().map(|m| m.name.to_string()));
    let mut table: Vec<(usize, usize, u64, usize, String)> = table_names()
        .into_keys()
        .map(|k| {
            let p: Vec<usize> = k[1..].split('-').map(|s| s.parse().expect("numeric")).collect();
            (p[0], p[1], p[2] as u64, p[3], k)
        })
        .collect();
    table.sort();
    names.extend(table.into_iter().map(|e| e.4));
    names
}

fn parse_all(v: usize, gens: &[&str]) -> Result<Vec<Permutation>> {
    gens.iter().map(|g| Permutation::parse_cycles(g, v)).collect()
}

fn union_cosets(g: &super::PermGroup, reps: &[Permutation], side: Side) -> Result<PermArray> {
    let mut rows = Vec::with_capacity(g.order() * reps.len());
    for r in reps {
        rows.extend(coset(g, r, side)?.into_rows());
    }
    PermArray::new(g.v(), rows)
}

fn powers(f: &Permutation, n: u64) -> Vec<Permutation> {
    (0..n).map(|i| f.pow(i)).collect()
}

/// The array `∪_{i<6} G f^i` over 16 symbols.
fn psca_16() -> Result<PermArray> {
    let g = close(&GroupSpec::parse(16, E16_GENERATORS)?, DEFAULT_MAX_ORDER)?;
    let f = Permutation::parse_cycles(E16_AUTOMORPHISM, 16)?;
    union_cosets(&g, &powers(&f, 6), Side::Right)
}

fn psca_32(final_side: Side) -> Result<PermArray> {
    let g32 = close(&GroupSpec::parse(32, E32_GENERATORS)?, DEFAULT_MAX_ORDER)?;
    let [f1, f2, f3] = {
        let p = parse_all(32, &E32_AUTOMORPHISMS)?;
        [p[0].clone(), p[1].clone(), p[2].clone()]
    };
    let g64 = union_cosets(&g32, &powers(&f1, 2), Side::Right)?;
    let g64 = super::PermGroup::from_elements(32, g64.into_rows())?;
    let g192 = union_cosets(&g64, &powers(&f2, 3), Side::Right)?;
    let g192 = super::PermGroup::from_elements(32, g192.into_rows())?;
    union_cosets(&g192, &powers(&f3, 3), final_side)
}

/// Looks up a named construction.
pub fn builtin(name: &str) -> Result<Builtin> {
    if let Some(a) = ARRAYS.iter().find(|a| a.name == name) {
        let x = PermArray::parse(&a.rows.join("\n"))?;
        return Ok(Builtin {
            name: name.into(),
            description: format!("explicit {}-row array", a.rows.len()),
            t: a.t,
            lambda: a.lambda,
            kind: BuiltinKind::Array(x),
        });
    }
    if let Some(m) = MATHIEU.iter().find(|m| m.name == name) {
        return Ok(Builtin {
            name: name.into(),
            description: format!("Mathieu group M{} on {} points", m.v, m.v),
            t: m.t,
            lambda: m.lambda,
            kind: BuiltinKind::Group(GroupSpec::parse(m.v, m.generators)?),
        });
    }
    if let Some((_, desc)) = COSET_BUILTINS.iter().find(|(n, _)| *n == name) {
        let (t, lambda, kind) = match name {
            "e16" => (1, 16, BuiltinKind::Group(GroupSpec::parse(16, E16_GENERATORS)?)),
            "e32" => (1, 32, BuiltinKind::Group(GroupSpec::parse(32, E32_GENERATORS)?)),
            "psca-16-3-16" => (3, 16, BuiltinKind::Array(psca_16()?)),
            "psca-32-3-96" => (3, 96, BuiltinKind::Array(psca_32(Side::Left)?)),
            _ => (3, 96, BuiltinKind::Array(psca_32(Side::Right)?)),
        };
        return Ok(Builtin { name: name.into(), description: desc.to_string(), t, lambda, kind });
    }
    if let Some(e) = table_names().get(name) {
        return Ok(Builtin {
            name: name.into(),
            description: format!("group {} of degree {}", e.group, e.v),
            t: e.t,
            lambda: e.lambda,
            kind: BuiltinKind::Group(GroupSpec::parse(e.v, e.generators)?),
        });
    }
    input(format!("unknown built-in {name:?}; run `group builtin --list` for the available names"))
}
