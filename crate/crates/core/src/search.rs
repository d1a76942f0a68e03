//! Isomorph-free catalogues of PSCA(v, t, λ), built one symbol at a time.
//!
//! Every PSCA(v, t, λ) becomes a PSCA(v−1, t, λ) when its largest symbol is
//! deleted, so all of them arise by inserting a new symbol into every row
//! of some class representative one level down. The insertion positions
//! are chosen row by row while a ledger counts the t-sequences that contain
//! the new symbol; sequences without it are already covered λ times. Each
//! complete placement is canonicalised, and classes are merged per level.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::array::PermArray;
use crate::catalogue::Catalogue;
use crate::coverage::{verify, SequenceRanker};
use crate::distributions::{chain_levels, compatible, Distribution, Params};
use crate::error::{input, Error, Result};
use crate::groups::is_group;
use crate::iso::{automorphism_count, canonical_form, CanonicalForm};
use crate::perm::Permutation;

/// How the column counts of the new symbol are constrained during search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// One search per chain-surviving distribution, with the column counts
    /// fixed up front.
    #[default]
    Fixed,
    /// A single search that keeps the surviving distributions still
    /// consistent with the positions chosen so far.
    Dynamic,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed" => Ok(Method::Fixed),
            "dynamic" => Ok(Method::Dynamic),
            _ => input(format!("unknown method {s:?} (expected fixed or dynamic)")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Fixed => "fixed",
            Method::Dynamic => "dynamic",
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct BuildOptions {
    pub method: Method,
    /// Stop a level once it holds more than this many classes.
    pub max_classes: Option<usize>,
    pub time_limit: Option<Duration>,
    /// Only classes in which every symbol has this distribution are kept at
    /// the final level; bases one level down are screened for compatibility.
    pub require_distribution: Option<Distribution>,
    /// Start from this class instead of λ copies of S_t.
    pub seed: Option<PermArray>,
}

/// The single class at `v = t`: λ copies of the symmetric group.
pub fn seed_catalogue(t: usize, lambda: u64) -> Result<Catalogue> {
    let params = Params::new(t, t, lambda)?;
    let x = PermArray::symmetric(t, lambda as usize);
    let rep = canonical_form(&x).to_array();
    Ok(Catalogue { params, is_group: vec![is_group(&rep)], classes: vec![rep], complete: true })
}

/// Shared stop signal for a run with a wall-clock limit.
struct Control {
    deadline: Option<Instant>,
    stop: AtomicBool,
}

impl Control {
    fn new(limit: Option<Duration>) -> Self {
        Control { deadline: limit.map(|d| Instant::now() + d), stop: AtomicBool::new(false) }
    }

    fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    fn poll(&self) -> bool {
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                self.stop.store(true, Ordering::Relaxed);
            }
        }
        self.stopped()
    }
}

/// Precomputed ledger cells touched by each (row, insertion position).
struct Extender<'a> {
    /// Order after insertion.
    v: usize,
    lambda: u16,
    rows: &'a [Permutation],
    /// Number of (t−1)-subsequences per base row.
    per_row: usize,
    /// `hits[(r * v + p) * per_row ..][..per_row]`: ledger cells for row `r`
    /// with the new symbol at column `p`.
    hits: Vec<u32>,
    ledger_len: usize,
}

impl<'a> Extender<'a> {
    fn new(base: &'a PermArray, t: usize, lambda: u64) -> Result<Self> {
        let old = base.v();
        let v = old + 1;
        let ranker = SequenceRanker::new(old, t - 1)?;
        let ledger_len = ranker.size() * t;
        if ledger_len > u32::MAX as usize || lambda > u16::MAX as u64 {
            return input("extension ledger too large");
        }
        let per_row = binomial(old, t - 1);
        let rows = base.rows();
        let mut hits = vec![0u32; rows.len() * v * per_row];
        let mut picks = Vec::with_capacity(t - 1);
        for (r, row) in rows.iter().enumerate() {
            let mut k = 0;
            for_each_subset(old, t - 1, 0, &mut picks, &mut |cols: &[usize]| {
                let u: Vec<u8> = cols.iter().map(|&c| row.row()[c]).collect();
                let rank = ranker.rank(&u);
                for p in 0..v {
                    let slot = cols.iter().filter(|&&c| c < p).count();
                    hits[(r * v + p) * per_row + k] = (rank * t + slot) as u32;
                }
                k += 1;
            });
        }
        Ok(Extender { v, lambda: lambda as u16, rows, per_row, hits, ledger_len })
    }

    #[inline]
    fn cells(&self, r: usize, p: usize) -> &[u32] {
        let start = (r * self.v + p) * self.per_row;
        &self.hits[start..start + self.per_row]
    }

    /// The extended rows, back to back.
    fn build_flat(&self, pos: &[usize]) -> Vec<u8> {
        let new = (self.v - 1) as u8;
        let mut flat = Vec::with_capacity(self.rows.len() * self.v);
        for (row, &p) in self.rows.iter().zip(pos) {
            flat.extend_from_slice(&row.row()[..p]);
            flat.push(new);
            flat.extend_from_slice(&row.row()[p..]);
        }
        flat
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn for_each_subset(n: usize, k: usize, start: usize, picks: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if picks.len() == k {
        f(picks);
        return;
    }
    for c in start..=(n - (k - picks.len())) {
        picks.push(c);
        for_each_subset(n, k, c + 1, picks, f);
        picks.pop();
    }
}

/// Completed placements canonicalised together, in parallel.
const PENDING_BATCH: usize = 4096;

enum Target<'a> {
    Fixed(&'a [u64]),
    Dynamic(&'a [Distribution]),
}

struct Run<'a> {
    ext: &'a Extender<'a>,
    target: Target<'a>,
    ctl: &'a Control,
    ledger: Vec<u16>,
    cols: Vec<u64>,
    pos: Vec<usize>,
    /// Indices into the dynamic list still consistent, one list per depth.
    live: Vec<Vec<u32>>,
    nodes: u64,
    /// Completed placements awaiting canonicalisation, rows back to back.
    pending: Vec<Vec<u8>>,
    found: BTreeSet<CanonicalForm>,
}

impl<'a> Run<'a> {
    fn new(ext: &'a Extender<'a>, target: Target<'a>, ctl: &'a Control) -> Self {
        let n = ext.rows.len();
        let mut live = vec![Vec::new(); n + 1];
        if let Target::Dynamic(list) = &target {
            live[0] = (0..list.len() as u32).collect();
        }
        Run {
            ext,
            target,
            ctl,
            ledger: vec![0; ext.ledger_len],
            cols: vec![0; ext.v],
            pos: vec![0; n],
            live,
            nodes: 0,
            pending: Vec::new(),
            found: BTreeSet::new(),
        }
    }

    /// Adds row `r` at column `p` to the ledger, unless a cell would exceed λ.
    fn place(&mut self, r: usize, p: usize) -> bool {
        let cells = self.ext.cells(r, p);
        for (k, &c) in cells.iter().enumerate() {
            let cell = &mut self.ledger[c as usize];
            if *cell == self.ext.lambda {
                for &c in &cells[..k] {
                    self.ledger[c as usize] -= 1;
                }
                return false;
            }
            *cell += 1;
        }
        true
    }

    fn unplace(&mut self, r: usize, p: usize) {
        for &c in self.ext.cells(r, p) {
            self.ledger[c as usize] -= 1;
        }
    }

    /// Whether column `p` can take another row; for the dynamic list this
    /// also prepares the list for the next depth.
    fn column_open(&mut self, r: usize, p: usize) -> bool {
        let want = self.cols[p] + 1;
        match self.target {
            Target::Fixed(d) => d[p] >= want,
            Target::Dynamic(list) => {
                let (cur, next) = self.live.split_at_mut(r + 1);
                let next = &mut next[0];
                next.clear();
                next.extend(cur[r].iter().copied().filter(|&i| list[i as usize][p] >= want));
                !next.is_empty()
            }
        }
    }

    fn flush(&mut self) {
        let v = self.ext.v;
        let forms: Vec<CanonicalForm> =
            self.pending.par_iter().map(|flat| CanonicalForm::from_flat(v, flat)).collect();
        self.pending.clear();
        self.found.extend(forms);
    }

    fn dfs(&mut self, r: usize) {
        self.nodes += 1;
        if self.nodes & 0x3fff == 0 && self.ctl.poll() {
            return;
        }
        if self.ctl.stopped() {
            return;
        }
        let n = self.ext.rows.len();
        if r == n {
            let flat = self.ext.build_flat(&self.pos);
            self.pending.push(flat);
            if self.pending.len() >= PENDING_BATCH {
                self.flush();
            }
            return;
        }
        // Identical rows take non-decreasing positions.
        let start = if r > 0 && self.ext.rows[r] == self.ext.rows[r - 1] { self.pos[r - 1] } else { 0 };
        for p in start..self.ext.v {
            if !self.column_open(r, p) || !self.place(r, p) {
                continue;
            }
            self.cols[p] += 1;
            self.pos[r] = p;
            self.dfs(r + 1);
            self.cols[p] -= 1;
            self.unplace(r, p);
        }
    }
}

/// All extensions of one base class whose new-symbol distribution lies in
/// `survivors`, as canonical forms.
fn extend_one(
    base: &PermArray,
    t: usize,
    lambda: u64,
    survivors: &[Distribution],
    method: Method,
    ctl: &Control,
) -> Result<BTreeSet<CanonicalForm>> {
    let ext = Extender::new(base, t, lambda)?;
    if ctl.poll() {
        return Ok(BTreeSet::new());
    }
    match method {
        Method::Fixed => {
            let mut found = BTreeSet::new();
            for d in survivors {
                let mut run = Run::new(&ext, Target::Fixed(d), ctl);
                run.dfs(0);
                run.flush();
                found.append(&mut run.found);
            }
            Ok(found)
        }
        Method::Dynamic => {
            let mut run = Run::new(&ext, Target::Dynamic(survivors), ctl);
            if !survivors.is_empty() {
                run.dfs(0);
            }
            run.flush();
            Ok(run.found)
        }
    }
}

/// Every PSCA(v+1, t, λ), up to isomorphism, obtained by inserting the new
/// symbol `v` into each row of `x`, returned as sorted canonical
/// representatives.
pub fn extend_class(x: &PermArray, t: usize, method: Method) -> Result<Vec<PermArray>> {
    let res = verify(x, t)?;
    let Some(lambda) = res.lambda else {
        return input(format!("the base array is not a PSCA of strength {t}"));
    };
    let p = Params::new(x.v() + 1, t, lambda)?;
    let levels = chain_levels(p);
    let survivors = levels.last().and_then(|l| l.survivors.as_deref()).unwrap_or_default();
    let ctl = Control::new(None);
    let found = extend_one(&canonical_form(x).to_array(), t, lambda, survivors, method, &ctl)?;
    Ok(found.iter().map(CanonicalForm::to_array).collect())
}

/// Runs [`build_catalogue_streaming`] without a sink.
pub fn build_catalogue(p: Params, opts: &BuildOptions) -> Result<Catalogue> {
    build_catalogue_streaming(p, opts, &mut |_, _| Ok(()))
}

/// Builds the catalogue for `p` level by level. Final-level classes are
/// handed to `sink` as soon as they are confirmed new, together with their
/// group flag; the returned catalogue lists them in canonical order.
pub fn build_catalogue_streaming(
    p: Params,
    opts: &BuildOptions,
    sink: &mut dyn FnMut(&PermArray, bool) -> Result<()>,
) -> Result<Catalogue> {
    let (t, lambda) = (p.t, p.lambda);
    let start = match &opts.seed {
        Some(x) => {
            if x.v() > p.v || x.v() < t {
                return input(format!("seed class has {} symbols, outside {t}..={}", x.v(), p.v));
            }
            if verify(x, t)?.lambda != Some(lambda) {
                return input(format!("seed class is not a PSCA({},{t},{lambda})", x.v()));
            }
            x.clone()
        }
        None => PermArray::symmetric(t, lambda as usize),
    };
    if let Some(d) = &opts.require_distribution {
        if d.len() != p.v {
            return input(format!("required distribution has length {}, expected {}", d.len(), p.v));
        }
    }
    let ctl = Control::new(opts.time_limit);
    let chain = chain_levels(p);
    let mut level = start.v();
    let mut classes: Vec<CanonicalForm> = vec![canonical_form(&start)];
    let mut complete = true;
    if level == p.v {
        classes.retain(|c| meets_requirement(&c.to_array(), opts.require_distribution.as_deref()));
        let reps = classes.iter().map(CanonicalForm::to_array).collect::<Vec<_>>();
        for x in &reps {
            sink(x, is_group(x))?;
        }
    }
    while level < p.v {
        let next = level + 1;
        let last = next == p.v;
        let all_survivors = chain[next - t].survivors.as_deref().unwrap_or_default();
        let required: Vec<Distribution>;
        let survivors = match (&opts.require_distribution, last) {
            (Some(d), true) => {
                required = all_survivors.iter().filter(|s| *s == d).cloned().collect();
                &required[..]
            }
            _ => all_survivors,
        };
        let bases: Vec<PermArray> = classes
            .iter()
            .map(CanonicalForm::to_array)
            .filter(|x| !last || base_compatible(x, opts.require_distribution.as_deref()))
            .collect();
        let chunk = 4 * rayon::current_num_threads().max(1);
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        let mut capped = false;
        for group in bases.chunks(chunk) {
            let results: Vec<Result<BTreeSet<CanonicalForm>>> =
                group.par_iter().map(|x| extend_one(x, t, lambda, survivors, opts.method, &ctl)).collect();
            let mut merged: BTreeSet<CanonicalForm> = BTreeSet::new();
            for r in results {
                merged.append(&mut r?);
            }
            for c in merged {
                if seen.contains(&c) {
                    continue;
                }
                if last {
                    let x = c.to_array();
                    if !meets_requirement(&x, opts.require_distribution.as_deref()) {
                        continue;
                    }
                    if opts.max_classes.is_some_and(|m| seen.len() >= m) {
                        capped = true;
                        break;
                    }
                    sink(&x, is_group(&x))?;
                } else if opts.max_classes.is_some_and(|m| seen.len() >= m) {
                    capped = true;
                    break;
                }
                seen.insert(c);
            }
            if capped || ctl.stopped() {
                break;
            }
        }
        if capped || ctl.stopped() {
            complete = false;
        }
        classes = seen.into_iter().collect();
        level = next;
        if ctl.stopped() {
            if level < p.v {
                classes.clear();
            }
            break;
        }
    }
    let reps: Vec<PermArray> = if level == p.v { classes.iter().map(CanonicalForm::to_array).collect() } else { Vec::new() };
    let is_group = reps.iter().map(is_group).collect();
    Ok(Catalogue { params: p, classes: reps, is_group, complete })
}

fn meets_requirement(x: &PermArray, d: Option<&[u64]>) -> bool {
    match d {
        None => true,
        Some(d) => (0..x.v()).all(|w| x.distribution_vector(w).is_ok_and(|e| e == d)),
    }
}

/// Deleting the new symbol from an array where every symbol has distribution
/// `d` leaves distributions compatible with `d`.
fn base_compatible(x: &PermArray, d: Option<&[u64]>) -> bool {
    match d {
        None => true,
        Some(d) => (0..x.v()).all(|w| {
            x.distribution_vector(w).is_ok_and(|e| compatible(d, &e).unwrap_or(false))
        }),
    }
}

/// The class with the most automorphisms; ties go to the earliest class.
pub fn largest_automorphism_class(c: &Catalogue) -> Option<usize> {
    let counts: Vec<u64> = c.classes.par_iter().map(automorphism_count).collect();
    let best = *counts.iter().max()?;
    counts.iter().position(|&n| n == best)
}
