//! Catalogues of isomorphism classes and their JSON-lines file format.
//!
//! One object per class, `{"v","t","lambda","rows","is_group"}`, followed by
//! a trailer `{"complete","count"}`. Class lines are appended as soon as the
//! classes are confirmed, so a file without a trailer is an interrupted run.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::array::PermArray;
use crate::distributions::{Distribution, Params};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Canonical class representatives for one parameter set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalogue {
    pub params: Params,
    /// Canonical representatives in increasing order of their encoding.
    pub classes: Vec<PermArray>,
    /// Per class: whether the rows form a group after relabelling.
    pub is_group: Vec<bool>,
    /// False when a resource cap cut the enumeration short.
    pub complete: bool,
}

impl Catalogue {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// The distribution vectors that occur in some class, closed under reversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realised {
    pub vectors: BTreeSet<Distribution>,
    /// Copied from the catalogue; an incomplete catalogue gives a lower bound.
    pub complete: bool,
}

pub fn realised_distributions(c: &Catalogue) -> Result<Realised> {
    let mut vectors = BTreeSet::new();
    for x in &c.classes {
        for w in 0..x.v() {
            let d = x.distribution_vector(w)?;
            let mut r = d.clone();
            r.reverse();
            vectors.insert(d);
            vectors.insert(r);
        }
    }
    Ok(Realised { vectors, complete: c.complete })
}

pub fn group_flag_count(c: &Catalogue) -> usize {
    c.is_group.iter().filter(|&&g| g).count()
}

#[derive(Serialize, Deserialize)]
struct ClassLine {
    v: usize,
    t: usize,
    lambda: u64,
    rows: Vec<Vec<u8>>,
    is_group: bool,
}

#[derive(Serialize, Deserialize)]
struct Trailer {
    complete: bool,
    count: usize,
    // Parameters are repeated so that an empty catalogue still records them.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<u64>,
}

/// Appends class lines to a writer and closes with the trailer.
pub struct CatalogueWriter<W: Write> {
    out: W,
    params: Params,
    count: usize,
}

impl<W: Write> CatalogueWriter<W> {
    pub fn new(out: W, params: Params) -> Self {
        CatalogueWriter { out, params, count: 0 }
    }

    pub fn write_class(&mut self, x: &PermArray, is_group: bool) -> Result<()> {
        let line = ClassLine {
            v: self.params.v,
            t: self.params.t,
            lambda: self.params.lambda,
            rows: x.rows().iter().map(|r| r.row().to_vec()).collect(),
            is_group,
        };
        serde_json::to_writer(&mut self.out, &line)?;
        self.out.write_all(b"\n")?;
        self.out.flush()?;
        self.count += 1;
        Ok(())
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn finish(mut self, complete: bool) -> Result<W> {
        let p = self.params;
        let trailer = Trailer { complete, count: self.count, v: Some(p.v), t: Some(p.t), lambda: Some(p.lambda) };
        serde_json::to_writer(&mut self.out, &trailer)?;
        self.out.write_all(b"\n")?;
        self.out.flush()?;
        Ok(self.out)
    }
}

/// Writes a whole catalogue.
pub fn write_catalogue<W: Write>(out: W, c: &Catalogue) -> Result<W> {
    let mut w = CatalogueWriter::new(out, c.params);
    for (x, &g) in c.classes.iter().zip(&c.is_group) {
        w.write_class(x, g)?;
    }
    w.finish(c.complete)
}

/// Reads a catalogue file. A missing trailer marks the catalogue incomplete;
/// a trailer whose count disagrees with the class lines is an error.
pub fn read_catalogue<R: BufRead>(input: R) -> Result<Catalogue> {
    let mut params: Option<Params> = None;
    let mut classes = Vec::new();
    let mut is_group = Vec::new();
    let mut trailer: Option<Trailer> = None;
    for (n, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = n + 1;
        let parse_err = |msg: String| Error::Parse { line: lineno, msg };
        if line.trim().is_empty() {
            continue;
        }
        if trailer.is_some() {
            return Err(parse_err("content after the trailer line".into()));
        }
        let value: serde_json::Value = serde_json::from_str(&line).map_err(|e| parse_err(e.to_string()))?;
        if value.get("rows").is_some() {
            let c: ClassLine = serde_json::from_value(value).map_err(|e| parse_err(e.to_string()))?;
            let p = Params::new(c.v, c.t, c.lambda).map_err(|e| parse_err(e.to_string()))?;
            if params.is_some_and(|q| q != p) {
                return Err(parse_err("class parameters differ from earlier lines".into()));
            }
            params = Some(p);
            let rows = c
                .rows
                .into_iter()
                .map(Permutation::from_row)
                .collect::<Result<Vec<_>>>()
                .map_err(|e| parse_err(e.to_string()))?;
            classes.push(PermArray::new(p.v, rows).map_err(|e| parse_err(e.to_string()))?);
            is_group.push(c.is_group);
        } else {
            let t: Trailer = serde_json::from_value(value).map_err(|e| parse_err(e.to_string()))?;
            if t.count != classes.len() {
                return Err(parse_err(format!("trailer count {} but {} class lines", t.count, classes.len())));
            }
            if let (Some(v), Some(tt), Some(l)) = (t.v, t.t, t.lambda) {
                let p = Params::new(v, tt, l).map_err(|e| parse_err(e.to_string()))?;
                if params.is_some_and(|q| q != p) {
                    return Err(parse_err("trailer parameters differ from class lines".into()));
                }
                params = Some(p);
            }
            trailer = Some(t);
        }
    }
    let params = params.ok_or_else(|| Error::Input("catalogue records no parameters".into()))?;
    Ok(Catalogue { params, classes, is_group, complete: trailer.is_some_and(|t| t.complete) })
}
