//! JSON documents for HDA and DOT export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::labels::infer_labeling;
use crate::precubical::{CubeSpec, Hda, PrecubicalSet};

/// One cube of a document. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubeRecord {
    pub d0: Vec<String>,
    pub d1: Vec<String>,
    pub dim: usize,
    pub id: String,
    /// Layout hint for viewers; ignored by every algorithm.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pos: Option<[f64; 2]>,
}

/// On-disk form of an HDA. Cube order is significant: it fixes the
/// internal indices and hence canonical path representatives.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HdaDocument {
    pub cubes: Vec<CubeRecord>,
    pub initial: String,
    /// Labels of 1-cubes; higher labels are inferred.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("semantic error: {0}")]
    Semantic(#[from] crate::error::Error),
}

impl HdaDocument {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        serde_json::from_str(text).map_err(|e| IoError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn to_hda(&self) -> Result<Hda, IoError> {
        let specs = self
            .cubes
            .iter()
            .map(|c| CubeSpec { id: c.id.clone(), dim: c.dim, d0: c.d0.clone(), d1: c.d1.clone() })
            .collect();
        let hda = Hda::new(PrecubicalSet::new(specs)?, &self.initial)?;
        match &self.labels {
            None => Ok(hda),
            Some(labels) => {
                let l = infer_labeling(&hda, labels)?;
                Ok(hda.with_labeling(l)?)
            }
        }
    }

    pub fn from_hda(h: &Hda) -> Self {
        let set = h.set();
        HdaDocument {
            cubes: set
                .to_specs()
                .into_iter()
                .map(|s| CubeRecord { d0: s.d0, d1: s.d1, dim: s.dim, id: s.id, pos: None })
                .collect(),
            initial: set.id(h.initial()).to_string(),
            labels: h.labeling().map(|l| l.edge_labels(set)),
        }
    }

    pub fn without_positions(&self) -> Self {
        let mut d = self.clone();
        for c in &mut d.cubes {
            c.pos = None;
        }
        d
    }
}

/// Parses and validates a document, inferring higher labels.
pub fn parse_hda(text: &str) -> Result<Hda, IoError> {
    HdaDocument::parse(text)?.to_hda()
}

pub fn serialize_hda(h: &Hda) -> String {
    HdaDocument::from_hda(h).to_json()
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn record_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        if matches!(ch, '|' | '{' | '}' | '<' | '>') {
            out.push('\\');
        }
        out.push(ch);
    }
    out
}

/// DOT digraph of the 1-skeleton. Higher cubes become record nodes listing
/// their faces. Output is sorted by id.
pub fn emit_dot(h: &Hda) -> String {
    let set = h.set();
    let mut by_dim: BTreeMap<usize, Vec<_>> = BTreeMap::new();
    for c in set.cubes() {
        by_dim.entry(set.dim(c).min(2)).or_default().push(c);
    }
    for v in by_dim.values_mut() {
        v.sort_by(|a, b| set.id(*a).cmp(set.id(*b)));
    }
    let mut out = String::from("digraph hda {\n  rankdir=LR;\n");
    for &v in by_dim.get(&0).into_iter().flatten() {
        let shape = if v == h.initial() { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  {} [shape={shape}];", quote(set.id(v)));
    }
    for &e in by_dim.get(&1).into_iter().flatten() {
        let label = match h.labeling() {
            Some(l) => format!("{} {}", l.word(e), set.id(e)),
            None => set.id(e).to_string(),
        };
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(set.id(set.face(e, 1, 0))),
            quote(set.id(set.face(e, 1, 1))),
            quote(&label)
        );
    }
    for &c in by_dim.get(&2).into_iter().flatten() {
        let names = |fs: &[crate::precubical::CubeId]| fs.iter().map(|&f| set.id(f)).collect::<Vec<_>>().join(" ");
        let word = h.labeling().map(|l| format!(" {}", l.word(c))).unwrap_or_default();
        let fields = [
            format!("{}{word}", set.id(c)),
            format!("d0: {}", names(set.lower_faces(c))),
            format!("d1: {}", names(set.upper_faces(c))),
        ];
        let label = fields.iter().map(|f| record_escape(f)).collect::<Vec<_>>().join("|");
        let _ = writeln!(
            out,
            "  {} [shape=record, style=filled, fillcolor=gray90, label={}];",
            quote(&format!("cube:{}", set.id(c))),
            quote(&label)
        );
    }
    out.push_str("}\n");
    out
}
