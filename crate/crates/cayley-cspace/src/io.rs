// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! JSON file formats: linkage input files and configuration-space result
//! files. Serialization uses shortest round-trip float formatting, so
//! identical inputs produce byte-identical outputs.

use crate::cspace::CspaceResult;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linkage::{load_linkage, Linkage};
use serde::{Deserialize, Serialize};

/// An edge length given either as a JSON number or as a decimal string
/// (the latter lets callers write exact decimals like `"4.5"`).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LengthValue {
    Number(f64),
    Decimal(String),
}

impl LengthValue {
    pub fn as_f64(&self) -> Result<f64> {
        match self {
            LengthValue::Number(x) => Ok(*x),
            LengthValue::Decimal(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidInput(format!("bad decimal length {s:?}"))),
        }
    }
}

/// On-disk linkage description:
/// `{"vertices": n, "edges": [[u, v, length], …], "base_nonedge": [u, v]}`.
/// Unknown keys are rejected.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkageFile {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, LengthValue)>,
    pub base_nonedge: (usize, usize),
}

impl LinkageFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad linkage file: {e}")))
    }

    pub fn to_linkage(&self) -> Result<Linkage> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let g = Graph::build(self.vertices, &pairs)?;
        let mut lengths = Vec::with_capacity(self.edges.len());
        for (u, v, len) in &self.edges {
            lengths.push(((*u, *v), len.as_f64()?));
        }
        load_linkage(g, &lengths, self.base_nonedge)
    }

    pub fn from_linkage(l: &Linkage) -> Self {
        LinkageFile {
            vertices: l.graph().vertex_count(),
            edges: l
                .graph()
                .edges()
                .iter()
                .map(|&(u, v)| (u, v, LengthValue::Number(l.length(u, v))))
                .collect(),
            base_nonedge: l.base_nonedge(),
        }
    }
}

/// Reads and validates a linkage file from disk.
pub fn read_linkage_file(path: &std::path::Path) -> Result<Linkage> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    LinkageFile::parse(&text)?.to_linkage()
}

/// One endpoint record in a result file: the value plus, when produced
/// analytically, the extreme step, length variant, orientation bitmask,
/// and the vertex triple that is collinear at that endpoint.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EndpointRecord {
    pub value: f64,
    pub step: Option<usize>,
    pub variant: Option<u8>,
    pub orientation: Option<u64>,
    pub collinear_triple: Option<[usize; 3]>,
}

/// On-disk configuration-space result:
/// `{"intervals": [[a, b], …], "endpoints": […], "method": "…"}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ResultFile {
    pub intervals: Vec<(f64, f64)>,
    pub endpoints: Vec<EndpointRecord>,
    pub method: String,
}

impl ResultFile {
    /// Builds the result file from a computed configuration space. Step
    /// indices and collinear triples come from the result's reduced
    /// linkage, which is what all endpoint provenance refers to.
    pub fn build(r: &CspaceResult) -> Self {
        let steps = &r.reduced.construction().steps;
        let mut endpoints = Vec::new();
        for iv in r.intervals.intervals() {
            for (value, prov) in [(iv.lo, &iv.lo_provenance), (iv.hi, &iv.hi_provenance)] {
                let mut rec = EndpointRecord {
                    value,
                    step: None,
                    variant: None,
                    orientation: None,
                    collinear_triple: None,
                };
                if let Some(p) = prov {
                    if !p.oracle_fallback {
                        rec.step = Some(p.step);
                        rec.variant = Some(p.variant);
                        rec.orientation = p.orientation_mask;
                        let s = &steps[p.step];
                        rec.collinear_triple =
                            Some([s.new_vertex, s.base_pair.0, s.base_pair.1]);
                    }
                }
                endpoints.push(rec);
            }
        }
        ResultFile {
            intervals: r
                .intervals
                .intervals()
                .iter()
                .map(|iv| (iv.lo, iv.hi))
                .collect(),
            endpoints,
            method: r.method.as_str().to_string(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad result file: {e}")))
    }

    /// Checks the schema invariants: intervals sorted and disjoint, every
    /// endpoint value equal to some interval bound.
    pub fn validate(&self) -> Result<()> {
        for w in self.intervals.windows(2) {
            if !(w[0].1 < w[1].0) {
                return Err(Error::InvalidInput("intervals not sorted/disjoint".into()));
            }
        }
        for (a, b) in &self.intervals {
            if !(a <= b) {
                return Err(Error::InvalidInput("interval with lo > hi".into()));
            }
        }
        for e in &self.endpoints {
            if !self
                .intervals
                .iter()
                .any(|&(a, b)| e.value == a || e.value == b)
            {
                return Err(Error::InvalidInput(format!(
                    "endpoint {} is not an interval bound",
                    e.value
                )));
            }
        }
        Ok(())
    }

    /// Deterministic pretty-printed JSON with trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
