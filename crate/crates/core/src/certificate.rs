//! JSON certificate interchange.
//!
//! Schema: `{"n": int, "branch": [int], "paths": [{"u": int, "v": int,
//! "vertices": [int]}]}` with pairs sorted lexicographically, `u < v`, and
//! each vertex list running from `u` to `v`. Optional `method` and `trace`
//! fields tag the producing construction and its trace file.

use crate::graph::{Graph, Path};
use crate::immersion::{verify_immersion, Immersion, VerificationReport, Violation};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatePath {
    pub u: usize,
    pub v: usize,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub branch: Vec<usize>,
    pub paths: Vec<CertificatePath>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<String>,
}

impl Certificate {
    pub fn from_immersion(
        n: usize,
        im: &Immersion,
        method: Option<&str>,
        trace: Option<&str>,
    ) -> Self {
        Certificate {
            n,
            branch: im.branch().to_vec(),
            paths: im
                .paths()
                .map(|(&(u, v), p)| CertificatePath {
                    u,
                    v,
                    vertices: p.vertices().to_vec(),
                })
                .collect(),
            method: method.map(str::to_owned),
            trace: trace.map(str::to_owned),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Rebuilds the in-memory immersion, reporting schema problems
    /// (unsorted or duplicate pairs, duplicate branch entries) as
    /// violations rather than failing. Unsorted pairs are normalized by
    /// reversing the path so that later checks still apply.
    pub fn to_immersion(&self) -> (Immersion, Vec<Violation>) {
        let mut issues = Vec::new();
        let mut branch = crate::set::VertexSet::new();
        for &b in &self.branch {
            if branch.contains(b) {
                issues.push(Violation::Malformed {
                    detail: format!("branch vertex {b} listed twice"),
                });
            }
            branch.insert(b);
        }
        let mut im = Immersion::new(branch);
        for entry in &self.paths {
            let (key, vertices) = if entry.u == entry.v {
                issues.push(Violation::Malformed {
                    detail: format!("pair ({}, {}) is degenerate", entry.u, entry.v),
                });
                continue;
            } else if entry.u > entry.v {
                issues.push(Violation::Malformed {
                    detail: format!("pair ({}, {}) is not sorted", entry.u, entry.v),
                });
                let mut rev = entry.vertices.clone();
                rev.reverse();
                ((entry.v, entry.u), rev)
            } else {
                ((entry.u, entry.v), entry.vertices.clone())
            };
            if !im.insert_raw(key, Path::new(vertices)) {
                issues.push(Violation::Malformed {
                    detail: format!("pair ({}, {}) listed twice", key.0, key.1),
                });
            }
        }
        (im, issues)
    }
}

/// Verifies a parsed certificate against `g`: schema findings first, then
/// the full immersion checks.
pub fn verify_certificate(
    g: &Graph,
    cert: &Certificate,
    require_strong: bool,
    require_totally_odd: bool,
) -> VerificationReport {
    let mut pre = Vec::new();
    if cert.n != g.n() {
        pre.push(Violation::Malformed {
            detail: format!("certificate is for n = {}, graph has n = {}", cert.n, g.n()),
        });
    }
    let (im, schema) = cert.to_immersion();
    pre.extend(schema);

    let mut report = verify_immersion(g, &im, require_strong, require_totally_odd);
    if !pre.is_empty() {
        report.valid = false;
        pre.extend(report.violations);
        report.violations = pre;
    }
    report
}
