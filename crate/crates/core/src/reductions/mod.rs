//! Generators for three hardness gadgets, each with a witness builder for
//! the satisfiable side.
//!
//! * [`gen_nae_reduction`]: monotone NAE-3-SAT to (weak) Grundy coloring.
//! * [`gen_fvs_reduction`]: SAT to Grundy coloring with a small feedback
//!   vertex set.
//! * [`gen_cgc_reduction`]: 3-SAT with at most three occurrences per variable
//!   to connected Grundy coloring with `k = 7`.

mod cgc;
mod cnf;
mod fvs;
mod nae;

use serde::{Deserialize, Serialize};

use crate::coloring::{ColorAssignment, VertexOrdering};
use crate::graph::Graph;

pub use cgc::{cgc_witness_ordering, gen_cgc_reduction, CgcLayout, CGC_K, GADGET_EDGES};
pub use cnf::{read_dimacs_cnf, write_dimacs_cnf, CnfFormula, Literal, Violation};
pub use fvs::{fvs_parameters, fvs_witness_coloring, gen_fvs_reduction, zeta, FvsLayout, FvsParameters};
pub use nae::{gen_nae_reduction, nae_witness_coloring, NaeLayout};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    NaeWeak,
    NaeProper,
    Fvs,
    Cgc,
}

/// Where the named parts of a generated graph ended up.
#[derive(Debug, Clone)]
pub enum Layout {
    Nae(NaeLayout),
    Fvs(FvsLayout),
    Cgc(CgcLayout),
}

/// A satisfiable-side certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "lowercase")]
pub enum Certificate {
    Assignment(ColorAssignment),
    Ordering(VertexOrdering),
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub kind: ReductionKind,
    pub graph: Graph,
    /// Target number of colors.
    pub k: usize,
    /// Only for the feedback-vertex-set construction.
    pub feedback_set: Option<Vec<usize>>,
    pub layout: Layout,
}

/// JSON-friendly description of a generated instance. Vertex ids are 1-based
/// to match the DIMACS file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sidecar {
    pub reduction: ReductionKind,
    pub vertices: usize,
    pub edges: usize,
    pub k: usize,
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feedback_set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl ReductionOutput {
    pub fn labels(&self) -> &[String] {
        self.graph.labels().expect("generated graphs are labeled")
    }

    /// Vertex id of a label. Linear time.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.graph.vertex_by_label(label)
    }

    pub fn sidecar(&self, certificate: Option<Certificate>) -> Sidecar {
        let certificate = certificate.map(|c| match c {
            Certificate::Ordering(o) => Certificate::Ordering(VertexOrdering(o.0.iter().map(|v| v + 1).collect())),
            other => other,
        });
        Sidecar {
            reduction: self.kind,
            vertices: self.graph.n(),
            edges: self.graph.m(),
            k: self.k,
            labels: self.labels().to_vec(),
            feedback_set: self.feedback_set.as_ref().map(|f| f.iter().map(|v| v + 1).collect()),
            certificate,
        }
    }
}

/// `⌈log2 m⌉` for `m >= 1`.
pub(crate) fn ceil_log2(m: usize) -> usize {
    debug_assert!(m >= 1);
    (usize::BITS - (m - 1).leading_zeros()) as usize
}
