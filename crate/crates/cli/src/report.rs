use std::fmt;

use grundy_core::reductions::Certificate;
use grundy_core::{ColorAssignment, VertexOrdering};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    Yes,
    No,
    ProbablyNo,
    /// A number was computed; see `value`.
    Exact,
    BudgetExceeded,
}

/// One `solve` result. Vertex ids in certificates are 1-based.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub problem: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub answer: Answer,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub elapsed_ms: f64,
}

pub fn ordering_certificate(sigma: &VertexOrdering) -> Certificate {
    Certificate::Ordering(VertexOrdering(sigma.as_slice().iter().map(|v| v + 1).collect()))
}

pub fn assignment_certificate(phi: &ColorAssignment) -> Certificate {
    Certificate::Assignment(phi.clone())
}

/// A certificate produced by a solver did not pass re-validation.
#[derive(Debug)]
pub struct CertificateFailure(pub String);

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "certificate failed validation: {}", self.0)
    }
}

impl std::error::Error for CertificateFailure {}

pub mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const BUDGET: u8 = 2;
    pub const CERTIFICATE: u8 = 3;
}
