use anyhow::{Context, Result};
use grundy_core::dimacs::write_dimacs_graph;
use grundy_core::reductions::{
    cgc_witness_ordering, fvs_witness_coloring, gen_cgc_reduction, gen_fvs_reduction, gen_nae_reduction,
    nae_witness_coloring, Certificate, CnfFormula, ReductionOutput, Sidecar,
};
use grundy_core::witness::{binomial_tree, canonical_level_coloring, remove_dominant_subtrees};
use grundy_core::{first_fit, is_connected_ordering, validate_partition, ColorAssignment, Graph, Variant};
use serde::Serialize;

use crate::report::CertificateFailure;

/// Sidecar for the plain tree generators. Vertex ids are 1-based.
#[derive(Debug, Clone, Serialize)]
pub struct TreeSidecar {
    pub generator: &'static str,
    pub vertices: usize,
    pub edges: usize,
    /// Color of the root in the canonical coloring.
    pub k: usize,
    pub root: usize,
    pub parents: Vec<usize>,
    pub labels: Vec<String>,
    pub coloring: ColorAssignment,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum AnySidecar {
    Tree(TreeSidecar),
    Reduction(Sidecar),
}

pub struct Generated {
    pub dimacs: String,
    pub sidecar: AnySidecar,
}

fn tree_labels(g: &Graph) -> Vec<String> {
    g.labels().map(|l| l.to_vec()).unwrap_or_else(|| (1..=g.n()).map(|v| v.to_string()).collect())
}

pub fn binomial(k: usize) -> Result<Generated> {
    let (t, g) = binomial_tree(k)?;
    let coloring = canonical_level_coloring(&t)?;
    if !validate_partition(&g, &coloring, Variant::Proper)? {
        return Err(CertificateFailure("canonical coloring".into()).into());
    }
    Ok(Generated {
        dimacs: write_dimacs_graph(&g),
        sidecar: AnySidecar::Tree(TreeSidecar {
            generator: "binomial",
            vertices: g.n(),
            edges: g.m(),
            k,
            root: t.root() + 1,
            parents: Vec::new(),
            labels: tree_labels(&g),
            coloring,
        }),
    })
}

pub fn pruned(s: usize, l: usize, m: usize) -> Result<Generated> {
    let p = remove_dominant_subtrees(s, l, m)?;
    Ok(Generated {
        dimacs: write_dimacs_graph(&p.graph),
        sidecar: AnySidecar::Tree(TreeSidecar {
            generator: "pruned",
            vertices: p.graph.n(),
            edges: p.graph.m(),
            k: s,
            root: p.root() + 1,
            parents: p.parents.iter().map(|v| v + 1).collect(),
            labels: p.labels.clone(),
            coloring: p.canonical.clone(),
        }),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    Nae(Variant),
    Fvs { q: usize },
    Cgc,
}

/// Builds a reduction instance. With `witness`, a satisfying assignment is
/// found by brute force and the matching certificate is checked and attached.
pub fn reduction(f: &CnfFormula, kind: Reduction, witness: bool) -> Result<Generated> {
    let out = match kind {
        Reduction::Nae(variant) => gen_nae_reduction(f, variant)?,
        Reduction::Fvs { q } => gen_fvs_reduction(f, q)?,
        Reduction::Cgc => gen_cgc_reduction(f)?,
    };
    let certificate = if witness { certificate(&out, f, kind)? } else { None };
    Ok(Generated { dimacs: write_dimacs_graph(&out.graph), sidecar: AnySidecar::Reduction(out.sidecar(certificate)) })
}

fn certificate(out: &ReductionOutput, f: &CnfFormula, kind: Reduction) -> Result<Option<Certificate>> {
    let g = &out.graph;
    let k = out.k;
    let cert = match kind {
        Reduction::Nae(variant) => {
            let Some(a) = f.brute_force_nae().context("searching for an NAE assignment")? else {
                return Ok(None);
            };
            let phi = nae_witness_coloring(out, f, &a)?;
            let ok = validate_partition(g, &phi, variant)? && phi.max_color() as usize == k;
            if !ok {
                return Err(CertificateFailure("NAE witness coloring".into()).into());
            }
            Certificate::Assignment(phi)
        }
        Reduction::Fvs { .. } => {
            let Some(a) = f.brute_force_sat().context("searching for a satisfying assignment")? else {
                return Ok(None);
            };
            let phi = fvs_witness_coloring(out, f, &a)?;
            let ok = validate_partition(g, &phi, Variant::Proper)? && phi.max_color() as usize == k;
            if !ok {
                return Err(CertificateFailure("feedback-vertex-set witness coloring".into()).into());
            }
            Certificate::Assignment(phi)
        }
        Reduction::Cgc => {
            let Some(a) = f.brute_force_sat().context("searching for a satisfying assignment")? else {
                return Ok(None);
            };
            let sigma = cgc_witness_ordering(out, f, &a)?;
            let ok = is_connected_ordering(g, &sigma) && first_fit(g, &sigma)?.max_color() as usize == k;
            if !ok {
                return Err(CertificateFailure("connected witness ordering".into()).into());
            }
            Certificate::Ordering(sigma)
        }
    };
    Ok(Some(cert))
}
