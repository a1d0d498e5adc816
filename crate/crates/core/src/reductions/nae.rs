//! Monotone NAE-3-SAT to weak / proper Grundy coloring.
//!
//! `T_k` with `k = ⌈log2 m⌉ + 5` loses `m` dominant `T_3` subtrees. The parent
//! `f_j` of the `j`-th removed subtree gets a clause vertex `v(C_j)`, adjacent
//! to the vertices `v(x_i)` of its variables. The variable vertices hang off a
//! star center `c` (weak) or each get a private partner `v(¬x_i)` (proper).

use crate::coloring::{validate_partition, Color, ColorAssignment, Variant, UNCOLORED};
use crate::error::{Error, Result};
use crate::graph::GraphBuilder;
use crate::witness::remove_dominant_subtrees;

use super::{ceil_log2, CnfFormula, Layout, ReductionKind, ReductionOutput};

#[derive(Debug, Clone)]
pub struct NaeLayout {
    pub variant: Variant,
    pub root: usize,
    pub parents: Vec<usize>,
    /// Tree vertices and their canonical colors.
    pub tree: Vec<(usize, Color)>,
    pub center: Option<usize>,
    pub variables: Vec<usize>,
    pub negations: Vec<usize>,
    pub clauses: Vec<usize>,
}

pub fn gen_nae_reduction(f: &CnfFormula, variant: Variant) -> Result<ReductionOutput> {
    if variant == Variant::Connected {
        return Err(Error::ConnectedVariantUnsupported);
    }
    f.is_monotone()?;
    f.clauses_at_most(3)?;
    let m = f.m();
    if m == 0 {
        return Err(Error::Precondition("the formula has no clauses".into()));
    }
    let k = ceil_log2(m) + 5;
    let pruned = remove_dominant_subtrees(k, 3, m)?;

    let mut b = GraphBuilder::new(0);
    for label in &pruned.labels {
        b.add_vertex(label.clone());
    }
    for v in 0..pruned.graph.n() {
        if let Some(p) = pruned.tree.parent(v) {
            b.add_edge(p, v)?;
        }
    }
    let center = (variant == Variant::Weak).then(|| b.add_vertex("c"));
    let variables: Vec<usize> = (1..=f.n()).map(|i| b.add_vertex(format!("v(x{i})"))).collect();
    let mut negations = Vec::new();
    for (i, &x) in variables.iter().enumerate() {
        match center {
            Some(c) => b.add_edge(c, x)?,
            None => {
                let nx = b.add_vertex(format!("v(¬x{})", i + 1));
                b.add_edge(nx, x)?;
                negations.push(nx);
            }
        }
    }
    let mut clauses = Vec::with_capacity(m);
    for (j, clause) in f.clauses().iter().enumerate() {
        let cj = b.add_vertex(format!("v(C{})", j + 1));
        b.add_edge(cj, pruned.parents[j])?;
        for lit in clause {
            b.add_edge(cj, variables[lit.var])?;
        }
        clauses.push(cj);
    }

    let layout = NaeLayout {
        variant,
        root: pruned.root(),
        parents: pruned.parents.clone(),
        tree: (0..pruned.graph.n()).map(|v| (v, pruned.canonical.get(v))).collect(),
        center,
        variables,
        negations,
        clauses,
    };
    Ok(ReductionOutput {
        kind: if variant == Variant::Weak { ReductionKind::NaeWeak } else { ReductionKind::NaeProper },
        graph: b.build(),
        k,
        feedback_set: None,
        layout: Layout::Nae(layout),
    })
}

/// Colors the graph from an NAE-satisfying assignment so that the tree root
/// receives color `k`.
pub fn nae_witness_coloring(out: &ReductionOutput, f: &CnfFormula, assignment: &[bool]) -> Result<ColorAssignment> {
    let Layout::Nae(layout) = &out.layout else {
        return Err(Error::InvalidParameter("not an NAE reduction output".into()));
    };
    if let Some(j) = f.first_nae_violation(assignment)? {
        return Err(Error::NotSatisfying(format!("clause {} has all literals equal", j + 1)));
    }
    if layout.clauses.len() != f.m() || layout.variables.len() != f.n() {
        return Err(Error::InvalidParameter("formula does not match the reduction output".into()));
    }
    let mut phi = ColorAssignment::uncolored(out.graph.n());
    for &(v, c) in &layout.tree {
        phi.set(v, c);
    }
    if let Some(c) = layout.center {
        phi.set(c, 1);
    }
    for (i, &x) in layout.variables.iter().enumerate() {
        if assignment[i] {
            phi.set(x, 2);
            if let Some(&nx) = layout.negations.get(i) {
                phi.set(nx, 1);
            }
        } else {
            phi.set(x, 1);
            if let Some(&nx) = layout.negations.get(i) {
                phi.set(nx, UNCOLORED);
            }
        }
    }
    for &cj in &layout.clauses {
        phi.set(cj, 3);
    }
    debug_assert!(validate_partition(&out.graph, &phi, layout.variant).unwrap_or(false));
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_degrees() {
        let f = CnfFormula::from_ints(3, &[&[1, 2, 3], &[1, 2]]).unwrap();
        let out = gen_nae_reduction(&f, Variant::Weak).unwrap();
        assert_eq!(out.k, 6);
        let (n, m) = (f.n(), f.m());
        assert!(out.graph.n() <= n + 32 * m + 1);
        assert!(out.graph.m() <= n + 35 * m);
        let Layout::Nae(l) = &out.layout else { unreachable!() };
        for &cj in &l.clauses {
            assert!(out.graph.degree(cj) <= 4);
        }
        assert_eq!(out.labels()[l.center.unwrap()], "c");
    }

    #[test]
    fn single_clause_witness() {
        let f = CnfFormula::from_ints(3, &[&[1, 2, 3]]).unwrap();
        for variant in [Variant::Weak, Variant::Proper] {
            let out = gen_nae_reduction(&f, variant).unwrap();
            assert_eq!(out.k, 5);
            let phi = nae_witness_coloring(&out, &f, &[true, false, false]).unwrap();
            assert!(validate_partition(&out.graph, &phi, variant).unwrap());
            let Layout::Nae(l) = &out.layout else { unreachable!() };
            assert_eq!(phi.get(l.root) as usize, out.k);
            assert!(nae_witness_coloring(&out, &f, &[true, true, true]).is_err());
        }
    }

    #[test]
    fn rejects_bad_formulas() {
        let neg = CnfFormula::from_ints(2, &[&[1, -2]]).unwrap();
        assert!(matches!(gen_nae_reduction(&neg, Variant::Weak), Err(Error::Precondition(_))));
        let long = CnfFormula::from_ints(4, &[&[1, 2, 3, 4]]).unwrap();
        assert!(gen_nae_reduction(&long, Variant::Weak).is_err());
    }
}
