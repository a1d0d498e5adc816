//! 3-SAT with at most three occurrences per variable to connected Grundy
//! coloring with target `k = 7`.
//!
//! The graph is a fixed 33-vertex gadget `a_1, .., a_33` plus two variable
//! parts: `P_1`, a fan of triangles `v v_i v̄_i` attached between `a_4` and
//! `a_6` through `i_1, i_2`, and `P_2`, a path `p_1 .. p_{3m-1}` between `a_9`
//! and `a_11` whose vertices `c_j = p_{3j-1}` stand for the clauses.

use crate::coloring::{first_fit, is_connected_ordering, VertexOrdering};
use crate::error::{Error, Result};
use crate::graph::GraphBuilder;

use super::{CnfFormula, Layout, ReductionKind, ReductionOutput};

pub const CGC_K: usize = 7;

/// Edges of the constant gadget, 1-based `a_i` indices.
pub const GADGET_EDGES: &[(usize, usize)] = &[
    // K_6 on a_28 .. a_33
    (28, 29), (28, 30), (28, 31), (28, 32), (28, 33),
    (29, 30), (29, 31), (29, 32), (29, 33),
    (30, 31), (30, 32), (30, 33),
    (31, 32), (31, 33),
    (32, 33),
    (27, 28), (27, 33),
    // long chain
    (27, 15), (15, 7), (7, 3), (3, 2), (2, 1), (1, 3), (3, 4), (4, 5), (5, 7), (7, 6), (6, 8),
    (8, 9), (9, 10), (10, 12), (12, 13), (13, 14), (14, 16), (16, 17), (17, 18), (18, 19),
    (19, 21), (21, 23),
    // cross edges
    (11, 12), (12, 15), (13, 15), (14, 15), (27, 22), (22, 20), (16, 23), (17, 23), (23, 27),
    (26, 27), (25, 26), (25, 27), (19, 20), (20, 21), (18, 24), (24, 25), (4, 25),
];

/// Gadget vertices adjacent to every clause vertex.
const CLAUSE_HUBS: [usize; 3] = [4, 21, 24];

#[derive(Debug, Clone)]
pub struct CgcLayout {
    /// `a[i - 1]` is `a_i`.
    pub a: Vec<usize>,
    pub i1: usize,
    pub i2: usize,
    pub v: usize,
    /// `literals[i] = (v_i, v̄_i)`.
    pub literals: Vec<(usize, usize)>,
    pub path: Vec<usize>,
    pub clauses: Vec<usize>,
}

pub fn gen_cgc_reduction(f: &CnfFormula) -> Result<ReductionOutput> {
    f.clauses_at_most(3)?;
    f.is_three_occ()?;
    f.no_pure_variable()?;
    let m = f.m();
    if m == 0 {
        return Err(Error::Precondition("the formula has no clauses".into()));
    }

    let mut b = GraphBuilder::new(0);
    let a: Vec<usize> = (1..=33).map(|i| b.add_vertex(format!("a{i}"))).collect();
    for &(x, y) in GADGET_EDGES {
        b.add_edge(a[x - 1], a[y - 1])?;
    }

    let i1 = b.add_vertex("i1");
    let i2 = b.add_vertex("i2");
    let v = b.add_vertex("v");
    b.add_edge(a[3], i1)?;
    b.add_edge(i1, i2)?;
    b.add_edge(i2, v)?;
    b.add_edge(v, a[5])?;
    let mut literals = Vec::with_capacity(f.n());
    for i in 1..=f.n() {
        let pos = b.add_vertex(format!("v{i}"));
        let neg = b.add_vertex(format!("¬v{i}"));
        b.add_edge(v, pos)?;
        b.add_edge(v, neg)?;
        b.add_edge(pos, neg)?;
        literals.push((pos, neg));
    }

    let len = 3 * m - 1;
    let path: Vec<usize> = (1..=len)
        .map(|i| {
            if i % 3 == 2 {
                b.add_vertex(format!("c{}", (i + 1) / 3))
            } else {
                b.add_vertex(format!("p{i}"))
            }
        })
        .collect();
    for w in path.windows(2) {
        b.add_edge(w[0], w[1])?;
    }
    b.add_edge(a[8], path[0])?;
    b.add_edge(path[len - 1], a[10])?;
    let clauses: Vec<usize> = (1..=m).map(|j| path[3 * j - 2]).collect();
    for (j, clause) in f.clauses().iter().enumerate() {
        let cj = clauses[j];
        for lit in clause {
            let (pos, neg) = literals[lit.var];
            b.add_edge(cj, if lit.positive { pos } else { neg })?;
        }
        for hub in CLAUSE_HUBS {
            b.add_edge(cj, a[hub - 1])?;
        }
    }

    Ok(ReductionOutput {
        kind: ReductionKind::Cgc,
        graph: b.build(),
        k: CGC_K,
        feedback_set: None,
        layout: Layout::Cgc(CgcLayout { a, i1, i2, v, literals, path, clauses }),
    })
}

/// A connected ordering whose first-fit coloring gives `a_33` color 7,
/// built from a satisfying assignment.
pub fn cgc_witness_ordering(out: &ReductionOutput, f: &CnfFormula, assignment: &[bool]) -> Result<VertexOrdering> {
    let Layout::Cgc(l) = &out.layout else {
        return Err(Error::InvalidParameter("not a connected-Grundy reduction output".into()));
    };
    if let Some(j) = f.first_unsatisfied(assignment)? {
        return Err(Error::NotSatisfying(format!("clause {} is not satisfied", j + 1)));
    }
    if l.literals.len() != f.n() || l.clauses.len() != f.m() {
        return Err(Error::InvalidParameter("formula does not match the reduction output".into()));
    }
    let a = |i: usize| l.a[i - 1];
    let mut order = vec![a(1), a(2), a(3), a(4), l.i1, l.i2, l.v];
    // The false literal takes color 1, the true one color 3.
    for (i, &(pos, neg)) in l.literals.iter().enumerate() {
        if assignment[i] {
            order.extend([neg, pos]);
        } else {
            order.extend([pos, neg]);
        }
    }
    order.extend((5..=9).map(a));
    order.extend(l.path.iter().copied());
    order.extend((10..=33).map(a));
    let sigma = VertexOrdering(order);
    debug_assert!(is_connected_ordering(&out.graph, &sigma));
    debug_assert_eq!(first_fit(&out.graph, &sigma).map(|c| c.get(a(33))), Ok(7));
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig2() -> CnfFormula {
        CnfFormula::from_ints(4, &[&[1, -2, 3], &[1, 2, -4], &[-1, 3, 4], &[2, -3, 4]]).unwrap()
    }

    #[test]
    fn degree_table() {
        let f = fig2();
        let out = gen_cgc_reduction(&f).unwrap();
        let m = f.m();
        let Layout::Cgc(l) = &out.layout else { unreachable!() };
        let deg = |i: usize| out.graph.degree(l.a[i - 1]);
        assert_eq!(deg(4), m + 4);
        assert_eq!(deg(21), m + 3);
        assert_eq!(deg(24), m + 2);
        assert_eq!(deg(27), 7);
        assert_eq!(deg(15), 5);
        assert_eq!(deg(28), 6);
        assert_eq!(deg(33), 6);
        for &c in &l.clauses {
            assert_eq!(out.graph.degree(c), 8);
        }
        assert_eq!(out.graph.degree(l.v), 2 * f.n() + 2);
        assert_eq!(out.graph.n(), 55);
    }

    #[test]
    fn fig2_witness_reaches_seven() {
        let f = fig2();
        let out = gen_cgc_reduction(&f).unwrap();
        let sigma = cgc_witness_ordering(&out, &f, &[true, true, false, true]).unwrap();
        assert_eq!(sigma.len(), out.graph.n());
        assert!(is_connected_ordering(&out.graph, &sigma));
        let colors = first_fit(&out.graph, &sigma).unwrap();
        let Layout::Cgc(l) = &out.layout else { unreachable!() };
        assert_eq!(colors.get(l.a[32]), 7);
        assert_eq!([colors.get(l.a[3]), colors.get(l.a[20]), colors.get(l.a[23])], [1, 3, 2]);
        for &c in &l.clauses {
            assert!(colors.get(c) >= 4);
        }
    }

    #[test]
    fn preconditions() {
        let pure = CnfFormula::from_ints(2, &[&[1, 2], &[1, -2]]).unwrap();
        assert!(gen_cgc_reduction(&pure).is_err());
        let many = CnfFormula::from_ints(2, &[&[1, 2], &[-1, -2], &[1], &[-1]]).unwrap();
        assert!(gen_cgc_reduction(&many).is_err());
        let f = fig2();
        let out = gen_cgc_reduction(&f).unwrap();
        assert!(cgc_witness_ordering(&out, &f, &[false, true, false, false]).is_err());
    }
}
