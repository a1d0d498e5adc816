//! SAT to Grundy coloring on graphs with a small feedback vertex set.
//!
//! Variables are split into `q` contiguous groups of `g = ⌈n/q⌉` (padded
//! with dummies). Each group assignment `τ` is encoded as a permutation
//! `ζ(τ)` of `t` elements, and each group owns a `t`-clique `S_h` whose color
//! order spells that permutation. For every clause `C_j` and every group
//! assignment satisfying it there is a gadget tree rooted at `v(j, τ)` that
//! reaches color `t + 2` exactly when the clique is colored along `ζ(τ)`.

use crate::coloring::{validate_partition, Color, ColorAssignment, Variant};
use crate::error::{Error, Result};
use crate::graph::GraphBuilder;
use crate::witness::remove_dominant_subtrees;

use super::{ceil_log2, CnfFormula, Layout, ReductionKind, ReductionOutput};

/// Largest vertex count the generator will build.
pub const FVS_VERTEX_CAP: u128 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FvsParameters {
    pub n: usize,
    pub m: usize,
    pub q: usize,
    /// Group size `⌈n/q⌉`.
    pub g: usize,
    /// Clique size `⌈3n / (q log2(n/q))⌉`.
    pub t: usize,
    /// Target color `⌈log2 m⌉ + 2t + 4`.
    pub s: usize,
}

impl FvsParameters {
    /// `m q 2^g 2^(t+1) + 2^(s-1) + q t`.
    pub fn vertex_bound(&self) -> u128 {
        let m = self.m as u128;
        let q = self.q as u128;
        m * q * (1u128 << self.g) * (1u128 << (self.t + 1)) + (1u128 << (self.s - 1)) + q * self.t as u128
    }
}

fn factorial(t: usize) -> u128 {
    (1..=t as u128).try_fold(1u128, |acc, i| acc.checked_mul(i)).unwrap_or(u128::MAX)
}

pub fn fvs_parameters(n: usize, m: usize, q: usize) -> Result<FvsParameters> {
    if q < 1 || q > n {
        return Err(Error::InvalidParameter(format!("q = {q} must lie in 1..={n}")));
    }
    if m == 0 {
        return Err(Error::Precondition("the formula has no clauses".into()));
    }
    if n <= q {
        return Err(Error::InvalidParameter(format!("t is undefined for n / q = {n} / {q}: log2(n / q) must be positive")));
    }
    let ratio = n as f64 / q as f64;
    let t = ((3.0 * n as f64) / (q as f64 * ratio.log2()) - 1e-9).ceil() as usize;
    let g = n.div_ceil(q);
    if g >= 64 || (1u128 << g) > factorial(t) {
        return Err(Error::Precondition(format!("no injective map from 2^{g} group assignments into S_{t}")));
    }
    let s = ceil_log2(m) + 2 * t + 4;
    Ok(FvsParameters { n, m, q, g, t, s })
}

/// The permutation of lexicographic rank `x` in `S_t`, as `σ(1), .., σ(t)`
/// with values in `1..=t`.
pub fn zeta(x: u64, t: usize) -> Result<Vec<usize>> {
    if x as u128 >= factorial(t) {
        return Err(Error::InvalidParameter(format!("rank {x} is out of range for S_{t}")));
    }
    let mut remaining: Vec<usize> = (1..=t).collect();
    let mut rest = x as u128;
    let mut sigma = Vec::with_capacity(t);
    for i in 0..t {
        let f = factorial(t - 1 - i);
        let d = (rest / f) as usize;
        rest %= f;
        sigma.push(remaining.remove(d));
    }
    Ok(sigma)
}

#[derive(Debug, Clone)]
pub struct FvsGadget {
    pub clause: usize,
    pub group: usize,
    /// Group assignment; bit `i` is the `i`-th variable of the group.
    pub tau: u64,
    pub root: usize,
    /// Vertices of the gadget tree with the colors of its intended coloring.
    pub vertices: Vec<(usize, Color)>,
}

#[derive(Debug, Clone)]
pub struct FvsLayout {
    pub params: FvsParameters,
    pub root: usize,
    pub parents: Vec<usize>,
    pub tree: Vec<(usize, Color)>,
    /// `cliques[h][i]` is `s_h^(i+1)`.
    pub cliques: Vec<Vec<usize>>,
    pub gadgets: Vec<FvsGadget>,
}

/// Whether `tau` (an assignment of group `h`) sets a literal of `clause` true.
fn group_satisfies(f: &CnfFormula, clause: usize, h: usize, g: usize, tau: u64) -> bool {
    f.clause(clause).iter().any(|lit| {
        lit.var / g == h && ((tau >> (lit.var % g)) & 1 == 1) == lit.positive
    })
}

/// Adds `T_order` below `parent` and returns its vertices with canonical colors.
fn attach_binomial(b: &mut GraphBuilder, parent: usize, order: usize, label: &str, out: &mut Vec<(usize, Color)>) -> Result<()> {
    let v = b.add_vertex(label.to_string());
    b.add_edge(parent, v)?;
    out.push((v, order as Color));
    for i in 1..order {
        attach_binomial(b, v, i, &format!("{label}.{i}"), out)?;
    }
    Ok(())
}

pub fn gen_fvs_reduction(f: &CnfFormula, q: usize) -> Result<ReductionOutput> {
    let params = fvs_parameters(f.n(), f.m(), q)?;
    let FvsParameters { m, g, t, s, .. } = params;
    let bound = params.vertex_bound();
    if bound > FVS_VERTEX_CAP {
        return Err(Error::GuardExceeded { what: "vertex bound", value: bound, limit: FVS_VERTEX_CAP });
    }
    let pruned = remove_dominant_subtrees(s, t + 2, m)?;

    let mut b = GraphBuilder::new(0);
    for label in &pruned.labels {
        b.add_vertex(label.clone());
    }
    for v in 0..pruned.graph.n() {
        if let Some(p) = pruned.tree.parent(v) {
            b.add_edge(p, v)?;
        }
    }
    let mut cliques = Vec::with_capacity(q);
    for h in 1..=q {
        let members: Vec<usize> = (1..=t).map(|i| b.add_vertex(format!("s{h}_{i}"))).collect();
        for (a, &u) in members.iter().enumerate() {
            for &w in &members[a + 1..] {
                b.add_edge(u, w)?;
            }
        }
        cliques.push(members);
    }

    let mut gadgets = Vec::new();
    for j in 0..m {
        let before = gadgets.len();
        for h in 0..q {
            for tau in 0..1u64 << g {
                if !group_satisfies(f, j, h, g, tau) {
                    continue;
                }
                let sigma = zeta(tau, t)?;
                let name = format!("v(C{},X{},{:0width$b})", j + 1, h + 1, tau, width = g);
                let root = b.add_vertex(name.clone());
                b.add_edge(root, pruned.parents[j])?;
                let mut vertices = vec![(root, (t + 2) as Color)];
                let leaf = b.add_vertex(format!("{name}(1)"));
                b.add_edge(root, leaf)?;
                vertices.push((leaf, 1));
                for p in 1..=t {
                    // Child p+1 keeps T_1, .., T_{p-1} and gets color p from the clique.
                    let label = format!("{name}({})", p + 1);
                    let child = b.add_vertex(label.clone());
                    b.add_edge(root, child)?;
                    vertices.push((child, (p + 1) as Color));
                    for i in 1..p {
                        attach_binomial(&mut b, child, i, &format!("{label}.{i}"), &mut vertices)?;
                    }
                    b.add_edge(child, cliques[h][sigma[p - 1] - 1])?;
                }
                gadgets.push(FvsGadget { clause: j, group: h, tau, root, vertices });
            }
        }
        if gadgets.len() == before {
            return Err(Error::Precondition(format!("no group assignment satisfies clause {}", j + 1)));
        }
    }

    let feedback_set: Vec<usize> = cliques.iter().flatten().copied().collect();
    let layout = FvsLayout {
        params,
        root: pruned.root(),
        parents: pruned.parents.clone(),
        tree: (0..pruned.graph.n()).map(|v| (v, pruned.canonical.get(v))).collect(),
        cliques,
        gadgets,
    };
    Ok(ReductionOutput {
        kind: ReductionKind::Fvs,
        graph: b.build(),
        k: s,
        feedback_set: Some(feedback_set),
        layout: Layout::Fvs(layout),
    })
}

/// Colors the graph from a satisfying assignment so that the tree root
/// receives color `s`.
pub fn fvs_witness_coloring(out: &ReductionOutput, f: &CnfFormula, assignment: &[bool]) -> Result<ColorAssignment> {
    let Layout::Fvs(layout) = &out.layout else {
        return Err(Error::InvalidParameter("not a feedback-vertex-set reduction output".into()));
    };
    if let Some(j) = f.first_unsatisfied(assignment)? {
        return Err(Error::NotSatisfying(format!("clause {} is not satisfied", j + 1)));
    }
    let FvsParameters { q, g, t, m, .. } = layout.params;
    if m != f.m() || layout.params.n != f.n() {
        return Err(Error::InvalidParameter("formula does not match the reduction output".into()));
    }
    let taus: Vec<u64> = (0..q)
        .map(|h| {
            (0..g)
                .filter(|&i| assignment.get(h * g + i).copied().unwrap_or(false))
                .fold(0u64, |acc, i| acc | 1 << i)
        })
        .collect();

    let mut phi = ColorAssignment::uncolored(out.graph.n());
    for &(v, c) in &layout.tree {
        phi.set(v, c);
    }
    for h in 0..q {
        let sigma = zeta(taus[h], t)?;
        for p in 1..=t {
            phi.set(layout.cliques[h][sigma[p - 1] - 1], p as Color);
        }
    }
    for j in 0..m {
        let gadget = layout
            .gadgets
            .iter()
            .find(|gd| gd.clause == j && gd.tau == taus[gd.group])
            .ok_or_else(|| Error::NotSatisfying(format!("no gadget for clause {}", j + 1)))?;
        for &(v, c) in &gadget.vertices {
            phi.set(v, c);
        }
    }
    debug_assert!(validate_partition(&out.graph, &phi, Variant::Proper).unwrap_or(false));
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn parameters() {
        let p = fvs_parameters(4, 2, 2).unwrap();
        assert_eq!((p.g, p.t, p.s), (2, 6, 17));
        let p = fvs_parameters(3, 1, 2).unwrap();
        assert_eq!((p.g, p.t, p.s), (2, 8, 20));
        assert!(fvs_parameters(2, 1, 2).is_err());
        assert!(fvs_parameters(4, 1, 5).is_err());
    }

    #[test]
    fn zeta_is_a_bijection_onto_small_groups() {
        assert_eq!(zeta(0, 3).unwrap(), vec![1, 2, 3]);
        assert_eq!(zeta(5, 3).unwrap(), vec![3, 2, 1]);
        let all: HashSet<Vec<usize>> = (0..24).map(|x| zeta(x, 4).unwrap()).collect();
        assert_eq!(all.len(), 24);
        assert!(zeta(24, 4).is_err());
    }

    #[test]
    fn small_instance_witness() {
        let f = CnfFormula::from_ints(4, &[&[1, -3], &[2, 4]]).unwrap();
        let out = gen_fvs_reduction(&f, 2).unwrap();
        let Layout::Fvs(l) = &out.layout else { unreachable!() };
        assert!((out.graph.n() as u128) <= l.params.vertex_bound());
        let fvs = out.feedback_set.as_ref().unwrap();
        assert_eq!(fvs.len(), 2 * l.params.t);
        let keep: Vec<usize> = {
            let mut mark = vec![true; out.graph.n()];
            for &v in fvs {
                mark[v] = false;
            }
            (0..out.graph.n()).filter(|&v| mark[v]).collect()
        };
        assert!(out.graph.induced(&keep).is_forest());
        let phi = fvs_witness_coloring(&out, &f, &[true, false, true, true]).unwrap();
        assert!(validate_partition(&out.graph, &phi, Variant::Proper).unwrap());
        assert_eq!(phi.get(l.root) as usize, out.k);
        assert!(fvs_witness_coloring(&out, &f, &[false, false, true, false]).is_err());
    }
}
