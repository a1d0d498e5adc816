//! Rooted trees with ordered children, binomial trees and their pruned forms.

use crate::coloring::{Color, ColorAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Largest binomial tree order the generators will build (`2^27` vertices).
pub const BINOMIAL_CAP: usize = 28;

/// A rooted tree whose children keep their insertion order. Child `i`
/// (1-based) of `v` is `children(v)[i - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
}

impl RootedTree {
    /// Builds a tree from parent links; children are ordered by vertex id.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::MalformedTree(format!("expected one root, found {}", roots.len())));
        }
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(Error::VertexOutOfRange(p));
                }
                children[p].push(v);
            }
        }
        let t = RootedTree { parent, children, root: roots[0] };
        if t.preorder().len() != n {
            return Err(Error::MalformedTree("parent links contain a cycle".into()));
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// The `i`-th child of `v`, 1-based.
    pub fn child(&self, v: usize, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|i| self.children[v].get(i).copied())
    }

    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.children[v].iter().rev());
        }
        out
    }

    /// Vertices of the subtree rooted at `v`.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[u].iter().rev());
        }
        out
    }

    /// Height of every vertex: leaves have height 0.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.n()];
        for &v in self.preorder().iter().rev() {
            h[v] = self.children[v].iter().map(|&c| h[c] + 1).max().unwrap_or(0);
        }
        h
    }

    /// `Some(k)` when this is `T_k`: the `i`-th child of every vertex roots a `T_i`.
    pub fn binomial_order(&self) -> Option<usize> {
        let ok = (0..self.n()).all(|v| {
            self.children[v].iter().enumerate().all(|(i, &c)| self.children[c].len() == i)
        });
        ok.then(|| self.children[self.root].len() + 1)
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = (0..self.n())
            .filter_map(|v| self.parent[v].map(|p| (p, v)))
            .collect();
        Graph::from_edges(self.n(), &edges).expect("tree edges are valid")
    }
}

/// The binomial tree `T_k` with vertices numbered in preorder (root = 0).
pub fn binomial_tree(k: usize) -> Result<(RootedTree, Graph)> {
    if k < 1 {
        return Err(Error::InvalidParameter("binomial tree order must be at least 1".into()));
    }
    if k > BINOMIAL_CAP {
        return Err(Error::GuardExceeded { what: "binomial tree order", value: k as u128, limit: BINOMIAL_CAP as u128 });
    }
    let n = 1usize << (k - 1);
    let mut parent = vec![None; n];
    // In preorder, child i of a vertex v starts right after the subtrees of
    // children 1..i-1, which hold 2^{i-1} - 1 vertices in total.
    let mut stack = vec![(0usize, k)];
    while let Some((v, order)) = stack.pop() {
        for i in 1..order {
            let c = v + (1 << (i - 1));
            parent[c] = Some(v);
            stack.push((c, i));
        }
    }
    let t = RootedTree::from_parents(parent)?;
    let g = t.to_graph();
    Ok((t, g))
}

/// Colors each vertex of `T_k` by its peeling round: leaves get 1, the
/// leaves left after removing them get 2, and so on. The root gets `k`.
pub fn canonical_level_coloring(t: &RootedTree) -> Result<ColorAssignment> {
    if t.binomial_order().is_none() {
        return Err(Error::MalformedTree("not a binomial tree".into()));
    }
    Ok(ColorAssignment(t.heights().into_iter().map(|h| (h + 1) as Color).collect()))
}

/// `T_s` with `m` dominant `T_l` subtrees removed.
#[derive(Debug, Clone)]
pub struct PrunedTree {
    pub s: usize,
    pub l: usize,
    pub tree: RootedTree,
    pub graph: Graph,
    /// Parents `f_1, .., f_m` of the removed subtrees.
    pub parents: Vec<usize>,
    pub labels: Vec<String>,
    /// Color each remaining vertex had in the canonical coloring of `T_s`.
    pub canonical: ColorAssignment,
}

impl PrunedTree {
    pub fn root(&self) -> usize {
        self.tree.root()
    }
}

/// Number of dominant `T_l` subtrees of `T_s`.
pub fn dominant_subtree_count(s: usize, l: usize) -> u128 {
    if l + 2 > s {
        return 0;
    }
    1u128 << (s - l - 2)
}

/// Removes from `T_s` the dominant `T_l` subtrees hanging off the first `m`
/// vertices (in preorder) that root a `T_{l+1}`. Remaining vertices keep
/// their relative preorder.
pub fn remove_dominant_subtrees(s: usize, l: usize, m: usize) -> Result<PrunedTree> {
    if l < 1 || l + 2 > s {
        return Err(Error::InvalidParameter(format!("need 1 <= l <= s - 2, got s = {s}, l = {l}")));
    }
    let available = dominant_subtree_count(s, l);
    if m as u128 > available {
        return Err(Error::InvalidParameter(format!(
            "{m} dominant subtrees requested but T_{s} has only {available} of order {l}"
        )));
    }
    let (t, _) = binomial_tree(s)?;
    let mut removed = vec![false; t.n()];
    let mut fs = Vec::with_capacity(m);
    for v in t.preorder() {
        if fs.len() == m {
            break;
        }
        if t.children(v).len() == l {
            fs.push(v);
            for u in t.subtree(t.child(v, l).expect("l-th child exists")) {
                removed[u] = true;
            }
        }
    }

    let heights = t.heights();
    let mut index = vec![usize::MAX; t.n()];
    let kept: Vec<usize> = t.preorder().into_iter().filter(|&v| !removed[v]).collect();
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let parent: Vec<Option<usize>> = kept.iter().map(|&v| t.parent(v).map(|p| index[p])).collect();
    let tree = RootedTree::from_parents(parent)?;
    let parents: Vec<usize> = fs.iter().map(|&f| index[f]).collect();

    let mut labels: Vec<String> = kept.iter().map(|&v| format!("t{}", v + 1)).collect();
    labels[tree.root()] = "root".to_string();
    for (j, &f) in parents.iter().enumerate() {
        labels[f] = format!("f{}", j + 1);
    }
    let canonical = ColorAssignment(kept.iter().map(|&v| (heights[v] + 1) as Color).collect());
    let mut b = GraphBuilder::new(0);
    for label in &labels {
        b.add_vertex(label.clone());
    }
    for v in 0..tree.n() {
        if let Some(p) = tree.parent(v) {
            b.add_edge(p, v)?;
        }
    }
    Ok(PrunedTree { s, l, graph: b.build(), tree, parents, labels, canonical })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{validate_partition, Variant};

    #[test]
    fn small_binomial_trees() {
        let (t1, g1) = binomial_tree(1).unwrap();
        assert_eq!((t1.n(), g1.m()), (1, 0));
        let (t4, g4) = binomial_tree(4).unwrap();
        assert_eq!((t4.n(), g4.m()), (8, 7));
        assert_eq!(t4.children(0), &[1, 2, 4]);
        assert_eq!(t4.binomial_order(), Some(4));
        assert!(binomial_tree(0).is_err());
    }

    #[test]
    fn preorder_ids() {
        for k in 1..=8 {
            let (t, _) = binomial_tree(k).unwrap();
            assert_eq!(t.preorder(), (0..t.n()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn t4_canonical_coloring() {
        let (t, g) = binomial_tree(4).unwrap();
        let phi = canonical_level_coloring(&t).unwrap();
        // root, T_1, T_2 = (2, 1), T_3 = (3, 1, 2, 1)
        assert_eq!(phi.as_slice(), &[4, 1, 2, 1, 3, 1, 2, 1]);
        assert!(validate_partition(&g, &phi, Variant::Proper).unwrap());
    }

    #[test]
    fn non_binomial_is_rejected() {
        let t = RootedTree::from_parents(vec![None, Some(0), Some(0)]).unwrap();
        assert!(canonical_level_coloring(&t).is_err());
        assert!(RootedTree::from_parents(vec![Some(1), Some(0)]).is_err());
    }

    #[test]
    fn pruned_t4() {
        let p = remove_dominant_subtrees(4, 2, 1).unwrap();
        assert_eq!(p.graph.n(), 6);
        assert_eq!(p.parents.len(), 1);
        let f = p.parents[0];
        assert_eq!(p.canonical.get(f), 3);
        assert_eq!(p.tree.children(f).len(), 1);
        let unchanged = remove_dominant_subtrees(4, 2, 0).unwrap();
        assert_eq!(unchanged.graph.n(), 8);
        assert_eq!(dominant_subtree_count(5, 2), 2);
        assert!(remove_dominant_subtrees(5, 2, 3).is_err());
        assert!(remove_dominant_subtrees(4, 3, 1).is_err());
    }
}
