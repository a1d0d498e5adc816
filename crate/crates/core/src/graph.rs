//! Undirected simple graphs.
//!
//! Adjacency is kept both as sorted neighbor lists (valid for any order) and,
//! for graphs with at most [`WORD_CAP`] vertices, as one [`VertexSet`] per
//! vertex. The subset algorithms only run on word-sized graphs; generated
//! gadget graphs can be much larger and only need the lists.

use std::collections::VecDeque;

use rand::Rng;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, WORD_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    masks: Vec<VertexSet>,
    edges: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph::from_adjacency(vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list, merging duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut edges = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            edges += list.len();
        }
        let n = adj.len();
        let masks = if n <= WORD_CAP {
            adj.iter().map(|l| l.iter().copied().collect()).collect()
        } else {
            Vec::new()
        };
        Graph { adj, masks, edges: edges / 2, labels: None }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if self.is_word_sized() {
            self.masks[u].contains(v)
        } else {
            self.adj[u].binary_search(&v).is_ok()
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    #[inline]
    pub fn is_word_sized(&self) -> bool {
        self.n() <= WORD_CAP
    }

    /// Fails with [`Error::TooLarge`] unless the graph fits the given cap
    /// (which is itself clamped to the word cap).
    pub fn require_at_most(&self, cap: usize) -> Result<()> {
        let cap = cap.min(WORD_CAP);
        if self.n() > cap {
            return Err(Error::TooLarge { n: self.n(), cap });
        }
        Ok(())
    }

    /// Neighborhood as a bitmask. Only valid on word-sized graphs.
    #[inline]
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.masks[v]
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    /// Finds a vertex by label.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// The subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect()
            })
            .collect();
        let mut g = Graph::from_adjacency(adj);
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Maximum degree inside the induced subgraph `G[s]` (word-sized only).
    pub fn max_degree_in(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.masks[v] & s).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_order(0).len() == self.n()
    }

    /// Vertices reachable from `start`, in breadth-first order.
    pub fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = Vec::with_capacity(self.n());
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Vertices at distance at most `radius` from `center`.
    pub fn ball(&self, center: usize, radius: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        let mut queue = VecDeque::from([center]);
        dist[center] = 0;
        while let Some(u) = queue.pop_front() {
            out.push(u);
            if dist[u] == radius {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        out
    }

    /// Two-coloring test by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = side[u] ^ 1;
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        let mut dsu = DisjointSets::new(self.n());
        self.edges().all(|(u, v)| dsu.union(u, v))
    }

    /// Smallest `d` such that every subgraph has a vertex of degree at most `d`.
    pub fn degeneracy(&self) -> usize {
        let n = self.n();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let maxd = deg.iter().copied().max().unwrap_or(0);
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); maxd + 1];
        for v in 0..n {
            buckets[deg[v]].push(v);
        }
        let mut removed = vec![false; n];
        let mut best = 0;
        let mut d: usize = 0;
        for _ in 0..n {
            d = d.saturating_sub(1);
            let v = loop {
                match buckets[d].pop() {
                    Some(v) if !removed[v] && deg[v] == d => break v,
                    Some(_) => {}
                    None => d += 1,
                }
            };
            removed[v] = true;
            best = best.max(d);
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    buckets[deg[w]].push(w);
                }
            }
        }
        best
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    b.add_edge(u, v).expect("indices in range");
                }
            }
        }
        b.build()
    }

    /// Uniform random labeled tree via a Prüfer sequence.
    pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
        let mut b = GraphBuilder::new(n);
        if n == 2 {
            b.add_edge(0, 1).expect("in range");
        }
        if n > 2 {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            let mut degree = vec![1usize; n];
            for &x in &seq {
                degree[x] += 1;
            }
            for &x in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
                b.add_edge(leaf, x).expect("in range");
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            b.add_edge(rest[0], rest[1]).expect("in range");
        }
        b.build()
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Graph::from_adjacency(adj)
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle needs n >= 3")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("in range")
    }

    /// `K_{1,leaves}` with the center at index 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("in range")
    }
}

/// Incremental graph construction.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { adj: vec![Vec::new(); n], labels: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Adds a labeled vertex and returns its index.
    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        let id = self.adj.len();
        self.adj.push(Vec::new());
        self.labels.resize(id, String::new());
        self.labels.push(label.into());
        id
    }

    /// Adds an undirected edge. Duplicates are merged at build time.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn build(self) -> Graph {
        let n = self.adj.len();
        let labelled = !self.labels.is_empty();
        let mut g = Graph::from_adjacency(self.adj);
        if labelled {
            let mut labels = self.labels;
            labels.resize(n, String::new());
            g.labels = Some(labels);
        }
        g
    }
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn symmetric_and_loop_free() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.m(), 3);
        for u in 0..g.n() {
            assert!(!g.neighbors(u).contains(&u));
            for &v in g.neighbors(u) {
                assert!(g.neighbors(v).contains(&u));
            }
        }
        assert_eq!(
            Graph::from_edges(2, &[(1, 1)]).unwrap_err(),
            Error::SelfLoop(1)
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]).unwrap_err(),
            Error::VertexOutOfRange(2)
        );
    }

    #[test]
    fn degeneracy_of_known_graphs() {
        assert_eq!(Graph::complete(5).degeneracy(), 4);
        assert_eq!(Graph::cycle(7).degeneracy(), 2);
        assert_eq!(Graph::path(6).degeneracy(), 1);
        assert_eq!(Graph::empty(3).degeneracy(), 0);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..30 {
            assert!(Graph::random_tree(n, &mut rng).degeneracy() <= 1);
        }
    }

    #[test]
    fn random_tree_is_a_tree() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..40 {
            let t = Graph::random_tree(n, &mut rng);
            assert_eq!(t.m(), n - 1);
            assert!(t.is_connected());
            assert!(t.is_forest());
        }
    }

    #[test]
    fn bipartite_and_balls() {
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        let p = Graph::path(7);
        let mut b = p.ball(3, 2);
        b.sort();
        assert_eq!(b, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = Graph::path(4).with_labels(vec!["a".into(), "b".into(), "c".into(), "d".into()]);
        let h = g.induced(&[3, 2, 0]);
        assert_eq!(h.m(), 1);
        assert!(h.has_edge(0, 1));
        assert_eq!(h.label(2), Some("a"));
    }
}
