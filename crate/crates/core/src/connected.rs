//! Connected Grundy number by depth-first search over connected orderings.
//!
//! A search node is a connected prefix together with its first-fit colors.
//! Children extend the prefix by one frontier vertex. A branch is cut when no
//! uncolored vertex can still collect colors `1..k-1` from its colored and
//! uncolored neighbors, and failed nodes are remembered by the colored set
//! plus the colors on its boundary, which is all the future depends on.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::coloring::{first_fit, Color, VertexOrdering, UNCOLORED};
use crate::error::{Error, Result};
use crate::exact::{grundy_number_dp, DP_CAP};
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Vertex cap of the search.
pub const CONNECTED_CAP: usize = 4096;

/// Failed states kept for pruning; the memo is cleared when it fills up.
const MEMO_CAP: usize = 1 << 21;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConnectedOutcome {
    /// A full connected ordering whose first-fit coloring reaches `k`, and the
    /// length of the prefix at which color `k` first appeared.
    Yes { ordering: VertexOrdering, reached_at: usize },
    No,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConnectedGrundy {
    Exact { value: usize, ordering: VertexOrdering },
    /// `lower` colors were reached before the budget ran out.
    BudgetExceeded { lower: usize, ordering: VertexOrdering },
}

/// Nodes explored by a search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

/// Is `cΓ(g) >= k`? `g` must be connected.
pub fn connected_grundy_at_least_k(g: &Graph, k: usize, budget: u64) -> Result<ConnectedOutcome> {
    connected_grundy_at_least_k_stats(g, k, budget).map(|(o, _)| o)
}

pub fn connected_grundy_at_least_k_stats(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<(ConnectedOutcome, SearchStats)> {
    check_input(g)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if k == 1 {
        let ordering = VertexOrdering(g.bfs_order(0));
        return Ok((ConnectedOutcome::Yes { ordering, reached_at: 1 }, SearchStats { nodes: 1 }));
    }
    // In a bipartite graph every connected ordering colors the two sides 1
    // and 2, so only k <= 2 is reachable.
    if k > g.max_degree() + 1 || (k >= 3 && g.is_bipartite()) {
        return Ok((ConnectedOutcome::No, SearchStats::default()));
    }
    let mut s = Search::new(g, k as Color, budget);
    let mut exceeded = false;
    for start in 0..g.n() {
        if g.degree(start) == 0 {
            continue;
        }
        s.place(start);
        let r = s.dfs();
        s.unplace(start);
        match r {
            Step::Found => {
                let reached_at = s.found.len();
                let ordering = complete_ordering(g, &s.found);
                return Ok((ConnectedOutcome::Yes { ordering, reached_at }, SearchStats { nodes: s.nodes }));
            }
            Step::Failed => {}
            Step::OutOfBudget => {
                exceeded = true;
                break;
            }
        }
    }
    let outcome = if exceeded { ConnectedOutcome::BudgetExceeded } else { ConnectedOutcome::No };
    Ok((outcome, SearchStats { nodes: s.nodes }))
}

/// `cΓ(g)`, found by deciding `k = 2, 3, ..` up to `min(Δ + 1, Γ)`. The
/// budget is shared by all decisions.
pub fn connected_grundy_number(g: &Graph, budget: u64) -> Result<ConnectedGrundy> {
    check_input(g)?;
    let mut ordering = VertexOrdering(g.bfs_order(0));
    let mut best = first_fit(g, &ordering)?.max_color() as usize;
    let mut upper = g.max_degree() + 1;
    if g.n() <= DP_CAP {
        upper = upper.min(grundy_number_dp(g)?.0);
    }
    let mut left = budget;
    while best < upper {
        let (outcome, stats) = connected_grundy_at_least_k_stats(g, best + 1, left)?;
        left = left.saturating_sub(stats.nodes);
        match outcome {
            ConnectedOutcome::Yes { ordering: o, .. } => {
                best = first_fit(g, &o)?.max_color() as usize;
                ordering = o;
            }
            ConnectedOutcome::No => break,
            ConnectedOutcome::BudgetExceeded => {
                return Ok(ConnectedGrundy::BudgetExceeded { lower: best, ordering });
            }
        }
    }
    Ok(ConnectedGrundy::Exact { value: best, ordering })
}

/// Replays a claimed certificate: the ordering is full and connected and its
/// first-fit coloring reaches `k`.
pub fn verify_connected_certificate(g: &Graph, sigma: &VertexOrdering, k: usize) -> Result<bool> {
    let colors = first_fit(g, sigma)?;
    Ok(sigma.len() == g.n()
        && crate::coloring::is_connected_ordering(g, sigma)
        && colors.max_color() as usize >= k)
}

fn check_input(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    g.require_at_most(CONNECTED_CAP)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Extends a connected prefix to a full connected ordering. Colors of the
/// prefix are unaffected by what follows.
fn complete_ordering(g: &Graph, prefix: &[usize]) -> VertexOrdering {
    let mut placed = vec![false; g.n()];
    let mut order = prefix.to_vec();
    for &v in prefix {
        placed[v] = true;
    }
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in g.neighbors(u) {
            if !placed[w] {
                placed[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    VertexOrdering(order)
}

enum Step {
    Found,
    Failed,
    OutOfBudget,
}

struct Search<'g> {
    g: &'g Graph,
    k: Color,
    budget: u64,
    nodes: u64,
    colors: Vec<Color>,
    /// Colored vertices as a bitset.
    colored: Vec<u64>,
    /// Uncolored neighbors of each vertex.
    open: Vec<usize>,
    prefix: Vec<usize>,
    found: Vec<usize>,
    memo: HashSet<(Vec<u64>, Vec<Color>)>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: Color, budget: u64) -> Self {
        let n = g.n();
        Search {
            g,
            k,
            budget,
            nodes: 0,
            colors: vec![UNCOLORED; n],
            colored: vec![0; n.div_ceil(64)],
            open: (0..n).map(|v| g.degree(v)).collect(),
            prefix: Vec::new(),
            found: Vec::new(),
            memo: HashSet::new(),
        }
    }

    fn first_fit_color(&self, v: usize) -> Color {
        let mut seen = vec![false; self.g.degree(v) + 2];
        for &u in self.g.neighbors(v) {
            let c = self.colors[u] as usize;
            if c != 0 && c < seen.len() {
                seen[c] = true;
            }
        }
        (1..seen.len()).find(|&c| !seen[c]).unwrap_or(seen.len()) as Color
    }

    fn place(&mut self, v: usize) -> Color {
        let c = self.first_fit_color(v);
        self.colors[v] = c;
        self.colored[v / 64] |= 1 << (v % 64);
        for &u in self.g.neighbors(v) {
            self.open[u] -= 1;
        }
        self.prefix.push(v);
        c
    }

    fn unplace(&mut self, v: usize) {
        debug_assert_eq!(self.prefix.last(), Some(&v));
        self.prefix.pop();
        for &u in self.g.neighbors(v) {
            self.open[u] += 1;
        }
        self.colored[v / 64] &= !(1 << (v % 64));
        self.colors[v] = UNCOLORED;
    }

    /// Some uncolored vertex can still be colored `k`.
    fn hopeful(&self) -> bool {
        let need = self.k as usize - 1;
        (0..self.g.n()).any(|u| {
            if self.colors[u] != UNCOLORED || self.g.degree(u) < need {
                return false;
            }
            let mut present = 0u64;
            for &w in self.g.neighbors(u) {
                let c = self.colors[w];
                if c != UNCOLORED && c < self.k {
                    present |= 1 << c;
                }
            }
            need - present.count_ones() as usize <= self.open[u]
        })
    }

    fn signature(&self) -> (Vec<u64>, Vec<Color>) {
        let mut boundary: Vec<usize> = self.prefix.iter().copied().filter(|&v| self.open[v] > 0).collect();
        boundary.sort_unstable();
        (self.colored.clone(), boundary.into_iter().map(|v| self.colors[v]).collect())
    }

    fn dfs(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        let last = *self.prefix.last().expect("nonempty prefix");
        if self.colors[last] >= self.k {
            self.found = self.prefix.clone();
            return Step::Found;
        }
        if self.prefix.len() == self.g.n() || !self.hopeful() {
            return Step::Failed;
        }
        let key = self.signature();
        if self.memo.contains(&key) {
            return Step::Failed;
        }

        let mut frontier: Vec<(Color, usize)> = (0..self.g.n())
            .filter(|&u| {
                self.colors[u] == UNCOLORED && self.g.neighbors(u).iter().any(|&w| self.colors[w] != UNCOLORED)
            })
            .map(|u| (self.first_fit_color(u), u))
            .collect();
        // Higher colors first: they reach k sooner when it is reachable.
        frontier.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, u) in frontier {
            self.place(u);
            let r = self.dfs();
            self.unplace(u);
            match r {
                Step::Failed => {}
                other => return other,
            }
        }
        if self.memo.len() >= MEMO_CAP {
            self.memo.clear();
        }
        self.memo.insert(key);
        Step::Failed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_connected_ordering;
    use crate::witness::binomial_tree;

    fn decide(g: &Graph, k: usize) -> ConnectedOutcome {
        connected_grundy_at_least_k(g, k, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn bipartite_reaches_two_only() {
        for g in [Graph::path(5), Graph::cycle(6), Graph::star(4)] {
            assert!(matches!(decide(&g, 2), ConnectedOutcome::Yes { .. }));
            assert_eq!(decide(&g, 3), ConnectedOutcome::No);
        }
        for k in 2..=6 {
            let (_, t) = binomial_tree(k).unwrap();
            assert_eq!(decide(&t, 3), ConnectedOutcome::No);
        }
    }

    #[test]
    fn odd_cycle_needs_every_vertex() {
        let c5 = Graph::cycle(5);
        match decide(&c5, 3) {
            ConnectedOutcome::Yes { ordering, reached_at } => {
                assert_eq!(reached_at, 5);
                assert!(verify_connected_certificate(&c5, &ordering, 3).unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn numbers() {
        let exact = |g: &Graph| match connected_grundy_number(g, DEFAULT_BUDGET).unwrap() {
            ConnectedGrundy::Exact { value, ordering } => {
                assert!(is_connected_ordering(g, &ordering));
                assert_eq!(first_fit(g, &ordering).unwrap().max_color() as usize, value);
                value
            }
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(exact(&Graph::complete(4)), 4);
        assert_eq!(exact(&Graph::cycle(5)), 3);
        assert_eq!(exact(&Graph::star(3)), 2);
        assert_eq!(exact(&Graph::empty(1)), 1);
    }

    #[test]
    fn errors_and_budget() {
        assert_eq!(connected_grundy_at_least_k(&Graph::empty(2), 2, 10), Err(Error::Disconnected));
        assert_eq!(connected_grundy_at_least_k(&Graph::empty(0), 2, 10), Err(Error::EmptyGraph));
        let g = Graph::from_edges(9, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]).unwrap();
        assert_eq!(connected_grundy_at_least_k(&g, 4, 3).unwrap(), ConnectedOutcome::BudgetExceeded);
    }
}
