//! Enumerators for maximal independent sets and minimal dominating sets of an
//! induced subgraph `G[S]`, with `S` given as a [`VertexSet`].
//!
//! Both are explicit-stack iterators so callers can stop early. Emission order
//! is deterministic but otherwise unspecified.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Maximal independent sets of `g[s]`, found as maximal cliques of the
/// complement with Tomita-style pivoting.
pub fn maximal_independent_sets(g: &Graph, s: VertexSet) -> MaximalIndependentSets<'_> {
    debug_assert!(g.is_word_sized());
    debug_assert!(s.is_subset(g.vertex_set()));
    let mut it = MaximalIndependentSets { g, s, stack: Vec::new(), empty_pending: s.is_empty() };
    if !s.is_empty() {
        let todo = it.pivot_todo(s, VertexSet::EMPTY);
        it.stack.push(MisFrame { r: VertexSet::EMPTY, p: s, x: VertexSet::EMPTY, todo });
    }
    it
}

struct MisFrame {
    r: VertexSet,
    p: VertexSet,
    x: VertexSet,
    todo: VertexSet,
}

pub struct MaximalIndependentSets<'g> {
    g: &'g Graph,
    s: VertexSet,
    stack: Vec<MisFrame>,
    empty_pending: bool,
}

impl MaximalIndependentSets<'_> {
    /// Vertices of `s` that are neither `v` nor adjacent to it.
    #[inline]
    fn non_neighbors(&self, v: usize) -> VertexSet {
        (self.s - self.g.neighbor_set(v)).without(v)
    }

    fn pivot_todo(&self, p: VertexSet, x: VertexSet) -> VertexSet {
        let mut best = None;
        let mut best_count = 0;
        for u in (p | x).iter() {
            let c = (p & self.non_neighbors(u)).len();
            if best.is_none() || c > best_count {
                best = Some(u);
                best_count = c;
            }
        }
        match best {
            Some(u) => p - self.non_neighbors(u),
            None => p,
        }
    }
}

impl Iterator for MaximalIndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.empty_pending {
            self.empty_pending = false;
            return Some(VertexSet::EMPTY);
        }
        loop {
            let top = self.stack.last_mut()?;
            let Some(v) = top.todo.first() else {
                self.stack.pop();
                continue;
            };
            top.todo.remove(v);
            let (r, p, x) = (top.r, top.p, top.x);
            top.p.remove(v);
            top.x.insert(v);
            let non = self.non_neighbors(v);
            let (r, p, x) = (r.with(v), p & non, x & non);
            if p.is_empty() {
                if x.is_empty() {
                    return Some(r);
                }
                continue;
            }
            let todo = self.pivot_todo(p, x);
            self.stack.push(MisFrame { r, p, x, todo });
        }
    }
}

/// Minimal dominating sets of `g[s]` by branching on how an undominated
/// vertex gets dominated, discarding branches in which some chosen vertex has
/// lost every private neighbor.
pub fn minimal_dominating_sets(g: &Graph, s: VertexSet) -> MinimalDominatingSets {
    debug_assert!(g.is_word_sized());
    debug_assert!(s.is_subset(g.vertex_set()));
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| (g.neighbor_set(v) & s).with(v)).collect();
    let mut it = MinimalDominatingSets { s, closed, stack: Vec::new(), empty_pending: s.is_empty() };
    if !s.is_empty() {
        if let Some(frame) = it.frame_for(VertexSet::EMPTY, VertexSet::EMPTY) {
            it.stack.push(frame);
        }
    }
    it
}

struct MdsFrame {
    chosen: VertexSet,
    forbidden: VertexSet,
    candidates: VertexSet,
}

pub struct MinimalDominatingSets {
    s: VertexSet,
    /// `N[v] ∩ s`, indexed by vertex; only meaningful for `v ∈ s`.
    closed: Vec<VertexSet>,
    stack: Vec<MdsFrame>,
    empty_pending: bool,
}

enum Step {
    Done,
    Dead,
    Branch(MdsFrame),
}

impl MinimalDominatingSets {
    fn dominated(&self, chosen: VertexSet) -> VertexSet {
        chosen.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.closed[v])
    }

    fn all_private(&self, chosen: VertexSet) -> bool {
        chosen.iter().all(|x| {
            let others = self.dominated(chosen.without(x));
            !(self.closed[x] - others).is_empty()
        })
    }

    fn step(&self, chosen: VertexSet, forbidden: VertexSet) -> Step {
        if !self.all_private(chosen) {
            return Step::Dead;
        }
        let undominated = self.s - self.dominated(chosen);
        if undominated.is_empty() {
            return Step::Done;
        }
        let mut best: Option<VertexSet> = None;
        for u in undominated.iter() {
            let cands = self.closed[u] - forbidden;
            if cands.is_empty() {
                return Step::Dead;
            }
            if best.map_or(true, |b| cands.len() < b.len()) {
                best = Some(cands);
            }
        }
        Step::Branch(MdsFrame { chosen, forbidden, candidates: best.expect("undominated is nonempty") })
    }

    fn frame_for(&self, chosen: VertexSet, forbidden: VertexSet) -> Option<MdsFrame> {
        match self.step(chosen, forbidden) {
            Step::Branch(f) => Some(f),
            _ => None,
        }
    }
}

impl Iterator for MinimalDominatingSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.empty_pending {
            self.empty_pending = false;
            return Some(VertexSet::EMPTY);
        }
        loop {
            let top = self.stack.last_mut()?;
            let Some(c) = top.candidates.first() else {
                self.stack.pop();
                continue;
            };
            top.candidates.remove(c);
            let chosen = top.chosen.with(c);
            let forbidden = top.forbidden;
            // Later siblings must exclude `c`.
            top.forbidden.insert(c);
            match self.step(chosen, forbidden) {
                Step::Done => return Some(chosen),
                Step::Dead => {}
                Step::Branch(f) => self.stack.push(f),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn all(it: impl Iterator<Item = VertexSet>) -> BTreeSet<Vec<usize>> {
        let v: Vec<_> = it.map(VertexSet::to_vec).collect();
        let set: BTreeSet<_> = v.iter().cloned().collect();
        assert_eq!(set.len(), v.len(), "duplicate emission");
        set
    }

    fn sets(list: &[&[usize]]) -> BTreeSet<Vec<usize>> {
        list.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn mis_triangle_and_edgeless() {
        let k3 = Graph::complete(3);
        assert_eq!(all(maximal_independent_sets(&k3, k3.vertex_set())), sets(&[&[0], &[1], &[2]]));
        let e3 = Graph::empty(3);
        assert_eq!(all(maximal_independent_sets(&e3, e3.vertex_set())), sets(&[&[0, 1, 2]]));
    }

    #[test]
    fn mis_c5() {
        // Frozen from a subset filter over all 32 subsets.
        let c5 = Graph::cycle(5);
        let got = all(maximal_independent_sets(&c5, c5.vertex_set()));
        assert_eq!(got, sets(&[&[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]]));
    }

    #[test]
    fn mis_on_induced_subset() {
        let p = Graph::path(5);
        let s: VertexSet = [0, 1, 3].into_iter().collect();
        assert_eq!(all(maximal_independent_sets(&p, s)), sets(&[&[0, 3], &[1, 3]]));
        assert_eq!(all(maximal_independent_sets(&p, VertexSet::EMPTY)), sets(&[&[]]));
    }

    #[test]
    fn mds_known_cases() {
        let k4 = Graph::complete(4);
        assert_eq!(all(minimal_dominating_sets(&k4, k4.vertex_set())), sets(&[&[0], &[1], &[2], &[3]]));
        let p3 = Graph::path(3);
        assert_eq!(all(minimal_dominating_sets(&p3, p3.vertex_set())), sets(&[&[1], &[0, 2]]));
        let star = Graph::star(3);
        assert_eq!(all(minimal_dominating_sets(&star, star.vertex_set())), sets(&[&[0], &[1, 2, 3]]));
    }

    #[test]
    fn mds_isolated_vertices_are_forced() {
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(all(minimal_dominating_sets(&g, g.vertex_set())), sets(&[&[0, 2, 3], &[1, 2, 3]]));
    }
}
