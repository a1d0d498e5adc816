//! Exhaustive search over color assignments `V -> {0, 1, .., k}` that satisfy
//! the witness characterization.
//!
//! The search assigns vertices in breadth-first order and checks each vertex
//! as soon as it is assigned: a vertex colored `c` must still be able to see
//! every color below `c` through its colored or not-yet-assigned neighbors.
//! Once all its neighbors are assigned the check is exact, so every complete
//! assignment that survives is valid.

use std::ops::ControlFlow;

use crate::coloring::{Color, ColorAssignment, Variant, UNCOLORED};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size guard of [`grundy_oracle`] and [`weak_grundy_oracle`].
pub const ORACLE_CAP: usize = 10;

/// Size guard of [`find_witness`] and [`count_assignments`].
pub const SEARCH_CAP: usize = 32;

/// What a witness search looks for.
#[derive(Debug, Clone)]
pub struct WitnessQuery {
    pub variant: Variant,
    /// Largest color allowed; some vertex must receive it when `require_top`.
    pub k: Color,
    /// Whether vertices may be left out of the witness.
    pub allow_uncolored: bool,
    pub require_top: bool,
    /// Vertices pinned to a color (`0` pins them as uncolored).
    pub forced: Vec<(usize, Color)>,
}

impl WitnessQuery {
    /// Colorings of induced subgraphs reaching color `k`.
    pub fn reaching(variant: Variant, k: Color) -> Self {
        WitnessQuery { variant, k, allow_uncolored: true, require_top: true, forced: Vec::new() }
    }

    pub fn force(mut self, v: usize, c: Color) -> Self {
        self.forced.push((v, c));
        self
    }
}

/// Is `Γ(g) >= k`? Decided by enumerating colored witnesses.
pub fn grundy_oracle(g: &Graph, k: usize) -> Result<bool> {
    g.require_at_most(ORACLE_CAP)?;
    oracle(g, k, Variant::Proper)
}

/// Is `Γ'(g) >= k`? Decided by enumerating weak colored witnesses.
pub fn weak_grundy_oracle(g: &Graph, k: usize) -> Result<bool> {
    g.require_at_most(ORACLE_CAP)?;
    oracle(g, k, Variant::Weak)
}

fn oracle(g: &Graph, k: usize, variant: Variant) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    if k > g.n() {
        return Ok(false);
    }
    Ok(find_witness(g, &WitnessQuery::reaching(variant, k as Color))?.is_some())
}

/// Returns the first assignment matching `query`, if any.
pub fn find_witness(g: &Graph, query: &WitnessQuery) -> Result<Option<ColorAssignment>> {
    let mut found = None;
    search(g, query, &mut |colors| {
        found = Some(ColorAssignment(colors.to_vec()));
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Counts assignments matching `query`.
pub fn count_assignments(g: &Graph, query: &WitnessQuery) -> Result<u64> {
    let mut count = 0u64;
    search(g, query, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// Calls `visit` on every assignment matching `query`, in a fixed order.
pub fn search(
    g: &Graph,
    query: &WitnessQuery,
    visit: &mut dyn FnMut(&[Color]) -> ControlFlow<()>,
) -> Result<()> {
    g.require_at_most(SEARCH_CAP)?;
    if query.variant == Variant::Connected {
        return Err(Error::ConnectedVariantUnsupported);
    }
    if query.k as usize > 63 {
        return Err(Error::InvalidParameter(format!("k = {} is above 63", query.k)));
    }
    let n = g.n();
    let mut pinned: Vec<Option<Color>> = vec![None; n];
    for &(v, c) in &query.forced {
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        if c > query.k {
            return Ok(());
        }
        if matches!(pinned[v], Some(prev) if prev != c) {
            return Ok(());
        }
        pinned[v] = Some(c);
    }

    let order = search_order(g, &query.forced);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let domains: Vec<Vec<Color>> = order
        .iter()
        .map(|&v| match pinned[v] {
            Some(c) => vec![c],
            None => {
                let top = query.k.min(g.degree(v) as Color + 1);
                let mut d: Vec<Color> = (1..=top).rev().collect();
                if query.allow_uncolored {
                    d.push(UNCOLORED);
                }
                d
            }
        })
        .collect();
    let mut top_possible_from = vec![false; n + 1];
    for i in (0..n).rev() {
        top_possible_from[i] = top_possible_from[i + 1] || domains[i].contains(&query.k);
    }

    let mut state = Search {
        g,
        variant: query.variant,
        k: query.k,
        require_top: query.require_top,
        order: &order,
        pos: &pos,
        domains: &domains,
        top_possible_from: &top_possible_from,
        colors: vec![UNCOLORED; n],
    };
    let _ = state.run(0, 0, visit);
    Ok(())
}

/// Breadth-first from pinned vertices first, then from high-degree vertices.
fn search_order(g: &Graph, forced: &[(usize, Color)]) -> Vec<usize> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut starts: Vec<usize> = forced.iter().map(|&(v, _)| v).collect();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    starts.extend(by_degree);
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    variant: Variant,
    k: Color,
    require_top: bool,
    order: &'a [usize],
    pos: &'a [usize],
    domains: &'a [Vec<Color>],
    top_possible_from: &'a [bool],
    colors: Vec<Color>,
}

impl Search<'_> {
    fn run(
        &mut self,
        i: usize,
        tops: usize,
        visit: &mut dyn FnMut(&[Color]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.require_top && tops == 0 && !self.top_possible_from[i] {
            return ControlFlow::Continue(());
        }
        if i == self.order.len() {
            return visit(&self.colors);
        }
        let v = self.order[i];
        for &c in &self.domains[i] {
            self.colors[v] = c;
            if self.consistent(v, i) {
                let t = tops + usize::from(c == self.k);
                self.run(i + 1, t, visit)?;
            }
        }
        self.colors[v] = UNCOLORED;
        ControlFlow::Continue(())
    }

    /// Checks `v` (just assigned at position `i`) and its assigned neighbors.
    fn consistent(&self, v: usize, i: usize) -> bool {
        let c = self.colors[v];
        if c != UNCOLORED {
            if self.variant == Variant::Proper
                && self.g.neighbors(v).iter().any(|&u| self.pos[u] < i && self.colors[u] == c)
            {
                return false;
            }
            if !self.can_complete(v, i) {
                return false;
            }
        }
        self.g
            .neighbors(v)
            .iter()
            .all(|&u| self.pos[u] >= i || self.colors[u] == UNCOLORED || self.can_complete(u, i))
    }

    /// Whether `u` can still collect every color below its own, given the
    /// assignment of positions `0..=i`.
    fn can_complete(&self, u: usize, i: usize) -> bool {
        let c = self.colors[u];
        let mut lower = 0u64;
        let mut open = 0u32;
        for &w in self.g.neighbors(u) {
            if self.pos[w] > i {
                open += 1;
            } else {
                let cw = self.colors[w];
                if cw != UNCOLORED && cw < c {
                    lower |= 1 << cw;
                }
            }
        }
        lower.count_ones() + open >= c - 1
    }
}
