//! Witness-based decision procedures and bounds.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{validate_partition, Color, ColorAssignment, Variant};
use crate::error::{Error, Result};
use crate::exact::{count_assignments, find_witness, WitnessQuery, ORACLE_CAP};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest witness size the XP search enumerates.
pub const XP_SIZE_CAP: usize = 16;

/// Largest number of subsets the XP search enumerates.
pub const XP_SUBSET_CAP: u128 = 10_000_000;

/// Largest ball the local search colors exhaustively.
pub const BALL_CAP: usize = 16;

/// A colored induced subgraph certifying that color `k` is reachable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub variant: Variant,
    pub k: usize,
    pub vertices: Vec<usize>,
    /// Colors on all of `V(g)`; vertices outside the witness are `0`.
    pub assignment: ColorAssignment,
}

impl Witness {
    /// Keeps one vertex colored `k` and, recursively, one neighbor of each
    /// lower color for every kept vertex. `assignment` must be valid for
    /// `variant` up to color `k`; colors above `k` are dropped.
    ///
    /// The result has at most `2^(k-1)` vertices, all within distance `k - 1`
    /// of the top vertex.
    pub fn from_assignment(g: &Graph, variant: Variant, k: usize, assignment: &ColorAssignment) -> Option<Self> {
        let top = (0..g.n()).find(|&v| assignment.get(v) == k as Color)?;
        let mut kept = ColorAssignment::uncolored(g.n());
        kept.set(top, k as Color);
        let mut stack = vec![top];
        while let Some(v) = stack.pop() {
            for d in 1..assignment.get(v) {
                if g.neighbors(v).iter().any(|&u| kept.get(u) == d) {
                    continue;
                }
                let u = *g.neighbors(v).iter().find(|&&u| assignment.get(u) == d)?;
                kept.set(u, d);
                stack.push(u);
            }
        }
        let vertices = kept.colored().collect();
        Some(Witness { variant, k, vertices, assignment: kept })
    }

    /// Valid for its variant, and some vertex carries color `k`.
    pub fn validate(&self, g: &Graph) -> Result<bool> {
        Ok(validate_partition(g, &self.assignment, self.variant)?
            && self.assignment.as_slice().contains(&(self.k as Color))
            && self.assignment.colored().eq(self.vertices.iter().copied()))
    }

    /// Re-indexes a witness found on `g[vertices]` back onto the parent graph.
    fn lift(g: &Graph, variant: Variant, k: usize, vertices: &[usize], local: &ColorAssignment) -> Self {
        let mut assignment = ColorAssignment::uncolored(g.n());
        for (i, &v) in vertices.iter().enumerate() {
            assignment.set(v, local.get(i));
        }
        Witness::from_assignment(g, variant, k, &assignment).expect("search results are valid witnesses")
    }
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Is `Γ(g) >= k`? Searches every induced subgraph on `min(2^{k-1}, n)`
/// vertices for a Grundy witness reaching `k`.
pub fn xp_grundy_at_least_k(g: &Graph, k: usize) -> Result<Option<Witness>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let full = 1u128 << (k - 1).min(127);
    if full > XP_SIZE_CAP as u128 {
        return Err(Error::GuardExceeded { what: "witness size 2^(k-1)", value: full, limit: XP_SIZE_CAP as u128 });
    }
    let size = (full as usize).min(g.n());
    let subsets = binomial(g.n(), size);
    if subsets > XP_SUBSET_CAP {
        return Err(Error::GuardExceeded { what: "subsets to enumerate", value: subsets, limit: XP_SUBSET_CAP });
    }
    g.require_at_most(crate::vertex_set::WORD_CAP)?;
    if g.n() == 0 || k > g.max_degree() + 1 {
        return Ok(None);
    }
    let query = WitnessQuery::reaching(Variant::Proper, k as Color);
    let check = |bits: u64| -> Option<Witness> {
        let vertices = VertexSet(bits).to_vec();
        let h = g.induced(&vertices);
        let local = find_witness(&h, &query).expect("subset is within the search cap")?;
        Some(Witness::lift(g, Variant::Proper, k, &vertices, &local))
    };

    // Chunks keep memory flat; the first hit in enumeration order wins.
    const CHUNK: usize = 1 << 12;
    let mut masks = crate::exact::subsets_of_size(g.n(), size);
    loop {
        let chunk: Vec<u64> = masks.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(None);
        }
        if let Some(w) = chunk.par_iter().find_map_first(|&bits| check(bits)) {
            return Ok(Some(w));
        }
    }
}

/// Is `Γ(g) >= k`? Looks for a witness inside the radius-`(k-1)` ball of each
/// vertex, with the center colored `k`.
pub fn local_grundy_at_least_k(g: &Graph, k: usize) -> Result<Option<Witness>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if g.n() == 0 || k > g.max_degree() + 1 {
        return Ok(None);
    }
    for center in 0..g.n() {
        let ball = g.ball(center, k - 1);
        if ball.len() > BALL_CAP {
            return Err(Error::GuardExceeded { what: "ball size", value: ball.len() as u128, limit: BALL_CAP as u128 });
        }
        let h = g.induced(&ball);
        // `ball` starts with the center, so it is vertex 0 of `h`.
        let query = WitnessQuery::reaching(Variant::Proper, k as Color).force(0, k as Color);
        if let Some(local) = find_witness(&h, &query)? {
            return Ok(Some(Witness::lift(g, Variant::Proper, k, &ball, &local)));
        }
    }
    Ok(None)
}

/// `⌈log_{(d+1)/d} n⌉ + 2` with `d` the degeneracy of `g`.
pub fn sparse_upper_bound(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let d = g.degeneracy();
    if d == 0 {
        return Ok(2);
    }
    let x = (n as f64).ln() / ((d as f64 + 1.0) / d as f64).ln();
    Ok((x - 1e-9).ceil().max(0.0) as usize + 2)
}

/// Number of total proper colorings of `g` that are first-fit colorings with
/// largest color exactly `k`, optionally with `root` colored `k`.
pub fn count_grundy_colorings_achieving(g: &Graph, k: usize, root: Option<usize>) -> Result<u64> {
    g.require_at_most(ORACLE_CAP)?;
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!("k = {k} must lie in 1..={}", g.n())));
    }
    let mut query = WitnessQuery { allow_uncolored: false, ..WitnessQuery::reaching(Variant::Proper, k as Color) };
    if let Some(r) = root {
        query = query.force(r, k as Color);
    }
    count_assignments(g, &query)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::binomial_tree;

    #[test]
    fn xp_small_cases() {
        let p4 = Graph::path(4);
        let w = xp_grundy_at_least_k(&p4, 3).unwrap().unwrap();
        assert!(w.validate(&p4).unwrap());
        assert!(w.vertices.len() <= 4);
        assert!(xp_grundy_at_least_k(&Graph::cycle(4), 3).unwrap().is_none());
        assert!(xp_grundy_at_least_k(&Graph::empty(4), 2).unwrap().is_none());
        assert!(xp_grundy_at_least_k(&Graph::path(2), 2).unwrap().is_some());
        assert!(matches!(xp_grundy_at_least_k(&p4, 6), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn local_small_cases() {
        assert!(local_grundy_at_least_k(&Graph::star(5), 2).unwrap().is_some());
        assert!(local_grundy_at_least_k(&Graph::star(5), 3).unwrap().is_none());
        let p4 = Graph::path(4);
        let w = local_grundy_at_least_k(&p4, 3).unwrap().unwrap();
        assert!(w.validate(&p4).unwrap());
        assert!(local_grundy_at_least_k(&p4, 4).unwrap().is_none());
    }

    #[test]
    fn sparse_bound_values() {
        assert_eq!(sparse_upper_bound(&Graph::empty(1)).unwrap(), 2);
        assert_eq!(sparse_upper_bound(&Graph::path(8)).unwrap(), 5);
        assert_eq!(sparse_upper_bound(&Graph::path(9)).unwrap(), 6);
        let (_, t5) = binomial_tree(5).unwrap();
        assert_eq!(sparse_upper_bound(&t5).unwrap(), 6);
        assert!(sparse_upper_bound(&Graph::empty(0)).is_err());
    }

    #[test]
    fn two_colorings_of_t3_and_k2() {
        let (_, t3) = binomial_tree(3).unwrap();
        assert_eq!(count_grundy_colorings_achieving(&t3, 3, None).unwrap(), 2);
        assert_eq!(count_grundy_colorings_achieving(&t3, 3, Some(0)).unwrap(), 1);
        assert_eq!(count_grundy_colorings_achieving(&Graph::path(2), 2, None).unwrap(), 2);
    }

    #[test]
    fn binomial_coefficients() {
        assert_eq!(binomial(20, 16), 4845);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }
}
