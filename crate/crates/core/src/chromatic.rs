use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest instance [`chromatic_number`] accepts.
pub const CHROMATIC_CAP: usize = 16;

/// Exact chromatic number by backtracking over increasing `k`.
///
/// Only meant for small graphs: it backs the `chi <= Grundy` sanity checks.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_CAP {
        return Err(Error::TooLarge { n: g.n(), cap: CHROMATIC_CAP });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    // Color high-degree vertices first.
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![0usize; g.n()];
    let k = (1..=g.n())
        .find(|&k| colorable(g, &order, 0, k, 0, &mut colors))
        .expect("n colors always suffice");
    Ok(k)
}

fn colorable(g: &Graph, order: &[usize], i: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // Fresh colors are interchangeable, so only try the first unused one.
    let limit = (used + 1).min(k);
    for c in 1..=limit {
        if g.neighbors(v).iter().all(|&u| colors[u] != c) {
            colors[v] = c;
            if colorable(g, order, i + 1, k, used.max(c), colors) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}
