#![allow(dead_code)]

use grundy_core::Graph;
use proptest::prelude::*;

/// Graphs on `lo..=hi` vertices, each edge present with its own coin flip.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Greedy coloring written from scratch so tests do not lean on the library.
pub fn greedy(adj: &[Vec<bool>], order: &[usize]) -> Vec<usize> {
    let mut color = vec![0usize; adj.len()];
    for &v in order {
        let mut c = 1;
        while order.iter().any(|&u| color[u] == c && adj[u][v]) {
            c += 1;
        }
        color[v] = c;
    }
    color
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Largest first-fit color over all orderings.
pub fn brute_grundy(g: &Graph) -> usize {
    let adj = adjacency(g);
    let mut best = 0;
    for_each_permutation(g.n(), |p| {
        best = best.max(greedy(&adj, p).into_iter().max().unwrap_or(0));
    });
    best
}

/// Largest first-fit color over orderings whose prefixes stay connected.
pub fn brute_connected_grundy(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    let mut best = 0;
    for_each_permutation(n, |p| {
        let connected = (1..n).all(|i| p[..i].iter().any(|&u| adj[u][p[i]]));
        if connected {
            best = best.max(greedy(&adj, p).into_iter().max().unwrap_or(0));
        }
    });
    best
}

/// Every vertex colored `c` sees colors `1..c`; `proper` also forbids equal
/// colors on an edge. Zero means uncolored.
pub fn is_witness(adj: &[Vec<bool>], colors: &[usize], proper: bool) -> bool {
    let n = adj.len();
    (0..n).all(|v| {
        let c = colors[v];
        if c == 0 {
            return true;
        }
        if proper && (0..n).any(|u| adj[v][u] && colors[u] == c) {
            return false;
        }
        (1..c).all(|d| (0..n).any(|u| adj[v][u] && colors[u] == d))
    })
}

/// Largest color of a (weak) witness, by enumerating every assignment into
/// `0..=Δ+1`.
pub fn brute_witness_number(g: &Graph, proper: bool) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    let base = g.max_degree() + 2;
    let mut colors = vec![0usize; n];
    let mut best = 0;
    loop {
        let top = colors.iter().copied().max().unwrap_or(0);
        if top > best && is_witness(&adj, &colors, proper) {
            best = top;
        }
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            colors[i] += 1;
            if colors[i] < base {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Smallest number of colors in a proper coloring.
pub fn brute_chromatic(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    (0..=n)
        .find(|&k| {
            let mut colors = vec![0usize; n];
            fn go(v: usize, k: usize, adj: &[Vec<bool>], colors: &mut [usize]) -> bool {
                if v == adj.len() {
                    return true;
                }
                for c in 1..=k {
                    if (0..v).all(|u| !adj[u][v] || colors[u] != c) {
                        colors[v] = c;
                        if go(v + 1, k, adj, colors) {
                            return true;
                        }
                    }
                }
                false
            }
            go(0, k, &adj, &mut colors)
        })
        .unwrap()
}
