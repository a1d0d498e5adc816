//! Subset dynamic programs for `Γ` and `Γ'`.
//!
//! `table[S]` holds the largest number of colors a first-fit coloring of
//! `G[S]` can reach. For the Grundy number the last layer peeled off `S` is a
//! maximal independent set of `G[S]`; for the weak variant it is a minimal
//! dominating set. Subsets are processed by increasing size, and subsets of
//! equal size are filled in parallel.

use rayon::prelude::*;

use crate::coloring::{first_fit, Color, ColorAssignment, Variant, VertexOrdering};
use crate::enumerate::{maximal_independent_sets, minimal_dominating_sets};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default vertex cap of the dynamic programs.
pub const DP_CAP: usize = 24;

/// Hard ceiling for [`DpConfig::cap`]: a table of `2^32` bytes.
pub const DP_HARD_CAP: usize = 32;

#[derive(Debug, Clone, Copy)]
pub struct DpConfig {
    pub cap: usize,
}

impl Default for DpConfig {
    fn default() -> Self {
        DpConfig { cap: DP_CAP }
    }
}

impl DpConfig {
    /// Bytes of the value table for an `n`-vertex graph.
    pub fn table_bytes(n: usize) -> u64 {
        u32::try_from(n).ok().and_then(|n| 1u64.checked_shl(n)).unwrap_or(u64::MAX)
    }
}

/// Dense table indexed by vertex bitmask.
#[derive(Debug, Clone)]
pub struct DpTable {
    n: usize,
    variant: Variant,
    values: Vec<u8>,
}

impl DpTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    #[inline]
    pub fn get(&self, s: VertexSet) -> usize {
        self.values[s.bits() as usize] as usize
    }

    /// Value of the whole vertex set.
    pub fn value(&self) -> usize {
        self.get(VertexSet::full(self.n))
    }

    pub fn bytes(&self) -> usize {
        self.values.len()
    }

    /// Color classes `W_1, .., W_k` of an optimal coloring, recovered by
    /// re-running the enumerator and taking the first layer that matches.
    pub fn layers(&self, g: &Graph) -> Vec<VertexSet> {
        let mut layers = Vec::new();
        let mut s = VertexSet::full(self.n);
        while !s.is_empty() {
            let target = self.get(s);
            let x = self
                .candidates(g, s)
                .find(|&x| !x.is_empty() && self.get(s - x) + 1 == target)
                .expect("table entry is realized by some layer");
            layers.push(x);
            s = s - x;
        }
        layers
    }

    fn candidates<'g>(&self, g: &'g Graph, s: VertexSet) -> Box<dyn Iterator<Item = VertexSet> + 'g> {
        match self.variant {
            Variant::Weak => Box::new(minimal_dominating_sets(g, s)),
            _ => Box::new(maximal_independent_sets(g, s)),
        }
    }
}

/// `Γ(g)` together with an ordering whose first-fit coloring uses `Γ(g)` colors.
pub fn grundy_number_dp(g: &Graph) -> Result<(usize, VertexOrdering)> {
    grundy_number_dp_with(g, DpConfig::default())
}

pub fn grundy_number_dp_with(g: &Graph, config: DpConfig) -> Result<(usize, VertexOrdering)> {
    let table = fill_table(g, Variant::Proper, config)?;
    let ordering: Vec<usize> = table.layers(g).into_iter().flat_map(VertexSet::iter).collect();
    let ordering = VertexOrdering(ordering);
    debug_assert_eq!(first_fit(g, &ordering).map(|c| c.max_color() as usize), Ok(table.value()));
    Ok((table.value(), ordering))
}

/// `Γ'(g)` together with a total assignment that is a weak witness for it.
pub fn weak_grundy_number_dp(g: &Graph) -> Result<(usize, ColorAssignment)> {
    weak_grundy_number_dp_with(g, DpConfig::default())
}

pub fn weak_grundy_number_dp_with(g: &Graph, config: DpConfig) -> Result<(usize, ColorAssignment)> {
    let table = fill_table(g, Variant::Weak, config)?;
    let mut phi = ColorAssignment::uncolored(g.n());
    for (i, layer) in table.layers(g).into_iter().enumerate() {
        for v in layer.iter() {
            phi.set(v, (i + 1) as Color);
        }
    }
    Ok((table.value(), phi))
}

/// Fills the table for `Variant::Proper` (Grundy) or `Variant::Weak`.
pub fn fill_table(g: &Graph, variant: Variant, config: DpConfig) -> Result<DpTable> {
    if variant == Variant::Connected {
        return Err(Error::ConnectedVariantUnsupported);
    }
    let cap = config.cap.min(DP_HARD_CAP);
    g.require_at_most(cap)?;
    let n = g.n();
    let mut values = vec![0u8; 1usize << n];
    for size in 1..=n {
        let level: Vec<u64> = SubsetsOfSize::new(n, size).collect();
        let computed: Vec<u8> = level
            .par_iter()
            .map(|&bits| best_layer(g, variant, &values, VertexSet(bits)))
            .collect();
        for (bits, value) in level.into_iter().zip(computed) {
            values[bits as usize] = value;
        }
    }
    Ok(DpTable { n, variant, values })
}

fn best_layer(g: &Graph, variant: Variant, values: &[u8], s: VertexSet) -> u8 {
    let bound = (g.max_degree_in(s) + 1).min(s.len()) as u8;
    let mut best = 0u8;
    let mut consider = |x: VertexSet| {
        best = best.max(values[(s - x).bits() as usize] + 1);
        best >= bound
    };
    match variant {
        Variant::Weak => {
            for x in minimal_dominating_sets(g, s) {
                if consider(x) {
                    break;
                }
            }
        }
        _ => {
            for x in maximal_independent_sets(g, s) {
                if consider(x) {
                    break;
                }
            }
        }
    }
    best
}

/// All `n`-bit masks with `size` bits set, in increasing order.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    SubsetsOfSize::new(n, size)
}

/// Gosper's hack.
struct SubsetsOfSize {
    next: Option<u64>,
    limit: u64,
}

impl SubsetsOfSize {
    fn new(n: usize, size: usize) -> Self {
        debug_assert!(size >= 1 && size <= n && n < 64);
        SubsetsOfSize { next: Some((1u64 << size) - 1), limit: 1u64 << n }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        let low = cur & cur.wrapping_neg();
        let ripple = cur + low;
        self.next = if ripple == 0 { None } else { Some((((ripple ^ cur) >> 2) / low) | ripple) };
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate_partition;

    #[test]
    fn gosper_counts() {
        assert_eq!(SubsetsOfSize::new(5, 2).count(), 10);
        assert_eq!(SubsetsOfSize::new(6, 6).collect::<Vec<_>>(), vec![63]);
        assert_eq!(SubsetsOfSize::new(4, 1).collect::<Vec<_>>(), vec![1, 2, 4, 8]);
    }

    #[test]
    fn grundy_small_cases() {
        for n in 1..=6 {
            assert_eq!(grundy_number_dp(&Graph::complete(n)).unwrap().0, n);
        }
        assert_eq!(grundy_number_dp(&Graph::cycle(4)).unwrap().0, 2);
        assert_eq!(grundy_number_dp(&Graph::path(4)).unwrap().0, 3);
        assert_eq!(grundy_number_dp(&Graph::empty(0)).unwrap().0, 0);
        assert_eq!(grundy_number_dp(&Graph::empty(3)).unwrap().0, 1);
    }

    #[test]
    fn weak_small_cases() {
        assert_eq!(weak_grundy_number_dp(&Graph::path(2)).unwrap().0, 2);
        assert_eq!(weak_grundy_number_dp(&Graph::complete(3)).unwrap().0, 3);
        assert_eq!(weak_grundy_number_dp(&Graph::star(3)).unwrap().0, 2);
    }

    #[test]
    fn certificates_replay() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3), (2, 5)])
            .unwrap();
        let (value, sigma) = grundy_number_dp(&g).unwrap();
        assert_eq!(sigma.len(), 7);
        assert_eq!(first_fit(&g, &sigma).unwrap().max_color() as usize, value);
        let (wvalue, phi) = weak_grundy_number_dp(&g).unwrap();
        assert!(wvalue >= value);
        assert_eq!(phi.colored_count(), 7);
        assert_eq!(phi.max_color() as usize, wvalue);
        assert!(validate_partition(&g, &phi, Variant::Weak).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(25);
        assert!(matches!(grundy_number_dp(&g), Err(Error::TooLarge { n: 25, cap: 24 })));
        let g = Graph::empty(9);
        let tight = DpConfig { cap: 8 };
        assert!(grundy_number_dp_with(&g, tight).is_err());
    }
}
