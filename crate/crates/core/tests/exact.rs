mod common;

use common::*;
use grundy_core::chromatic::chromatic_number;
use grundy_core::dimacs::{read_dimacs_graph, write_dimacs_graph};
use grundy_core::enumerate::{maximal_independent_sets, minimal_dominating_sets};
use grundy_core::exact::{
    fill_table, grundy_number_dp, grundy_oracle, weak_grundy_number_dp, weak_grundy_oracle, DpConfig,
};
use grundy_core::{first_fit, validate_partition, Graph, Variant, VertexOrdering, VertexSet};
use proptest::prelude::*;

fn naive_mis(g: &Graph) -> Vec<u64> {
    let adj = adjacency(g);
    let n = g.n();
    let independent = |s: u64| (0..n).all(|u| (0..n).all(|v| !(s >> u & 1 == 1 && s >> v & 1 == 1 && adj[u][v])));
    let dominating = |s: u64| (0..n).all(|v| s >> v & 1 == 1 || (0..n).any(|u| s >> u & 1 == 1 && adj[u][v]));
    (0..1u64 << n).filter(|&s| independent(s) && dominating(s)).collect()
}

fn naive_mds(g: &Graph) -> Vec<u64> {
    let adj = adjacency(g);
    let n = g.n();
    let dominating = |s: u64| (0..n).all(|v| s >> v & 1 == 1 || (0..n).any(|u| s >> u & 1 == 1 && adj[u][v]));
    (0..1u64 << n)
        .filter(|&s| dominating(s) && (0..n).all(|v| s >> v & 1 == 0 || !dominating(s & !(1 << v))))
        .collect()
}

fn sorted(it: impl Iterator<Item = VertexSet>) -> Vec<u64> {
    let mut v: Vec<u64> = it.map(|s| s.bits()).collect();
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn first_fit_is_a_grundy_coloring(g in graphs(1, 12), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..g.n()).collect();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(order.as_mut_slice(), &mut rng);
        let phi = first_fit(&g, &VertexOrdering(order.clone())).unwrap();
        prop_assert!(validate_partition(&g, &phi, Variant::Proper).unwrap());
        prop_assert!(validate_partition(&g, &phi, Variant::Weak).unwrap());
        prop_assert!(phi.max_color() as usize <= g.max_degree() + 1);
        let adj = adjacency(&g);
        let mine = greedy(&adj, &order);
        prop_assert_eq!(phi.as_slice().iter().map(|&c| c as usize).collect::<Vec<_>>(), mine);
    }

    #[test]
    fn dimacs_round_trip(g in graphs(0, 15)) {
        let h = read_dimacs_graph(&write_dimacs_graph(&g)).unwrap();
        prop_assert_eq!(h.n(), g.n());
        prop_assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn enumerators_match_subset_filters(g in graphs(0, 11)) {
        let full = g.vertex_set();
        let mis = sorted(maximal_independent_sets(&g, full));
        prop_assert_eq!(&mis, &naive_mis(&g));
        // Moon-Moser bound on the number of maximal independent sets.
        prop_assert!(mis.len() as f64 <= 3f64.powf(g.n() as f64 / 3.0) + 1e-9);
        prop_assert_eq!(sorted(minimal_dominating_sets(&g, full)), naive_mds(&g));
    }

    #[test]
    fn enumerators_respect_subsets(g in graphs(1, 10), mask in any::<u64>()) {
        let s = VertexSet(mask & g.vertex_set().bits());
        let h = g.induced(&s.to_vec());
        let lift = |bits: u64| -> u64 {
            let verts = s.to_vec();
            (0..verts.len()).filter(|i| bits >> i & 1 == 1).fold(0, |acc, i| acc | 1 << verts[i])
        };
        let mut expect: Vec<u64> = naive_mis(&h).into_iter().map(lift).collect();
        expect.sort_unstable();
        prop_assert_eq!(sorted(maximal_independent_sets(&g, s)), expect);
        let mut expect: Vec<u64> = naive_mds(&h).into_iter().map(lift).collect();
        expect.sort_unstable();
        prop_assert_eq!(sorted(minimal_dominating_sets(&g, s)), expect);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn grundy_dp_matches_orderings(g in graphs(1, 7)) {
        let (value, sigma) = grundy_number_dp(&g).unwrap();
        prop_assert_eq!(value, brute_grundy(&g));
        let phi = first_fit(&g, &sigma).unwrap();
        prop_assert_eq!(phi.max_color() as usize, value);
    }

    #[test]
    fn dp_values_match_assignment_enumeration(g in graphs(1, 6)) {
        let (gamma, _) = grundy_number_dp(&g).unwrap();
        let (weak, phi) = weak_grundy_number_dp(&g).unwrap();
        prop_assert_eq!(gamma, brute_witness_number(&g, true));
        prop_assert_eq!(weak, brute_witness_number(&g, false));
        prop_assert!(validate_partition(&g, &phi, Variant::Weak).unwrap());
        prop_assert_eq!(phi.max_color() as usize, weak);
        prop_assert_eq!(phi.colored_count(), g.n());
    }

    #[test]
    fn oracles_match_dp(g in graphs(1, 8)) {
        let (gamma, _) = grundy_number_dp(&g).unwrap();
        let (weak, _) = weak_grundy_number_dp(&g).unwrap();
        for k in 1..=g.n() + 1 {
            prop_assert_eq!(grundy_oracle(&g, k).unwrap(), k <= gamma);
            prop_assert_eq!(weak_grundy_oracle(&g, k).unwrap(), k <= weak);
        }
    }

    #[test]
    fn sandwich_and_monotonicity(g in graphs(1, 10), mask in any::<u64>()) {
        let chi = chromatic_number(&g).unwrap();
        let (gamma, _) = grundy_number_dp(&g).unwrap();
        let (weak, _) = weak_grundy_number_dp(&g).unwrap();
        prop_assert_eq!(chi, brute_chromatic(&g));
        prop_assert!(chi <= gamma && gamma <= weak && weak <= g.max_degree() + 1);
        let keep = VertexSet(mask & g.vertex_set().bits()).to_vec();
        if !keep.is_empty() {
            let h = g.induced(&keep);
            prop_assert!(grundy_number_dp(&h).unwrap().0 <= gamma);
            prop_assert!(weak_grundy_number_dp(&h).unwrap().0 <= weak);
        }
    }

    #[test]
    fn layers_are_independent_dominating(g in graphs(1, 10)) {
        let table = fill_table(&g, Variant::Proper, DpConfig::default()).unwrap();
        let layers = table.layers(&g);
        prop_assert_eq!(layers.len(), table.value());
        let mut rest = g.vertex_set();
        for w in layers {
            let independent = w.iter().all(|v| !g.neighbor_set(v).intersects(w));
            let dominating = (rest - w).iter().all(|v| g.neighbor_set(v).intersects(w));
            prop_assert!(independent && dominating);
            rest = rest - w;
        }
        prop_assert!(rest.is_empty());
    }

    #[test]
    fn table_is_monotone(g in graphs(1, 9)) {
        for variant in [Variant::Proper, Variant::Weak] {
            let table = fill_table(&g, variant, DpConfig::default()).unwrap();
            prop_assert_eq!(table.get(VertexSet(0)), 0);
            for bits in 0..1u64 << g.n() {
                for v in VertexSet(bits).iter() {
                    prop_assert!(table.get(VertexSet(bits).without(v)) <= table.get(VertexSet(bits)));
                }
            }
        }
    }
}

#[test]
fn small_named_graphs() {
    assert_eq!(grundy_number_dp(&Graph::complete(6)).unwrap().0, 6);
    assert_eq!(grundy_number_dp(&Graph::cycle(4)).unwrap().0, 2);
    assert_eq!(grundy_number_dp(&Graph::path(4)).unwrap().0, 3);
    assert_eq!(brute_grundy(&Graph::path(4)), 3);
    assert_eq!(brute_grundy(&Graph::cycle(4)), 2);
    assert_eq!(weak_grundy_number_dp(&Graph::path(2)).unwrap().0, 2);
    assert_eq!(weak_grundy_number_dp(&Graph::complete(3)).unwrap().0, 3);
    assert_eq!(weak_grundy_number_dp(&Graph::star(3)).unwrap().0, 2);
    assert_eq!(brute_witness_number(&Graph::star(3), false), 2);
}

#[test]
fn dp_cap_is_enforced() {
    let g = Graph::empty(25);
    assert!(grundy_number_dp(&g).is_err());
    let (value, _) = grundy_core::exact::grundy_number_dp_with(&g, DpConfig { cap: 25 }).unwrap();
    assert_eq!(value, 1);
}
