//! Property tests over random instances: structural operator invariants,
//! agreement between the two balancedness deciders, solver-versus-brute-force
//! agreement, heredity, and duality.

use hypermatch::balance::{find_strong_odd_cycle, is_balanced, oracle_balanced_matrix};
use hypermatch::charac::max_weight_stable;
use hypermatch::coloring::{edge_coloring, verify_edge_coloring};
use hypermatch::hypergraph::DeleteMode;
use hypermatch::set::IdSet;
use hypermatch::solve::{is_matching, max_matching, min_vertex_cover, WeightFn};
use hypermatch::walk::{classify_walk, Walk, WalkClass};
use hypermatch::{Hypergraph, Limits};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn limits() -> Limits {
    Limits::default()
}

fn arb_hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::btree_set(1..=n, 1..=n.min(4)), 1..=max_m).prop_map(
            move |edges: Vec<BTreeSet<usize>>| {
                let vertices: IdSet = (1..=n).collect();
                let edge_sets: Vec<IdSet> =
                    edges.into_iter().map(|e| e.into_iter().collect()).collect();
                Hypergraph::from_parts(vertices, edge_sets, false).unwrap()
            },
        )
    })
}

/// Straight transcription of the walk axioms, kept independent of
/// `classify_walk`'s incremental bookkeeping.
fn naive_classify(h: &Hypergraph, vertices: &[usize], edges: &[usize]) -> WalkClass {
    if vertices.len() != edges.len() + 1 || vertices.is_empty() {
        return WalkClass::Invalid;
    }
    if vertices.iter().any(|&v| !h.vertices().contains(v))
        || edges.iter().any(|&e| e >= h.edge_count())
    {
        return WalkClass::Invalid;
    }
    for i in 0..edges.len() {
        if !h.edge(edges[i]).contains(vertices[i]) || !h.edge(edges[i]).contains(vertices[i + 1]) {
            return WalkClass::Invalid;
        }
    }
    let unique_edges: BTreeSet<usize> = edges.iter().copied().collect();
    if unique_edges.len() != edges.len() {
        return WalkClass::Invalid;
    }
    let l = edges.len();
    let closes = l >= 1 && vertices[0] == vertices[l];
    let interior: Vec<usize> = if closes {
        vertices[..l].to_vec()
    } else {
        vertices.to_vec()
    };
    let interior_set: BTreeSet<usize> = interior.iter().copied().collect();
    if interior_set.len() != interior.len() {
        return WalkClass::Invalid;
    }
    let strong = edges.iter().all(|&e| {
        interior_set
            .iter()
            .filter(|&&v| h.edge(e).contains(v))
            .count()
            < 3
    });
    if closes {
        WalkClass::Cycle { strong }
    } else {
        WalkClass::Path { strong }
    }
}

fn brute_force_gamma(h: &Hypergraph, d: &WeightFn) -> u64 {
    let mut best = 0;
    for mask in 0u64..(1 << h.edge_count()) {
        let set = IdSet::from_bits(mask);
        if is_matching(h, set) {
            best = best.max(d.matching_weight(h, set));
        }
    }
    best
}

fn brute_force_tau(h: &Hypergraph, d: &WeightFn) -> u64 {
    let verts = h.vertices().to_vec();
    let cap = (0..h.edge_count())
        .map(|e| d.edge_weight(h, e))
        .max()
        .unwrap_or(0);
    let mut best = u64::MAX;
    let mut values = vec![0u64; IdSet::CAPACITY];
    fn rec(
        h: &Hypergraph,
        d: &WeightFn,
        verts: &[usize],
        cap: u64,
        pos: usize,
        values: &mut Vec<u64>,
        best: &mut u64,
    ) {
        if pos == verts.len() {
            let ok = (0..h.edge_count())
                .all(|e| h.edge(e).iter().map(|v| values[v]).sum::<u64>() >= d.edge_weight(h, e));
            if ok {
                *best = (*best).min(values.iter().sum());
            }
            return;
        }
        for val in 0..=cap {
            values[verts[pos]] = val;
            rec(h, d, verts, cap, pos + 1, values, best);
        }
        values[verts[pos]] = 0;
    }
    rec(h, d, &verts, cap, 0, &mut values, &mut best);
    best
}

proptest! {
    #[test]
    fn induced_sub_invariants(h in arb_hypergraph(7, 6), w_bits in 1u64..64) {
        let w = IdSet::from_bits(w_bits).intersect(h.vertices());
        prop_assume!(!w.is_empty());
        let sub = h.induced_sub(w).unwrap();
        prop_assert_eq!(sub.vertices(), w);
        for e in sub.edges() {
            prop_assert!(!e.is_empty());
            prop_assert!(e.is_subset(w));
        }
    }

    #[test]
    fn dual_swaps_degrees_and_sizes(h in arb_hypergraph(6, 6)) {
        prop_assume!(h.strict_cover());
        let dual = h.dual().unwrap();
        for (i, e) in h.edges().iter().enumerate() {
            prop_assert_eq!(dual.degree(i).unwrap(), e.len());
        }
        for (j, v) in h.vertices().iter().enumerate() {
            prop_assert_eq!(dual.edge(j).len(), h.degree(v).unwrap());
        }
    }

    #[test]
    fn deletions_behave(h in arb_hypergraph(6, 6), pick in 0usize..64) {
        let verts = h.vertices().to_vec();
        let v = verts[pick % verts.len()];
        if let Ok(strong) = h.delete(DeleteMode::StrongVertex, v) {
            for u in strong.vertices().iter() {
                prop_assert!(strong.degree(u).unwrap() <= h.degree(u).unwrap());
            }
        }
        if let Ok((weak, origin)) = h.delete_tracked(DeleteMode::WeakVertex, v) {
            // Every edge that did not contain v survives unchanged.
            for (i, e) in h.edges().iter().enumerate() {
                if !e.contains(v) {
                    let pos = origin.iter().position(|&o| o == i);
                    prop_assert_eq!(weak.edge(pos.unwrap()), *e);
                }
            }
        }
    }

    #[test]
    fn classify_walk_matches_naive(
        h in arb_hypergraph(5, 5),
        raw_vertices in prop::collection::vec(0usize..8, 1..=6),
        raw_edges in prop::collection::vec(0usize..8, 0..=5),
    ) {
        let walk = Walk::new(raw_vertices.clone(), raw_edges.clone());
        prop_assert_eq!(
            classify_walk(&h, &walk),
            naive_classify(&h, &raw_vertices, &raw_edges)
        );
    }

    #[test]
    fn balance_deciders_agree(h in arb_hypergraph(6, 6)) {
        let cert = is_balanced(&h, &limits()).unwrap();
        let oracle = oracle_balanced_matrix(&h, &limits()).unwrap();
        prop_assert_eq!(cert.balanced, oracle);
        if let Some(witness) = cert.witness {
            prop_assert!(classify_walk(&h, &witness).is_strong_cycle());
            prop_assert!(witness.len() % 2 == 1 && witness.len() >= 3);
        }
    }

    #[test]
    fn heredity_of_balancedness(h in arb_hypergraph(6, 5), w_bits in 1u64..64, f_bits in 1u64..64) {
        prop_assume!(is_balanced(&h, &limits()).unwrap().balanced);

        let w = IdSet::from_bits(w_bits).intersect(h.vertices());
        if !w.is_empty() {
            let sub = h.induced_sub(w).unwrap();
            prop_assert!(is_balanced(&sub, &limits()).unwrap().balanced);
        }
        let f = IdSet::from_bits(f_bits).intersect(IdSet::first_n(h.edge_count()));
        if !f.is_empty() {
            let part = h.partial(f).unwrap();
            prop_assert!(is_balanced(&part, &limits()).unwrap().balanced);
        }
        for v in h.vertices().iter() {
            for mode in [DeleteMode::StrongVertex, DeleteMode::WeakVertex] {
                if let Ok(reduced) = h.delete(mode, v) {
                    prop_assert!(is_balanced(&reduced, &limits()).unwrap().balanced);
                }
            }
        }
        if h.strict_cover() {
            prop_assert!(is_balanced(&h.dual().unwrap(), &limits()).unwrap().balanced);
        }
    }

    #[test]
    fn solvers_match_brute_force(h in arb_hypergraph(5, 5), custom in prop::collection::vec(0u64..4, 5)) {
        let weight_fns = [
            WeightFn::EWeights,
            WeightFn::VWeights,
            WeightFn::Custom(custom[..h.edge_count()].to_vec()),
        ];
        for d in weight_fns {
            let gamma = max_matching(&h, &d, &limits()).unwrap();
            prop_assert_eq!(gamma.weight, brute_force_gamma(&h, &d));
            prop_assert!(is_matching(&h, gamma.edges));
            let tau = min_vertex_cover(&h, &d, &limits()).unwrap();
            prop_assert_eq!(tau.total, brute_force_tau(&h, &d));
            prop_assert!(tau.is_feasible(&h, &d));
            // Weak duality.
            prop_assert!(gamma.weight <= tau.total);
        }
    }

    #[test]
    fn coloring_is_proper_on_balanced(h in arb_hypergraph(6, 6)) {
        prop_assume!(is_balanced(&h, &limits()).unwrap().balanced);
        let coloring = edge_coloring(&h, &limits()).unwrap();
        prop_assert!(coloring.k <= h.max_degree());
        prop_assert!(verify_edge_coloring(&h, &coloring));
        for class in coloring.classes() {
            let set: IdSet = class.iter().copied().collect();
            prop_assert!(is_matching(&h, set));
        }
    }

    #[test]
    fn matchings_are_stable_sets_of_the_dual(h in arb_hypergraph(5, 5), custom in prop::collection::vec(0u64..4, 5)) {
        prop_assume!(h.strict_cover());
        let d = WeightFn::Custom(custom[..h.edge_count()].to_vec());
        let gamma = max_matching(&h, &d, &limits()).unwrap().weight;
        let dual = h.dual().unwrap();
        // Dual vertex weights: dual vertex e carries d(e).
        let dual_weights: Vec<u64> = (0..h.edge_count())
            .map(|e| d.edge_weight(&h, e))
            .collect();
        let stable = max_weight_stable(&dual, &dual_weights, &limits()).unwrap();
        prop_assert_eq!(gamma, stable.weight);
    }

    #[test]
    fn find_strong_odd_cycle_is_sound(h in arb_hypergraph(6, 6)) {
        if let Some(walk) = find_strong_odd_cycle(&h, &limits()).unwrap() {
            prop_assert!(classify_walk(&h, &walk).is_strong_cycle());
            prop_assert!(walk.len() % 2 == 1);
        }
    }
}
