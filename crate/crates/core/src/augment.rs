//! Coloring-based matching augmentation.
//!
//! Given an edge `e` and, for every `v ∈ e`, a matching `M_v` missing `v`,
//! the multiset union of the `M_v` plus `e` has maximum degree at most `|e|`:
//! each matching touches a vertex at most once, and `e`'s own vertices are
//! missed by their matchings. Coloring that union in `|e|` colors and taking
//! the heaviest class yields a matching of weight at least
//! `1 + min_v d(M_v)` by a counting argument, which drives the greedy
//! augmentation loop.

use crate::balance::{is_balanced, require_balanced};
use crate::coloring::edge_coloring_in;
use crate::error::{Error, Result};
use crate::hypergraph::{DeleteMode, Hypergraph};
use crate::set::IdSet;
use crate::solve::{is_matching, max_matching, Matching, WeightFn};
use crate::Limits;
use std::cmp::Ordering;

/// The multiset union hypergraph assembled from a base edge and a family of
/// matchings, one per base-edge vertex.
#[derive(Debug, Clone)]
pub struct UnionInstance {
    pub base_edge: usize,
    /// H̃: vertex set `∪V(M_v) ∪ e`, edge multiset `⋃* M_v ∪ {e}`.
    pub hypergraph: Hypergraph,
    /// Maps each edge instance of H̃ back to its index in the source.
    pub origin: Vec<usize>,
    /// `(v, M_v)` pairs in ascending vertex order.
    pub family: Vec<(usize, IdSet)>,
}

/// Validates the family and assembles H̃. The family must hold exactly one
/// matching per vertex of `e`, each missing its vertex.
pub fn build_union(
    h: &Hypergraph,
    e: usize,
    family: &[(usize, IdSet)],
    limits: &Limits,
) -> Result<UnionInstance> {
    if e >= h.edge_count() {
        return Err(Error::UnknownTarget { target: e });
    }
    let base = h.edge(e);
    let keys: IdSet = family.iter().map(|(v, _)| *v).collect();
    if keys != base || family.len() != base.len() {
        return Err(Error::UnknownTarget {
            target: keys.minus(base).min().unwrap_or(0),
        });
    }
    let mut sorted: Vec<(usize, IdSet)> = family.to_vec();
    sorted.sort_by_key(|(v, _)| *v);
    for (v, matching) in &sorted {
        if !is_matching(h, *matching) {
            return Err(Error::NotAMatching(*matching));
        }
        let covered = matching
            .iter()
            .fold(IdSet::EMPTY, |acc, m| acc.union(h.edge(m)));
        if covered.contains(*v) {
            return Err(Error::MatchingCoversForbiddenVertex { vertex: *v });
        }
    }

    let mut edges = Vec::new();
    let mut origin = Vec::new();
    let mut vertices = base;
    for (_, matching) in &sorted {
        for m in matching.iter() {
            edges.push(h.edge(m));
            origin.push(m);
            vertices = vertices.union(h.edge(m));
        }
    }
    edges.push(base);
    origin.push(e);

    let hypergraph = Hypergraph::from_parts(vertices, edges, true)?;
    assert!(
        hypergraph.max_degree() <= base.len(),
        "multiset union exceeded the base edge size bound"
    );
    if !is_balanced(&hypergraph, limits)?.balanced {
        return Err(Error::NotBalanced);
    }
    Ok(UnionInstance {
        base_edge: e,
        hypergraph,
        origin,
        family: sorted,
    })
}

/// One augmentation: colors H̃ in `|e|` colors and returns the heaviest color
/// class as a matching of the source hypergraph. The result weighs at least
/// `1 + min_v d(M_v)`.
pub fn augment_step(
    h: &Hypergraph,
    d: &WeightFn,
    e: usize,
    family: &[(usize, IdSet)],
    limits: &Limits,
) -> Result<Matching> {
    d.validate(h)?;
    if d.edge_weight(h, e) == 0 {
        return Err(Error::InvalidWeight(format!(
            "base edge {e} must have positive weight"
        )));
    }
    let union = build_union(h, e, family, limits)?;
    let coloring = edge_coloring_in(&union.hypergraph, h.edge(e).len(), limits)?;

    let classes = coloring.classes();
    let mut best: Option<(u64, IdSet)> = None;
    let mut total = 0u64;
    for class in &classes {
        let edges: IdSet = class.iter().map(|&inst| union.origin[inst]).collect();
        // Two instances of one edge intersect, so a class never collapses.
        assert_eq!(edges.len(), class.len(), "duplicate edge in a color class");
        let weight = d.matching_weight(h, edges);
        total += weight;
        let better = match &best {
            None => true,
            Some((bw, bset)) => {
                weight > *bw || (weight == *bw && edges.cmp_lex(*bset) == Ordering::Less)
            }
        };
        if better {
            best = Some((weight, edges));
        }
    }
    let instance_total: u64 = union
        .origin
        .iter()
        .map(|&orig| d.edge_weight(h, orig))
        .sum();
    debug_assert_eq!(total, instance_total, "classes must partition the union");

    let (weight, edges) = best.expect("the union holds at least the base edge");
    debug_assert!(is_matching(h, edges));
    let min_family = union
        .family
        .iter()
        .map(|(_, m)| d.matching_weight(h, *m))
        .min()
        .unwrap_or(0);
    // The proof's counting bound: weight ≥ 1 + min_v d(M_v).
    assert!(
        weight > min_family,
        "augmentation bound failed: {weight} < 1 + {min_family}"
    );
    Ok(Matching { edges, weight })
}

#[derive(Debug, Clone)]
pub struct AugmentStep {
    pub edge: usize,
    /// `(v, d-weight of the chosen matching missing v)` per base-edge vertex.
    pub family_weights: Vec<(usize, u64)>,
    pub matching: Matching,
}

#[derive(Debug, Clone)]
pub struct AugmentationRun {
    pub steps: Vec<AugmentStep>,
    pub matching: Matching,
    pub gamma: u64,
    /// The loop always ends in a stall (no edge admits a qualifying family);
    /// whether that implies optimality is open, so the solver cross-check is
    /// reported separately.
    pub stalled: bool,
    pub optimal: bool,
}

/// Greedy demonstrator: repeatedly augments through the first edge whose
/// per-vertex maximum matchings of `H − v` all reach the current weight, then
/// cross-checks the final weight against the exact solver.
pub fn matching_via_augmentation(
    h: &Hypergraph,
    d: &WeightFn,
    limits: &Limits,
) -> Result<AugmentationRun> {
    matching_via_augmentation_from(h, d, IdSet::EMPTY, limits)
}

/// [`matching_via_augmentation`] seeded with a starting matching.
pub fn matching_via_augmentation_from(
    h: &Hypergraph,
    d: &WeightFn,
    start: IdSet,
    limits: &Limits,
) -> Result<AugmentationRun> {
    require_balanced(h, limits)?;
    d.validate(h)?;
    if !is_matching(h, start) {
        return Err(Error::NotAMatching(start));
    }

    let mut current = Matching {
        edges: start,
        weight: d.matching_weight(h, start),
    };
    let mut steps = Vec::new();
    loop {
        let mut progressed = false;
        for e in 0..h.edge_count() {
            if d.edge_weight(h, e) == 0 {
                continue;
            }
            let mut family = Vec::new();
            for v in h.edge(e).iter() {
                let matching = best_matching_missing(h, d, v, limits)?;
                family.push((v, matching));
            }
            let min_family = family
                .iter()
                .map(|(_, m)| d.matching_weight(h, *m))
                .min()
                .unwrap_or(0);
            if min_family < current.weight {
                continue;
            }
            let family_weights: Vec<(usize, u64)> = family
                .iter()
                .map(|(v, m)| (*v, d.matching_weight(h, *m)))
                .collect();
            let next = augment_step(h, d, e, &family, limits)?;
            assert!(next.weight > current.weight);
            steps.push(AugmentStep {
                edge: e,
                family_weights,
                matching: next.clone(),
            });
            current = next;
            progressed = true;
            break;
        }
        if !progressed {
            break;
        }
    }

    let gamma = max_matching(h, d, limits)?.weight;
    assert!(current.weight <= gamma);
    Ok(AugmentationRun {
        steps,
        optimal: current.weight == gamma,
        stalled: true,
        matching: current,
        gamma,
    })
}

/// A d-maximum matching of `H − v`, read back as a matching of `H` that
/// misses `v`. An edgeless remainder yields the empty matching.
fn best_matching_missing(h: &Hypergraph, d: &WeightFn, v: usize, limits: &Limits) -> Result<IdSet> {
    let (reduced, origin) = match h.delete_tracked(DeleteMode::StrongVertex, v) {
        Ok(pair) => pair,
        Err(Error::ResultEmpty) => return Ok(IdSet::EMPTY),
        Err(err) => return Err(err),
    };
    let rd = match d {
        WeightFn::Custom(values) => WeightFn::Custom(origin.iter().map(|&e| values[e]).collect()),
        other => other.clone(),
    };
    let matching = max_matching(&reduced, &rd, limits)?;
    let edges: IdSet = matching.edges.iter().map(|i| origin[i]).collect();
    debug_assert!(!edges
        .iter()
        .fold(IdSet::EMPTY, |acc, m| acc.union(h.edge(m)))
        .contains(v));
    Ok(edges)
}
