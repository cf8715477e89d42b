//! Exact weighted matching and integer vertex-cover solvers, enumeration of
//! all optima, and the duality verifiers built on them.
//!
//! Both solvers are branch and bound over bitsets. Matchings branch on
//! use/skip of the lexicographically first remaining edge with the remaining
//! weight sum as upper bound; covers branch per vertex over `0..=cap` with a
//! greedy disjoint-residual lower bound. Results are canonical: among optima,
//! the lexicographically smallest edge-index set resp. value vector.

use crate::balance::require_balanced;
use crate::error::{Error, Result};
use crate::hypergraph::{DeleteMode, Hypergraph};
use crate::set::IdSet;
use crate::{Budget, Limits};
use std::cmp::Ordering;

/// Edge weight function `d : E → ℕ`. `EWeights` is the constant 1 preset
/// (matching number counts edges), `VWeights` the size preset `d(e) = |e|`
/// (matching number counts covered vertices); both are recomputed from the
/// hypergraph on every call rather than stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightFn {
    EWeights,
    VWeights,
    Custom(Vec<u64>),
}

impl WeightFn {
    pub fn edge_weight(&self, h: &Hypergraph, e: usize) -> u64 {
        match self {
            WeightFn::EWeights => 1,
            WeightFn::VWeights => h.edge(e).len() as u64,
            WeightFn::Custom(values) => values[e],
        }
    }

    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        if let WeightFn::Custom(values) = self {
            if values.len() != h.edge_count() {
                return Err(Error::InvalidWeight(format!(
                    "{} weights for {} edges",
                    values.len(),
                    h.edge_count()
                )));
            }
        }
        Ok(())
    }

    fn all_weights(&self, h: &Hypergraph) -> Vec<u64> {
        (0..h.edge_count())
            .map(|e| self.edge_weight(h, e))
            .collect()
    }

    pub fn matching_weight(&self, h: &Hypergraph, edges: IdSet) -> u64 {
        edges.iter().map(|e| self.edge_weight(h, e)).sum()
    }
}

/// A set of pairwise-disjoint edges with its weight under the weight function
/// it was computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: IdSet,
    pub weight: u64,
}

impl Matching {
    /// Vertices covered by the matching, V(M).
    pub fn covered(&self, h: &Hypergraph) -> IdSet {
        self.edges
            .iter()
            .fold(IdSet::EMPTY, |acc, e| acc.union(h.edge(e)))
    }
}

pub fn is_matching(h: &Hypergraph, edges: IdSet) -> bool {
    let mut covered = IdSet::EMPTY;
    for e in edges.iter() {
        if e >= h.edge_count() || h.edge(e).intersects(covered) {
            return false;
        }
        covered = covered.union(h.edge(e));
    }
    true
}

/// Nonnegative integer vertex vector with `Σ_{v∈e} x_v ≥ d(e)` on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverVector {
    values: Vec<u64>,
    pub total: u64,
}

impl CoverVector {
    fn new(values: Vec<u64>) -> Self {
        let total = values.iter().sum();
        CoverVector { values, total }
    }

    pub fn value(&self, v: usize) -> u64 {
        self.values.get(v).copied().unwrap_or(0)
    }

    /// Values over the hypergraph's vertices in ascending id order.
    pub fn active_values(&self, h: &Hypergraph) -> Vec<u64> {
        h.vertices().iter().map(|v| self.value(v)).collect()
    }

    pub fn is_feasible(&self, h: &Hypergraph, d: &WeightFn) -> bool {
        (0..h.edge_count())
            .all(|e| h.edge(e).iter().map(|v| self.value(v)).sum::<u64>() >= d.edge_weight(h, e))
    }

    fn cmp_lex(&self, other: &CoverVector, order: &[usize]) -> Ordering {
        for &v in order {
            match self.value(v).cmp(&other.value(v)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

struct MatchSearch<'a> {
    weights: Vec<u64>,
    suffix: Vec<u64>,
    edges: &'a [IdSet],
    budget: Budget,
    best: Option<(u64, IdSet)>,
    collect: Option<(u64, Vec<IdSet>)>,
}

impl<'a> MatchSearch<'a> {
    fn run(&mut self, idx: usize, used: IdSet, chosen: IdSet, weight: u64) -> Result<()> {
        self.budget.spend(1)?;
        let bound = weight + self.suffix[idx];
        match (&self.best, &self.collect) {
            (_, Some((target, _))) if bound < *target => return Ok(()),
            (Some((bw, _)), None) if bound < *bw => return Ok(()),
            _ => {}
        }
        if idx == self.edges.len() {
            match &mut self.collect {
                Some((target, list)) => {
                    if weight == *target {
                        list.push(chosen);
                    }
                }
                None => {
                    let better = match &self.best {
                        None => true,
                        Some((bw, bset)) => {
                            weight > *bw
                                || (weight == *bw && chosen.cmp_lex(*bset) == Ordering::Less)
                        }
                    };
                    if better {
                        self.best = Some((weight, chosen));
                    }
                }
            }
            return Ok(());
        }
        let edge = self.edges[idx];
        if !edge.intersects(used) {
            let mut with = chosen;
            with.insert(idx);
            self.run(idx + 1, used.union(edge), with, weight + self.weights[idx])?;
        }
        self.run(idx + 1, used, chosen, weight)
    }
}

/// A d-maximum matching; deterministic tie-break by lexicographically
/// smallest edge-index set among the optima.
pub fn max_matching(h: &Hypergraph, d: &WeightFn, limits: &Limits) -> Result<Matching> {
    d.validate(h)?;
    let weights = d.all_weights(h);
    let mut suffix = vec![0u64; weights.len() + 1];
    for i in (0..weights.len()).rev() {
        suffix[i] = suffix[i + 1] + weights[i];
    }
    let mut search = MatchSearch {
        weights,
        suffix,
        edges: h.edges(),
        budget: Budget::new(limits),
        best: None,
        collect: None,
    };
    search.run(0, IdSet::EMPTY, IdSet::EMPTY, 0)?;
    let (weight, edges) = search.best.expect("the empty matching is always visited");
    Ok(Matching { edges, weight })
}

/// The complete list of d-maximum matchings in canonical (lexicographic)
/// order.
pub fn enumerate_max_matchings(
    h: &Hypergraph,
    d: &WeightFn,
    limits: &Limits,
) -> Result<Vec<Matching>> {
    let gamma = max_matching(h, d, limits)?.weight;
    let weights = d.all_weights(h);
    let mut suffix = vec![0u64; weights.len() + 1];
    for i in (0..weights.len()).rev() {
        suffix[i] = suffix[i + 1] + weights[i];
    }
    let mut search = MatchSearch {
        weights,
        suffix,
        edges: h.edges(),
        budget: Budget::new(limits),
        best: None,
        collect: Some((gamma, Vec::new())),
    };
    search.run(0, IdSet::EMPTY, IdSet::EMPTY, 0)?;
    let (_, mut sets) = search.collect.unwrap();
    sets.sort_by(|a, b| a.cmp_lex(*b));
    Ok(sets
        .into_iter()
        .map(|edges| Matching {
            edges,
            weight: gamma,
        })
        .collect())
}

struct CoverSearch {
    order: Vec<usize>,
    caps: Vec<u64>,
    demands: Vec<u64>,
    sums: Vec<u64>,
    rem_caps: Vec<u64>,
    /// Unassigned support of each edge, shrinking as the DFS descends.
    supports: Vec<IdSet>,
    incident: Vec<Vec<usize>>,
    values: Vec<u64>,
    budget: Budget,
    best: Option<(u64, Vec<u64>)>,
    ub_seed: u64,
    collect: Option<(u64, Vec<CoverVector>)>,
}

impl CoverSearch {
    fn new(h: &Hypergraph, d: &WeightFn, limits: &Limits) -> Result<Self> {
        d.validate(h)?;
        let order: Vec<usize> = h.vertices().to_vec();
        let demands = d.all_weights(h);
        // No optimum puts more on a vertex than the largest demand among its
        // edges: any excess can be trimmed without losing feasibility.
        let caps: Vec<u64> = order
            .iter()
            .map(|&v| {
                (0..h.edge_count())
                    .filter(|&e| h.edge(e).contains(v))
                    .map(|e| demands[e])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut rem_caps = vec![0u64; h.edge_count()];
        for (pos, &v) in order.iter().enumerate() {
            for (e, rem) in rem_caps.iter_mut().enumerate() {
                if h.edge(e).contains(v) {
                    *rem += caps[pos];
                }
            }
        }
        let incident: Vec<Vec<usize>> = order
            .iter()
            .map(|&v| {
                (0..h.edge_count())
                    .filter(|&e| h.edge(e).contains(v))
                    .collect()
            })
            .collect();
        let supports: Vec<IdSet> = h.edges().to_vec();
        let ub_seed = caps.iter().sum();
        Ok(CoverSearch {
            order,
            caps,
            demands,
            sums: vec![0; h.edge_count()],
            rem_caps,
            supports,
            incident,
            values: vec![0; IdSet::CAPACITY],
            budget: Budget::new(limits),
            best: None,
            ub_seed,
            collect: None,
        })
    }

    /// Residuals of edges with pairwise-disjoint unassigned supports add up:
    /// a cheap matching-flavored lower bound on the remaining weight.
    fn lower_bound(&self) -> u64 {
        let mut taken = IdSet::EMPTY;
        let mut bound = 0;
        for e in 0..self.demands.len() {
            let residual = self.demands[e].saturating_sub(self.sums[e]);
            if residual == 0 {
                continue;
            }
            let support = self.supports[e];
            if support.is_empty() || support.intersects(taken) {
                continue;
            }
            taken = taken.union(support);
            bound += residual;
        }
        bound
    }

    fn run(&mut self, pos: usize, total: u64) -> Result<()> {
        self.budget.spend(1)?;
        let bound = total + self.lower_bound();
        match &self.collect {
            Some((tau, _)) => {
                if bound > *tau {
                    return Ok(());
                }
            }
            None => {
                if bound > self.ub_seed {
                    return Ok(());
                }
                if let Some((bt, _)) = &self.best {
                    if bound >= *bt {
                        return Ok(());
                    }
                }
            }
        }
        if pos == self.order.len() {
            debug_assert!(self.demands.iter().zip(&self.sums).all(|(d, s)| s >= d));
            match &mut self.collect {
                Some((tau, list)) => {
                    if total == *tau {
                        list.push(CoverVector::new(self.values.clone()));
                    }
                }
                None => {
                    // First hit at each new total is the lex-smallest vector
                    // for that total, so plain replacement is canonical.
                    if self.best.as_ref().is_none_or(|(bt, _)| total < *bt) {
                        self.best = Some((total, self.values.clone()));
                    }
                }
            }
            return Ok(());
        }
        let v = self.order[pos];
        let edges: Vec<usize> = self.incident[pos].clone();
        for e in &edges {
            self.rem_caps[*e] -= self.caps[pos];
            self.supports[*e].remove(v);
        }
        for val in 0..=self.caps[pos] {
            for e in &edges {
                self.sums[*e] += val;
            }
            let feasible = edges
                .iter()
                .all(|&e| self.sums[e] + self.rem_caps[e] >= self.demands[e]);
            if feasible {
                self.values[v] = val;
                self.run(pos + 1, total + val)?;
                self.values[v] = 0;
            }
            for e in &edges {
                self.sums[*e] -= val;
            }
        }
        for e in &edges {
            self.rem_caps[*e] += self.caps[pos];
            self.supports[*e].insert(v);
        }
        Ok(())
    }
}

/// A minimum integer d-vertex cover; deterministic tie-break by
/// lexicographically smallest value vector among the optima.
pub fn min_vertex_cover(h: &Hypergraph, d: &WeightFn, limits: &Limits) -> Result<CoverVector> {
    let mut search = CoverSearch::new(h, d, limits)?;
    search.run(0, 0)?;
    let (_, values) = search.best.expect("the cap vector is always feasible");
    Ok(CoverVector::new(values))
}

/// The complete list of minimum integer d-vertex covers in canonical
/// (lexicographic) order.
pub fn enumerate_min_covers(
    h: &Hypergraph,
    d: &WeightFn,
    limits: &Limits,
) -> Result<Vec<CoverVector>> {
    let tau = min_vertex_cover(h, d, limits)?.total;
    let mut search = CoverSearch::new(h, d, limits)?;
    search.collect = Some((tau, Vec::new()));
    search.run(0, 0)?;
    let (_, covers) = search.collect.unwrap();
    let order: Vec<usize> = h.vertices().to_vec();
    debug_assert!(covers
        .windows(2)
        .all(|w| w[0].cmp_lex(&w[1], &order) == Ordering::Less));
    Ok(covers)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptimaKind {
    Matchings,
    Covers,
}

#[derive(Debug, Clone)]
pub enum Optima {
    Matchings(Vec<Matching>),
    Covers(Vec<CoverVector>),
}

/// Dispatching form of the two enumerators.
pub fn enumerate_optima(
    h: &Hypergraph,
    d: &WeightFn,
    which: OptimaKind,
    limits: &Limits,
) -> Result<Optima> {
    match which {
        OptimaKind::Matchings => Ok(Optima::Matchings(enumerate_max_matchings(h, d, limits)?)),
        OptimaKind::Covers => Ok(Optima::Covers(enumerate_min_covers(h, d, limits)?)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KonigReport {
    pub gamma: u64,
    pub tau: u64,
    pub equal: bool,
}

/// Computes γ_d and τ_d. Zero-weight edges are removed first; they constrain
/// nothing and contribute nothing.
pub fn verify_konig(h: &Hypergraph, d: &WeightFn, limits: &Limits) -> Result<KonigReport> {
    d.validate(h)?;
    let positive: IdSet = (0..h.edge_count())
        .filter(|&e| d.edge_weight(h, e) > 0)
        .collect();
    if positive.is_empty() {
        return Ok(KonigReport {
            gamma: 0,
            tau: 0,
            equal: true,
        });
    }
    let (reduced, origin) = h.partial_tracked(positive)?;
    let rd = match d {
        WeightFn::Custom(values) => WeightFn::Custom(origin.iter().map(|&e| values[e]).collect()),
        other => other.clone(),
    };
    let gamma = max_matching(&reduced, &rd, limits)?.weight;
    let tau = min_vertex_cover(&reduced, &rd, limits)?.total;
    Ok(KonigReport {
        gamma,
        tau,
        equal: gamma == tau,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBoundReport {
    pub hypothesis_holds: bool,
    pub bound: i64,
    pub gamma_v: u64,
}

impl DegreeBoundReport {
    /// True when the hypothesis holds but the bound fails; never on a
    /// balanced instance.
    pub fn violated(&self) -> bool {
        self.hypothesis_holds && (self.gamma_v as i64) < self.bound
    }
}

/// Degree-sum bound on γ_V: if `Σ_v (Δ − deg v) ≤ qΔ − 1` then
/// `γ_V ≥ |V| − q + 1` on balanced instances.
pub fn degree_bound(h: &Hypergraph, q: u64, limits: &Limits) -> Result<DegreeBoundReport> {
    assert!(q >= 1, "q must be at least 1");
    let delta = h.max_degree() as i128;
    let slack: i128 = h
        .vertices()
        .iter()
        .map(|v| delta - h.degree(v).unwrap() as i128)
        .sum();
    // The hypothesis Σ_v (Δ − deg v) ≤ qΔ − 1.
    let hypothesis_holds = slack < q as i128 * delta;
    let bound = h.vertex_count() as i64 - q as i64 + 1;
    let gamma_v = max_matching(h, &WeightFn::VWeights, limits)?.weight;
    Ok(DegreeBoundReport {
        hypothesis_holds,
        bound,
        gamma_v,
    })
}

/// Checks that every minimum V-cover is tight on every edge of the canonical
/// V-maximum matching: `Σ_{v∈m} x_v = |m|`.
pub fn check_matcheq(h: &Hypergraph, limits: &Limits) -> Result<bool> {
    require_balanced(h, limits)?;
    let matching = max_matching(h, &WeightFn::VWeights, limits)?;
    let covers = enumerate_min_covers(h, &WeightFn::VWeights, limits)?;
    for m in matching.edges.iter() {
        let size = h.edge(m).len() as u64;
        for x in &covers {
            let on_edge: u64 = h.edge(m).iter().map(|v| x.value(v)).sum();
            if on_edge != size {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vc1Report {
    pub drop_by_one: bool,
    pub exists_cover_with_xv_1: bool,
    pub iff_holds: bool,
}

/// γ_V drops by exactly one under weak deletion of `v` iff some minimum
/// V-cover has `x_v = 1`.
pub fn check_vc1(h: &Hypergraph, v: usize, limits: &Limits) -> Result<Vc1Report> {
    require_balanced(h, limits)?;
    if !h.vertices().contains(v) {
        return Err(Error::UnknownTarget { target: v });
    }
    let reduced = h.delete(DeleteMode::WeakVertex, v)?;
    let gamma = max_matching(h, &WeightFn::VWeights, limits)?.weight;
    let gamma_del = max_matching(&reduced, &WeightFn::VWeights, limits)?.weight;
    let drop_by_one = gamma_del + 1 == gamma;
    let exists_cover_with_xv_1 = enumerate_min_covers(h, &WeightFn::VWeights, limits)?
        .iter()
        .any(|x| x.value(v) == 1);
    Ok(Vc1Report {
        drop_by_one,
        exists_cover_with_xv_1,
        iff_holds: drop_by_one == exists_cover_with_xv_1,
    })
}
