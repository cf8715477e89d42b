//! Deterministic, seeded generators of balanced and unbalanced instances.
//!
//! The PRNG is SplitMix64 (the Steele–Lea–Flood mixer), implemented here so
//! the instance streams are part of the test contract and reproducible
//! byte-for-byte on any platform. Every generator post-validates its
//! balancedness claim through the `balance` module instead of trusting the
//! construction.

use crate::balance::is_balanced;
use crate::error::{Error, Result};
use crate::hypergraph::{DeleteMode, Hypergraph};
use crate::set::IdSet;
use crate::Limits;

/// SplitMix64: 64-bit state, golden-gamma increment, two xor-shift-multiply
/// mixing rounds.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` (modulo; bias is irrelevant at these
    /// bounds and keeping the reduction trivial keeps ports trivial).
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }

    /// Bernoulli draw from the top 53 bits.
    pub fn chance(&mut self, p: f64) -> bool {
        if p >= 1.0 {
            return true;
        }
        if p <= 0.0 {
            return false;
        }
        let unit = (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        unit < p
    }
}

/// Declarative generator input: one spec, one instance, bit-for-bit.
#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    Interval {
        n: usize,
        m: usize,
        max_len: usize,
        seed: u64,
    },
    Bipartite {
        n1: usize,
        n2: usize,
        p: f64,
        seed: u64,
    },
    /// Random closure ops applied to an interval base drawn from the same
    /// seed.
    Closure {
        n: usize,
        m: usize,
        max_len: usize,
        ops: usize,
        seed: u64,
    },
    Planted {
        n: usize,
        seed: u64,
    },
}

pub fn generate(spec: &GenSpec) -> Result<Hypergraph> {
    match *spec {
        GenSpec::Interval {
            n,
            m,
            max_len,
            seed,
        } => gen_interval(n, m, max_len, seed),
        GenSpec::Bipartite { n1, n2, p, seed } => gen_bipartite(n1, n2, p, seed),
        GenSpec::Closure {
            n,
            m,
            max_len,
            ops,
            seed,
        } => {
            let mut rng = SplitMix64::new(seed);
            let base_seed = rng.next_u64();
            let ops_seed = rng.next_u64();
            let base = gen_interval(n, m, max_len, base_seed)?;
            gen_closure(&base, ops, ops_seed)
        }
        GenSpec::Planted { n, seed } => gen_planted(n, seed),
    }
}

fn check_dims(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::GenerationFailed("need n ≥ 1 and m ≥ 1".into()));
    }
    if n >= IdSet::CAPACITY {
        return Err(Error::CapacityExceeded {
            id: n,
            limit: IdSet::CAPACITY,
        });
    }
    if m > IdSet::CAPACITY {
        return Err(Error::CapacityExceeded {
            id: m,
            limit: IdSet::CAPACITY,
        });
    }
    Ok(())
}

/// Random interval hypergraph on the line `1..=n`: every edge is a
/// contiguous run. Interval families are balanced; asserted after the fact.
pub fn gen_interval(n: usize, m: usize, max_len: usize, seed: u64) -> Result<Hypergraph> {
    check_dims(n, m)?;
    if max_len == 0 {
        return Err(Error::GenerationFailed("need max_len ≥ 1".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let vertices: IdSet = (1..=n).collect();
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let start = 1 + rng.below(n as u64) as usize;
        let span = max_len.min(n + 1 - start);
        let len = 1 + rng.below(span as u64) as usize;
        edges.push((start..start + len).collect());
    }
    let h = Hypergraph::from_parts(vertices, edges, false)?;
    let cert = is_balanced(&h, &Limits::default())?;
    if !cert.balanced {
        return Err(Error::GenerationFailed(
            "interval instance reported unbalanced".into(),
        ));
    }
    Ok(h)
}

/// Random bipartite graph: parts `1..=n1` and `n1+1..=n1+n2`, each cross
/// pair drawn with probability `p`, isolated vertices pruned and ids
/// compacted. At least one edge is forced so the instance stays covered.
pub fn gen_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Result<Hypergraph> {
    check_dims(n1 + n2, 1)?;
    let mut rng = SplitMix64::new(seed);
    let mut pairs = Vec::new();
    for left in 1..=n1 {
        for right in n1 + 1..=n1 + n2 {
            if rng.chance(p) {
                pairs.push((left, right));
            }
        }
    }
    if pairs.is_empty() {
        pairs.push((1, n1 + 1));
    }
    if pairs.len() > IdSet::CAPACITY {
        pairs.truncate(IdSet::CAPACITY);
    }
    let covered: IdSet = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let relabel: Vec<usize> = covered.to_vec();
    let position = |v: usize| relabel.iter().position(|&u| u == v).unwrap() + 1;
    let edges: Vec<IdSet> = pairs
        .iter()
        .map(|&(a, b)| [position(a), position(b)].into_iter().collect())
        .collect();
    let vertices: IdSet = (1..=relabel.len()).collect();
    let h = Hypergraph::from_parts(vertices, edges, true)?;
    let cert = is_balanced(&h, &Limits::default())?;
    if !cert.balanced {
        return Err(Error::GenerationFailed(
            "bipartite instance reported unbalanced".into(),
        ));
    }
    Ok(h)
}

/// Applies `ops` random balancedness-preserving operations (induced
/// subhypergraph, partial hypergraph, the three deletions, dual) to a
/// balanced base, retrying any choice that would empty the instance. The
/// result must still be balanced; anything else trips the heredity theorem
/// and is a defect.
pub fn gen_closure(base: &Hypergraph, ops: usize, seed: u64) -> Result<Hypergraph> {
    let limits = Limits::default();
    if !is_balanced(base, &limits)?.balanced {
        return Err(Error::NotBalanced);
    }
    let mut rng = SplitMix64::new(seed);
    let mut current = base.clone();
    for _ in 0..ops {
        for _attempt in 0..32 {
            let candidate = apply_random_op(&current, &mut rng);
            if let Some(next) = candidate {
                if next.edge_count() > 0 && !next.vertices().is_empty() {
                    current = next;
                    break;
                }
            }
        }
    }
    let cert = is_balanced(&current, &limits)?;
    if !cert.balanced {
        return Err(Error::GenerationFailed(
            "closure op broke balancedness; heredity violated".into(),
        ));
    }
    Ok(current)
}

fn apply_random_op(h: &Hypergraph, rng: &mut SplitMix64) -> Option<Hypergraph> {
    let verts = h.vertices().to_vec();
    match rng.below(6) {
        0 => {
            let w: IdSet = verts.iter().filter(|_| rng.chance(0.75)).copied().collect();
            if w.is_empty() {
                return None;
            }
            h.induced_sub(w).ok()
        }
        1 => {
            let f: IdSet = (0..h.edge_count()).filter(|_| rng.chance(0.75)).collect();
            if f.is_empty() {
                return None;
            }
            h.partial(f).ok()
        }
        2 => {
            let v = verts[rng.below(verts.len() as u64) as usize];
            h.delete(DeleteMode::StrongVertex, v).ok()
        }
        3 => {
            let v = verts[rng.below(verts.len() as u64) as usize];
            h.delete(DeleteMode::WeakVertex, v).ok()
        }
        4 => {
            let e = rng.below(h.edge_count() as u64) as usize;
            h.delete(DeleteMode::Edge, e).ok()
        }
        _ => h.dual().ok(),
    }
}

/// A balanced interval base with one strong odd cycle of size-2 edges
/// spliced across random vertices; asserted unbalanced with an odd witness.
pub fn gen_planted(n: usize, seed: u64) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::GenerationFailed(
            "planted instances need n ≥ 3".into(),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let base_seed = rng.next_u64();
    let base = gen_interval(n, (n / 2).max(1), 3.min(n), base_seed)?;
    let cycle_len = if n >= 5 && rng.chance(0.5) { 5 } else { 3 };

    // Partial Fisher-Yates over 1..=n for the cycle vertices.
    let mut pool: Vec<usize> = (1..=n).collect();
    for i in 0..cycle_len {
        let j = i + rng.below((pool.len() - i) as u64) as usize;
        pool.swap(i, j);
    }
    let cycle = &pool[..cycle_len];

    let mut edges: Vec<IdSet> = base.edges().to_vec();
    if edges.len() + cycle_len > IdSet::CAPACITY {
        return Err(Error::CapacityExceeded {
            id: edges.len() + cycle_len,
            limit: IdSet::CAPACITY,
        });
    }
    for i in 0..cycle_len {
        let pair: IdSet = [cycle[i], cycle[(i + 1) % cycle_len]].into_iter().collect();
        edges.push(pair);
    }
    let h = Hypergraph::from_parts(base.vertices(), edges, false)?;
    let cert = is_balanced(&h, &Limits::default())?;
    match cert.witness {
        Some(ref walk) if walk.len() % 2 == 1 => Ok(h),
        _ => Err(Error::GenerationFailed(
            "planted instance failed to produce an odd witness".into(),
        )),
    }
}
