//! Alternating vertex/edge walks and their classification.

use crate::hypergraph::Hypergraph;
use crate::set::IdSet;

/// An alternating sequence `v0 e1 v1 … el vl`: `vertices` holds the `l+1`
/// vertex ids (for cycles the last repeats the first), `edges` the `l`
/// edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Walk {
    pub fn new(vertices: Vec<usize>, edges: Vec<usize>) -> Self {
        Walk { vertices, edges }
    }

    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// V(P) for paths, V(C) for cycles (the closing vertex counted once).
    pub fn vertex_set(&self) -> IdSet {
        self.vertices.iter().copied().collect()
    }
}

/// Outcome of validating a walk against the path/cycle axioms. `strong`
/// records that no traversed edge contains three or more walk vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkClass {
    Invalid,
    Path { strong: bool },
    Cycle { strong: bool },
}

impl WalkClass {
    pub fn is_strong_cycle(self) -> bool {
        matches!(self, WalkClass::Cycle { strong: true })
    }
}

/// Validates the walk axioms and computes strongness.
///
/// A sequence is a path when all vertices are pairwise distinct, and a cycle
/// when the last vertex closes on the first and `v0..v_{l-1}` are pairwise
/// distinct. Edge indices must be pairwise distinct in both cases and every
/// edge must contain its two endpoints. Anything else is `Invalid`.
pub fn classify_walk(h: &Hypergraph, walk: &Walk) -> WalkClass {
    if walk.vertices.len() != walk.edges.len() + 1 || walk.vertices.is_empty() {
        return WalkClass::Invalid;
    }
    if walk.vertices.iter().any(|&v| !h.vertices().contains(v)) {
        return WalkClass::Invalid;
    }
    if walk.edges.iter().any(|&e| e >= h.edge_count()) {
        return WalkClass::Invalid;
    }
    for (i, &e) in walk.edges.iter().enumerate() {
        let edge = h.edge(e);
        if !edge.contains(walk.vertices[i]) || !edge.contains(walk.vertices[i + 1]) {
            return WalkClass::Invalid;
        }
    }
    let distinct_edges: IdSet = walk.edges.iter().copied().collect();
    if distinct_edges.len() != walk.edges.len() {
        return WalkClass::Invalid;
    }

    let l = walk.edges.len();
    let closes = l >= 1 && walk.vertices[0] == walk.vertices[l];
    let interior = if closes {
        &walk.vertices[..l]
    } else {
        &walk.vertices[..]
    };
    let interior_set: IdSet = interior.iter().copied().collect();
    if interior_set.len() != interior.len() {
        return WalkClass::Invalid;
    }

    let strong = walk
        .edges
        .iter()
        .all(|&e| h.edge(e).intersect(interior_set).len() < 3);

    if closes {
        WalkClass::Cycle { strong }
    } else {
        WalkClass::Path { strong }
    }
}
