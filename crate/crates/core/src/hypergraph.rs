//! The hypergraph data model and its structural operators.
//!
//! A hypergraph is a vertex set together with an ordered *multiset* of
//! nonempty vertex subsets. Multiset edges are first-class: the augmentation
//! machinery builds multiset unions of matchings, so duplicate edges must
//! survive every operator. Set semantics are available as an explicit
//! normalization pass ([`Hypergraph::dedup_edges`]).
//!
//! Vertex ids are small dense integers (below [`IdSet::CAPACITY`]) but need
//! not be contiguous: induced subhypergraphs and deletions keep original ids.

use crate::error::{Error, Result};
use crate::set::IdSet;

/// Immutable hypergraph over ids `0..64`. All operators are pure and return
/// fresh values; sharing across threads needs no synchronization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: IdSet,
    edges: Vec<IdSet>,
    strict_cover: bool,
}

/// The three deletion operators.
///
/// * `StrongVertex` — drop the vertex and every incident edge,
/// * `WeakVertex` — drop the vertex from every edge, discarding emptied ones,
/// * `Edge` — drop one edge and restrict the vertex set to the union of the
///   remaining edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeleteMode {
    StrongVertex,
    WeakVertex,
    Edge,
}

impl Hypergraph {
    /// Validating constructor. With `strict_cover` every vertex must lie in
    /// at least one edge; without it the flag is set to whatever actually
    /// holds so downstream operations that need the covering can re-check.
    pub fn build(vertices: &[usize], edges: &[&[usize]], strict_cover: bool) -> Result<Self> {
        let mut vset = IdSet::EMPTY;
        for &v in vertices {
            if v >= IdSet::CAPACITY {
                return Err(Error::CapacityExceeded {
                    id: v,
                    limit: IdSet::CAPACITY,
                });
            }
            vset.insert(v);
        }
        let mut esets = Vec::with_capacity(edges.len());
        for edge in edges {
            let mut eset = IdSet::EMPTY;
            for &v in *edge {
                if v >= IdSet::CAPACITY {
                    return Err(Error::CapacityExceeded {
                        id: v,
                        limit: IdSet::CAPACITY,
                    });
                }
                eset.insert(v);
            }
            esets.push(eset);
        }
        Self::from_parts(vset, esets, strict_cover)
    }

    /// Constructor over prebuilt bitsets; same validation as [`Self::build`].
    pub fn from_parts(vertices: IdSet, edges: Vec<IdSet>, strict_cover: bool) -> Result<Self> {
        if edges.len() > IdSet::CAPACITY {
            return Err(Error::CapacityExceeded {
                id: edges.len() - 1,
                limit: IdSet::CAPACITY,
            });
        }
        for (index, edge) in edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            if let Some(vertex) = edge.minus(vertices).min() {
                return Err(Error::UnknownVertexInEdge {
                    vertex,
                    edge: index,
                });
            }
        }
        let covered = edges.iter().fold(IdSet::EMPTY, |acc, e| acc.union(*e));
        let is_covered = vertices.is_subset(covered);
        if strict_cover && !is_covered {
            let vertex = vertices.minus(covered).min().unwrap();
            return Err(Error::UncoveredVertex { vertex });
        }
        Ok(Hypergraph {
            vertices,
            edges,
            strict_cover: is_covered,
        })
    }

    pub fn vertices(&self) -> IdSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[IdSet] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> IdSet {
        self.edges[index]
    }

    /// Whether every vertex lies in at least one edge.
    pub fn strict_cover(&self) -> bool {
        self.strict_cover
    }

    /// True when every edge has at most two vertices.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() <= 2)
    }

    /// Edge indices containing `v` (the star of `v`).
    pub fn star(&self, v: usize) -> IdSet {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Multiset-aware degree of a vertex.
    pub fn degree(&self, v: usize) -> Result<usize> {
        if !self.vertices.contains(v) {
            return Err(Error::UnknownTarget { target: v });
        }
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    /// Maximum vertex degree Δ(H); zero for an edgeless hypergraph.
    pub fn max_degree(&self) -> usize {
        self.vertices
            .iter()
            .map(|v| self.edges.iter().filter(|e| e.contains(v)).count())
            .max()
            .unwrap_or(0)
    }

    /// Subhypergraph induced by the vertex set `w`: vertex set `w`, edges
    /// `{e ∩ w : e ∩ w ≠ ∅}` as a multiset.
    pub fn induced_sub(&self, w: IdSet) -> Result<Self> {
        Ok(self.induced_sub_tracked(w)?.0)
    }

    /// Like [`Self::induced_sub`] but also maps each surviving edge position
    /// back to its original index.
    pub fn induced_sub_tracked(&self, w: IdSet) -> Result<(Self, Vec<usize>)> {
        if w.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(v) = w.minus(self.vertices).min() {
            return Err(Error::UnknownTarget { target: v });
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let cut = e.intersect(w);
            if !cut.is_empty() {
                edges.push(cut);
                origin.push(i);
            }
        }
        let h = Hypergraph {
            vertices: w,
            edges,
            strict_cover: false,
        };
        Ok((h.recompute_cover(), origin))
    }

    /// Partial hypergraph generated by the edge-index set `f`: vertex set is
    /// the union of the selected edges, which stay intact.
    pub fn partial(&self, f: IdSet) -> Result<Self> {
        Ok(self.partial_tracked(f)?.0)
    }

    pub fn partial_tracked(&self, f: IdSet) -> Result<(Self, Vec<usize>)> {
        if f.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }
        if let Some(i) = f.iter().find(|&i| i >= self.edges.len()) {
            return Err(Error::UnknownTarget { target: i });
        }
        let origin: Vec<usize> = f.iter().collect();
        let edges: Vec<IdSet> = origin.iter().map(|&i| self.edges[i]).collect();
        let vertices = edges.iter().fold(IdSet::EMPTY, |acc, e| acc.union(*e));
        Ok((
            Hypergraph {
                vertices,
                edges,
                strict_cover: true,
            },
            origin,
        ))
    }

    /// Dual hypergraph: vertices are this hypergraph's edge indices, edges
    /// are the stars of its vertices in ascending vertex order. Requires the
    /// covering (an uncovered vertex would yield an empty dual edge).
    pub fn dual(&self) -> Result<Self> {
        if !self.strict_cover {
            let covered = self.edges.iter().fold(IdSet::EMPTY, |a, e| a.union(*e));
            let vertex = self.vertices.minus(covered).min().unwrap_or(0);
            return Err(Error::UncoveredVertex { vertex });
        }
        let vertices = IdSet::first_n(self.edges.len());
        let edges: Vec<IdSet> = self.vertices.iter().map(|v| self.star(v)).collect();
        Hypergraph::from_parts(vertices, edges, true)
    }

    /// One of the three deletion operators; see [`DeleteMode`].
    pub fn delete(&self, mode: DeleteMode, target: usize) -> Result<Self> {
        Ok(self.delete_tracked(mode, target)?.0)
    }

    /// Tracked variant: the second component maps each surviving edge
    /// position to its index in `self`.
    pub fn delete_tracked(&self, mode: DeleteMode, target: usize) -> Result<(Self, Vec<usize>)> {
        match mode {
            DeleteMode::StrongVertex => {
                if !self.vertices.contains(target) {
                    return Err(Error::UnknownTarget { target });
                }
                let mut edges = Vec::new();
                let mut origin = Vec::new();
                for (i, e) in self.edges.iter().enumerate() {
                    if !e.contains(target) {
                        edges.push(*e);
                        origin.push(i);
                    }
                }
                if edges.is_empty() {
                    return Err(Error::ResultEmpty);
                }
                let mut vertices = self.vertices;
                vertices.remove(target);
                let h = Hypergraph {
                    vertices,
                    edges,
                    strict_cover: false,
                };
                Ok((h.recompute_cover(), origin))
            }
            DeleteMode::WeakVertex => {
                if !self.vertices.contains(target) {
                    return Err(Error::UnknownTarget { target });
                }
                let mut edges = Vec::new();
                let mut origin = Vec::new();
                for (i, e) in self.edges.iter().enumerate() {
                    let mut cut = *e;
                    cut.remove(target);
                    if !cut.is_empty() {
                        edges.push(cut);
                        origin.push(i);
                    }
                }
                if edges.is_empty() {
                    return Err(Error::ResultEmpty);
                }
                let mut vertices = self.vertices;
                vertices.remove(target);
                let h = Hypergraph {
                    vertices,
                    edges,
                    strict_cover: false,
                };
                Ok((h.recompute_cover(), origin))
            }
            DeleteMode::Edge => {
                if target >= self.edges.len() {
                    return Err(Error::UnknownTarget { target });
                }
                let mut edges = Vec::new();
                let mut origin = Vec::new();
                for (i, e) in self.edges.iter().enumerate() {
                    if i != target {
                        edges.push(*e);
                        origin.push(i);
                    }
                }
                if edges.is_empty() {
                    return Err(Error::ResultEmpty);
                }
                let vertices = edges.iter().fold(IdSet::EMPTY, |acc, e| acc.union(*e));
                Ok((
                    Hypergraph {
                        vertices,
                        edges,
                        strict_cover: true,
                    },
                    origin,
                ))
            }
        }
    }

    /// Normalization pass from multiset to set semantics: keeps the first
    /// occurrence of each distinct edge.
    pub fn dedup_edges(&self) -> Self {
        let mut seen = Vec::new();
        let mut edges = Vec::new();
        for e in &self.edges {
            if !seen.contains(e) {
                seen.push(*e);
                edges.push(*e);
            }
        }
        Hypergraph {
            vertices: self.vertices,
            edges,
            strict_cover: self.strict_cover,
        }
    }

    fn recompute_cover(mut self) -> Self {
        let covered = self.edges.iter().fold(IdSet::EMPTY, |acc, e| acc.union(*e));
        self.strict_cover = self.vertices.is_subset(covered);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(vertices: &[usize], edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::build(vertices, edges, true).unwrap()
    }

    fn p3() -> Hypergraph {
        hg(&[1, 2, 3], &[&[1, 2], &[2, 3]])
    }

    fn c4() -> Hypergraph {
        hg(&[1, 2, 3, 4], &[&[1, 2], &[2, 3], &[3, 4], &[4, 1]])
    }

    fn t1() -> Hypergraph {
        hg(&[1, 2, 3, 4], &[&[1, 2, 3], &[3, 4]])
    }

    #[test]
    fn build_p3() {
        let h = p3();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 2);
        assert!(h.strict_cover());
    }

    #[test]
    fn build_rejects_empty_edge() {
        let err = Hypergraph::build(&[1], &[&[]], true).unwrap_err();
        assert_eq!(err, Error::EmptyEdge { index: 0 });
    }

    #[test]
    fn build_rejects_uncovered_vertex_when_strict() {
        let err = Hypergraph::build(&[1, 2, 3], &[&[1, 2]], true).unwrap_err();
        assert_eq!(err, Error::UncoveredVertex { vertex: 3 });
        let h = Hypergraph::build(&[1, 2, 3], &[&[1, 2]], false).unwrap();
        assert!(!h.strict_cover());
    }

    #[test]
    fn build_rejects_unknown_vertex() {
        let err = Hypergraph::build(&[1, 2], &[&[1, 5]], true).unwrap_err();
        assert_eq!(err, Error::UnknownVertexInEdge { vertex: 5, edge: 0 });
    }

    #[test]
    fn induced_sub_examples() {
        let sub = t1().induced_sub([3, 4].into_iter().collect()).unwrap();
        assert_eq!(sub.vertices().to_vec(), vec![3, 4]);
        assert_eq!(
            sub.edges(),
            &[IdSet::singleton(3), [3, 4].into_iter().collect()]
        );

        let sub = c4().induced_sub([1, 2].into_iter().collect()).unwrap();
        assert_eq!(
            sub.edges(),
            &[
                [1, 2].into_iter().collect(),
                IdSet::singleton(2),
                IdSet::singleton(1)
            ]
        );

        let sub = p3().induced_sub([1, 3].into_iter().collect()).unwrap();
        assert_eq!(sub.edges(), &[IdSet::singleton(1), IdSet::singleton(3)]);

        assert_eq!(
            p3().induced_sub(IdSet::EMPTY).unwrap_err(),
            Error::EmptyVertexSet
        );
    }

    #[test]
    fn partial_examples() {
        let part = c4().partial([0, 2].into_iter().collect()).unwrap();
        assert_eq!(part.vertices().to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(part.edge_count(), 2);

        let part = t1().partial(IdSet::singleton(1)).unwrap();
        assert_eq!(part.vertices().to_vec(), vec![3, 4]);

        let full = p3().partial([0, 1].into_iter().collect()).unwrap();
        assert_eq!(full, p3());

        assert_eq!(p3().partial(IdSet::EMPTY).unwrap_err(), Error::EmptyEdgeSet);
    }

    #[test]
    fn dual_examples() {
        // dual(P3): stars are {a}, {a,b}, {b}.
        let d = p3().dual().unwrap();
        assert_eq!(d.vertices().to_vec(), vec![0, 1]);
        assert_eq!(
            d.edges(),
            &[
                IdSet::singleton(0),
                [0, 1].into_iter().collect(),
                IdSet::singleton(1)
            ]
        );

        // dual(C4) is again a 4-cycle.
        let d = c4().dual().unwrap();
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(d.edge_count(), 4);
        assert!(d.edges().iter().all(|e| e.len() == 2));
        assert!(d.vertices().iter().all(|v| d.degree(v).unwrap() == 2));

        // dual(T1): stars {f1}, {f1}, {f1,f2}, {f2}.
        let d = t1().dual().unwrap();
        assert_eq!(
            d.edges(),
            &[
                IdSet::singleton(0),
                IdSet::singleton(0),
                [0, 1].into_iter().collect(),
                IdSet::singleton(1)
            ]
        );
    }

    #[test]
    fn dual_swaps_degrees_and_sizes() {
        for h in [p3(), c4(), t1()] {
            let d = h.dual().unwrap();
            for (i, e) in h.edges().iter().enumerate() {
                assert_eq!(d.degree(i).unwrap(), e.len());
            }
            for (j, v) in h.vertices().iter().enumerate() {
                assert_eq!(d.edge(j).len(), h.degree(v).unwrap());
            }
        }
    }

    #[test]
    fn delete_examples() {
        assert_eq!(
            p3().delete(DeleteMode::StrongVertex, 2).unwrap_err(),
            Error::ResultEmpty
        );

        let weak = p3().delete(DeleteMode::WeakVertex, 2).unwrap();
        assert_eq!(weak.vertices().to_vec(), vec![1, 3]);
        assert_eq!(weak.edges(), &[IdSet::singleton(1), IdSet::singleton(3)]);

        let dropped = t1().delete(DeleteMode::Edge, 0).unwrap();
        assert_eq!(dropped.vertices().to_vec(), vec![3, 4]);
        assert_eq!(dropped.edges(), &[[3, 4].into_iter().collect::<IdSet>()]);

        assert_eq!(
            p3().delete(DeleteMode::StrongVertex, 9).unwrap_err(),
            Error::UnknownTarget { target: 9 }
        );
    }

    #[test]
    fn strong_delete_may_uncover() {
        // Removing vertex 2 from T1 keeps edge {3,4}; vertex 1 ends uncovered.
        let h = t1().delete(DeleteMode::StrongVertex, 2).unwrap();
        assert!(!h.strict_cover());
        assert!(h.vertices().contains(1));
    }

    #[test]
    fn degrees() {
        assert_eq!(t1().degree(3).unwrap(), 2);
        assert_eq!(t1().max_degree(), 2);
        assert_eq!(c4().max_degree(), 2);
        assert_eq!(p3().degree(1).unwrap(), 1);
        assert!(p3().degree(7).is_err());
    }

    #[test]
    fn double_dual_on_simple_distinct_star_instances() {
        // dual(dual(H)) reproduces H with vertices renamed to their ranks,
        // provided no edges repeat and no two stars coincide.
        for h in [p3(), c4()] {
            let rank = |v: usize| h.vertices().iter().position(|u| u == v).unwrap();
            let dd = h.dual().unwrap().dual().unwrap();
            assert_eq!(dd.vertex_count(), h.vertex_count());
            let expected: Vec<IdSet> = h
                .edges()
                .iter()
                .map(|e| e.iter().map(rank).collect())
                .collect();
            assert_eq!(dd.edges(), &expected);
        }
    }

    #[test]
    fn hypergraphs_are_shareable() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Hypergraph>();
    }

    #[test]
    fn dedup_keeps_first_occurrences() {
        let h = hg(&[1, 2], &[&[1, 2], &[1], &[1, 2]]);
        let d = h.dedup_edges();
        assert_eq!(d.edge_count(), 2);
        assert_eq!(d.edge(0), [1, 2].into_iter().collect());
    }
}
