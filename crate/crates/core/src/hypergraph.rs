//! Finite hypergraphs and partite hypergraphs.
//!
//! A [`Hypergraph`] stores its vertices densely as indices `0..n` and keeps the
//! caller's vertex identifiers alongside as labels. Every edge is a sorted set
//! of vertex indices. Values are validated once at construction and never
//! mutated afterwards; operations that change structure return new values
//! together with the index maps needed to relate old and new vertices.

use std::collections::{HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

/// External vertex identifier, as it appears in JSON files.
pub type VertexId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("edge {edge:?} mentions unknown vertex {vertex}")]
    EdgeNotSubset { edge: Vec<VertexId>, vertex: VertexId },
    #[error("edge {0:?} has fewer than 2 vertices")]
    EdgeTooSmall(Vec<VertexId>),
    #[error("edge {0:?} repeats a vertex")]
    RepeatedVertexInEdge(Vec<VertexId>),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<VertexId>),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("uniformity must be at least 2, got {0}")]
    BadUniformity(usize),
    #[error("vertex {0} appears in more than one part")]
    OverlappingParts(VertexId),
    #[error("vertex {0} is not covered by any part")]
    UncoveredVertex(VertexId),
    #[error("edge {edge:?} meets part {part} in more than one vertex")]
    NotPartite { edge: Vec<VertexId>, part: usize },
}

/// Edge uniformity `r >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Uniformity(usize);

impl Uniformity {
    pub fn new(r: usize) -> Result<Self, HypergraphError> {
        if r < 2 {
            return Err(HypergraphError::BadUniformity(r));
        }
        Ok(Uniformity(r))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for Uniformity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A hyperedge: a sorted, duplicate-free list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vec<u32>);

impl Edge {
    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Number of vertices shared with `other` (both are sorted).
    pub fn intersection_size(&self, other: &Edge) -> usize {
        let (mut i, mut j, mut k) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    k += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        k
    }
}

/// An immutable finite hypergraph with set semantics on edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    labels: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Builds a hypergraph from vertex identifiers and edges given as identifier sets.
    ///
    /// Vertex order is kept as given and becomes the canonical index order.
    pub fn new(vertices: Vec<VertexId>, edges: Vec<Vec<VertexId>>) -> Result<Self, HypergraphError> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if index.insert(v, i as u32).is_some() {
                return Err(HypergraphError::DuplicateVertex(v));
            }
        }
        let mut mapped = Vec::with_capacity(edges.len());
        for e in edges {
            let mut ix = Vec::with_capacity(e.len());
            for &v in &e {
                match index.get(&v) {
                    Some(&i) => ix.push(i),
                    None => return Err(HypergraphError::EdgeNotSubset { edge: e, vertex: v }),
                }
            }
            mapped.push(ix);
        }
        Self::build(vertices, mapped)
    }

    /// Builds a hypergraph on vertices `0..n` (labels equal indices).
    pub fn from_indices(n: usize, edges: Vec<Vec<u32>>) -> Result<Self, HypergraphError> {
        let labels = (0..n as u32).collect::<Vec<_>>();
        for e in &edges {
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(HypergraphError::EdgeNotSubset {
                    edge: e.clone(),
                    vertex: v,
                });
            }
        }
        Self::build(labels, edges)
    }

    fn build(labels: Vec<VertexId>, edges: Vec<Vec<u32>>) -> Result<Self, HypergraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut out = Vec::with_capacity(edges.len());
        for mut e in edges {
            let as_ids = |e: &[u32]| e.iter().map(|&i| labels[i as usize]).collect::<Vec<_>>();
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertexInEdge(as_ids(&e)));
            }
            if e.len() < 2 {
                return Err(HypergraphError::EdgeTooSmall(as_ids(&e)));
            }
            let edge = Edge(e);
            if !seen.insert(edge.clone()) {
                return Err(HypergraphError::DuplicateEdge(as_ids(&edge.0)));
            }
            out.push(edge);
        }
        Ok(Hypergraph { labels, edges: out })
    }

    /// The complete `r`-uniform hypergraph on vertices `0..n`, edges in lexicographic order.
    pub fn complete(n: usize, r: Uniformity) -> Self {
        let edges = (0..n as u32).combinations(r.get()).map(Edge).collect::<Vec<_>>();
        Hypergraph {
            labels: (0..n as u32).collect(),
            edges,
        }
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph {
            labels: (0..n as u32).collect(),
            edges: Vec::new(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> VertexId {
        self.labels[v as usize]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    /// Edge as vertex identifiers.
    pub fn edge_labels(&self, i: usize) -> Vec<VertexId> {
        self.edges[i].0.iter().map(|&v| self.labels[v as usize]).collect()
    }

    pub fn index_of(&self, id: VertexId) -> Option<u32> {
        self.labels.iter().position(|&l| l == id).map(|i| i as u32)
    }

    fn lookup(&self) -> HashMap<VertexId, u32> {
        self.labels.iter().enumerate().map(|(i, &l)| (l, i as u32)).collect()
    }

    /// True iff every edge has exactly `r` vertices (vacuously true without edges).
    pub fn is_uniform(&self, r: Uniformity) -> bool {
        self.edges.iter().all(|e| e.len() == r.get())
    }

    /// The common edge size, if all edges have one.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    pub fn degree(&self, id: VertexId) -> Result<usize, HypergraphError> {
        let v = self.index_of(id).ok_or(HypergraphError::UnknownVertex(id))?;
        Ok(self.degree_at(v))
    }

    pub fn degree_at(&self, v: u32) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Degrees of all vertices, by index.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.labels.len()];
        for e in &self.edges {
            for &v in e.vertices() {
                d[v as usize] += 1;
            }
        }
        d
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().into_iter().min()
    }

    /// For every vertex index, the indices of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<u32>> {
        let mut inc = vec![Vec::new(); self.labels.len()];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e.vertices() {
                inc[v as usize].push(i as u32);
            }
        }
        inc
    }

    /// Sub-hypergraph induced on the given vertex identifiers.
    ///
    /// Kept vertices retain their labels and relative order; edges not fully
    /// inside the set are dropped.
    pub fn induced(&self, keep: &[VertexId]) -> Result<Hypergraph, HypergraphError> {
        let lookup = self.lookup();
        let mut mask = vec![false; self.labels.len()];
        for id in keep {
            let &v = lookup.get(id).ok_or(HypergraphError::UnknownVertex(*id))?;
            mask[v as usize] = true;
        }
        Ok(self.induced_by_mask(&mask).0)
    }

    /// Induced sub-hypergraph on the vertex indices where `mask` is set.
    /// Returns the sub-hypergraph and, for each old index, its new index.
    pub fn induced_by_mask(&self, mask: &[bool]) -> (Hypergraph, Vec<Option<u32>>) {
        let mut map = vec![None; self.labels.len()];
        let mut labels = Vec::new();
        for (i, &keep) in mask.iter().enumerate() {
            if keep {
                map[i] = Some(labels.len() as u32);
                labels.push(self.labels[i]);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                e.0.iter()
                    .map(|&v| map[v as usize])
                    .collect::<Option<Vec<_>>>()
                    .map(Edge)
            })
            .collect();
        (Hypergraph { labels, edges }, map)
    }

    /// Removes the edges whose indices are listed; vertices are untouched.
    pub fn without_edges(&self, drop: &[usize]) -> Hypergraph {
        let drop: HashSet<usize> = drop.iter().copied().collect();
        Hypergraph {
            labels: self.labels.clone(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(i, _)| !drop.contains(i))
                .map(|(_, e)| e.clone())
                .collect(),
        }
    }

    /// Same structure with labels replaced by indices `0..n`.
    pub fn relabeled(&self) -> Hypergraph {
        Hypergraph {
            labels: (0..self.labels.len() as u32).collect(),
            edges: self.edges.clone(),
        }
    }

    /// Sum of edge sizes.
    pub fn size(&self) -> usize {
        self.edges.iter().map(Edge::len).sum()
    }

    /// Vertex-disjoint union. Vertices of the result are labelled `0..N`, copy by
    /// copy in input order; the returned maps send each input's vertex index to
    /// its index in the union.
    pub fn disjoint_union(parts: &[&Hypergraph]) -> (Hypergraph, Vec<Vec<u32>>) {
        let total: usize = parts.iter().map(|h| h.num_vertices()).sum();
        let mut edges = Vec::with_capacity(parts.iter().map(|h| h.num_edges()).sum());
        let mut maps = Vec::with_capacity(parts.len());
        let mut offset = 0u32;
        for h in parts {
            let map = (0..h.num_vertices() as u32).map(|v| v + offset).collect::<Vec<_>>();
            for e in &h.edges {
                edges.push(Edge(e.0.iter().map(|&v| v + offset).collect()));
            }
            offset += h.num_vertices() as u32;
            maps.push(map);
        }
        (
            Hypergraph {
                labels: (0..total as u32).collect(),
                edges,
            },
            maps,
        )
    }

    /// Re-runs every structural check.
    pub fn validate(&self) -> Result<(), HypergraphError> {
        let mut seen = HashSet::with_capacity(self.labels.len());
        if let Some(&l) = self.labels.iter().find(|&&l| !seen.insert(l)) {
            return Err(HypergraphError::DuplicateVertex(l));
        }
        let n = self.labels.len();
        let edges = self.edges.iter().map(|e| e.0.clone()).collect::<Vec<_>>();
        for e in &edges {
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(HypergraphError::EdgeNotSubset {
                    edge: e.clone(),
                    vertex: v,
                });
            }
        }
        Self::build(self.labels.clone(), edges).map(|_| ())
    }
}

/// A hypergraph together with an ordered partition of its vertices such that
/// every edge meets every part at most once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartiteHypergraph {
    base: Hypergraph,
    parts: Vec<Vec<u32>>,
    part_of: Vec<u32>,
}

impl PartiteHypergraph {
    /// Validates `parts` (given as vertex identifiers) against `base`.
    pub fn new(base: Hypergraph, parts: Vec<Vec<VertexId>>) -> Result<Self, HypergraphError> {
        let lookup = base.lookup();
        let mut ix_parts = Vec::with_capacity(parts.len());
        for p in parts {
            let mut ix = Vec::with_capacity(p.len());
            for id in p {
                ix.push(*lookup.get(&id).ok_or(HypergraphError::UnknownVertex(id))?);
            }
            ix_parts.push(ix);
        }
        Self::from_indices(base, ix_parts)
    }

    /// Validates `parts` given as vertex indices.
    pub fn from_indices(base: Hypergraph, mut parts: Vec<Vec<u32>>) -> Result<Self, HypergraphError> {
        let n = base.num_vertices();
        let mut part_of = vec![u32::MAX; n];
        for (pi, p) in parts.iter_mut().enumerate() {
            p.sort_unstable();
            for &v in p.iter() {
                if v as usize >= n {
                    return Err(HypergraphError::UnknownVertex(v));
                }
                if part_of[v as usize] != u32::MAX {
                    return Err(HypergraphError::OverlappingParts(base.label(v)));
                }
                part_of[v as usize] = pi as u32;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == u32::MAX) {
            return Err(HypergraphError::UncoveredVertex(base.label(v as u32)));
        }
        for (i, e) in base.edges().iter().enumerate() {
            let mut seen = HashSet::new();
            for &v in e.vertices() {
                let p = part_of[v as usize];
                if !seen.insert(p) {
                    return Err(HypergraphError::NotPartite {
                        edge: base.edge_labels(i),
                        part: p as usize,
                    });
                }
            }
        }
        Ok(PartiteHypergraph { base, parts, part_of })
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn into_base(self) -> Hypergraph {
        self.base
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Vertex indices of part `i` (0-based), ascending.
    pub fn part(&self, i: usize) -> &[u32] {
        &self.parts[i]
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    /// Part index of vertex `v`.
    pub fn part_of(&self, v: u32) -> usize {
        self.part_of[v as usize] as usize
    }

    /// Parts as vertex identifiers.
    pub fn part_labels(&self) -> Vec<Vec<VertexId>> {
        self.parts
            .iter()
            .map(|p| p.iter().map(|&v| self.base.label(v)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const X: u32 = 0;
    const Y: u32 = 1;
    const Z: u32 = 2;

    fn path() -> Hypergraph {
        Hypergraph::new(vec![X, Y, Z], vec![vec![X, Y], vec![Y, Z]]).unwrap()
    }

    fn r(k: usize) -> Uniformity {
        Uniformity::new(k).unwrap()
    }

    #[test]
    fn builds_path_and_complete() {
        let p = path();
        assert_eq!(p.num_vertices(), 3);
        assert_eq!(p.num_edges(), 2);
        let k = Hypergraph::complete(5, r(3));
        assert_eq!(k.num_edges(), 10);
        assert!(k.validate().is_ok());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Hypergraph::new(vec![X, Y], vec![vec![X, Y], vec![Y, X]]),
            Err(HypergraphError::DuplicateEdge(vec![X, Y]))
        );
        assert!(matches!(
            Hypergraph::new(vec![X, Y], vec![vec![X, Z]]),
            Err(HypergraphError::EdgeNotSubset { vertex: Z, .. })
        ));
        assert_eq!(
            Hypergraph::new(vec![X, Y], vec![vec![X]]),
            Err(HypergraphError::EdgeTooSmall(vec![X]))
        );
        assert_eq!(
            Hypergraph::new(vec![X, X], vec![]),
            Err(HypergraphError::DuplicateVertex(X))
        );
        assert!(Uniformity::new(1).is_err());
    }

    #[test]
    fn uniformity_checks() {
        assert!(path().is_uniform(r(2)));
        assert!(!Hypergraph::complete(5, r(3)).is_uniform(r(2)));
        assert!(Hypergraph::empty(4).is_uniform(r(7)));
    }

    #[test]
    fn degrees() {
        assert_eq!(path().degree(Y), Ok(2));
        let k = Hypergraph::complete(5, r(3));
        assert!((0..5).all(|v| k.degree(v) == Ok(6)));
        let iso = Hypergraph::new(vec![X, Y, Z, 9], vec![vec![X, Y]]).unwrap();
        assert_eq!(iso.degree(9), Ok(0));
        assert_eq!(iso.degree(77), Err(HypergraphError::UnknownVertex(77)));
    }

    #[test]
    fn induced_subgraphs() {
        let p = path();
        let xy = p.induced(&[X, Y]).unwrap();
        assert_eq!(xy.num_edges(), 1);
        assert_eq!(xy.edge_labels(0), vec![X, Y]);
        assert_eq!(p.induced(&[X, Y, Z]).unwrap(), p);
        assert_eq!(p.induced(&[X, Z]).unwrap().num_edges(), 0);
        assert!(p.induced(&[5]).is_err());
    }

    #[test]
    fn disjoint_unions() {
        let p = path();
        let (u, maps) = Hypergraph::disjoint_union(&[&p, &p]);
        assert_eq!((u.num_vertices(), u.num_edges()), (6, 4));
        assert_eq!(maps[1], vec![3, 4, 5]);
        let (single, maps) = Hypergraph::disjoint_union(&[&p]);
        assert_eq!(single, p);
        assert_eq!(maps[0], vec![0, 1, 2]);
        let small = Hypergraph::from_indices(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let copies = vec![&small; 21];
        let (big, _) = Hypergraph::disjoint_union(&copies);
        assert_eq!((big.num_vertices(), big.num_edges()), (21 * 5, 21 * 2));
    }

    #[test]
    fn partite_validation() {
        let p = PartiteHypergraph::new(path(), vec![vec![X, Z], vec![Y]]).unwrap();
        assert_eq!(p.part_sizes(), vec![2, 1]);
        assert_eq!(p.part_of(Z), 0);
        assert!(matches!(
            PartiteHypergraph::new(path(), vec![vec![X, Y], vec![Z]]),
            Err(HypergraphError::NotPartite { .. })
        ));
        assert_eq!(
            PartiteHypergraph::new(path(), vec![vec![X, Z], vec![Y, X]]),
            Err(HypergraphError::OverlappingParts(X))
        );
        assert_eq!(
            PartiteHypergraph::new(path(), vec![vec![X, Z]]),
            Err(HypergraphError::UncoveredVertex(Y))
        );
    }
}
