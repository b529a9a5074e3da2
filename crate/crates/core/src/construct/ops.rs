use itertools::Itertools;

use super::ConstructError;
use crate::hypergraph::{Hypergraph, PartiteHypergraph};

/// Extends every edge of an `r`-uniform `r`-partite hypergraph by its own new
/// vertex, collected in a new last part.
///
/// Existing vertices keep their indices; the new vertex of edge `i` gets index
/// `n + i`. Vertices of the result are labelled by index.
pub fn tilde(p: &PartiteHypergraph) -> Result<PartiteHypergraph, ConstructError> {
    let r = p.num_parts();
    let h = p.base();
    if let Some(e) = h.edges().iter().find(|e| e.len() != r) {
        return Err(ConstructError::NotUniformPartite(format!(
            "edge of size {} in a {r}-partite hypergraph",
            e.len()
        )));
    }
    let n = h.num_vertices() as u32;
    let edges = h
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut v = e.vertices().to_vec();
            v.push(n + i as u32);
            v
        })
        .collect();
    let base = Hypergraph::from_indices(h.num_vertices() + h.num_edges(), edges)?;
    let mut parts = p.parts().to_vec();
    parts.push((n..n + h.num_edges() as u32).collect());
    Ok(PartiteHypergraph::from_indices(base, parts)?)
}

/// Output of [`amalgamate`].
#[derive(Debug, Clone)]
pub struct Amalgamation {
    pub result: PartiteHypergraph,
    /// For copy `k` (the copy glued onto edge `k` of the second operand), the
    /// index in `result` of every vertex of the template.
    pub embeddings: Vec<Vec<u32>>,
}

/// Amalgamates copies of `h` along part `part` using `f`: one copy per edge of
/// `f`, with the copy's part `part` identified with that edge.
///
/// Identification maps the part's vertices in ascending index order onto the
/// edge's vertices in ascending index order. The vertices of `f` come first in
/// the result (and form part `part`), followed by the remaining vertices of
/// each copy in turn.
pub fn amalgamate(h: &PartiteHypergraph, part: usize, f: &Hypergraph) -> Result<Amalgamation, ConstructError> {
    if part >= h.num_parts() {
        return Err(ConstructError::NoSuchPart {
            part,
            parts: h.num_parts(),
        });
    }
    let glued = h.part(part);
    if f.edges().iter().any(|e| e.len() != glued.len()) {
        return Err(ConstructError::UniformityMismatch {
            part,
            expected: glued.len(),
        });
    }
    let template = h.base();
    let nf = f.num_vertices() as u32;
    let private = template.num_vertices() - glued.len();
    let total = f.num_vertices() + f.num_edges() * private;

    let mut parts: Vec<Vec<u32>> = vec![Vec::new(); h.num_parts()];
    parts[part] = (0..nf).collect();
    let mut edges = Vec::with_capacity(f.num_edges() * template.num_edges());
    let mut embeddings = Vec::with_capacity(f.num_edges());
    let mut next = nf;
    for fe in f.edges() {
        let mut map = vec![u32::MAX; template.num_vertices()];
        for (&v, &w) in glued.iter().zip(fe.vertices()) {
            map[v as usize] = w;
        }
        for (v, slot) in map.iter_mut().enumerate() {
            if *slot == u32::MAX {
                *slot = next;
                parts[h.part_of(v as u32)].push(next);
                next += 1;
            }
        }
        for e in template.edges() {
            edges.push(e.vertices().iter().map(|&v| map[v as usize]).collect());
        }
        embeddings.push(map);
    }
    debug_assert_eq!(next as usize, total);
    let base = Hypergraph::from_indices(total, edges)?;
    let result = PartiteHypergraph::from_indices(base, parts)?;
    Ok(Amalgamation { result, embeddings })
}

/// Disjoint copies of the `r`-partite `f`, one for every `r`-subset `S` of
/// `0..a`, with part `k` of the copy placed in the `k`-th smallest part of `S`.
/// Copies appear in lexicographic order of `S`.
pub fn complete_partite_factor(f: &PartiteHypergraph, a: usize) -> Result<PartiteHypergraph, ConstructError> {
    let r = f.num_parts();
    if a < r {
        return Err(ConstructError::FactorTooSmall { a, r });
    }
    if f.base().edges().iter().any(|e| e.len() != r) {
        return Err(ConstructError::NotUniformPartite(format!(
            "factor template must be {r}-uniform"
        )));
    }
    let subsets: Vec<Vec<usize>> = (0..a).combinations(r).collect();
    let copies = vec![f.base(); subsets.len()];
    let (union, maps) = Hypergraph::disjoint_union(&copies);
    let mut parts = vec![Vec::new(); a];
    for (s, map) in subsets.iter().zip(&maps) {
        for (k, &target) in s.iter().enumerate() {
            parts[target].extend(f.part(k).iter().map(|&v| map[v as usize]));
        }
    }
    Ok(PartiteHypergraph::from_indices(union, parts)?)
}

/// Checks the defining property of a complete partite factor: for every
/// `r`-subset of parts, some connected block of `r` parts' worth of vertices
/// (one copy of the template, given by `copy_vertices`) lies inside their union.
pub fn factor_covers_all_subsets(m: &PartiteHypergraph, r: usize, copy_vertices: &[Vec<u32>]) -> bool {
    (0..m.num_parts()).combinations(r).all(|s| {
        copy_vertices
            .iter()
            .any(|copy| copy.iter().all(|&v| s.contains(&m.part_of(v))))
    })
}
