//! Colorings as set partitions, edge classification and partition enumeration.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{Edge, Hypergraph, VertexId};

/// Largest `n` accepted by [`enumerate_partitions`] (Bell(16) ≈ 1.0e10).
pub const MAX_ENUMERATION: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("vertex {0} has no color")]
    Uncolored(u32),
    #[error("partition enumeration is limited to {MAX_ENUMERATION} elements, got {0}")]
    TooLarge(usize),
}

/// A vertex coloring in restricted-growth form: vertex 0 has class 0 and each
/// vertex uses at most one class above every class seen before it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    /// Canonicalizes an arbitrary class assignment (indexed by vertex).
    pub fn from_classes(classes: &[u32]) -> Self {
        let mut remap = BTreeMap::new();
        let out = classes
            .iter()
            .map(|c| {
                let next = remap.len() as u32;
                *remap.entry(*c).or_insert(next)
            })
            .collect();
        Coloring(out)
    }

    pub fn classes(&self) -> &[u32] {
        &self.0
    }

    pub fn class_of(&self, v: u32) -> Option<u32> {
        self.0.get(v as usize).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.0.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Sizes of the color classes, by class index.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_classes()];
        for &c in &self.0 {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Map from vertex identifier to class, for JSON output.
    pub fn to_label_map(&self, h: &Hypergraph) -> BTreeMap<VertexId, u32> {
        self.0
            .iter()
            .enumerate()
            .map(|(v, &c)| (h.label(v as u32), c))
            .collect()
    }
}

/// How a coloring looks on one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeClass {
    Monochromatic,
    Rainbow,
    Mixed,
}

/// Classifies a list of colors of the vertices of one edge.
pub fn classify_colors(colors: &[u32]) -> EdgeClass {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() == 1 {
        EdgeClass::Monochromatic
    } else if sorted.len() == colors.len() {
        EdgeClass::Rainbow
    } else {
        EdgeClass::Mixed
    }
}

pub fn classify_edge(c: &Coloring, e: &Edge) -> Result<EdgeClass, ColoringError> {
    let colors = e
        .vertices()
        .iter()
        .map(|&v| c.class_of(v).ok_or(ColoringError::Uncolored(v)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(classify_colors(&colors))
}

/// True iff every edge is [`EdgeClass::Mixed`].
pub fn is_good(h: &Hypergraph, c: &Coloring) -> Result<bool, ColoringError> {
    for e in h.edges() {
        if classify_edge(c, e)? != EdgeClass::Mixed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Visits every set partition of `0..n` exactly once, as restricted-growth
/// strings in lexicographic order. Returns the number of partitions visited.
pub fn enumerate_partitions<F>(n: usize, mut visit: F) -> Result<u64, ColoringError>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    if n > MAX_ENUMERATION {
        return Err(ColoringError::TooLarge(n));
    }
    let mut a = vec![0u32; n];
    // prefix_max[i] = max(a[0..i]); a[i] may go up to prefix_max[i] + 1
    let mut prefix_max = vec![0u32; n];
    let mut count = 0u64;
    loop {
        count += 1;
        if visit(&a).is_break() {
            return Ok(count);
        }
        let Some(i) = (1..n).rev().find(|&i| a[i] <= prefix_max[i]) else {
            return Ok(count);
        };
        a[i] += 1;
        for j in i + 1..n {
            a[j] = 0;
            prefix_max[j] = prefix_max[j - 1].max(a[j - 1]);
        }
    }
}
