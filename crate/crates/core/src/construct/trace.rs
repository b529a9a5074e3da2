use serde::Serialize;

use crate::hypergraph::{Hypergraph, PartiteHypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    PrBase,
    Tilde,
    Supplier,
    Amalgamate,
    Factor,
    HBase,
    H,
}

/// One node of a construction tree with the cardinalities it produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub kind: StepKind,
    pub label: String,
    pub vertices: u64,
    pub edges: u64,
    pub part_sizes: Vec<u64>,
    /// For amalgamations: the 0-based part identified with the edges of the
    /// second operand.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub part: Option<usize>,
    /// Number of copies of the template: edges of the second operand for an
    /// amalgamation, binomial(a, r) for a factor.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub copies: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<TraceStep>,
}

impl TraceStep {
    pub(crate) fn of(kind: StepKind, label: String, p: &PartiteHypergraph) -> Self {
        TraceStep {
            part_sizes: p.part_sizes().into_iter().map(|s| s as u64).collect(),
            ..Self::plain(kind, label, p.base())
        }
    }

    pub(crate) fn plain(kind: StepKind, label: String, h: &Hypergraph) -> Self {
        TraceStep {
            kind,
            label,
            vertices: h.num_vertices() as u64,
            edges: h.num_edges() as u64,
            part_sizes: Vec::new(),
            part: None,
            copies: None,
            children: Vec::new(),
        }
    }

    pub(crate) fn with_children(mut self, children: Vec<TraceStep>) -> Self {
        self.children = children;
        self
    }

    pub(crate) fn with_amalgamation(mut self, part: usize, copies: usize) -> Self {
        self.part = Some(part);
        self.copies = Some(copies as u64);
        self
    }

    pub(crate) fn with_copies(mut self, copies: u64) -> Self {
        self.copies = Some(copies);
        self
    }

    /// Depth-first iterator over this step and all of its descendants.
    pub fn walk(&self) -> Vec<&TraceStep> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.walk());
        }
        out
    }
}
