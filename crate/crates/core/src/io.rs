//! JSON artifacts and DOT export.
//!
//! A hypergraph document is a JSON object with `vertices` (integer ids),
//! `edges` (lists of ids) and optionally `parts` (lists of ids). Any other
//! top-level field, such as `params` or `trace`, is carried along untouched.
//! Canonical output sorts object keys, vertex lists, the vertices inside each
//! edge and part, and the edge list; the order of parts is kept.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::coloring::Coloring;
use crate::hypergraph::{Hypergraph, HypergraphError, PartiteHypergraph, VertexId};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document: {0}")]
    Schema(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A parsed hypergraph document.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub hypergraph: Hypergraph,
    pub partite: Option<PartiteHypergraph>,
    /// Top-level fields other than `vertices`, `edges` and `parts`.
    pub extra: Map<String, Value>,
}

impl Document {
    pub fn new(hypergraph: Hypergraph) -> Self {
        Document {
            hypergraph,
            partite: None,
            extra: Map::new(),
        }
    }

    pub fn partite(p: PartiteHypergraph) -> Self {
        Document {
            hypergraph: p.base().clone(),
            partite: Some(p),
            extra: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }

    pub fn to_value(&self) -> Value {
        let mut obj = self.extra.clone();
        if let Value::Object(core) = hypergraph_value(&self.hypergraph) {
            obj.extend(core);
        }
        if let Some(p) = &self.partite {
            obj.insert("parts".into(), json!(sorted_parts(p)));
        }
        Value::Object(obj)
    }

    pub fn to_json(&self) -> String {
        canonical_string(&self.to_value())
    }
}

fn sorted_parts(p: &PartiteHypergraph) -> Vec<Vec<VertexId>> {
    p.part_labels()
        .into_iter()
        .map(|mut part| {
            part.sort_unstable();
            part
        })
        .collect()
}

/// `{"vertices": [...], "edges": [[...], ...]}` in canonical order.
pub fn hypergraph_value(h: &Hypergraph) -> Value {
    let mut vertices = h.labels().to_vec();
    vertices.sort_unstable();
    let mut edges: Vec<Vec<VertexId>> = (0..h.num_edges())
        .map(|i| {
            let mut e = h.edge_labels(i);
            e.sort_unstable();
            e
        })
        .collect();
    edges.sort();
    json!({ "vertices": vertices, "edges": edges })
}

/// Color classes as sorted lists of vertex ids, ordered by smallest member.
pub fn coloring_value(h: &Hypergraph, c: &Coloring) -> Value {
    let mut classes: Vec<Vec<VertexId>> = vec![Vec::new(); c.num_classes()];
    for (v, &k) in c.classes().iter().enumerate() {
        classes[k as usize].push(h.label(v as u32));
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    classes.sort();
    json!(classes)
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn parse_document(text: &str) -> Result<Document, IoError> {
    let value: Value = serde_json::from_str(text).map_err(|e| IoError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    document_from_value(value)
}

pub fn document_from_value(value: Value) -> Result<Document, IoError> {
    let Value::Object(mut obj) = value else {
        return Err(IoError::Schema("top level must be an object".into()));
    };
    let edges: Vec<Vec<VertexId>> =
        take_field(&mut obj, "edges")?.ok_or_else(|| IoError::Schema("missing field `edges`".into()))?;
    let vertices: Vec<VertexId> = match take_field(&mut obj, "vertices")? {
        Some(v) => v,
        None => {
            let mut v: Vec<VertexId> = edges.iter().flatten().copied().collect();
            v.sort_unstable();
            v.dedup();
            v
        }
    };
    let parts: Option<Vec<Vec<VertexId>>> = take_field(&mut obj, "parts")?;
    let hypergraph = Hypergraph::new(vertices, edges)?;
    let partite = parts
        .map(|p| PartiteHypergraph::new(hypergraph.clone(), p))
        .transpose()?;
    Ok(Document {
        hypergraph,
        partite,
        extra: obj,
    })
}

fn take_field<T: serde::de::DeserializeOwned>(obj: &mut Map<String, Value>, key: &str) -> Result<Option<T>, IoError> {
    obj.remove(key)
        .map(|v| serde_json::from_value(v).map_err(|e| IoError::Schema(format!("field `{key}`: {e}"))))
        .transpose()
}

pub fn read_document(path: &Path) -> Result<Document, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })?;
    parse_document(&text)
}

/// Writes `contents` to a temporary sibling file and renames it over `path`.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), IoError> {
    let file_err = |source| IoError::File {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(file_err)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents).map_err(file_err)?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        file_err(e)
    })
}

/// The incidence graph in DOT: one node `v<id>` per vertex, one box node
/// `e<i>` per edge (in canonical edge order) and an arc for every incidence.
pub fn to_dot(h: &Hypergraph) -> String {
    let canonical = hypergraph_value(h);
    let mut out = String::from("graph incidence {\n");
    for v in canonical["vertices"].as_array().into_iter().flatten() {
        out.push_str(&format!("  v{v} [label=\"{v}\"];\n"));
    }
    let edges = canonical["edges"].as_array().cloned().unwrap_or_default();
    for (i, e) in edges.iter().enumerate() {
        out.push_str(&format!("  e{i} [shape=box, label=\"e{i}\"];\n"));
        for v in e.as_array().into_iter().flatten() {
            out.push_str(&format!("  e{i} -- v{v};\n"));
        }
    }
    out.push_str("}\n");
    out
}
