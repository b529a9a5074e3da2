//! Writes PR(3,3) as canonical JSON and its incidence graph as DOT.
//!
//! cargo run --example export_dot -- out_dir

use std::path::PathBuf;

use rmhg::construct::{build_pr, ConstructionParams};
use rmhg::io::{to_dot, write_atomic, Document};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let (p, trace) = build_pr(3, 3, &ConstructionParams::default()).unwrap();
    let dot = to_dot(p.base());
    let doc = Document::partite(p).with("trace", serde_json::to_value(&trace).unwrap());
    write_atomic(&dir.join("pr-3-3.json"), &doc.to_json()).unwrap();
    write_atomic(&dir.join("pr-3-3.dot"), &dot).unwrap();
    println!(
        "wrote {} and {}",
        dir.join("pr-3-3.json").display(),
        dir.join("pr-3-3.dot").display()
    );
}
