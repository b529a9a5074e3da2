//! Builds PR(r, g) (default PR(3,3)), prints the construction tree and checks
//! that every part-rainbow coloring has a rainbow edge.
//!
//! cargo run --release --example build_pr -- 3 4

use rmhg::construct::{build_pr, ConstructionParams, TraceStep};
use rmhg::girth::girth_value;
use rmhg::solver::{verify_part_rainbow_forced, DEFAULT_BUDGET};

fn print_tree(step: &TraceStep, depth: usize) {
    println!(
        "{:indent$}{} [{:?}]: {} vertices, {} edges, parts {:?}",
        "",
        step.label,
        step.kind,
        step.vertices,
        step.edges,
        step.part_sizes,
        indent = 2 * depth
    );
    for c in &step.children {
        print_tree(c, depth + 1);
    }
}

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (r, g) = (args.first().copied().unwrap_or(3), args.get(1).copied().unwrap_or(3));
    let (p, trace) = match build_pr(r, g, &ConstructionParams::default()) {
        Ok(built) => built,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    print_tree(&trace, 0);
    println!("girth: {}", girth_value(p.base(), g).unwrap());
    if p.base().num_vertices() <= 200 {
        println!(
            "part-rainbow forced: {}",
            verify_part_rainbow_forced(&p, DEFAULT_BUDGET)
        );
    }
}
