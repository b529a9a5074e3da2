//! The complete r-uniform hypergraph on (r-1)^2 + 1 vertices is rm-unavoidable,
//! while one vertex fewer admits a good coloring.

use rmhg::construct::{build_h, ConstructionParams};
use rmhg::solver::{find_good_coloring, DEFAULT_BUDGET};
use rmhg::{Hypergraph, Uniformity};

fn main() {
    for r in 2..=4 {
        let h = build_h(r, 2, &ConstructionParams::default())
            .expect("base case is small")
            .hypergraph;
        let verdict = find_good_coloring(&h, DEFAULT_BUDGET);
        println!(
            "H({r},2): {} vertices, {} edges -> {verdict}",
            h.num_vertices(),
            h.num_edges()
        );

        let n = (r - 1) * (r - 1);
        if n >= r {
            let smaller = Hypergraph::complete(n, Uniformity::new(r).unwrap());
            match find_good_coloring(&smaller, DEFAULT_BUDGET).witness() {
                Some(c) => println!(
                    "  K_{n}^({r}) has a good coloring with class sizes {:?}",
                    c.class_sizes()
                ),
                None => println!("  K_{n}^({r}) has no good coloring"),
            }
        }
    }
}
