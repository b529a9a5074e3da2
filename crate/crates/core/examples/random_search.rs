//! Random selections of triples from random 5-uniform carriers until one is
//! rm-unavoidable.

use rmhg::probabilistic::{random_search_rm, ProbParams};

fn main() {
    for n in 6..=9 {
        let params = ProbParams::new(n, 3, 2, 7, 40, 1_000_000).unwrap();
        let report = random_search_rm(&params).unwrap();
        match report.best.filter(|_| report.found) {
            Some(b) => println!(
                "n={n}: try {} gave an rm-unavoidable hypergraph with {} triples",
                b.try_index,
                b.hypergraph.num_edges()
            ),
            None => println!("n={n}: nothing in {} tries", report.tries_run),
        }
    }
}
