//! Samples a random R-uniform hypergraph and removes short cycles.
//!
//! cargo run --release --example random_carrier -- <n> <R> <g> <seed>

use rmhg::probabilistic::{random_high_girth, ProbError};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let get = |i: usize, d: u64| args.get(i).copied().unwrap_or(d);
    let (n, big_r, g, seed) = (get(0, 30) as usize, get(1, 3) as usize, get(2, 3) as usize, get(3, 0));
    let sample = match random_high_girth(n, big_r, g, seed, 5) {
        Ok(s) => s,
        Err(ProbError::TargetNotMet { best, .. }) => {
            println!("target not reached; best sample follows");
            *best
        }
        Err(e) => panic!("{e}"),
    };
    println!(
        "sampled {} edges, deleted {}, kept {} (target {}), girth {}",
        sample.sampled_edges,
        sample.deleted_edges,
        sample.hypergraph.num_edges(),
        sample.target,
        sample.girth
    );
}
