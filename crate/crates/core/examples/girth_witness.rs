//! Girth and a shortest Berge cycle for a few small hypergraphs.

use rmhg::girth::girth;
use rmhg::{Hypergraph, Uniformity};

fn report(name: &str, h: &Hypergraph) {
    let (g, witness) = girth(h, 10).unwrap();
    print!("{name}: girth {g}");
    if let Some(w) = witness {
        let edges: Vec<_> = w.edges.iter().map(|&i| h.edge_labels(i)).collect();
        let joints: Vec<_> = w.vertices.iter().map(|&v| h.label(v)).collect();
        print!(", cycle through {edges:?} joined at {joints:?}");
    }
    println!();
}

fn main() {
    let fano = Hypergraph::new(
        (1..=7).collect(),
        vec![
            vec![1, 2, 3],
            vec![1, 4, 5],
            vec![1, 6, 7],
            vec![2, 4, 6],
            vec![2, 5, 7],
            vec![3, 4, 7],
            vec![3, 5, 6],
        ],
    )
    .unwrap();
    report("Fano plane", &fano);
    report("K_5^(3)", &Hypergraph::complete(5, Uniformity::new(3).unwrap()));
    let hexagon = Hypergraph::from_indices(6, (0..6).map(|i| vec![i, (i + 1) % 6]).collect()).unwrap();
    report("C_6", &hexagon);
    let star = Hypergraph::from_indices(7, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]).unwrap();
    report("star", &star);
}
