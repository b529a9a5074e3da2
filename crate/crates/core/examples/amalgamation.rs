//! One step of the partite recursion by hand: extend the path x-y-z by a new
//! part, then glue 21 copies onto the edges of K_7.

use rmhg::construct::{amalgamate, complete_partite_factor, pr_base, tilde};
use rmhg::{Hypergraph, Uniformity};

fn main() {
    let path = pr_base();
    let extended = tilde(&path).unwrap();
    println!(
        "tilde: {} vertices, parts {:?}",
        extended.base().num_vertices(),
        extended.part_sizes()
    );

    let k7 = Hypergraph::complete(7, Uniformity::new(2).unwrap());
    let glued = amalgamate(&extended, 2, &k7).unwrap();
    let h = glued.result.base();
    println!(
        "amalgamated: {} vertices, {} edges, parts {:?}",
        h.num_vertices(),
        h.num_edges(),
        glued.result.part_sizes()
    );
    println!("copy 0 sits on vertices {:?}", glued.embeddings[0]);

    let factor = complete_partite_factor(&glued.result, 4).unwrap();
    println!(
        "4-partite factor: {} copies, parts {:?}",
        factor.base().num_edges() / h.num_edges(),
        factor.part_sizes()
    );
}
