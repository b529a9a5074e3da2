//! Predicted sizes of the explicit constructions, without building them.

use rmhg::construct::{estimate_pr, estimate_size, SupplierStrategy};

fn main() {
    for (r, g) in [(3, 3), (3, 4), (4, 3), (2, 3), (3, 2), (4, 2), (5, 2)] {
        let pr = estimate_pr(r, g, SupplierStrategy::Auto);
        let h = estimate_size(r, g, SupplierStrategy::Auto);
        println!("r={r} g={g}  PR: {pr}  H: {h}");
    }
}
