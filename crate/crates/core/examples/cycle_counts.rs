//! Counts of Berge cycles in complete hypergraphs against c * C(n, (r-1)l).

use rmhg::girth::cycle_count_bound_check;
use rmhg::Uniformity;

fn main() {
    println!(
        "{:>3} {:>3} {:>3} {:>8} {:>6} {:>6}",
        "r", "l", "n", "count", "c", "sets"
    );
    for (r, ell, n) in [
        (2, 3, 5),
        (2, 3, 6),
        (2, 4, 6),
        (3, 2, 4),
        (3, 2, 5),
        (3, 2, 6),
        (3, 3, 7),
    ] {
        let rep = cycle_count_bound_check(Uniformity::new(r).unwrap(), ell, n).unwrap();
        let mark = if rep.holds { "" } else { "  exceeds bound" };
        println!(
            "{r:>3} {ell:>3} {n:>3} {:>8} {:>6} {:>6}{mark}",
            rep.count, rep.per_set, rep.sets
        );
    }
}
