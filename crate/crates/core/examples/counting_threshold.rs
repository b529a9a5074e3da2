//! Where n ln n + ln(a-1) < n^(1+1/g) ln(a/(a-1)) starts to hold for good.

use rmhg::probabilistic::counting_threshold;

fn main() {
    for r in 3..=4 {
        for g in 2..=4 {
            match counting_threshold(r, g) {
                Ok(t) => println!(
                    "r={r} g={g} a={}: n* = {}{} (margin per vertex {:.3e})",
                    t.a,
                    t.n,
                    if t.certain { "" } else { " approx." },
                    t.margin_per_vertex
                ),
                Err(e) => println!("r={r} g={g}: {e}"),
            }
        }
    }
}
