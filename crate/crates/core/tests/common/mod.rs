//! Brute-force oracles and random generators shared by the integration tests.
//! Nothing here calls into the search routines it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rmhg::{Hypergraph, PartiteHypergraph};

fn permutations_of(m: usize, len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    for e in 0..m {
        if !prefix.contains(&e) {
            prefix.push(e);
            permutations_of(m, len, prefix, out);
            prefix.pop();
        }
    }
}

/// All ways to pick distinct connectors `x_i` in `E_i ∩ E_{i+1}`.
fn connector_choices(h: &Hypergraph, seq: &[usize]) -> Vec<Vec<u32>> {
    let len = seq.len();
    let meets: Vec<Vec<u32>> = (0..len)
        .map(|i| {
            let a = h.edge(seq[i]).vertices();
            let b = h.edge(seq[(i + 1) % len]).vertices();
            a.iter().copied().filter(|v| b.contains(v)).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(meets: &[Vec<u32>], current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == meets.len() {
            out.push(current.clone());
            return;
        }
        for &v in &meets[current.len()] {
            if !current.contains(&v) {
                current.push(v);
                go(meets, current, out);
                current.pop();
            }
        }
    }
    go(&meets, &mut current, &mut out);
    out
}

/// Shortest Berge cycle length by trying every sequence of distinct edges.
/// `None` when there is no cycle.
pub fn brute_force_girth(h: &Hypergraph) -> Option<usize> {
    let m = h.num_edges();
    for len in 2..=m {
        let mut seqs = Vec::new();
        permutations_of(m, len, &mut Vec::new(), &mut seqs);
        if seqs.iter().any(|s| !connector_choices(h, s).is_empty()) {
            return Some(len);
        }
    }
    None
}

fn canonical_cyclic(seq: &[usize]) -> Vec<usize> {
    let len = seq.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..len {
        for dir in [1isize, -1] {
            let v: Vec<usize> = (0..len)
                .map(|k| seq[((start as isize + dir * k as isize).rem_euclid(len as isize)) as usize])
                .collect();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.unwrap()
}

/// Number of distinct Berge cycles of length `len`: a cycle is its cyclic edge
/// sequence up to rotation and reflection together with its set of connectors.
pub fn brute_force_cycle_count(h: &Hypergraph, len: usize) -> u64 {
    let mut seqs = Vec::new();
    permutations_of(h.num_edges(), len, &mut Vec::new(), &mut seqs);
    let mut seen = BTreeSet::new();
    for s in &seqs {
        for mut c in connector_choices(h, s) {
            c.sort_unstable();
            seen.insert((canonical_cyclic(s), c));
        }
    }
    seen.len() as u64
}

/// Every set partition of `0..n` as a class vector, generated recursively.
pub fn all_partitions(n: usize) -> Vec<Vec<u32>> {
    fn go(n: usize, current: &mut Vec<u32>, used: u32, out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for c in 0..=used {
            current.push(c);
            go(n, current, used.max(c + 1), out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), 0, &mut out);
    out
}

fn distinct_colors(h: &Hypergraph, classes: &[u32], e: usize) -> (usize, usize) {
    let colors: BTreeSet<u32> = h.edge(e).vertices().iter().map(|&v| classes[v as usize]).collect();
    (colors.len(), h.edge(e).len())
}

/// Whether some coloring has no monochromatic and no rainbow edge.
pub fn has_good_coloring(h: &Hypergraph) -> bool {
    all_partitions(h.num_vertices()).iter().any(|c| {
        (0..h.num_edges()).all(|e| {
            let (k, size) = distinct_colors(h, c, e);
            k > 1 && k < size
        })
    })
}

/// Whether some coloring injective on every part has no rainbow edge.
pub fn has_part_rainbow_bad(p: &PartiteHypergraph) -> bool {
    let h = p.base();
    all_partitions(h.num_vertices()).iter().any(|c| {
        let injective = p.parts().iter().all(|part| {
            let colors: BTreeSet<u32> = part.iter().map(|&v| c[v as usize]).collect();
            colors.len() == part.len()
        });
        injective
            && (0..h.num_edges()).all(|e| {
                let (k, size) = distinct_colors(h, c, e);
                k < size
            })
    })
}

/// Random hypergraph on `n` vertices with up to `max_edges` distinct edges of
/// sizes in `sizes`.
pub fn random_hypergraph<R: Rng>(
    rng: &mut R,
    n: usize,
    max_edges: usize,
    sizes: std::ops::RangeInclusive<usize>,
) -> Hypergraph {
    let m = rng.gen_range(0..=max_edges);
    let mut edges = BTreeSet::new();
    let vertices: Vec<u32> = (0..n as u32).collect();
    for _ in 0..m {
        let k = rng.gen_range(sizes.clone()).min(n);
        if k < 2 {
            continue;
        }
        let mut e: Vec<u32> = vertices.choose_multiple(rng, k).copied().collect();
        e.sort_unstable();
        edges.insert(e);
    }
    Hypergraph::from_indices(n, edges.into_iter().collect()).unwrap()
}

/// Random `r`-uniform hypergraph on `n` vertices with up to `max_edges` edges.
pub fn random_uniform<R: Rng>(rng: &mut R, n: usize, r: usize, max_edges: usize) -> Hypergraph {
    random_hypergraph(rng, n, max_edges, r..=r)
}

/// Random `r`-uniform `r`-partite hypergraph with the given part sizes.
pub fn random_partite<R: Rng>(rng: &mut R, part_sizes: &[usize], max_edges: usize) -> PartiteHypergraph {
    let mut parts = Vec::new();
    let mut next = 0u32;
    for &s in part_sizes {
        parts.push((next..next + s as u32).collect::<Vec<u32>>());
        next += s as u32;
    }
    let m = rng.gen_range(0..=max_edges);
    let mut edges = BTreeSet::new();
    for _ in 0..m {
        let e: Vec<u32> = parts.iter().map(|p| *p.choose(rng).unwrap()).collect();
        edges.insert(e);
    }
    let h = Hypergraph::from_indices(next as usize, edges.into_iter().collect()).unwrap();
    PartiteHypergraph::from_indices(h, parts).unwrap()
}

/// Both sides of `n ln n + ln(a-1) < n^(1+1/g) ln(a/(a-1))`, evaluated
/// directly from the formula.
pub fn counting_inequality_holds(a: f64, g: f64, n: f64) -> bool {
    n * n.ln() + (a - 1.0).ln() < n.powf(1.0 + 1.0 / g) * (a.ln() - (a - 1.0).ln())
}
