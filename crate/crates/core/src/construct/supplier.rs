use std::collections::VecDeque;

use rand::RngCore;

use super::estimate::complete_supplier_order;
use super::{check_girth, check_uniform, ConstructError, ConstructionParams, SupplierStrategy};
use crate::hypergraph::{Hypergraph, Uniformity};
use crate::probabilistic::{delete_short_cycles, rng_from, sample_carrier};

/// An `ell`-uniform hypergraph of girth at least `g` and minimum degree at
/// least `q`.
///
/// Under [`SupplierStrategy::Auto`] the complete graph `K_{q+1}` is used for
/// `ell = 2, g <= 3`, and the smallest complete `ell`-uniform hypergraph of
/// large enough degree for `g <= 2`. Otherwise random `ell`-uniform
/// hypergraphs are sampled, short cycles are broken by edge deletion and
/// vertices of degree below `q` are peeled off repeatedly; a non-empty
/// remainder is returned. The vertex count grows by half after each failed
/// sample. The result is re-verified before it is returned.
pub fn supply_min_degree_girth(
    ell: usize,
    g: usize,
    q: usize,
    params: &ConstructionParams,
) -> Result<Hypergraph, ConstructError> {
    let uniformity = Uniformity::new(ell).map_err(|_| ConstructError::BadParams { r: ell, g })?;
    let q = q.max(1);
    let auto = params.supplier == SupplierStrategy::Auto;
    let h = if auto && ell == 2 && g <= 3 {
        Hypergraph::complete(q + 1, uniformity)
    } else if auto && g <= 2 {
        let n = complete_supplier_order(ell, q)
            .exact()
            .and_then(|n| usize::try_from(n).ok())
            .ok_or(ConstructError::SupplierFailed { ell, g, q, attempts: 0 })?;
        Hypergraph::complete(n, uniformity)
    } else {
        random_supplier(ell, g, q, params)?
    };
    check_uniform(&h, ell, "supplier output")?;
    check_girth(&h, g, "supplier output")?;
    if h.num_edges() == 0 || h.min_degree().unwrap_or(0) < q {
        return Err(ConstructError::Postcondition(format!(
            "supplier output has minimum degree below {q}"
        )));
    }
    Ok(h)
}

fn random_supplier(ell: usize, g: usize, q: usize, params: &ConstructionParams) -> Result<Hypergraph, ConstructError> {
    let mut master = rng_from(params.seed ^ ((ell as u64) << 32) ^ (q as u64));
    let mut n = (1 + q * (ell - 1)).max(ell + 1);
    for _ in 0..params.supplier_attempts {
        // twice the edges needed for average degree q
        let m = (2 * n * q).div_ceil(ell);
        if n as u64 > params.limits.max_vertices || m as u64 > params.limits.max_edges {
            break;
        }
        let mut rng = rng_from(master.next_u64());
        let sample = sample_carrier(n, ell, m, &mut rng).map_err(|e| ConstructError::Postcondition(e.to_string()))?;
        let (pruned, _) = delete_short_cycles(&sample, g)?;
        let core = peel(&pruned, q);
        if core.num_edges() > 0 {
            return Ok(core);
        }
        n += n.div_ceil(2);
    }
    Err(ConstructError::SupplierFailed {
        ell,
        g,
        q,
        attempts: params.supplier_attempts,
    })
}

/// Repeatedly removes vertices of degree below `q` together with their edges.
/// The surviving vertices are relabelled `0..`.
fn peel(h: &Hypergraph, q: usize) -> Hypergraph {
    let incidence = h.incidence();
    let mut degree = h.degrees();
    let mut edge_alive = vec![true; h.num_edges()];
    let mut alive = vec![true; h.num_vertices()];
    let mut queue: VecDeque<usize> = (0..h.num_vertices()).filter(|&v| degree[v] < q).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &e in &incidence[v] {
            if !std::mem::replace(&mut edge_alive[e as usize], false) {
                continue;
            }
            for &w in h.edge(e as usize).vertices() {
                let w = w as usize;
                degree[w] -= 1;
                if alive[w] && degree[w] < q {
                    queue.push_back(w);
                }
            }
        }
    }
    let (core, _) = h.induced_by_mask(&alive);
    core.relabeled()
}
