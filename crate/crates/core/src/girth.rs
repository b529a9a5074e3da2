//! Berge girth, cycle witnesses and exact short-cycle counts.
//!
//! A Berge cycle of length `g` is a sequence of distinct edges `E_0..E_{g-1}`
//! and distinct vertices `x_0..x_{g-1}` with `x_i` in `E_i ∩ E_{i+1}` (indices
//! mod `g`). Such a cycle is exactly a cycle of length `2g` in the bipartite
//! incidence graph whose nodes are the vertices and the edges of the
//! hypergraph, so girth reduces to a shortest-cycle search there.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{Hypergraph, Uniformity};
use crate::util::binomial;

/// Default budget for [`count_cycles`], in partial cycle tuples explored.
pub const DEFAULT_COUNT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GirthError {
    #[error("cycle enumeration exceeded its budget of {0} tuples")]
    BudgetExceeded(u64),
    #[error("cycle length must be at least 2, got {0}")]
    BadLength(usize),
    #[error("cap must be at least 2, got {0}")]
    BadCap(usize),
}

/// Outcome of a bounded girth computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Girth {
    Finite(usize),
    /// No cycle at all: the incidence graph is a forest.
    Infinite,
    /// No cycle of length below the carried value was found.
    AtLeast(usize),
}

impl Girth {
    /// Whether the girth is provably at least `g`.
    pub fn is_at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(k) | Girth::AtLeast(k) => k >= g,
            Girth::Infinite => true,
        }
    }

    /// A lower bound usable for comparisons; `usize::MAX` for infinite girth.
    pub fn lower_bound(self) -> usize {
        match self {
            Girth::Finite(k) | Girth::AtLeast(k) => k,
            Girth::Infinite => usize::MAX,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => f.write_str("infinite"),
            Girth::AtLeast(k) => write!(f, ">={k}"),
        }
    }
}

/// A Berge cycle: `edges[i]` and `edges[i+1]` (cyclically) both contain `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    /// Edge indices `E_0..E_{g-1}`.
    pub edges: Vec<usize>,
    /// Vertex indices `x_0..x_{g-1}`.
    pub vertices: Vec<u32>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks length, distinctness and the membership conditions against `h`.
    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        let g = self.edges.len();
        if g < 2 || self.vertices.len() != g {
            return false;
        }
        let distinct_edges: HashSet<_> = self.edges.iter().collect();
        let distinct_vertices: HashSet<_> = self.vertices.iter().collect();
        if distinct_edges.len() != g || distinct_vertices.len() != g {
            return false;
        }
        if self.edges.iter().any(|&e| e >= h.num_edges()) {
            return false;
        }
        (0..g).all(|i| {
            let x = self.vertices[i];
            h.edge(self.edges[i]).contains(x) && h.edge(self.edges[(i + 1) % g]).contains(x)
        })
    }
}

/// Bipartite incidence graph: nodes `0..n` are vertices, `n..n+m` are edges.
struct Incidence {
    n: usize,
    adj: Vec<Vec<u32>>,
}

impl Incidence {
    fn new(h: &Hypergraph) -> Self {
        let n = h.num_vertices();
        let mut adj = vec![Vec::new(); n + h.num_edges()];
        for (i, e) in h.edges().iter().enumerate() {
            let en = (n + i) as u32;
            for &v in e.vertices() {
                adj[v as usize].push(en);
                adj[en as usize].push(v);
            }
        }
        Incidence { n, adj }
    }

    fn is_forest(&self) -> bool {
        let nodes = self.adj.len();
        let links: usize = self.adj.iter().map(Vec::len).sum::<usize>() / 2;
        let mut seen = vec![false; nodes];
        let mut components = 0;
        let mut stack = Vec::new();
        for s in 0..nodes {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            stack.push(s as u32);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
        }
        links + components == nodes
    }

    /// Shortest cycle of length at most `max_len`, as a closed node sequence
    /// without repetition of the start node.
    fn shortest_cycle(&self, max_len: usize) -> Option<Vec<u32>> {
        let nodes = self.adj.len();
        let mut best_len = max_len + 1;
        let mut best: Option<Vec<u32>> = None;
        let mut dist = vec![u32::MAX; nodes];
        let mut parent = vec![u32::MAX; nodes];
        let mut touched = Vec::new();
        let mut queue = VecDeque::new();
        // Every cycle passes through an edge node, so edge nodes suffice as roots.
        for root in self.n..nodes {
            if best_len <= 4 {
                // 4 is the shortest possible incidence cycle.
                break;
            }
            for &t in &touched {
                dist[t as usize] = u32::MAX;
                parent[t as usize] = u32::MAX;
            }
            touched.clear();
            queue.clear();
            dist[root] = 0;
            touched.push(root as u32);
            queue.push_back(root as u32);
            let mut found: Option<(u32, u32)> = None;
            let mut limit = best_len;
            while let Some(u) = queue.pop_front() {
                let du = dist[u as usize] as usize;
                // A cycle closed from depth du has length at least 2*du.
                if 2 * du >= limit {
                    break;
                }
                for &w in &self.adj[u as usize] {
                    if w == parent[u as usize] {
                        continue;
                    }
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = du as u32 + 1;
                        parent[w as usize] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else {
                        let len = du + dist[w as usize] as usize + 1;
                        if len < limit {
                            limit = len;
                            found = Some((u, w));
                        }
                    }
                }
            }
            if let Some((u, w)) = found {
                let cycle = self.close_cycle(&parent, u, w);
                if cycle.len() < best_len {
                    best_len = cycle.len();
                    best = Some(cycle);
                }
            }
        }
        best
    }

    /// Joins the tree paths to `u` and `w` through the non-tree link `u–w`,
    /// cutting off their common prefix so the result is a simple cycle.
    fn close_cycle(&self, parent: &[u32], u: u32, w: u32) -> Vec<u32> {
        let path = |mut x: u32| {
            let mut p = vec![x];
            while parent[x as usize] != u32::MAX {
                x = parent[x as usize];
                p.push(x);
            }
            p.reverse();
            p
        };
        let pu = path(u);
        let pw = path(w);
        let common = pu.iter().zip(&pw).take_while(|(a, b)| a == b).count();
        let mut cycle = pu[common - 1..].to_vec();
        cycle.extend(pw[common..].iter().rev());
        cycle
    }
}

/// Berge girth with an optional shortest-cycle witness.
///
/// Cycles of length up to `cap` are found exactly. Returns [`Girth::Infinite`]
/// when the hypergraph has no cycle at all and [`Girth::AtLeast`]`(cap + 1)`
/// when every cycle is longer than `cap`.
pub fn girth(h: &Hypergraph, cap: usize) -> Result<(Girth, Option<CycleWitness>), GirthError> {
    if cap < 2 {
        return Err(GirthError::BadCap(cap));
    }
    let inc = Incidence::new(h);
    if inc.is_forest() {
        return Ok((Girth::Infinite, None));
    }
    match inc.shortest_cycle(2 * cap) {
        Some(cycle) => {
            let w = witness_from_incidence(&inc, &cycle);
            debug_assert!(w.is_valid_in(h));
            Ok((Girth::Finite(w.len()), Some(w)))
        }
        None => Ok((Girth::AtLeast(cap + 1), None)),
    }
}

/// Girth value only; see [`girth`].
pub fn girth_value(h: &Hypergraph, cap: usize) -> Result<Girth, GirthError> {
    girth(h, cap).map(|(g, _)| g)
}

fn witness_from_incidence(inc: &Incidence, cycle: &[u32]) -> CycleWitness {
    let n = inc.n as u32;
    let start = cycle.iter().position(|&x| x >= n).expect("cycle has an edge node");
    let len = cycle.len();
    let rotated = (0..len).map(|k| cycle[(start + k) % len]).collect::<Vec<_>>();
    let edges = rotated.iter().step_by(2).map(|&e| (e - n) as usize).collect();
    let vertices = rotated.iter().skip(1).step_by(2).copied().collect();
    CycleWitness { edges, vertices }
}

/// Result of an exhaustive enumeration of `ell`-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCensus {
    pub length: usize,
    pub count: u64,
    /// Largest vertex support `|E_0 ∪ … ∪ E_{ell-1}|` over all cycles found.
    pub max_support: usize,
    pub tuples_explored: u64,
}

/// Counts `ell`-cycles exactly.
///
/// Two cycles are identified when they have the same cyclic edge sequence up
/// to rotation and reflection and the same set of connector vertices.
pub fn count_cycles(h: &Hypergraph, ell: usize) -> Result<u64, GirthError> {
    cycle_census(h, ell, DEFAULT_COUNT_BUDGET).map(|c| c.count)
}

/// Like [`count_cycles`], with an explicit budget and enumeration statistics.
pub fn cycle_census(h: &Hypergraph, ell: usize, budget: u64) -> Result<CycleCensus, GirthError> {
    if ell < 2 {
        return Err(GirthError::BadLength(ell));
    }
    let inc = h.incidence();
    let mut walker = CycleWalker {
        h,
        inc: &inc,
        ell,
        budget,
        explored: 0,
        edges: Vec::with_capacity(ell),
        verts: Vec::with_capacity(ell),
        used_edge: vec![false; h.num_edges()],
        used_vertex: vec![false; h.num_vertices()],
        seen: HashSet::new(),
        max_support: 0,
    };
    for e0 in 0..h.num_edges() {
        walker.edges.push(e0);
        walker.used_edge[e0] = true;
        walker.extend()?;
        walker.used_edge[e0] = false;
        walker.edges.pop();
    }
    Ok(CycleCensus {
        length: ell,
        count: walker.seen.len() as u64,
        max_support: walker.max_support,
        tuples_explored: walker.explored,
    })
}

struct CycleWalker<'a> {
    h: &'a Hypergraph,
    inc: &'a [Vec<u32>],
    ell: usize,
    budget: u64,
    explored: u64,
    edges: Vec<usize>,
    verts: Vec<u32>,
    used_edge: Vec<bool>,
    used_vertex: Vec<bool>,
    seen: HashSet<(Vec<usize>, Vec<u32>)>,
    max_support: usize,
}

impl CycleWalker<'_> {
    // Sequences start at their smallest edge, so every later edge must exceed edges[0].
    fn extend(&mut self) -> Result<(), GirthError> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(GirthError::BudgetExceeded(self.budget));
        }
        let last = *self.edges.last().unwrap();
        if self.edges.len() == self.ell {
            let first = self.edges[0];
            for &x in self.h.edge(last).vertices() {
                if !self.used_vertex[x as usize] && self.h.edge(first).contains(x) {
                    self.verts.push(x);
                    self.record();
                    self.verts.pop();
                }
            }
            return Ok(());
        }
        for &x in self.h.edge(last).vertices() {
            if self.used_vertex[x as usize] {
                continue;
            }
            self.used_vertex[x as usize] = true;
            self.verts.push(x);
            for k in 0..self.inc[x as usize].len() {
                let next = self.inc[x as usize][k] as usize;
                if next <= self.edges[0] || self.used_edge[next] {
                    continue;
                }
                self.used_edge[next] = true;
                self.edges.push(next);
                let r = self.extend();
                self.edges.pop();
                self.used_edge[next] = false;
                r?;
            }
            self.verts.pop();
            self.used_vertex[x as usize] = false;
        }
        Ok(())
    }

    fn record(&mut self) {
        let forward = self.edges.clone();
        let mut backward = vec![forward[0]];
        backward.extend(forward[1..].iter().rev());
        let seq = forward.min(backward);
        let mut conn = self.verts.clone();
        conn.sort_unstable();
        let support: HashSet<u32> = self
            .edges
            .iter()
            .flat_map(|&e| self.h.edge(e).vertices().iter().copied())
            .collect();
        self.max_support = self.max_support.max(support.len());
        self.seen.insert((seq, conn));
    }
}

/// Numbers behind one cycle-count bound check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleBoundReport {
    pub r: usize,
    pub ell: usize,
    pub n: usize,
    /// Exact `ell`-cycle count in the complete `r`-uniform hypergraph on `n` vertices.
    pub count: u64,
    /// Exact `ell`-cycle count on a fixed set of `(r-1)·ell` vertices.
    pub per_set: u64,
    /// `binomial(n, (r-1)·ell)`.
    pub sets: u128,
    pub max_support: usize,
    pub holds: bool,
}

/// Checks `count ≤ per_set · binomial(n, (r-1)·ell)` for the complete
/// `r`-uniform hypergraph on `n` vertices, with both counts exact.
pub fn cycle_count_bound_check(r: Uniformity, ell: usize, n: usize) -> Result<CycleBoundReport, GirthError> {
    let support = (r.get() - 1) * ell;
    let full = cycle_census(&Hypergraph::complete(n, r), ell, DEFAULT_COUNT_BUDGET)?;
    let per_set = cycle_census(&Hypergraph::complete(support, r), ell, DEFAULT_COUNT_BUDGET)?;
    let sets = binomial(n as u64, support as u64).unwrap_or(u128::MAX);
    let holds = (full.count as u128) <= (per_set.count as u128).saturating_mul(sets);
    Ok(CycleBoundReport {
        r: r.get(),
        ell,
        n,
        count: full.count,
        per_set: per_set.count,
        sets,
        max_support: full.max_support,
        holds,
    })
}
