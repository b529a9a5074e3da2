//! Backtracking search for colorings without monochromatic or rainbow edges.
//!
//! Colorings are explored as set partitions in restricted-growth form, so a
//! vertex either joins a class that is already in use or opens exactly one new
//! class. Two look-ahead rules prune the tree: once an edge has a single
//! uncolored vertex, that vertex may not repeat a common color of the others
//! (when monochromatic edges are forbidden) and must repeat one of their
//! colors when they are pairwise distinct (rainbow edges are always
//! forbidden). Part-rainbow searches add an all-different constraint inside
//! every part, checked by bipartite matching over the vertices whose domains
//! are finite.

use std::collections::HashMap;
use std::fmt;

use crate::coloring::{classify_colors, is_good, Coloring, EdgeClass};
use crate::hypergraph::{Hypergraph, PartiteHypergraph};

/// Default search budget in decision-tree nodes.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

const UNSET: u32 = u32::MAX;

/// Outcome of a search-based verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// A coloring with the searched-for property exists.
    WitnessFound {
        coloring: Coloring,
        nodes: u64,
    },
    /// The search space was exhausted: no such coloring exists.
    PropertyHolds {
        nodes: u64,
    },
    BudgetExceeded {
        nodes: u64,
    },
}

impl Verdict {
    pub fn nodes(&self) -> u64 {
        match self {
            Verdict::WitnessFound { nodes, .. }
            | Verdict::PropertyHolds { nodes }
            | Verdict::BudgetExceeded { nodes } => *nodes,
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, Verdict::WitnessFound { .. })
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::PropertyHolds { .. })
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            Verdict::WitnessFound { coloring, .. } => Some(coloring),
            _ => None,
        }
    }

    /// Stable short name used in JSON output.
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::WitnessFound { .. } => "witness_found",
            Verdict::PropertyHolds { .. } => "property_holds",
            Verdict::BudgetExceeded { .. } => "budget_exceeded",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} nodes)", self.kind(), self.nodes())
    }
}

/// Searches for a good coloring: every edge neither monochromatic nor rainbow.
///
/// `PropertyHolds` means `h` is rm-unavoidable.
pub fn find_good_coloring(h: &Hypergraph, budget: u64) -> Verdict {
    Engine::new(h, None, true, budget).run()
}

/// Same search as [`find_good_coloring`]; `PropertyHolds` certifies that every
/// coloring of `h` has a monochromatic or rainbow edge.
pub fn verify_rm_unavoidable(h: &Hypergraph, budget: u64) -> Verdict {
    find_good_coloring(h, budget)
}

/// Searches for a part-rainbow coloring (injective on every part) without a
/// rainbow edge. Colors may repeat across parts.
///
/// `PropertyHolds` means `p` is part-rainbow-forced.
pub fn find_part_rainbow_bad(p: &PartiteHypergraph, budget: u64) -> Verdict {
    Engine::new(p.base(), Some(p), false, budget).run()
}

/// Alias of [`find_part_rainbow_bad`] named after the property it certifies.
pub fn verify_part_rainbow_forced(p: &PartiteHypergraph, budget: u64) -> Verdict {
    find_part_rainbow_bad(p, budget)
}

/// True iff `c` is injective on every part of `p`.
pub fn is_part_rainbow(p: &PartiteHypergraph, c: &Coloring) -> bool {
    p.parts().iter().all(|part| {
        let mut seen: Vec<u32> = part.iter().filter_map(|&v| c.class_of(v)).collect();
        let k = seen.len();
        seen.sort_unstable();
        seen.dedup();
        k == part.len() && seen.len() == k
    })
}

/// True iff `c` is part-rainbow on `p` and no edge is rainbow.
pub fn is_part_rainbow_bad(p: &PartiteHypergraph, c: &Coloring) -> bool {
    is_part_rainbow(p, c)
        && p.base().edges().iter().all(|e| {
            let colors: Vec<u32> = e.vertices().iter().map(|&v| c.classes()[v as usize]).collect();
            classify_colors(&colors) != EdgeClass::Rainbow
        })
}

enum Domain {
    /// Any class except these; a fresh class is always available.
    Cofinite(Vec<u32>),
    /// Exactly these classes (sorted, deduplicated).
    Finite(Vec<u32>),
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Engine<'a> {
    h: &'a Hypergraph,
    partite: Option<&'a PartiteHypergraph>,
    incident: Vec<Vec<u32>>,
    order: Vec<u32>,
    forbid_mono: bool,
    color: Vec<u32>,
    classes: u32,
    nodes: u64,
    budget: u64,
    scratch: Vec<u32>,
}

impl<'a> Engine<'a> {
    fn new(h: &'a Hypergraph, partite: Option<&'a PartiteHypergraph>, forbid_mono: bool, budget: u64) -> Self {
        let degrees = h.degrees();
        let mut order: Vec<u32> = (0..h.num_vertices() as u32).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v as usize]), v));
        Engine {
            h,
            partite,
            incident: h.incidence(),
            order,
            forbid_mono,
            color: vec![UNSET; h.num_vertices()],
            classes: 0,
            nodes: 0,
            budget,
            scratch: Vec::new(),
        }
    }

    fn run(mut self) -> Verdict {
        match self.search(0) {
            Step::Found => {
                let coloring = Coloring::from_classes(&self.color);
                debug_assert!(match self.partite {
                    Some(p) => is_part_rainbow_bad(p, &coloring),
                    None => is_good(self.h, &coloring).unwrap_or(false),
                });
                Verdict::WitnessFound {
                    coloring,
                    nodes: self.nodes,
                }
            }
            Step::Exhausted => Verdict::PropertyHolds { nodes: self.nodes },
            Step::OutOfBudget => Verdict::BudgetExceeded { nodes: self.nodes },
        }
    }

    fn search(&mut self, depth: usize) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let v = self.order[depth];
        let candidates: Vec<u32> = match self.domain(v) {
            Domain::Finite(list) => list,
            Domain::Cofinite(forbidden) => (0..=self.classes).filter(|c| !forbidden.contains(c)).collect(),
        };
        for c in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            let opened = c == self.classes;
            self.color[v as usize] = c;
            if opened {
                self.classes += 1;
            }
            if self.look_ahead(v) {
                match self.search(depth + 1) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            if opened {
                self.classes -= 1;
            }
            self.color[v as usize] = UNSET;
        }
        Step::Exhausted
    }

    /// Classes still available to the uncolored vertex `w`.
    fn domain(&mut self, w: u32) -> Domain {
        let mut forbidden = Vec::new();
        let mut allowed: Option<Vec<u32>> = None;
        if let Some(p) = self.partite {
            for &u in p.part(p.part_of(w)) {
                let c = self.color[u as usize];
                if c != UNSET {
                    forbidden.push(c);
                }
            }
        }
        'edges: for &e in &self.incident[w as usize] {
            self.scratch.clear();
            for &u in self.h.edge(e as usize).vertices() {
                if u == w {
                    continue;
                }
                let c = self.color[u as usize];
                if c == UNSET {
                    continue 'edges;
                }
                self.scratch.push(c);
            }
            let first = self.scratch[0];
            let all_same = self.scratch.iter().all(|&c| c == first);
            if all_same && self.forbid_mono {
                forbidden.push(first);
            }
            self.scratch.sort_unstable();
            let distinct = self.scratch.windows(2).all(|p| p[0] != p[1]);
            if distinct {
                allowed = Some(match allowed {
                    None => self.scratch.clone(),
                    Some(prev) => prev
                        .into_iter()
                        .filter(|c| self.scratch.binary_search(c).is_ok())
                        .collect(),
                });
            }
        }
        match allowed {
            Some(mut list) => {
                list.retain(|c| !forbidden.contains(c));
                Domain::Finite(list)
            }
            None => Domain::Cofinite(forbidden),
        }
    }

    /// Checks that no uncolored neighbour of `v` has run out of options and,
    /// in part-rainbow mode, that the affected parts still admit distinct colors.
    fn look_ahead(&mut self, v: u32) -> bool {
        let mut touched_parts = Vec::new();
        if let Some(p) = self.partite {
            touched_parts.push(p.part_of(v));
        }
        for k in 0..self.incident[v as usize].len() {
            let e = self.incident[v as usize][k] as usize;
            for &w in self.h.edge(e).vertices() {
                if self.color[w as usize] != UNSET {
                    continue;
                }
                if let Domain::Finite(list) = self.domain(w) {
                    if list.is_empty() {
                        return false;
                    }
                }
                if let Some(p) = self.partite {
                    touched_parts.push(p.part_of(w));
                }
            }
        }
        touched_parts.sort_unstable();
        touched_parts.dedup();
        touched_parts.into_iter().all(|part| self.part_has_matching(part))
    }

    /// Hall condition for the all-different constraint of one part: the
    /// uncolored members with finite domains need pairwise distinct classes.
    fn part_has_matching(&mut self, part: usize) -> bool {
        let p = self.partite.expect("part-rainbow mode");
        let mut domains = Vec::new();
        for &u in p.part(part) {
            if self.color[u as usize] != UNSET {
                continue;
            }
            if let Domain::Finite(list) = self.domain(u) {
                if list.is_empty() {
                    return false;
                }
                domains.push(list);
            }
        }
        if domains.len() < 2 {
            return true;
        }
        let mut owner: HashMap<u32, usize> = HashMap::new();
        for i in 0..domains.len() {
            let mut visited = Vec::new();
            if !augment(i, &domains, &mut owner, &mut visited) {
                return false;
            }
        }
        true
    }
}

/// Kuhn's augmenting path step for bipartite matching of slots to classes.
fn augment(i: usize, domains: &[Vec<u32>], owner: &mut HashMap<u32, usize>, visited: &mut Vec<u32>) -> bool {
    for &c in &domains[i] {
        if visited.contains(&c) {
            continue;
        }
        visited.push(c);
        let free = match owner.get(&c) {
            None => true,
            Some(&j) => augment(j, domains, owner, visited),
        };
        if free {
            owner.insert(c, i);
            return true;
        }
    }
    false
}
