//! Random high-girth carriers, random `r`-subset selections on them, the
//! counting threshold, and a randomized search for small rm-unavoidable
//! hypergraphs.

use std::collections::HashSet;

use itertools::Itertools;
use rand::seq::index;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::girth::{count_cycles, girth, girth_value, Girth, GirthError};
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::solver::{find_good_coloring, verify_rm_unavoidable, Verdict};
use crate::util::binomial;

/// Fresh samples drawn by [`random_high_girth`] before reporting failure.
pub const DEFAULT_CARRIER_TRIES: usize = 5;

/// Above this many candidate edges, carriers are sampled by rejection instead
/// of by enumerating all `R`-subsets.
const ENUMERATION_LIMIT: u128 = 200_000;

#[derive(Debug, Error)]
pub enum ProbError {
    #[error("uniformity r = {0} is not supported here: r must be at least 3")]
    UniformityTooSmall(usize),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("no sample reached {target} edges in {attempts} attempts (best: {achieved})")]
    TargetNotMet {
        achieved: usize,
        target: u64,
        attempts: usize,
        best: Box<HighGirthSample>,
    },
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Girth(#[from] GirthError),
}

pub(crate) fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `ceil(n^(1 + 1/g))`, computed exactly as the least `t` with `t^g >= n^(g+1)`.
pub fn edge_target(n: u64, g: usize) -> u64 {
    let approx = (n as f64).powf(1.0 + 1.0 / g as f64).ceil() as u64;
    let reaches = |t: u64| -> Option<bool> {
        let lhs = (t as u128).checked_pow(g as u32)?;
        let rhs = (n as u128).checked_pow(g as u32 + 1)?;
        Some(lhs >= rhs)
    };
    let mut t = approx.saturating_sub(2).max(1);
    loop {
        match reaches(t) {
            Some(true) => return t,
            Some(false) => t += 1,
            None => return approx,
        }
    }
}

/// `m` distinct uniformly random `R`-subsets of `0..n`, as a hypergraph on
/// `n` vertices. `m` is capped at `binomial(n, R)`.
pub fn sample_carrier<G: Rng>(n: usize, uniformity: usize, m: usize, rng: &mut G) -> Result<Hypergraph, ProbError> {
    if uniformity < 2 || uniformity > n {
        return Err(ProbError::BadParams(format!(
            "need 2 <= R <= n, got R={uniformity}, n={n}"
        )));
    }
    let total = binomial(n as u64, uniformity as u64).unwrap_or(u128::MAX);
    let m = (m as u128).min(total) as usize;
    let edges: Vec<Vec<u32>> = if total <= ENUMERATION_LIMIT && (m as u128) * 2 >= total {
        let all: Vec<Vec<u32>> = (0..n as u32).combinations(uniformity).collect();
        index::sample(rng, all.len(), m)
            .into_iter()
            .map(|i| all[i].clone())
            .collect()
    } else {
        let mut seen = HashSet::with_capacity(m);
        let mut out = Vec::with_capacity(m);
        while out.len() < m {
            let mut e: Vec<u32> = index::sample(rng, n, uniformity)
                .into_iter()
                .map(|v| v as u32)
                .collect();
            e.sort_unstable();
            if seen.insert(e.clone()) {
                out.push(e);
            }
        }
        out
    };
    Ok(Hypergraph::from_indices(n, edges)?)
}

/// Removes edges until no cycle of length below `g` remains: repeatedly
/// finds a shortest cycle and deletes its edge of largest index.
///
/// Returns the pruned hypergraph and the number of deleted edges.
pub fn delete_short_cycles(h: &Hypergraph, g: usize) -> Result<(Hypergraph, usize), GirthError> {
    let mut current = h.clone();
    let mut deleted = 0;
    if g <= 2 {
        return Ok((current, 0));
    }
    loop {
        match girth(&current, g - 1)? {
            (Girth::Finite(_), Some(w)) => {
                let victim = *w.edges.iter().max().expect("cycle has edges");
                current = current.without_edges(&[victim]);
                deleted += 1;
            }
            _ => return Ok((current, deleted)),
        }
    }
}

/// Number of Berge cycles of length `2..g` (the cycles deletion must break).
pub fn bad_cycle_count(h: &Hypergraph, g: usize) -> Result<u64, GirthError> {
    (2..g).map(|ell| count_cycles(h, ell)).sum()
}

/// One carrier produced by [`random_high_girth`].
#[derive(Debug, Clone)]
pub struct HighGirthSample {
    pub hypergraph: Hypergraph,
    pub sampled_edges: usize,
    pub deleted_edges: usize,
    pub target: u64,
    pub girth: Girth,
    /// Seed of the sample that produced this carrier.
    pub sample_seed: u64,
    pub attempts: usize,
}

impl HighGirthSample {
    pub fn meets_target(&self) -> bool {
        self.hypergraph.num_edges() as u64 >= self.target
    }
}

/// Samples `min(2 * ceil(n^(1+1/g)), binomial(n, R))` distinct `R`-subsets of
/// `n` vertices and deletes an edge from every cycle shorter than `g`.
///
/// Retries with a fresh sample while the result has fewer than
/// `ceil(n^(1+1/g))` edges. Every returned carrier, including the best one
/// reported on failure, has verified girth at least `g`.
pub fn random_high_girth(
    n: usize,
    uniformity: usize,
    g: usize,
    seed: u64,
    tries: usize,
) -> Result<HighGirthSample, ProbError> {
    if g < 2 {
        return Err(ProbError::BadParams(format!(
            "girth target must be at least 2, got {g}"
        )));
    }
    if n < uniformity {
        return Err(ProbError::BadParams(format!("need n >= R, got n={n}, R={uniformity}")));
    }
    let target = edge_target(n as u64, g);
    let m = usize::try_from(target.saturating_mul(2)).unwrap_or(usize::MAX);
    let mut master = rng_from(seed);
    let mut best: Option<HighGirthSample> = None;
    for attempt in 1..=tries.max(1) {
        let sample_seed = master.next_u64();
        let carrier = sample_carrier(n, uniformity, m, &mut rng_from(sample_seed))?;
        let sampled_edges = carrier.num_edges();
        let (pruned, deleted_edges) = delete_short_cycles(&carrier, g)?;
        let measured = girth_value(&pruned, g)?;
        if !measured.is_at_least(g) {
            return Err(ProbError::Postcondition(format!("carrier has girth {measured} < {g}")));
        }
        let sample = HighGirthSample {
            hypergraph: pruned,
            sampled_edges,
            deleted_edges,
            target,
            girth: measured,
            sample_seed,
            attempts: attempt,
        };
        if sample.meets_target() {
            return Ok(sample);
        }
        if best
            .as_ref()
            .is_none_or(|b| sample.hypergraph.num_edges() > b.hypergraph.num_edges())
        {
            best = Some(sample);
        }
    }
    let mut best = best.expect("at least one attempt");
    best.attempts = tries.max(1);
    Err(ProbError::TargetNotMet {
        achieved: best.hypergraph.num_edges(),
        target,
        attempts: tries.max(1),
        best: Box::new(best),
    })
}

/// One `r`-subset of every carrier edge, in carrier edge order, as vertex
/// indices of the carrier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QSequence {
    pub subsets: Vec<Vec<u32>>,
}

impl QSequence {
    /// Checks `|E'_i| = r` and `E'_i ⊆ E_i` for every carrier edge.
    pub fn is_valid_for(&self, carrier: &Hypergraph, r: usize) -> bool {
        self.subsets.len() == carrier.num_edges()
            && self
                .subsets
                .iter()
                .zip(carrier.edges())
                .all(|(s, e)| s.len() == r && s.windows(2).all(|w| w[0] < w[1]) && s.iter().all(|&v| e.contains(v)))
    }

    /// The hypergraph whose edges are the chosen subsets, in carrier edge
    /// order. Coinciding subsets collapse to their first occurrence; the
    /// carrier's vertex set is kept.
    pub fn hypergraph(&self, carrier: &Hypergraph) -> Result<Hypergraph, HypergraphError> {
        let mut seen = HashSet::new();
        let edges = self
            .subsets
            .iter()
            .filter(|s| seen.insert(*s))
            .map(|s| s.iter().map(|&v| carrier.label(v)).collect())
            .collect();
        Hypergraph::new(carrier.labels().to_vec(), edges)
    }
}

/// Chooses, independently and uniformly, one `r`-subset of every edge of the
/// `R`-uniform carrier `h`. Returns the sequence and its hypergraph.
pub fn sample_q(h: &Hypergraph, r: usize, seed: u64) -> Result<(QSequence, Hypergraph), ProbError> {
    let big = h
        .uniformity()
        .ok_or_else(|| ProbError::BadParams("carrier is not uniform".into()))?;
    if r < 2 || r > big {
        return Err(ProbError::BadParams(format!("need 2 <= r <= R, got r={r}, R={big}")));
    }
    let mut rng = rng_from(seed);
    let subsets = h
        .edges()
        .iter()
        .map(|e| {
            let mut pick: Vec<u32> = index::sample(&mut rng, big, r)
                .into_iter()
                .map(|i| e.vertices()[i])
                .collect();
            pick.sort_unstable();
            pick
        })
        .collect();
    let q = QSequence { subsets };
    let hq = q.hypergraph(h)?;
    Ok((q, hq))
}

/// Parameters of the randomized search for rm-unavoidable hypergraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProbParams {
    pub n: usize,
    pub r: usize,
    pub g: usize,
    pub seed: u64,
    pub tries: usize,
    pub budget: u64,
    pub carrier_tries: usize,
}

impl ProbParams {
    pub fn new(n: usize, r: usize, g: usize, seed: u64, tries: usize, budget: u64) -> Result<Self, ProbError> {
        let p = ProbParams {
            n,
            r,
            g,
            seed,
            tries,
            budget,
            carrier_tries: DEFAULT_CARRIER_TRIES,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ProbError> {
        if self.r < 3 {
            return Err(ProbError::UniformityTooSmall(self.r));
        }
        if self.g < 2 {
            return Err(ProbError::BadParams(format!(
                "girth target must be at least 2, got {}",
                self.g
            )));
        }
        if self.n < self.carrier_uniformity() {
            return Err(ProbError::BadParams(format!(
                "need n >= R = {}, got n = {}",
                self.carrier_uniformity(),
                self.n
            )));
        }
        if self.tries == 0 || self.budget == 0 {
            return Err(ProbError::BadParams("tries and budget must be positive".into()));
        }
        Ok(())
    }

    /// `R = (r-1)^2 + 1`.
    pub fn carrier_uniformity(&self) -> usize {
        (self.r - 1) * (self.r - 1) + 1
    }

    /// `a = binomial(R, r)`, the number of `r`-subsets of a carrier edge.
    pub fn choices(&self) -> u128 {
        binomial(self.carrier_uniformity() as u64, self.r as u64).expect("fits for validated r")
    }
}

/// The point past which `n ln n + ln(a-1) < n^(1+1/g) ln(a/(a-1))` holds for
/// every `n`, with both sides at `n` and at `n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Threshold {
    pub r: usize,
    pub g: usize,
    pub a: u128,
    pub n: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub lhs_before: f64,
    pub rhs_before: f64,
    /// `(rhs - lhs) / n` at the threshold.
    pub margin_per_vertex: f64,
    /// False when the margins at `n` or `n - 1` are within rounding error of
    /// zero, so that `n` may be off by a few units.
    pub certain: bool,
}

/// Both sides of the counting inequality at `n`.
pub fn counting_sides(a: u128, g: usize, n: u64) -> (f64, f64) {
    let x = n as f64;
    let lhs = x * x.ln() + ((a - 1) as f64).ln();
    let rhs = x.powf(1.0 + 1.0 / g as f64) * (1.0 / (a - 1) as f64).ln_1p();
    (lhs, rhs)
}

/// `(rhs - lhs) / n`, evaluated without forming the large sides, so its sign
/// stays reliable where the sides themselves exceed `f64` resolution.
pub fn counting_margin_per_vertex(a: u128, g: usize, n: u64) -> f64 {
    let x = n as f64;
    let ell = (1.0 / (a - 1) as f64).ln_1p();
    x.powf(1.0 / g as f64) * ell - x.ln() - ((a - 1) as f64).ln() / x
}

/// Smallest `n` such that the counting inequality holds at every `m >= n`.
///
/// With `L = ln(a/(a-1))` the difference `rhs - lhs` equals
/// `n (n^(1/g) L - ln n) - ln(a-1)`, whose bracket decreases up to
/// `n = (g/L)^g` and increases after it. The search finds the first success
/// at or beyond that turning point by galloping and bisection, then walks
/// down while the inequality still holds.
pub fn counting_threshold(r: usize, g: usize) -> Result<Threshold, ProbError> {
    if r < 3 {
        return Err(ProbError::UniformityTooSmall(r));
    }
    if g < 2 {
        return Err(ProbError::BadParams(format!(
            "girth target must be at least 2, got {g}"
        )));
    }
    let big = ((r - 1) * (r - 1) + 1) as u64;
    let a = binomial(big, r as u64).ok_or_else(|| ProbError::BadParams(format!("binomial({big}, {r}) overflows")))?;
    let holds = |n: u64| counting_margin_per_vertex(a, g, n) > 0.0;
    let ell = (1.0 / (a - 1) as f64).ln_1p();
    let turn = (g as f64 / ell).powi(g as i32);
    if !turn.is_finite() || turn > 1e15 {
        return Err(ProbError::BadParams(format!(
            "threshold for r={r}, g={g} is beyond u64 search range"
        )));
    }
    let mut lo = (turn.floor() as u64).max(2);
    let mut hi;
    if holds(lo) {
        hi = lo;
    } else {
        let mut step = 1u64;
        loop {
            hi = lo + step;
            if holds(hi) {
                break;
            }
            lo = hi;
            step *= 2;
        }
        // holds(hi), !holds(lo)
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if holds(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    let mut n = hi;
    while n > 2 && holds(n - 1) {
        n -= 1;
    }
    let (lhs, rhs) = counting_sides(a, g, n);
    let (lhs_before, rhs_before) = counting_sides(a, g, n - 1);
    Ok(Threshold {
        r,
        g,
        a,
        n,
        lhs,
        rhs,
        lhs_before,
        rhs_before,
        margin_per_vertex: counting_margin_per_vertex(a, g, n),
        certain: {
            let x = n as f64;
            let tol = 64.0 * f64::EPSILON * (x.powf(1.0 / g as f64) * ell + x.ln());
            counting_margin_per_vertex(a, g, n) > tol && counting_margin_per_vertex(a, g, n - 1) < -tol
        },
    })
}

/// One candidate examined by [`random_search_rm`].
#[derive(Debug, Clone)]
pub struct RmInstance {
    pub try_index: usize,
    pub try_seed: u64,
    pub carrier: Hypergraph,
    pub q: QSequence,
    pub hypergraph: Hypergraph,
    pub girth: Girth,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct RmSearchReport {
    pub params: ProbParams,
    pub found: bool,
    pub tries_run: usize,
    /// The first rm-unavoidable instance, or else the candidate whose search
    /// explored the most nodes before a good coloring turned up.
    pub best: Option<RmInstance>,
}

/// Samples carriers and `r`-subset selections until the solver certifies an
/// rm-unavoidable hypergraph or the tries run out.
///
/// Tries run sequentially with seeds drawn from a stream seeded by
/// `params.seed`, so a report is reproducible from its params.
pub fn random_search_rm(params: &ProbParams) -> Result<RmSearchReport, ProbError> {
    params.validate()?;
    let big = params.carrier_uniformity();
    let mut master = rng_from(params.seed);
    let mut best: Option<RmInstance> = None;
    for try_index in 0..params.tries {
        let try_seed = master.next_u64();
        let mut stream = rng_from(try_seed);
        let carrier = match random_high_girth(params.n, big, params.g, stream.next_u64(), params.carrier_tries) {
            Ok(s) => s.hypergraph,
            Err(ProbError::TargetNotMet { best, .. }) => best.hypergraph,
            Err(e) => return Err(e),
        };
        let (q, hq) = sample_q(&carrier, params.r, stream.next_u64())?;
        let measured = girth_value(&hq, params.g.max(2))?;
        let verdict = find_good_coloring(&hq, params.budget);
        let instance = RmInstance {
            try_index,
            try_seed,
            carrier,
            q,
            hypergraph: hq,
            girth: measured,
            verdict,
        };
        if instance.verdict.holds() {
            if !measured.is_at_least(params.g) {
                return Err(ProbError::Postcondition(format!(
                    "selected hypergraph has girth {measured}"
                )));
            }
            if !verify_rm_unavoidable(&instance.hypergraph, params.budget).holds() {
                return Err(ProbError::Postcondition("rm-unavoidability did not re-verify".into()));
            }
            return Ok(RmSearchReport {
                params: *params,
                found: true,
                tries_run: try_index + 1,
                best: Some(instance),
            });
        }
        if best
            .as_ref()
            .is_none_or(|b| instance.verdict.nodes() > b.verdict.nodes())
        {
            best = Some(instance);
        }
    }
    Ok(RmSearchReport {
        params: *params,
        found: false,
        tries_run: params.tries,
        best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_targets() {
        assert_eq!(edge_target(12, 3), 28);
        assert_eq!(edge_target(8, 3), 16);
        assert_eq!(edge_target(4, 2), 8);
        assert_eq!(edge_target(5, 2), 12);
    }

    #[test]
    fn carriers_are_distinct_subsets() {
        let mut rng = rng_from(3);
        let h = sample_carrier(12, 5, 56, &mut rng).unwrap();
        assert_eq!(h.num_edges(), 56);
        assert!(h.edges().iter().all(|e| e.len() == 5));
        let all = sample_carrier(6, 5, 100, &mut rng).unwrap();
        assert_eq!(all.num_edges(), 6);
    }

    #[test]
    fn two_cycle_is_broken() {
        let h = Hypergraph::new((1..=7).collect(), vec![vec![1, 2, 3, 4, 5], vec![1, 2, 3, 6, 7]]).unwrap();
        let (pruned, deleted) = delete_short_cycles(&h, 3).unwrap();
        assert_eq!((pruned.num_edges(), deleted), (1, 1));
        assert_eq!(bad_cycle_count(&h, 3).unwrap(), 3);
    }

    #[test]
    fn high_girth_is_deterministic() {
        let a = random_high_girth(12, 5, 3, 9, 2);
        let b = random_high_girth(12, 5, 3, 9, 2);
        let (a, b) = match (a, b) {
            (Err(ProbError::TargetNotMet { best: a, .. }), Err(ProbError::TargetNotMet { best: b, .. })) => (a, b),
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(a.hypergraph, b.hypergraph);
        assert!(a.girth.is_at_least(3));
        assert_eq!(a.target, 28);
    }

    #[test]
    fn q_identity_when_r_equals_carrier() {
        let h = Hypergraph::complete(6, crate::hypergraph::Uniformity::new(3).unwrap());
        let (q, hq) = sample_q(&h, 3, 1).unwrap();
        assert!(q.is_valid_for(&h, 3));
        assert_eq!(hq, h);
    }

    #[test]
    fn thresholds() {
        let t3 = counting_threshold(3, 3).unwrap();
        assert_eq!(t3.a, 10);
        assert!(t3.lhs < t3.rhs && t3.lhs_before >= t3.rhs_before);
        assert!(t3.certain);
        let t2 = counting_threshold(3, 2).unwrap();
        assert!(t2.n < t3.n);
        assert!(matches!(
            counting_threshold(2, 3),
            Err(ProbError::UniformityTooSmall(2))
        ));
    }

    #[test]
    fn params_reject_r2() {
        assert!(matches!(
            ProbParams::new(10, 2, 3, 0, 1, 10),
            Err(ProbError::UniformityTooSmall(2))
        ));
        assert!(ProbParams::new(4, 3, 3, 0, 1, 10).is_err());
        assert_eq!(ProbParams::new(5, 3, 2, 0, 1, 10).unwrap().choices(), 10);
    }
}
