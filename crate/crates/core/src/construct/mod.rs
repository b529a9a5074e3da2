//! Explicit constructions: tilde extension, amalgamation, complete partite
//! factors, the part-rainbow-forced family `PR(r, g)` and the rm-unavoidable
//! family `H(r, g)`.
//!
//! Part indices are 0-based throughout the API. Builders estimate the size of
//! their output before materializing anything and refuse with
//! [`ConstructError::SizeLimit`] when the estimate exceeds [`Limits`].

mod estimate;
mod ops;
mod supplier;
mod trace;

pub use estimate::{estimate_pr, estimate_size, factor_part_sizes, supplier_size, Count, SizeEstimate};
pub use ops::{amalgamate, complete_partite_factor, factor_covers_all_subsets, tilde, Amalgamation};
pub use supplier::supply_min_degree_girth;
pub use trace::{StepKind, TraceStep};

use serde::Serialize;
use thiserror::Error;

use crate::girth::{girth_value, GirthError};
use crate::hypergraph::{Hypergraph, HypergraphError, PartiteHypergraph, Uniformity};
use crate::util::binomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub max_vertices: u64,
    pub max_edges: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 1_000_000,
            max_edges: 1_000_000,
        }
    }
}

impl Limits {
    fn admits(&self, vertices: Count, edges: Count) -> bool {
        vertices.at_most(self.max_vertices) && edges.at_most(self.max_edges)
    }
}

/// How the high-girth, high-minimum-degree hypergraphs `F'` are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SupplierStrategy {
    /// Complete graphs / complete hypergraphs where they qualify, random
    /// generation with peeling otherwise.
    #[default]
    Auto,
    /// Always use random generation with peeling.
    RandomOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    pub seed: u64,
    pub limits: Limits,
    pub supplier: SupplierStrategy,
    /// Random samples tried by the supplier before giving up.
    pub supplier_attempts: usize,
}

impl Default for ConstructionParams {
    fn default() -> Self {
        ConstructionParams {
            seed: 0,
            limits: Limits::default(),
            supplier: SupplierStrategy::Auto,
            supplier_attempts: 12,
        }
    }
}

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("parameters must satisfy r >= 2 and g >= 2, got r={r}, g={g}")]
    BadParams { r: usize, g: usize },
    #[error("{what} would need {estimate}, beyond the limits of {} vertices / {} edges", limits.max_vertices, limits.max_edges)]
    SizeLimit {
        what: String,
        estimate: Box<SizeEstimate>,
        limits: Limits,
    },
    #[error("amalgamation along part {part} needs a {expected}-uniform hypergraph")]
    UniformityMismatch { part: usize, expected: usize },
    #[error("part index {part} out of range for {parts} parts")]
    NoSuchPart { part: usize, parts: usize },
    #[error("a complete {a}-partite factor of an {r}-partite hypergraph needs a >= r")]
    FactorTooSmall { a: usize, r: usize },
    #[error("expected an r-uniform r-partite hypergraph: {0}")]
    NotUniformPartite(String),
    #[error("no {ell}-uniform hypergraph of girth >= {g} and minimum degree >= {q} found after {attempts} attempts")]
    SupplierFailed {
        ell: usize,
        g: usize,
        q: usize,
        attempts: usize,
    },
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Girth(#[from] GirthError),
}

fn check_params(r: usize, g: usize) -> Result<Uniformity, ConstructError> {
    if g < 2 {
        return Err(ConstructError::BadParams { r, g });
    }
    Uniformity::new(r).map_err(|_| ConstructError::BadParams { r, g })
}

fn check_girth(h: &Hypergraph, g: usize, what: &str) -> Result<(), ConstructError> {
    let measured = girth_value(h, g.max(2))?;
    if !measured.is_at_least(g) {
        return Err(ConstructError::Postcondition(format!(
            "{what} has girth {measured} < {g}"
        )));
    }
    Ok(())
}

fn check_uniform(h: &Hypergraph, r: usize, what: &str) -> Result<(), ConstructError> {
    if h.edges().iter().any(|e| e.len() != r) {
        return Err(ConstructError::Postcondition(format!("{what} is not {r}-uniform")));
    }
    Ok(())
}

/// The path `x – y – z` with parts `{x, z}` and `{y}`.
pub fn pr_base() -> PartiteHypergraph {
    let path = Hypergraph::from_indices(3, vec![vec![0, 1], vec![1, 2]]).expect("path is valid");
    PartiteHypergraph::from_indices(path, vec![vec![0, 2], vec![1]]).expect("path is bipartite")
}

/// Builds `PR(r, g)`: an `r`-uniform `r`-partite part-rainbow-forced
/// hypergraph of girth at least `g`.
///
/// Girth is re-verified on the output; part-rainbow-forcing is left to
/// [`crate::solver::verify_part_rainbow_forced`].
pub fn build_pr(
    r: usize,
    g: usize,
    params: &ConstructionParams,
) -> Result<(PartiteHypergraph, TraceStep), ConstructError> {
    check_params(r, g)?;
    let estimate = estimate_pr(r, g, params.supplier);
    if !params.limits.admits(estimate.vertices, estimate.edges) {
        return Err(ConstructError::SizeLimit {
            what: format!("PR({r},{g})"),
            estimate: Box::new(estimate),
            limits: params.limits,
        });
    }
    let mut current = pr_base();
    let mut trace = TraceStep::of(StepKind::PrBase, "PR(2,g)".into(), &current);
    for k in 2..r {
        let ell = current.base().num_edges();
        let q = ell * (k + 1);
        let f = supply_min_degree_girth(ell, g, q, params)?;
        let supply_step = TraceStep::plain(StepKind::Supplier, format!("F'(l={ell}, g={g}, q={q})"), &f);
        let extended = tilde(&current)?;
        let tilde_step =
            TraceStep::of(StepKind::Tilde, format!("tilde PR({k},{g})"), &extended).with_children(vec![trace]);
        let amal = amalgamate(&extended, k, &f)?;
        current = amal.result;
        trace = TraceStep::of(StepKind::Amalgamate, format!("PR({},{g})", k + 1), &current)
            .with_amalgamation(k, f.num_edges())
            .with_children(vec![tilde_step, supply_step]);
    }
    check_uniform(current.base(), r, "PR")?;
    if current.num_parts() != r {
        return Err(ConstructError::Postcondition(format!(
            "PR has {} parts",
            current.num_parts()
        )));
    }
    check_girth(current.base(), g, "PR")?;
    Ok((current, trace))
}

/// Result of [`build_h`].
#[derive(Debug, Clone)]
pub struct BuiltH {
    pub hypergraph: Hypergraph,
    /// The `a`-partite structure of the last amalgamation; `None` for `g = 2`.
    pub partite: Option<PartiteHypergraph>,
    pub trace: TraceStep,
}

/// Builds `H(r, g)`: an `r`-uniform rm-unavoidable hypergraph of girth at
/// least `g`.
///
/// The base `g = 2` is the complete `r`-uniform hypergraph on `(r-1)^2 + 1`
/// vertices. For larger `g`, a complete `a`-partite `PR(r, g)`-factor with
/// `a = (r-1)^2 + r` is amalgamated along each part `j` in turn with
/// `H(|M_j|_j, g - 1)`.
pub fn build_h(r: usize, g: usize, params: &ConstructionParams) -> Result<BuiltH, ConstructError> {
    let uniformity = check_params(r, g)?;
    let estimate = estimate_size(r, g, params.supplier);
    if !params.limits.admits(estimate.vertices, estimate.edges) {
        return Err(ConstructError::SizeLimit {
            what: format!("H({r},{g})"),
            estimate: Box::new(estimate),
            limits: params.limits,
        });
    }
    if g == 2 {
        let n = (r - 1) * (r - 1) + 1;
        let h = Hypergraph::complete(n, uniformity);
        let trace = TraceStep::plain(StepKind::HBase, format!("H({r},2)"), &h);
        return Ok(BuiltH {
            hypergraph: h,
            partite: None,
            trace,
        });
    }
    let (f, f_trace) = build_pr(r, g, params)?;
    let a = (r - 1) * (r - 1) + r;
    let mut current = complete_partite_factor(&f, a)?;
    let mut trace = TraceStep::of(
        StepKind::Factor,
        format!("M_1 ({a}-partite PR({r},{g})-factor)"),
        &current,
    )
    .with_copies(binomial(a as u64, r as u64).map_or(u64::MAX, |c| c as u64))
    .with_children(vec![f_trace]);
    for j in 0..a {
        let k = current.part(j).len();
        let sub = build_h(k, g - 1, params)?;
        let amal = amalgamate(&current, j, &sub.hypergraph)?;
        current = amal.result;
        trace = TraceStep::of(StepKind::Amalgamate, format!("M_{}", j + 2), &current)
            .with_amalgamation(j, sub.hypergraph.num_edges())
            .with_children(vec![trace, sub.trace]);
    }
    let hypergraph = current.base().clone();
    check_uniform(&hypergraph, r, "H")?;
    check_girth(&hypergraph, g, "H")?;
    let trace = TraceStep::of(StepKind::H, format!("H({r},{g})"), &current).with_children(vec![trace]);
    Ok(BuiltH {
        hypergraph,
        partite: Some(current),
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::girth::Girth;
    use crate::solver::{verify_part_rainbow_forced, verify_rm_unavoidable, DEFAULT_BUDGET};

    #[test]
    fn pr_base_case() {
        for g in [2, 3, 5, 9] {
            let (p, trace) = build_pr(2, g, &ConstructionParams::default()).unwrap();
            assert_eq!(p, pr_base());
            assert_eq!(trace.vertices, 3);
        }
    }

    #[test]
    fn pr_3_3_has_expected_shape() {
        let (p, trace) = build_pr(3, 3, &ConstructionParams::default()).unwrap();
        assert_eq!(p.base().num_vertices(), 70);
        assert_eq!(p.base().num_edges(), 42);
        assert_eq!(p.part_sizes(), vec![42, 21, 7]);
        assert!(girth_value(p.base(), 3).unwrap().is_at_least(3));
        assert_eq!(trace.part_sizes, vec![42, 21, 7]);
        let est = estimate_pr(3, 3, SupplierStrategy::Auto);
        assert_eq!((est.vertices, est.edges), (Count::Exact(70), Count::Exact(42)));
        assert!(est.exact);
    }

    #[test]
    fn pr_3_3_is_part_rainbow_forced() {
        let (p, _) = build_pr(3, 3, &ConstructionParams::default()).unwrap();
        assert!(verify_part_rainbow_forced(&p, DEFAULT_BUDGET).holds());
    }

    #[test]
    fn pr_4_3_is_refused() {
        match build_pr(4, 3, &ConstructionParams::default()) {
            Err(ConstructError::SizeLimit { estimate, .. }) => {
                assert!(!estimate.vertices.at_most(1_000_000));
                assert!(!estimate.exact);
            }
            other => panic!("expected a size-limit error, got {other:?}"),
        }
    }

    #[test]
    fn h_base_cases() {
        let params = ConstructionParams::default();
        let h32 = build_h(3, 2, &params).unwrap().hypergraph;
        assert_eq!((h32.num_vertices(), h32.num_edges()), (5, 10));
        let h22 = build_h(2, 2, &params).unwrap().hypergraph;
        assert_eq!((h22.num_vertices(), h22.num_edges()), (2, 1));
        let h42 = build_h(4, 2, &params).unwrap().hypergraph;
        assert_eq!((h42.num_vertices(), h42.num_edges()), (10, 210));
        for h in [&h22, &h32, &h42] {
            assert!(verify_rm_unavoidable(h, DEFAULT_BUDGET).holds());
        }
        assert_eq!(girth_value(&h32, 2).unwrap(), Girth::Finite(2));
    }

    #[test]
    fn h_2_3_is_astronomical() {
        let err = build_h(2, 3, &ConstructionParams::default()).unwrap_err();
        match err {
            ConstructError::SizeLimit { estimate, .. } => assert_eq!(estimate.edges, Count::Astronomical),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(
            build_pr(1, 3, &ConstructionParams::default()),
            Err(ConstructError::BadParams { .. })
        ));
        assert!(matches!(
            build_h(3, 1, &ConstructionParams::default()),
            Err(ConstructError::BadParams { .. })
        ));
    }
}
