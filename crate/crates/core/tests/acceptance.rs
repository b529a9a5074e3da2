//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::ops::ControlFlow;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rmhg::coloring::{enumerate_partitions, is_good};
use rmhg::construct::{amalgamate, build_h, build_pr, pr_base, ConstructionParams};
use rmhg::girth::{count_cycles, cycle_count_bound_check, girth_value};
use rmhg::probabilistic::{counting_threshold, random_high_girth, ProbError};
use rmhg::solver::{
    find_good_coloring, find_part_rainbow_bad, verify_part_rainbow_forced, verify_rm_unavoidable, DEFAULT_BUDGET,
};
use rmhg::{Coloring, Girth, Hypergraph, Uniformity};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, format!("took {t:.2?}, limit {limit:?}"))
}

fn complete(n: usize, r: usize) -> Hypergraph {
    Hypergraph::complete(n, Uniformity::new(r).unwrap())
}

fn base_case_h32() -> Outcome {
    let start = Instant::now();
    let built = build_h(3, 2, &ConstructionParams::default()).map_err(|e| e.to_string())?;
    let h = built.hypergraph;
    ensure(
        h == complete(5, 3),
        "H(3,2) is not the complete 3-uniform hypergraph on 5 vertices",
    )?;
    let v = find_good_coloring(&h, DEFAULT_BUDGET);
    ensure(v.holds(), format!("solver returned {v}"))?;
    let mut good = 0;
    let visited = enumerate_partitions(5, |a| {
        if is_good(&h, &Coloring::from_classes(a)).unwrap() {
            good += 1;
        }
        ControlFlow::Continue(())
    })
    .map_err(|e| e.to_string())?;
    ensure(visited == 52 && good == 0, format!("{visited} partitions, {good} good"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!(
        "K_5^(3), property holds after {} nodes; 52/52 partitions bad",
        v.nodes()
    ))
}

fn pigeonhole_sharpness() -> Outcome {
    let start = Instant::now();
    let h = complete(4, 3);
    let v = find_good_coloring(&h, DEFAULT_BUDGET);
    let c = v.witness().ok_or_else(|| format!("expected a witness, got {v}"))?;
    let mut sizes = c.class_sizes();
    sizes.sort_unstable();
    ensure(sizes == vec![2, 2], format!("class sizes {sizes:?}"))?;
    ensure(is_good(&h, c).unwrap(), "witness does not re-verify")?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("K_4^(3) witness {:?}", c.classes()))
}

fn pr2_base() -> Outcome {
    let start = Instant::now();
    let p = pr_base();
    let v = verify_part_rainbow_forced(&p, DEFAULT_BUDGET);
    ensure(v.holds(), format!("solver returned {v}"))?;
    ensure(
        !common::has_part_rainbow_bad(&p),
        "exhaustive check found a bad part-rainbow coloring",
    )?;
    let g = girth_value(p.base(), 8).map_err(|e| e.to_string())?;
    ensure(g == Girth::Infinite, format!("girth {g}"))?;
    within(start, Duration::from_secs(1))?;
    Ok("PR(2,g) forced; girth infinite".into())
}

fn pr33() -> Outcome {
    let start = Instant::now();
    let (p, _) = build_pr(3, 3, &ConstructionParams::default()).map_err(|e| e.to_string())?;
    let h = p.base();
    ensure(
        h.num_vertices() == 70 && h.num_edges() == 42,
        format!("{} vertices, {} edges", h.num_vertices(), h.num_edges()),
    )?;
    ensure(
        h.uniformity() == Some(3) && p.num_parts() == 3,
        "not 3-uniform 3-partite",
    )?;
    let g = girth_value(h, 3).map_err(|e| e.to_string())?;
    ensure(g.is_at_least(3), format!("girth {g}"))?;
    let v = find_part_rainbow_bad(&p, 100_000_000);
    ensure(v.holds(), format!("solver returned {v}"))?;
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "70 vertices, 42 edges, parts {:?}, girth {g}, {} nodes",
        p.part_sizes(),
        v.nodes()
    ))
}

fn girth_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..1000 {
        let n = rng.gen_range(2..=8);
        let h = common::random_hypergraph(&mut rng, n, 6, 2..=4);
        let expected = common::brute_force_girth(&h);
        let got = girth_value(&h, 8).map_err(|e| e.to_string())?;
        let got = match got {
            Girth::Finite(k) => Some(k),
            Girth::Infinite => None,
            Girth::AtLeast(k) => return Err(format!("instance {i}: inconclusive >= {k}")),
        };
        ensure(
            got == expected,
            format!("instance {i}: {got:?} vs oracle {expected:?} on {h:?}"),
        )?;
    }
    within(start, Duration::from_secs(30))?;
    Ok("1000/1000 agree".into())
}

fn solver_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut holds = 0;
    for i in 0..500 {
        let n = rng.gen_range(2..=8);
        let sizes = if i % 2 == 0 { 2..=4 } else { 3..=4 };
        let h = common::random_hypergraph(&mut rng, n, 10, sizes);
        let v = find_good_coloring(&h, DEFAULT_BUDGET);
        let expected = common::has_good_coloring(&h);
        ensure(
            !matches!(v, rmhg::Verdict::BudgetExceeded { .. }),
            format!("instance {i}: budget exceeded"),
        )?;
        ensure(
            v.is_witness() == expected,
            format!("instance {i}: {v} vs oracle {expected} on {h:?}"),
        )?;
        if let Some(c) = v.witness() {
            ensure(is_good(&h, c).unwrap(), format!("instance {i}: witness is not good"))?;
        }
        holds += usize::from(v.holds());
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("500/500 agree ({holds} rm-unavoidable)"))
}

fn amalgamation_identities() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..200 {
        let r = rng.gen_range(2..=3);
        let part = rng.gen_range(0..r);
        let mut sizes: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=3)).collect();
        sizes[part] = rng.gen_range(2..=3);
        let h = common::random_partite(&mut rng, &sizes, 5);
        let k = sizes[part];
        let nf = rng.gen_range(k..=k + 3);
        let f = common::random_uniform(&mut rng, nf, k, 4);
        let a = amalgamate(&h, part, &f).map_err(|e| format!("instance {i}: {e}"))?;
        let result = a.result.base();
        ensure(
            result.num_edges() == f.num_edges() * h.base().num_edges(),
            format!("instance {i}: {} edges", result.num_edges()),
        )?;
        let cap = result.num_edges().max(2);
        let gh = girth_value(h.base(), cap.max(h.base().num_edges()).max(2)).unwrap();
        let gf = girth_value(&f, f.num_edges().max(2)).unwrap();
        let ga = girth_value(result, cap).unwrap();
        ensure(
            ga.lower_bound() >= gh.lower_bound().min(gf.lower_bound()),
            format!("instance {i}: girth {ga} < min({gh}, {gf})"),
        )?;
    }
    within(start, Duration::from_secs(60))?;
    Ok("200 pairs: edge product and girth bound hold".into())
}

fn cycle_count_bound() -> Outcome {
    let start = Instant::now();
    let mut lines = Vec::new();
    for (r, ell, n) in [(2, 3, 5), (2, 3, 6), (3, 2, 4), (3, 2, 5)] {
        let rep = cycle_count_bound_check(Uniformity::new(r).unwrap(), ell, n).map_err(|e| e.to_string())?;
        let bound = rep.per_set as u128 * rep.sets;
        ensure(
            rep.holds && (rep.count as u128) <= bound,
            format!("({r},{ell},{n}): {} > {bound}", rep.count),
        )?;
        lines.push(format!("({r},{ell},{n}) {}<={}", rep.count, bound));
    }
    let k53 = complete(5, 3);
    let oracle = common::brute_force_cycle_count(&k53, 2);
    let engine = count_cycles(&k53, 2).map_err(|e| e.to_string())?;
    ensure(
        oracle == 30 && engine == 30,
        format!("K_5^(3) 2-cycles: engine {engine}, oracle {oracle}"),
    )?;
    within(start, Duration::from_secs(30))?;
    Ok(lines.join(", "))
}

fn high_girth_procedure() -> Outcome {
    let start = Instant::now();
    let mut met = 0;
    let mut total_edges = 0;
    for seed in 0..200 {
        let sample = match random_high_girth(12, 5, 3, seed, 1) {
            Ok(s) => s,
            Err(ProbError::TargetNotMet { best, .. }) => *best,
            Err(e) => return Err(format!("seed {seed}: {e}")),
        };
        let g = girth_value(&sample.hypergraph, 3).unwrap();
        ensure(g.is_at_least(3), format!("seed {seed}: girth {g}"))?;
        ensure(sample.target == 28, format!("target {}", sample.target))?;
        met += usize::from(sample.meets_target());
        total_edges += sample.hypergraph.num_edges();
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "girth >= 3 in 200/200; target 28 met in {met}/200 (mean {:.2} edges)",
        total_edges as f64 / 200.0
    ))
}

fn counting_bound() -> Outcome {
    let start = Instant::now();
    let t = counting_threshold(3, 3).map_err(|e| e.to_string())?;
    let (a, g) = (t.a as f64, 3.0);
    let holds = |n: u64| common::counting_inequality_holds(a, g, n as f64);
    ensure(
        t.n == 2_796_451 && t.certain,
        format!("threshold {} (certain: {})", t.n, t.certain),
    )?;
    ensure(!holds(t.n - 1), "inequality holds at n*-1")?;
    ensure(holds(t.n) && holds(2 * t.n), "inequality fails at n* or 2n*")?;
    let step = (t.n / 1000).max(1);
    ensure(
        (t.n..=2 * t.n).step_by(step as usize).all(holds),
        "inequality fails inside [n*, 2n*]",
    )?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("n* = {} (lhs {:.3}, rhs {:.3})", t.n, t.lhs, t.rhs))
}

fn graphs_are_unavoidable() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..100 {
        let n = rng.gen_range(2..=10);
        let mut h = common::random_uniform(&mut rng, n, 2, 15);
        if h.num_edges() == 0 {
            h = Hypergraph::from_indices(n, vec![vec![0, 1]]).unwrap();
        }
        let v = verify_rm_unavoidable(&h, DEFAULT_BUDGET);
        ensure(v.holds(), format!("graph {i}: {v}"))?;
    }
    within(start, Duration::from_secs(5))?;
    Ok("100/100 graphs rm-unavoidable".into())
}

fn h23_end_to_end() -> Outcome {
    let start = Instant::now();
    let built = build_h(2, 3, &ConstructionParams::default()).map_err(|e| format!("build_h(2,3): {e}"))?;
    let h = &built.hypergraph;
    let g = girth_value(h, 3).map_err(|e| e.to_string())?;
    ensure(g.is_at_least(3), format!("girth {g}"))?;
    let v = verify_rm_unavoidable(h, DEFAULT_BUDGET);
    ensure(v.holds(), format!("solver returned {v}"))?;
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{} vertices, {} edges, girth {g}",
        h.num_vertices(),
        h.num_edges()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("H(3,2) base case is rm-unavoidable", base_case_h32),
        ("K_4^(3) has a (2,2) good coloring", pigeonhole_sharpness),
        ("PR(2,g) is part-rainbow-forced and acyclic", pr2_base),
        ("PR(3,3) shape, girth and forcing", pr33),
        ("girth engine matches brute force", girth_oracle),
        ("coloring solver matches exhaustive search", solver_oracle),
        ("amalgamation edge count and girth", amalgamation_identities),
        ("cycle counts within per-set bound", cycle_count_bound),
        ("random high-girth carriers", high_girth_procedure),
        ("counting threshold", counting_bound),
        ("graphs are rm-unavoidable", graphs_are_unavoidable),
        ("H(2,3) end to end", h23_end_to_end),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} [{t:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} [{t:.2?}]: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
