//! The `rmhg` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 witness found or success, 1 property holds, 2 budget
//! exceeded, 3 error.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::construct::{self, ConstructionParams, Limits, SupplierStrategy};
use crate::girth::{self, cycle_census, cycle_count_bound_check};
use crate::hypergraph::{Hypergraph, Uniformity};
use crate::io::{self, Document};
use crate::probabilistic::{self, ProbError, ProbParams};
use crate::solver::{self, Verdict};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "RMHG_OUT_DIR";

pub const EXIT_SUCCESS: u8 = 0;
pub const EXIT_PROPERTY_HOLDS: u8 = 1;
pub const EXIT_BUDGET: u8 = 2;
pub const EXIT_ERROR: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "rmhg",
    version,
    about = "Hypergraphs with unavoidable monochromatic or rainbow edges"
)]
pub struct RunConfig {
    /// Write the result here instead of stdout (or the default output directory).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print progress notes to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Berge girth of a hypergraph, with a shortest cycle.
    Girth {
        file: PathBuf,
        /// Longest cycle length searched for.
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Search for colorings.
    #[command(subcommand)]
    Solve(SolveCommand),
    /// Explicit constructions.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Random constructions.
    #[command(subcommand)]
    Random(RandomCommand),
    /// Smallest n satisfying the counting inequality for all larger n.
    Bound {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        g: usize,
    },
    /// Exact Berge cycle counts.
    #[command(subcommand)]
    Cycles(CyclesCommand),
    /// Re-emit a hypergraph file as canonical JSON or as a DOT incidence graph.
    Convert {
        file: PathBuf,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum SolveCommand {
    /// Look for a coloring with no monochromatic and no rainbow edge.
    Good {
        file: PathBuf,
        #[arg(long, default_value_t = solver::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Look for a part-rainbow coloring with no rainbow edge.
    PartRainbow {
        file: PathBuf,
        #[arg(long, default_value_t = solver::DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Debug, Args, Clone, Copy)]
pub struct BuildOptions {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = Limits::default().max_vertices)]
    pub max_vertices: u64,
    #[arg(long, default_value_t = Limits::default().max_edges)]
    pub max_edges: u64,
    /// Always generate the high-girth ingredients randomly.
    #[arg(long)]
    pub random_supplier: bool,
    /// Random samples per ingredient before giving up.
    #[arg(long, default_value_t = ConstructionParams::default().supplier_attempts)]
    pub supplier_attempts: usize,
}

impl BuildOptions {
    fn params(&self) -> ConstructionParams {
        ConstructionParams {
            seed: self.seed,
            limits: Limits {
                max_vertices: self.max_vertices,
                max_edges: self.max_edges,
            },
            supplier: if self.random_supplier {
                SupplierStrategy::RandomOnly
            } else {
                SupplierStrategy::Auto
            },
            supplier_attempts: self.supplier_attempts,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum ConstructCommand {
    /// r-uniform r-partite part-rainbow-forced hypergraph of girth >= g.
    Pr {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        g: usize,
        #[command(flatten)]
        options: BuildOptions,
    },
    /// r-uniform rm-unavoidable hypergraph of girth >= g.
    H {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        g: usize,
        #[command(flatten)]
        options: BuildOptions,
    },
    /// Complete a-partite factor of a partite hypergraph file.
    Factor {
        file: PathBuf,
        #[arg(long)]
        a: usize,
    },
    /// Predicted sizes of PR(r, g) and H(r, g) without building them.
    Estimate {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        random_supplier: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum RandomCommand {
    /// R-uniform hypergraph of girth >= g with many edges.
    Carrier {
        #[arg(long)]
        n: usize,
        #[arg(long = "R", alias = "big-r")]
        big_r: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = probabilistic::DEFAULT_CARRIER_TRIES)]
        tries: usize,
    },
    /// Random search for an r-uniform rm-unavoidable hypergraph of girth >= g.
    Search {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        g: usize,
        /// Number of vertices; defaults to (r-1)^2 + 3.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 20)]
        tries: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CyclesCommand {
    /// Number of Berge cycles of one length in a hypergraph file.
    Count {
        file: PathBuf,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = girth::DEFAULT_COUNT_BUDGET)]
        budget: u64,
    },
    /// Compare the cycle count of a complete hypergraph with its per-set bound.
    Bound {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Errors are reported on stderr.
pub fn run_from<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_SUCCESS };
        }
    };
    match run(&config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    }
}

/// Output of one command before it is written.
struct Output {
    text: String,
    default_name: String,
    code: u8,
}

impl Output {
    fn json(value: &Value, default_name: String, code: u8) -> Self {
        Output {
            text: io::canonical_string(value),
            default_name,
            code,
        }
    }
}

pub fn run(config: &RunConfig) -> Result<u8> {
    let output = dispatch(&config.command, config.verbose)?;
    emit(config.out.as_deref(), &output)?;
    Ok(output.code)
}

fn emit(out: Option<&Path>, output: &Output) -> Result<()> {
    let target = out
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(|d| PathBuf::from(d).join(&output.default_name)));
    match target {
        Some(path) => io::write_atomic(&path, &output.text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{}", output.text);
            Ok(())
        }
    }
}

fn verdict_code(v: &Verdict) -> u8 {
    match v {
        Verdict::WitnessFound { .. } => EXIT_SUCCESS,
        Verdict::PropertyHolds { .. } => EXIT_PROPERTY_HOLDS,
        Verdict::BudgetExceeded { .. } => EXIT_BUDGET,
    }
}

fn verdict_value(h: &Hypergraph, v: &Verdict) -> Value {
    let mut out = json!({ "verdict": v.kind(), "nodes": v.nodes() });
    if let Some(c) = v.witness() {
        out["coloring"] = io::coloring_value(h, c);
    }
    out
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "out".into(), |s| s.to_string_lossy().into_owned())
}

fn dispatch(command: &Command, verbose: bool) -> Result<Output> {
    match command {
        Command::Girth { file, cap } => {
            let doc = io::read_document(file)?;
            let (g, witness) = girth::girth(&doc.hypergraph, *cap)?;
            let h = &doc.hypergraph;
            let mut value = json!({ "girth": g.to_string(), "cap": cap });
            if let Some(w) = witness {
                let edges: Vec<Vec<u32>> = w.edges.iter().map(|&i| h.edge_labels(i)).collect();
                let vertices: Vec<u32> = w.vertices.iter().map(|&v| h.label(v)).collect();
                value["witness"] = json!({ "edges": edges, "vertices": vertices });
            }
            Ok(Output::json(&value, format!("{}.girth.json", stem(file)), EXIT_SUCCESS))
        }
        Command::Solve(SolveCommand::Good { file, budget }) => {
            check_budget(*budget)?;
            let doc = io::read_document(file)?;
            let v = solver::find_good_coloring(&doc.hypergraph, *budget);
            let mut value = verdict_value(&doc.hypergraph, &v);
            value["problem"] = json!("good");
            Ok(Output::json(
                &value,
                format!("{}.good.json", stem(file)),
                verdict_code(&v),
            ))
        }
        Command::Solve(SolveCommand::PartRainbow { file, budget }) => {
            check_budget(*budget)?;
            let doc = io::read_document(file)?;
            let Some(p) = &doc.partite else {
                bail!(
                    "{} has no `parts`; part-rainbow colorings need a partite hypergraph",
                    file.display()
                );
            };
            let v = solver::find_part_rainbow_bad(p, *budget);
            let mut value = verdict_value(&doc.hypergraph, &v);
            value["problem"] = json!("part_rainbow");
            Ok(Output::json(
                &value,
                format!("{}.part-rainbow.json", stem(file)),
                verdict_code(&v),
            ))
        }
        Command::Construct(c) => construct_command(c, verbose),
        Command::Random(c) => random_command(c, verbose),
        Command::Bound { r, g } => {
            let t = probabilistic::counting_threshold(*r, *g)?;
            let value = json!({ "params": { "command": "bound", "r": r, "g": g }, "threshold": t });
            Ok(Output::json(&value, format!("bound-{r}-{g}.json"), EXIT_SUCCESS))
        }
        Command::Cycles(CyclesCommand::Count { file, length, budget }) => {
            let doc = io::read_document(file)?;
            let census = cycle_census(&doc.hypergraph, *length, *budget)?;
            let value = json!(census);
            Ok(Output::json(
                &value,
                format!("{}.cycles-{length}.json", stem(file)),
                EXIT_SUCCESS,
            ))
        }
        Command::Cycles(CyclesCommand::Bound { r, ell, n }) => {
            let u = Uniformity::new(*r)?;
            let report = cycle_count_bound_check(u, *ell, *n)?;
            let code = if report.holds {
                EXIT_PROPERTY_HOLDS
            } else {
                EXIT_SUCCESS
            };
            Ok(Output::json(
                &json!(report),
                format!("cycle-bound-{r}-{ell}-{n}.json"),
                code,
            ))
        }
        Command::Convert { file, dot, .. } => {
            let doc = io::read_document(file)?;
            if *dot {
                Ok(Output {
                    text: io::to_dot(&doc.hypergraph),
                    default_name: format!("{}.dot", stem(file)),
                    code: EXIT_SUCCESS,
                })
            } else {
                Ok(Output {
                    text: doc.to_json(),
                    default_name: format!("{}.json", stem(file)),
                    code: EXIT_SUCCESS,
                })
            }
        }
    }
}

fn check_budget(budget: u64) -> Result<()> {
    if budget == 0 {
        bail!("budget must be positive");
    }
    Ok(())
}

fn construct_command(c: &ConstructCommand, verbose: bool) -> Result<Output> {
    match c {
        ConstructCommand::Pr { r, g, options } => {
            let params = options.params();
            let (p, trace) = construct::build_pr(*r, *g, &params)?;
            if verbose {
                eprintln!(
                    "PR({r},{g}): {} vertices, {} edges",
                    p.base().num_vertices(),
                    p.base().num_edges()
                );
            }
            let doc = Document::partite(p)
                .with("params", build_params("construct pr", *r, *g, &params))
                .with("trace", json!(trace));
            Ok(Output::json(&doc.to_value(), format!("pr-{r}-{g}.json"), EXIT_SUCCESS))
        }
        ConstructCommand::H { r, g, options } => {
            let params = options.params();
            let built = construct::build_h(*r, *g, &params)?;
            if verbose {
                eprintln!(
                    "H({r},{g}): {} vertices, {} edges",
                    built.hypergraph.num_vertices(),
                    built.hypergraph.num_edges()
                );
            }
            let doc = match built.partite {
                Some(p) => Document::partite(p),
                None => Document::new(built.hypergraph),
            }
            .with("params", build_params("construct h", *r, *g, &params))
            .with("trace", json!(built.trace));
            Ok(Output::json(&doc.to_value(), format!("h-{r}-{g}.json"), EXIT_SUCCESS))
        }
        ConstructCommand::Factor { file, a } => {
            let doc = io::read_document(file)?;
            let Some(p) = &doc.partite else {
                bail!("{} has no `parts`", file.display());
            };
            let m = construct::complete_partite_factor(p, *a)?;
            let out = Document::partite(m).with("params", json!({ "command": "construct factor", "a": a }));
            Ok(Output::json(
                &out.to_value(),
                format!("{}.factor-{a}.json", stem(file)),
                EXIT_SUCCESS,
            ))
        }
        ConstructCommand::Estimate { r, g, random_supplier } => {
            let strategy = if *random_supplier {
                SupplierStrategy::RandomOnly
            } else {
                SupplierStrategy::Auto
            };
            let value = json!({
                "params": { "command": "construct estimate", "r": r, "g": g, "supplier": strategy },
                "pr": construct::estimate_pr(*r, *g, strategy),
                "h": construct::estimate_size(*r, *g, strategy),
            });
            Ok(Output::json(&value, format!("estimate-{r}-{g}.json"), EXIT_SUCCESS))
        }
    }
}

fn build_params(command: &str, r: usize, g: usize, p: &ConstructionParams) -> Value {
    json!({
        "command": command,
        "r": r,
        "g": g,
        "seed": p.seed,
        "max_vertices": p.limits.max_vertices,
        "max_edges": p.limits.max_edges,
        "supplier": p.supplier,
        "supplier_attempts": p.supplier_attempts,
    })
}

fn random_command(c: &RandomCommand, verbose: bool) -> Result<Output> {
    match c {
        RandomCommand::Carrier {
            n,
            big_r,
            g,
            seed,
            tries,
        } => {
            let params =
                json!({ "command": "random carrier", "n": n, "R": big_r, "g": g, "seed": seed, "tries": tries });
            let (sample, met) = match probabilistic::random_high_girth(*n, *big_r, *g, *seed, *tries) {
                Ok(s) => (s, true),
                Err(ProbError::TargetNotMet { best, .. }) => (*best, false),
                Err(e) => return Err(e.into()),
            };
            if verbose || !met {
                eprintln!(
                    "carrier: {} of {} target edges after {} attempt(s)",
                    sample.hypergraph.num_edges(),
                    sample.target,
                    sample.attempts
                );
            }
            let doc = Document::new(sample.hypergraph.clone()).with("params", params).with(
                "sample",
                json!({
                    "target": sample.target,
                    "target_met": met,
                    "sampled_edges": sample.sampled_edges,
                    "deleted_edges": sample.deleted_edges,
                    "girth": sample.girth.to_string(),
                    "attempts": sample.attempts,
                }),
            );
            let code = if met { EXIT_SUCCESS } else { EXIT_ERROR };
            Ok(Output::json(
                &doc.to_value(),
                format!("carrier-{n}-{big_r}-{g}-{seed}.json"),
                code,
            ))
        }
        RandomCommand::Search {
            r,
            g,
            n,
            tries,
            budget,
            seed,
        } => {
            let n = n.unwrap_or_else(|| (r.saturating_sub(1)).pow(2) + 3);
            let params = ProbParams::new(n, *r, *g, *seed, *tries, *budget)?;
            let report = probabilistic::random_search_rm(&params)?;
            if verbose {
                eprintln!("search: {} tries, found = {}", report.tries_run, report.found);
            }
            let mut value = json!({
                "params": { "command": "random search", "params": params },
                "found": report.found,
                "tries_run": report.tries_run,
            });
            let mut code = EXIT_SUCCESS;
            if let Some(best) = &report.best {
                code = verdict_code(&best.verdict);
                value["best"] = json!({
                    "try_index": best.try_index,
                    "try_seed": best.try_seed,
                    "carrier": io::hypergraph_value(&best.carrier),
                    "q": best.q,
                    "hypergraph": io::hypergraph_value(&best.hypergraph),
                    "girth": best.girth.to_string(),
                    "solver": verdict_value(&best.hypergraph, &best.verdict),
                });
            }
            Ok(Output::json(&value, format!("search-{r}-{g}-{n}-{seed}.json"), code))
        }
    }
}
