//! Argument parsing and the subcommands.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use frp_core::backwards_f::{compute_f_dp, compute_f_scaled, OffPathApsp, ScaledConfig};
use frp_core::frp_bounded::two_frp_bounded;
use frp_core::frp_weighted::{f_frp, two_frp};
use frp_core::graph_core::{load_edge_list, shortest_path, write_edge_list, Graph, VertexId};
use frp_core::lowerbound_gadget::{
    bucket_count, build_gadget, triangle_vertices_via_queries, BoundedEngine, BruteEngine, FfrpEngine, UndirectedGraph,
};
use frp_core::oracle::{brute_f_table, brute_triangle_vertices, gen};
use serde::Serialize;

use crate::bench::{self, Algorithm, BenchConfig};
use crate::formats::{load_undirected, FTableJson, FaultTableJson, LayoutJson, TableJson};
use crate::genspec::GenSpec;
use crate::pool;
use crate::verify::{check_f, check_fault_tree, check_two_fault, describe};

/// Environment variable that overrides `--seed`.
pub const SEED_ENV: &str = "FRP_SEED";

/// Fault-tolerant shortest paths: replacement-path tables for up to `k`
/// failed edges between a source and a target.
#[derive(Debug, Parser)]
#[command(name = "frp", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for generators and sampling (overridden by FRP_SEED).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Two-fault table for the weighted problem.
    #[command(name = "2frp")]
    TwoFrp {
        #[command(flatten)]
        input: InputArgs,
        /// Cross-check every entry against brute force.
        #[arg(long)]
        verify: bool,
    },
    /// Recursive table for up to `k` failures.
    Ffrp {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Two-fault table answered by the bounded-weight structure.
    #[command(name = "frp-bounded")]
    FrpBounded {
        #[command(flatten)]
        input: InputArgs,
        /// Interval size (default: round(n^(2/3))).
        #[arg(long)]
        g: Option<usize>,
        /// Weight bound M (default: the largest weight magnitude).
        #[arg(long)]
        m_bound: Option<i64>,
        #[arg(long)]
        verify: bool,
    },
    /// Backwards distances f(p_j, p_i) along the shortest path.
    #[command(name = "f-table")]
    FTable {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = FMethod::Dp)]
        method: FMethod,
        /// Hop length up to which short rounds are used (scaled method).
        #[arg(long)]
        crossover: Option<usize>,
        /// Hitting-set constant (scaled method).
        #[arg(long, default_value_t = 3.0)]
        c: f64,
        /// Weight bound M (scaled method; default: the largest magnitude).
        #[arg(long)]
        m_bound: Option<i64>,
        #[arg(long)]
        verify: bool,
    },
    /// Triangle detection through k-fault queries on exported gadgets.
    Gadget(GadgetArgs),
    /// Timing sweep written as CSV.
    Bench(BenchArgs),
    /// Oracle sweep over generated instances.
    Verify(VerifyArgs),
}

/// Where the graph comes from and where the result goes.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge list: header `n m`, then `m` lines `u v w`.
    #[arg(long, required_unless_present = "gen", conflicts_with = "gen")]
    pub input: Option<PathBuf>,
    /// Generator spec, e.g. `n=30,p=0.4,w=-3..8,seed=7`.
    #[arg(long, allow_hyphen_values = true)]
    pub gen: Option<GenSpec>,
    /// Source vertex (default 0).
    #[arg(long)]
    pub s: Option<VertexId>,
    /// Target vertex (default: the reachable vertex farthest by hops).
    #[arg(long)]
    pub t: Option<VertexId>,
    /// Output file (default: standard output).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FMethod {
    Dp,
    Scaled,
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineKind {
    Ffrp,
    Brute,
    Bounded,
}

#[derive(Debug, Args)]
pub struct GadgetArgs {
    /// Undirected graph: header `n m`, then `m` lines `u v`.
    #[arg(long, required_unless_present = "gen", conflicts_with = "gen")]
    pub input: Option<PathBuf>,
    /// Erdős–Rényi spec, e.g. `n=20,p=0.3` (weights are ignored).
    #[arg(long)]
    pub gen: Option<GenSpec>,
    /// Fault budget (layers).
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Bucket size L (default: n, a single gadget).
    #[arg(long)]
    pub l: Option<usize>,
    /// Bucket whose gadget is exported.
    #[arg(long, default_value_t = 0)]
    pub bucket: usize,
    /// Query engine (default: ffrp for k ≤ 3, brute otherwise).
    #[arg(long, value_enum)]
    pub engine: Option<EngineKind>,
    /// Directory receiving `gadget.txt` and `layout.json`.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Compare the verdicts with brute-force triangle detection.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated vertex counts; empty for no rows.
    #[arg(long, default_value = "64,128,256")]
    pub sizes: String,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "2frp,frp-bounded-precompute,frp-bounded-query")]
    pub algorithms: Vec<Algorithm>,
    /// Interval sizes for the bounded rows.
    #[arg(long, value_delimiter = ',', default_value = "2,8,32")]
    pub g: Vec<usize>,
    /// Edge probability of the dense graphs.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Weight range `lo..hi` of the dense graphs.
    #[arg(long, default_value = "-4..10", allow_hyphen_values = true)]
    pub w: String,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    /// Pairs answered per bounded query row.
    #[arg(long, default_value_t = 200)]
    pub max_queries: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepAlgorithm {
    #[value(name = "2frp")]
    TwoFrp,
    #[value(name = "frp-bounded")]
    FrpBounded,
    #[value(name = "f-table")]
    FTable,
    Ffrp,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Generator spec; `n` may be a range such as `6..40`.
    #[arg(long, allow_hyphen_values = true)]
    pub gen: GenSpec,
    /// Number of instances.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "2frp,f-table")]
    pub algorithms: Vec<SweepAlgorithm>,
    /// Interval size for frp-bounded (default: round(n^(2/3))).
    #[arg(long)]
    pub g: Option<usize>,
    /// Fault budget for ffrp.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// How a successful run ended.
#[derive(Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// Verification found a disagreement; the message names it.
    Mismatch(String),
}

impl Status {
    /// Process exit code.
    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch(_) => VERIFY_MISMATCH,
        }
    }
}

/// Exit code for a failed verification.
pub const VERIFY_MISMATCH: i32 = 1;
/// Exit code for unusable input.
pub const INPUT_ERROR: i32 = 2;

/// Effective seed: `FRP_SEED`, then `--seed`, then the spec's own, then 0.
fn resolve_seed(flag: Option<u64>, spec: Option<u64>) -> anyhow::Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().with_context(|| format!("{SEED_ENV}={v:?} is not a seed")),
        Err(_) => Ok(flag.or(spec).unwrap_or(0)),
    }
}

fn emit(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(path: Option<&Path>, value: &T) -> anyhow::Result<()> {
    emit(path, &format!("{}\n", serde_json::to_string_pretty(value)?))
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// A loaded or generated instance.
struct Instance {
    graph: Graph,
    s: VertexId,
    t: VertexId,
    /// Weight bound of the generator, if generated.
    m_bound: Option<i64>,
}

fn load(input: &InputArgs, seed_flag: Option<u64>) -> anyhow::Result<Instance> {
    let (graph, s, m_bound) = match (&input.input, &input.gen) {
        (Some(path), _) => {
            let graph = load_edge_list(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
            (graph, input.s.unwrap_or(0), None)
        }
        (None, Some(spec)) => {
            let inst = spec.instance(resolve_seed(seed_flag, spec.seed)?)?;
            (inst.graph, input.s.unwrap_or(inst.s), Some(spec.weight_bound()))
        }
        (None, None) => bail!("one of --input or --gen is required"),
    };
    graph.check_vertex(s)?;
    let t = match input.t {
        Some(t) => {
            graph.check_vertex(t)?;
            t
        }
        None => gen::farthest_by_hops(&graph, s).ok_or_else(|| anyhow!("source {s} reaches no other vertex"))?,
    };
    Ok(Instance { graph, s, t, m_bound })
}

/// Runs a parsed command line.
pub fn run(cli: Cli) -> anyhow::Result<Status> {
    let seed = cli.seed;
    match cli.command {
        Command::TwoFrp { input, verify } => {
            let inst = load(&input, seed)?;
            let view = inst.graph.view();
            let table = two_frp(&view, inst.s, inst.t)?;
            emit_json(input.output.as_deref(), &TableJson::new(&inst.graph, &table))?;
            Ok(judge(verify, &inst.graph, || check_two_fault(&view, inst.s, inst.t, &table)))
        }
        Command::Ffrp { input, k, verify } => {
            let inst = load(&input, seed)?;
            let view = inst.graph.view();
            let tree = f_frp(&view, inst.s, inst.t, k)?;
            emit_json(input.output.as_deref(), &FaultTableJson::new(&inst.graph, inst.s, inst.t, k, &tree))?;
            Ok(judge(verify, &inst.graph, || check_fault_tree(&view, inst.s, inst.t, &tree)))
        }
        Command::FrpBounded { input, g, m_bound, verify } => {
            let inst = load(&input, seed)?;
            let view = inst.graph.view();
            let m = m_bound.or(inst.m_bound).unwrap_or_else(|| inst.graph.max_abs_weight());
            let table = two_frp_bounded(&view, inst.s, inst.t, m, g)?;
            emit_json(input.output.as_deref(), &TableJson::new(&inst.graph, &table))?;
            Ok(judge(verify, &inst.graph, || check_two_fault(&view, inst.s, inst.t, &table)))
        }
        Command::FTable { input, method, crossover, c, m_bound, verify } => {
            let inst = load(&input, seed)?;
            let view = inst.graph.view();
            let path = shortest_path(&view, inst.s, inst.t)?;
            let f = match method {
                FMethod::Dp => compute_f_dp(&path, &OffPathApsp::build(&view, &path)),
                FMethod::Brute => brute_f_table(&view, &path),
                FMethod::Scaled => {
                    let m = m_bound.or(inst.m_bound).unwrap_or_else(|| inst.graph.max_abs_weight());
                    let cfg = ScaledConfig {
                        crossover,
                        c,
                        seed: resolve_seed(seed, input.gen.and_then(|g| g.seed))?,
                        ..ScaledConfig::new(m)
                    };
                    compute_f_scaled(&view, &path, &cfg)?.table
                }
            };
            emit_json(input.output.as_deref(), &FTableJson::from(&f))?;
            Ok(judge(verify, &inst.graph, || check_f(&view, &path, &f)))
        }
        Command::Gadget(args) => gadget(args, seed),
        Command::Bench(args) => {
            let cfg = BenchConfig {
                sizes: parse_sizes(&args.sizes)?,
                algorithms: args.algorithms,
                g_values: args.g,
                p: args.p,
                w: parse_range(&args.w)?,
                reps: args.reps,
                max_queries: args.max_queries,
                seed: resolve_seed(seed, None)?,
            };
            emit(args.output.as_deref(), &bench::to_csv(&bench::run(&cfg)))?;
            Ok(Status::Ok)
        }
        Command::Verify(args) => sweep(args, seed, cli.threads),
    }
}

fn judge(verify: bool, g: &Graph, check: impl FnOnce() -> Option<crate::verify::Mismatch>) -> Status {
    if !verify {
        return Status::Ok;
    }
    match check() {
        None => Status::Ok,
        Some(m) => Status::Mismatch(describe(g, &m)),
    }
}

fn parse_sizes(text: &str) -> anyhow::Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().with_context(|| format!("bad size {x:?}")))
        .collect()
}

fn parse_range(text: &str) -> anyhow::Result<(i64, i64)> {
    let spec: GenSpec = format!("n=1,p=0,w={text}").parse().with_context(|| format!("bad weight range {text:?}"))?;
    Ok(spec.w)
}

#[derive(Serialize)]
struct Verdict {
    triangle: bool,
    engine: &'static str,
    k: usize,
    l: usize,
    buckets: usize,
    /// Vertices reported to lie on a triangle.
    vertices: Vec<usize>,
}

fn gadget(args: GadgetArgs, seed: Option<u64>) -> anyhow::Result<Status> {
    let tri: UndirectedGraph = match (&args.input, &args.gen) {
        (Some(path), _) => load_undirected(&read(path)?).with_context(|| format!("parsing {}", path.display()))?,
        (None, Some(spec)) => spec.undirected(resolve_seed(seed, spec.seed)?),
        (None, None) => bail!("one of --input or --gen is required"),
    };
    let l = args.l.unwrap_or(tri.n()).max(1);
    let engine = args.engine.unwrap_or(if args.k <= 3 { EngineKind::Ffrp } else { EngineKind::Brute });
    if let Some(dir) = &args.out_dir {
        let (graph, layout) = build_gadget(&tri, args.bucket, l, args.k)?;
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        emit(Some(&dir.join("gadget.txt")), &write_edge_list(&graph))?;
        emit_json(Some(&dir.join("layout.json")), &LayoutJson::from(&layout))?;
    }
    let (name, on) = match engine {
        EngineKind::Ffrp => ("ffrp", triangle_vertices_via_queries(&tri, args.k, l, &FfrpEngine)?),
        EngineKind::Brute => ("brute", triangle_vertices_via_queries(&tri, args.k, l, &BruteEngine)?),
        EngineKind::Bounded => ("bounded", triangle_vertices_via_queries(&tri, args.k, l, &BoundedEngine::default())?),
    };
    let vertices: Vec<usize> = (0..on.len()).filter(|&v| on[v]).collect();
    let verdict = Verdict {
        triangle: !vertices.is_empty(),
        engine: name,
        k: args.k,
        l,
        buckets: bucket_count(tri.n(), l),
        vertices,
    };
    emit_json(args.output.as_deref(), &verdict)?;
    if args.verify {
        let want = brute_triangle_vertices(&tri);
        if let Some(v) = (0..want.len()).find(|&v| want[v] != on[v]) {
            return Ok(Status::Mismatch(format!("vertex {v}: queries say {}, brute force says {}", on[v], want[v])));
        }
    }
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct SweepSummary {
    spec: String,
    seed: u64,
    instances: usize,
    checked: Vec<(String, usize)>,
}

fn sweep(args: VerifyArgs, seed: Option<u64>, threads: usize) -> anyhow::Result<Status> {
    let base = resolve_seed(seed, args.gen.seed)?;
    let seeds: Vec<u64> = (0..args.count as u64).map(|i| base.wrapping_add(i.wrapping_mul(1_000_003))).collect();
    let spec = args.gen;
    let results = pool::map(threads, &seeds, |&seed| -> anyhow::Result<Option<String>> {
        let inst = spec.instance(seed)?;
        let view = inst.graph.view();
        let (s, t) = (inst.s, inst.t);
        for &alg in &args.algorithms {
            let found = match alg {
                SweepAlgorithm::TwoFrp => check_two_fault(&view, s, t, &two_frp(&view, s, t)?),
                SweepAlgorithm::FrpBounded => {
                    let table = two_frp_bounded(&view, s, t, spec.weight_bound(), args.g)?;
                    check_two_fault(&view, s, t, &table)
                }
                SweepAlgorithm::FTable => {
                    let path = shortest_path(&view, s, t)?;
                    check_f(&view, &path, &compute_f_dp(&path, &OffPathApsp::build(&view, &path)))
                }
                SweepAlgorithm::Ffrp => check_fault_tree(&view, s, t, &f_frp(&view, s, t, args.k)?),
            };
            if let Some(m) = found {
                let name = alg.to_possible_value().map_or_else(String::new, |v| v.get_name().to_string());
                return Ok(Some(format!("{name}, instance seed {}: {}", inst.seed, describe(&inst.graph, &m))));
            }
        }
        Ok(None)
    });
    let mut first = None;
    for r in results {
        if let Some(msg) = r? {
            first.get_or_insert(msg);
        }
    }
    let checked = args
        .algorithms
        .iter()
        .map(|a| (a.to_possible_value().map_or_else(String::new, |v| v.get_name().to_string()), seeds.len()))
        .collect();
    emit_json(
        args.output.as_deref(),
        &SweepSummary { spec: spec.to_string(), seed: base, instances: seeds.len(), checked },
    )?;
    Ok(first.map_or(Status::Ok, Status::Mismatch))
}
