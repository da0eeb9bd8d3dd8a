//! `lionsweep`: build graphs, run and check sweeps, search for minimal lion
//! teams and print isoperimetric reports.
//!
//! Exit codes: 0 success or cleared, 10 negative result (not swept,
//! impossible, no witness), 20 unknown (search limits hit), 30 conjecture
//! violation found, 40 resource limit, 1-2 usage and validation errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lionsweep_core::cheeger::{cheeger_constant, lion_bound, polite_lion_bound};
use lionsweep_core::dynamics::{run, MotionModel};
use lionsweep_core::graph::{
    build_circulant, build_complete, build_path, build_square_grid, build_tri_lattice,
    build_triangle, Graph,
};
use lionsweep_core::io::{format_graph, load_graph};
use lionsweep_core::isoperimetry::{
    balanced_boundary_check, conjecture_report, falldown_check, falldown_counterexamples,
    iso_profile, packing, FallDirection, PackingKind,
};
use lionsweep_core::search::{
    can_clear_with, min_lions_with, verify_lemma_bounds, MinLions, SearchLimits, SearchVerdict,
    StartPolicy, DEFAULT_MAX_DEPTH,
};
use lionsweep_core::strategies::{
    caffeinated_wall_moves, leftmost_column, naive_caffeinated_column_moves, row_sweep_moves,
    wall_formation, wall_lion_count, SweepPlan,
};
use lionsweep_core::subsets::DEFAULT_SUBSET_LIMIT;
use lionsweep_core::trace_io::{format_moves, format_trace, parse_moves, parse_trace};
use lionsweep_core::{Error, Trace, VertexSet};

const EXIT_NEGATIVE: u8 = 10;
const EXIT_UNKNOWN: u8 = 20;
const EXIT_CONJECTURE: u8 = 30;
const EXIT_RESOURCE: u8 = 40;

#[derive(Parser)]
#[command(
    name = "lionsweep",
    version,
    about = "Lions-and-contamination sweeps on graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph of one of the built-in families as an edge list.
    Graph(GraphArgs),
    /// Run a move file and report when (or whether) the graph is swept.
    Simulate(SimulateArgs),
    /// Generate the moves of a sweep strategy on a triangulated strip.
    Strategy(StrategyArgs),
    /// Replay a trace and check the per-step growth bounds.
    Verify(VerifyArgs),
    /// Vertex isoperimetry: profiles, fall-down checks, packings.
    Isoperimetry {
        #[command(subcommand)]
        command: IsoCommand,
    },
    /// Exact Cheeger constant and the lion counts it rules out.
    Cheeger { graph: PathBuf },
    /// Exhaustive search for a sweep with a given number of lions.
    Search(SearchArgs),
    /// Compare minimum boundaries on the triangle graph with the packings.
    Conjecture {
        #[arg(short)]
        n: usize,
        /// Write the CSV here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Square,
    Tri,
    Triangle,
    Circulant,
    Complete,
    Path,
}

#[derive(Args)]
struct GraphArgs {
    family: FamilyArg,
    #[arg(short)]
    n: usize,
    /// Strip length for `tri` (defaults to n).
    #[arg(short)]
    l: Option<usize>,
    /// Offset range for `circulant`.
    #[arg(short)]
    k: Option<usize>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    graph: PathBuf,
    #[arg(long, default_value = "free")]
    model: MotionModel,
    /// Comma-separated start vertices.
    #[arg(long, value_delimiter = ',', required = true)]
    lions: Vec<usize>,
    #[arg(long)]
    moves: PathBuf,
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyKind {
    /// Row-by-row sweep with n lions (any motion model).
    RowSweep,
    /// Leaning wall of triangles with 3n/2 caffeinated lions.
    Wall,
    /// All n lions march across column by column; leaks under caffeinated motion.
    NaiveColumn,
}

#[derive(Args)]
struct StrategyArgs {
    kind: StrategyKind,
    #[arg(short)]
    n: usize,
    #[arg(short)]
    l: usize,
    /// Comma-separated start vertices (defaults to the strategy's formation).
    #[arg(long, value_delimiter = ',')]
    starts: Option<Vec<usize>>,
    /// Number of steps for `naive-column`.
    #[arg(long)]
    steps: Option<usize>,
    /// Write the moves here instead of stdout.
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Also simulate and write the trace.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    #[arg(long)]
    trace: PathBuf,
    #[arg(long, default_value = "free")]
    model: MotionModel,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    DownLeft,
    DownRight,
}

impl From<DirectionArg> for FallDirection {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::DownLeft => FallDirection::DownLeft,
            DirectionArg::DownRight => FallDirection::DownRight,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PackingArg {
    Row,
    IceCream,
}

#[derive(Subcommand)]
enum IsoCommand {
    /// Minimum boundary per cardinality, as CSV.
    Profile {
        graph: PathBuf,
        #[arg(long)]
        lo: Option<usize>,
        #[arg(long)]
        hi: Option<usize>,
    },
    /// Check the fall-down lemmas over every subset of the n×n grid.
    FalldownCheck {
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "down-left")]
        direction: DirectionArg,
    },
    /// Find a set whose fall-down image has different boundaries in the two grids.
    Counterexample {
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "down-right")]
        direction: DirectionArg,
        /// Only report witnesses with this many boundary vertices in the square grid.
        #[arg(long)]
        square_boundary: Option<usize>,
        /// Only report witnesses with this many boundary vertices in the lattice.
        #[arg(long)]
        lattice_boundary: Option<usize>,
    },
    /// Check that balanced lattice sets have at least n boundary vertices.
    Balanced {
        #[arg(short)]
        n: usize,
    },
    /// Print a packing of the triangle graph.
    Packing {
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum)]
        kind: PackingArg,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Args)]
struct SearchArgs {
    graph: PathBuf,
    #[arg(long, default_value = "free")]
    model: MotionModel,
    /// Number of lions.
    #[arg(short, required_unless_present = "min", conflicts_with = "min")]
    k: Option<usize>,
    /// Search for the smallest sweeping team instead.
    #[arg(long)]
    min: bool,
    #[arg(long, default_value_t = 4)]
    kmax: usize,
    #[arg(long, env = "LIONSWEEP_MAX_STATES", default_value_t = lionsweep_core::search::DEFAULT_MAX_STATES)]
    max_states: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
    max_depth: usize,
    /// Skip states whose cleared set is covered by a stored state with the same lions.
    #[arg(long)]
    dominance: bool,
    /// Start positions as comma-separated vertices; repeat for several starts.
    #[arg(long, action = clap::ArgAction::Append)]
    start: Vec<String>,
    #[arg(long)]
    trace_out: Option<PathBuf>,
    /// Worker threads for frontier expansion (1 keeps everything on one thread).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = match err.downcast_ref::<Error>() {
                Some(Error::ResourceLimit(_)) => EXIT_RESOURCE,
                Some(Error::Io(_)) => 1,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn dispatch(cmd: Command) -> anyhow::Result<u8> {
    match cmd {
        Command::Graph(a) => cmd_graph(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Strategy(a) => cmd_strategy(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Isoperimetry { command } => cmd_iso(command),
        Command::Cheeger { graph } => cmd_cheeger(&graph),
        Command::Search(a) => cmd_search(a),
        Command::Conjecture { n, out } => cmd_conjecture(n, out),
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    load_graph(path).with_context(|| format!("reading graph {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn list(s: &VertexSet) -> String {
    format!(
        "[{}]",
        s.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn cmd_graph(a: GraphArgs) -> anyhow::Result<u8> {
    let need =
        |v: Option<usize>, flag: &str| v.with_context(|| format!("this family needs -{flag}"));
    let g = match a.family {
        FamilyArg::Square => build_square_grid(a.n)?,
        FamilyArg::Tri => build_tri_lattice(a.n, a.l.unwrap_or(a.n))?,
        FamilyArg::Triangle => build_triangle(a.n)?,
        FamilyArg::Circulant => build_circulant(a.n, need(a.k, "k")?)?,
        FamilyArg::Complete => build_complete(a.n)?,
        FamilyArg::Path => build_path(a.n)?,
    };
    emit(a.out.as_deref(), &format_graph(&g))?;
    eprintln!("vertices {} edges {}", g.vertex_count(), g.edge_count());
    Ok(0)
}

fn write_trace(path: Option<&Path>, trace: &Trace) -> anyhow::Result<()> {
    if let Some(p) = path {
        fs::write(p, format_trace(trace)).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn report_sweep(trace: &Trace) -> u8 {
    match trace.is_swept() {
        Some(t) => {
            println!("swept at t = {t}");
            0
        }
        None => {
            println!(
                "not swept after {} steps ({} of {} vertices cleared)",
                trace.moves.len(),
                trace.last().cleared.len(),
                trace.last().cleared.universe()
            );
            EXIT_NEGATIVE
        }
    }
}

fn cmd_simulate(a: SimulateArgs) -> anyhow::Result<u8> {
    let g = read_graph(&a.graph)?;
    let text =
        fs::read_to_string(&a.moves).with_context(|| format!("reading {}", a.moves.display()))?;
    let moves = parse_moves(&text)?;
    let trace = run(&g, a.model, &a.lions, &moves, false)?;
    write_trace(a.trace.as_deref(), &trace)?;
    Ok(report_sweep(&trace))
}

fn cmd_strategy(a: StrategyArgs) -> anyhow::Result<u8> {
    let g = build_tri_lattice(a.n, a.l)?;
    let (plan, model): (SweepPlan, MotionModel) = match a.kind {
        StrategyKind::RowSweep => {
            let starts = a.starts.clone().unwrap_or_else(|| leftmost_column(&g, a.n));
            (row_sweep_moves(a.n, a.l, &starts)?, MotionModel::Free)
        }
        StrategyKind::Wall => {
            let starts = match a.starts.clone() {
                Some(s) => s,
                None => wall_formation(a.n, a.l, 1)?,
            };
            if starts.len() != wall_lion_count(a.n) {
                bail!("the wall needs {} lions", wall_lion_count(a.n));
            }
            (
                caffeinated_wall_moves(a.n, a.l, &starts)?,
                MotionModel::Caffeinated,
            )
        }
        StrategyKind::NaiveColumn => {
            let steps = a.steps.unwrap_or(4 * a.n * a.l);
            (
                naive_caffeinated_column_moves(a.n, a.l, steps)?,
                MotionModel::Caffeinated,
            )
        }
    };
    emit(a.out.as_deref(), &format_moves(&plan.moves))?;
    eprintln!(
        "lions {} steps {} formation {}",
        join(&plan.starts),
        plan.moves.len(),
        plan.formation_steps
    );
    if let Some(path) = a.trace.as_deref() {
        let trace = run(&g, model, &plan.starts, &plan.moves, false)?;
        write_trace(Some(path), &trace)?;
        return Ok(report_sweep_to_stderr(&trace));
    }
    Ok(0)
}

fn report_sweep_to_stderr(trace: &Trace) -> u8 {
    match trace.is_swept() {
        Some(t) => {
            eprintln!("swept at t = {t}");
            0
        }
        None => {
            eprintln!("not swept after {} steps", trace.moves.len());
            EXIT_NEGATIVE
        }
    }
}

fn cmd_verify(a: VerifyArgs) -> anyhow::Result<u8> {
    let g = read_graph(&a.graph)?;
    let text =
        fs::read_to_string(&a.trace).with_context(|| format!("reading {}", a.trace.display()))?;
    let trace = parse_trace(&text, g.vertex_count())?;
    let initial = lionsweep_core::dynamics::initial_state(&g, &trace.initial().lions)?;
    if &initial != trace.initial() {
        println!("initial state does not match the lion positions");
        return Ok(2);
    }
    if !trace.replays(&g, a.model)? {
        println!("trace does not replay");
        return Ok(2);
    }
    let report = verify_lemma_bounds(&g, &trace, trace.lion_count())?;
    for v in &report.violations {
        println!("violation: {}", serde_json::to_string(v)?);
    }
    println!(
        "replayed {} steps, {} bound violations",
        report.steps_checked,
        report.violations.len()
    );
    Ok(if report.violations.is_empty() { 0 } else { 2 })
}

fn cmd_iso(cmd: IsoCommand) -> anyhow::Result<u8> {
    match cmd {
        IsoCommand::Profile { graph, lo, hi } => {
            let g = read_graph(&graph)?;
            let profile = iso_profile(&g, lo.unwrap_or(0), hi.unwrap_or(g.vertex_count()))?;
            println!("size,min_boundary,witness");
            for e in &profile.entries {
                let w: Vec<String> = e.witness.iter().map(|v| v.to_string()).collect();
                println!("{},{},{}", e.size, e.min_boundary, w.join(" "));
            }
            Ok(0)
        }
        IsoCommand::FalldownCheck { n, direction } => {
            let r = falldown_check(n, direction.into(), DEFAULT_SUBSET_LIMIT, true)?;
            println!("{} violations over {} subsets", r.violations(), r.subsets);
            if r.violations() > 0 {
                println!(
                    "size {}, square boundary grew {}, lattice boundary grew {}, boundary mismatch {}",
                    r.size_violations, r.square_increase, r.lattice_increase, r.boundary_mismatch
                );
                return Ok(EXIT_NEGATIVE);
            }
            Ok(0)
        }
        IsoCommand::Counterexample {
            n,
            direction,
            square_boundary,
            lattice_boundary,
        } => {
            let found = falldown_counterexamples(n, direction.into(), DEFAULT_SUBSET_LIMIT)?
                .into_iter()
                .find(|w| {
                    square_boundary.is_none_or(|b| w.square_boundary.len() == b)
                        && lattice_boundary.is_none_or(|b| w.lattice_boundary.len() == b)
                });
            match found {
                Some(w) => {
                    println!("set = {}", list(&w.set));
                    println!("image = {}", list(&w.image));
                    println!(
                        "square boundary = {} ({}), lattice boundary = {} ({})",
                        list(&w.square_boundary),
                        w.square_boundary.len(),
                        list(&w.lattice_boundary),
                        w.lattice_boundary.len()
                    );
                    Ok(0)
                }
                None => {
                    println!("no witness");
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        IsoCommand::Balanced { n } => {
            let r = balanced_boundary_check(n, DEFAULT_SUBSET_LIMIT)?;
            println!(
                "{} violations over {} subsets of sizes {}..={}, min boundary {}",
                r.violations,
                r.sets_checked,
                r.size_lo,
                r.size_hi,
                r.min_boundary.map_or("-".to_string(), |b| b.to_string())
            );
            Ok(if r.violations == 0 { 0 } else { EXIT_NEGATIVE })
        }
        IsoCommand::Packing { n, kind, count } => {
            let kind = match kind {
                PackingArg::Row => PackingKind::Row,
                PackingArg::IceCream => PackingKind::IceCream,
            };
            println!("{}", list(&packing(n, kind, count)?));
            Ok(0)
        }
    }
}

fn cmd_cheeger(path: &Path) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    let res = cheeger_constant(&g)?;
    let nv = g.vertex_count();
    println!(
        "g = {}/{}, witness = {}, excluded_polite <= {}, excluded_free <= {}",
        res.g.numer(),
        res.g.denom(),
        list(&res.witness),
        polite_lion_bound(res.g, nv),
        lion_bound(res.g, nv)
    );
    Ok(0)
}

fn parse_starts(raw: &[String]) -> anyhow::Result<StartPolicy> {
    if raw.is_empty() {
        return Ok(StartPolicy::Auto);
    }
    let starts = raw
        .iter()
        .map(|s| {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .with_context(|| format!("bad start vertex `{t}`"))
                })
                .collect::<anyhow::Result<Vec<_>>>()
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(StartPolicy::Explicit(starts))
}

fn cmd_search(a: SearchArgs) -> anyhow::Result<u8> {
    if a.jobs == 0 {
        bail!("--jobs must be positive");
    }
    let g = read_graph(&a.graph)?;
    let limits = SearchLimits {
        max_states: a.max_states,
        max_depth: a.max_depth,
        dominance_pruning: a.dominance,
    };
    let parallel = a.jobs > 1;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()?;
    pool.install(|| {
        if a.min {
            if !a.start.is_empty() {
                bail!("--start cannot be combined with --min");
            }
            let r = min_lions_with(&g, a.model, a.kmax, &limits, parallel)?;
            return Ok(match r {
                MinLions::Found { k, trace } => {
                    println!("k* = {k}");
                    write_trace(a.trace_out.as_deref(), &trace)?;
                    0
                }
                MinLions::Exhausted { k_max } => {
                    println!("impossible for every k <= {k_max}");
                    EXIT_NEGATIVE
                }
                MinLions::Unknown { k, reason } => {
                    println!("unknown at k = {k}: {reason}");
                    EXIT_UNKNOWN
                }
            });
        }
        let k = a.k.expect("clap requires -k without --min");
        let starts = parse_starts(&a.start)?;
        let out = can_clear_with(&g, k, a.model, &starts, &limits, parallel)?;
        println!("verdict: {}", out.verdict.label());
        println!("explored: {}", out.explored);
        println!("peak frontier: {}", out.peak_frontier);
        Ok(match out.verdict {
            SearchVerdict::Cleared(trace) => {
                println!("swept at t = {}", trace.moves.len());
                write_trace(a.trace_out.as_deref(), &trace)?;
                0
            }
            SearchVerdict::Impossible => EXIT_NEGATIVE,
            SearchVerdict::Unknown(reason) => {
                println!("reason: {reason}");
                EXIT_UNKNOWN
            }
        })
    })
}

fn cmd_conjecture(n: usize, out: Option<PathBuf>) -> anyhow::Result<u8> {
    let r = conjecture_report(n)?;
    emit(out.as_deref(), &r.to_csv())?;
    eprintln!(
        "window size {} min boundary {} threshold {} lion threshold {}",
        r.window_size, r.window_min_boundary, r.boundary_threshold, r.lion_threshold
    );
    let bad = r.violations();
    if !bad.is_empty() || !r.window_holds {
        eprintln!(
            "conjecture violated at sizes {bad:?} (window holds: {})",
            r.window_holds
        );
        return Ok(EXIT_CONJECTURE);
    }
    Ok(0)
}
