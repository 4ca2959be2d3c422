use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clawtop::analysis::GraphAnalysis;
use clawtop::collapse::{fold_collapse, greedy_fold_reduce};
use clawtop::ensemble::{EnsembleSpec, NamedGraph};
use clawtop::graph::{generate, Family};
use clawtop::harness::{BoundCheck, VerificationRecord};
use clawtop::homology::analyze_complex;
use clawtop::io::{emit_graph, GraphFormat};
use clawtop::suites::{run_suite, Suite, SuiteOptions, Summary};
use clawtop::{independence_complex, Caps, Error, Graph, TietzeBudget};
use serde::Serialize;

mod cache;
mod named;

use cache::{Cache, Entry};
use named::load_graph;

#[derive(Parser)]
#[command(name = "clawtop", version, about = "Independence complexes of claw-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a family and print it.
    Gen(GenArgs),
    /// Fold-reduce, build Ind(G), compute homology, connectivity and π1 status.
    Analyze(AnalyzeArgs),
    /// Run a verification suite and stream JSON-lines records.
    Verify(VerifyArgs),
    /// Print Ind(G) as {universe, facets}.
    Complex(ComplexArgs),
    /// Print the elementary collapses of the fold removing `w` (needs N(v) ⊆ N(w)).
    Fold(FoldArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    L,
    C,
    Path,
    Cycle,
    Complete,
    Random,
    RandomClawFree,
    Line,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Base graph for `--family line` (file, `-` or name).
    #[arg(long)]
    base: Option<String>,
}

impl FamilyArgs {
    fn build(&self) -> clawtop::Result<Option<Graph>> {
        let Some(name) = self.family else {
            return Ok(None);
        };
        let n = || self.n.ok_or_else(|| Error::input("--n is required for this family"));
        let k = || self.k.ok_or_else(|| Error::input("--k is required for this family"));
        let family = match name {
            FamilyName::L => Family::Interval { n: n()?, k: k()? },
            FamilyName::C => Family::Circular { n: n()?, k: k()? },
            FamilyName::Path => Family::Path(n()?),
            FamilyName::Cycle => Family::Cycle(n()?),
            FamilyName::Complete => Family::Complete(n()?),
            FamilyName::Random => Family::Random {
                n: n()?,
                p: self.p,
                seed: self.seed,
            },
            FamilyName::RandomClawFree => Family::RandomClawFree {
                n: n()?,
                p: self.p,
                seed: self.seed,
            },
            FamilyName::Line => {
                let base = self
                    .base
                    .as_deref()
                    .ok_or_else(|| Error::input("--base is required for --family line"))?;
                Family::LineGraph(load_graph(base)?)
            }
        };
        generate(&family).map(Some)
    }
}

#[derive(Args, Clone, Copy)]
struct CapArgs {
    /// Largest graph whose independence complex is built.
    #[arg(long, default_value_t = 30)]
    cap_vertices: usize,
    /// Largest number of faces in any one dimension.
    #[arg(long, default_value_t = 200_000)]
    cap_faces: usize,
    /// Tietze rewriting budget for the π1 check.
    #[arg(long, default_value_t = 10_000)]
    tietze_steps: usize,
    #[arg(long, default_value_t = 64)]
    tietze_len: usize,
}

impl CapArgs {
    fn caps(&self) -> clawtop::Result<Caps> {
        if self.cap_vertices == 0 || self.cap_faces == 0 {
            return Err(Error::input("caps must be positive"));
        }
        Ok(Caps {
            max_vertices: self.cap_vertices,
            max_faces_per_dim: self.cap_faces,
        })
    }

    fn tietze(&self) -> TietzeBudget {
        TietzeBudget {
            max_steps: self.tietze_steps,
            max_relator_len: self.tietze_len,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOut {
    EdgeList,
    Graph6,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "edge-list")]
    format: GraphOut,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Graph file (edge list or graph6), `-` for stdin, or a name like `C_6`.
    graph: Option<String>,
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    caps: CapArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    ClawFree,
    General,
}

#[derive(Args)]
struct VerifyArgs {
    /// bounds, lemma31, thm28, wedge, L-recursion, C-theorem or all.
    #[arg(long)]
    suite: String,
    /// `default`, `quick`, or key=value overrides such as `samples=100,seed=3`.
    #[arg(long, default_value = "default")]
    ensemble: String,
    /// Check a single graph instead of the ensemble.
    #[arg(long)]
    graph: Option<String>,
    /// Restrict the bounds suite to one bound.
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// `k` values for the family suites.
    #[arg(long, value_delimiter = ',')]
    k: Option<Vec<usize>>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Overrides the ensemble seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    caps: CapArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComplexArgs {
    graph: String,
    #[command(flatten)]
    caps: CapArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FoldArgs {
    graph: String,
    #[arg(long)]
    v: usize,
    #[arg(long)]
    w: usize,
    #[command(flatten)]
    caps: CapArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Error(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<ExitCode, Failure>;

fn writer(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn json_line<T: Serialize>(w: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *w, value).map_err(io::Error::other)?;
    writeln!(w)
}

fn cmd_gen(args: &GenArgs) -> Outcome {
    let g = args
        .family
        .build()?
        .ok_or_else(|| Error::input("--family is required"))?;
    let format = match args.format {
        GraphOut::EdgeList => GraphFormat::EdgeList,
        GraphOut::Graph6 => GraphFormat::Graph6,
    };
    let mut w = writer(&args.out)?;
    write!(w, "{}", emit_graph(&g, format))?;
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn input_graph(positional: &Option<String>, family: &FamilyArgs) -> clawtop::Result<Graph> {
    match (positional, family.build()?) {
        (Some(_), Some(_)) => Err(Error::input("give either a graph argument or --family, not both")),
        (Some(arg), None) => load_graph(arg),
        (None, Some(g)) => Ok(g),
        (None, None) => Err(Error::input("no graph given")),
    }
}

fn analyze(g: &Graph, caps: &Caps, tietze: &TietzeBudget) -> clawtop::Result<GraphAnalysis> {
    let f_vector = independence_complex(g, caps)?.f_vector();
    let (reduced, folds) = greedy_fold_reduce(g);
    let complex = independence_complex(&reduced.graph, caps)?;
    let cache = Cache::from_env();
    let key = cache.as_ref().map(|_| Cache::key(&complex));
    let cached = cache.as_ref().zip(key.as_deref()).and_then(|(c, k)| c.get(k));
    let entry = match cached {
        Some(entry) => entry,
        None => {
            let (homology, connectivity) = analyze_complex(&complex, tietze);
            let entry = Entry { homology, connectivity };
            if let (Some(c), Some(k)) = (&cache, &key) {
                c.put(k, &entry);
            }
            entry
        }
    };
    Ok(GraphAnalysis {
        n: g.n(),
        max_degree: g.max_degree(),
        claw_free: g.is_claw_free(),
        f_vector,
        folds,
        reduced_vertices: reduced.labels,
        homology: entry.homology,
        connectivity: entry.connectivity,
    })
}

fn cmd_analyze(args: &AnalyzeArgs) -> Outcome {
    let g = input_graph(&args.graph, &args.family)?;
    let a = analyze(&g, &args.caps.caps()?, &args.caps.tietze())?;
    let mut w = writer(&args.out)?;
    match args.format {
        ReportFormat::Json => json_line(&mut *w, &a)?,
        ReportFormat::Csv => {
            writeln!(w, "n,d,claw_free,f_vector,homology,conn_h,pi1,certified")?;
            writeln!(
                w,
                "{},{},{},\"{:?}\",\"{}\",{},{},{}",
                a.n,
                a.max_degree,
                a.claw_free,
                a.f_vector,
                a.homology,
                a.connectivity.conn_h,
                a.connectivity.pi1,
                a.connectivity.certified_topological
            )?;
        }
        ReportFormat::Text => {
            writeln!(w, "n={} d={} claw_free={}", a.n, a.max_degree, a.claw_free)?;
            writeln!(w, "f_vector={:?}", a.f_vector)?;
            writeln!(w, "folds={} reduced_to={}", a.folds.len(), a.reduced_vertices.len())?;
            writeln!(w, "homology: {}", a.homology)?;
            writeln!(
                w,
                "conn_h={} pi1={} certified_topological={}",
                a.connectivity.conn_h, a.connectivity.pi1, a.connectivity.certified_topological
            )?;
        }
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let suite: Suite = args.suite.parse()?;
    let mut ensemble: EnsembleSpec = args.ensemble.parse()?;
    if let Some(seed) = args.seed {
        ensemble.seed = seed;
    }
    let graph = match &args.graph {
        Some(name) => Some(NamedGraph {
            id: name.clone(),
            graph: load_graph(name)?,
        }),
        None => None,
    };
    let opts = SuiteOptions {
        ensemble,
        graph,
        ks: args.k.clone(),
        n_max: args.n_max,
        bound: args.kind.map(|k| match k {
            KindArg::ClawFree => BoundCheck::ClawFree,
            KindArg::General => BoundCheck::General,
        }),
        caps: args.caps.caps()?,
        tietze: args.caps.tietze(),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Error::input(format!("thread pool: {e}")))?;
    let records = pool.install(|| run_suite(suite, &opts))?;
    let summary = Summary::of(&records);
    let mut w = writer(&args.out)?;
    match args.format {
        ReportFormat::Json => {
            for r in &records {
                json_line(&mut *w, r)?;
            }
            #[derive(Serialize)]
            struct Line<'a> {
                suite: &'a str,
                summary: Summary,
            }
            json_line(
                &mut *w,
                &Line {
                    suite: &suite.to_string(),
                    summary,
                },
            )?;
        }
        ReportFormat::Csv => {
            writeln!(w, "{}", VerificationRecord::CSV_HEADER)?;
            for r in &records {
                writeln!(w, "{}", r.csv_row())?;
            }
            eprintln!("{}", summary_text(suite, &summary));
        }
        ReportFormat::Text => {
            for r in &records {
                let status = if r.skipped {
                    "SKIP"
                } else if r.pass {
                    "PASS"
                } else {
                    "FAIL"
                };
                let vertex = r.vertex.map(|u| format!(" u={u}")).unwrap_or_default();
                let claimed = r.claimed.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
                writeln!(
                    w,
                    "{status} {} {}{vertex} claimed={claimed} measured={}",
                    r.graph_id, r.check, r.measured
                )?;
            }
            writeln!(w, "{}", summary_text(suite, &summary))?;
        }
    }
    w.flush()?;
    Ok(if summary.fail > 0 {
        ExitCode::from(1)
    } else if summary.skip > 0 {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn summary_text(suite: Suite, s: &Summary) -> String {
    format!(
        "suite={suite} total={} pass={} fail={} skip={}",
        s.total, s.pass, s.fail, s.skip
    )
}

fn cmd_complex(args: &ComplexArgs) -> Outcome {
    let g = load_graph(&args.graph)?;
    let complex = independence_complex(&g, &args.caps.caps()?)?;
    let mut w = writer(&args.out)?;
    json_line(&mut *w, &complex.to_json())?;
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_fold(args: &FoldArgs) -> Outcome {
    let g = load_graph(&args.graph)?;
    let (sub, sequence) = fold_collapse(&g, args.v, args.w, &args.caps.caps()?)?;
    #[derive(Serialize)]
    struct Trace {
        removed: usize,
        kept: Vec<usize>,
        steps: clawtop::collapse::CollapseSequence,
    }
    let mut w = writer(&args.out)?;
    json_line(
        &mut *w,
        &Trace {
            removed: args.w,
            kept: sub.labels,
            steps: sequence,
        },
    )?;
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Complex(a) => cmd_complex(a),
        Command::Fold(a) => cmd_fold(a),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceCap(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
