//! `spcert` command-line front end.
//!
//! Exit codes: 0 success / accept, 1 reject / negative cycle / failed check,
//! 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use spcert::selftest::{run_sweep, SweepConfig};
use spcert::{
    bellman_ford, certify, gen_random_graph, inject_negative_cycle, mutate_certificate, parse_cert,
    parse_cert_any, parse_gr, run_scaling_bench, write_cert, write_gr, Certificate, GenMode,
    GenParams, Graph, GraphDocument, Mutation, MutationKind, Rejection, SolveOutcome, VerifyResult,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "spcert", version, about = "Verify single-source shortest-path certificates in linear time")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a distance certificate against a graph. Prints ACCEPT or REJECT.
    Verify {
        /// Graph in `.gr` format.
        #[arg(short, long)]
        graph: PathBuf,
        /// One-based source vertex; defaults to the graph's `s` line.
        #[arg(short, long)]
        source: Option<usize>,
        /// Certificate in `.cert` format.
        #[arg(short, long)]
        cert: PathBuf,
    },
    /// Compute distances with Bellman-Ford, or report a negative cycle.
    Solve {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        source: Option<usize>,
        /// Write the certificate here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a random graph in `.gr` format.
    Gen {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        m: usize,
        #[arg(long, default_value_t = -100, allow_hyphen_values = true)]
        wmin: i64,
        #[arg(long, default_value_t = 100, allow_hyphen_values = true)]
        wmax: i64,
        #[arg(long, value_enum, default_value_t = ModeArg::NoNegativeCycle)]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Append a negative cycle of this many vertices, reachable from vertex 1.
        #[arg(long)]
        negative_cycle: Option<usize>,
        /// One-based source to record in an `s` line.
        #[arg(short, long)]
        source: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Change one label of a certificate.
    Mutate {
        #[arg(short, long)]
        cert: PathBuf,
        #[arg(short, long, value_enum)]
        kind: KindArg,
        /// Delta for `perturb`, label for `inf-to-finite` and `corrupt-source`.
        #[arg(long, allow_hyphen_values = true)]
        value: Option<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// One-based source vertex.
        #[arg(short, long, default_value_t = 1)]
        source: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time certify against Bellman-Ford over a list of sizes.
    ///
    /// Prints a table, then CSV with columns n,m,certify_ns,bf_ns,speedup
    /// (one row per size; times are medians in nanoseconds, speedup is
    /// bf_ns / certify_ns).
    Bench {
        /// Comma-separated NxM pairs.
        #[arg(long, default_value = "10000x100000,10000x200000,10000x400000")]
        sizes: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 7)]
        reps: usize,
        /// Print only the CSV rows.
        #[arg(long)]
        csv: bool,
    },
    /// Run the randomized oracle-equivalence sweep.
    Selftest {
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        #[arg(long, default_value_t = 200)]
        negative_cycle_instances: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Unrestricted,
    NoNegativeCycle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Perturb,
    FiniteToInf,
    InfToFinite,
    CorruptSource,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<GraphDocument, Failure> {
    parse_gr(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn one_based(v: usize, n: usize) -> Result<usize, Failure> {
    if v == 0 || v > n {
        return Err(Failure(format!("source {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn resolve_source(doc: &GraphDocument, flag: Option<usize>) -> Result<usize, Failure> {
    match (flag, doc.source) {
        (Some(v), _) => one_based(v, doc.graph.n()),
        (None, Some(s)) => Ok(s),
        (None, None) => Err(Failure("no source: pass -s or add an `s` line to the graph".into())),
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(Failure::from),
    }
}

fn describe_rejection(g: &Graph, cert: &Certificate, r: &Rejection) -> String {
    match *r {
        Rejection::SourceNotZero { source } => {
            format!("SourceNotZero vertex {} label {}", source + 1, cert[source])
        }
        Rejection::RelaxationViolated { arc } => {
            let a = g.arcs()[arc];
            format!(
                "RelaxationViolated arc {} ({} -> {} weight {}): {} > {} + {}",
                arc + 1,
                a.tail + 1,
                a.head + 1,
                a.weight,
                cert[a.head],
                cert[a.tail],
                a.weight
            )
        }
        Rejection::FiniteButNotTightReachable { vertex } | Rejection::UnreachableNotInfinity { vertex } => {
            format!("{} vertex {} label {}", r.name(), vertex + 1, cert[vertex])
        }
    }
}

fn verify(out: &mut dyn Write, graph: &Path, source: Option<usize>, cert: &Path) -> CmdResult {
    let doc = load_graph(graph)?;
    let s = resolve_source(&doc, source)?;
    let cert = parse_cert(&read(cert)?, doc.graph.n())
        .map_err(|e| Failure(format!("{}: {e}", cert.display())))?;
    match certify(&doc.graph, s, &cert)? {
        VerifyResult::Accept => {
            writeln!(out, "ACCEPT")?;
            Ok(EXIT_OK)
        }
        VerifyResult::Reject(r) => {
            writeln!(out, "REJECT {}", describe_rejection(&doc.graph, &cert, &r))?;
            Ok(EXIT_REJECT)
        }
    }
}

fn solve(out: &mut dyn Write, graph: &Path, source: Option<usize>, output: Option<&Path>) -> CmdResult {
    let doc = load_graph(graph)?;
    let s = resolve_source(&doc, source)?;
    match bellman_ford(&doc.graph, s)? {
        SolveOutcome::Distances(cert) => {
            emit(out, output, &write_cert(&cert))?;
            if let Some(p) = output {
                writeln!(out, "SOLVED {} labels written to {}", cert.len(), p.display())?;
            }
            Ok(EXIT_OK)
        }
        SolveOutcome::NegativeCycle(w) => {
            let g = &doc.graph;
            let arcs: Vec<String> = w.arcs().iter().map(|a| (a + 1).to_string()).collect();
            let verts: Vec<String> = w.vertices(g).iter().map(|v| (v + 1).to_string()).collect();
            writeln!(
                out,
                "NEGATIVE_CYCLE weight {} arcs {} vertices {}",
                w.total_weight(g).unwrap_or_default(),
                arcs.join(" "),
                verts.join(" ")
            )?;
            Ok(EXIT_REJECT)
        }
    }
}

fn generate(
    out: &mut dyn Write,
    params: GenParams,
    negative_cycle: Option<usize>,
    source: Option<usize>,
    output: Option<&Path>,
) -> CmdResult {
    let mut graph = gen_random_graph(&params)?;
    if let Some(k) = negative_cycle {
        graph = inject_negative_cycle(&graph, k, params.seed)?;
    }
    let source = source.map(|v| one_based(v, graph.n())).transpose()?;
    emit(out, output, &write_gr(&GraphDocument { graph, source }))?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn mutate(
    out: &mut dyn Write,
    err: &mut dyn Write,
    cert: &Path,
    kind: KindArg,
    value: Option<i64>,
    seed: u64,
    source: usize,
    output: Option<&Path>,
) -> CmdResult {
    let c = parse_cert_any(&read(cert)?).map_err(|e| Failure(format!("{}: {e}", cert.display())))?;
    let s = one_based(source, c.len())?;
    let kind = match kind {
        KindArg::Perturb => MutationKind::PerturbFinite(value.unwrap_or(1)),
        KindArg::FiniteToInf => MutationKind::FiniteToInfinity,
        KindArg::InfToFinite => MutationKind::InfinityToFinite(value.unwrap_or(0)),
        KindArg::CorruptSource => MutationKind::CorruptSource(value.unwrap_or(1)),
    };
    match mutate_certificate(&c, s, kind, seed)? {
        Mutation::Applied { vertex, cert } => {
            emit(out, output, &write_cert(&cert))?;
            writeln!(err, "mutated vertex {}", vertex + 1)?;
            Ok(EXIT_OK)
        }
        Mutation::NoTargetAvailable => {
            writeln!(err, "no eligible vertex for {kind:?}")?;
            Ok(EXIT_REJECT)
        }
    }
}

fn parse_sizes(sizes: &str) -> Result<Vec<(usize, usize)>, Failure> {
    sizes.split(',')
        .map(|pair| {
            let (n, m) = pair
                .trim()
                .split_once(['x', 'X'])
                .ok_or_else(|| Failure(format!("size `{pair}` is not NxM")))?;
            Ok((n.trim().parse()?, m.trim().parse()?))
        })
        .collect()
}

fn bench(out: &mut dyn Write, sizes: &str, seed: u64, reps: usize, csv_only: bool) -> CmdResult {
    let report = run_scaling_bench(&parse_sizes(sizes)?, seed, reps)?;
    if !csv_only {
        write!(out, "{}", report.table())?;
        writeln!(out)?;
    }
    write!(out, "{}", report.csv())?;
    Ok(EXIT_OK)
}

fn selftest(out: &mut dyn Write, instances: usize, negative_cycle_instances: usize, seed: u64) -> CmdResult {
    let cfg = SweepConfig { instances, negative_cycle_instances, seed, ..SweepConfig::default() };
    let report = run_sweep(&cfg)?;
    writeln!(out, "{report}")?;
    if report.passed() {
        writeln!(out, "PASS")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "FAIL")?;
        Ok(EXIT_REJECT)
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Verify { graph, source, cert } => verify(out, &graph, source, &cert),
        Command::Solve { graph, source, output } => solve(out, &graph, source, output.as_deref()),
        Command::Gen { n, m, wmin, wmax, mode, seed, negative_cycle, source, output } => {
            let mode = match mode {
                ModeArg::Unrestricted => GenMode::Unrestricted,
                ModeArg::NoNegativeCycle => GenMode::NoNegativeCycle,
            };
            let params = GenParams { n, m, wmin, wmax, mode, seed };
            generate(out, params, negative_cycle, source, output.as_deref())
        }
        Command::Mutate { cert, kind, value, seed, source, output } => {
            mutate(out, err, &cert, kind, value, seed, source, output.as_deref())
        }
        Command::Bench { sizes, seed, reps, csv } => bench(out, &sizes, seed, reps, csv),
        Command::Selftest { instances, negative_cycle_instances, seed } => {
            selftest(out, instances, negative_cycle_instances, seed)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}
