//! The `ccoal` command line.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use coalition_core::generators::{generate, Family};
use coalition_core::matrix::{edge_domination_matrix_ordered, EdgeCover, EdgeOrder};
use coalition_core::{
    cc_number_with, check_cc_equals_n, check_cc_equals_n_minus_1, coalition_graph,
    connected_domatic_number, gamma_c, in_family_f, CcOptions, Graph, Variant, DEFAULT_GUARD,
};
use serde_json::{json, Value};

use crate::formats::{emit_edge_list, emit_graph6, parse_partition, read_graphs, FormatError, InputFormat};
use crate::harness::{
    decision_json, pair_witness_json, run_plan, run_theorem_suite, Corpus, HarnessError, TheoremId,
    VerifyPlan,
};

pub const GUARD_ENV: &str = "CC_GUARD_N";

pub mod exit {
    pub const OK: i32 = 0;
    pub const NO: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    pub const GUARD: i32 = 4;
}

#[derive(Debug, Parser)]
#[command(name = "ccoal", version, about = "Connected coalition numbers of small graphs")]
pub struct Cli {
    /// Output mode.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    pub output: OutputMode,
    /// Graph format of the input, and of the output of `gen`; inputs are inferred when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<InputFormat>,
    /// Largest order for the exhaustive searches (overrides CC_GUARD_N).
    #[arg(long, global = true)]
    pub guard_n: Option<usize>,
    /// Exit with 1 when a decision answers no.
    #[arg(long, global = true)]
    pub status_exit: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Paper,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    /// Rows ordered by larger endpoint, then by smaller endpoint descending.
    HigherEndpoint,
    /// Rows ordered by (u, v).
    Lexicographic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoronaFactor {
    K1,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact CC(G) with a witness partition.
    Cc { input: String },
    /// Decide CC(G) = n with the edge-domination matrix.
    CheckN { input: String },
    /// Decide CC(G) = n - 1.
    CheckN1 {
        input: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Strict)]
        variant: VariantArg,
    },
    /// Membership in the peelable family F, with the peel trace.
    FamilyF { input: String },
    /// Connected domination number with a minimum witness.
    GammaC { input: String },
    /// Connected domatic number with a witness partition.
    Domatic { input: String },
    /// Generate a standard graph: path N, cycle N, complete N, complete_bipartite R S, star K, friendship K.
    Gen {
        family: Family,
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Corona product with K1, as graph6.
    Corona {
        input: String,
        #[arg(value_enum)]
        factor: CoronaFactor,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coalition graph of a cc-partition, as graph6.
    Ccg {
        input: String,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Edge-domination matrix dump.
    DumpMatrix {
        input: String,
        #[arg(long, value_enum, default_value_t = OrderArg::HigherEndpoint)]
        order: OrderArg,
    },
    /// Check every registered theorem on exhaustive corpora.
    Verify(VerifyArgs),
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long)]
    pub connected_only: bool,
    /// Comma-separated ids or names, e.g. T1,T5.
    #[arg(long)]
    pub theorems: Option<String>,
    /// Check the graphs of a graph6 file instead of the generated corpora.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Allow labeled corpora with n = 7 or 8.
    #[arg(long)]
    pub deep: bool,
    #[arg(long, default_value_t = 7)]
    pub tree_n_max: usize,
    #[arg(long, default_value_t = 5)]
    pub corona_h_max: usize,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] coalition_core::Error),
    #[error(transparent)]
    Harness(#[from] HarnessError),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => exit::USAGE,
            CliError::Format(FormatError::Graph(e)) | CliError::Core(e) => core_code(e),
            CliError::Format(_) => exit::USAGE,
            CliError::Harness(HarnessError::Core(e)) => core_code(e),
            CliError::Harness(e) if e.is_guard() => exit::GUARD,
            CliError::Harness(HarnessError::Format(_) | HarnessError::UnknownTheorem(_) | HarnessError::Corpus(_)) => {
                exit::USAGE
            }
            CliError::Harness(_) => exit::PRECONDITION,
        }
    }
}

fn core_code(e: &coalition_core::Error) -> i32 {
    match e {
        e if e.is_guard() => exit::GUARD,
        coalition_core::Error::InvalidParams { .. } => exit::USAGE,
        _ => exit::PRECONDITION,
    }
}

/// Process-independent entry point: parses `args`, reads `stdin` for `-`
/// inputs and returns the exit code.
pub fn run<I, T>(
    args: I,
    env_guard: Option<String>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        cli: &cli,
        guard: DEFAULT_GUARD,
        stdin,
        out: String::new(),
        any_no: false,
    };
    let result = resolve_guard(cli.guard_n, env_guard).and_then(|g| {
        ctx.guard = g;
        dispatch(&mut ctx)
    });
    let _ = stdout.write_all(ctx.out.as_bytes());
    match result {
        Ok(code) if code != exit::OK => code,
        Ok(_) if cli.status_exit && ctx.any_no => exit::NO,
        Ok(_) => exit::OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code()
        }
    }
}

fn resolve_guard(flag: Option<usize>, env: Option<String>) -> Result<usize, CliError> {
    if let Some(g) = flag {
        return Ok(g);
    }
    match env {
        None => Ok(DEFAULT_GUARD),
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{GUARD_ENV} must be a non-negative integer, got {s:?}"))),
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    guard: usize,
    stdin: &'a mut dyn Read,
    out: String,
    any_no: bool,
}

impl Ctx<'_> {
    fn json(&self) -> bool {
        self.cli.output == OutputMode::Json
    }

    fn read_input(&mut self, input: &str) -> Result<Vec<Graph>, CliError> {
        let text = if input == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
            s
        } else {
            read_file(Path::new(input))?
        };
        let format = self
            .cli
            .format
            .or_else(|| (input != "-").then(|| InputFormat::from_path(Path::new(input))).flatten())
            .unwrap_or_else(|| InputFormat::sniff(&text));
        let graphs = read_graphs(&text, format)?;
        if graphs.is_empty() {
            return Err(CliError::Usage(format!("{input}: no graphs in input")));
        }
        Ok(graphs)
    }

    fn emit(&mut self, json: Value, text: String) {
        if self.json() {
            self.out.push_str(&json.to_string());
            self.out.push('\n');
        } else {
            self.out.push_str(&text);
            if !text.ends_with('\n') {
                self.out.push('\n');
            }
        }
    }

    fn graph_text(&self, g: &Graph, format: InputFormat) -> Result<String, CliError> {
        Ok(match format {
            InputFormat::Graph6 => emit_graph6(g)? + "\n",
            InputFormat::Edgelist => emit_edge_list(g),
        })
    }

    fn write_graph(&mut self, g: &Graph, out: Option<&Path>) -> Result<(), CliError> {
        let text = self.graph_text(g, self.cli.format.unwrap_or(InputFormat::Graph6))?;
        match out {
            Some(path) => write_file(path, &text),
            None => {
                self.out.push_str(&text);
                Ok(())
            }
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn lists_text(lists: &[Vec<usize>]) -> String {
    serde_json::to_string(lists).expect("integer lists")
}

fn cover_json(c: &EdgeCover) -> Value {
    json!(c.edges.iter().map(|(x, e)| json!([x, [e.u(), e.v()]])).collect::<Vec<_>>())
}

fn decision_text(d: &Value) -> String {
    if d["answer"] == true {
        format!("yes {}", d["witness"])
    } else {
        format!("no {}", d["refutation"])
    }
}

fn dispatch(ctx: &mut Ctx) -> Result<i32, CliError> {
    let cli = ctx.cli;
    match &cli.command {
        Command::Cc { input } => {
            let opts = CcOptions {
                guard: ctx.guard,
                ..CcOptions::default()
            };
            for g in ctx.read_input(input)? {
                let r = cc_number_with(&g, &opts)?;
                let witness = r.witness.map(|w| w.to_lists());
                let text = match &witness {
                    Some(w) => format!("cc={} witness={}", r.cc, lists_text(w)),
                    None => format!("cc={} witness=none", r.cc),
                };
                ctx.emit(json!({"n": g.n(), "cc": r.cc, "witness": witness}), text);
            }
        }
        Command::CheckN { input } => {
            for g in ctx.read_input(input)? {
                let d = decision_json(&check_cc_equals_n(&g)?, cover_json);
                ctx.any_no |= d["answer"] == false;
                let text = decision_text(&d);
                ctx.emit(d, text);
            }
        }
        Command::CheckN1 { input, variant } => {
            let variant = match variant {
                VariantArg::Paper => Variant::Paper,
                VariantArg::Strict => Variant::Strict,
            };
            for g in ctx.read_input(input)? {
                let mut d = decision_json(&check_cc_equals_n_minus_1(&g, variant)?, pair_witness_json);
                d["variant"] = json!(variant.name());
                ctx.any_no |= d["answer"] == false;
                let text = decision_text(&d);
                ctx.emit(d, text);
            }
        }
        Command::FamilyF { input } => {
            for g in ctx.read_input(input)? {
                let v = in_family_f(&g)?;
                ctx.any_no |= !v.member;
                let peel: Vec<usize> = v.trace.steps.iter().map(|s| s.vertex).collect();
                let steps: Vec<Value> = v
                    .trace
                    .steps
                    .iter()
                    .map(|s| json!({"vertex": s.vertex, "remaining": s.remaining}))
                    .collect();
                let text = format!(
                    "member={} terminal={} peel={:?}",
                    v.member,
                    v.trace.terminal.name(),
                    peel
                );
                ctx.emit(
                    json!({"member": v.member, "terminal": v.trace.terminal.name(), "peel": steps}),
                    text,
                );
            }
        }
        Command::GammaC { input } => {
            for g in ctx.read_input(input)? {
                let (k, w) = gamma_c(&g)?;
                let w = w.to_vec();
                let text = format!("gamma_c={k} witness={w:?}");
                ctx.emit(json!({"gamma_c": k, "witness": w}), text);
            }
        }
        Command::Domatic { input } => {
            for g in ctx.read_input(input)? {
                let (k, d) = connected_domatic_number(&g, ctx.guard)?;
                let w = d.as_partition().to_lists();
                let text = format!("d_c={k} witness={}", lists_text(&w));
                ctx.emit(json!({"d_c": k, "witness": w}), text);
            }
        }
        Command::Gen { family, params, out } => {
            let g = generate(*family, params)?;
            ctx.write_graph(&g, out.as_deref())?;
        }
        Command::Corona { input, factor: CoronaFactor::K1, out } => {
            let graphs = ctx.read_input(input)?;
            let mut text = String::new();
            for g in graphs {
                text.push_str(&ctx.graph_text(&g.corona(&Graph::empty(1))?, InputFormat::Graph6)?);
            }
            match out {
                Some(path) => write_file(path, &text)?,
                None => ctx.out.push_str(&text),
            }
        }
        Command::Ccg { input, partition } => {
            let json_text = read_file(partition)?;
            for g in ctx.read_input(input)? {
                let psi = parse_partition(g.n(), &json_text)?;
                let ccg = coalition_graph(&g, &psi)?;
                let g6 = emit_graph6(&ccg.graph)?;
                let edges: Vec<[usize; 2]> = ccg.graph.edges().iter().map(|e| [e.u(), e.v()]).collect();
                ctx.emit(json!({"graph6": g6, "parts": ccg.graph.n(), "edges": edges}), g6.clone());
            }
        }
        Command::DumpMatrix { input, order } => {
            let order = match order {
                OrderArg::HigherEndpoint => EdgeOrder::HigherEndpoint,
                OrderArg::Lexicographic => EdgeOrder::Lexicographic,
            };
            for g in ctx.read_input(input)? {
                let m = edge_domination_matrix_ordered(&g, order)?;
                let rows: Vec<&[u8]> = (0..m.rows()).map(|i| m.row(i)).collect();
                let edges: Vec<[usize; 2]> = m.edges().iter().map(|e| [e.u(), e.v()]).collect();
                ctx.emit(
                    json!({"rows": m.rows(), "cols": m.cols(), "edges": edges, "matrix": rows}),
                    m.dump(),
                );
            }
        }
        Command::Verify(args) => return verify(ctx, args),
    }
    Ok(exit::OK)
}

fn verify(ctx: &mut Ctx, args: &VerifyArgs) -> Result<i32, CliError> {
    let theorems = match &args.theorems {
        Some(list) => TheoremId::parse_list(list)?,
        None => TheoremId::ALL.to_vec(),
    };
    if theorems.is_empty() {
        return Err(CliError::Usage("--theorems names no theorem".into()));
    }
    let report = match &args.corpus {
        Some(path) => {
            let text = read_file(path)?;
            let graphs = read_graphs(&text, InputFormat::Graph6)?;
            let corpus = Corpus::from_graphs(&path.display().to_string(), false, graphs);
            run_theorem_suite(&corpus, &theorems, ctx.guard)?
        }
        None => {
            if args.n_max > 6 && !args.deep {
                return Err(CliError::Usage(format!(
                    "--n-max {} needs --deep (default exhaustive depth is n <= 6)",
                    args.n_max
                )));
            }
            run_plan(&VerifyPlan {
                n_min: args.n_min,
                n_max: args.n_max,
                connected_only: args.connected_only,
                allow_extended: args.deep,
                tree_n_max: args.tree_n_max,
                corona_h_max: args.corona_h_max,
                theorems,
                guard: ctx.guard,
            })?
        }
    };
    if let Some(path) = &args.out {
        write_file(path, &(report.to_json() + "\n"))?;
    }
    if ctx.json() {
        ctx.out.push_str(&report.to_json());
        ctx.out.push('\n');
    } else {
        ctx.out.push_str(&report.summary_table());
    }
    Ok(if report.passed() { exit::OK } else { exit::NO })
}
