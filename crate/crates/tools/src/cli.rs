//! The `cyclic` command line.
//!
//! Every subcommand prints one JSON document on stdout and a short summary
//! on stderr (suppressed by `--quiet`). Exit codes: 0 success, 1 I/O or
//! parse failure, 2 usage error, 3 domain error, 4 oracle size limit or
//! random generation failure.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclic_core::bounds::{self, certify_with_known_cuts};
use cyclic_core::cyccut::{self, DEFAULT_MAX_N};
use cyclic_core::generators::{self, RANDOM_REGULAR_ALGORITHM};
use cyclic_core::spectral::{self, DEFAULT_TOL};
use cyclic_core::Edge;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::edgelist::{self, EdgeListFile, ParseError};
use crate::report::{
    AnalysisReport, CertifyJson, CutCheckJson, EpsilonJson, FindCycleJson, LabelsJson, MixingJson,
    MooreJson, OracleJson,
};

#[derive(Debug, Parser)]
#[command(name = "cyclic", version, about = "Cyclic edge-connectivity toolkit")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Absolute eigenvalue tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Largest vertex count the exhaustive oracles accept.
    #[arg(long = "max-n", global = true, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph family as an edge list.
    Generate(GenerateArgs),
    /// Structural and spectral summary of a graph.
    Analyze { file: PathBuf },
    /// Certify cyclic edge-connectivity of a regular graph.
    Certify {
        file: PathBuf,
        /// Extra candidate cut, e.g. "32-40,33-41"; may be repeated.
        #[arg(long)]
        cut: Vec<String>,
    },
    /// Exact value by exhaustive bipartition search.
    Oracle {
        file: PathBuf,
        /// Minimum component size instead of the cycle condition.
        #[arg(long = "min-side")]
        min_side: Option<usize>,
    },
    /// Check whether an edge set is a cyclic cut.
    CutCheck {
        file: PathBuf,
        /// Comma-separated edges "u1-v1,u2-v2,...".
        #[arg(long)]
        edges: String,
    },
    /// Find a girth cycle whose boundary is a cyclic cut.
    FindCycle { file: PathBuf },
    /// Evaluate closed-form bounds.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Randomized check of the expander mixing inequality.
    MixingTest {
        file: PathBuf,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cycle,
    Complete,
    CompleteBipartite,
    Wheel,
    K3tPlus,
    Hypercube,
    Petersen,
    Heawood,
    Example48,
    RandomRegular,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    pub family: Family,
    /// Family parameters: cycle N | complete N | complete-bipartite S T |
    /// wheel N | k3t-plus T | hypercube K | random-regular N D.
    pub params: Vec<usize>,
    /// Inner edges for k3t-plus, e.g. "0-1,1-2".
    #[arg(long, default_value = "")]
    pub inner: String,
    /// Minimum girth for random-regular.
    #[arg(long = "girth-min", default_value_t = 3)]
    pub girth_min: usize,
    /// Attempt budget for random-regular.
    #[arg(long = "max-tries", default_value_t = 10_000)]
    pub max_tries: u64,
    /// Output file; stdout when absent.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// Write the example48 vertex groups as JSON to this file.
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum BoundCommand {
    /// Irregular Moore bound n0(d, g).
    Moore {
        #[arg(long)]
        d: f64,
        #[arg(long)]
        g: usize,
    },
    /// Size-restricted cut lower bound for even girth.
    Prop22 {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        k: usize,
    },
    /// The odd-girth quadratic and its positive root.
    Epsilon {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        g: usize,
    },
    /// The spectral condition for the (d-2)g lower bound.
    Condition {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Domain(#[from] cyclic_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 1,
            CliError::Usage(_) => 2,
            CliError::Domain(
                cyclic_core::Error::TooLarge { .. } | cyclic_core::Error::GenerationFailed { .. },
            ) => 4,
            CliError::Domain(_) => 3,
        }
    }
}

/// Output of one command: the JSON document and a one-line summary.
pub struct Outcome {
    pub json: Value,
    pub summary: String,
}

fn outcome(value: impl Serialize, summary: String) -> Outcome {
    Outcome {
        json: serde_json::to_value(value).expect("report types serialize"),
        summary,
    }
}

fn load(path: &Path) -> Result<EdgeListFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    edgelist::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Parses "u-v,u-v,...". Empty input yields no edges.
pub fn parse_edge_spec(spec: &str) -> Result<Vec<Edge>, CliError> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (u, v) = item
                .split_once('-')
                .ok_or_else(|| CliError::Usage(format!("edge {item:?} is not of the form u-v")))?;
            let id = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad vertex id in edge {item:?}")))
            };
            Ok((id(u)?, id(v)?))
        })
        .collect()
}

fn expect_params(family: Family, params: &[usize], count: usize) -> Result<(), CliError> {
    if params.len() != count {
        return Err(CliError::Usage(format!(
            "{family:?} takes {count} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn generate(args: &GenerateArgs, seed: u64) -> Result<Outcome, CliError> {
    use Family::*;
    let p = &args.params;
    let arity = match args.family {
        Petersen | Heawood | Example48 => 0,
        Cycle | Complete | Wheel | K3tPlus | Hypercube => 1,
        CompleteBipartite | RandomRegular => 2,
    };
    expect_params(args.family, p, arity)?;
    if args.labels.is_some() && args.family != Example48 {
        return Err(CliError::Usage("--labels only applies to example48".into()));
    }
    let mut labels = None;
    let (graph, provenance) = match args.family {
        Cycle => (
            generators::cycle(p[0])?,
            json!({"family": "cycle", "params": {"n": p[0]}}),
        ),
        Complete => (
            generators::complete(p[0])?,
            json!({"family": "complete", "params": {"n": p[0]}}),
        ),
        CompleteBipartite => (
            generators::complete_bipartite(p[0], p[1])?,
            json!({"family": "complete-bipartite", "params": {"s": p[0], "t": p[1]}}),
        ),
        Wheel => (
            generators::wheel(p[0])?,
            json!({"family": "wheel", "params": {"n": p[0]}}),
        ),
        K3tPlus => {
            let inner = parse_edge_spec(&args.inner)?;
            let listed: Vec<[usize; 2]> = inner.iter().map(|&(u, v)| [u, v]).collect();
            (
                generators::k3t_plus(p[0], &inner)?,
                json!({"family": "k3t-plus", "params": {"t": p[0], "inner_edges": listed}}),
            )
        }
        Hypercube => {
            let k =
                u32::try_from(p[0]).map_err(|_| CliError::Usage("dimension too large".into()))?;
            (
                generators::hypercube(k)?,
                json!({"family": "hypercube", "params": {"k": k}}),
            )
        }
        Petersen => (generators::petersen(), json!({"family": "petersen"})),
        Heawood => (generators::heawood(), json!({"family": "heawood"})),
        Example48 => {
            let (g, l) = generators::example48()?;
            labels = Some(l);
            (g, json!({"family": "example48"}))
        }
        RandomRegular => (
            generators::random_regular(p[0], p[1], args.girth_min, seed, args.max_tries)?,
            json!({
                "family": "random-regular",
                "params": {"n": p[0], "d": p[1], "girth_min": args.girth_min, "max_tries": args.max_tries},
                "seed": seed,
                "algorithm": RANDOM_REGULAR_ALGORITHM,
            }),
        ),
    };
    let text = edgelist::write(&graph, Some(&provenance));
    let mut report = json!({
        "n": graph.n(),
        "m": graph.m(),
        "provenance": provenance,
    });
    if let (Some(path), Some(l)) = (&args.labels, &labels) {
        let body = serde_json::to_string_pretty(&LabelsJson::from(l)).expect("labels serialize");
        write_file(path, &(body + "\n"))?;
        report["labels"] = json!(path);
    }
    let summary = format!("{:?}: n={} m={}", args.family, graph.n(), graph.m());
    match &args.output {
        Some(path) => {
            write_file(path, &text)?;
            report["output"] = json!(path);
            Ok(Outcome {
                json: report,
                summary,
            })
        }
        // the edge list itself is the stdout document
        None => Ok(Outcome {
            json: Value::String(text),
            summary,
        }),
    }
}

fn bound(cmd: &BoundCommand) -> Result<Outcome, CliError> {
    match *cmd {
        BoundCommand::Moore { d, g } => {
            let m = bounds::moore_bound(d, g)?;
            Ok(outcome(
                MooreJson::from(&m),
                format!("n0({d}, {g}) = {}", m.value),
            ))
        }
        BoundCommand::Prop22 { d, lambda, g, k } => {
            let v = bounds::prop22_lower(d, lambda, g, k)?;
            Ok(outcome(
                json!({"d": d, "lambda": crate::report::sig12(lambda), "g": g, "k": k,
                       "value": crate::report::sig12(v)}),
                format!("size-{k} cut >= {v}"),
            ))
        }
        BoundCommand::Epsilon { d, g } => {
            let a = bounds::epsilon_analysis(d, g)?;
            Ok(outcome(
                EpsilonJson::from(&a),
                format!("epsilon* = {}", a.epsilon_star),
            ))
        }
        BoundCommand::Condition { d, g, lambda } => {
            let v = bounds::spectral_condition(d, g, lambda)?;
            let summary = format!("{:?}: lhs={} rhs={}", v.outcome, v.lhs, v.rhs);
            Ok(outcome(crate::report::ConditionJson::from(&v), summary))
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = &cli.global;
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    match &cli.command {
        Command::Generate(args) => generate(args, opts.seed),
        Command::Analyze { file } => {
            let f = load(file)?;
            let summary = if f.graph.n() > 0 {
                Some(spectral::spectrum(&f.graph, opts.tol)?)
            } else {
                None
            };
            let report = AnalysisReport::new(&f.graph, summary.as_ref(), opts.tol, f.provenance);
            let line = format!(
                "n={} m={} girth={} lambda2={:?}",
                report.n, report.m, report.girth, report.lambda2
            );
            Ok(outcome(report, line))
        }
        Command::Certify { file, cut } => {
            let f = load(file)?;
            let cuts = cut
                .iter()
                .map(|c| parse_edge_spec(c))
                .collect::<Result<Vec<_>, _>>()?;
            let r = certify_with_known_cuts(&f.graph, &cuts)?;
            let line = format!("verdict {:?}", r.verdict);
            Ok(outcome(CertifyJson::from(&r), line))
        }
        Command::Oracle { file, min_side } => {
            let f = load(file)?;
            let r = match min_side {
                Some(k) => cyccut::size_cut_oracle(&f.graph, *k, opts.max_n)?,
                None => cyccut::cec_oracle(&f.graph, opts.max_n)?,
            };
            let line = format!("{:?} {:?} ({} bipartitions)", r.status, r.value, r.explored);
            Ok(outcome(OracleJson::new(&r, *min_side), line))
        }
        Command::CutCheck { file, edges } => {
            let f = load(file)?;
            let s = parse_edge_spec(edges)?;
            let v = cyccut::validate_cyclic_cut(&f.graph, &s)?;
            let size = {
                let mut norm: Vec<Edge> = s
                    .iter()
                    .map(|&(u, v)| cyclic_core::graph::edge(u, v))
                    .collect();
                norm.sort_unstable();
                norm.dedup();
                norm.len()
            };
            let line = format!(
                "valid={} size={size} components={}",
                v.valid,
                v.components.len()
            );
            Ok(outcome(CutCheckJson::new(&v, size), line))
        }
        Command::FindCycle { file } => {
            let f = load(file)?;
            let s = cyccut::find_separating_girth_cycle(&f.graph)?;
            let line = format!("cycle {:?}, cut size {}", s.cycle, s.cut.size);
            Ok(outcome(FindCycleJson::from(&s), line))
        }
        Command::Bound(cmd) => bound(cmd),
        Command::MixingTest { file, trials } => {
            let f = load(file)?;
            let r = spectral::mixing_fuzz(&f.graph, *trials, opts.seed)?;
            let line = format!("{} failures in {} trials", r.failures, r.trials);
            Ok(outcome(MixingJson::from(&r), line))
        }
    }
}

/// Runs the tool on `argv` (including the program name), writing to the
/// given streams, and returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            match &out.json {
                Value::String(text) => {
                    let _ = write!(stdout, "{text}");
                }
                doc => {
                    let body = serde_json::to_string_pretty(doc).expect("json value serializes");
                    let _ = writeln!(stdout, "{body}");
                }
            }
            if !cli.global.quiet {
                let _ = writeln!(stderr, "{}", out.summary);
            }
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_specs() {
        assert_eq!(parse_edge_spec("1-2, 3-4").unwrap(), vec![(1, 2), (3, 4)]);
        assert!(parse_edge_spec("").unwrap().is_empty());
        assert!(matches!(parse_edge_spec("1:2"), Err(CliError::Usage(_))));
        assert!(matches!(parse_edge_spec("a-2"), Err(CliError::Usage(_))));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage(String::new()).exit_code(), 2);
        assert_eq!(
            CliError::Domain(cyclic_core::Error::RegularityRequired).exit_code(),
            3
        );
        assert_eq!(
            CliError::Domain(cyclic_core::Error::TooLarge { n: 48, max_n: 20 }).exit_code(),
            4
        );
        assert_eq!(
            CliError::Domain(cyclic_core::Error::GenerationFailed { tries: 1 }).exit_code(),
            4
        );
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["cyclic", "frobnicate"], &mut out, &mut err), 2);
        assert!(!err.is_empty());
        assert_eq!(run(["cyclic", "analyze"], &mut out, &mut err), 2);
    }
}
