//! Command-line front end. [`run`] parses arguments, performs one
//! subcommand and returns the process exit code.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::exact::{exact_boxicity, exact_poset_dimension, SolveLimits, LIMITS_ENV, POSET_LIMIT};
use crate::graph::{
    generate, min_acyclic_coloring, parse_coloring, parse_graph, parse_vertex_set, write_graph, Graph, Model,
    ACYCLIC_LIMIT,
};
use crate::interval::{parse_representation, verify_representation, write_representation};
use crate::pipelines::{bipartite_experiment, bound_report, edge_pipeline, surface_pipeline, Mode};
use crate::poset::{adjacency_poset, poset_dim_upper, write_poset};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SIZE_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "boxrep", version, about = "Certified box representations of graphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a random or structured graph.
    Gen(GenArgs),
    /// Build a verified box representation.
    Build(BuildArgs),
    /// Check a representation against a graph.
    Verify(VerifyArgs),
    /// Exact boxicity (and optionally adjacency-poset dimension).
    Exact(ExactArgs),
    /// Write the adjacency poset of a graph, or evaluate its dimension bound.
    Poset(PosetArgs),
    /// Table of closed-form bounds.
    Report(ReportArgs),
    /// Random bipartite edge-count experiment.
    Experiment(ExperimentArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Bipartite,
    Copm,
    Kdegen,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PipelineArg {
    Edge,
    Surface,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Paper,
    Reference,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    /// Side size (bipartite) or vertex count (kdegen).
    #[arg(long)]
    pub n: Option<usize>,
    /// Degeneracy (kdegen) or half the vertex count (copm).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value = "edge")]
    pub pipeline: PipelineArg,
    #[arg(long, value_enum, default_value = "reference")]
    pub mode: ModeArg,
    /// Euler genus declared for the surface pipeline.
    #[arg(long, default_value_t = 0)]
    pub genus: usize,
    /// Vertex set A for the surface pipeline, one id per line.
    #[arg(long = "A", value_name = "FILE")]
    pub a: Option<PathBuf>,
    /// Acyclic coloring of G - A; computed exactly when omitted.
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the pipeline trace here instead of standard error.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub rep: PathBuf,
}

#[derive(Args, Debug)]
pub struct ExactArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Also compute the dimension of the adjacency poset.
    #[arg(long)]
    pub poset: bool,
    /// Solver limits as `key=value,...`; overrides the environment.
    #[arg(long)]
    pub limits: Option<String>,
}

#[derive(Args, Debug)]
pub struct PosetArgs {
    #[arg(long, conflicts_with_all = ["box_dims", "chi"])]
    pub graph: Option<PathBuf>,
    #[arg(long, requires = "chi")]
    pub box_dims: Option<usize>,
    #[arg(long, requires = "box_dims")]
    pub chi: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[arg(long)]
    pub genus: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Args, Debug)]
pub struct ExperimentArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub limits: Option<String>,
}

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Lib(Error::SizeLimitExceeded { .. }) => EXIT_SIZE_LIMIT,
            Failure::Lib(Error::ConstructionFailed { .. }) | Failure::Invalid(_) => EXIT_INVALID,
            Failure::Lib(_) | Failure::Io(..) => EXIT_USAGE,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => format!("error: {e}"),
            Failure::Io(p, e) => format!("error: {}: {e}", p.display()),
            Failure::Invalid(s) => s.clone(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn read_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    Ok(parse_graph(&read(path)?)?)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(p.to_path_buf(), e)),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e)),
    }
}

fn limits(flag: Option<&str>) -> std::result::Result<SolveLimits, Failure> {
    let env = std::env::var(LIMITS_ENV).ok();
    Ok(SolveLimits::resolve(flag, env.as_deref())?)
}

fn gen(a: &GenArgs, out: &mut dyn Write) -> Outcome {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Failure::Lib(Error::InvalidParams(format!("--{name} is required for this model"))))
    };
    let model = match a.model {
        ModelArg::Bipartite => Model::Bipartite { n: need(a.n, "n")? },
        ModelArg::Copm => Model::Copm { k: need(a.k, "k")? },
        ModelArg::Kdegen => Model::Kdegen {
            n: need(a.n, "n")?,
            k: need(a.k, "k")?,
        },
    };
    let g = generate(model, a.seed)?;
    emit(out, a.out.as_deref(), &write_graph(&g))
}

fn build(a: &BuildArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g = read_graph(&a.graph)?;
    let (rep, trace) = match a.pipeline {
        PipelineArg::Edge => {
            let mode = match a.mode {
                ModeArg::Paper => Mode::Paper,
                ModeArg::Reference => Mode::Reference,
            };
            edge_pipeline(&g, mode, a.seed)?
        }
        PipelineArg::Surface => {
            let set = match &a.a {
                Some(p) => parse_vertex_set(&read(p)?, g.n())?,
                None => Vec::new(),
            };
            let rest: Vec<usize> = (0..g.n()).filter(|v| set.binary_search(v).is_err()).collect();
            let coloring = match &a.coloring {
                Some(p) => parse_coloring(&read(p)?, rest.len())?,
                None => min_acyclic_coloring(&g.induced(&rest), ACYCLIC_LIMIT)?,
            };
            surface_pipeline(&g, a.genus, &set, &coloring, a.seed)?
        }
    };
    match &a.trace {
        Some(p) => fs::write(p, trace.render()).map_err(|e| Failure::Io(p.clone(), e))?,
        None => err
            .write_all(trace.render().as_bytes())
            .map_err(|e| Failure::Io(PathBuf::from("<stderr>"), e))?,
    }
    emit(out, a.out.as_deref(), &write_representation(&rep))
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&a.graph)?;
    let rep = parse_representation(&read(&a.rep)?)?;
    let report = verify_representation(&g, &rep)?;
    if report.valid {
        emit(out, None, &format!("valid d={}\n", rep.d()))
    } else {
        Err(Failure::Invalid(report.to_string()))
    }
}

fn exact(a: &ExactArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&a.graph)?;
    let lim = limits(a.limits.as_deref())?;
    let b = exact_boxicity(&g, &lim)?;
    let mut text = format!("boxicity {b}\n");
    if a.poset {
        let p = adjacency_poset(&g);
        let d = exact_poset_dimension(p.poset(), POSET_LIMIT)?;
        text.push_str(&format!("poset_dimension {d}\n"));
    }
    emit(out, None, &text)
}

fn poset(a: &PosetArgs, out: &mut dyn Write) -> Outcome {
    if let Some(path) = &a.graph {
        let g = read_graph(path)?;
        return emit(out, a.out.as_deref(), &write_poset(adjacency_poset(&g).poset()));
    }
    match (a.box_dims, a.chi) {
        (Some(b), Some(c)) => emit(out, a.out.as_deref(), &format!("poset_dim_upper {}\n", poset_dim_upper(b, c)?)),
        _ => Err(Failure::Lib(Error::InvalidParams(
            "give --graph, or --box-dims together with --chi".into(),
        ))),
    }
}

fn report(a: &ReportArgs, out: &mut dyn Write) -> Outcome {
    let r = bound_report(a.n, a.m, a.genus, a.k)?;
    emit(out, None, &if a.csv { r.to_csv() } else { r.to_table() })
}

fn experiment(a: &ExperimentArgs, out: &mut dyn Write) -> Outcome {
    let lim = limits(a.limits.as_deref())?;
    let r = bipartite_experiment(a.n, a.trials, a.seed, &lim)?;
    emit(out, None, &r.render())
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let outcome = match &config.command {
        Command::Gen(a) => gen(a, out),
        Command::Build(a) => build(a, out, err),
        Command::Verify(a) => verify(a, out),
        Command::Exact(a) => exact(a, out),
        Command::Poset(a) => poset(a, out),
        Command::Report(a) => report(a, out),
        Command::Experiment(a) => experiment(a, out),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message());
            f.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("boxrep").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_copm() {
        let (code, out, _) = call(&["gen", "--model", "copm", "--k", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "4 4\n0 2\n0 3\n1 2\n1 3\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["gen", "--model", "nope"]).0, EXIT_USAGE);
        assert_eq!(call(&["gen", "--model", "kdegen", "--n", "5"]).0, EXIT_USAGE);
        assert_eq!(call(&["report", "--n", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["poset"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn report_and_bound() {
        let (code, out, _) = call(&["report", "--n", "50", "--m", "100", "--csv"]);
        assert_eq!(code, 0);
        assert!(out.contains("826.246"));
        let (code, out, _) = call(&["poset", "--box-dims", "42", "--chi", "7"]);
        assert_eq!(code, 0);
        assert_eq!(out, "poset_dim_upper 95\n");
    }
}
