use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use schubert_core::weyl::parse_word;
use schubert_core::{RootSystem, TypeDescriptor, WeylElement, WeylGroup};

mod commands;
mod table;

const AFTER_HELP: &str = "\
Simple roots are numbered as in the Cartan matrix (Bourbaki order):
  A_n, D_n, E_n  Bourbaki
  B_n            node 1 short, nodes 2..n long (B2: 1 = alpha short, 2 = beta long)
  C_n            node 1 long, nodes 2..n short
  F4             nodes 1,2 long, nodes 3,4 short
  G2             node 1 short (only with --allow-g2)
Words are comma-separated simple indices, applied left to right; \"\" is the identity.
Roots are coordinate vectors in the simple-root basis, e.g. 2,1 for 2*alpha_1 + alpha_2.";

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Singular loci of Schubert varieties", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the report to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Allow G2 factors. Smoothness verdicts there are marked unverified.
    #[arg(long, global = true)]
    allow_g2: bool,

    /// Worker threads for sweeps; 0 picks the number of cores.
    #[arg(long, env = "SCHUBERT_JOBS", default_value_t = 0, global = true)]
    jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Type descriptor such as A3, B2 or A2xB3.
    #[arg(long = "type", value_parser = parse_type)]
    pub descriptor: TypeDescriptor,
}

#[derive(Debug, Args)]
pub struct Target {
    #[command(flatten)]
    pub ty: TypeArg,
    /// Reduced or unreduced word for w.
    #[arg(long, value_parser = parse_word_arg)]
    pub word: Word,
}

#[derive(Debug, Args)]
pub struct PointTarget {
    #[command(flatten)]
    pub target: Target,
    /// Word for the fixed point x.
    #[arg(long, value_parser = parse_word_arg)]
    pub at: Word,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the roots with heights and lengths.
    Roots(TypeArg),
    /// Describe one Weyl group element.
    Element(Target),
    /// The Bruhat interval [e, w] with its covers.
    Interval(Target),
    /// Tangent weights of X(w) at x.
    TangentWeights {
        #[command(flatten)]
        point: PointTarget,
        /// Print the weights of the T-curves through x instead.
        #[arg(long, conflicts_with = "bounds")]
        curves: bool,
        /// Print lower and upper bounds for the tangent weights.
        #[arg(long)]
        bounds: bool,
    },
    /// Peterson translate along the T-curve from x up to y.
    #[command(group = ArgGroup::new("curve_spec").required(true))]
    Translate {
        #[command(flatten)]
        point: PointTarget,
        /// Upper endpoint y of the curve.
        #[arg(long, value_parser = parse_word_arg, group = "curve_spec")]
        from: Option<Word>,
        /// Positive root mu of the curve, y = r_mu x.
        #[arg(long, value_parser = parse_coords, group = "curve_spec", allow_hyphen_values = true)]
        curve: Option<Coords>,
    },
    /// Smoothness of X(w) at x.
    SmoothAt(PointTarget),
    /// Verdict at every fixed point and the maximal singular points.
    SingularLocus(Target),
    /// Rational smoothness of X(w), or at x with --at.
    RationallySmooth {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_parser = parse_word_arg)]
        at: Option<Word>,
    },
    /// Smoothness of X(w W_J) in G/P_J at x W_J.
    GpSmoothAt {
        #[command(flatten)]
        point: PointTarget,
        /// The parabolic subset J, comma-separated simple indices.
        #[arg(long, value_parser = parse_word_arg)]
        parabolic: Word,
    },
    /// One summary line per element of the Weyl group.
    Sweep {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        length: Option<usize>,
        #[arg(long)]
        max_length: Option<usize>,
        /// Refuse groups with more elements than this.
        #[arg(long, default_value_t = schubert_core::sweep::DEFAULT_BUDGET)]
        budget: usize,
    },
}

/// Comma-separated simple indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<usize>);

/// A root as coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coords(pub Vec<i32>);

fn parse_type(s: &str) -> Result<TypeDescriptor, String> {
    s.parse().map_err(|e: schubert_core::Error| e.to_string())
}

fn parse_word_arg(s: &str) -> Result<Word, String> {
    parse_word(s).map(Word).map_err(|e| e.to_string())
}

fn parse_coords(s: &str) -> Result<Coords, String> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    body.split(',')
        .map(|t| t.trim().parse::<i32>().map_err(|_| format!("bad root coordinates {s:?}")))
        .collect::<Result<_, _>>()
        .map(Coords)
}

/// Builds the group, honoring `--allow-g2`.
pub fn group(descriptor: &TypeDescriptor, allow_g2: bool) -> schubert_core::Result<WeylGroup> {
    Ok(WeylGroup::new(RootSystem::with_options(descriptor, allow_g2)?))
}

pub fn element(group: &WeylGroup, word: &[usize]) -> schubert_core::Result<WeylElement> {
    group.from_word(word)
}

enum Failure {
    Domain(schubert_core::Error),
    Io(io::Error),
}

impl From<schubert_core::Error> for Failure {
    fn from(e: schubert_core::Error) -> Self {
        Failure::Domain(e)
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| Failure::Io(io::Error::other(e)))
        .and_then(|pool| pool.install(|| commands::run(&cli).map_err(Failure::from)))
        .and_then(|text| emit(&cli, &text).map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
