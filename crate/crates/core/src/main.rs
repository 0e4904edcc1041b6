use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use qdepth::families::{ci_symmetry, qdepth_veronese, veronese::qdepth_veronese_quotient, ConjectureScan};
use qdepth::poset::{alpha_quotient_pair, enumeration_cap};
use qdepth::sdepth::DEFAULT_SDEPTH_CAP;
use qdepth::{
    alpha_vector, beta_table, build_poset, parse_ideal, polarize, polarize_pair, qdepth as qdepth_pair, random,
    sdepth, selftest, Error, MonomialIdeal,
};

#[derive(Parser)]
#[command(name = "qdepth", version, about = "Quasi depth and Stanley depth of monomial ideal quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quasi depth of S/I, I, or J/I
    Qdepth(IdealArgs),
    /// Stanley depth by exhaustive interval-partition search
    Sdepth {
        #[command(flatten)]
        input: IdealArgs,
        /// Largest ambient size (after polarization) to search
        #[arg(long, default_value_t = DEFAULT_SDEPTH_CAP)]
        cap: usize,
    },
    /// α-vector of the (polarized) quotient
    Alpha(IdealArgs),
    /// β-table at a given depth
    Beta {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long)]
        d: usize,
    },
    /// Polarize an ideal
    Polarize {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        text: IdealText,
    },
    /// Quasi depth of the squarefree Veronese ideal J_{n,m} and of S/J_{n,m}
    Veronese {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Scan E(m,q,t,mq+m+q) >= 0 over a grid
    #[command(name = "scan-E", alias = "scan-e")]
    ScanE {
        #[arg(long, default_value_t = 6)]
        m_max: usize,
        #[arg(long, default_value_t = 12)]
        q_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Skip cells up to and including this key, given as m,q,t
        #[arg(long, value_parser = parse_key)]
        resume_after: Option<(usize, usize, usize)>,
    },
    /// β-symmetry of complete intersections
    CiSymmetry {
        /// Ambient size for a single check
        #[arg(long, required_unless_present = "n_max")]
        n: Option<usize>,
        /// Generator degrees, comma separated
        #[arg(long, value_delimiter = ',', required_unless_present = "n_max")]
        degs: Vec<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Scan every degree sequence with full support for n <= n_max
        #[arg(long, conflicts_with_all = ["n", "degs", "d"])]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 4, requires = "n_max")]
        m_max: usize,
    },
    /// Run golden checks and seeded property suites
    Selftest {
        #[arg(long, default_value_t = random::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModuleArg {
    Quotient,
    Ideal,
    Pair,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct IdealText {
    /// Generators, e.g. "x1^2, x1*x2^2"
    #[arg(long)]
    ideal: Option<String>,
    /// File with the generators
    #[arg(long)]
    ideal_file: Option<PathBuf>,
}

#[derive(Args)]
struct IdealArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    text: IdealText,
    #[arg(long, value_enum, default_value_t = ModuleArg::Quotient)]
    module: ModuleArg,
    /// Upper ideal J for --module pair
    #[arg(long, required_if_eq("module", "pair"))]
    j_ideal: Option<String>,
}

fn parse_key(s: &str) -> Result<(usize, usize, usize), String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [m, q, t] => Ok((m, q, t)),
        _ => Err("expected m,q,t".into()),
    }
}

enum Failure {
    Lib(Error),
    Io(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Io(_) => 2,
            Failure::Lib(e) if e.is_parse() => 2,
            Failure::Lib(e) if e.is_resource() => 4,
            Failure::Lib(Error::Contradiction(_)) => 1,
            Failure::Lib(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(m) | Failure::Check(m) => f.write_str(m),
        }
    }
}

type Out<'a> = &'a mut dyn Write;

fn emit<T: Serialize>(out: Out, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Failure::Io(e.to_string()))
}

fn line(out: Out, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::Io(e.to_string()))
}

fn read_text(text: &IdealText) -> Result<String, Failure> {
    match (&text.ideal, &text.ideal_file) {
        (Some(t), _) => Ok(t.clone()),
        (None, Some(p)) => {
            std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("cannot read {}: {e}", p.display())))
        }
        (None, None) => unreachable!("clap requires one of the two"),
    }
}

/// `(J, I)` for the selected module.
fn pair(args: &IdealArgs) -> Result<(MonomialIdeal, MonomialIdeal), Failure> {
    let i = parse_ideal(&read_text(&args.text)?, args.n)?;
    Ok(match args.module {
        ModuleArg::Quotient => (MonomialIdeal::unit(args.n)?, i),
        ModuleArg::Ideal => (i, MonomialIdeal::zero(args.n)?),
        ModuleArg::Pair => {
            let j = parse_ideal(args.j_ideal.as_deref().expect("required by clap"), args.n)?;
            (j, i)
        }
    })
}

fn polarized_alpha(args: &IdealArgs) -> Result<(qdepth::AlphaVector, usize, &'static str), Failure> {
    let (j, i) = pair(args)?;
    if !i.is_subset_of(&j) {
        return Err(Error::NotContained.into());
    }
    let p = polarize_pair(&j, &i)?;
    if p.upper.n() <= enumeration_cap() {
        Ok((alpha_vector(&build_poset(&p.upper, &p.lower)?), p.added, "enumeration"))
    } else {
        Ok((alpha_quotient_pair(&p.upper, &p.lower)?, p.added, "inclusion-exclusion"))
    }
}

fn run(cmd: Command, out: Out) -> Result<(), Failure> {
    match cmd {
        Command::Qdepth(args) => {
            let (j, i) = pair(&args)?;
            emit(out, &qdepth_pair(&j, &i)?)
        }
        Command::Sdepth { input, cap } => {
            let (j, i) = pair(&input)?;
            emit(out, &sdepth(&j, &i, Some(cap))?)
        }
        Command::Alpha(args) => {
            let (alpha, added, method) = polarized_alpha(&args)?;
            emit(out, &json!({ "n_effective": alpha.n(), "n_added": added, "alpha": alpha, "method": method }))
        }
        Command::Beta { input, d } => {
            let (alpha, added, _) = polarized_alpha(&input)?;
            let t = beta_table(&alpha, d);
            emit(
                out,
                &json!({
                    "d": d,
                    "n_effective": alpha.n(),
                    "n_added": added,
                    "alpha": alpha,
                    "beta": t,
                    "nonnegative": t.is_nonnegative(),
                }),
            )
        }
        Command::Polarize { n, text } => {
            let i = parse_ideal(&read_text(&text)?, n)?;
            let p = polarize(&i);
            let replicas: Vec<_> = p
                .var_map
                .entries()
                .into_iter()
                .map(|(var, copy, index)| json!({ "variable": var, "copy": copy, "index": index }))
                .collect();
            emit(
                out,
                &json!({
                    "n": p.polarized.n(),
                    "added": p.added,
                    "ideal": p.polarized.to_string(),
                    "replicas": replicas,
                }),
            )
        }
        Command::Veronese { n, m } => {
            let ideal = qdepth_veronese(n, m)?;
            let quotient = qdepth_veronese_quotient(n, m)?;
            emit(out, &json!({ "ideal": ideal, "quotient_value": quotient }))
        }
        Command::ScanE { m_max, q_max, format, resume_after } => {
            let mut scan = ConjectureScan::new(m_max, q_max);
            if let Some(key) = resume_after {
                scan = scan.resume_after(key);
            }
            if let Format::Csv = format {
                line(out, qdepth::families::econj::CSV_HEADER)?;
            }
            let mut failing = 0usize;
            for cell in scan {
                let cell = cell?;
                failing += usize::from(!cell.holds);
                match format {
                    Format::Csv => line(out, &cell.to_csv_row())?,
                    Format::Jsonl => emit(out, &cell)?,
                }
            }
            if failing > 0 {
                eprintln!("{failing} open cells with E < 0");
            }
            Ok(())
        }
        Command::CiSymmetry { n, degs, d, n_max, m_max } => match n_max {
            Some(n_max) => {
                for n in 1..=n_max {
                    for m in 1..=m_max.min(n) {
                        for degs in compositions(n, m) {
                            emit(out, &ci_symmetry(n, &degs, None)?)?;
                        }
                    }
                }
                Ok(())
            }
            None => emit(out, &ci_symmetry(n.expect("required by clap"), &degs, d)?),
        },
        Command::Selftest { seed, json } => {
            let report = selftest::run(seed);
            if json {
                emit(out, &report)?;
            } else {
                write!(out, "{}", report.table()).map_err(|e| Failure::Io(e.to_string()))?;
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Check("selftest failed".into()))
            }
        }
    }
}

/// All compositions of `n` into `m` positive parts, in lexicographic order.
fn compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 1 {
        return vec![vec![n]];
    }
    (1..=n - (m - 1))
        .flat_map(|first| {
            compositions(n - first, m - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli.command, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = lock.flush();
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
