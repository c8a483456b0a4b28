//! `hadlat`: count, enumerate and bound integer points of the Hadamard simplex.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hadlat_core::bounds::{
    case1_count_lower_bound, case1_enumerate_families, case1_verify_injectivity,
    case3_sample_density, theorem1_bound, DEFAULT_FAMILY_BUDGET,
};
use hadlat_core::lattice::ehrhart::ehrhart_from_oracle;
use hadlat_core::lattice::io::{write_csv, write_json};
use hadlat_core::{
    count_dilate, enumerate_dilate_points, enumerate_unit_points, gaussian_binomial, CountMethod,
    Error, LatticePoint, DEFAULT_NODE_BUDGET,
};
use serde_json::{json, Value};

const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INFEASIBLE: u8 = 4;

#[derive(Parser)]
#[command(name = "hadlat", version, about = "Integer points of the Hadamard simplex and its dilates")]
struct Cli {
    /// Output format; csv applies to point streams only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: all cores). Never changes the output.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// |d·Had ∩ ℤⁿ| for n = 2^m.
    Count {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        d: u64,
        /// oracle or bijection (d = 1 only). Defaults to bijection at d = 1.
        #[arg(long)]
        method: Option<CountMethod>,
        /// Search-node budget for the oracle.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u128,
    },
    /// Stream the points of d·Had ∩ ℤⁿ.
    Enumerate {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        d: u64,
        #[arg(long)]
        method: Option<CountMethod>,
        /// Stop after this many points.
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u128,
    },
    /// Interpolate the Ehrhart polynomial from oracle counts at d = 0..n−1.
    Ehrhart {
        #[arg(long)]
        m: u32,
        /// Also evaluate the polynomial at this dilate.
        #[arg(long)]
        d: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u128,
    },
    /// Certificate families for small d: exact count and injectivity.
    Certify {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u64,
        /// List at most this many families in the output.
        #[arg(long, default_value_t = 0)]
        cap: u64,
        /// Maximum number of families the injectivity check may scan.
        #[arg(long, default_value_t = DEFAULT_FAMILY_BUDGET)]
        budget: u64,
    },
    /// Sample the hypercube density for large d.
    Density {
        #[command(flatten)]
        size: Size,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        c: u64,
        #[arg(long = "D")]
        radius: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Regime and certified lower bound on |d·Had ∩ ℤⁿ|.
    Bound {
        #[command(flatten)]
        size: Size,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
    },
    /// Gaussian binomial coefficient [m k]₂.
    Gbinom {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Size {
    /// log₂ of the ambient dimension.
    #[arg(long)]
    m: Option<u32>,
    /// Ambient dimension, a power of two.
    #[arg(long)]
    n: Option<u64>,
}

impl Size {
    fn m(&self) -> Result<u32, Failure> {
        match (self.m, self.n) {
            (Some(m), _) => Ok(m),
            (None, Some(n)) if n >= 2 && n.is_power_of_two() => Ok(n.trailing_zeros()),
            (None, Some(n)) => Err(Error::Domain(format!("n = {n} is not a power of two ≥ 2")).into()),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }

    fn n(&self) -> Result<u64, Failure> {
        match (self.m, self.n) {
            (Some(m), _) if (1..64).contains(&m) => Ok(1 << m),
            (Some(m), _) => Err(Error::Domain(format!("m = {m} out of range")).into()),
            (None, Some(n)) => Ok(n),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

enum Failure {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Consistency(_) | Error::Overflow(_) => 1,
        _ => EXIT_INFEASIBLE,
    }
}

fn default_method(method: Option<CountMethod>, d: u64) -> CountMethod {
    method.unwrap_or(if d == 1 {
        CountMethod::Bijection
    } else {
        CountMethod::Oracle
    })
}

fn emit(value: &Value) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value).map_err(io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn enumerate(
    m: u32,
    d: u64,
    method: Option<CountMethod>,
    cap: Option<u64>,
    budget: u128,
    format: Format,
) -> Result<(), Failure> {
    let points: Box<dyn Iterator<Item = LatticePoint>> = match default_method(method, d) {
        CountMethod::Bijection if d == 1 => Box::new(enumerate_unit_points(m)?),
        CountMethod::Bijection => {
            return Err(Error::Unsupported(format!(
                "the bijection lists d = 1 only, got d = {d}"
            ))
            .into())
        }
        CountMethod::Oracle => Box::new(enumerate_dilate_points(m, d, budget)?),
    };
    let points = points.take(cap.map_or(usize::MAX, |c| c.try_into().unwrap_or(usize::MAX)));
    let mut out = BufWriter::new(io::stdout().lock());
    match format {
        Format::Csv => write_csv(&mut out, points)?,
        Format::Json => write_json(&mut out, points)?,
    };
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot set up {t} threads: {e}")))?;
    }
    if cli.format == Format::Csv && !matches!(cli.command, Command::Enumerate { .. }) {
        return Err(Failure::Usage(
            "--format csv is only available for enumerate".into(),
        ));
    }
    match cli.command {
        Command::Count { m, d, method, budget } => {
            let method = default_method(method, d);
            let count = count_dilate(m, d, method, budget)?;
            emit(&json!({
                "m": m,
                "n": 1u64 << m,
                "d": d,
                "method": method,
                "count": count.to_string(),
            }))
        }
        Command::Enumerate { m, d, method, cap, budget } => {
            enumerate(m, d, method, cap, budget, cli.format)
        }
        Command::Ehrhart { m, d, budget } => {
            let (poly, counts) = ehrhart_from_oracle(m, budget)?;
            let mut value = json!({
                "m": m,
                "n": 1u64 << m,
                "degree": poly.degree(),
                "coefficients": poly.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "polynomial": poly.to_string(),
                "counts": counts
                    .iter()
                    .map(|(d, c)| json!({"d": d, "count": c.to_string()}))
                    .collect::<Vec<_>>(),
            });
            if let Some(d) = d {
                let predicted = poly
                    .count_at(d)
                    .ok_or_else(|| Error::Consistency(format!("p({d}) is not a non-negative integer")))?;
                value["prediction"] = json!({"d": d, "count": predicted.to_string()});
            }
            emit(&value)
        }
        Command::Certify { m, d, cap, budget } => {
            let summary = case1_count_lower_bound(m, d)?;
            let report = case1_verify_injectivity(m, d, budget)?;
            let families = case1_enumerate_families(m, d, cap)?
                .map(|f| {
                    let f = f?;
                    Ok(json!({
                        "exponents": f.exponents(),
                        "bases": f.subspaces.iter().map(|w| w.basis_words().to_vec()).collect::<Vec<_>>(),
                        "sum": f.sum.coords(),
                    }))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let collision = report.collision.as_ref().map(|(a, b)| {
                json!({
                    "first": a.exponents(),
                    "second": b.exponents(),
                    "sum": a.sum.coords(),
                })
            });
            emit(&json!({
                "m": m,
                "n": 1u64 << m,
                "d": d,
                "admissible_dims": summary.admissible,
                "family_count": report.families.to_string(),
                "exact_count": summary.exact.to_string(),
                "central_dims": summary.central_dims,
                "crude_log2": summary.crude_log2,
                "injective": report.injective,
                "collision": collision,
                "families": families,
            }))
        }
        Command::Density { size, d, c, radius, samples, seed } => {
            let est = case3_sample_density(size.m()?, d, c, radius, samples, seed)?;
            emit(&serde_json::to_value(&est).map_err(io::Error::from)?)
        }
        Command::Bound { size, d, eps } => {
            let report = theorem1_bound(size.n()?, d, eps)?;
            emit(&serde_json::to_value(&report).map_err(io::Error::from)?)
        }
        Command::Gbinom { m, k } => {
            if k > m {
                return Err(Error::Domain(format!("k = {k} exceeds m = {m}")).into());
            }
            emit(&json!({"m": m, "k": k, "value": gaussian_binomial(m, k)?.to_string()}))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
