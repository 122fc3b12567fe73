//! Command-line front end: convolution runs, transform runs, mask
//! dumps, cross-method verification sweeps, and a benchmark harness
//! with machine-readable output.
//!
//! Exit codes: 0 success, 1 failure or I/O error, 2 usage error,
//! 3 arithmetic overflow.

mod bench;
mod verify;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sierpconv::bintransform::{inverse_with, transform_with, TransformAlgo};
use sierpconv::bitseq::{delta_mask, sierpinski_row_mask, thue_morse_mask};
use sierpconv::formulas::{convolve_t1, convolve_t2, convolve_t3, convolve_t4};
use sierpconv::recursive::convolve_recursive;
use sierpconv::series::{format_coeffs, parse_coeff_text};
use sierpconv::{CoefficientRing, Error, Int64Checked, Method, PrimeField, Series, Variant};

#[derive(Parser)]
#[command(
    name = "sierpconv",
    version,
    about = "Exact structured convolution of polynomials and power series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convolve two coefficient files.
    Conv(ConvArgs),
    /// Apply the binomial modulo-2 transform or its inverse.
    Transform(TransformArgs),
    /// Print a mask, one entry per line.
    Mask(MaskArgs),
    /// Cross-verify every method and identity against the oracle.
    Verify(VerifyArgs),
    /// Time convolution methods and transforms.
    Bench(BenchArgs),
}

#[derive(Args)]
struct ConvArgs {
    /// naive | t1 | t2 | t3 | t4 | recursive
    #[arg(long, value_parser = Method::from_str)]
    method: Method,
    /// barS | barF (t1 and t2 only)
    #[arg(long, value_parser = Variant::from_str)]
    variant: Option<Variant>,
    /// Coefficient ring: int64 or mod:P with P prime.
    #[arg(long, default_value = "int64")]
    ring: RingChoice,
    /// First input coefficient file.
    #[arg(short = 'a', value_name = "FILE")]
    a: PathBuf,
    /// Second input coefficient file.
    #[arg(short = 'b', value_name = "FILE")]
    b: PathBuf,
    /// Series length, a power of two. For t1 this is the polynomial
    /// length and the output has 2n-1 coefficients; every other method
    /// writes n coefficients.
    #[arg(short = 'n', value_name = "N")]
    n: usize,
    /// Output file; stdout when omitted.
    #[arg(short = 'o', value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(value_enum)]
    direction: Direction,
    #[arg(long, value_enum, default_value_t = Algo::Fast)]
    algo: Algo,
    /// Coefficient ring: int64 or mod:P with P prime.
    #[arg(long, default_value = "int64")]
    ring: RingChoice,
    /// Input coefficient file.
    #[arg(short = 'a', value_name = "FILE")]
    a: PathBuf,
    /// Series length, a power of two.
    #[arg(short = 'n', value_name = "N")]
    n: usize,
    /// Output file; stdout when omitted.
    #[arg(short = 'o', value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MaskArgs {
    #[arg(value_enum)]
    kind: MaskKind,
    /// Row or diagonal index (sierpinski and delta).
    #[arg(long)]
    k: Option<usize>,
    /// Number of entries to print.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated powers of two; ranges like 2..128 expand to all
    /// powers of two in between.
    #[arg(long, default_value = "2..64")]
    sizes: String,
    /// Random trials per size and check.
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Coefficient ring: int64 or mod:P with P prime.
    #[arg(long, default_value = "int64")]
    ring: RingChoice,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Perturb the named method's output (harness self-test).
    #[arg(long, hide = true, value_parser = Method::from_str)]
    corrupt: Option<Method>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated sizes (powers of two); ranges expand.
    #[arg(long, default_value = "64..256")]
    sizes: String,
    /// Comma-separated methods: naive, t1, t2, t3, t4, recursive,
    /// transform-naive, transform-fast. An empty string runs nothing.
    #[arg(long, default_value = "naive,t1,t2,t3,t4,recursive")]
    methods: String,
    /// Timed runs per method and size (at least 3; the median is kept).
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Coefficient ring: int64 or mod:P with P prime.
    #[arg(long, default_value = "int64")]
    ring: RingChoice,
    /// Emit the records as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Naive,
    Fast,
}

impl From<Algo> for TransformAlgo {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Naive => TransformAlgo::Naive,
            Algo::Fast => TransformAlgo::Fast,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MaskKind {
    Sierpinski,
    Delta,
    Thuemorse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RingChoice {
    Int64,
    Mod(u64),
}

impl FromStr for RingChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "int64" {
            return Ok(RingChoice::Int64);
        }
        if let Some(p) = s.strip_prefix("mod:") {
            let p: u64 = p.parse().map_err(|_| format!("bad modulus in {s:?}"))?;
            return Ok(RingChoice::Mod(p));
        }
        Err(format!("unknown ring {s:?}, expected int64 or mod:<p>"))
    }
}

/// Errors carrying their exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
    Arithmetic(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
            CliError::Arithmetic(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) | CliError::Arithmetic(m) => {
                f.write_str(m)
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow => CliError::Arithmetic(e.to_string()),
            Error::NotPrime(_) => CliError::Usage(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Conv(args) => match args.ring {
            RingChoice::Int64 => run_conv(Int64Checked, &args),
            RingChoice::Mod(p) => run_conv(PrimeField::new(p)?, &args),
        },
        Command::Transform(args) => match args.ring {
            RingChoice::Int64 => run_transform(Int64Checked, &args),
            RingChoice::Mod(p) => run_transform(PrimeField::new(p)?, &args),
        },
        Command::Mask(args) => run_mask(&args),
        Command::Verify(args) => match args.ring {
            RingChoice::Int64 => verify::run(Int64Checked, &args, verify::int64_sampler),
            RingChoice::Mod(p) => {
                let field = PrimeField::new(p)?;
                verify::run(field, &args, verify::field_sampler(field))
            }
        },
        Command::Bench(args) => match args.ring {
            RingChoice::Int64 => bench::run(Int64Checked, &args, verify::int64_sampler),
            RingChoice::Mod(p) => {
                let field = PrimeField::new(p)?;
                bench::run(field, &args, verify::field_sampler(field))
            }
        },
    }
}

fn check_power_of_two(n: usize) -> Result<usize, CliError> {
    if n == 0 || !n.is_power_of_two() {
        return Err(CliError::Usage(format!("size {n} is not a power of two")));
    }
    Ok(n)
}

/// Parse "2,8,32" or "2..128" (all powers of two in the range) or a mix.
fn parse_sizes(spec: &str) -> Result<Vec<usize>, CliError> {
    let mut sizes = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if let Some((lo, hi)) = token.split_once("..") {
            let lo: usize = lo
                .parse()
                .map_err(|_| CliError::Usage(format!("bad size range {token:?}")))?;
            let hi: usize = hi
                .parse()
                .map_err(|_| CliError::Usage(format!("bad size range {token:?}")))?;
            check_power_of_two(lo)?;
            check_power_of_two(hi)?;
            let mut n = lo;
            while n <= hi {
                sizes.push(n);
                n *= 2;
            }
        } else {
            let n: usize = token
                .parse()
                .map_err(|_| CliError::Usage(format!("bad size {token:?}")))?;
            sizes.push(check_power_of_two(n)?);
        }
    }
    Ok(sizes)
}

fn read_coeffs<R: CoefficientRing>(ring: &R, path: &Path) -> Result<Vec<R::Elem>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
    Ok(parse_coeff_text(ring, &text)?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::Failure(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn resolve_variant(method: Method, variant: Option<Variant>) -> Result<Variant, CliError> {
    match (method.has_variants(), variant) {
        (true, Some(v)) => Ok(v),
        (_, None) => Ok(Variant::BarS),
        (false, Some(_)) => Err(CliError::Usage(format!(
            "--variant only applies to t1 and t2, not {method}"
        ))),
    }
}

fn run_conv<R: CoefficientRing>(ring: R, args: &ConvArgs) -> Result<(), CliError> {
    let n = check_power_of_two(args.n)?;
    let variant = resolve_variant(args.method, args.variant)?;
    let fa = read_coeffs(&ring, &args.a)?;
    let fb = read_coeffs(&ring, &args.b)?;
    let out = match args.method {
        Method::T1 => {
            let pad = |mut v: Vec<R::Elem>| -> Result<Vec<R::Elem>, CliError> {
                if v.len() > n {
                    return Err(Error::TooManyCoefficients { len: v.len(), n }.into());
                }
                v.resize(n, ring.zero());
                Ok(v)
            };
            convolve_t1(&ring, &pad(fa)?, &pad(fb)?, variant)?
        }
        method => {
            let f = Series::from_coeffs(ring.clone(), fa, n)?;
            let g = Series::from_coeffs(ring.clone(), fb, n)?;
            let result = match method {
                Method::Naive => f.convolve_naive(&g)?,
                Method::T2 => convolve_t2(&f, &g, variant)?,
                Method::T3 => convolve_t3(&f, &g)?,
                Method::T4 => convolve_t4(&f, &g)?,
                Method::Recursive => convolve_recursive(&f, &g)?,
                Method::T1 => unreachable!(),
            };
            result.into_coeffs()
        }
    };
    write_output(args.output.as_deref(), &format_coeffs(&ring, &out))
}

fn run_transform<R: CoefficientRing>(ring: R, args: &TransformArgs) -> Result<(), CliError> {
    let n = check_power_of_two(args.n)?;
    let coeffs = read_coeffs(&ring, &args.a)?;
    let f = Series::from_coeffs(ring.clone(), coeffs, n)?;
    let algo = args.algo.into();
    let result = match args.direction {
        Direction::Forward => transform_with(algo, &f)?,
        Direction::Inverse => inverse_with(algo, &f)?,
    };
    write_output(
        args.output.as_deref(),
        &format_coeffs(&ring, &result.into_coeffs()),
    )
}

fn run_mask(args: &MaskArgs) -> Result<(), CliError> {
    let need = |opt: Option<usize>, what: &str| {
        opt.ok_or_else(|| CliError::Usage(format!("--{what} is required for this mask")))
    };
    let mask = match args.kind {
        MaskKind::Sierpinski => {
            let k = need(args.k, "k")?;
            let row = sierpinski_row_mask(k);
            match args.n {
                Some(n) => row.shifted(0, n),
                None => row,
            }
        }
        MaskKind::Delta => delta_mask(need(args.k, "k")?, need(args.n, "n")?),
        MaskKind::Thuemorse => thue_morse_mask(need(args.n, "n")?),
    };
    let mut text = String::new();
    for &v in mask.values() {
        text.push_str(&v.to_string());
        text.push('\n');
    }
    write_output(None, &text)
}
