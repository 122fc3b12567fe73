//! Wall-clock benchmark harness. Reports the median of `trials` timed
//! runs per method and size; short operations are repeated inside the
//! timing window until it is long enough to trust the clock.

use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use rand_chacha::ChaCha12Rng;
use rand::SeedableRng;
use serde::Serialize;
use sierpconv::bintransform::{transform_with, TransformAlgo};
use sierpconv::formulas::{convolve_t1, convolve_t2, convolve_t3, convolve_t4};
use sierpconv::recursive::convolve_recursive;
use sierpconv::{CoefficientRing, Method, Series, Variant};

use crate::{parse_sizes, BenchArgs, CliError};

#[derive(Serialize)]
pub struct BenchRecord {
    pub method: String,
    pub n: usize,
    pub ring: String,
    pub median_ns: u64,
    pub trials: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BenchMethod {
    Conv(Method),
    Transform(TransformAlgo),
}

impl BenchMethod {
    fn name(self) -> &'static str {
        match self {
            BenchMethod::Conv(m) => m.as_str(),
            BenchMethod::Transform(TransformAlgo::Naive) => "transform-naive",
            BenchMethod::Transform(TransformAlgo::Fast) => "transform-fast",
        }
    }
}

fn parse_methods(spec: &str) -> Result<Vec<BenchMethod>, CliError> {
    let mut methods = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let method = match token {
            "transform-naive" => BenchMethod::Transform(TransformAlgo::Naive),
            "transform-fast" => BenchMethod::Transform(TransformAlgo::Fast),
            other => Method::from_str(other)
                .map(BenchMethod::Conv)
                .map_err(|_| CliError::Usage(format!("unknown bench method {other:?}")))?,
        };
        methods.push(method);
    }
    Ok(methods)
}

pub fn run<R, S>(ring: R, args: &BenchArgs, sample: S) -> Result<(), CliError>
where
    R: CoefficientRing,
    S: Fn(&mut ChaCha12Rng) -> R::Elem + Copy,
{
    if args.trials < 3 {
        return Err(CliError::Usage("--trials must be at least 3".to_owned()));
    }
    let sizes = parse_sizes(&args.sizes)?;
    let methods = parse_methods(&args.methods)?;
    let mut rng = ChaCha12Rng::seed_from_u64(args.seed);
    let mut records = Vec::new();
    for &method in &methods {
        for &n in &sizes {
            records.push(bench_one(&ring, method, n, args.trials, sample, &mut rng)?);
        }
    }
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&records).expect("serializable")
        );
    } else {
        println!("{:<16} {:>8} {:>12} {:>14} {:>7}", "method", "n", "ring", "median_ns", "trials");
        for r in &records {
            println!(
                "{:<16} {:>8} {:>12} {:>14} {:>7}",
                r.method, r.n, r.ring, r.median_ns, r.trials
            );
        }
    }
    Ok(())
}

fn bench_one<R, S>(
    ring: &R,
    method: BenchMethod,
    n: usize,
    trials: usize,
    sample: S,
    rng: &mut ChaCha12Rng,
) -> Result<BenchRecord, CliError>
where
    R: CoefficientRing,
    S: Fn(&mut ChaCha12Rng) -> R::Elem + Copy,
{
    let fv: Vec<R::Elem> = (0..n).map(|_| sample(rng)).collect();
    let gv: Vec<R::Elem> = (0..n).map(|_| sample(rng)).collect();
    let f = Series::new(ring.clone(), fv.clone())?;
    let g = Series::new(ring.clone(), gv.clone())?;

    let run_once = || -> Result<(), CliError> {
        match method {
            BenchMethod::Conv(Method::Naive) => {
                black_box(f.convolve_naive(&g)?);
            }
            BenchMethod::Conv(Method::T1) => {
                black_box(convolve_t1(ring, &fv, &gv, Variant::BarS)?);
            }
            BenchMethod::Conv(Method::T2) => {
                black_box(convolve_t2(&f, &g, Variant::BarS)?);
            }
            BenchMethod::Conv(Method::T3) => {
                black_box(convolve_t3(&f, &g)?);
            }
            BenchMethod::Conv(Method::T4) => {
                black_box(convolve_t4(&f, &g)?);
            }
            BenchMethod::Conv(Method::Recursive) => {
                black_box(convolve_recursive(&f, &g)?);
            }
            BenchMethod::Transform(algo) => {
                black_box(transform_with(algo, &f)?);
            }
        }
        Ok(())
    };

    // Calibrate repetitions until one timing window is long enough.
    let mut reps = 1u32;
    loop {
        let start = Instant::now();
        for _ in 0..reps {
            run_once()?;
        }
        if start.elapsed().as_micros() >= 50 || reps > 1 << 20 {
            break;
        }
        reps *= 2;
    }

    let mut samples = Vec::with_capacity(trials);
    for _ in 0..trials {
        let start = Instant::now();
        for _ in 0..reps {
            run_once()?;
        }
        samples.push((start.elapsed().as_nanos() / u128::from(reps)).max(1) as u64);
    }
    samples.sort_unstable();
    Ok(BenchRecord {
        method: method.name().to_owned(),
        n,
        ring: ring.name(),
        median_ns: samples[samples.len() / 2],
        trials,
    })
}
