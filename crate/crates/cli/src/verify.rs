//! Cross-method verification: every convolution method and every
//! identity the library leans on, checked against the schoolbook
//! oracle on seeded random inputs, with a machine-readable report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;
use sierpconv::bintransform::{
    inverse_fast, inverse_naive, shifted_inverse, transform_fast, transform_naive,
};
use sierpconv::bitseq::{delta_mask, sierpinski_row_mask, thue_morse_mask};
use sierpconv::formulas::{
    convolve_t1, convolve_t2, convolve_t3, convolve_t4, t2_term, t3_term, t4_term,
};
use sierpconv::recursive::convolve_recursive;
use sierpconv::series::convolve_naive_full;
use sierpconv::sierpinski::{mask_delta, mul_sbar_k, mul_sk};
use sierpconv::{CoefficientRing, Method, PrimeField, Series, Variant};

use crate::{parse_sizes, CliError, VerifyArgs};

pub fn int64_sampler(rng: &mut ChaCha12Rng) -> i64 {
    rng.gen_range(-100..=100)
}

pub fn field_sampler(field: PrimeField) -> impl Fn(&mut ChaCha12Rng) -> u64 + Copy {
    move |rng| field.element(rng.gen())
}

#[derive(Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub ring: String,
    pub trials: usize,
    pub all_passed: bool,
    pub entries: Vec<ReportEntry>,
}

#[derive(Serialize)]
pub struct ReportEntry {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    pub ring: String,
    pub n: usize,
    pub trials: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Serialize)]
pub struct Counterexample {
    pub trial: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub f: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<String>>,
    pub expected: Vec<String>,
    pub actual: Vec<String>,
}

struct Sweep<'a, R: CoefficientRing, S> {
    ring: &'a R,
    sample: S,
    trials: usize,
    corrupt: Option<Method>,
    rng: ChaCha12Rng,
    entries: Vec<ReportEntry>,
}

impl<R, S> Sweep<'_, R, S>
where
    R: CoefficientRing,
    S: Fn(&mut ChaCha12Rng) -> R::Elem + Copy,
{
    fn random_coeffs(&mut self, n: usize) -> Vec<R::Elem> {
        (0..n).map(|_| (self.sample)(&mut self.rng)).collect()
    }

    fn random_series(&mut self, n: usize) -> Series<R> {
        let coeffs = self.random_coeffs(n);
        Series::new(self.ring.clone(), coeffs).expect("length is a power of two")
    }

    fn fmt(&self, coeffs: &[R::Elem]) -> Vec<String> {
        coeffs.iter().map(|c| self.ring.format(c)).collect()
    }

    /// Run one check for `trials` trials; the first counterexample
    /// settles the entry as failed.
    fn check<F>(&mut self, check: &str, variant: Option<Variant>, n: usize, mut body: F)
    where
        F: FnMut(&mut Self, usize) -> Result<Option<Counterexample>, CliError>,
    {
        let mut counterexample = None;
        let mut error = None;
        for trial in 0..self.trials {
            match body(self, trial) {
                Ok(None) => {}
                Ok(Some(ce)) => {
                    counterexample = Some(ce);
                    break;
                }
                Err(e) => {
                    error = Some(e.to_string());
                    break;
                }
            }
        }
        if let Some(msg) = error {
            counterexample = Some(Counterexample {
                trial: 0,
                k: None,
                f: vec![msg],
                g: None,
                expected: Vec::new(),
                actual: Vec::new(),
            });
        }
        self.entries.push(ReportEntry {
            check: check.to_owned(),
            variant: variant.map(|v| v.to_string()),
            ring: self.ring.name(),
            n,
            trials: self.trials,
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    fn corrupt_if_requested(&self, method: Method, coeffs: &mut [R::Elem]) {
        if self.corrupt == Some(method) {
            coeffs[0] = self
                .ring
                .add(&coeffs[0], &self.ring.one())
                .unwrap_or_else(|_| self.ring.one());
        }
    }

    fn method_checks(&mut self, n: usize) {
        // Polynomial identity against the untruncated oracle.
        for variant in Variant::ALL {
            self.check("t1", Some(variant), n, |sw, trial| {
                let f = sw.random_coeffs(n);
                let g = sw.random_coeffs(n);
                let expected = convolve_naive_full(sw.ring, &f, &g)?;
                let mut actual = convolve_t1(sw.ring, &f, &g, variant)?;
                sw.corrupt_if_requested(Method::T1, &mut actual);
                Ok((actual != expected).then(|| Counterexample {
                    trial,
                    k: None,
                    f: sw.fmt(&f),
                    g: Some(sw.fmt(&g)),
                    expected: sw.fmt(&expected),
                    actual: sw.fmt(&actual),
                }))
            });
        }

        // Truncated series methods against the truncated oracle.
        type SeriesFn<R> = fn(&Series<R>, &Series<R>) -> sierpconv::Result<Series<R>>;
        let t2_bar_s: SeriesFn<R> = |f, g| convolve_t2(f, g, Variant::BarS);
        let t2_bar_f: SeriesFn<R> = |f, g| convolve_t2(f, g, Variant::BarF);
        let runs: [(Method, Option<Variant>, SeriesFn<R>); 5] = [
            (Method::T2, Some(Variant::BarS), t2_bar_s),
            (Method::T2, Some(Variant::BarF), t2_bar_f),
            (Method::T3, None, convolve_t3),
            (Method::T4, None, convolve_t4),
            (Method::Recursive, None, convolve_recursive),
        ];
        for (method, variant, eval) in runs {
            self.check(method.as_str(), variant, n, |sw, trial| {
                let f = sw.random_series(n);
                let g = sw.random_series(n);
                let expected = f.convolve_naive(&g)?;
                let mut actual = eval(&f, &g)?.into_coeffs();
                sw.corrupt_if_requested(method, &mut actual);
                Ok((actual != expected.coeffs()).then(|| Counterexample {
                    trial,
                    k: None,
                    f: sw.fmt(f.coeffs()),
                    g: Some(sw.fmt(g.coeffs())),
                    expected: sw.fmt(expected.coeffs()),
                    actual: sw.fmt(&actual),
                }))
            });
        }
    }

    fn predicate_checks(&mut self, n: usize) {
        let series_mismatch = |sw: &Self,
                               trial: usize,
                               k: Option<usize>,
                               input: &Series<R>,
                               expected: &Series<R>,
                               actual: &Series<R>| {
            (actual != expected).then(|| Counterexample {
                trial,
                k,
                f: sw.fmt(input.coeffs()),
                g: None,
                expected: sw.fmt(expected.coeffs()),
                actual: sw.fmt(actual.coeffs()),
            })
        };

        self.check("transform-forward", None, n, |sw, trial| {
            let f = sw.random_series(n);
            let expected = transform_naive(&f)?;
            let actual = transform_fast(&f)?;
            Ok(series_mismatch(sw, trial, None, &f, &expected, &actual))
        });

        self.check("transform-inverse", None, n, |sw, trial| {
            let f = sw.random_series(n);
            let expected = inverse_naive(&f)?;
            let actual = inverse_fast(&f)?;
            Ok(series_mismatch(sw, trial, None, &f, &expected, &actual))
        });

        self.check("transform-round-trip", None, n, |sw, trial| {
            let f = sw.random_series(n);
            let actual = inverse_fast(&transform_fast(&f)?)?;
            Ok(series_mismatch(sw, trial, None, &f, &f, &actual))
        });

        // S_k then S_{n-1-k} equals S_{n-1}.
        self.check("row-complement", None, n, |sw, trial| {
            let f = sw.random_series(n);
            let k = sw.rng.gen_range(0..n);
            let lhs = mul_sk(&mul_sk(&f, k)?, n - 1 - k)?;
            let rhs = mul_sk(&f, n - 1)?;
            Ok(series_mismatch(sw, trial, Some(k), &f, &rhs, &lhs))
        });

        // Masked sign identity.
        self.check("masked-sign", None, n, |sw, trial| {
            let f = sw.random_series(n);
            let k = sw.rng.gen_range(0..n);
            let sigma = thue_morse_mask(n);
            let mask = sierpinski_row_mask(n - 1 - k).shifted(k, n);
            let lhs = mul_sbar_k(&f, k)?.apply_mask(&mask)?;
            let rhs = mul_sk(&f.apply_mask(&sigma)?, k)?
                .apply_mask(&mask)?
                .apply_mask(&sigma)?;
            Ok(series_mismatch(sw, trial, Some(k), &f, &rhs, &lhs))
        });

        // (δ_k ⊙ f_k*) x^k = δ_k x^k ⊙ f* S_k.
        self.check("inverse-shift", None, n, |sw, trial| {
            let f = sw.random_series(n);
            let k = sw.rng.gen_range(0..n);
            let lhs = mask_delta(&shifted_inverse(&f, k)?, k)?.shift_up(k)?;
            let rhs = mul_sk(&inverse_fast(&f)?, k)?
                .apply_mask(&delta_mask(k, n).shifted(k, n))?;
            Ok(series_mismatch(sw, trial, Some(k), &f, &rhs, &lhs))
        });

        // (δ_k ⊙ f)' x^k = ((δ_k ⊙ f) x^k)' S_k.
        self.check("transform-shift", None, n, |sw, trial| {
            let f = sw.random_series(n);
            let k = sw.rng.gen_range(0..n);
            let masked = mask_delta(&f, k)?;
            let lhs = transform_fast(&masked)?.shift_up(k)?;
            let rhs = mul_sk(&transform_fast(&masked.shift_up(k)?)?, k)?;
            Ok(series_mismatch(sw, trial, Some(k), &f, &rhs, &lhs))
        });

        // Diagonal masks against long division over the integers.
        self.check("delta-division", None, n, |sw, trial| {
            let k = sw.rng.gen_range(0..n);
            let expected = delta_by_division(k, n);
            let mask = delta_mask(k, n);
            let actual: Vec<i64> = (0..n).map(|m| i64::from(mask.get(m))).collect();
            Ok((actual != expected).then(|| Counterexample {
                trial,
                k: Some(k),
                f: Vec::new(),
                g: None,
                expected: expected.iter().map(|v| v.to_string()).collect(),
                actual: actual.iter().map(|v| v.to_string()).collect(),
            }))
        });

        // Terms of the series summations have valuation >= k.
        type TermFn<R> = fn(&Series<R>, &Series<R>, usize) -> sierpconv::Result<Series<R>>;
        let t2_term_bar_s: TermFn<R> = |f, g, k| t2_term(f, g, k, Variant::BarS);
        let term_runs: [(&str, TermFn<R>); 3] = [
            ("valuation-t2", t2_term_bar_s),
            ("valuation-t3", t3_term),
            ("valuation-t4", t4_term),
        ];
        for (name, term) in term_runs {
            self.check(name, None, n, |sw, trial| {
                let f = sw.random_series(n);
                let g = sw.random_series(n);
                let k = sw.rng.gen_range(0..n);
                let w = term(&f, &g, k)?;
                let zero = sw.ring.zero();
                let low_is_zero = (0..k).all(|m| sw.ring.eq_elems(w.coeff(m), &zero));
                Ok((!low_is_zero).then(|| Counterexample {
                    trial,
                    k: Some(k),
                    f: sw.fmt(f.coeffs()),
                    g: Some(sw.fmt(g.coeffs())),
                    expected: vec!["zero below index k".to_owned()],
                    actual: sw.fmt(w.coeffs()),
                }))
            });
        }
    }
}

/// Long-division oracle for the diagonal: coefficients of
/// `1 / ((1 - x) S_k)` over the integers.
fn delta_by_division(k: usize, n: usize) -> Vec<i64> {
    let row = sierpinski_row_mask(k);
    let mut d = vec![0i64; row.len() + 1];
    for m in 0..row.len() {
        d[m] += i64::from(row.get(m));
        d[m + 1] -= i64::from(row.get(m));
    }
    let mut q = vec![0i64; n];
    for m in 0..n {
        let mut acc = if m == 0 { 1 } else { 0 };
        for i in 1..=m.min(d.len() - 1) {
            acc -= d[i] * q[m - i];
        }
        q[m] = acc;
    }
    q
}

pub fn run<R, S>(ring: R, args: &VerifyArgs, sample: S) -> Result<(), CliError>
where
    R: CoefficientRing,
    S: Fn(&mut ChaCha12Rng) -> R::Elem + Copy,
{
    let sizes = parse_sizes(&args.sizes)?;
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".to_owned()));
    }
    let mut sweep = Sweep {
        ring: &ring,
        sample,
        trials: args.trials,
        corrupt: args.corrupt,
        rng: ChaCha12Rng::seed_from_u64(args.seed),
        entries: Vec::new(),
    };
    for &n in &sizes {
        sweep.method_checks(n);
        sweep.predicate_checks(n);
    }
    // Stable report order: by check name, then variant, then size.
    sweep
        .entries
        .sort_by(|a, b| (&a.check, &a.variant, a.n).cmp(&(&b.check, &b.variant, b.n)));
    let report = VerificationReport {
        seed: args.seed,
        ring: ring.name(),
        trials: args.trials,
        all_passed: sweep.entries.iter().all(|e| e.passed),
        entries: sweep.entries,
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        print_human(&report);
    }
    if report.all_passed {
        Ok(())
    } else {
        Err(CliError::Failure("verification failed".to_owned()))
    }
}

fn print_human(report: &VerificationReport) {
    println!(
        "verification sweep: ring={} seed={} trials-per-check={}",
        report.ring, report.seed, report.trials
    );
    for e in &report.entries {
        let name = match &e.variant {
            Some(v) => format!("{}/{}", e.check, v),
            None => e.check.clone(),
        };
        let status = if e.passed { "ok  " } else { "FAIL" };
        println!("  {status} {name:<22} n={}", e.n);
        if let Some(ce) = &e.counterexample {
            println!("       trial {}{}", ce.trial, match ce.k {
                Some(k) => format!(", k={k}"),
                None => String::new(),
            });
            if !ce.f.is_empty() {
                println!("       f        = [{}]", ce.f.join(", "));
            }
            if let Some(g) = &ce.g {
                println!("       g        = [{}]", g.join(", "));
            }
            if !ce.expected.is_empty() {
                println!("       expected = [{}]", ce.expected.join(", "));
            }
            if !ce.actual.is_empty() {
                println!("       actual   = [{}]", ce.actual.join(", "));
            }
        }
    }
    println!(
        "result: {}",
        if report.all_passed { "all checks passed" } else { "FAILURES PRESENT" }
    );
}
