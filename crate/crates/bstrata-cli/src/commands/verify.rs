use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;

use crate::error::AppError;
use crate::output::{csv_table, emit, text_table, to_json, Format};
use crate::suites::{
    bruhat_check, kernel_check_exhaustive, kernel_check_sampled, lw_check, series_checks,
    tau_check, CheckOutcome, BRUHAT_MAX_RANK, KERNEL_EXHAUSTIVE_MAX_RANK, KERNEL_SAMPLED_RANKS,
    KERNEL_SAMPLES, LW_MAX_RANK, TAU_MAX_RANK,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    All,
    Lw,
    Tau,
    Kernel,
    Bruhat,
    Series,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Which invariant suite to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Restrict a rank-based suite to exactly this rank.
    #[arg(long)]
    pub n: Option<usize>,
    /// Seed for the sampled kernel checks at ranks 6 and 7.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    suite: String,
    seed: String,
    checks: Vec<CheckOutcome>,
    passed: bool,
}

fn ranks(requested: Option<usize>, max: usize, suite: &str) -> Result<Vec<usize>, AppError> {
    match requested {
        None => Ok((1..=max).collect()),
        Some(n) if (1..=max).contains(&n) => Ok(vec![n]),
        Some(n) => Err(AppError::usage(format!(
            "--n {n} is outside the documented range 1..={max} for suite {suite}"
        ))),
    }
}

fn kernel_ranks(requested: Option<usize>) -> Result<(Vec<usize>, Vec<usize>), AppError> {
    let max_sampled = *KERNEL_SAMPLED_RANKS.iter().max().expect("nonempty");
    match requested {
        None => Ok(((1..=KERNEL_EXHAUSTIVE_MAX_RANK).collect(), KERNEL_SAMPLED_RANKS.to_vec())),
        Some(n) if (1..=KERNEL_EXHAUSTIVE_MAX_RANK).contains(&n) => Ok((vec![n], vec![])),
        Some(n) if KERNEL_SAMPLED_RANKS.contains(&n) => Ok((vec![], vec![n])),
        Some(n) => Err(AppError::usage(format!(
            "--n {n} is outside the documented range 1..={max_sampled} for suite kernel"
        ))),
    }
}

pub fn run(args: &VerifyArgs) -> Result<(), AppError> {
    if args.n.is_some() && matches!(args.suite, Suite::All | Suite::Series) {
        return Err(AppError::usage("--n applies only to the lw, tau, kernel and bruhat suites"));
    }
    let mut checks: Vec<CheckOutcome> = Vec::new();
    if matches!(args.suite, Suite::All | Suite::Lw) {
        for n in ranks(args.n, LW_MAX_RANK, "lw")? {
            checks.push(lw_check(n));
        }
    }
    if matches!(args.suite, Suite::All | Suite::Tau) {
        for n in ranks(args.n, TAU_MAX_RANK, "tau")? {
            checks.push(tau_check(n));
        }
    }
    if matches!(args.suite, Suite::All | Suite::Kernel) {
        let (exhaustive, sampled) = kernel_ranks(args.n)?;
        for n in exhaustive {
            checks.push(kernel_check_exhaustive(n));
        }
        for n in sampled {
            checks.push(kernel_check_sampled(n, args.seed, KERNEL_SAMPLES));
        }
    }
    if matches!(args.suite, Suite::All | Suite::Bruhat) {
        for n in ranks(args.n, BRUHAT_MAX_RANK, "bruhat")? {
            checks.push(bruhat_check(n));
        }
    }
    if matches!(args.suite, Suite::All | Suite::Series) {
        checks.extend(series_checks());
    }

    let passed = checks.iter().all(|c| c.passed);
    let suite_name = format!("{:?}", args.suite).to_lowercase();
    let rendered = match args.format {
        Format::Json => to_json(&VerifyReport {
            command: "verify",
            suite: suite_name,
            seed: args.seed.to_string(),
            checks: checks.clone(),
            passed,
        }),
        Format::Csv => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    vec![c.name.clone(), c.scope.clone(), c.checked.clone(), c.passed.to_string()]
                })
                .collect();
            csv_table(&["check", "scope", "checked", "passed"], &rows)
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    let status = if c.passed {
                        "pass".to_string()
                    } else {
                        let detail = c
                            .counterexample
                            .as_ref()
                            .map(|ce| match &ce.bits {
                                Some(bits) => format!(
                                    "bits {bits}: expected {}, got {}",
                                    ce.expected, ce.actual
                                ),
                                None => format!("expected {}, got {}", ce.expected, ce.actual),
                            })
                            .unwrap_or_default();
                        format!("FAIL {detail}")
                    };
                    vec![c.name.clone(), c.scope.clone(), c.checked.clone(), status]
                })
                .collect();
            text_table(&["check", "scope", "checked", "result"], &rows)
        }
    };
    emit(&args.out, &rendered)?;
    if passed {
        Ok(())
    } else {
        Err(AppError::Check("verification failed".to_string()))
    }
}
