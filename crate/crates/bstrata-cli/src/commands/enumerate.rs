use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use bstrata_core::word::ReducedWord;

use crate::driver::enumerate_histogram;
use crate::error::AppError;
use crate::output::{csv_table, emit, text_table, to_json, Format};

/// Hard caps so a stray invocation cannot launch an astronomically large
/// search; `--unsafe-no-cap` lifts them.
const DIMENSION_CAP: usize = 8;
const COUNTS_ONLY_CAP: usize = 10;

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Rank of the group.
    #[arg(long)]
    pub n: usize,
    /// Worker count for the prefix-partitioned search.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Count diagrams without computing stratum dimensions.
    #[arg(long)]
    pub counts_only: bool,
    /// Lift the rank caps (8 with dimensions, 10 counts-only).
    #[arg(long)]
    pub unsafe_no_cap: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct EnumerateReport {
    command: &'static str,
    n: String,
    total: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    counts: Option<BTreeMap<usize, String>>,
}

pub fn run(args: &EnumerateArgs) -> Result<(), AppError> {
    if args.jobs < 1 {
        return Err(AppError::usage("--jobs must be at least 1"));
    }
    let cap = if args.counts_only { COUNTS_ONLY_CAP } else { DIMENSION_CAP };
    if args.n > cap && !args.unsafe_no_cap {
        return Err(AppError::usage(format!(
            "rank {} exceeds the cap of {cap}; pass --unsafe-no-cap to run anyway",
            args.n
        )));
    }
    let word = ReducedWord::staircase(args.n)?;
    let histogram = enumerate_histogram(&word, args.jobs, !args.counts_only);

    let rendered = match args.format {
        Format::Json => {
            let report = EnumerateReport {
                command: "enumerate",
                n: histogram.n.to_string(),
                total: histogram.total.to_string(),
                counts: (!args.counts_only).then(|| {
                    histogram.counts.iter().map(|(d, c)| (*d, c.to_string())).collect()
                }),
            };
            to_json(&report)
        }
        Format::Csv => {
            let rows = if args.counts_only {
                vec![vec![histogram.n.to_string(), String::new(), histogram.total.to_string()]]
            } else {
                histogram
                    .counts
                    .iter()
                    .map(|(d, c)| vec![histogram.n.to_string(), d.to_string(), c.to_string()])
                    .collect()
            };
            csv_table(&["n", "dimension", "count"], &rows)
        }
        Format::Table => {
            let mut rows: Vec<Vec<String>> = histogram
                .counts
                .iter()
                .map(|(d, c)| vec![histogram.n.to_string(), d.to_string(), c.to_string()])
                .collect();
            rows.push(vec![histogram.n.to_string(), "total".to_string(), histogram.total.to_string()]);
            text_table(&["n", "dimension", "count"], &rows)
        }
    };
    emit(&args.out, &rendered)
}
