use std::path::PathBuf;

use clap::Args;
use num_rational::BigRational;
use serde::Serialize;

use bstrata_core::series::{primitive_counts, total_counts};

use crate::error::AppError;
use crate::output::{csv_table, decimal_6, emit, ratio_string, text_table, to_json, Format};

#[derive(Args, Debug)]
pub struct RatioArgs {
    /// Largest rank in the table.
    #[arg(long)]
    pub max_n: usize,
    /// Series truncation order; must be at least --max-n.
    #[arg(long, default_value_t = 100)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct RatioRow {
    n: String,
    total: String,
    primitive: String,
    /// Exact fraction `primitive/total`, reduced.
    ratio: String,
    /// Decimal expansion to six places.
    decimal: String,
}

#[derive(Serialize)]
struct RatioReport {
    command: &'static str,
    order: String,
    rows: Vec<RatioRow>,
}

pub fn run(args: &RatioArgs) -> Result<(), AppError> {
    if args.order < args.max_n {
        return Err(AppError::usage(format!(
            "--order {} is too small for --max-n {}",
            args.order, args.max_n
        )));
    }
    let totals = total_counts(args.order);
    let primitives = primitive_counts(args.order);
    let rows: Vec<RatioRow> = (1..=args.max_n)
        .map(|n| {
            let ratio = BigRational::new(primitives[n].clone(), totals[n].clone());
            RatioRow {
                n: n.to_string(),
                total: totals[n].to_string(),
                primitive: primitives[n].to_string(),
                ratio: ratio_string(&ratio),
                decimal: decimal_6(&ratio),
            }
        })
        .collect();

    let header = ["n", "total", "primitive", "ratio", "decimal"];
    let rendered = match args.format {
        Format::Json => to_json(&RatioReport {
            command: "primitive-ratio",
            order: args.order.to_string(),
            rows,
        }),
        Format::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.clone(),
                        r.total.clone(),
                        r.primitive.clone(),
                        r.ratio.clone(),
                        r.decimal.clone(),
                    ]
                })
                .collect();
            csv_table(&header, &cells)
        }
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.clone(),
                        r.total.clone(),
                        r.primitive.clone(),
                        r.ratio.clone(),
                        r.decimal.clone(),
                    ]
                })
                .collect();
            text_table(&header, &cells)
        }
    };
    emit(&args.out, &rendered)
}
