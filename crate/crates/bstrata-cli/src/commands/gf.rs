use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use bstrata_core::series::StrataSeries;

use crate::error::AppError;
use crate::output::{csv_table, emit, text_table, to_json, Format};
use crate::suites::poly_string;

#[derive(Args, Debug)]
pub struct GfArgs {
    /// Largest rank whose polynomial is emitted.
    #[arg(long)]
    pub max_n: usize,
    /// Series truncation order; must be at least --max-n.
    #[arg(long, default_value_t = 30)]
    pub order: usize,
    /// Also emit the evaluations at t=1 (totals) and t=0 (primitive counts).
    #[arg(long)]
    pub eval: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct GfPolynomial {
    n: String,
    /// Decimal strings, constant term first.
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct GfEvaluation {
    n: String,
    total: String,
    primitive: String,
}

#[derive(Serialize)]
struct GfReport {
    command: &'static str,
    order: String,
    polynomials: Vec<GfPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    evaluations: Option<Vec<GfEvaluation>>,
}

pub fn run(args: &GfArgs) -> Result<(), AppError> {
    if args.order < args.max_n {
        return Err(AppError::usage(format!(
            "--order {} is too small for --max-n {}",
            args.order, args.max_n
        )));
    }
    let strata = StrataSeries::new(args.order);
    let mut coefficient_lists: Vec<Vec<String>> = Vec::new();
    for n in 0..=args.max_n {
        let ints = strata
            .polynomial(n)
            .expect("within order")
            .integer_coeffs()
            .expect("strata polynomials have integer coefficients");
        let mut list: Vec<String> = ints.iter().map(|c| c.to_string()).collect();
        if list.is_empty() {
            list.push("0".to_string());
        }
        coefficient_lists.push(list);
    }
    let evaluations: Option<Vec<(String, String)>> = args.eval.then(|| {
        (0..=args.max_n)
            .map(|n| {
                (
                    strata.total(n).expect("within order").to_string(),
                    strata.primitive(n).expect("within order").to_string(),
                )
            })
            .collect()
    });

    let rendered = match args.format {
        Format::Json => {
            let report = GfReport {
                command: "gf",
                order: args.order.to_string(),
                polynomials: coefficient_lists
                    .iter()
                    .enumerate()
                    .map(|(n, coefficients)| GfPolynomial {
                        n: n.to_string(),
                        coefficients: coefficients.clone(),
                    })
                    .collect(),
                evaluations: evaluations.as_ref().map(|evals| {
                    evals
                        .iter()
                        .enumerate()
                        .map(|(n, (total, primitive))| GfEvaluation {
                            n: n.to_string(),
                            total: total.clone(),
                            primitive: primitive.clone(),
                        })
                        .collect()
                }),
            };
            to_json(&report)
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (n, coefficients) in coefficient_lists.iter().enumerate() {
                for (degree, c) in coefficients.iter().enumerate() {
                    let mut row = vec![n.to_string(), degree.to_string(), c.clone()];
                    if let Some(evals) = &evaluations {
                        row.push(evals[n].0.clone());
                        row.push(evals[n].1.clone());
                    }
                    rows.push(row);
                }
            }
            let header: &[&str] = if args.eval {
                &["n", "degree", "coefficient", "total", "primitive"]
            } else {
                &["n", "degree", "coefficient"]
            };
            csv_table(header, &rows)
        }
        Format::Table => {
            let mut rows = Vec::new();
            for n in 0..=args.max_n {
                let mut row = vec![
                    n.to_string(),
                    poly_string(strata.polynomial(n).expect("within order")),
                ];
                if let Some(evals) = &evaluations {
                    row.push(evals[n].0.clone());
                    row.push(evals[n].1.clone());
                }
                rows.push(row);
            }
            let header: &[&str] = if args.eval {
                &["n", "p_n(t)", "total", "primitive"]
            } else {
                &["n", "p_n(t)"]
            };
            text_table(header, &rows)
        }
    };
    emit(&args.out, &rendered)
}
