use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use bstrata_core::grid::{StaircaseColoring, SymmetricGrid};
use bstrata_core::pipes::{
    classify_cycles, cycle_notation, kernel_dimension, tau, CycleKind, GroupedCycle,
};
use bstrata_core::word::{first_failure, w_delta, Diagram, ReducedWord};

use crate::error::AppError;
use crate::output::{emit, to_json, Format};

#[derive(Args, Debug)]
pub struct DiagramArgs {
    /// Rank of the group.
    #[arg(long)]
    pub n: usize,
    /// Diagram bitmask as lowercase hex, bit k−1 for word position k.
    #[arg(long)]
    pub bits: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct CycleRow {
    kind: &'static str,
    cycle: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    partner: Option<String>,
    size: String,
    parity: &'static str,
    contributes: bool,
}

/// Grid serialization: rows rendered top-first, `#` black and `.` white.
#[derive(Serialize)]
struct GridJson {
    n: String,
    rows: Vec<String>,
}

#[derive(Serialize)]
struct DiagramReport {
    command: &'static str,
    n: String,
    bits: String,
    positions: Vec<String>,
    grid: GridJson,
    w_delta: String,
    tau_window: String,
    tau_cycles: String,
    cycles: Vec<CycleRow>,
    dimension_cycles: String,
    dimension_kernel: String,
}

fn cycle_string(elements: &[i32]) -> String {
    let parts: Vec<String> = elements.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(" "))
}

fn cycle_row(group: &GroupedCycle) -> CycleRow {
    let negated: Vec<i32> = group.repr.iter().map(|&x| -x).collect();
    CycleRow {
        kind: group.kind.label(),
        cycle: cycle_string(&group.repr),
        partner: match group.kind {
            CycleKind::C => None,
            _ => Some(cycle_string(&negated)),
        },
        size: group.size.to_string(),
        parity: group.parity().label(),
        contributes: group.contributes(),
    }
}

pub fn run(args: &DiagramArgs) -> Result<(), AppError> {
    if args.format == Format::Csv {
        return Err(AppError::usage("the diagram command supports json and table output"));
    }
    let word = ReducedWord::staircase(args.n)?;
    let d = Diagram::from_hex(args.n, &args.bits)?;
    if let Some(f) = first_failure(&word, &d)? {
        return Err(AppError::usage(format!(
            "bits {} is not a Cauchon diagram: ascent fails at step {} (word position {}, letter {})",
            d.to_hex(),
            f.step,
            f.position,
            f.letter
        )));
    }
    let staircase = StaircaseColoring::from_diagram(&word, &d)?;
    let grid = SymmetricGrid::from_staircase(&staircase);
    let t = tau(&grid)?;
    let classification = classify_cycles(&t);
    let kernel = kernel_dimension(&t);
    let report = DiagramReport {
        command: "diagram",
        n: args.n.to_string(),
        bits: d.to_hex(),
        positions: d.positions().iter().map(|k| k.to_string()).collect(),
        grid: GridJson { n: args.n.to_string(), rows: grid.ascii_rows() },
        w_delta: w_delta(&word, &d)?.window_string(),
        tau_window: t.window_string(),
        tau_cycles: cycle_notation(&t),
        cycles: classification.cycles.iter().map(cycle_row).collect(),
        dimension_cycles: classification.dimension.to_string(),
        dimension_kernel: kernel.to_string(),
    };

    let rendered = match args.format {
        Format::Json => to_json(&report),
        _ => {
            let mut lines = Vec::new();
            lines.push(format!("n = {}, bits = {}", report.n, report.bits));
            lines.push(format!(
                "positions = {{{}}}",
                report.positions.join(", ")
            ));
            lines.push(String::new());
            lines.extend(report.grid.rows.iter().cloned());
            lines.push(String::new());
            lines.push(format!("w_delta = ({})", report.w_delta));
            lines.push(format!("tau     = ({})  {}", report.tau_window, report.tau_cycles));
            lines.push(String::new());
            for row in &report.cycles {
                let partner = row.partner.as_deref().unwrap_or("");
                lines.push(format!(
                    "type ({}) {}{}  size {}  {}  {}",
                    row.kind,
                    row.cycle,
                    partner,
                    row.size,
                    row.parity,
                    if row.contributes { "contributes" } else { "does not contribute" }
                ));
            }
            lines.push(String::new());
            lines.push(format!(
                "dimension = {} (cycle formula) = {} (kernel)",
                report.dimension_cycles, report.dimension_kernel
            ));
            lines.join("\n")
        }
    };
    emit(&args.out, &rendered)
}
