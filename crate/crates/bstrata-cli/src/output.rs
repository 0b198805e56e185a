use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::AppError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Writes the rendered output to the chosen sink, newline-terminated.
pub fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), AppError> {
    let mut text = String::from(content);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let stdout = std::io::stdout();
            stdout.lock().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable report")
}

/// A CSV table with a fixed header; fields never need quoting here, every
/// cell is a number, a short keyword or empty.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    for row in rows {
        out.push('\n');
        out.push_str(&row.join(","));
    }
    out
}

/// Plain aligned text table.
pub fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let render = |cells: &[String]| -> String {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:>width$}", c, width = widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    let mut out = render(&header_cells);
    for row in rows {
        out.push('\n');
        out.push_str(&render(row));
    }
    out
}

/// Exact fraction as `numer/denom`.
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal expansion to six places, rounding half away from zero.
pub fn decimal_6(r: &BigRational) -> String {
    let million = BigInt::from(1_000_000);
    let scaled = r * BigRational::from_integer(million.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = if scaled.is_negative() {
        -(-scaled + half).floor()
    } else {
        (scaled + half).floor()
    };
    let v = rounded.to_integer();
    let sign = if v.is_negative() { "-" } else { "" };
    let v = v.abs();
    let int = &v / &million;
    let frac = &v % &million;
    format!("{sign}{int}.{frac:06}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_6(&rat(1, 2)), "0.500000");
        assert_eq!(decimal_6(&rat(1, 3)), "0.333333");
        assert_eq!(decimal_6(&rat(2, 3)), "0.666667");
        assert_eq!(decimal_6(&rat(7, 1)), "7.000000");
        assert_eq!(decimal_6(&rat(-1, 2)), "-0.500000");
        assert_eq!(decimal_6(&BigRational::zero()), "0.000000");
    }

    #[test]
    fn ratio_rendering() {
        assert_eq!(ratio_string(&rat(2, 6)), "1/3");
        assert_eq!(ratio_string(&rat(5, 1)), "5/1");
    }

    #[test]
    fn tables() {
        let rows = vec![vec!["1".into(), "22".into()]];
        assert_eq!(csv_table(&["a", "b"], &rows), "a,b\n1,22");
        assert_eq!(text_table(&["a", "b"], &rows), "a   b\n1  22");
    }
}
