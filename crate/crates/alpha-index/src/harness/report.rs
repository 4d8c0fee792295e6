//! Row serialization shared by the report-producing commands.
//!
//! Two formats: CSV with a fixed column order, and JSON with one object per
//! line. Floats print at nine decimals in CSV so identical inputs yield
//! byte-identical reports.

use std::io::{self, Write};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::parameter(format!("unknown format '{other}', expected csv|json"))),
        }
    }
}

/// Fixed nine-decimal float cell; NaN prints as `nan`.
pub fn float_cell(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.9}")
    }
}

/// Joins graph6 strings for a CSV cell. `;` is outside the graph6 byte
/// range, so the join is unambiguous.
pub fn list_cell(items: &[String]) -> String {
    items.join(";")
}

/// A report row that knows its CSV shape; JSON comes from `Serialize`.
pub trait ReportRow: Serialize {
    fn csv_header() -> &'static str;
    fn csv_line(&self) -> String;
}

/// Writes rows to `out` in the requested format (CSV includes the header).
pub fn write_rows<R: ReportRow>(
    out: &mut dyn Write,
    rows: &[R],
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{}", R::csv_header())?;
            for row in rows {
                writeln!(out, "{}", row.csv_line())?;
            }
        }
        OutputFormat::Json => {
            for row in rows {
                writeln!(out, "{}", serde_json::to_string(row).expect("serializable row"))?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_cells_are_fixed_width() {
        assert_eq!(float_cell(2.0 + 3f64.sqrt()), "3.732050808");
        assert_eq!(float_cell(f64::NAN), "nan");
        assert_eq!(float_cell(5.0), "5.000000000");
    }

    #[test]
    fn format_parsing() {
        assert_eq!("csv".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert!("yaml".parse::<OutputFormat>().is_err());
    }
}
