//! Output formatting shared by the subcommands. Values print exactly:
//! integers plain, everything else as num/den, never floating point.

use std::fmt::Write as _;

use exact_series::TruncatedSeries;
use serde_json::{json, Value};

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

impl Format {
    pub fn parse(text: &str) -> Result<Self, String> {
        match text {
            "plain" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}; use plain, csv, or json")),
        }
    }
}

/// Renders coefficients 0..=order in the chosen format, trailing newline
/// included.
pub fn render_series(series: &TruncatedSeries, format: Format) -> String {
    match format {
        Format::Plain => {
            let parts: Vec<String> = series
                .coefficients()
                .iter()
                .map(|c| c.to_string())
                .collect();
            format!("{}\n", parts.join(", "))
        }
        Format::Csv => {
            let mut out = String::from("k,value\n");
            for (k, c) in series.coefficients().iter().enumerate() {
                let _ = writeln!(out, "{k},{c}");
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = series
                .coefficients()
                .iter()
                .enumerate()
                .map(|(k, c)| json!({ "k": k, "value": c.to_string() }))
                .collect();
            format!("{}\n", Value::Array(rows))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_series::integer;

    #[test]
    fn formats_render_exact_strings() {
        let s = TruncatedSeries::one_plus(integer(4), 1);
        assert_eq!(render_series(&s, Format::Plain), "1, 4\n");
        assert_eq!(render_series(&s, Format::Csv), "k,value\n0,1\n1,4\n");
        assert_eq!(
            render_series(&s, Format::Json),
            "[{\"k\":0,\"value\":\"1\"},{\"k\":1,\"value\":\"4\"}]\n"
        );
    }
}
