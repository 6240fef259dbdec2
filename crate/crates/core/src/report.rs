//! Machine-readable reports emitted by the command-line tool.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::Witness;
use crate::measures::FunctionClass;
use crate::optimizer::Argmax;

pub const FORMAT_VERSION: &str = "1";

/// Fixed leading CSV columns.
pub const CSV_HEADER: &str = "class,lambda,n,value,bound,gap,converged";

/// How a row's value is compared with its bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `|value − bound| ≤ tol`.
    Equality,
    /// `value ≤ bound + tol`.
    UpperBound,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Row {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<FunctionClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    pub value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub starts_used: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub argmax: Option<Vec<Argmax>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Row {
    /// Whether the row's check holds at `tol`; rows without a check or bound pass.
    pub fn passes(&self, tol: f64) -> bool {
        match (self.check, self.bound) {
            (Some(Check::Equality), Some(b)) => (self.value - b).abs() <= tol,
            (Some(Check::UpperBound), Some(b)) => self.value <= b + tol,
            _ => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub rows: Vec<Row>,
    pub format_version: String,
}

impl Report {
    pub fn new(
        command: impl Into<String>,
        parameters: BTreeMap<String, serde_json::Value>,
        rows: Vec<Row>,
    ) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyReport);
        }
        Ok(Self {
            command: command.into(),
            parameters,
            rows,
            format_version: FORMAT_VERSION.to_string(),
        })
    }

    pub fn all_pass(&self, tol: f64) -> bool {
        self.rows.iter().all(|r| r.passes(tol))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown format '{other}' (expected json or csv)")),
        }
    }
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn format_report(report: &Report, format: Format) -> Result<String> {
    if report.rows.is_empty() {
        return Err(Error::EmptyReport);
    }
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let with_radius = report.rows.iter().any(|r| r.radius.is_some());
            let mut out = String::from(CSV_HEADER);
            if with_radius {
                out.push_str(",radius");
            }
            out.push('\n');
            for r in &report.rows {
                let label = r
                    .class
                    .map(|c| c.tag().to_string())
                    .or_else(|| r.function.clone())
                    .unwrap_or_default();
                let _ = write!(
                    out,
                    "{},{},{},{},{},{},{}",
                    label,
                    opt_num(r.lambda),
                    r.n.map(|n| n.to_string()).unwrap_or_default(),
                    num(r.value),
                    opt_num(r.bound),
                    opt_num(r.gap),
                    r.converged.map(|c| c.to_string()).unwrap_or_default(),
                );
                if with_radius {
                    let _ = write!(out, ",{}", opt_num(r.radius));
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}
