//! Table and JSON-lines rendering.

use std::io::{self, BufWriter, Write};

use serde_json::{json, Value};

use arith_theta_core::config::OutputFormat;
use arith_theta_core::suites::SuiteReport;

pub struct Printer {
    format: OutputFormat,
    sink: BufWriter<io::Stdout>,
    header_done: bool,
}

impl Printer {
    pub fn new(format: OutputFormat) -> Self {
        Self { format, sink: BufWriter::new(io::stdout()), header_done: false }
    }

    fn line(&mut self, s: &str) {
        // a closed pipe is not an error worth reporting
        let _ = writeln!(self.sink, "{s}");
    }

    fn json(&mut self, op: &str, input: Value, value: Value, err: Value) {
        let v = json!({ "op": op, "input": input, "value": value, "err": err });
        self.line(&v.to_string());
    }

    pub fn header(&mut self, cols: &[&str]) {
        if self.format == OutputFormat::Table && !self.header_done {
            self.line(&cols.join("\t"));
            self.header_done = true;
        }
    }

    /// An exact rational result.
    pub fn exact(&mut self, op: &str, input: Value, keys: &[String], value: &str) {
        match self.format {
            OutputFormat::Table => {
                let mut cols = keys.to_vec();
                cols.push(value.to_string());
                self.line(&cols.join("\t"));
            }
            OutputFormat::Json => self.json(op, input, json!(value), Value::Null),
        }
    }

    /// A floating-point result with its error estimate.
    pub fn numeric(&mut self, op: &str, input: Value, value: f64, err: f64) {
        match self.format {
            OutputFormat::Table => self.line(&format!("{value:.15e} ± {err:.3e}")),
            OutputFormat::Json => self.json(op, input, json!(value), json!(err)),
        }
    }

    pub fn record(&mut self, op: &str, input: Value, keys: &[String], value: Value, cols: &[String]) {
        match self.format {
            OutputFormat::Table => {
                let mut all = keys.to_vec();
                all.extend_from_slice(cols);
                self.line(&all.join("\t"));
            }
            OutputFormat::Json => self.json(op, input, value, Value::Null),
        }
    }

    pub fn suite(&mut self, rep: &SuiteReport) {
        let passed = rep.checks.iter().filter(|c| c.pass).count();
        let verdict = if rep.passed() { "PASS" } else { "FAIL" };
        match self.format {
            OutputFormat::Table => {
                self.line(&format!("suite {}: {verdict} ({passed}/{} checks)", rep.name, rep.checks.len()));
                for c in &rep.checks {
                    let mark = if c.pass { "ok  " } else { "FAIL" };
                    self.line(&format!("  {mark} {}: {}", c.label, c.detail));
                }
            }
            OutputFormat::Json => {
                for c in &rep.checks {
                    self.json(
                        "check",
                        json!({ "suite": rep.name, "check": c.label }),
                        json!({ "pass": c.pass, "detail": c.detail }),
                        Value::Null,
                    );
                }
                self.json(
                    "check",
                    json!({ "suite": rep.name }),
                    json!({ "pass": rep.passed(), "passed": passed, "total": rep.checks.len() }),
                    Value::Null,
                );
            }
        }
    }

    pub fn flush(&mut self) {
        let _ = self.sink.flush();
    }
}
