//! Report envelope and CSV formatting.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

/// Version of `schema/report.schema.json` the envelope conforms to.
pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Debug, Serialize)]
pub struct Report<C: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub config_echo: C,
    pub results: Vec<Value>,
    pub pass: bool,
}

impl<C: Serialize> Report<C> {
    pub fn write(&self, path: Option<&Path>) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        match path {
            Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

/// Fixed-point decimal with 17 significant digits.
pub fn sig17(x: f64) -> String {
    if x == 0.0 {
        return format!("{:.16}", 0.0);
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (16 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

/// `param,value` rows with a header line.
pub fn write_csv(path: &Path, rows: &[(f64, f64)]) -> Result<()> {
    let mut text = String::from("param,value\n");
    for (p, v) in rows {
        text.push_str(&sig17(*p));
        text.push(',');
        text.push_str(&sig17(*v));
        text.push('\n');
    }
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}
