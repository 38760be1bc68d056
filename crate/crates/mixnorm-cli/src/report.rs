//! Experiment reports and their CSV/JSON serialization. Reports carry every
//! knob that influenced the run so two reports with equal id, params, and
//! seed are comparable field by field; runtime_ms is the only value allowed
//! to differ between identical reruns.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment_id: String,
    pub params: BTreeMap<String, String>,
    pub curves: BTreeMap<String, Vec<(f64, f64)>>,
    pub scalars: BTreeMap<String, f64>,
    pub verdicts: BTreeMap<String, String>,
    pub seed: u64,
    pub tolerances: BTreeMap<String, f64>,
    pub runtime_ms: u64,
}

impl ExperimentReport {
    pub fn any_fail(&self) -> bool {
        self.verdicts.values().any(|v| v == "FAIL")
    }
}

/// Incremental report assembly for the experiment runners.
pub struct ReportBuilder {
    report: ExperimentReport,
}

impl ReportBuilder {
    pub fn new(id: &str, seed: u64) -> Self {
        Self {
            report: ExperimentReport {
                experiment_id: id.to_string(),
                params: BTreeMap::new(),
                curves: BTreeMap::new(),
                scalars: BTreeMap::new(),
                verdicts: BTreeMap::new(),
                seed,
                tolerances: BTreeMap::new(),
                runtime_ms: 0,
            },
        }
    }

    pub fn param(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.report.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn scalar(&mut self, key: &str, value: f64) -> &mut Self {
        self.report.scalars.insert(key.to_string(), value);
        self
    }

    pub fn curve(&mut self, key: &str, points: Vec<(f64, f64)>) -> &mut Self {
        self.report.curves.insert(key.to_string(), points);
        self
    }

    pub fn verdict(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.report.verdicts.insert(key.to_string(), value.to_string());
        self
    }

    /// PASS/FAIL verdict from a boolean check.
    pub fn check(&mut self, key: &str, ok: bool) -> &mut Self {
        self.verdict(key, if ok { "PASS" } else { "FAIL" })
    }

    pub fn tolerance(&mut self, key: &str, value: f64) -> &mut Self {
        self.report.tolerances.insert(key.to_string(), value);
        self
    }

    pub fn finish(self) -> ExperimentReport {
        self.report
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn render(report: &ExperimentReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => to_csv(report),
    }
}

/// One row per curve point; scalars, verdicts, seed, tolerances, and runtime
/// follow in a comment block so the data rows stay plot-ready.
fn to_csv(report: &ExperimentReport) -> String {
    let mut out = String::from("experiment_id,series,x,y\n");
    for (name, points) in &report.curves {
        for &(x, y) in points {
            writeln!(out, "{},{},{},{}", report.experiment_id, name, x, y).unwrap();
        }
    }
    out.push_str("# summary\n");
    writeln!(out, "# seed,{}", report.seed).unwrap();
    for (k, v) in &report.params {
        writeln!(out, "# param,{},{}", k, v).unwrap();
    }
    for (k, v) in &report.scalars {
        writeln!(out, "# scalar,{},{}", k, v).unwrap();
    }
    for (k, v) in &report.verdicts {
        writeln!(out, "# verdict,{},{}", k, v).unwrap();
    }
    for (k, v) in &report.tolerances {
        writeln!(out, "# tolerance,{},{}", k, v).unwrap();
    }
    writeln!(out, "# runtime_ms,{}", report.runtime_ms).unwrap();
    out
}

/// Write-then-rename so readers never observe a half-written report.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
    if let Some(dir) = dir {
        fs::create_dir_all(dir)?;
    }
    let file_name = path
        .file_name()
        .ok_or_else(|| std::io::Error::new(std::io::ErrorKind::InvalidInput, "path has no file name"))?;
    let mut tmp = path.to_path_buf();
    tmp.set_file_name(format!(".{}.tmp", file_name.to_string_lossy()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}
