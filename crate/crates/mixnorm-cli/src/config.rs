//! Run configuration: defaults, an optional flat key=value file, and
//! command-line overrides, with precedence CLI > file > default. Generic
//! knobs (p, q, alpha, seed, tol, degree, format, out) have dedicated
//! accessors; any other file key lands in the extras map for
//! experiment-specific use.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::error::CliError;
use crate::report::Format;

#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub p: Option<f64>,
    pub q: Option<f64>,
    pub alpha: Option<f64>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub degree: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub extra: BTreeMap<String, String>,
}

/// Accepts "inf"/"infinity" (any case) for the exponent scales.
pub fn parse_exponent(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") {
        return Ok(f64::INFINITY);
    }
    t.parse::<f64>().map_err(|e| format!("{}: {}", t, e))
}

impl RunConfig {
    /// File values fill any knob the command line left unset.
    pub fn absorb_file(&mut self, path: &PathBuf) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("config {}: {}", path.display(), e)))?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!(
                    "config {} line {}: expected key=value, got {:?}",
                    path.display(),
                    lineno + 1,
                    raw
                ))
            })?;
            let key = key.trim();
            let value = value.trim();
            let bad = |what: &str| {
                CliError::Usage(format!(
                    "config {} line {}: {} {:?}",
                    path.display(),
                    lineno + 1,
                    what,
                    value
                ))
            };
            match key {
                "p" => fill(&mut self.p, parse_exponent(value).map_err(|_| bad("bad exponent"))?),
                "q" => fill(&mut self.q, parse_exponent(value).map_err(|_| bad("bad exponent"))?),
                "alpha" => fill(&mut self.alpha, value.parse().map_err(|_| bad("bad real"))?),
                "seed" => fill(&mut self.seed, value.parse().map_err(|_| bad("bad integer"))?),
                "tol" => fill(&mut self.tol, value.parse().map_err(|_| bad("bad real"))?),
                "degree" => fill(&mut self.degree, value.parse().map_err(|_| bad("bad integer"))?),
                "format" => {
                    let f = match value {
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        _ => return Err(bad("bad format")),
                    };
                    fill(&mut self.format, f);
                }
                "out" => fill(&mut self.out, PathBuf::from(value)),
                _ => {
                    self.extra.entry(key.to_string()).or_insert_with(|| value.to_string());
                }
            }
        }
        Ok(())
    }

    pub fn p_or(&self, default: f64) -> f64 {
        self.p.unwrap_or(default)
    }

    pub fn q_or(&self, default: f64) -> f64 {
        self.q.unwrap_or(default)
    }

    pub fn alpha_or(&self, default: f64) -> f64 {
        self.alpha.unwrap_or(default)
    }

    pub fn seed_or(&self, default: u64) -> u64 {
        self.seed.unwrap_or(default)
    }

    pub fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    pub fn degree_or(&self, default: usize) -> usize {
        self.degree.unwrap_or(default)
    }

    pub fn extra_str(&self, key: &str, default: &str) -> String {
        self.extra.get(key).cloned().unwrap_or_else(|| default.to_string())
    }

    pub fn extra_f64(&self, key: &str, default: f64) -> Result<f64, CliError> {
        match self.extra.get(key) {
            None => Ok(default),
            Some(v) => parse_exponent(v)
                .map_err(|_| CliError::Usage(format!("config key {}: bad real {:?}", key, v))),
        }
    }

    pub fn extra_usize(&self, key: &str, default: usize) -> Result<usize, CliError> {
        match self.extra.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| CliError::Usage(format!("config key {}: bad integer {:?}", key, v))),
        }
    }
}

fn fill<T>(slot: &mut Option<T>, value: T) {
    if slot.is_none() {
        *slot = Some(value);
    }
}

/// Render an exponent for the params echo; infinity prints as "inf".
pub fn show_exponent(x: f64) -> String {
    if x.is_infinite() {
        "inf".to_string()
    } else {
        format!("{}", x)
    }
}
