//! Calibration oracle: measures the embedding constants, the binomial family
//! window, and the obstruction floor, then freezes them into a fixture file
//! for the test suite to read back.

use std::fmt::Write as _;
use std::path::PathBuf;

use mixnorm::constructions::obstruction_fn;
use mixnorm::norms::SpaceParams;
use mixnorm::semigroup::{continuity_probe, default_t_grid, GeneratorSpec};
use mixnorm::C64;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::experiments::{lacunary_sweep, xnu_majorant_sup, xnu_sweep, DEFAULT_SEED};
use crate::report::{write_atomic, ExperimentReport, ReportBuilder};

const LACUNARY_K: usize = 10;
const LACUNARY_BLOCKS: usize = 5;
const XNU_NU: f64 = 0.5;
const XNU_BETA: f64 = -2.0;

pub fn run(cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let dir = PathBuf::from(cfg.extra_str("fixtures_dir", "fixtures"));
    let sp = SpaceParams::sup_scale(2.0, 1.0).map_err(CliError::from)?;

    let lac = lacunary_sweep(&sp, LACUNARY_K, LACUNARY_BLOCKS)?;
    let xnu = xnu_sweep(&sp, XNU_NU, XNU_BETA, LACUNARY_K, LACUNARY_BLOCKS)?;
    let majorant = xnu_majorant_sup(&sp, XNU_NU, XNU_BETA, LACUNARY_K, LACUNARY_BLOCKS)?;

    // Degree 2^20 keeps the truncation certified past radius 1 - 1e-4,
    // the smallest probe time; shallower cuts starve the ratio there.
    let f = obstruction_fn(0.0, 1.0, 2.0, 1 << 20)?;
    let spec = GeneratorSpec::dilation(C64::new(1.0, 0.0))?;
    let ts = default_t_grid(1e-1, 1e-4);
    let probe = continuity_probe(&spec, &f, &sp, &ts)?;
    let floor =
        probe.values.iter().map(|v| v / probe.norm_f).fold(f64::MAX, f64::min);

    let mut text = String::new();
    let _ = writeln!(text, "# Measured reference constants. Regenerate with: mixnorm calibrate");
    let _ = writeln!(text, "# The resolution block records the oracle settings the numbers");
    let _ = writeln!(text, "# depend on; a change there invalidates the fixture visibly.");
    let _ = writeln!(text);
    let _ = writeln!(text, "[resolution]");
    let _ = writeln!(text, "steps_per_decade = 14");
    let _ = writeln!(text, "u_floor = {:?}", 2f64.powi(-40));
    let _ = writeln!(text, "quadrature_tol = {:?}", 1e-9);
    let _ = writeln!(text);
    let _ = writeln!(text, "[lacunary]");
    let _ = writeln!(text, "k_base = {}", LACUNARY_K);
    let _ = writeln!(text, "blocks = {}", LACUNARY_BLOCKS);
    let _ = writeln!(text, "p = {:?}", sp.p);
    let _ = writeln!(text, "q = \"inf\"");
    let _ = writeln!(text, "alpha = {:?}", sp.alpha);
    let _ = writeln!(text, "lower = {:?}", lac.lower);
    let _ = writeln!(text, "upper = {:?}", lac.upper);
    let _ = writeln!(text, "drift = {:?}", lac.drift);
    let _ = writeln!(text);
    let _ = writeln!(text, "[xnu]");
    let _ = writeln!(text, "k_base = {}", LACUNARY_K);
    let _ = writeln!(text, "blocks = {}", LACUNARY_BLOCKS);
    let _ = writeln!(text, "nu = {:?}", XNU_NU);
    let _ = writeln!(text, "beta = {:?}", XNU_BETA);
    let _ = writeln!(text, "lower = {:?}", xnu.lower);
    let _ = writeln!(text, "upper = {:?}", xnu.upper);
    let _ = writeln!(text, "drift = {:?}", xnu.drift);
    let _ = writeln!(text, "majorant_sup = {:?}", majorant);
    let _ = writeln!(text);
    let _ = writeln!(text, "[continuity]");
    let _ = writeln!(text, "obstruction_floor = {:?}", floor);

    let path = dir.join("calibration.toml");
    write_atomic(&path, &text)?;

    let mut b = ReportBuilder::new("calibrate", cfg.seed_or(DEFAULT_SEED));
    b.param("fixture", path.display())
        .scalar("lacunary_lower", lac.lower)
        .scalar("lacunary_upper", lac.upper)
        .scalar("lacunary_drift", lac.drift)
        .scalar("xnu_lower", xnu.lower)
        .scalar("xnu_upper", xnu.upper)
        .scalar("xnu_drift", xnu.drift)
        .scalar("xnu_majorant", majorant)
        .scalar("obstruction_floor", floor)
        .check("calibrated", lac.lower > 0.0 && xnu.lower > 0.0 && floor.is_finite());
    Ok(b.finish())
}
