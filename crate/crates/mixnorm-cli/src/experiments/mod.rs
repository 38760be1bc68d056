//! Experiment registry: every runnable id, what it checks, and its runner.

mod blocks;
mod flows;
mod maps;
mod spaces;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::ExperimentReport;

pub use blocks::{lacunary_sweep, xnu_majorant_sup, xnu_sweep};

pub struct Descriptor {
    pub id: &'static str,
    pub what: &'static str,
    pub run: fn(&RunConfig) -> Result<ExperimentReport, CliError>,
}

pub const REGISTRY: &[Descriptor] = &[
    Descriptor {
        id: "fejer-check",
        what: "Fejer block G_N: unit H1 mass, sup norm N, Parseval H2 value, support window",
        run: blocks::fejer_check,
    },
    Descriptor {
        id: "monomial-norms",
        what: "mixed norm of z^n against the Beta-function and calculus closed forms",
        run: spaces::monomial_norms,
    },
    Descriptor {
        id: "subordination",
        what: "integral means never grow under composition with an origin-fixing self-map",
        run: maps::subordination,
    },
    Descriptor {
        id: "co-bound",
        what: "composition operator norms stay under the Schwarz-Pick chain bound",
        run: maps::co_bound,
    },
    Descriptor {
        id: "flow-check",
        what: "numerical semiflows match the catalog closed forms and the semigroup law",
        run: flows::flow_check,
    },
    Descriptor {
        id: "koenigs",
        what: "Koenigs linearization residuals vanish along the flow",
        run: flows::koenigs,
    },
    Descriptor {
        id: "continuity",
        what: "orbit continuity decays for polynomials on the integral scales (q finite)",
        run: flows::continuity,
    },
    Descriptor {
        id: "no-strong-continuity",
        what: "the boundary-mass obstruction keeps orbit differences bounded away from zero at q = inf",
        run: flows::no_strong_continuity,
    },
    Descriptor {
        id: "tg-classify",
        what: "Volterra-type operator boundedness from the Bloch class of its symbol",
        run: maps::tg_classify,
    },
    Descriptor {
        id: "hl-derivative",
        what: "function and derivative sup-scale norms control each other across one weight step",
        run: spaces::hl_derivative,
    },
    Descriptor {
        id: "exp-membership",
        what: "membership pattern of exp(g) across the (p, alpha) grid",
        run: spaces::exp_membership,
    },
    Descriptor {
        id: "classify-maximal",
        what: "maximal closed subspace of orbit continuity: little-oh space or non-separable",
        run: flows::classify_maximal,
    },
    Descriptor {
        id: "embed-linfty",
        what: "two-sided sup-norm comparability of the lacunary block embedding",
        run: blocks::embed_linfty,
    },
    Descriptor {
        id: "xnu-embed",
        what: "two-sided bounds and majorant control for the binomial family sums",
        run: blocks::xnu_embed,
    },
    Descriptor {
        id: "approx-E",
        what: "damped approximants converge to the target with finite domain residuals",
        run: blocks::approx_e,
    },
    Descriptor {
        id: "arc-decay",
        what: "boundary arc mass decays for tame symbols and persists for the obstruction",
        run: flows::arc_decay,
    },
    Descriptor {
        id: "calibrate",
        what: "measure the reference constants and freeze them into the fixture file",
        run: crate::calibrate::run,
    },
];

pub fn find(id: &str) -> Result<&'static Descriptor, CliError> {
    REGISTRY.iter().find(|d| d.id == id).ok_or_else(|| {
        let ids: Vec<&str> = REGISTRY.iter().map(|d| d.id).collect();
        CliError::Usage(format!("unknown experiment {:?}; expected one of {}", id, ids.join(", ")))
    })
}

pub fn run(id: &str, cfg: &RunConfig) -> Result<ExperimentReport, CliError> {
    let descriptor = find(id)?;
    let started = std::time::Instant::now();
    let mut report = (descriptor.run)(cfg).map_err(|e| e.in_experiment(id))?;
    report.runtime_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Shared default seed so bare runs are reproducible out of the box.
pub const DEFAULT_SEED: u64 = 7;
