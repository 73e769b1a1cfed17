//! Convergence and boundedness verdicts for the asymptotic estimates.
//!
//! Each registered estimate samples a sequence over a dyadic degree ladder
//! and judges it with one [`Mode`]. Estimates whose hypotheses exclude the
//! given masses are reported as inconclusive, not failed.

mod engine;
pub mod grid;
mod registry;

pub use engine::{judge, ls_slope, median, Judgement, Mode, Sign, Status};
pub use registry::IDS;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::SobolevParams;
use registry::{plan, Context, Plan};

/// Ladders, grids and tolerances shared by every estimate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    /// ascending degree ladder
    pub degrees: Vec<usize>,
    /// ladder for the Christoffel limit
    pub christoffel_degrees: Vec<usize>,
    pub slope_min_degree: usize,
    pub slope_window: f64,
    /// Chebyshev extrema in the bound grids, before boundary-layer points
    pub grid_points: usize,
    pub interior_points: usize,
    /// half-width of the compact set used for interior asymptotics
    pub interior_radius: f64,
    /// distance kept from the mass point for the lower kernel bound
    pub epsilon: f64,
    pub ratio_tol: f64,
    pub endpoint_tol: f64,
    pub limit_tol: f64,
    pub christoffel_tol: f64,
    pub vanishing_tol: f64,
    pub christoffel_points: Vec<f64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            degrees: grid::dyadic(5, 12),
            christoffel_degrees: grid::dyadic(5, 13),
            slope_min_degree: 256,
            slope_window: 0.1,
            grid_points: 1001,
            interior_points: 1001,
            interior_radius: 0.9,
            epsilon: 0.05,
            ratio_tol: 0.02,
            endpoint_tol: 0.01,
            limit_tol: 0.02,
            christoffel_tol: 0.01,
            vanishing_tol: 0.02,
            christoffel_points: vec![-0.6, -0.2, 0.3, 0.7],
        }
    }
}

impl SuiteConfig {
    /// Replaces both ladders by `degrees`.
    pub fn with_degrees(mut self, degrees: Vec<usize>) -> Self {
        self.christoffel_degrees = degrees.clone();
        self.degrees = degrees;
        self
    }

    fn max_degree(&self) -> usize {
        self.degrees
            .iter()
            .chain(&self.christoffel_degrees)
            .copied()
            .max()
            .unwrap_or(1)
    }
}

/// One registered estimate as applied to a given inner product.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateSpec {
    pub id: String,
    pub statement: String,
    pub mode: Mode,
    pub sign: Option<Sign>,
    pub degrees: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Observation {
    pub degree: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub mode: Option<Mode>,
    pub observed: Vec<Observation>,
    /// last deviation, last/median, fitted slope or last value, by mode
    pub statistic: Option<f64>,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub sp: SobolevParams,
    /// the inner product with its mass point moved to `+1`
    pub frame: SobolevParams,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
    /// no verdict failed
    pub ok: bool,
}

/// Expands `"all"` and checks every id against the registry.
pub fn resolve_ids<S: AsRef<str>>(ids: &[S]) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for id in ids {
        let id = id.as_ref();
        if id == "all" {
            out.extend(IDS.iter().map(|s| s.to_string()));
        } else if IDS.contains(&id) {
            out.push(id.to_string());
        } else {
            return Err(Error::UnknownEstimate(id.to_string()));
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|id| seen.insert(id.clone()));
    Ok(out)
}

/// The estimate `id` specialized to `sp`, or the reason it does not apply.
pub fn estimate_spec(id: &str, sp: &SobolevParams, cfg: &SuiteConfig) -> Result<std::result::Result<EstimateSpec, String>> {
    let ctx = Context::new(sp, cfg, 2)?;
    let out = match plan(id, &ctx)? {
        Plan::Skip { reason, .. } => Err(reason),
        Plan::Run(p) => Ok(EstimateSpec {
            id: id.to_string(),
            statement: p.statement.to_string(),
            mode: p.mode,
            sign: p.sign,
            degrees: if p.long_ladder {
                cfg.christoffel_degrees.clone()
            } else {
                cfg.degrees.clone()
            },
        }),
    };
    Ok(out)
}

fn run_in(ctx: &Context, id: &str, degrees: Option<&[usize]>, mode: Option<Mode>) -> Result<Verdict> {
    match plan(id, ctx)? {
        Plan::Skip { statement, reason } => Ok(Verdict {
            id: id.to_string(),
            statement: statement.to_string(),
            status: Status::Inconclusive,
            mode: None,
            observed: Vec::new(),
            statistic: None,
            message: reason,
        }),
        Plan::Run(p) => {
            let degrees = degrees.map(<[usize]>::to_vec).unwrap_or_else(|| {
                if p.long_ladder {
                    ctx.cfg.christoffel_degrees.clone()
                } else {
                    ctx.cfg.degrees.clone()
                }
            });
            let mode = mode.unwrap_or(p.mode);
            let series: Vec<(usize, f64)> = degrees
                .iter()
                .map(|&n| Ok((n, (p.quantity)(n)?)))
                .collect::<Result<_>>()?;
            let j = judge(&mode, &series, p.sign);
            Ok(Verdict {
                id: id.to_string(),
                statement: p.statement.to_string(),
                status: j.status,
                mode: Some(mode),
                observed: series
                    .iter()
                    .map(|&(degree, value)| Observation { degree, value })
                    .collect(),
                statistic: j.statistic,
                message: j.message,
            })
        }
    }
}

/// Samples `spec.id` on `spec.degrees` and judges it with `spec.mode`.
pub fn run_estimate(spec: &EstimateSpec, sp: &SobolevParams, cfg: &SuiteConfig) -> Result<Verdict> {
    if spec.degrees.windows(2).any(|w| w[0] >= w[1]) || spec.degrees.first() == Some(&0) {
        return Err(Error::Contract {
            op: "run_estimate",
            detail: "degrees must be positive and strictly ascending".into(),
        });
    }
    let max = spec.degrees.last().copied().unwrap_or(1);
    let ctx = Context::new(sp, cfg, max)?;
    run_in(&ctx, &spec.id, Some(&spec.degrees), Some(spec.mode))
}

/// Runs every id (`"all"` expands to the registry) and summarizes.
pub fn run_suite<S: AsRef<str>>(sp: &SobolevParams, ids: &[S], cfg: &SuiteConfig) -> Result<SuiteReport> {
    let ids = resolve_ids(ids)?;
    let ctx = Context::new(sp, cfg, cfg.max_degree())?;
    let verdicts: Vec<Verdict> = ids
        .par_iter()
        .map(|id| run_in(&ctx, id, None, None))
        .collect::<Result<_>>()?;
    let count = |s: Status| verdicts.iter().filter(|v| v.status == s).count();
    let summary = Summary {
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        inconclusive: count(Status::Inconclusive),
    };
    Ok(SuiteReport {
        sp: *sp,
        frame: ctx.frame,
        ok: summary.failed == 0,
        summary,
        verdicts,
    })
}
