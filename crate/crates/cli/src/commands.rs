use std::f64::consts::PI;

use jsop_core::diagnostics::{grid::dyadic, run_suite, SuiteConfig};
use jsop_core::{jacobi, oracle, SobolevParams, SobolevSystem};
use serde_json::{json, Map, Value};

use crate::args::{parse_range, OracleArgs, ParamArgs, TableArgs, VerifyArgs};
use crate::grid::parse_grid;
use crate::report::{emit_json, emit_table, float, Table};
use crate::CliError;

pub const EVAL_HEADER: &[&str] = &["n", "x", "p_n", "q_n", "dq_n"];
pub const KERNELS_HEADER: &[&str] = &["n", "x", "K_n_xx", "L_n_xx", "L_n_xc", "L01_n_xc"];
pub const CHRISTOFFEL_HEADER: &[&str] = &["n", "x", "n_lambda_n", "pi_w_sqrt"];
pub const VERIFY_HEADER: &[&str] = &["id", "status", "mode", "statistic", "last_degree", "last_value", "message"];
pub const ORACLE_HEADER: &[&str] = &[
    "degree",
    "coefficient_discrepancy",
    "mass_value_discrepancy",
    "norm_ratio_discrepancy",
];

fn sobolev(p: &ParamArgs) -> Result<SobolevParams, CliError> {
    Ok(SobolevParams::from_values(p.alpha, p.beta, p.mass_m, p.mass_n, p.c)?)
}

fn param_json(p: &ParamArgs) -> Value {
    json!({
        "alpha": p.alpha,
        "beta": p.beta,
        "mass_m": p.mass_m,
        "mass_n": p.mass_n,
        "c": p.c,
    })
}

struct Layout {
    sp: SobolevParams,
    lo: usize,
    hi: usize,
    xs: Vec<f64>,
    config: Value,
}

fn layout(a: &TableArgs, command: &str) -> Result<Layout, CliError> {
    let sp = sobolev(&a.params)?;
    let (lo, hi) = match (a.degree, &a.degrees) {
        (Some(n), _) => (n, n),
        (None, Some(r)) => parse_range(r).map_err(CliError::Usage)?,
        (None, None) => return Err(CliError::Usage("one of --degree or --degrees is required".into())),
    };
    let xs = match a.x {
        Some(x) if !(-1.0..=1.0).contains(&x) => {
            return Err(CliError::Usage(format!("--x {x} lies outside [-1, 1]")))
        }
        Some(x) => vec![x],
        None => parse_grid(a.grid(), a.seed).map_err(CliError::Usage)?,
    };
    let mut config = param_json(&a.params);
    let obj = config.as_object_mut().unwrap();
    obj.insert("command".into(), command.into());
    obj.insert("degrees".into(), json!([lo, hi]));
    match a.x {
        Some(x) => obj.insert("x".into(), x.into()),
        None => obj.insert("grid".into(), a.grid().into()),
    };
    obj.insert("seed".into(), a.seed.into());
    Ok(Layout { sp, lo, hi, xs, config })
}

pub fn eval(a: &TableArgs) -> Result<i32, CliError> {
    let l = layout(a, "eval")?;
    let sys = SobolevSystem::new(&l.sp, l.hi)?;
    let mut table = Table::new(EVAL_HEADER);
    for &x in &l.xs {
        let p = jacobi::values(&l.sp.jacobi, l.hi, x);
        let (q, dq) = sys.q_values_with_derivative(l.hi, x)?;
        for n in l.lo..=l.hi {
            table.push(vec![n.into(), float(x), float(p[n]), float(q[n]), float(dq[n])]);
        }
    }
    emit_table(&table, l.config, a.out.format, a.out.output.as_deref())?;
    Ok(0)
}

pub fn kernels(a: &TableArgs) -> Result<i32, CliError> {
    let l = layout(a, "kernels")?;
    let sys = SobolevSystem::new(&l.sp, l.hi)?;
    let mut table = Table::new(KERNELS_HEADER);
    for &x in &l.xs {
        let p = jacobi::values(&l.sp.jacobi, l.hi, x);
        let q = sys.q_values(l.hi, x)?;
        let (mut k, mut lxx) = (0.0, 0.0);
        for n in 0..=l.hi {
            k += p[n] * p[n];
            lxx += q[n] * q[n];
            if n >= l.lo {
                let (lxc, l01) = sys.l_at_mass(n, x)?;
                table.push(vec![n.into(), float(x), float(k), float(lxx), float(lxc), float(l01)]);
            }
        }
    }
    emit_table(&table, l.config, a.out.format, a.out.output.as_deref())?;
    Ok(0)
}

pub fn christoffel(a: &TableArgs) -> Result<i32, CliError> {
    let l = layout(a, "christoffel")?;
    let sys = SobolevSystem::new(&l.sp, l.hi)?;
    let mut table = Table::new(CHRISTOFFEL_HEADER);
    for &x in &l.xs {
        let q = sys.q_values(l.hi, x)?;
        let limit = PI * l.sp.jacobi.weight(x) * (1.0 - x * x).max(0.0).sqrt();
        let mut lxx = 0.0;
        for n in 0..=l.hi {
            lxx += q[n] * q[n];
            if n >= l.lo {
                table.push(vec![n.into(), float(x), float(n as f64 / lxx), float(limit)]);
            }
        }
    }
    emit_table(&table, l.config, a.out.format, a.out.output.as_deref())?;
    Ok(0)
}

pub fn verify(a: &VerifyArgs) -> Result<i32, CliError> {
    let sp = sobolev(&a.params)?;
    let mut cfg = SuiteConfig::default();
    if let Some(r) = &a.ladder {
        let (lo, hi) = parse_range(r).map_err(CliError::Usage)?;
        if lo == 0 || hi > 20 {
            return Err(CliError::Usage(format!("ladder exponents must lie in 1..=20, got {r}")));
        }
        cfg.degrees = dyadic(lo as u32, hi as u32);
        cfg.christoffel_degrees = dyadic(lo as u32, hi as u32 + 1);
    }
    let ids: Vec<&str> = a.suite.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let report = run_suite(&sp, &ids, &cfg)?;
    let mut config = param_json(&a.params);
    let obj = config.as_object_mut().unwrap();
    obj.insert("command".into(), "verify".into());
    obj.insert("suite".into(), ids.into());
    obj.insert("suite_config".into(), serde_json::to_value(&cfg).unwrap());
    match a.out.format {
        crate::args::Format::Csv => {
            let mut table = Table::new(VERIFY_HEADER);
            for v in &report.verdicts {
                let mode = v
                    .mode
                    .as_ref()
                    .and_then(|m| serde_json::to_value(m).ok())
                    .and_then(|m| m.get("kind").cloned())
                    .unwrap_or_else(|| "".into());
                let last = v.observed.last();
                table.push(vec![
                    v.id.clone().into(),
                    serde_json::to_value(v.status).unwrap(),
                    mode,
                    v.statistic.map_or(Value::Null, float),
                    last.map_or(Value::Null, |o| o.degree.into()),
                    last.map_or(Value::Null, |o| float(o.value)),
                    v.message.clone().into(),
                ]);
            }
            emit_table(&table, config, a.out.format, a.out.output.as_deref())?;
        }
        crate::args::Format::Json => {
            let mut doc = Map::new();
            doc.insert("verdicts".into(), serde_json::to_value(&report.verdicts).unwrap());
            doc.insert("summary".into(), serde_json::to_value(report.summary).unwrap());
            doc.insert("ok".into(), report.ok.into());
            emit_json(doc, config, a.out.output.as_deref())?;
        }
    }
    let s = report.summary;
    eprintln!("{} passed, {} failed, {} inconclusive", s.passed, s.failed, s.inconclusive);
    Ok(if report.ok { 0 } else { 1 })
}

pub fn oracle(a: &OracleArgs) -> Result<i32, CliError> {
    let sp = sobolev(&a.params)?;
    let rows = oracle::compare(&sp, a.max_degree)?;
    let worst = rows.iter().map(|r| r.coefficient_discrepancy).fold(0.0, f64::max);
    let mut table = Table::new(ORACLE_HEADER);
    for r in &rows {
        table.push(vec![
            r.degree.into(),
            float(r.coefficient_discrepancy),
            float(r.mass_value_discrepancy),
            float(r.norm_ratio_discrepancy),
        ]);
    }
    let mut config = param_json(&a.params);
    let obj = config.as_object_mut().unwrap();
    obj.insert("command".into(), "oracle".into());
    obj.insert("max_degree".into(), a.max_degree.into());
    obj.insert("tol".into(), a.tol.into());
    emit_table(&table, config, a.out.format, a.out.output.as_deref())?;
    eprintln!("max coefficient discrepancy {worst:.3e} (tol {:e})", a.tol);
    Ok(if worst < a.tol { 0 } else { 1 })
}
