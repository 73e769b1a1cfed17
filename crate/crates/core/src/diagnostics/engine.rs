//! Verdict rules shared by every estimate.

use serde::Serialize;

/// How a sequence over degrees is judged.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Mode {
    /// `|v - 1|` non-increasing over the last three degrees, last below `tol`.
    RatioToOne { tol: f64 },
    /// Last value at most 1.1 times the median over the ladder.
    Bounded,
    /// Last value at least the median over the ladder divided by 1.1.
    BoundedBelow,
    /// Least-squares slope of `log|v|` against `log n` over degrees
    /// `>= min_degree` lies within `window` of `target`.
    ExponentSlope {
        target: f64,
        window: f64,
        min_degree: usize,
    },
    /// Last value within `tol` of `target`: relative, or absolute when the
    /// target is zero.
    LimitValue { target: f64, tol: f64 },
    /// `|v|` non-increasing over the last three degrees, last at most `tol`.
    Vanishing { tol: f64 },
}

/// Required sign of every sampled value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// Outcome of applying a [`Mode`] to a sampled sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Judgement {
    pub status: Status,
    pub statistic: Option<f64>,
    pub message: String,
}

impl Judgement {
    fn new(status: Status, statistic: Option<f64>, message: impl Into<String>) -> Self {
        Self {
            status,
            statistic,
            message: message.into(),
        }
    }
}

const RATIO_BOUND: f64 = 1.1;
/// Below this the tail of a convergent sequence is treated as settled.
const SETTLED: f64 = 1e-8;

pub fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let m = v.len();
    if m % 2 == 1 {
        v[m / 2]
    } else {
        0.5 * (v[m / 2 - 1] + v[m / 2])
    }
}

/// Least-squares slope of `y` against `x`.
pub fn ls_slope(x: &[f64], y: &[f64]) -> f64 {
    let m = x.len() as f64;
    let mx = x.iter().sum::<f64>() / m;
    let my = y.iter().sum::<f64>() / m;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

fn non_increasing_tail(e: &[f64]) -> bool {
    let tail = &e[e.len().saturating_sub(3)..];
    tail.windows(2).all(|w| w[1] <= w[0] || w[1] <= SETTLED)
}

/// Slope of `log e` over the last three degrees, used to report rates.
fn tail_rate(series: &[(usize, f64)], e: &[f64]) -> Option<f64> {
    let k = series.len().saturating_sub(3);
    let (x, y): (Vec<f64>, Vec<f64>) = series[k..]
        .iter()
        .zip(&e[k..])
        .filter(|(_, v)| **v > 0.0)
        .map(|((n, _), v)| ((*n as f64).ln(), v.ln()))
        .unzip();
    (x.len() >= 2).then(|| ls_slope(&x, &y))
}

pub fn judge(mode: &Mode, series: &[(usize, f64)], sign: Option<Sign>) -> Judgement {
    if series.is_empty() {
        return Judgement::new(Status::Inconclusive, None, "no degrees sampled");
    }
    if let Some((n, v)) = series.iter().find(|(_, v)| !v.is_finite()) {
        return Judgement::new(Status::Fail, None, format!("non-finite value {v} at n={n}"));
    }
    let vals: Vec<f64> = series.iter().map(|(_, v)| *v).collect();
    if !matches!(mode, Mode::Vanishing { .. }) && vals.iter().all(|v| *v == 0.0) {
        return Judgement::new(Status::Inconclusive, None, "degenerate: quantity vanishes identically");
    }
    if let Some(sign) = sign {
        let bad = series.iter().find(|(_, v)| match sign {
            Sign::Positive => *v <= 0.0,
            Sign::Negative => *v >= 0.0,
        });
        if let Some((n, v)) = bad {
            return Judgement::new(Status::Fail, None, format!("sign: expected {sign:?}, got {v:e} at n={n}"));
        }
    }
    let last = *vals.last().unwrap();
    let n_last = series.last().unwrap().0;
    match *mode {
        Mode::RatioToOne { tol } => {
            let e: Vec<f64> = vals.iter().map(|v| (v - 1.0).abs()).collect();
            let e_last = *e.last().unwrap();
            let monotone = non_increasing_tail(&e);
            let rate = tail_rate(series, &e)
                .map(|r| format!(", empirical rate n^{r:.2}"))
                .unwrap_or_default();
            let ok = monotone && e_last < tol;
            let msg = format!(
                "|ratio-1| = {e_last:.3e} at n={n_last} (tol {tol}){}{rate}",
                if monotone { "" } else { ", not decreasing over the last three degrees" }
            );
            Judgement::new(status(ok), Some(e_last), msg)
        }
        Mode::Bounded => {
            let abs: Vec<f64> = vals.iter().map(|v| v.abs()).collect();
            let med = median(&abs);
            let r = abs.last().unwrap() / med;
            let msg = format!("last/median = {r:.4} (limit {RATIO_BOUND})");
            Judgement::new(status(r <= RATIO_BOUND), Some(r), msg)
        }
        Mode::BoundedBelow => {
            let abs: Vec<f64> = vals.iter().map(|v| v.abs()).collect();
            let med = median(&abs);
            let r = abs.last().unwrap() / med;
            let floor = med / RATIO_BOUND;
            let onset = (0..abs.len())
                .find(|&i| abs[i..].iter().all(|v| *v >= floor))
                .map(|i| series[i].0);
            let onset = onset.map_or("none".to_string(), |n| n.to_string());
            let msg = format!(
                "last/median = {r:.4} (limit 1/{RATIO_BOUND}), lower bound holds from n={onset}"
            );
            Judgement::new(status(r >= 1.0 / RATIO_BOUND), Some(r), msg)
        }
        Mode::ExponentSlope {
            target,
            window,
            min_degree,
        } => {
            let (x, y): (Vec<f64>, Vec<f64>) = series
                .iter()
                .filter(|(n, _)| *n >= min_degree)
                .map(|(n, v)| ((*n as f64).ln(), v.abs().ln()))
                .unzip();
            if x.len() < 2 {
                return Judgement::new(Status::Inconclusive, None, "fewer than two degrees in the fit window");
            }
            if y.iter().any(|v| !v.is_finite()) {
                return Judgement::new(Status::Fail, None, "zero value inside the fit window");
            }
            let slope = ls_slope(&x, &y);
            let ok = (slope - target).abs() <= window;
            let msg = format!("fitted exponent {slope:.4}, expected {target:.4} ± {window}");
            Judgement::new(status(ok), Some(slope), msg)
        }
        Mode::LimitValue { target, tol } => {
            let err = if target == 0.0 {
                last.abs()
            } else {
                ((last - target) / target).abs()
            };
            let kind = if target == 0.0 { "absolute" } else { "relative" };
            let msg = format!("value {last:.6e} at n={n_last}, target {target:.6e}, {kind} error {err:.3e} (tol {tol})");
            Judgement::new(status(err <= tol), Some(last), msg)
        }
        Mode::Vanishing { tol } => {
            let abs: Vec<f64> = vals.iter().map(|v| v.abs()).collect();
            let monotone = non_increasing_tail(&abs) || abs.iter().all(|v| *v == 0.0);
            let a_last = *abs.last().unwrap();
            let ok = monotone && a_last <= tol;
            let msg = format!(
                "|value| = {a_last:.3e} at n={n_last} (tol {tol}){}",
                if monotone { "" } else { ", not decreasing over the last three degrees" }
            );
            Judgement::new(status(ok), Some(a_last), msg)
        }
    }
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ladder(f: impl Fn(f64) -> f64) -> Vec<(usize, f64)> {
        (5..=12).map(|k| 1usize << k).map(|n| (n, f(n as f64))).collect()
    }

    #[test]
    fn ratio_to_one() {
        let s = ladder(|n| 1.0 + 3.0 / n);
        let j = judge(&Mode::RatioToOne { tol: 0.02 }, &s, None);
        assert_eq!(j.status, Status::Pass);
        assert!(j.message.contains("n^-1.00"));
        let j = judge(&Mode::RatioToOne { tol: 1e-4 }, &s, None);
        assert_eq!(j.status, Status::Fail);
        let s = ladder(|n| 1.0 + 0.01 * (n.log2() % 2.0) + 1e-3);
        assert_eq!(judge(&Mode::RatioToOne { tol: 0.02 }, &s, None).status, Status::Fail);
    }

    #[test]
    fn bounded_and_below() {
        let s = ladder(|n| 2.0 - 1.0 / n);
        assert_eq!(judge(&Mode::Bounded, &s, None).status, Status::Pass);
        let s = ladder(|n| n.ln());
        assert_eq!(judge(&Mode::Bounded, &s, None).status, Status::Fail);
        let s = ladder(|n| 1.0 / n.ln());
        let j = judge(&Mode::BoundedBelow, &s, None);
        assert_eq!(j.status, Status::Fail);
        let s = ladder(|n| 1.0 - 30.0 / n);
        let j = judge(&Mode::BoundedBelow, &s, None);
        assert_eq!(j.status, Status::Pass);
        assert!(j.message.contains("from n=256"), "{}", j.message);
    }

    #[test]
    fn slope_limit_vanishing() {
        let s = ladder(|n| -3.0 * n.powf(-1.5));
        let m = Mode::ExponentSlope { target: -1.5, window: 0.1, min_degree: 256 };
        let j = judge(&m, &s, Some(Sign::Negative));
        assert_eq!(j.status, Status::Pass);
        assert!((j.statistic.unwrap() + 1.5).abs() < 1e-12);
        assert_eq!(judge(&m, &s, Some(Sign::Positive)).status, Status::Fail);
        let s = ladder(|n| 2.0 + 1.0 / n);
        assert_eq!(judge(&Mode::LimitValue { target: 2.0, tol: 0.01 }, &s, None).status, Status::Pass);
        assert_eq!(judge(&Mode::LimitValue { target: 0.0, tol: 0.01 }, &s, None).status, Status::Fail);
        let zeros = ladder(|_| 0.0);
        assert_eq!(judge(&Mode::Vanishing { tol: 0.0 }, &zeros, None).status, Status::Pass);
        assert_eq!(judge(&Mode::Bounded, &zeros, None).status, Status::Inconclusive);
        let s = ladder(|n| 1.0 / n);
        assert_eq!(judge(&Mode::Vanishing { tol: 0.02 }, &s, None).status, Status::Pass);
    }

    #[test]
    fn non_finite_fails() {
        let mut s = ladder(|n| n);
        s[3].1 = f64::NAN;
        assert_eq!(judge(&Mode::Bounded, &s, None).status, Status::Fail);
    }

    proptest! {
        #[test]
        fn slope_recovers_power_laws(p in -8.0f64..8.0, c in 0.01f64..100.0) {
            let s = ladder(|n| c * n.powf(p));
            let m = Mode::ExponentSlope { target: p, window: 1e-9, min_degree: 32 };
            prop_assert_eq!(judge(&m, &s, None).status, Status::Pass);
        }

        #[test]
        fn judgement_is_deterministic(v in proptest::collection::vec(0.1f64..10.0, 8)) {
            let s: Vec<(usize, f64)> = v.iter().enumerate().map(|(i, x)| (32 << i, *x)).collect();
            for m in [Mode::Bounded, Mode::BoundedBelow, Mode::RatioToOne { tol: 0.5 }] {
                prop_assert_eq!(judge(&m, &s, None), judge(&m, &s, None));
            }
        }
    }
}
