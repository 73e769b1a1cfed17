//! Acceptance criteria 1–13, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is always printed. The
//! process exits non-zero when a criterion fails that is not listed in
//! `KNOWN_FAILURES`; listed ones still print FAIL.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use jsop_core::diagnostics::{grid::dyadic, run_suite, Status, SuiteConfig, SuiteReport, Verdict};
use jsop_core::kernels::MassKernelTable;
use jsop_core::quadrature::gauss_jacobi;
use jsop_core::{jacobi, oracle, JacobiParams, SobolevParams, SobolevSystem};

const EXPONENTS: [f64; 4] = [-0.5, 0.0, 0.5, 2.5];
/// (M, N) with at least one mass: both, derivative only, value only.
const REGIMES: [(f64, f64); 3] = [(1.0, 1.0), (0.0, 1.0), (1.0, 0.0)];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn sp(a: f64, b: f64, m: f64, n: f64, c: f64) -> SobolevParams {
    SobolevParams::from_values(a, b, m, n, c).unwrap()
}

fn jacobi_grid() -> Vec<(f64, f64)> {
    EXPONENTS
        .iter()
        .flat_map(|&a| EXPONENTS.iter().map(move |&b| (a, b)))
        .collect()
}

/// (α,β) ∈ {−0.5,0,0.5,2.5}², (M,N) ∈ {0,1}², c = ±1.
fn full_grid() -> Vec<SobolevParams> {
    let mut out = Vec::new();
    for (a, b) in jacobi_grid() {
        for m in [0.0, 1.0] {
            for n in [0.0, 1.0] {
                for c in [1.0, -1.0] {
                    out.push(sp(a, b, m, n, c));
                }
            }
        }
    }
    out
}

fn massive_grid() -> Vec<SobolevParams> {
    jacobi_grid()
        .into_iter()
        .flat_map(|(a, b)| REGIMES.iter().map(move |&(m, n)| sp(a, b, m, n, 1.0)))
        .collect()
}

fn label(p: &SobolevParams) -> String {
    format!(
        "(α={}, β={}, M={}, N={}, c={})",
        p.jacobi.alpha(),
        p.jacobi.beta(),
        p.mass_m,
        p.mass_n,
        p.c.value()
    )
}

fn verdict<'r>(r: &'r SuiteReport, id: &str) -> &'r Verdict {
    r.verdicts.iter().find(|v| v.id == id).unwrap()
}

/// Collects failing verdicts of `ids` over `configs` as `label id: message`.
fn failures(reports: &[(SobolevParams, SuiteReport)], ids: &[&str]) -> Vec<String> {
    let mut bad = Vec::new();
    for (p, r) in reports {
        for id in ids {
            let v = verdict(r, id);
            if v.status != Status::Pass && !(v.status == Status::Inconclusive && v.observed.is_empty()) {
                bad.push(format!("{} {id}: {}", label(p), v.message));
            }
        }
    }
    bad
}

fn summarize(bad: &[String], checked: usize, what: &str) -> Outcome {
    if bad.is_empty() {
        Outcome::new(true, format!("{what}: {checked} verdicts pass"))
    } else {
        let shown: Vec<&str> = bad.iter().take(4).map(String::as_str).collect();
        Outcome::new(
            false,
            format!("{what}: {} of {checked} verdicts fail; {}", bad.len(), shown.join("; ")),
        )
    }
}

fn c1_orthonormality() -> Outcome {
    const N: usize = 40;
    let mut worst = 0.0f64;
    let mut at = String::new();
    for p in full_grid() {
        let sys = SobolevSystem::new(&p, N).unwrap();
        let rule = gauss_jacobi(&p.jacobi, N + 2).unwrap();
        let qs: Vec<Vec<f64>> = rule.nodes.iter().map(|&x| sys.q_values(N, x).unwrap()).collect();
        let mass: Vec<(f64, f64)> = (0..=N).map(|k| sys.q_at_mass(k).unwrap()).collect();
        for i in 0..=N {
            for j in 0..=i {
                let mut g: f64 = rule.weights.iter().zip(&qs).map(|(w, q)| w * q[i] * q[j]).sum();
                g += p.mass_m * mass[i].0 * mass[j].0 + p.mass_n * mass[i].1 * mass[j].1;
                let defect = (g - if i == j { 1.0 } else { 0.0 }).abs();
                if defect > worst {
                    worst = defect;
                    at = format!("{} i={i} j={j}", label(&p));
                }
            }
        }
    }
    Outcome::new(
        worst < 1e-8,
        format!("max |<q_i,q_j> - δ_ij| = {worst:.2e} (tol 1e-8) over 128 inner products, degrees ≤ 40, worst at {at}"),
    )
}

fn c2_oracle() -> Outcome {
    let mut worst = 0.0f64;
    let mut at = String::new();
    for p in full_grid() {
        for row in oracle::compare(&p, 20).unwrap() {
            if row.coefficient_discrepancy > worst {
                worst = row.coefficient_discrepancy;
                at = format!("{} n={}", label(&p), row.degree);
            }
        }
    }
    Outcome::new(
        worst < 1e-7,
        format!("max coefficient discrepancy {worst:.2e} (tol 1e-7), n ≤ 20, worst at {at}"),
    )
}

/// `γ_n/k_n = ∫ p_n q_n w` by Gauss–Jacobi quadrature, independent of `D_n`.
fn c3_norm_ratio() -> Outcome {
    const N: usize = 200;
    let mut worst = 0.0f64;
    let mut at = String::new();
    for p in full_grid() {
        let sys = SobolevSystem::new(&p, N + 1).unwrap();
        let rule = gauss_jacobi(&p.jacobi, N + 2).unwrap();
        let tables: Vec<(Vec<f64>, Vec<f64>)> = rule
            .nodes
            .iter()
            .map(|&x| (jacobi::values(&p.jacobi, N, x), sys.q_values(N, x).unwrap()))
            .collect();
        for n in 0..=N {
            let g: f64 = rule.weights.iter().zip(&tables).map(|(w, (pv, qv))| w * pv[n] * qv[n]).sum();
            let err = (g * g * sys.d_n(n + 1) / sys.d_n(n) - 1.0).abs();
            if err > worst {
                worst = err;
                at = format!("{} n={n}", label(&p));
            }
        }
    }
    Outcome::new(
        worst < 1e-10,
        format!("max |(γ_n/k_n)² D_(n+1)/D_n - 1| = {worst:.2e} (tol 1e-10), n ≤ 200, γ_n/k_n by quadrature, worst at {at}"),
    )
}

/// `K_n(1,1) K_n^{(1,1)}(1,1) - K_n^{(0,1)}(1,1)² = K_{n-1}(1,1; w_{α+2,β}) K_n(1,1)`
/// with every kernel summed directly.
fn c4_determinant_identity() -> Outcome {
    const N: usize = 200;
    let mut worst = 0.0f64;
    let mut at = String::new();
    for (a, b) in jacobi_grid() {
        let params = JacobiParams::new(a, b).unwrap();
        let t = MassKernelTable::new(&params, N);
        for n in 1..=N {
            let lhs = t.k00[n] * t.k11_summed[n] - t.k01[n] * t.k01[n];
            let rhs = t.shifted_k00_before(n) * t.k00[n];
            let err = ((lhs - rhs) / rhs).abs();
            if err > worst {
                worst = err;
                at = format!("(α={a}, β={b}) n={n}");
            }
        }
    }
    Outcome::new(
        worst < 1e-8,
        format!("max relative gap {worst:.2e} (tol 1e-8), n ≤ 200, worst at {at}"),
    )
}

fn c5_kernel_limits() -> Outcome {
    let ids = ["eq15", "eq16", "eq17"];
    let cfg = SuiteConfig::default();
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    for (a, b) in jacobi_grid() {
        let p = sp(a, b, 0.0, 0.0, 1.0);
        let r = run_suite(&p, &ids, &cfg).unwrap();
        for v in &r.verdicts {
            let dev: Vec<f64> = v.observed.iter().map(|o| (o.value - 1.0).abs()).collect();
            let last = v.observed.last().unwrap();
            let monotone = dev.windows(2).all(|w| w[1] <= w[0] || w[1] <= 1e-8);
            worst = worst.max(*dev.last().unwrap());
            if last.degree != 4096 || dev.last().unwrap() >= &0.02 || !monotone || v.status != Status::Pass {
                bad.push(format!("(α={a}, β={b}) {}: {}", v.id, v.message));
            }
        }
    }
    let mut o = summarize(&bad, 48, "K_n(1,1), K01, K11 ratios at n = 4096, monotone over 32..4096");
    o.detail.push_str(&format!(", worst |ratio-1| = {worst:.2e} (tol 0.02)"));
    o
}

fn c10_christoffel_bounds(grid: &[SobolevParams]) -> Outcome {
    let cfg = SuiteConfig::default().with_degrees(dyadic(8, 12));
    let reports: Vec<_> = grid
        .iter()
        .map(|p| (*p, run_suite(p, &["thm5", "thm6"], &cfg).unwrap()))
        .collect();
    let bad = failures(&reports, &["thm5", "thm6"]);
    summarize(
        &bad,
        reports.len() * 2,
        "L_n(x,x)/d(x,n) bounded above on the full grid and below on [-1,0.95] (M>0) or [-1,1], n ∈ 256..4096",
    )
}

fn c11_christoffel_limit() -> Outcome {
    let cfg = SuiteConfig {
        christoffel_degrees: vec![8192],
        ..SuiteConfig::default()
    };
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    let configs = [sp(0.5, -0.5, 1.0, 1.0, 1.0), sp(0.5, -0.5, 0.0, 1.0, 1.0), sp(0.0, 0.0, 1.0, 0.0, -1.0)];
    for p in configs {
        let r = run_suite(&p, &["thm7"], &cfg).unwrap();
        let v = verdict(&r, "thm7");
        let dev = v.observed.last().unwrap().value;
        worst = worst.max(dev);
        if v.status != Status::Pass || dev >= 0.01 {
            bad.push(format!("{}: {}", label(&p), v.message));
        }
    }
    let mut o = summarize(&bad, 3, "n Λ_n(x) / (π w √(1-x²)) at x ∈ {-0.6,-0.2,0.3,0.7}, n = 8192, three (M,N) regimes");
    o.detail.push_str(&format!(", worst deviation {worst:.2e} (tol 0.01)"));
    o
}

fn c13_reflection() -> Outcome {
    let cfg = SuiteConfig::default();
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    let configs = [(0.5, -0.5, 1.0, 1.0), (0.0, 0.5, 0.0, 1.0), (-0.5, 0.0, 1.0, 0.0)];
    for (a, b, m, n) in configs {
        let minus = sp(a, b, m, n, -1.0);
        let plus = sp(b, a, m, n, 1.0);
        let mirrored = SuiteConfig {
            christoffel_points: cfg.christoffel_points.iter().map(|x| -x).collect(),
            ..cfg.clone()
        };
        let rm = run_suite(&minus, &["all"], &cfg).unwrap();
        let rp = run_suite(&plus, &["all"], &mirrored).unwrap();
        if !rm.ok {
            for v in rm.verdicts.iter().filter(|v| v.status == Status::Fail) {
                bad.push(format!("{} {}: {}", label(&minus), v.id, v.message));
            }
        }
        for (vm, vp) in rm.verdicts.iter().zip(&rp.verdicts) {
            if vm.status != vp.status || vm.observed.len() != vp.observed.len() {
                bad.push(format!("{} {}: verdict differs from the mirrored run", label(&minus), vm.id));
                continue;
            }
            for (om, op) in vm.observed.iter().zip(&vp.observed) {
                let gap = (om.value - op.value).abs() / op.value.abs().max(f64::MIN_POSITIVE);
                worst = worst.max(if om.value == op.value { 0.0 } else { gap });
            }
        }
    }
    if worst > 1e-10 {
        bad.push(format!("mirrored observations differ by {worst:.2e}"));
    }
    let mut o = summarize(&bad, 3, "full suite at c = -1 passes and mirrors the α↔β, c = +1 suite");
    o.detail.push_str(&format!(", max relative gap {worst:.2e} (tol 1e-10)"));
    o
}

/// Criteria that fail at the pinned tolerances for reasons recorded with the
/// project decisions; they still print FAIL.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    9,
    "at α = 2.5 the O(1/n) decay of max |q_n - p_n| carries a constant near 900, so 0.02 is first reached around n ≈ 45000",
)];

/// The worst α = 2.5 case of criterion 9 on a longer ladder.
fn extended_thm4() -> String {
    let p = sp(2.5, -0.5, 1.0, 1.0, 1.0);
    let cfg = SuiteConfig::default().with_degrees(dyadic(13, 16));
    let r = run_suite(&p, &["thm4"], &cfg).unwrap();
    let v = verdict(&r, "thm4");
    let obs: Vec<String> = v.observed.iter().map(|o| format!("n={} {:.3e}", o.degree, o.value)).collect();
    format!("; extended ladder at {}: {} ({:?})", label(&p), obs.join(", "), v.status)
}

fn main() -> ExitCode {
    type Check = Box<dyn FnOnce() -> Outcome>;
    let started = Instant::now();
    let mut outcomes: Vec<(usize, &str, Outcome, Duration, Option<Duration>)> = Vec::new();
    let mut run = |k: usize, name: &'static str, budget: Option<u64>, f: Check| {
        let t = Instant::now();
        let mut o = f();
        let dt = t.elapsed();
        let budget = budget.map(Duration::from_secs);
        if let Some(b) = budget {
            if dt >= b {
                o.pass = false;
            }
        }
        outcomes.push((k, name, o, dt, budget));
        let (k, name, o, dt, budget) = outcomes.last().unwrap();
        let time = match budget {
            Some(b) => format!("{:.1} s (budget {} s)", dt.as_secs_f64(), b.as_secs()),
            None => format!("{:.1} s", dt.as_secs_f64()),
        };
        println!(
            "criterion {k:2} {} {name}: {} [{time}]",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    };

    run(1, "Sobolev orthonormality", Some(30), Box::new(c1_orthonormality));
    run(2, "oracle equivalence", Some(60), Box::new(c2_oracle));
    run(3, "norm-ratio identity", None, Box::new(c3_norm_ratio));
    run(4, "determinant identity for K11", None, Box::new(c4_determinant_identity));
    run(5, "endpoint kernel limits", None, Box::new(c5_kernel_limits));

    // One suite run per (α,β,M,N) feeds criteria 6–9 and 12.
    let grid = massive_grid();
    let ids = [
        "thm1a", "thm1a-A", "thm1b-A", "thm1b-C", "lemma3-B", "thm2-q-at-1", "thm2-dq-at-1",
        "thm2-q-at-minus-1", "thm3", "corollary2", "thm4", "thm4-cosine", "lambda-at-1", "l11-at-1",
    ];
    let t = Instant::now();
    let cfg = SuiteConfig::default();
    let reports: Vec<(SobolevParams, SuiteReport)> =
        grid.iter().map(|p| (*p, run_suite(p, &ids, &cfg).unwrap())).collect();
    println!(
        "shared suite: {} configurations {{-0.5,0,0.5,2.5}}² x (M,N) ∈ {{(1,1),(0,1),(1,0)}}, dyadic n = 32..4096 [{:.1} s]",
        reports.len(),
        t.elapsed().as_secs_f64()
    );
    let count = |ids: &[&str]| {
        reports
            .iter()
            .map(|(_, r)| ids.iter().filter(|id| !verdict(r, id).observed.is_empty()).count())
            .sum::<usize>()
    };

    let c6 = ["thm1a", "thm1a-A", "thm1b-A", "thm1b-C", "lemma3-B"];
    let c7 = ["thm2-q-at-1", "thm2-dq-at-1", "thm2-q-at-minus-1"];
    let c9 = ["thm4", "thm4-cosine"];
    let c12 = ["lambda-at-1", "l11-at-1"];
    let o6 = summarize(&failures(&reports, &c6), count(&c6), "C_n → 1 and |A_n| ~ n^(-2α-2) (MN>0), A_n → -1/(α+2), C_n → 1/(α+2) (M=0), B_n → 1 (N=0), 2% at n = 4096, slopes ± 0.1");
    let o7 = summarize(&failures(&reports, &c7), count(&c7), "slopes of |q_n(1)|, |q_n'(1)| ± 0.1 over n ≥ 256; q_n(-1)/p_n(-1) within 1% at n = 4096");
    let mut o9 = summarize(&failures(&reports, &c9), count(&c9), "max_[-0.9,0.9] |q_n - p_n| < 0.02 at n = 4096 and decreasing; n·(cosine residual) bounded");
    if !o9.pass {
        o9.detail.push_str(&extended_thm4());
    }
    let o12 = summarize(&failures(&reports, &c12), count(&c12), "Λ_n(1)/M and 1/(N L_n^(1,1)(1,1)) within 2% of 1 at n = 4096");
    let o8 = {
        let mut bad = failures(&reports, &["thm3", "corollary2"]);
        let p = sp(-0.75, -0.75, 1.0, 1.0, 1.0);
        let r = run_suite(&p, &["thm3", "corollary2"], &cfg).unwrap();
        let extra = [(p, r)];
        bad.extend(failures(&extra, &["thm3", "corollary2"]));
        summarize(&bad, count(&["thm3", "corollary2"]) + 2, "normalized sup bounded over n ≤ 4096; sup-norm slope max(α,β)+1/2 ± 0.1, bounded at α=β=-0.75")
    };
    for (k, name, o) in [
        (6, "coefficient regimes", o6),
        (7, "endpoint exponents", o7),
        (8, "uniform bounds", o8),
        (9, "interior asymptotics", o9),
    ] {
        run(k, name, None, Box::new(move || o));
    }
    run(10, "Christoffel function bounds", None, Box::new(move || c10_christoffel_bounds(&grid)));
    run(11, "Christoffel limit", Some(60), Box::new(c11_christoffel_limit));
    run(12, "mass recovery", None, Box::new(move || o12));
    run(13, "c = -1 reflection", None, Box::new(c13_reflection));

    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.2.pass).map(|o| o.0).collect();
    println!(
        "acceptance: {} of {} criteria pass [{:.1} s]",
        outcomes.len() - failed.len(),
        outcomes.len(),
        started.elapsed().as_secs_f64()
    );
    for (k, why) in KNOWN_FAILURES {
        if failed.contains(k) {
            println!("known failure, criterion {k}: {why}");
        } else {
            println!("criterion {k} is listed as a known failure but passed");
        }
    }
    let unexpected: Vec<usize> = failed
        .iter()
        .copied()
        .filter(|k| !KNOWN_FAILURES.iter().any(|(j, _)| j == k))
        .collect();
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failing criteria: {unexpected:?}");
        ExitCode::FAILURE
    }
}
