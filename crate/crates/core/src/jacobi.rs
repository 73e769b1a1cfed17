//! Orthonormal Jacobi polynomials `p_n^{(α,β)}` with respect to
//! `w_{α,β}(x) = (1-x)^α (1+x)^β` on `[-1, 1]`.
//!
//! Values come from the forward three-term recurrence of the orthonormal
//! family, which is stable on the interval. Closed-form quantities
//! (norms, leading coefficients, endpoint values) are evaluated in log space.

use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::ln_gamma;

/// Exponents of the Jacobi weight. Both must exceed `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacobiParams {
    alpha: f64,
    beta: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite()) {
            return Err(Error::Domain(format!(
                "Jacobi exponents must be finite (alpha={alpha}, beta={beta})"
            )));
        }
        if alpha <= -1.0 || beta <= -1.0 {
            return Err(Error::Domain(format!(
                "Jacobi exponents must exceed -1 (alpha={alpha}, beta={beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }

    /// Legendre weight `w = 1`.
    pub fn legendre() -> Self {
        Self {
            alpha: 0.0,
            beta: 0.0,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The reflected family `(β, α)`.
    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    /// `(α + da, β + db)` for non-negative shifts.
    pub fn shifted(&self, da: f64, db: f64) -> Self {
        debug_assert!(da >= 0.0 && db >= 0.0);
        Self {
            alpha: self.alpha + da,
            beta: self.beta + db,
        }
    }

    /// `w_{α,β}(x)`; zero outside `[-1, 1]`.
    pub fn weight(&self, x: f64) -> f64 {
        if !(-1.0..=1.0).contains(&x) {
            return 0.0;
        }
        (1.0 - x).powf(self.alpha) * (1.0 + x).powf(self.beta)
    }

    /// `ln μ_0`, the log of the total mass of the weight.
    pub fn ln_mass(&self) -> f64 {
        ln_norm_squared(self, 0)
    }

    /// Total mass `μ_0 = 2^{α+β+1} B(α+1, β+1) = ‖P_0‖²`.
    pub fn mass(&self) -> f64 {
        self.ln_mass().exp()
    }
}

/// Recurrence coefficients of the orthonormal family:
/// `x p_k = a_{k+1} p_{k+1} + b_k p_k + a_k p_{k-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Recurrence {
    /// `b_0 ..= b_n`
    pub diag: Vec<f64>,
    /// `a_0 ..= a_{n+1}` with `a_0 = 0` as a placeholder.
    pub offdiag: Vec<f64>,
}

/// Diagonal recurrence coefficient `b_k`.
#[inline]
pub(crate) fn recurrence_b(params: &JacobiParams, k: usize) -> f64 {
    let (a, b) = (params.alpha, params.beta);
    if k == 0 {
        // the generic form is 0/0 when α + β = 0
        return (b - a) / (a + b + 2.0);
    }
    let s = 2.0 * k as f64 + a + b;
    (b - a) * (b + a) / (s * (s + 2.0))
}

/// Off-diagonal recurrence coefficient `a_k`, `k >= 1`.
#[inline]
pub(crate) fn recurrence_a(params: &JacobiParams, k: usize) -> f64 {
    debug_assert!(k >= 1);
    let (a, b) = (params.alpha, params.beta);
    if k == 1 {
        // the factor (α+β+1) cancels; the generic form is 0/0 at α + β = -1
        let s = 2.0 + a + b;
        return (4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0))).sqrt();
    }
    let kf = k as f64;
    let s = 2.0 * kf + a + b;
    let num = kf * (kf + a) * (kf + b) * (kf + a + b);
    2.0 / s * (num / ((s - 1.0) * (s + 1.0))).sqrt()
}

pub fn recurrence_coeffs(params: &JacobiParams, n: usize) -> Recurrence {
    let diag = (0..=n).map(|k| recurrence_b(params, k)).collect();
    let offdiag = std::iter::once(0.0)
        .chain((1..=n + 1).map(|k| recurrence_a(params, k)))
        .collect();
    Recurrence { diag, offdiag }
}

/// Values (and optionally first derivatives) of `p_0 ..= p_n` at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalTable {
    pub params: JacobiParams,
    pub x: f64,
    pub values: Vec<f64>,
    pub derivs: Option<Vec<f64>>,
}

impl EvalTable {
    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }
}

/// Forward recurrence for `p_0(x) ..= p_n(x)`.
pub fn values(params: &JacobiParams, n: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    let p0 = (-0.5 * params.ln_mass()).exp();
    out.push(p0);
    if n == 0 {
        return out;
    }
    let mut prev = 0.0;
    let mut cur = p0;
    let mut a_cur = 0.0;
    for k in 0..n {
        let a_next = recurrence_a(params, k + 1);
        let next = ((x - recurrence_b(params, k)) * cur - a_cur * prev) / a_next;
        out.push(next);
        prev = cur;
        cur = next;
        a_cur = a_next;
    }
    out
}

pub fn eval(params: &JacobiParams, n: usize, x: f64) -> EvalTable {
    EvalTable {
        params: *params,
        x,
        values: values(params, n, x),
        derivs: None,
    }
}

/// Scale `s_n` in `p_n^{(α,β)}' = s_n p_{n-1}^{(α+1,β+1)}`.
///
/// Differentiating `P_n^{(α,β)}` gives `(n+α+β+1)/2 · P_{n-1}^{(α+1,β+1)}`;
/// dividing by the two norms, the gamma factors collapse to
/// `s_n = sqrt(n (n+α+β+1))`.
#[inline]
pub fn derivative_scale(params: &JacobiParams, n: usize) -> f64 {
    let nf = n as f64;
    (nf * (nf + params.alpha + params.beta + 1.0)).sqrt()
}

/// `p_0'(x) ..= p_n'(x)`.
pub fn eval_derivative(params: &JacobiParams, n: usize, x: f64) -> Vec<f64> {
    let mut out = vec![0.0; n + 1];
    if n == 0 {
        return out;
    }
    let raised = values(&params.shifted(1.0, 1.0), n - 1, x);
    for k in 1..=n {
        out[k] = derivative_scale(params, k) * raised[k - 1];
    }
    out
}

pub fn eval_with_derivative(params: &JacobiParams, n: usize, x: f64) -> EvalTable {
    EvalTable {
        params: *params,
        x,
        values: values(params, n, x),
        derivs: Some(eval_derivative(params, n, x)),
    }
}

/// `ln ‖P_n^{(α,β)}‖²` in the classical normalization.
pub fn ln_norm_squared(params: &JacobiParams, n: usize) -> f64 {
    let (a, b) = (params.alpha, params.beta);
    let nf = n as f64;
    let head = (a + b + 1.0) * LN_2 + ln_gamma(nf + a + 1.0) + ln_gamma(nf + b + 1.0);
    if n == 0 {
        // (α+β+1) Γ(α+β+1) = Γ(α+β+2); avoids the pole at α+β+1 = 0
        return head - ln_gamma(a + b + 2.0);
    }
    head - (2.0 * nf + a + b + 1.0).ln() - ln_gamma(nf + 1.0) - ln_gamma(nf + a + b + 1.0)
}

pub fn norm_squared(params: &JacobiParams, n: usize) -> f64 {
    ln_norm_squared(params, n).exp()
}

/// Leading coefficients of `P_n` (`a_n`) and of `p_n` (`k_n = a_n / ‖P_n‖`),
/// both kept as logarithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeadingCoeff {
    pub ln_a: f64,
    pub ln_k: f64,
}

impl LeadingCoeff {
    pub fn a(&self) -> f64 {
        self.ln_a.exp()
    }

    pub fn k(&self) -> f64 {
        self.ln_k.exp()
    }
}

pub fn leading_coeff(params: &JacobiParams, n: usize) -> LeadingCoeff {
    let ln_a = if n == 0 {
        0.0
    } else {
        let (a, b) = (params.alpha, params.beta);
        let nf = n as f64;
        ln_gamma(2.0 * nf + a + b + 1.0)
            - nf * LN_2
            - ln_gamma(nf + 1.0)
            - ln_gamma(nf + a + b + 1.0)
    };
    LeadingCoeff {
        ln_a,
        ln_k: ln_a - 0.5 * ln_norm_squared(params, n),
    }
}

/// `p_n` and `p_n'` at both ends of the interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointValues {
    pub at_plus: f64,
    pub deriv_at_plus: f64,
    pub at_minus: f64,
    pub deriv_at_minus: f64,
}

/// `p_n(1)` from `P_n(1) = Γ(n+α+1) / (Γ(α+1) n!)`.
pub fn value_at_one(params: &JacobiParams, n: usize) -> f64 {
    let nf = n as f64;
    let a = params.alpha;
    let ln_p = ln_gamma(nf + a + 1.0) - ln_gamma(a + 1.0) - ln_gamma(nf + 1.0);
    (ln_p - 0.5 * ln_norm_squared(params, n)).exp()
}

/// `p_n'(1)`.
pub fn derivative_at_one(params: &JacobiParams, n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    derivative_scale(params, n) * value_at_one(&params.shifted(1.0, 1.0), n - 1)
}

pub fn endpoint_values(params: &JacobiParams, n: usize) -> EndpointValues {
    let refl = params.swapped();
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    EndpointValues {
        at_plus: value_at_one(params, n),
        deriv_at_plus: derivative_at_one(params, n),
        at_minus: sign * value_at_one(&refl, n),
        deriv_at_minus: -sign * derivative_at_one(&refl, n),
    }
}

/// `(p_k(1), p_k'(1))` for `k = 0 ..= n`.
pub fn values_at_one(params: &JacobiParams, n: usize) -> (Vec<f64>, Vec<f64>) {
    let vals = (0..=n).map(|k| value_at_one(params, k)).collect();
    let raised = params.shifted(1.0, 1.0);
    let ders = (0..=n)
        .map(|k| {
            if k == 0 {
                0.0
            } else {
                derivative_scale(params, k) * value_at_one(&raised, k - 1)
            }
        })
        .collect();
    (vals, ders)
}

/// Amplitude `r_n = 2^{(α+β+1)/2} (π n)^{-1/2} / ‖P_n‖` of the interior
/// cosine asymptotics; tends to `sqrt(2/π)`.
pub fn cosine_amplitude(params: &JacobiParams, n: usize) -> f64 {
    let nf = n as f64;
    (0.5 * (params.alpha + params.beta + 1.0) * LN_2
        - 0.5 * (PI * nf).ln()
        - 0.5 * ln_norm_squared(params, n))
    .exp()
}

/// `(1-x)^{-α/2-1/4} (1+x)^{-β/2-1/4} cos(kθ + γ)` with `x = cos θ`,
/// `k = n + (α+β+1)/2`, `γ = -(α+1/2)π/2`. Multiply by an amplitude to get the
/// leading interior term of degree `n`.
pub fn cosine_profile(params: &JacobiParams, n: usize, x: f64) -> f64 {
    let (a, b) = (params.alpha, params.beta);
    let theta = x.clamp(-1.0, 1.0).acos();
    let freq = n as f64 + 0.5 * (a + b + 1.0);
    let phase = -(a + 0.5) * PI / 2.0;
    (1.0 - x).powf(-0.5 * a - 0.25) * (1.0 + x).powf(-0.5 * b - 0.25) * (freq * theta + phase).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::gauss_jacobi;

    const GRID: [f64; 6] = [-0.75, -0.5, 0.0, 0.5, 1.0, 2.5];

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * a.abs().max(b.abs()).max(1e-300)
    }

    #[test]
    fn rejects_invalid_exponents() {
        assert!(JacobiParams::new(-1.0, 0.0).is_err());
        assert!(JacobiParams::new(0.0, -1.5).is_err());
        assert!(JacobiParams::new(f64::NAN, 0.0).is_err());
        assert!(JacobiParams::new(-0.999, 3.0).is_ok());
    }

    #[test]
    fn legendre_recurrence_start() {
        let r = recurrence_coeffs(&JacobiParams::legendre(), 3);
        assert_eq!(r.diag[0], 0.0);
        assert!((r.offdiag[1] - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!(r.offdiag[1..].iter().all(|&a| a > 0.0));
    }

    #[test]
    fn symmetric_weight_has_zero_diagonal() {
        for a in GRID {
            let r = recurrence_coeffs(&JacobiParams::new(a, a).unwrap(), 20);
            assert!(r.diag.iter().all(|&b| b.abs() < 1e-15), "alpha=beta={a}");
        }
    }

    #[test]
    fn first_diagonal_coefficient_for_alpha_one() {
        // b_0 = μ_1/μ_0 with μ_0 = 2, μ_1 = -2/3
        let r = recurrence_coeffs(&JacobiParams::new(1.0, 0.0).unwrap(), 1);
        assert!((r.diag[0] + 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn recurrence_at_alpha_plus_beta_minus_one() {
        // Chebyshev of the first kind, orthonormal: a_1 = 1/sqrt(2), a_k = 1/2
        let r = recurrence_coeffs(&JacobiParams::new(-0.5, -0.5).unwrap(), 4);
        assert!((r.offdiag[1] - 0.5f64.sqrt()).abs() < 1e-15);
        for k in 2..=5 {
            assert!((r.offdiag[k] - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn legendre_values() {
        let p = JacobiParams::legendre();
        assert!((eval(&p, 0, 0.3).values[0] - 0.5f64.sqrt()).abs() < 1e-15);
        let t = eval(&p, 3, 1.0);
        assert!((t.values[1] - 1.5f64.sqrt()).abs() < 1e-14);
        assert!((t.values[2] - 2.5f64.sqrt()).abs() < 1e-14);
        assert!((t.values[3] - 3.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn legendre_derivatives() {
        let p = JacobiParams::legendre();
        let d = eval_derivative(&p, 2, 1.0);
        assert_eq!(d[0], 0.0);
        assert!((d[1] - 1.5f64.sqrt()).abs() < 1e-14);
        assert!((d[2] - 3.0 * 2.5f64.sqrt()).abs() < 1e-13);
        let d = eval_derivative(&p, 1, -0.37);
        assert!((d[1] - 1.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn derivative_scale_matches_norm_ratio() {
        for a in GRID {
            for b in GRID {
                let p = JacobiParams::new(a, b).unwrap();
                let raised = p.shifted(1.0, 1.0);
                for n in 1..60 {
                    let nf = n as f64;
                    let via_norms = 0.5
                        * (nf + a + b + 1.0)
                        * (0.5 * (ln_norm_squared(&raised, n - 1) - ln_norm_squared(&p, n))).exp();
                    assert!(close(derivative_scale(&p, n), via_norms, 1e-12), "{a} {b} {n}");
                }
            }
        }
    }

    #[test]
    fn derivative_matches_central_differences() {
        let h = 1e-6;
        for a in GRID {
            for b in GRID {
                let p = JacobiParams::new(a, b).unwrap();
                for &x in &[-0.83, -0.2, 0.0, 0.41, 0.9] {
                    let d = eval_derivative(&p, 30, x);
                    let up = values(&p, 30, x + h);
                    let dn = values(&p, 30, x - h);
                    for k in 1..=30 {
                        let fd = (up[k] - dn[k]) / (2.0 * h);
                        let scale = d[k].abs().max(1.0);
                        assert!((d[k] - fd).abs() <= 1e-5 * scale, "{a} {b} x={x} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn norms_and_leading_coefficients() {
        let leg = JacobiParams::legendre();
        assert!((norm_squared(&leg, 2) - 0.4).abs() < 1e-15);
        assert!((norm_squared(&leg, 0) - 2.0).abs() < 1e-15);
        assert!((norm_squared(&JacobiParams::new(1.0, 0.0).unwrap(), 0) - 2.0).abs() < 1e-15);
        let lc = leading_coeff(&leg, 2);
        assert!((lc.a() - 1.5).abs() < 1e-14);
        assert!((lc.k() - 1.5 / 0.4f64.sqrt()).abs() < 1e-13);
        let lc0 = leading_coeff(&leg, 0);
        assert_eq!(lc0.a(), 1.0);
        assert!((lc0.k() - 0.5f64.sqrt()).abs() < 1e-15);
        // the pole at α+β+1 = 0 must not leak into n = 0
        let cheb = JacobiParams::new(-0.5, -0.5).unwrap();
        assert!((norm_squared(&cheb, 0) - PI).abs() < 1e-13);
    }

    #[test]
    fn leading_coefficient_is_product_of_reciprocal_offdiagonals() {
        for a in GRID {
            for b in GRID {
                let p = JacobiParams::new(a, b).unwrap();
                let r = recurrence_coeffs(&p, 100);
                let mut ln_k = leading_coeff(&p, 0).ln_k;
                for n in 1..=100 {
                    ln_k -= r.offdiag[n].ln();
                    let direct = leading_coeff(&p, n).ln_k;
                    assert!((ln_k.exp() / direct.exp() - 1.0).abs() < 1e-10, "{a} {b} {n}");
                }
            }
        }
    }

    #[test]
    fn endpoint_values_match_recurrence() {
        for a in GRID {
            for b in GRID {
                let p = JacobiParams::new(a, b).unwrap();
                let plus = eval_with_derivative(&p, 200, 1.0);
                let minus = eval_with_derivative(&p, 200, -1.0);
                for n in 0..=200 {
                    let e = endpoint_values(&p, n);
                    assert!(close(e.at_plus, plus.values[n], 1e-10));
                    assert!(close(e.at_minus, minus.values[n], 1e-10));
                    if n > 0 {
                        assert!(close(e.deriv_at_plus, plus.derivs.as_ref().unwrap()[n], 1e-10));
                        assert!(close(e.deriv_at_minus, minus.derivs.as_ref().unwrap()[n], 1e-10));
                    }
                }
            }
        }
    }

    #[test]
    fn endpoint_examples() {
        let leg = JacobiParams::legendre();
        assert!((endpoint_values(&leg, 2).at_plus - 2.5f64.sqrt()).abs() < 1e-14);
        assert!((endpoint_values(&leg, 3).at_minus + 3.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn reflection_symmetry() {
        for a in GRID {
            for b in GRID {
                let p = JacobiParams::new(a, b).unwrap();
                for i in 0..=20 {
                    let x = -1.0 + 0.1 * i as f64;
                    let lhs = values(&p, 25, -x);
                    let rhs = values(&p.swapped(), 25, x);
                    for n in 0..=25 {
                        let s = if n % 2 == 0 { 1.0 } else { -1.0 };
                        assert!((lhs[n] - s * rhs[n]).abs() <= 1e-12 * rhs[n].abs().max(1.0));
                    }
                }
            }
        }
    }

    #[test]
    fn orthonormality_under_gauss_jacobi() {
        for a in GRID {
            for b in GRID {
                let p = JacobiParams::new(a, b).unwrap();
                let rule = gauss_jacobi(&p, 45).unwrap();
                let tables: Vec<Vec<f64>> = rule.nodes.iter().map(|&x| values(&p, 40, x)).collect();
                for i in 0..=40 {
                    for j in 0..=i {
                        let s: f64 = tables
                            .iter()
                            .zip(&rule.weights)
                            .map(|(t, w)| w * t[i] * t[j])
                            .sum();
                        let expect = if i == j { 1.0 } else { 0.0 };
                        assert!((s - expect).abs() < 1e-9, "{a} {b} ({i},{j}) -> {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn asymptotic_value_at_one_example() {
        // p_n(1) n^{-(α+1/2)} -> 2^{-(α+β)/2}/Γ(α+1) = 1/Γ(3/2) for (1/2, -1/2)
        let p = JacobiParams::new(0.5, -0.5).unwrap();
        let target = 1.0 / crate::special::gamma(1.5);
        let ratio = |n: usize| value_at_one(&p, n) / (n as f64).powf(1.0) / target;
        let errs: Vec<f64> = [64, 256, 1024, 4096].iter().map(|&n| (ratio(n) - 1.0).abs()).collect();
        assert!(errs.windows(2).all(|w| w[1] < w[0]));
        assert!(errs[3] < 1e-3);
        assert!((target - std::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-14);
    }

    #[test]
    fn legendre_cosine_form_at_origin() {
        // p_n(0) = sqrt(n+1/2) P_n(0) -> ±sqrt(2/π) for even n
        let p = JacobiParams::new(0.0, 0.0).unwrap();
        for n in [400usize, 402] {
            let lead = cosine_amplitude(&p, n) * cosine_profile(&p, n, 0.0);
            assert!((values(&p, n, 0.0)[n] - lead).abs() < 2.0 / n as f64);
        }
    }

    #[test]
    fn cosine_amplitude_tends_to_sqrt_two_over_pi() {
        let target = (2.0 / PI).sqrt();
        for a in GRID {
            let p = JacobiParams::new(a, 0.5).unwrap();
            assert!((cosine_amplitude(&p, 10_000) / target - 1.0).abs() < 1e-3);
        }
    }
}
