//! Christoffel–Darboux kernels `K_n^{(r,s)}(x, y) = Σ_{k≤n} p_k^{(r)}(x) p_k^{(s)}(y)`
//! of the Jacobi family, with the closed forms available at the endpoint `1`.
//!
//! Coincident-point values are plain sums; the Christoffel–Darboux quotient is
//! never used because it divides by `x - y`.

use crate::jacobi::{self, JacobiParams};

/// `K_n(x, y)` by direct summation.
pub fn kernel(params: &JacobiParams, n: usize, x: f64, y: f64) -> f64 {
    let px = jacobi::values(params, n, x);
    if x == y {
        return px.iter().map(|v| v * v).sum();
    }
    let py = jacobi::values(params, n, y);
    px.iter().zip(&py).map(|(a, b)| a * b).sum()
}

/// `K_n(1,1)`, `K_n^{(0,1)}(1,1)` and `K_n^{(1,1)}(1,1)` for one degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelAtMass {
    pub params: JacobiParams,
    pub degree: usize,
    pub k00: f64,
    pub k01: f64,
    /// From the identity `K K11 - K01² = K_{n-1}(1,1; w_{α+2,β}) K`.
    pub k11: f64,
    /// `Σ p_k'(1)²`, kept as a cross-check of `k11`.
    pub k11_summed: f64,
}

/// Cumulative endpoint kernels of one family for every degree `0..=n`.
#[derive(Debug, Clone)]
pub struct MassKernelTable {
    pub params: JacobiParams,
    /// `p_k(1)`
    pub p: Vec<f64>,
    /// `p_k'(1)`
    pub dp: Vec<f64>,
    /// `K_k(1,1)`
    pub k00: Vec<f64>,
    /// `K_k^{(0,1)}(1,1)`
    pub k01: Vec<f64>,
    /// `K_k^{(1,1)}(1,1)` from the determinant identity
    pub k11: Vec<f64>,
    /// `K_k^{(1,1)}(1,1)` by summation
    pub k11_summed: Vec<f64>,
    /// `K_k(1,1; w_{α+2,β})`
    pub shifted_k00: Vec<f64>,
}

impl MassKernelTable {
    pub fn new(params: &JacobiParams, n: usize) -> Self {
        let (p, dp) = jacobi::values_at_one(params, n);
        let (shifted_p, _) = jacobi::values_at_one(&params.shifted(2.0, 0.0), n);
        let prefix = |f: &dyn Fn(usize) -> f64| -> Vec<f64> {
            (0..=n)
                .scan(0.0, |acc, k| {
                    *acc += f(k);
                    Some(*acc)
                })
                .collect()
        };
        let k00 = prefix(&|k| p[k] * p[k]);
        let k01 = prefix(&|k| p[k] * dp[k]);
        let k11_summed = prefix(&|k| dp[k] * dp[k]);
        let shifted_k00 = prefix(&|k| shifted_p[k] * shifted_p[k]);
        let k11 = (0..=n)
            .map(|k| {
                let prev = if k == 0 { 0.0 } else { shifted_k00[k - 1] };
                (k01[k] * k01[k] + prev * k00[k]) / k00[k]
            })
            .collect();
        Self {
            params: *params,
            p,
            dp,
            k00,
            k01,
            k11,
            k11_summed,
            shifted_k00,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.k00.len() - 1
    }

    /// `K_{k}(1,1; w_{α+2,β})` with the empty sum at `k = -1`.
    pub fn shifted_k00_before(&self, k: usize) -> f64 {
        if k == 0 {
            0.0
        } else {
            self.shifted_k00[k - 1]
        }
    }

    pub fn at(&self, n: usize) -> KernelAtMass {
        KernelAtMass {
            params: self.params,
            degree: n,
            k00: self.k00[n],
            k01: self.k01[n],
            k11: self.k11[n],
            k11_summed: self.k11_summed[n],
        }
    }
}

pub fn kernel_at_mass(params: &JacobiParams, n: usize) -> KernelAtMass {
    MassKernelTable::new(params, n).at(n)
}

/// `K_n(x, 1)` from its single-polynomial form: it is a multiple of
/// `p_n^{(α+1,β)}(x)`, fixed by comparing leading coefficients.
pub fn kernel_x_one(params: &JacobiParams, n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0 / params.mass();
    }
    let (a, b) = (params.alpha(), params.beta());
    let nf = n as f64;
    let raised = params.shifted(1.0, 0.0);
    let norm_ratio =
        (0.5 * (jacobi::ln_norm_squared(&raised, n) - jacobi::ln_norm_squared(params, n))).exp();
    norm_ratio * (nf + a + b + 1.0) / (2.0 * nf + a + b + 1.0)
        * jacobi::value_at_one(params, n)
        * jacobi::values(&raised, n, x)[n]
}

/// `(K_n(x,1), K_n^{(0,1)}(x,1))`. The second comes from
/// `K^{(0,1)}(x,1) = (x-1) K_{n-1}(x,1; w_{α+2,β}) + K01/K00 · K_n(x,1)`.
pub fn kernel_x_at_mass(params: &JacobiParams, n: usize, x: f64) -> (f64, f64) {
    let at_mass = MassKernelTable::new(params, n).at(n);
    kernel_x_at_mass_with(params, &at_mass, x)
}

/// As [`kernel_x_at_mass`], reusing precomputed endpoint kernels.
pub fn kernel_x_at_mass_with(params: &JacobiParams, at_mass: &KernelAtMass, x: f64) -> (f64, f64) {
    let n = at_mass.degree;
    let kx1 = kernel_x_one(params, n, x);
    if n == 0 {
        return (kx1, 0.0);
    }
    let shifted = kernel_x_one(&params.shifted(2.0, 0.0), n - 1, x);
    let k01x = (x - 1.0) * shifted + at_mass.k01 / at_mass.k00 * kx1;
    (kx1, k01x)
}

/// `(K_n(x,1), K_n^{(0,1)}(x,1))` by direct summation.
pub fn kernel_x_at_mass_summed(params: &JacobiParams, n: usize, x: f64) -> (f64, f64) {
    let px = jacobi::values(params, n, x);
    let (p1, dp1) = jacobi::values_at_one(params, n);
    let k = px.iter().zip(&p1).map(|(a, b)| a * b).sum();
    let k01 = px.iter().zip(&dp1).map(|(a, b)| a * b).sum();
    (k, k01)
}
