//! Sobolev-type orthonormal polynomials `q_n` and their connection to the
//! Jacobi family:
//!
//! `q_n(x) = A_n p_n(x) + B_n (x-c) p_{n-1}(x; μ_1) + C_n (x-c)² p_{n-2}(x; μ_2)`
//!
//! where `μ_j = (x-c)^{2j} w_{α,β}`. For `c = 1` the shifted measures are again
//! Jacobi weights, `w_{α+2j,β}`. The case `c = -1` is reduced to `c = 1` with
//! `α ↔ β` and `x ↦ -x`; `q_n^{c=-1}(x) = (-1)^n q_n^{c=1,(β,α)}(-x)`.
//!
//! All tables are built once per [`SobolevSystem`] for degrees up to a fixed
//! maximum and are read-only afterwards.
//!
//! Several closed forms are rearranged so that no difference of large
//! numbers is ever formed:
//! * the `MN` bracket of `D_n` uses `K K11 - K01² = K_{n-2}(1,1; μ_1) K`;
//! * `α_n - β_n = K_{n-1}(1,1) [M + N p_n'(1) p'_{n-1}(1;μ_1) / (p_n(1) p_{n-1}(1;μ_1))] / D_n`,
//!   which follows from the same identity and the kernel representation of
//!   `p_{n-1}(x; μ_1)`.

mod eval;
mod kernel;

pub use eval::{eval_q, monomial_family, q_at_mass};
pub use kernel::{l_kernel_11_at_mass, l_kernel_at_mass, l_kernel_diag, SobolevKernelDiag};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jacobi::{self, JacobiParams};
use crate::kernels::MassKernelTable;
use crate::quadrature::SobolevParams;

/// Connection data for one degree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoeffTriple {
    pub degree: usize,
    pub d_n: f64,
    pub alpha_n: f64,
    pub beta_n: f64,
    /// `1 - α_n`, stored directly since `α_n → 1` in some regimes.
    pub one_minus_alpha_n: f64,
    /// `α_n - β_n`, stored directly since it tends to zero when `MN > 0`.
    pub alpha_minus_beta_n: f64,
    pub a_n: f64,
    pub b_n: f64,
    pub c_n: f64,
    /// `γ_n / k_n`
    pub gamma_over_k: f64,
}

/// Precomputed tables for one inner product and all degrees `0..=max_degree`.
#[derive(Debug, Clone)]
pub struct SobolevSystem {
    sp: SobolevParams,
    /// `(α, β)` after moving the mass point to `+1`
    base: JacobiParams,
    max_degree: usize,
    /// endpoint kernels of the base family, degrees `0..=max_degree + 1`
    kernels: MassKernelTable,
    /// `p_k(1; μ_1)` and `p_k'(1; μ_1)`, `k = 0..=max_degree`
    mu1_at_one: (Vec<f64>, Vec<f64>),
    /// `D_0 ..= D_{max_degree + 1}`
    d: Vec<f64>,
    coeffs: Vec<CoeffTriple>,
}

impl SobolevSystem {
    pub fn new(sp: &SobolevParams, max_degree: usize) -> Result<Self> {
        let base = sp.reduced_jacobi();
        let kernels = MassKernelTable::new(&base, max_degree + 1);
        let mu1_at_one = jacobi::values_at_one(&base.shifted(2.0, 0.0), max_degree);
        let (m, n) = (sp.mass_m, sp.mass_n);

        let d: Vec<f64> = (0..=max_degree + 1)
            .map(|deg| {
                if deg == 0 {
                    return 1.0;
                }
                let k = kernels.k00[deg - 1];
                let k11 = kernels.k11[deg - 1];
                let gap = kernels.shifted_k00_before(deg - 1) * k;
                1.0 + m * k + n * k11 + m * n * gap
            })
            .collect();

        if let Some(bad) = d.iter().position(|v| !v.is_finite()) {
            return Err(Error::Numeric {
                op: "sobolev_system",
                detail: format!("D_{bad} overflows double precision"),
            });
        }

        let mut system = Self {
            sp: *sp,
            base,
            max_degree,
            kernels,
            mu1_at_one,
            d,
            coeffs: Vec::with_capacity(max_degree + 1),
        };
        for deg in 0..=max_degree {
            let triple = system.compute_coefficients(deg)?;
            system.coeffs.push(triple);
        }
        Ok(system)
    }

    pub fn params(&self) -> &SobolevParams {
        &self.sp
    }

    /// Jacobi exponents of the reduced (`c = +1`) problem.
    pub fn base(&self) -> &JacobiParams {
        &self.base
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn kernels(&self) -> &MassKernelTable {
        &self.kernels
    }

    /// `D_n` for `0 <= n <= max_degree + 1`.
    pub fn d_n(&self, n: usize) -> f64 {
        self.d[n]
    }

    pub fn coefficients(&self, n: usize) -> &CoeffTriple {
        &self.coeffs[n]
    }

    fn check_degree(&self, n: usize, op: &'static str) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::Contract {
                op,
                detail: format!("degree {n} exceeds table size {}", self.max_degree),
            });
        }
        Ok(())
    }

    /// `ln k_n(μ_j)`; `μ_j` is the base family shifted by `2j` in `α`.
    fn ln_k(&self, j: usize, n: usize) -> f64 {
        jacobi::leading_coeff(&self.base.shifted(2.0 * j as f64, 0.0), n).ln_k
    }

    /// `k_n / k_{n-1}(μ_1)`.
    fn rho(&self, n: usize) -> f64 {
        (self.ln_k(0, n) - self.ln_k(1, n - 1)).exp()
    }

    fn compute_coefficients(&self, deg: usize) -> Result<CoeffTriple> {
        let (m, n) = (self.sp.mass_m, self.sp.mass_n);
        let d_n = self.d[deg];
        let g = (d_n / self.d[deg + 1]).sqrt();
        if deg < 2 {
            return Ok(self.low_degree(deg, g));
        }

        let p = self.kernels.p[deg];
        let dp = self.kernels.dp[deg];
        let q = self.mu1_at_one.0[deg - 1];
        let dq = self.mu1_at_one.1[deg - 1];
        if p == 0.0 || q == 0.0 {
            return Err(Error::Numeric {
                op: "coefficients",
                detail: format!("vanishing endpoint value at degree {deg}"),
            });
        }
        let k = self.kernels.k00[deg - 1];
        let k_mu1 = self.kernels.shifted_k00[deg - 2];
        let rho = self.rho(deg);
        let sigma = (self.ln_k(0, deg) - self.ln_k(2, deg - 2)).exp();

        let one_minus_alpha = (1.0 - n * rho * dq / p * k) / d_n;
        let beta = n * k_mu1 * (dp / (rho * q) + m * k) / d_n;
        let alpha_minus_beta = k * (m + n * dp * dq / (p * q)) / d_n;

        Ok(CoeffTriple {
            degree: deg,
            d_n,
            alpha_n: 1.0 - one_minus_alpha,
            beta_n: beta,
            one_minus_alpha_n: one_minus_alpha,
            alpha_minus_beta_n: alpha_minus_beta,
            a_n: g * one_minus_alpha,
            b_n: g * rho * alpha_minus_beta,
            c_n: g * sigma * beta,
            gamma_over_k: g,
        })
    }

    /// Degrees 0 and 1 by Gram–Schmidt on `{1, x}` (reduced frame).
    fn low_degree(&self, deg: usize, g: f64) -> CoeffTriple {
        let mass = self.base.mass();
        let blank = CoeffTriple {
            degree: deg,
            d_n: self.d[deg],
            alpha_n: 0.0,
            beta_n: 0.0,
            one_minus_alpha_n: 1.0,
            alpha_minus_beta_n: 0.0,
            a_n: g,
            b_n: 0.0,
            c_n: 0.0,
            gamma_over_k: g,
        };
        let (m, n) = (self.sp.mass_m, self.sp.mass_n);
        if deg == 0 || m == 0.0 && n == 0.0 {
            return blank;
        }
        let b0 = jacobi::recurrence_b(&self.base, 0);
        let a1 = jacobi::recurrence_a(&self.base, 1);
        let g00 = mass + m;
        let g01 = b0 * mass + m;
        let g11 = (a1 * a1 + b0 * b0) * mass + m + n;
        let gamma1 = 1.0 / (g11 - g01 * g01 / g00).sqrt();
        let q1_at_one = (1.0 - g01 / g00) * gamma1;

        let k1 = jacobi::leading_coeff(&self.base, 1).k();
        let k0_mu1 = self.ln_k(1, 0).exp();
        let a_n = q1_at_one / self.kernels.p[1];
        let b_n = (gamma1 - a_n * k1) / k0_mu1;
        let gk = gamma1 / k1;
        CoeffTriple {
            a_n,
            b_n,
            one_minus_alpha_n: a_n / gk,
            alpha_n: 1.0 - a_n / gk,
            alpha_minus_beta_n: b_n * k0_mu1 / gamma1,
            gamma_over_k: gk,
            ..blank
        }
    }

    /// `α_n - β_n` assembled literally from the two separate formulas; used
    /// to validate the cancellation-free form.
    pub fn alpha_minus_beta_direct(&self, deg: usize) -> f64 {
        let c = &self.coeffs[deg];
        c.alpha_n - c.beta_n
    }
}

/// `D_n`.
pub fn d_n(sp: &SobolevParams, n: usize) -> Result<f64> {
    Ok(SobolevSystem::new(sp, n.saturating_sub(1))?.d_n(n))
}

pub fn coefficients(sp: &SobolevParams, n: usize) -> Result<CoeffTriple> {
    Ok(*SobolevSystem::new(sp, n)?.coefficients(n))
}
