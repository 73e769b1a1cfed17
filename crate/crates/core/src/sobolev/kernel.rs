//! Kernels `L_n(x, y) = Σ_{k≤n} q_k(x) q_k(y)` of the Sobolev-type inner
//! product and the Christoffel function `Λ_n(x) = 1 / L_n(x, x)`.

use serde::Serialize;

use crate::error::Result;
use crate::jacobi;
use crate::kernels::{kernel_x_at_mass_with, kernel_x_one};
use crate::quadrature::{MassPoint, SobolevParams};

use super::SobolevSystem;

/// `L_n(x, x)` and `Λ_n(x)` at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SobolevKernelDiag {
    pub sp: SobolevParams,
    pub degree: usize,
    pub x: f64,
    pub l_nxx: f64,
    pub lambda_n: f64,
}

impl SobolevSystem {
    /// `(K_n(x',1), K_n^{(0,1)}(x',1))` of the base family in the reduced frame.
    fn base_kernels_at(&self, n: usize, xr: f64) -> (f64, f64) {
        kernel_x_at_mass_with(&self.base, &self.kernels.at(n), xr)
    }

    /// `L_n(x, x)` from the closed form in terms of Jacobi kernels.
    ///
    /// The subtracted bracket is nearly `K_n(x,x)` close to a mass point
    /// carrying `M > 0`; use [`SobolevSystem::l_diag_summed`] there.
    pub fn l_diag(&self, n: usize, x: f64) -> Result<SobolevKernelDiag> {
        self.check_degree(n, "l_kernel_diag")?;
        let xr = self.to_reduced(x);
        let (m, nn) = (self.sp.mass_m, self.sp.mass_n);
        let kxx: f64 = jacobi::values(&self.base, n, xr).iter().map(|v| v * v).sum();
        let (kx1, k01x) = self.base_kernels_at(n, xr);
        let k = self.kernels.k00[n];
        let k01 = self.kernels.k01[n];
        let k11 = self.kernels.k11[n];
        let bracket = m * (1.0 + nn * k11) * kx1 * kx1 - 2.0 * m * nn * k01 * kx1 * k01x
            + nn * (1.0 + m * k) * k01x * k01x;
        let l = kxx - bracket / self.d[n + 1];
        Ok(self.diag(n, x, l))
    }

    /// `L_n(x, x) = Σ_{k≤n} q_k(x)²`.
    pub fn l_diag_summed(&self, n: usize, x: f64) -> Result<SobolevKernelDiag> {
        let l = self.q_values(n, x)?.iter().map(|v| v * v).sum();
        Ok(self.diag(n, x, l))
    }

    fn diag(&self, n: usize, x: f64, l: f64) -> SobolevKernelDiag {
        SobolevKernelDiag {
            sp: self.sp,
            degree: n,
            x,
            l_nxx: l,
            lambda_n: 1.0 / l,
        }
    }

    /// `(L_n(x, c), L_n^{(0,1)}(x, c))` from the closed forms, written with
    /// `K_{n-1}(x,1; μ_1)` so that the mass terms do not cancel at `x = c`.
    pub fn l_at_mass(&self, n: usize, x: f64) -> Result<(f64, f64)> {
        self.check_degree(n, "l_kernel_at_mass")?;
        let xr = self.to_reduced(x);
        let (m, nn) = (self.sp.mass_m, self.sp.mass_n);
        let kx1 = kernel_x_one(&self.base, n, xr);
        let ts = if n == 0 {
            0.0
        } else {
            (xr - 1.0) * kernel_x_one(&self.base.shifted(2.0, 0.0), n - 1, xr)
        };
        let k = self.kernels.k00[n];
        let k01 = self.kernels.k01[n];
        let k2 = self.kernels.shifted_k00_before(n);
        let d = self.d[n + 1];
        let l = ((1.0 + nn * k2) * kx1 - nn * k01 * ts) / d;
        let l01 = ((1.0 + m * k) * ts + k01 / k * kx1) / d;
        Ok(match self.sp.c {
            MassPoint::Plus => (l, l01),
            MassPoint::Minus => (l, -l01),
        })
    }

    /// `(Σ q_k(x) q_k(c), Σ q_k(x) q_k'(c))`.
    pub fn l_at_mass_summed(&self, n: usize, x: f64) -> Result<(f64, f64)> {
        let qx = self.q_values(n, x)?;
        let mut l = 0.0;
        let mut l01 = 0.0;
        for (k, v) in qx.iter().enumerate() {
            let (qc, dqc) = self.q_at_mass(k)?;
            l += v * qc;
            l01 += v * dqc;
        }
        Ok((l, l01))
    }

    /// `L_n(c, c) = D_{n+1}^{-1} [1 + N K_{n-1}(1,1; μ_1)] K_n(1,1)`.
    pub fn l_at_mass_point(&self, n: usize) -> Result<f64> {
        self.check_degree(n, "l_kernel_at_mass")?;
        let shifted = self.kernels.shifted_k00_before(n);
        Ok((1.0 + self.sp.mass_n * shifted) * self.kernels.k00[n] / self.d[n + 1])
    }

    /// `L_n^{(1,1)}(c, c) = Σ q_k'(c)²`.
    pub fn l11_at_mass(&self, n: usize) -> Result<f64> {
        self.check_degree(n, "l_kernel_11_at_mass")?;
        (0..=n).try_fold(0.0, |acc, k| {
            let (_, d) = self.q_at_mass(k)?;
            Ok(acc + d * d)
        })
    }
}

pub fn l_kernel_diag(sp: &SobolevParams, n: usize, x: f64) -> Result<SobolevKernelDiag> {
    SobolevSystem::new(sp, n)?.l_diag(n, x)
}

pub fn l_kernel_at_mass(sp: &SobolevParams, n: usize, x: f64) -> Result<(f64, f64)> {
    SobolevSystem::new(sp, n)?.l_at_mass(n, x)
}

pub fn l_kernel_11_at_mass(sp: &SobolevParams, n: usize) -> Result<f64> {
    SobolevSystem::new(sp, n)?.l11_at_mass(n)
}
