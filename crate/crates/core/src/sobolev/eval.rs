use crate::error::Result;
use crate::jacobi;
use crate::poly::Polynomial;
use crate::quadrature::{MassPoint, SobolevParams};

use super::SobolevSystem;

#[inline]
fn parity(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

impl SobolevSystem {
    /// Maps a point to the reduced (`c = +1`) frame.
    pub(crate) fn to_reduced(&self, x: f64) -> f64 {
        match self.sp.c {
            MassPoint::Plus => x,
            MassPoint::Minus => -x,
        }
    }

    /// Sign relating `q_k` to the reduced polynomial: `q_k(x) = s q̃_k(x')`.
    pub(crate) fn value_sign(&self, k: usize) -> f64 {
        match self.sp.c {
            MassPoint::Plus => 1.0,
            MassPoint::Minus => parity(k),
        }
    }

    /// Sign relating `q_k'` to the reduced derivative.
    pub(crate) fn derivative_sign(&self, k: usize) -> f64 {
        match self.sp.c {
            MassPoint::Plus => 1.0,
            MassPoint::Minus => -parity(k),
        }
    }

    /// `q_0(x) ..= q_n(x)`.
    pub fn q_values(&self, n: usize, x: f64) -> Result<Vec<f64>> {
        self.check_degree(n, "eval_q")?;
        let xr = self.to_reduced(x);
        let t = xr - 1.0;
        let p0 = jacobi::values(&self.base, n, xr);
        let p1 = jacobi::values(&self.base.shifted(2.0, 0.0), n.saturating_sub(1), xr);
        let p2 = jacobi::values(&self.base.shifted(4.0, 0.0), n.saturating_sub(2), xr);
        Ok((0..=n)
            .map(|k| {
                let c = &self.coeffs[k];
                let mut v = c.a_n * p0[k];
                if k >= 1 {
                    v += c.b_n * t * p1[k - 1];
                }
                if k >= 2 {
                    v += c.c_n * t * t * p2[k - 2];
                }
                self.value_sign(k) * v
            })
            .collect())
    }

    /// `(q_k(x), q_k'(x))` for `k = 0 ..= n`.
    pub fn q_values_with_derivative(&self, n: usize, x: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        self.check_degree(n, "eval_q")?;
        let xr = self.to_reduced(x);
        let t = xr - 1.0;
        let fam1 = self.base.shifted(2.0, 0.0);
        let fam2 = self.base.shifted(4.0, 0.0);
        let p0 = jacobi::eval_with_derivative(&self.base, n, xr);
        let p1 = jacobi::eval_with_derivative(&fam1, n.saturating_sub(1), xr);
        let p2 = jacobi::eval_with_derivative(&fam2, n.saturating_sub(2), xr);
        let (v0, d0) = (&p0.values, p0.derivs.as_ref().unwrap());
        let (v1, d1) = (&p1.values, p1.derivs.as_ref().unwrap());
        let (v2, d2) = (&p2.values, p2.derivs.as_ref().unwrap());

        let mut vals = Vec::with_capacity(n + 1);
        let mut ders = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let c = &self.coeffs[k];
            let mut v = c.a_n * v0[k];
            let mut dv = c.a_n * d0[k];
            if k >= 1 {
                v += c.b_n * t * v1[k - 1];
                dv += c.b_n * (v1[k - 1] + t * d1[k - 1]);
            }
            if k >= 2 {
                v += c.c_n * t * t * v2[k - 2];
                dv += c.c_n * (2.0 * t * v2[k - 2] + t * t * d2[k - 2]);
            }
            vals.push(self.value_sign(k) * v);
            ders.push(self.derivative_sign(k) * dv);
        }
        Ok((vals, ders))
    }

    /// `(q_n(x), q_n'(x))`.
    pub fn q(&self, n: usize, x: f64) -> Result<(f64, f64)> {
        let (v, d) = self.q_values_with_derivative(n, x)?;
        Ok((v[n], d[n]))
    }

    /// `(q_n(c), q_n'(c))` from the closed forms in terms of `D_n`,
    /// `K_{n-1}(c,c)` and the `μ_1` family at the mass point.
    pub fn q_at_mass(&self, n: usize) -> Result<(f64, f64)> {
        self.check_degree(n, "q_at_mass")?;
        let g = self.coeffs[n].gamma_over_k;
        let p = self.kernels.p[n];
        let dp = self.kernels.dp[n];
        let (val, der) = if n == 0 {
            (g * p, 0.0)
        } else {
            let (m, nn) = (self.sp.mass_m, self.sp.mass_n);
            let d = self.d[n];
            let k = self.kernels.k00[n - 1];
            let q = self.mu1_at_one.0[n - 1];
            let dq = self.mu1_at_one.1[n - 1];
            let rho = self.rho(n);
            (
                g / d * (p - nn * rho * dq * k),
                g / d * (dp + m * rho * q * k),
            )
        };
        Ok((self.value_sign(n) * val, self.derivative_sign(n) * der))
    }

    /// Monomial coefficients of `q_n`, assembled from the connection formula
    /// with each Jacobi polynomial expanded by its recurrence.
    pub fn monomial(&self, n: usize) -> Result<Polynomial> {
        self.check_degree(n, "monomial")?;
        let c = &self.coeffs[n];
        let mut poly = monomial_family(&self.base, n)[n].clone().scale(c.a_n);
        if n >= 1 {
            let p1 = monomial_family(&self.base.shifted(2.0, 0.0), n - 1)[n - 1]
                .times_linear(1.0)
                .scale(c.b_n);
            poly = &poly + &p1;
        }
        if n >= 2 {
            let p2 = monomial_family(&self.base.shifted(4.0, 0.0), n - 2)[n - 2]
                .times_linear(1.0)
                .times_linear(1.0)
                .scale(c.c_n);
            poly = &poly + &p2;
        }
        Ok(match self.sp.c {
            MassPoint::Plus => poly,
            MassPoint::Minus => poly.reflect().scale(parity(n)),
        })
    }

    /// Leading coefficient `γ_n` of `q_n`.
    pub fn gamma(&self, n: usize) -> f64 {
        self.coeffs[n].gamma_over_k * jacobi::leading_coeff(&self.base, n).k()
    }
}

/// `p_0 ..= p_n` of one Jacobi family in the monomial basis.
pub fn monomial_family(params: &jacobi::JacobiParams, n: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::constant((-0.5 * params.ln_mass()).exp())];
    let mut a_cur = 0.0;
    for k in 0..n {
        let a_next = jacobi::recurrence_a(params, k + 1);
        let b = jacobi::recurrence_b(params, k);
        let shifted = out[k].times_linear(b);
        let next = if k == 0 {
            shifted
        } else {
            &shifted + &out[k - 1].clone().scale(-a_cur)
        };
        out.push(next.scale(1.0 / a_next));
        a_cur = a_next;
    }
    out
}

/// `(q_n(x), q_n'(x))`.
pub fn eval_q(sp: &SobolevParams, n: usize, x: f64) -> Result<(f64, f64)> {
    SobolevSystem::new(sp, n)?.q(n, x)
}

/// `(q_n(c), q_n'(c))`.
pub fn q_at_mass(sp: &SobolevParams, n: usize) -> Result<(f64, f64)> {
    SobolevSystem::new(sp, n)?.q_at_mass(n)
}
