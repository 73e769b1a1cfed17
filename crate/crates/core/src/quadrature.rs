//! Gauss–Jacobi rules and the Sobolev-type inner product
//! `<f, g> = ∫ f g w_{α,β} dx + M f(c) g(c) + N f'(c) g'(c)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jacobi::{recurrence_a, recurrence_b, JacobiParams};
use crate::poly::Polynomial;

/// Gauss rule for `∫ f w_{α,β} dx`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub params: JacobiParams,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Golub–Welsch: eigenvalues of the Jacobi matrix are the nodes and the
/// squared first eigenvector components, scaled by `μ_0`, are the weights.
pub fn gauss_jacobi(params: &JacobiParams, m: usize) -> Result<QuadratureRule> {
    if m == 0 {
        return Err(Error::Contract {
            op: "gauss_jacobi",
            detail: "rule size must be at least 1".into(),
        });
    }
    let mut diag: Vec<f64> = (0..m).map(|k| recurrence_b(params, k)).collect();
    let mut sub: Vec<f64> = (1..=m)
        .map(|k| if k < m { recurrence_a(params, k) } else { 0.0 })
        .collect();
    let mut first = vec![0.0; m];
    first[0] = 1.0;

    tridiagonal_eigen(&mut diag, &mut sub, &mut first)?;

    let mass = params.mass();
    let mut pairs: Vec<(f64, f64)> = diag
        .into_iter()
        .zip(first)
        .map(|(x, z)| (x, mass * z * z))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadratureRule {
        params: *params,
        nodes,
        weights,
    })
}

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
/// `d` is overwritten with the eigenvalues and `z` with `Qᵀ z`.
fn tridiagonal_eigen(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    const MAX_SWEEPS: usize = 60;
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                if e[m].abs() <= f64::EPSILON * (d[m].abs() + d[m + 1].abs()) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if sweeps == MAX_SWEEPS {
                return Err(Error::Numeric {
                    op: "gauss_jacobi",
                    detail: format!("tridiagonal eigensolver did not converge at index {l}"),
                });
            }
            sweeps += 1;

            let mut p = d[l];
            let mut g = (d[l + 1] - p) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - p + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0, 1.0);
            p = 0.0;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                if g.abs() <= f.abs() {
                    c = g / f;
                    r = c.hypot(1.0);
                    e[i + 1] = f * r;
                    s = 1.0 / r;
                    c *= s;
                } else {
                    s = f / g;
                    r = s.hypot(1.0);
                    e[i + 1] = g * r;
                    c = 1.0 / r;
                    s *= c;
                }
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                let f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Mass point `c ∈ {+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MassPoint {
    Plus,
    Minus,
}

impl MassPoint {
    pub fn from_value(c: f64) -> Result<Self> {
        if c == 1.0 {
            Ok(MassPoint::Plus)
        } else if c == -1.0 {
            Ok(MassPoint::Minus)
        } else {
            Err(Error::Domain(format!("mass point must be +1 or -1, got {c}")))
        }
    }

    pub fn value(self) -> f64 {
        match self {
            MassPoint::Plus => 1.0,
            MassPoint::Minus => -1.0,
        }
    }
}

/// Which masses are present; selects the asymptotic regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// `M > 0`, `N > 0`
    Both,
    /// `M = 0`, `N > 0`
    DerivativeOnly,
    /// `M > 0`, `N = 0`
    ValueOnly,
    /// `M = N = 0`
    MassFree,
}

/// Parameters of the Sobolev-type inner product.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SobolevParams {
    pub jacobi: JacobiParams,
    pub mass_m: f64,
    pub mass_n: f64,
    pub c: MassPoint,
}

impl SobolevParams {
    pub fn new(jacobi: JacobiParams, mass_m: f64, mass_n: f64, c: MassPoint) -> Result<Self> {
        if !(mass_m.is_finite() && mass_m >= 0.0) || !(mass_n.is_finite() && mass_n >= 0.0) {
            return Err(Error::Domain(format!(
                "masses must be finite and non-negative (M={mass_m}, N={mass_n})"
            )));
        }
        Ok(Self {
            jacobi,
            mass_m,
            mass_n,
            c,
        })
    }

    /// Convenience constructor from raw numbers.
    pub fn from_values(alpha: f64, beta: f64, mass_m: f64, mass_n: f64, c: f64) -> Result<Self> {
        Self::new(
            JacobiParams::new(alpha, beta)?,
            mass_m,
            mass_n,
            MassPoint::from_value(c)?,
        )
    }

    pub fn regime(&self) -> Regime {
        match (self.mass_m > 0.0, self.mass_n > 0.0) {
            (true, true) => Regime::Both,
            (false, true) => Regime::DerivativeOnly,
            (true, false) => Regime::ValueOnly,
            (false, false) => Regime::MassFree,
        }
    }

    /// Jacobi exponents after mapping the mass point to `+1`:
    /// `(α, β)` for `c = 1`, `(β, α)` for `c = -1`.
    pub fn reduced_jacobi(&self) -> JacobiParams {
        match self.c {
            MassPoint::Plus => self.jacobi,
            MassPoint::Minus => self.jacobi.swapped(),
        }
    }

    /// The same inner product with `c ↦ -c` and `α ↔ β`.
    pub fn reflected(&self) -> Self {
        Self {
            jacobi: self.jacobi.swapped(),
            c: match self.c {
                MassPoint::Plus => MassPoint::Minus,
                MassPoint::Minus => MassPoint::Plus,
            },
            ..*self
        }
    }
}

/// Something the inner product can consume: a value and a first derivative.
pub trait Evaluable {
    fn value(&self, x: f64) -> f64;
    fn derivative(&self, x: f64) -> f64;
}

impl Evaluable for Polynomial {
    fn value(&self, x: f64) -> f64 {
        self.eval(x)
    }

    fn derivative(&self, x: f64) -> f64 {
        self.derivative_at(x)
    }
}

impl<F, D> Evaluable for (F, D)
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    fn value(&self, x: f64) -> f64 {
        (self.0)(x)
    }

    fn derivative(&self, x: f64) -> f64 {
        (self.1)(x)
    }
}

/// `<f, g>` using `rule` for the integral part. The rule must be built for
/// `sp.jacobi` and be large enough for `deg f + deg g`.
pub fn sobolev_inner<F: Evaluable + ?Sized, G: Evaluable + ?Sized>(
    sp: &SobolevParams,
    f: &F,
    g: &G,
    rule: &QuadratureRule,
) -> Result<f64> {
    if rule.params != sp.jacobi {
        return Err(Error::Contract {
            op: "sobolev_inner",
            detail: format!(
                "rule built for {:?} but inner product uses {:?}",
                rule.params, sp.jacobi
            ),
        });
    }
    let c = sp.c.value();
    let integral = rule.integrate(|x| f.value(x) * g.value(x));
    Ok(integral
        + sp.mass_m * f.value(c) * g.value(c)
        + sp.mass_n * f.derivative(c) * g.derivative(c))
}

/// Rule size that integrates products of degree `deg_f + deg_g` exactly.
pub fn rule_size_for(deg_f: usize, deg_g: usize) -> usize {
    (deg_f + deg_g) / 2 + 1
}
