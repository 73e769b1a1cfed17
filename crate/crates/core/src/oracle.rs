//! Reference orthonormalization of the monomial basis under the Sobolev-type
//! inner product, carried out in double-double arithmetic.
//!
//! Moments come from the exact recurrence
//! `(k+α+β+2) μ_{k+1} = k μ_{k-1} + (β-α) μ_k`, obtained by integrating
//! `d/dx [x^k (1-x)^{α+1} (1+x)^{β+1}]`, so the only rounding is in `μ_0`.

use serde::Serialize;
use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::quadrature::SobolevParams;
use crate::sobolev::SobolevSystem;

/// Largest degree for which the oracle is trusted.
pub const MAX_ORACLE_DEGREE: usize = 25;

fn dd(x: f64) -> TwoFloat {
    TwoFloat::from(x)
}

fn zero() -> TwoFloat {
    dd(0.0)
}

/// Quotient with one correction step; `TwoFloat`'s own division is only
/// accurate to about `f64` precision.
fn div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q = a / b;
    q + (a - q * b) / b.hi()
}

/// `⟨x^i, x^j⟩` for `0 <= i, j <= n`.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    pub sp: SobolevParams,
    pub order: usize,
    entries: Vec<TwoFloat>,
}

impl GramMatrix {
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j].hi()
    }

    fn at(&self, i: usize, j: usize) -> TwoFloat {
        self.entries[i * self.order + j]
    }
}

/// `∫ x^k w_{α,β} dx` for `k = 0..=m`.
pub fn moments(sp: &SobolevParams, m: usize) -> Vec<TwoFloat> {
    let (a, b) = (dd(sp.jacobi.alpha()), dd(sp.jacobi.beta()));
    let mut mu = vec![dd(sp.jacobi.mass())];
    if m == 0 {
        return mu;
    }
    mu.push(div(mu[0] * (b - a), a + b + 2.0));
    for k in 1..m {
        let kf = k as f64;
        let next = div(mu[k - 1] * kf + (b - a) * mu[k], a + b + (kf + 2.0));
        mu.push(next);
    }
    mu
}

pub fn gram(sp: &SobolevParams, n: usize) -> Result<GramMatrix> {
    if n > MAX_ORACLE_DEGREE {
        return Err(Error::Contract {
            op: "gram",
            detail: format!("degree {n} exceeds oracle limit {MAX_ORACLE_DEGREE}"),
        });
    }
    let order = n + 1;
    let mu = moments(sp, 2 * n);
    let c = sp.c.value();
    let sign = |k: usize| if c < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
    let mut entries = vec![zero(); order * order];
    for i in 0..order {
        for j in 0..order {
            let mut e = mu[i + j] + sp.mass_m * sign(i + j);
            if i > 0 && j > 0 {
                e += sp.mass_n * (i * j) as f64 * sign(i + j - 2);
            }
            entries[i * order + j] = e;
        }
    }
    Ok(GramMatrix {
        sp: *sp,
        order,
        entries,
    })
}

/// Monomial coefficients (ascending) of `q_0 ..= q_n` from the oracle.
#[derive(Debug, Clone)]
pub struct OracleBasis {
    pub sp: SobolevParams,
    rows: Vec<Vec<TwoFloat>>,
}

impl OracleBasis {
    pub fn degree(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn coefficients(&self, k: usize) -> Vec<f64> {
        self.rows[k].iter().map(|v| v.hi()).collect()
    }

    pub fn leading(&self, k: usize) -> f64 {
        self.rows[k][k].hi()
    }

    /// `(q_k(x), q_k'(x))` by Horner's scheme in double-double.
    pub fn eval(&self, k: usize, x: f64) -> (f64, f64) {
        let x = dd(x);
        let mut v = zero();
        let mut d = zero();
        for c in self.rows[k].iter().rev() {
            d = d * x + v;
            v = v * x + *c;
        }
        (v.hi(), d.hi())
    }

    /// `max_{i,j} |R G Rᵀ - I|` in double-double.
    pub fn orthonormality_defect(&self, g: &GramMatrix) -> f64 {
        let n = self.rows.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            let gi: Vec<TwoFloat> = (0..n)
                .map(|c| (0..=i).fold(zero(), |acc, r| acc + self.rows[i][r] * g.at(r, c)))
                .collect();
            for j in 0..=i {
                let v = (0..=j).fold(zero(), |acc, c| acc + gi[c] * self.rows[j][c]);
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((v - target).abs().hi());
            }
        }
        worst
    }
}

/// Rows of `L^{-1}` where `G = L Lᵀ`.
pub fn orthonormalize(g: &GramMatrix) -> Result<OracleBasis> {
    let n = g.order;
    let mut l = vec![zero(); n * n];
    for j in 0..n {
        let mut pivot = g.at(j, j);
        for k in 0..j {
            pivot -= l[j * n + k] * l[j * n + k];
        }
        if pivot.hi().is_nan() || pivot.hi() <= 0.0 {
            return Err(Error::Conditioning {
                pivot: j,
                value: pivot.hi(),
            });
        }
        let d = pivot.sqrt();
        l[j * n + j] = d;
        for i in j + 1..n {
            let mut s = g.at(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = div(s, d);
        }
    }
    // forward substitution for each row of L^{-1}
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let mut row = vec![zero(); k + 1];
        row[k] = div(dd(1.0), l[k * n + k]);
        for j in (0..k).rev() {
            let mut s = zero();
            for i in j + 1..=k {
                s += row[i] * l[i * n + j];
            }
            row[j] = -div(s, l[j * n + j]);
        }
        rows.push(row);
    }
    Ok(OracleBasis { sp: g.sp, rows })
}

pub fn oracle_basis(sp: &SobolevParams, n: usize) -> Result<OracleBasis> {
    orthonormalize(&gram(sp, n)?)
}

/// Monomial coefficients of a degree-`n` polynomial from its values at the
/// `n + 1` Chebyshev extrema, solved in double-double with partial pivoting.
pub fn vandermonde_coefficients<F: Fn(f64) -> f64>(f: F, n: usize) -> Vec<f64> {
    let m = n + 1;
    let nodes: Vec<f64> = (0..m)
        .map(|j| {
            if n == 0 {
                0.0
            } else {
                (std::f64::consts::PI * j as f64 / n as f64).cos()
            }
        })
        .collect();
    let mut a: Vec<Vec<TwoFloat>> = nodes
        .iter()
        .map(|&x| {
            let mut row = Vec::with_capacity(m + 1);
            let mut p = dd(1.0);
            for _ in 0..m {
                row.push(p);
                p *= x;
            }
            row.push(dd(f(x)));
            row
        })
        .collect();
    for col in 0..m {
        let piv = (col..m)
            .max_by(|&r, &s| a[r][col].abs().partial_cmp(&a[s][col].abs()).unwrap())
            .unwrap();
        a.swap(col, piv);
        for r in col + 1..m {
            let factor = div(a[r][col], a[col][col]);
            for c in col..=m {
                let sub = factor * a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    let mut x = vec![zero(); m];
    for r in (0..m).rev() {
        let mut s = a[r][m];
        for c in r + 1..m {
            s -= a[r][c] * x[c];
        }
        x[r] = div(s, a[r][r]);
    }
    x.iter().map(|v| v.hi()).collect()
}

/// `max_j |c_j - o_j| / max_j |o_j|` after aligning the sign of the leading
/// coefficients.
pub fn coefficient_discrepancy(candidate: &[f64], reference: &[f64]) -> f64 {
    let len = candidate.len().max(reference.len());
    let get = |v: &[f64], j: usize| v.get(j).copied().unwrap_or(0.0);
    let lead = |v: &[f64]| v.iter().rev().find(|c| **c != 0.0).copied().unwrap_or(1.0);
    let flip = if lead(candidate).signum() == lead(reference).signum() {
        1.0
    } else {
        -1.0
    };
    let scale = reference.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let diff = (0..len).fold(0.0f64, |m, j| {
        m.max((flip * get(candidate, j) - get(reference, j)).abs())
    });
    diff / scale
}

/// Per-degree agreement between the connection formula and the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleComparison {
    pub degree: usize,
    /// relative max-norm gap of the monomial coefficients
    pub coefficient_discrepancy: f64,
    /// relative gap of `(q_n(c), q_n'(c))` between the closed forms and the oracle
    pub mass_value_discrepancy: f64,
    /// relative gap of `γ_n/k_n` against `sqrt(D_n / D_{n+1})`
    pub norm_ratio_discrepancy: f64,
}

pub fn compare(sp: &SobolevParams, n: usize) -> Result<Vec<OracleComparison>> {
    let basis = oracle_basis(sp, n)?;
    let system = SobolevSystem::new(sp, n)?;
    let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(f64::MIN_POSITIVE);
    (0..=n)
        .map(|k| {
            let poly = system.monomial(k)?;
            let coeff = coefficient_discrepancy(&poly.coeffs, &basis.coefficients(k));
            let mass_value = if k == 0 {
                0.0
            } else {
                let (q, dq) = system.q_at_mass(k)?;
                let (oq, odq) = basis.eval(k, sp.c.value());
                rel(q, oq).max(rel(dq, odq))
            };
            let k_n = crate::jacobi::leading_coeff(&sp.jacobi, k).k();
            let g = basis.leading(k) / k_n;
            let norm_ratio = rel((system.d_n(k) / system.d_n(k + 1)).sqrt(), g);
            Ok(OracleComparison {
                degree: k,
                coefficient_discrepancy: coeff,
                mass_value_discrepancy: mass_value,
                norm_ratio_discrepancy: norm_ratio,
            })
        })
        .collect()
}
