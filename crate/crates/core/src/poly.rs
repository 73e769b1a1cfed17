//! Dense polynomials in the monomial basis.

use std::ops::{Add, Mul};

/// `Σ coeffs[j] x^j`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    pub coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn constant(c: f64) -> Self {
        Self { coeffs: vec![c] }
    }

    /// `x - c`
    pub fn linear_root(c: f64) -> Self {
        Self {
            coeffs: vec![-c, 1.0],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative_at(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (j, &c)| acc * x + j as f64 * c)
    }

    pub fn scale(mut self, s: f64) -> Self {
        self.coeffs.iter_mut().for_each(|c| *c *= s);
        self
    }

    /// Multiply by `(x - c)`.
    pub fn times_linear(&self, c: f64) -> Self {
        let mut out = vec![0.0; self.coeffs.len() + 1];
        for (j, &v) in self.coeffs.iter().enumerate() {
            out[j + 1] += v;
            out[j] -= c * v;
        }
        Self { coeffs: out }
    }

    /// `p(-x)`.
    pub fn reflect(mut self) -> Self {
        self.coeffs
            .iter_mut()
            .enumerate()
            .filter(|(j, _)| j % 2 == 1)
            .for_each(|(_, c)| *c = -*c);
        self
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Polynomial, j: usize| p.coeffs.get(j).copied().unwrap_or(0.0);
        Polynomial {
            coeffs: (0..len).map(|j| get(self, j) + get(rhs, j)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::default();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial { coeffs: out }
    }
}
