//! Jacobi–Sobolev type orthonormal polynomials.
//!
//! Polynomials `q_n` orthonormal for
//! `<f, g> = ∫ f g w_{α,β} dx + M f(c) g(c) + N f'(c) g'(c)` with `c = ±1`,
//! built from the Jacobi family through a three-term connection formula,
//! together with their kernels, Christoffel functions, an extended-precision
//! Gram oracle, and a harness that checks the asymptotic estimates.

pub mod diagnostics;
pub mod error;
pub mod jacobi;
pub mod kernels;
pub mod oracle;
pub mod poly;
pub mod quadrature;
pub mod sobolev;
pub mod special;

pub use error::{Error, Result};
pub use jacobi::{EvalTable, JacobiParams};
pub use kernels::KernelAtMass;
pub use poly::Polynomial;
pub use quadrature::{MassPoint, QuadratureRule, Regime, SobolevParams};
pub use sobolev::{CoeffTriple, SobolevKernelDiag, SobolevSystem};
pub use diagnostics::{EstimateSpec, SuiteConfig, SuiteReport, Verdict};
