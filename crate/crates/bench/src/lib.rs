//! Shared inputs for the benchmarks.

use jsop_core::SobolevParams;

/// One inner product per mass regime.
pub fn regimes() -> Vec<(&'static str, SobolevParams)> {
    [
        ("both", 1.0, 1.0),
        ("derivative", 0.0, 1.0),
        ("value", 1.0, 0.0),
    ]
    .into_iter()
    .map(|(name, m, n)| (name, SobolevParams::from_values(0.5, -0.5, m, n, 1.0).unwrap()))
    .collect()
}
