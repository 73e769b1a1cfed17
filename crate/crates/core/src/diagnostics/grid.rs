//! Sample grids for the sup-norm and kernel bounds.

use std::f64::consts::PI;

/// Multiples of `n^{-2}` added next to both endpoints, where the normalizing
/// factors `(1 ∓ x + n^{-2})` change scale.
pub const BOUNDARY_LAYER: [f64; 10] = [0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0];

/// `m` Chebyshev extrema `cos(πj/(m-1))` of `[-1, 1]`, ascending.
pub fn chebyshev_extrema(m: usize) -> Vec<f64> {
    if m == 1 {
        return vec![0.0];
    }
    let last = (m - 1) as f64;
    (0..m).map(|j| -(PI * j as f64 / last).cos()).collect()
}

/// Chebyshev extrema plus boundary-layer points `±(1 - t/n²)`.
pub fn bound_grid(n: usize, points: usize) -> Vec<f64> {
    let mut xs = chebyshev_extrema(points);
    let n2 = (n as f64).powi(2);
    for t in BOUNDARY_LAYER {
        let x = 1.0 - t / n2;
        if x > -1.0 {
            xs.push(x);
            xs.push(-x);
        }
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs
}

/// `m` equally spaced points of `[-r, r]`.
pub fn interior_grid(m: usize, r: f64) -> Vec<f64> {
    if m == 1 {
        return vec![0.0];
    }
    (0..m).map(|j| -r + 2.0 * r * j as f64 / (m - 1) as f64).collect()
}

/// Dyadic degrees `2^lo ..= 2^hi`.
pub fn dyadic(lo: u32, hi: u32) -> Vec<usize> {
    (lo..=hi).map(|k| 1usize << k).collect()
}
