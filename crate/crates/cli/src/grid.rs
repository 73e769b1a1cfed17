use jsop_core::diagnostics::grid::{chebyshev_extrema, interior_grid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Points of `[-1, 1]` described by `kind:m`.
pub fn parse_grid(spec: &str, seed: u64) -> Result<Vec<f64>, String> {
    let (kind, m) = spec
        .split_once(':')
        .ok_or_else(|| format!("expected kind:m, got `{spec}`"))?;
    let m: usize = m.parse().map_err(|e| format!("bad grid size `{m}`: {e}"))?;
    if m == 0 {
        return Err("grid needs at least one point".into());
    }
    match kind {
        "chebyshev" => Ok(chebyshev_extrema(m)),
        "uniform" => Ok(interior_grid(m, 1.0)),
        "random" => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut xs: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..=1.0)).collect();
            xs.sort_by(f64::total_cmp);
            Ok(xs)
        }
        _ => Err(format!("unknown grid kind `{kind}` (chebyshev, uniform, random)")),
    }
}
