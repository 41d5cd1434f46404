//! Grid construction and data-parallel evaluation.
//!
//! With the `parallel` feature (default), `map_grid` fans the per-point
//! work out over rayon; results are assembled by index, so the output is
//! bitwise identical to the sequential path regardless of scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `n` uniformly spaced points covering `[a, b]` inclusive; `n >= 2`.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    debug_assert!(n >= 2);
    let step = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|i| if i == n - 1 { b } else { a + i as f64 * step })
        .collect()
}

/// Evaluate `f` at every grid point, in parallel when the feature is on.
#[cfg(feature = "parallel")]
pub fn map_grid<F>(grid: &[f64], f: F) -> Vec<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    grid.par_iter().map(|&x| f(x)).collect()
}

/// Evaluate `f` at every grid point (sequential build).
#[cfg(not(feature = "parallel"))]
pub fn map_grid<F>(grid: &[f64], f: F) -> Vec<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    map_grid_seq(grid, f)
}

/// Always-sequential evaluation; the benchmark baseline.
pub fn map_grid_seq<F>(grid: &[f64], f: F) -> Vec<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    grid.iter().map(|&x| f(x)).collect()
}
