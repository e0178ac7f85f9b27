//! Initial data built from functions sampled on the solver grids.

use std::f64::consts::PI;

use ndarray::{Array1, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SolverConfig;
use crate::error::Result;
use crate::model::UState;
use crate::spectral::ops::average;
use crate::spectral::SpectralField1D;

/// Samples `f1` on the bulk grid, `f2` on the `n1`-node line grid and `f3..f5` on the boundary grid.
pub fn from_functions(
    config: &SolverConfig,
    f1: impl Fn(f64, f64) -> f64,
    f2: impl Fn(f64) -> f64,
    rest: [&dyn Fn(f64) -> f64; 3],
) -> Result<UState> {
    let g2d = config.bulk_grid()?;
    let (xs, ys) = (g2d.x.nodes(), g2d.y_nodes());
    let s1 = Array2::from_shape_fn((config.n1, config.n2), |(k, l)| f1(xs[k], ys[l]));
    let u1 = g2d.to_spectral(&s1, config.n1, config.n2)?;
    let u2 = g2d.x.to_spectral(&xs.mapv(&f2), config.n1)?;
    let bx = config.boundary_grid()?.nodes();
    Ok(UState {
        u1,
        u2,
        u3: bx.mapv(rest[0]),
        u4: bx.mapv(rest[1]),
        u5: bx.mapv(rest[2]),
    })
}

/// Smooth positive profile used by the demos.
pub fn default_initial(config: &SolverConfig) -> Result<UState> {
    from_functions(
        config,
        |x, y| {
            0.6 + 0.2 * (PI * (x + 1.0) / 2.0).cos() * (PI * y).cos() + 0.1 * (PI * (x + 1.0)).cos()
        },
        |x| 0.4 + 0.1 * (PI * (x + 1.0)).cos(),
        [
            &|x| 0.5 + 0.2 * (PI * (x + 1.0) / 2.0).cos(),
            &|_| 0.2,
            &|_| 0.1,
        ],
    )
}

/// Random nonnegative band-limited data: a constant plus a few low cosine modes whose
/// amplitudes never exceed the constant.
pub fn random_initial(config: &SolverConfig, seed: u64) -> Result<UState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modes = |rng: &mut ChaCha8Rng| -> (f64, Vec<(usize, usize, f64)>) {
        let base = rng.random_range(0.0..1.5);
        let terms: Vec<_> = (0..4)
            .map(|_| {
                (
                    rng.random_range(1..5),
                    rng.random_range(0..3),
                    rng.random_range(-1.0..1.0_f64),
                )
            })
            .collect();
        let total: f64 = terms.iter().map(|t| t.2.abs()).sum();
        let scale = if total > 0.0 { base / total } else { 0.0 };
        (
            base,
            terms
                .into_iter()
                .map(|(i, j, a)| (i, j, a * scale))
                .collect(),
        )
    };
    let bulk = modes(&mut rng);
    let line: Vec<_> = (0..4).map(|_| modes(&mut rng)).collect();
    let eval = |m: &(f64, Vec<(usize, usize, f64)>), x: f64, y: f64| {
        m.0 + m
            .1
            .iter()
            .map(|&(i, j, a)| {
                a * (i as f64 * PI * (x + 1.0) / 2.0).cos() * (j as f64 * PI * y).cos()
            })
            .sum::<f64>()
    };
    from_functions(
        config,
        |x, y| eval(&bulk, x, y),
        |x| eval(&line[0], x, 0.0),
        [
            &|x| eval(&line[1], x, 0.0),
            &|x| eval(&line[2], x, 0.0),
            &|x| eval(&line[3], x, 0.0),
        ],
    )
}

/// Initial data of the limit system: the thin-direction average of the bulk datum.
pub fn limit_initial(u0: &UState) -> UState<SpectralField1D> {
    UState {
        u1: average(&u0.u1),
        u2: u0.u2.clone(),
        u3: u0.u3.clone(),
        u4: u0.u4.clone(),
        u5: u0.u5.clone(),
    }
}

/// Samples of `p₁η^ε` at the boundary nodes, for the regular-source solver.
pub fn source_samples(config: &SolverConfig, p1: f64, eps: f64) -> Result<Array1<f64>> {
    let eta = crate::model::Mollifier::new(eps)?;
    let nodes = config.boundary_grid()?.nodes();
    let mut out = Array1::zeros(nodes.len());
    for (o, x) in out.iter_mut().zip(nodes.iter()) {
        *o = p1 * eta.eval(*x)?;
    }
    Ok(out)
}
