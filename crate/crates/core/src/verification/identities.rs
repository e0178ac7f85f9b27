use ndarray::{Array1, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{Check, Report};
use crate::error::Result;
use crate::spectral::ops::{
    average, extend, remove_mean_layer, resolvent_1d, resolvent_2d, semigroup_1d, semigroup_2d,
    trace, trace_adjoint,
};
use crate::spectral::{Grid1D, Grid2D, SpectralField1D, SpectralField2D};

fn max_abs(a: impl IntoIterator<Item = f64>) -> f64 {
    a.into_iter().fold(0.0, |m, v| m.max(v.abs()))
}

fn diff2(a: &SpectralField2D, b: &SpectralField2D) -> f64 {
    max_abs(&a.coeffs - &b.coeffs )
}

fn diff1(a: &SpectralField1D, b: &SpectralField1D) -> f64 {
    max_abs(&a.coeffs - &b.coeffs )
}

/// Algebraic identities between `E`, `P`, `Tr`, `Tr′`, resolvents and semigroups, and the
/// transform round trip, on random fields. Each check reports the largest deviation.
pub fn check_spectral_identities(
    n_fields: usize,
    n1: usize,
    n2: usize,
    seed: u64,
    tol: f64,
) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g2 = Grid2D::new(n1, n2)?;
    let g1 = Grid1D::new(n1)?;
    let mut worst = [0.0_f64; 10];
    for _ in 0..n_fields {
        let w = SpectralField2D::from_array(Array2::from_shape_fn((n1, n2), |_| {
            rng.random_range(-1.0..1.0)
        }));
        let u =
            SpectralField1D::from_array(Array1::from_shape_fn(n1, |_| rng.random_range(-1.0..1.0)));
        let v =
            SpectralField1D::from_array(Array1::from_shape_fn(n1, |_| rng.random_range(-1.0..1.0)));
        let h = rng.random_range(0.05..1.0);
        let lam = rng.random_range(0.1..10.0);
        let t = rng.random_range(0.0..1.0);

        let lhs = trace(&w).coeffs.dot(&v.coeffs);
        let rhs = (&w.coeffs * &trace_adjoint(&v, n2).coeffs).sum();
        worst[0] = worst[0].max((lhs - rhs).abs());
        let lhs = (&extend(&u, n2).coeffs * &w.coeffs).sum();
        let rhs = u.coeffs.dot(&average(&w).coeffs);
        worst[1] = worst[1].max((lhs - rhs).abs());
        worst[2] = worst[2].max(diff1(&average(&extend(&u, n2)), &u));
        worst[3] = worst[3].max(diff1(&trace(&extend(&u, n2)), &u));
        worst[4] = worst[4].max(diff1(&average(&trace_adjoint(&u, n2)), &u));
        let a = resolvent_2d(lam, &extend(&u, n2), h)?;
        let b = extend(&resolvent_1d(lam, &u)?, n2);
        worst[5] = worst[5].max(diff2(&a, &b));
        let a = semigroup_2d(t, &extend(&u, n2), h, 1.0, 0.0)?;
        let b = extend(&semigroup_1d(t, &u, 1.0, 0.0)?, n2);
        worst[6] = worst[6].max(diff2(&a, &b));
        let once = remove_mean_layer(&w);
        worst[7] = worst[7].max(diff2(&remove_mean_layer(&once), &once));
        worst[8] = worst[8].max(diff2(&g2.to_spectral(&g2.to_physical(&w)?, n1, n2)?, &w));
        worst[9] = worst[9].max(diff1(&g1.to_spectral(&g1.to_physical(&u)?, n1)?, &u));
    }
    let names = [
        "trace_adjointness",
        "extension_average_adjointness",
        "average_of_extension",
        "trace_of_extension",
        "average_of_trace_adjoint",
        "resolvent_commutes_with_extension",
        "semigroup_commutes_with_extension",
        "mean_removal_idempotent",
        "transform_round_trip_2d",
        "transform_round_trip_1d",
    ];
    let mut report = Report::new("spectral", Some(seed));
    for (name, w) in names.iter().zip(worst) {
        report.push(Check::at_most(*name, w, tol));
    }
    Ok(report)
}
