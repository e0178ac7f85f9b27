//! Modewise operators: extension, averaging, traces, resolvents, semigroups.

use ndarray::{Array1, Array2};

use super::basis::{c2, lambda_line, lambda_rect};
use super::field::{same_len, SpectralField1D, SpectralField2D};
use crate::error::{check_param, Error, Result};

/// `E`: constant extension in `x₂`.
pub fn extend(f: &SpectralField1D, n2: usize) -> SpectralField2D {
    let mut out = Array2::zeros((f.n_modes(), n2.max(1)));
    out.column_mut(0).assign(&f.coeffs);
    SpectralField2D::from_array(out)
}

/// `P`: average over `x₂`.
pub fn average(f: &SpectralField2D) -> SpectralField1D {
    SpectralField1D::from_array(f.coeffs.column(0).to_owned())
}

/// `(I - EP)`: drop the `x₂`-mean.
pub fn remove_mean_layer(f: &SpectralField2D) -> SpectralField2D {
    let mut out = f.clone();
    out.coeffs.column_mut(0).fill(0.0);
    out
}

/// `Tr`: restriction to `x₂ = 0`.
pub fn trace(f: &SpectralField2D) -> SpectralField1D {
    let (n1, n2) = f.shape();
    let w = Array1::from_shape_fn(n2, c2);
    let b = Array1::from_shape_fn(n1, |i| f.coeffs.row(i).dot(&w));
    SpectralField1D::from_array(b)
}

/// `Tr′`: the adjoint of `Tr`, a boundary density seen as a functional on `Ω`.
pub fn trace_adjoint(g: &SpectralField1D, n2: usize) -> SpectralField2D {
    let n1 = g.n_modes();
    SpectralField2D::from_array(Array2::from_shape_fn((n1, n2), |(i, j)| {
        g.coeffs[i] * c2(j)
    }))
}

fn check_h(h: f64) -> Result<()> {
    check_param("h", h, h > 0.0 && h <= 1.0, "must lie in (0, 1]")
}

/// `R(λ, A_h)` on `Ω`; requires `λ > 0`.
pub fn resolvent_2d(lambda: f64, f: &SpectralField2D, h: f64) -> Result<SpectralField2D> {
    check_param("lambda", lambda, lambda > 0.0, "resolvent needs λ > 0")?;
    check_h(h)?;
    let mut out = f.clone();
    for ((i, j), a) in out.coeffs.indexed_iter_mut() {
        *a /= lambda - lambda_rect(i, j, h);
    }
    Ok(out)
}

/// `R(λ, A₀)` on `I`.
pub fn resolvent_1d(lambda: f64, f: &SpectralField1D) -> Result<SpectralField1D> {
    check_param("lambda", lambda, lambda > 0.0, "resolvent needs λ > 0")?;
    let mut out = f.clone();
    for (i, a) in out.coeffs.iter_mut().enumerate() {
        *a /= lambda - lambda_line(i);
    }
    Ok(out)
}

/// `e^{t(κA_h - β)}` on `Ω`.
pub fn semigroup_2d(
    t: f64,
    f: &SpectralField2D,
    h: f64,
    kappa: f64,
    beta: f64,
) -> Result<SpectralField2D> {
    check_param("t", t, t >= 0.0, "time must be nonnegative")?;
    check_h(h)?;
    let mut out = f.clone();
    for ((i, j), a) in out.coeffs.indexed_iter_mut() {
        *a *= (t * (kappa * lambda_rect(i, j, h) - beta)).exp();
    }
    Ok(out)
}

/// `e^{t(κA₀ - β)}` on `I`.
pub fn semigroup_1d(t: f64, f: &SpectralField1D, kappa: f64, beta: f64) -> Result<SpectralField1D> {
    check_param("t", t, t >= 0.0, "time must be nonnegative")?;
    let mut out = f.clone();
    for (i, a) in out.coeffs.iter_mut().enumerate() {
        *a *= (t * (kappa * lambda_line(i) - beta)).exp();
    }
    Ok(out)
}

/// Multiplication semigroup `e^{t f}` applied pointwise on nodal samples; `f ≤ 0` is required.
pub fn mult_semigroup(t: f64, f: &Array1<f64>, u: &Array1<f64>) -> Result<Array1<f64>> {
    check_param("t", t, t >= 0.0, "time must be nonnegative")?;
    same_len(f.len(), u.len())?;
    if let Some(bad) = f.iter().find(|v| !(**v <= 0.0)) {
        return Err(Error::Hypothesis(format!(
            "multiplier must be nonpositive, found {bad}"
        )));
    }
    Ok(Array1::from_shape_fn(u.len(), |k| (t * f[k]).exp() * u[k]))
}
