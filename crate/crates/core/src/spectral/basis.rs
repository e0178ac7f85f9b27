//! Neumann cosine bases on `I = (-1,1)` and `I+ = (0,1)` and their eigenvalues.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

/// Normalisation of the `i`-th basis function on `I`.
#[inline]
pub fn c1(i: usize) -> f64 {
    if i == 0 {
        FRAC_1_SQRT_2
    } else {
        1.0
    }
}

/// Normalisation of the `j`-th basis function on `I+`.
#[inline]
pub fn c2(j: usize) -> f64 {
    if j == 0 {
        1.0
    } else {
        SQRT_2
    }
}

/// `u_i(x) = c1(i) cos(iπ(x+1)/2)`.
#[inline]
pub fn u_basis(i: usize, x: f64) -> f64 {
    c1(i) * (i as f64 * PI * (x + 1.0) / 2.0).cos()
}

/// `u_i(0)`, exact: zero for odd `i`.
#[inline]
pub fn u_at_zero(i: usize) -> f64 {
    match i % 4 {
        0 => c1(i),
        2 => -c1(i),
        _ => 0.0,
    }
}

/// `v_j(y) = c2(j) cos(jπy)`.
#[inline]
pub fn v_basis(j: usize, y: f64) -> f64 {
    c2(j) * (j as f64 * PI * y).cos()
}

#[inline]
pub fn lambda_line(i: usize) -> f64 {
    let k = i as f64 * PI / 2.0;
    -k * k
}

#[inline]
pub fn lambda_half(j: usize) -> f64 {
    let k = j as f64 * PI;
    -k * k
}

/// Eigenvalue of the anisotropic Laplacian `∂₁² + h⁻²∂₂²` on `Ω`.
#[inline]
pub fn lambda_rect(i: usize, j: usize, h: f64) -> f64 {
    lambda_line(i) + lambda_half(j) / (h * h)
}
