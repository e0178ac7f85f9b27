//! The auxiliary layers `m^μ = R(b₁, A_h)(p₁ Tr′ η^ε)` and `m⁰ = R(b₁, A₀)(p₁ δ)`.

use std::f64::consts::{PI, SQRT_2};

use ndarray::{Array1, Array2};
use rayon::prelude::*;

use crate::error::{check_param, Error, Result};
use crate::model::{Mollifier, Params};
use crate::spectral::basis::{lambda_line, u_at_zero, u_basis};
use crate::spectral::ops::{extend, resolvent_1d, resolvent_2d, trace, trace_adjoint};
use crate::spectral::{Grid1D, Grid2D, SobolevIndex, SpectralField1D, SpectralField2D};

fn scaled(f: SpectralField1D, p1: f64) -> SpectralField1D {
    SpectralField1D::from_array(f.coeffs.mapv(|g| p1 * g))
}

pub fn build_m_mu(
    params: &Params,
    h: f64,
    eps: f64,
    n1: usize,
    n2: usize,
) -> Result<SpectralField2D> {
    check_param("b1", params.b[0], params.b[0] > 0.0, "must be positive")?;
    let source = scaled(Mollifier::new(eps)?.coefficients(n1), params.p[0]);
    resolvent_2d(params.b[0], &trace_adjoint(&source, n2), h)
}

pub fn build_m_zero(params: &Params, n1: usize) -> Result<SpectralField1D> {
    check_param("b1", params.b[0], params.b[0] > 0.0, "must be positive")?;
    let delta = SpectralField1D::from_vec((0..n1).map(u_at_zero).collect());
    resolvent_1d(params.b[0], &scaled(delta, params.p[0]))
}

/// `m^μ` at the bulk collocation nodes (`n1 × n2` midpoints). The thin-direction series is
/// summed in closed form, `Σ_j v_j(0)v_j(y)/(a + (jπ/h)²) = h cosh(h√a(1-y))/(√a sinh(h√a))`,
/// and the `x`-series is folded onto the node grid, so the result is free of the ringing
/// that the boundary flux causes in the truncated field.
pub fn layer_at_nodes(
    params: &Params,
    h: f64,
    eps: f64,
    n1: usize,
    n2: usize,
) -> Result<Array2<f64>> {
    check_param("b1", params.b[0], params.b[0] > 0.0, "must be positive")?;
    check_param("h", h, h > 0.0 && h <= 1.0, "must lie in (0, 1]")?;
    let grid = Grid2D::new(n1, n2)?;
    let ys = grid.y_nodes();
    // terms below e^{-40} at the lowest node are dropped
    let y_min = 0.5 / n2 as f64;
    let modes = ((80.0 / (PI * h * y_min)).ceil() as usize).clamp(n1, 1 << 22);
    let eta = Mollifier::new(eps)?.coefficients(modes);
    let period = 4 * n1;
    let mut out = Array2::zeros((n1, n2));
    for (l, &y) in ys.iter().enumerate() {
        let mut folded = vec![0.0; n1];
        for (i, g) in eta.coeffs.iter().enumerate() {
            if *g == 0.0 {
                continue;
            }
            let ra = (params.b[0] - lambda_line(i)).sqrt();
            let k = h * ra;
            let decay = (-k * y).exp() + (-k * (2.0 - y)).exp();
            if decay < 1e-300 {
                break;
            }
            // cos((i + 2n₁)θ_q) = -cos(iθ_q) and cos((2n₁ - r)θ_q) = -cos(rθ_q) on midpoints
            let mut r = i % period;
            let mut sign = 1.0;
            if r >= 2 * n1 {
                r -= 2 * n1;
                sign = -sign;
            }
            if r > n1 {
                r = 2 * n1 - r;
                sign = -sign;
            }
            if r == n1 {
                continue;
            }
            let amp = params.p[0] * g * u_basis(i, -1.0) * h / (ra * (1.0 - (-2.0 * k).exp()));
            folded[r] += sign * amp * decay;
        }
        // back to the normalised basis for the inverse transform
        folded[0] *= SQRT_2;
        let vals = grid.x.to_physical(&SpectralField1D::from_vec(folded))?;
        out.column_mut(l).assign(&vals);
    }
    Ok(out)
}

/// Green's function solution of `b₁m - m″ = p₁δ` with Neumann ends.
pub fn m_zero_closed_form(params: &Params, x: f64) -> f64 {
    let r = params.b[0].sqrt();
    params.p[0] * (r * (1.0 - x.abs())).cosh() / (2.0 * r * r.sinh())
}

/// Both layers at one `(h, ε)` and one truncation.
#[derive(Clone, Debug)]
pub struct AuxiliaryPair {
    pub m_mu: SpectralField2D,
    pub m_zero: SpectralField1D,
    pub h: f64,
    pub eps: f64,
}

impl AuxiliaryPair {
    pub fn build(params: &Params, h: f64, eps: f64, n1: usize, n2: usize) -> Result<Self> {
        Ok(Self {
            m_mu: build_m_mu(params, h, eps, n1, n2)?,
            m_zero: build_m_zero(params, n1)?,
            h,
            eps,
        })
    }
}

/// Nodal values of a 1D coefficient field by direct summation. For a Dirac
/// source the grid must avoid the origin.
pub fn boundary_values(f: &SpectralField1D, grid: &Grid1D, singular: bool) -> Result<Array1<f64>> {
    let nodes = grid.nodes();
    if singular && nodes.iter().any(|&x| x == 0.0) {
        return Err(Error::Precondition(
            "grid has a node at the point source".into(),
        ));
    }
    Ok(nodes.mapv(|x| {
        f.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * u_basis(i, x))
            .sum()
    }))
}

/// `Tr m^μ` at the nodes of `grid`.
pub fn trace_of_m(m_mu: &SpectralField2D, grid: &Grid1D, eps: f64) -> Result<Array1<f64>> {
    boundary_values(&trace(m_mu), grid, eps == 0.0)
}

/// `‖η^ε - δ‖` in `X^{-1/4-s}(I)`, truncated to `n` modes.
pub fn mollifier_defect_norm(eps: f64, s: f64, n: usize) -> Result<f64> {
    let g = Mollifier::new(eps)?.coefficients(n);
    Ok(defect_from_coefficients(&g, s))
}

pub(crate) fn defect_from_coefficients(g: &SpectralField1D, s: f64) -> f64 {
    let w = 2.0 * (-0.25 - s);
    g.coeffs
        .iter()
        .enumerate()
        .map(|(i, gi)| {
            let d = gi - u_at_zero(i);
            (1.0 - lambda_line(i)).powf(w) * d * d
        })
        .sum::<f64>()
        .sqrt()
}

/// `Σ_{i≥n} (1-λ_i)^{-1/2-2s} u_i(0)²`, the part of `‖δ‖²_{X^{-1/4-s}(I)}` beyond `n` modes.
/// Only even modes contribute; with `i = 2k` the terms are `(1 + π²k²)^w`, expanded in
/// powers of `(πk)^{-2}` and summed by Euler–Maclaurin.
pub fn dirac_tail(s: f64, n: usize) -> Result<f64> {
    check_param("s", s, s > 0.0, "must be positive")?;
    let w = -0.5 - 2.0 * s;
    let k0 = n.div_ceil(2).max(16) as f64;
    // the first few terms are summed directly so the expansion starts at k ≥ 16
    let mut head = 0.0;
    let mut k = n.div_ceil(2);
    while (k as f64) < k0 {
        head += if k == 0 {
            0.5
        } else {
            (1.0 + (PI * k as f64).powi(2)).powf(w)
        };
        k += 1;
    }
    let mut tail = 0.0;
    let mut binom = 1.0;
    for m in 0..12 {
        let p = 2.0 * m as f64 - 2.0 * w;
        tail += binom * PI.powf(2.0 * w - 2.0 * m as f64) * hurwitz_zeta(p, k0);
        binom *= (w - m as f64) / (m as f64 + 1.0);
    }
    Ok(head + tail)
}

/// `Σ_{k≥a} k^{-p}` for `p > 1`, `a ≥ 16`, by Euler–Maclaurin with four Bernoulli terms.
fn hurwitz_zeta(p: f64, a: f64) -> f64 {
    const B: [f64; 4] = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0];
    let mut sum = a.powf(1.0 - p) / (p - 1.0) + 0.5 * a.powf(-p);
    // rising factorial p(p+1)…(p+2j-2) over (2j)!
    let mut rising = p;
    let mut fact = 2.0;
    for (j, b) in B.iter().enumerate() {
        sum += b / fact * rising * a.powf(-p - 2.0 * j as f64 - 1.0);
        let m = 2.0 * j as f64;
        rising *= (p + m + 1.0) * (p + m + 2.0);
        fact *= (m + 3.0) * (m + 4.0);
    }
    sum
}

/// [`mollifier_defect_norm`] plus the remainder of the Dirac part beyond `n` modes, which is
/// exact up to the mollifier's own coefficients past `n` (negligible once `nε ≫ 1`).
pub fn mollifier_defect_norm_corrected(eps: f64, s: f64, n: usize) -> Result<f64> {
    let g = Mollifier::new(eps)?.coefficients(n);
    corrected_defect(&g, s, eps)
}

pub(crate) fn corrected_defect(g: &SpectralField1D, s: f64, eps: f64) -> Result<f64> {
    let raw = defect_from_coefficients(g, s);
    if eps == 0.0 {
        return Ok(raw);
    }
    Ok((raw * raw + dirac_tail(s, g.n_modes())?).sqrt())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SwallowRow {
    pub h: f64,
    pub eps: f64,
    /// `‖m^μ - m^{μ₀}‖_{X^{1/2-s}(Ω)}`; only defined for `s ≤ 3/4`.
    pub layer_gap: Option<f64>,
    /// `‖η^ε - δ‖_{X^{-1/4-s}(I)}`; only defined for `s ≤ 3/4`.
    pub source_gap: Option<f64>,
    /// `‖m^{μ₀} - E m⁰‖_{X^{1/2-s}(Ω)}`.
    pub thin_gap: f64,
    /// `(h/π)^s`.
    pub thin_rate: f64,
}

/// Norms of the differences between layers across an `(h, ε)` grid, at the given truncation.
pub fn swallow_diagnostics(
    params: &Params,
    hs: &[f64],
    epss: &[f64],
    s: f64,
    n1: usize,
    n2: usize,
) -> Result<Vec<SwallowRow>> {
    check_param("s", s, s > 0.0 && s <= 1.5, "must lie in (0, 3/2]")?;
    let first = s <= 0.75;
    let s_bulk = SobolevIndex::new(0.5 - s)?;
    let m_zero_ext = extend(&build_m_zero(params, n1)?, n2);
    let jobs: Vec<(f64, f64)> = hs
        .iter()
        .flat_map(|&h| epss.iter().map(move |&e| (h, e)))
        .collect();
    jobs.par_iter()
        .map(|&(h, eps)| {
            let m0 = build_m_mu(params, h, 0.0, n1, n2)?;
            let (layer_gap, source_gap) = if first {
                let m = build_m_mu(params, h, eps, n1, n2)?;
                (
                    Some(m.sub(&m0)?.xs_norm(s_bulk)),
                    Some(mollifier_defect_norm(eps, s, n1)?),
                )
            } else {
                (None, None)
            };
            Ok(SwallowRow {
                h,
                eps,
                layer_gap,
                source_gap,
                thin_gap: m0.sub(&m_zero_ext)?.xs_norm(s_bulk),
                thin_rate: (h / std::f64::consts::PI).powf(s),
            })
        })
        .collect()
}

/// Average of a 2D layer over the thin direction, compared against `m⁰`; zero up to rounding.
pub fn average_matches_limit(params: &Params, h: f64, n1: usize, n2: usize) -> Result<f64> {
    let m = build_m_mu(params, h, 0.0, n1, n2)?;
    let m0 = build_m_zero(params, n1)?;
    let avg = crate::spectral::ops::average(&m);
    Ok(avg
        .sub(&m0)?
        .coeffs
        .iter()
        .fold(0.0_f64, |a, v| a.max(v.abs())))
}
