use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{check_param, Error, Result};
use crate::quadrature::integrate;
use crate::spectral::basis::u_at_zero;
use crate::spectral::SpectralField1D;

const FOURIER_CUTOFF: f64 = 1500.0;

fn bump(x: f64) -> f64 {
    if x.abs() < 1.0 {
        (1.0 / (x * x - 1.0)).exp()
    } else {
        0.0
    }
}

/// Normalising constant of the standard bump.
pub fn bump_constant() -> f64 {
    static C: OnceLock<f64> = OnceLock::new();
    *C.get_or_init(|| 1.0 / (2.0 * integrate(bump, 0.0, 1.0, 1e-16, 1e-14)))
}

const MIDPOINTS: usize = 2048;

fn bump_samples() -> &'static [f64] {
    static S: OnceLock<Vec<f64>> = OnceLock::new();
    S.get_or_init(|| {
        (0..MIDPOINTS)
            .map(|j| bump((j as f64 + 0.5) / MIDPOINTS as f64))
            .collect()
    })
}

/// `η^ε(x) = η(x/ε)/ε`; `ε = 0` stands for the Dirac mass at the origin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mollifier {
    eps: f64,
}

impl Mollifier {
    pub fn new(eps: f64) -> Result<Self> {
        check_param(
            "epsilon",
            eps,
            (0.0..=1.0).contains(&eps),
            "must lie in [0, 1]",
        )?;
        Ok(Self { eps })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn is_dirac(&self) -> bool {
        self.eps == 0.0
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if self.is_dirac() {
            return Err(Error::Precondition(
                "the Dirac mass has no pointwise values".into(),
            ));
        }
        Ok(bump_constant() * bump(x / self.eps) / self.eps)
    }

    /// `∫ η(y) cos(k y) dy` by the midpoint rule, which converges faster than any power of
    /// the spacing for a compactly supported smooth integrand.
    fn fourier(k: f64) -> f64 {
        // |F(k)| decays like exp(-sqrt(2k)); below 1e-23 past the cutoff
        if k > FOURIER_CUTOFF {
            return 0.0;
        }
        let samples = bump_samples();
        let q = samples.len() as f64;
        let sum: f64 = samples
            .iter()
            .enumerate()
            .map(|(j, b)| b * (k * (j as f64 + 0.5) / q).cos())
            .sum();
        2.0 * bump_constant() * sum / q
    }

    /// Pairings `⟨η^ε, u_i⟩` for `i < n`. The odd part of `u_i` integrates to zero,
    /// so only even modes are computed.
    pub fn coefficients(&self, n: usize) -> SpectralField1D {
        let eps = self.eps;
        let coeffs: Vec<f64> = (0..n)
            .into_par_iter()
            .map(|i| {
                let u0 = u_at_zero(i);
                if u0 == 0.0 || eps == 0.0 {
                    u0
                } else {
                    u0 * Self::fourier(i as f64 * std::f64::consts::PI * eps / 2.0)
                }
            })
            .collect();
        SpectralField1D::from_vec(coeffs)
    }
}
