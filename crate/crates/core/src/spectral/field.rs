use ndarray::{Array1, Array2};

use super::basis::{lambda_line, lambda_rect, u_basis, v_basis};
use crate::error::{Error, Result};

/// Order `s ∈ [-1, 3/2]` of the spaces `X^s` built from the Neumann Laplacian.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct SobolevIndex(f64);

impl SobolevIndex {
    pub const MIN: f64 = -1.0;
    pub const MAX: f64 = 1.5;

    pub fn new(s: f64) -> Result<Self> {
        crate::error::check_param(
            "s",
            s,
            (Self::MIN..=Self::MAX).contains(&s),
            "must lie in [-1, 3/2]",
        )?;
        Ok(Self(s))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Coefficients of a field on `I` in the basis `u_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralField1D {
    pub coeffs: Array1<f64>,
}

impl SpectralField1D {
    pub fn zeros(n: usize) -> Self {
        Self {
            coeffs: Array1::zeros(n),
        }
    }

    pub fn from_vec(v: Vec<f64>) -> Self {
        Self {
            coeffs: Array1::from(v),
        }
    }

    pub fn from_array(coeffs: Array1<f64>) -> Self {
        Self { coeffs }
    }

    pub fn n_modes(&self) -> usize {
        self.coeffs.len()
    }

    /// Point evaluation by direct summation.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(-1.0..=1.0).contains(&x) {
            return Err(Error::OutOfDomain(x));
        }
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * u_basis(i, x))
            .sum())
    }

    pub fn xs_norm(&self, s: SobolevIndex) -> f64 {
        let s2 = 2.0 * s.value();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| (1.0 - lambda_line(i)).powf(s2) * a * a)
            .sum::<f64>()
            .sqrt()
    }

    pub fn l2_norm(&self) -> f64 {
        self.coeffs.dot(&self.coeffs).sqrt()
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_len(self.n_modes(), other.n_modes())?;
        Ok(Self {
            coeffs: &self.coeffs - &other.coeffs,
        })
    }
}

/// Coefficients of a field on `Ω` in the tensor basis `u_i ⊗ v_j`; rows index `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralField2D {
    pub coeffs: Array2<f64>,
}

impl SpectralField2D {
    pub fn zeros(n1: usize, n2: usize) -> Self {
        Self {
            coeffs: Array2::zeros((n1, n2)),
        }
    }

    pub fn from_array(coeffs: Array2<f64>) -> Self {
        Self { coeffs }
    }

    pub fn shape(&self) -> (usize, usize) {
        self.coeffs.dim()
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        if !(-1.0..=1.0).contains(&x) {
            return Err(Error::OutOfDomain(x));
        }
        if !(0.0..=1.0).contains(&y) {
            return Err(Error::OutOfDomain(y));
        }
        let (n1, n2) = self.shape();
        let vy: Vec<f64> = (0..n2).map(|j| v_basis(j, y)).collect();
        Ok((0..n1)
            .map(|i| {
                let row: f64 = (0..n2).map(|j| self.coeffs[[i, j]] * vy[j]).sum();
                row * u_basis(i, x)
            })
            .sum())
    }

    /// The `X^s(Ω)` norm; the weights always use the isotropic (`h = 1`) eigenvalues.
    pub fn xs_norm(&self, s: SobolevIndex) -> f64 {
        let s2 = 2.0 * s.value();
        self.coeffs
            .indexed_iter()
            .map(|((i, j), a)| (1.0 - lambda_rect(i, j, 1.0)).powf(s2) * a * a)
            .sum::<f64>()
            .sqrt()
    }

    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Shape {
                expected: format!("{:?}", self.shape()),
                found: format!("{:?}", other.shape()),
            });
        }
        Ok(Self {
            coeffs: &self.coeffs - &other.coeffs,
        })
    }
}

pub(crate) fn same_len(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::Shape {
            expected: a.to_string(),
            found: b.to_string(),
        })
    }
}
