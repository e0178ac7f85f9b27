//! Cosine transforms between midpoint-grid samples and basis coefficients.

use std::f64::consts::PI;
use std::sync::Arc;

use ndarray::{Array1, Array2, Axis};
use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use super::basis::{c1, c2};
use super::field::{SpectralField1D, SpectralField2D};
use crate::error::{Error, Result};

/// Unnormalised DCT pair of a fixed length `n`:
/// `forward`: `X_k = Σ_m x_m cos(πk(2m+1)/2n)`, `inverse`: `x_m = Σ_k X_k cos(πk(2m+1)/2n)`.
#[derive(Clone)]
pub struct CosineTransform {
    n: usize,
    fft: Arc<dyn Fft<f64>>,
    twiddle: Vec<Complex64>,
}

impl std::fmt::Debug for CosineTransform {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CosineTransform")
            .field("n", &self.n)
            .finish()
    }
}

impl CosineTransform {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "transform length must be positive");
        let fft = FftPlanner::new().plan_fft_forward(n);
        let twiddle = (0..n)
            .map(|k| Complex64::from_polar(1.0, -PI * k as f64 / (2 * n) as f64))
            .collect();
        Self { n, fft, twiddle }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn forward(&self, x: &[f64], out: &mut [f64]) {
        let n = self.n;
        assert_eq!(x.len(), n);
        assert_eq!(out.len(), n);
        let half = n.div_ceil(2);
        let mut buf = vec![Complex64::new(0.0, 0.0); n];
        for m in 0..half {
            buf[m].re = x[2 * m];
        }
        for m in 0..n / 2 {
            buf[n - 1 - m].re = x[2 * m + 1];
        }
        self.fft.process(&mut buf);
        for k in 0..n {
            out[k] = (self.twiddle[k] * buf[k]).re;
        }
    }

    pub fn inverse(&self, coeffs: &[f64], out: &mut [f64]) {
        let n = self.n;
        assert!(coeffs.len() <= n);
        assert_eq!(out.len(), n);
        let mut buf = vec![Complex64::new(0.0, 0.0); n];
        for (k, &c) in coeffs.iter().enumerate() {
            buf[k] = self.twiddle[k] * c;
        }
        self.fft.process(&mut buf);
        let half = n.div_ceil(2);
        for m in 0..half {
            out[2 * m] = buf[m].re;
        }
        for m in 0..n / 2 {
            out[2 * m + 1] = buf[n - 1 - m].re;
        }
    }
}

/// Midpoint grid on `I`: `x_k = -1 + (2k+1)/n`.
#[derive(Clone, Debug)]
pub struct Grid1D {
    pub n: usize,
    transform: CosineTransform,
}

impl Grid1D {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("grid needs at least one node".into()));
        }
        Ok(Self {
            n,
            transform: CosineTransform::new(n),
        })
    }

    pub fn nodes(&self) -> Array1<f64> {
        Array1::from_shape_fn(self.n, |k| -1.0 + (2 * k + 1) as f64 / self.n as f64)
    }

    /// Nodal values of a field with at most `n` modes.
    pub fn to_physical(&self, f: &SpectralField1D) -> Result<Array1<f64>> {
        let modes = f.n_modes();
        if modes > self.n {
            return Err(Error::Shape {
                expected: format!("at most {} modes", self.n),
                found: format!("{modes} modes"),
            });
        }
        let scaled: Vec<f64> = f
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * c1(i))
            .collect();
        let mut out = vec![0.0; self.n];
        self.transform.inverse(&scaled, &mut out);
        Ok(Array1::from(out))
    }

    /// Discrete L² projection of nodal samples onto the first `modes` basis functions.
    pub fn to_spectral(&self, samples: &Array1<f64>, modes: usize) -> Result<SpectralField1D> {
        if samples.len() != self.n {
            return Err(Error::Shape {
                expected: format!("{} samples", self.n),
                found: format!("{}", samples.len()),
            });
        }
        if modes > self.n {
            return Err(Error::Shape {
                expected: format!("at most {} modes", self.n),
                found: format!("{modes} modes"),
            });
        }
        let x = samples.as_standard_layout();
        let mut out = vec![0.0; self.n];
        self.transform.forward(x.as_slice().unwrap(), &mut out);
        let w = 2.0 / self.n as f64;
        let coeffs = (0..modes).map(|i| w * c1(i) * out[i]).collect::<Vec<_>>();
        Ok(SpectralField1D::from_vec(coeffs))
    }

    pub(crate) fn transform(&self) -> &CosineTransform {
        &self.transform
    }
}

/// Tensor midpoint grid on `Ω`, `y_l = (2l+1)/(2 n2)`.
#[derive(Clone, Debug)]
pub struct Grid2D {
    pub x: Grid1D,
    pub n2: usize,
    ty: CosineTransform,
}

impl Grid2D {
    pub fn new(n1: usize, n2: usize) -> Result<Self> {
        if n2 == 0 {
            return Err(Error::Precondition("grid needs at least one node".into()));
        }
        Ok(Self {
            x: Grid1D::new(n1)?,
            n2,
            ty: CosineTransform::new(n2),
        })
    }

    pub fn n1(&self) -> usize {
        self.x.n
    }

    pub fn y_nodes(&self) -> Array1<f64> {
        Array1::from_shape_fn(self.n2, |l| (2 * l + 1) as f64 / (2 * self.n2) as f64)
    }

    pub fn to_physical(&self, f: &SpectralField2D) -> Result<Array2<f64>> {
        let (m1, m2) = f.shape();
        if m1 > self.n1() || m2 > self.n2 {
            return Err(Error::Shape {
                expected: format!("at most {}x{} modes", self.n1(), self.n2),
                found: format!("{m1}x{m2}"),
            });
        }
        // y first on the m1 populated rows, then x on every column.
        let mut rows = Array2::<f64>::zeros((m1, self.n2));
        let mut out = vec![0.0; self.n2];
        for (i, row) in f.coeffs.axis_iter(Axis(0)).enumerate() {
            let scaled: Vec<f64> = row.iter().enumerate().map(|(j, a)| a * c2(j)).collect();
            self.ty.inverse(&scaled, &mut out);
            rows.row_mut(i).assign(&Array1::from(out.clone()));
        }
        let mut phys = Array2::<f64>::zeros((self.n1(), self.n2));
        let mut col_out = vec![0.0; self.n1()];
        for l in 0..self.n2 {
            let scaled: Vec<f64> = rows
                .column(l)
                .iter()
                .enumerate()
                .map(|(i, a)| a * c1(i))
                .collect();
            self.x.transform().inverse(&scaled, &mut col_out);
            phys.column_mut(l).assign(&Array1::from(col_out.clone()));
        }
        Ok(phys)
    }

    pub fn to_spectral(
        &self,
        samples: &Array2<f64>,
        m1: usize,
        m2: usize,
    ) -> Result<SpectralField2D> {
        if samples.dim() != (self.n1(), self.n2) {
            return Err(Error::Shape {
                expected: format!("{}x{} samples", self.n1(), self.n2),
                found: format!("{:?}", samples.dim()),
            });
        }
        if m1 > self.n1() || m2 > self.n2 {
            return Err(Error::Shape {
                expected: format!("at most {}x{} modes", self.n1(), self.n2),
                found: format!("{m1}x{m2}"),
            });
        }
        let mut cols = Array2::<f64>::zeros((m1, self.n2));
        let mut buf = vec![0.0; self.n1()];
        let wx = 2.0 / self.n1() as f64;
        for l in 0..self.n2 {
            let col: Vec<f64> = samples.column(l).to_vec();
            self.x.transform().forward(&col, &mut buf);
            for i in 0..m1 {
                cols[[i, l]] = wx * c1(i) * buf[i];
            }
        }
        let mut coeffs = Array2::<f64>::zeros((m1, m2));
        let mut ybuf = vec![0.0; self.n2];
        let wy = 1.0 / self.n2 as f64;
        for i in 0..m1 {
            let row: Vec<f64> = cols.row(i).to_vec();
            self.ty.forward(&row, &mut ybuf);
            for j in 0..m2 {
                coeffs[[i, j]] = wy * c2(j) * ybuf[j];
            }
        }
        Ok(SpectralField2D::from_array(coeffs))
    }
}
