pub mod basis;
mod field;
pub mod ops;
mod transform;

pub use field::{SobolevIndex, SpectralField1D, SpectralField2D};
pub use transform::{CosineTransform, Grid1D, Grid2D};

/// Weighted `L_p(I)` norm of nodal samples on a midpoint grid.
pub fn lp_norm(samples: &ndarray::Array1<f64>, p: f64) -> f64 {
    let w = 2.0 / samples.len() as f64;
    if p.is_infinite() {
        return sup_norm(samples);
    }
    (samples.iter().map(|v| v.abs().powf(p)).sum::<f64>() * w).powf(1.0 / p)
}

pub fn sup_norm(samples: &ndarray::Array1<f64>) -> f64 {
    samples.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

/// Operations shared by the 1D and 2D coefficient fields.
pub trait BulkField: Clone + std::fmt::Debug + Send + Sync {
    fn try_sub(&self, other: &Self) -> crate::Result<Self>;
    fn try_add(&self, other: &Self) -> crate::Result<Self>;
    fn xs_norm(&self, s: SobolevIndex) -> f64;
    fn l2_norm(&self) -> f64;
    fn coeff_slice(&self) -> &[f64];
    fn coeff_slice_mut(&mut self) -> &mut [f64];
}

impl BulkField for SpectralField1D {
    fn try_sub(&self, other: &Self) -> crate::Result<Self> {
        self.sub(other)
    }
    fn try_add(&self, other: &Self) -> crate::Result<Self> {
        field::same_len(self.n_modes(), other.n_modes())?;
        Ok(Self::from_array(&self.coeffs + &other.coeffs))
    }
    fn xs_norm(&self, s: SobolevIndex) -> f64 {
        SpectralField1D::xs_norm(self, s)
    }
    fn l2_norm(&self) -> f64 {
        SpectralField1D::l2_norm(self)
    }
    fn coeff_slice(&self) -> &[f64] {
        self.coeffs.as_slice().expect("contiguous coefficients")
    }
    fn coeff_slice_mut(&mut self) -> &mut [f64] {
        self.coeffs.as_slice_mut().expect("contiguous coefficients")
    }
}

impl BulkField for SpectralField2D {
    fn try_sub(&self, other: &Self) -> crate::Result<Self> {
        self.sub(other)
    }
    fn try_add(&self, other: &Self) -> crate::Result<Self> {
        let neg = Self::from_array(-&other.coeffs);
        self.sub(&neg)
    }
    fn xs_norm(&self, s: SobolevIndex) -> f64 {
        SpectralField2D::xs_norm(self, s)
    }
    fn l2_norm(&self) -> f64 {
        SpectralField2D::l2_norm(self)
    }
    fn coeff_slice(&self) -> &[f64] {
        self.coeffs.as_slice().expect("contiguous coefficients")
    }
    fn coeff_slice_mut(&mut self) -> &mut [f64] {
        self.coeffs.as_slice_mut().expect("contiguous coefficients")
    }
}
