use ndarray::Array1;

use super::reaction::{apply_m, apply_m_inverse};
use crate::error::{Error, Result};
use crate::spectral::{BulkField, SpectralField1D, SpectralField2D};

/// Solution in the original variables. The bulk component `u1` is a 2D field for the
/// thin-domain systems and a 1D field for the limit system.
#[derive(Clone, Debug, PartialEq)]
pub struct UState<B = SpectralField2D> {
    pub u1: B,
    pub u2: SpectralField1D,
    pub u3: Array1<f64>,
    pub u4: Array1<f64>,
    pub u5: Array1<f64>,
}

/// Solution in the shifted variables `z = M(u1 - m, u2, u3, u4, u5)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZState<B = SpectralField2D> {
    pub z1: B,
    pub z2: SpectralField1D,
    pub z3: Array1<f64>,
    pub z4: Array1<f64>,
    pub z5: Array1<f64>,
}

fn check_nodes(a: &Array1<f64>, b: &Array1<f64>, c: &Array1<f64>) -> Result<()> {
    if a.len() != b.len() || a.len() != c.len() {
        return Err(Error::Shape {
            expected: format!("{} boundary nodes", a.len()),
            found: format!("{} and {}", b.len(), c.len()),
        });
    }
    Ok(())
}

fn map_nodes(
    a: &Array1<f64>,
    b: &Array1<f64>,
    c: &Array1<f64>,
    f: fn(&[f64; 5]) -> [f64; 5],
) -> [Array1<f64>; 3] {
    let n = a.len();
    let mut out = [Array1::zeros(n), Array1::zeros(n), Array1::zeros(n)];
    for k in 0..n {
        let r = f(&[0.0, 0.0, a[k], b[k], c[k]]);
        out[0][k] = r[2];
        out[1][k] = r[3];
        out[2][k] = r[4];
    }
    out
}

impl<B: BulkField> UState<B> {
    pub fn to_z(&self, m: &B) -> Result<ZState<B>> {
        check_nodes(&self.u3, &self.u4, &self.u5)?;
        let [z3, z4, z5] = map_nodes(&self.u3, &self.u4, &self.u5, apply_m);
        Ok(ZState {
            z1: self.u1.try_sub(m)?,
            z2: self.u2.clone(),
            z3,
            z4,
            z5,
        })
    }

    pub fn n_nodes(&self) -> usize {
        self.u3.len()
    }
}

impl<B: BulkField> ZState<B> {
    pub fn from_z(&self, m: &B) -> Result<UState<B>> {
        check_nodes(&self.z3, &self.z4, &self.z5)?;
        let [u3, u4, u5] = map_nodes(&self.z3, &self.z4, &self.z5, apply_m_inverse);
        Ok(UState {
            u1: self.z1.try_add(m)?,
            u2: self.z2.clone(),
            u3,
            u4,
            u5,
        })
    }

    pub fn n_nodes(&self) -> usize {
        self.z3.len()
    }
}

impl UState<SpectralField2D> {
    pub fn zeros(n1: usize, n2: usize, nodes: usize) -> Self {
        Self {
            u1: SpectralField2D::zeros(n1, n2),
            u2: SpectralField1D::zeros(n1),
            u3: Array1::zeros(nodes),
            u4: Array1::zeros(nodes),
            u5: Array1::zeros(nodes),
        }
    }
}
