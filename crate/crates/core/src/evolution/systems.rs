//! The three semi-discrete systems in flattened form `y = (bulk, c2, c3, c4, c5)`.

use ndarray::Array1;

use crate::error::Result;
use crate::model::{apply_m, apply_m_inverse, reaction_f, reaction_g, Params};
use crate::spectral::basis::{c2, lambda_line, lambda_rect};
use crate::spectral::{Grid1D, SpectralField1D};

/// Boundary collocation shared by all systems.
pub(crate) struct Boundary {
    pub grid: Grid1D,
    pub n1: usize,
}

impl Boundary {
    pub fn nodes_of(&self, coeffs: &[f64]) -> Array1<f64> {
        let f = SpectralField1D::from_vec(coeffs.to_vec());
        self.grid
            .to_physical(&f)
            .expect("mode count checked at construction")
    }

    pub fn project(&self, nodal: Array1<f64>) -> Array1<f64> {
        self.grid
            .to_spectral(&nodal, self.n1)
            .expect("grid sizes checked at construction")
            .coeffs
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Kind {
    /// Shifted variables on `Ω`, boundary layer subtracted.
    Shifted2D,
    /// Original variables on `Ω` with a bounded boundary source.
    Regular2D,
    /// Shifted variables of the one-dimensional limit.
    Limit1D,
}

pub(crate) struct System<'a> {
    pub kind: Kind,
    pub params: &'a Params,
    pub boundary: Boundary,
    /// Bulk modes in `x₂` (1 for the limit system).
    pub n2: usize,
    pub h: f64,
    /// `Tr m` (or `m⁰`) at boundary nodes for the shifted systems; the source `ω` for the regular one.
    pub layer: Array1<f64>,
}

impl System<'_> {
    pub fn n_nodes(&self) -> usize {
        self.boundary.grid.n
    }

    pub fn bulk_len(&self) -> usize {
        self.boundary.n1 * self.n2
    }

    pub fn len(&self) -> usize {
        self.bulk_len() + self.boundary.n1 + 3 * self.n_nodes()
    }

    /// Offsets of (c2, c3, c4, c5) in the flat vector.
    pub fn offsets(&self) -> [usize; 4] {
        let a = self.bulk_len();
        let b = a + self.boundary.n1;
        let m = self.n_nodes();
        [a, b, b + m, b + 2 * m]
    }

    pub fn linear(&self) -> Vec<f64> {
        let p = self.params;
        let (n1, n2, m) = (self.boundary.n1, self.n2, self.n_nodes());
        let mut lin = Vec::with_capacity(self.len());
        for i in 0..n1 {
            for j in 0..n2 {
                let lam = match self.kind {
                    Kind::Limit1D => lambda_line(i),
                    _ => lambda_rect(i, j, self.h),
                };
                lin.push(lam - p.b[0]);
            }
        }
        lin.extend((0..n1).map(|i| p.d * lambda_line(i) - p.b[1]));
        match self.kind {
            Kind::Regular2D => lin.extend(std::iter::repeat_n(0.0, m)),
            _ => lin.extend(self.layer.iter().map(|v| -v)),
        }
        lin.extend(std::iter::repeat_n(0.0, 2 * m));
        lin
    }

    pub fn rhs(&self, y: &[f64], out: &mut [f64]) -> Result<()> {
        let p = self.params;
        let (n1, n2, m) = (self.boundary.n1, self.n2, self.n_nodes());
        let [o2, o3, o4, o5] = self.offsets();
        let bulk = &y[..o2];
        let trace: Vec<f64> = (0..n1)
            .map(|i| (0..n2).map(|j| bulk[i * n2 + j] * c2(j)).sum())
            .collect();
        let t1 = self.boundary.nodes_of(&trace);
        let t2 = self.boundary.nodes_of(&y[o2..o3]);
        let mut g1 = Array1::zeros(m);
        let mut g2 = Array1::zeros(m);
        for k in 0..m {
            let pt = [t1[k], t2[k], y[o3 + k], y[o4 + k], y[o5 + k]];
            let g = match self.kind {
                Kind::Regular2D => {
                    // the state holds M u; f acts on u and its last three rows are mapped back by M
                    let mut f = reaction_f(&apply_m_inverse(&pt), p);
                    f[0] += self.layer[k];
                    apply_m(&f)
                }
                _ => reaction_g(&pt, self.layer[k], p),
            };
            g1[k] = g[0];
            g2[k] = g[1];
            out[o3 + k] = g[2];
            out[o4 + k] = g[3];
            out[o5 + k] = g[4];
        }
        let g1 = self.boundary.project(g1);
        let g2 = self.boundary.project(g2);
        for i in 0..n1 {
            for j in 0..n2 {
                out[i * n2 + j] = g1[i] * c2(j);
            }
            out[o2 + i] = g2[i] + p.b[1] * y[o2 + i];
        }
        Ok(())
    }
}
