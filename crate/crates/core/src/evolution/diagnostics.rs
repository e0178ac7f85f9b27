use ndarray::Array1;

use crate::error::Result;
use crate::model::{UState, ZState};
use crate::spectral::{
    lp_norm, sup_norm, BulkField, Grid1D, Grid2D, SobolevIndex, SpectralField1D, SpectralField2D,
};

/// Per-time norms of a recorded state.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagnostics {
    pub t: f64,
    /// `‖z₁‖_{X^{1/2-θ}}`.
    pub norm_z1: f64,
    /// `t^{2θ}‖z₁‖_{X^{1/2+θ}}`.
    pub wnorm_z1: f64,
    /// `‖z₂‖_{X^{1/2}(I)}`.
    pub norm_z2: f64,
    /// `‖z_i‖_{L_p}` for `i = 3, 4, 5`.
    pub lp: [f64; 3],
    /// `‖z_i‖_∞` for `i = 3, 4, 5`.
    pub sup: [f64; 3],
    /// Minimum over all nodes of all five components of `u`. The shifted solver evaluates
    /// the bulk part for `t > 0` as `z₁` plus the layer summed at the nodes.
    pub min_u: f64,
    /// `max (u₃ + u₄ + u₅)` over the boundary nodes.
    pub ode_sum_max: f64,
}

/// Nodal minimum of a bulk field on its own collocation grid.
pub trait NodalMin {
    fn nodal_min(&self) -> Result<f64>;
}

impl NodalMin for SpectralField2D {
    fn nodal_min(&self) -> Result<f64> {
        let (n1, n2) = self.shape();
        let v = Grid2D::new(n1, n2)?.to_physical(self)?;
        Ok(v.iter().copied().fold(f64::INFINITY, f64::min))
    }
}

impl NodalMin for SpectralField1D {
    fn nodal_min(&self) -> Result<f64> {
        let v = Grid1D::new(self.n_modes())?.to_physical(self)?;
        Ok(v.iter().copied().fold(f64::INFINITY, f64::min))
    }
}

/// Minimum over the line field and the three boundary fields.
pub(crate) fn min_excluding_bulk<B>(u: &UState<B>) -> Result<f64> {
    Ok([
        u.u2.nodal_min()?,
        min_of(&u.u3),
        min_of(&u.u4),
        min_of(&u.u5),
    ]
    .into_iter()
    .fold(f64::INFINITY, f64::min))
}

fn min_of(a: &Array1<f64>) -> f64 {
    a.iter().copied().fold(f64::INFINITY, f64::min)
}

pub fn diagnostics<B: BulkField + NodalMin>(
    t: f64,
    z: &ZState<B>,
    u: &UState<B>,
    theta: f64,
    p: f64,
) -> Result<Diagnostics> {
    let s_minus = SobolevIndex::new(0.5 - theta)?;
    let s_plus = SobolevIndex::new(0.5 + theta)?;
    let weight = if t > 0.0 { t.powf(2.0 * theta) } else { 0.0 };
    let min_u = [
        u.u1.nodal_min()?,
        u.u2.nodal_min()?,
        min_of(&u.u3),
        min_of(&u.u4),
        min_of(&u.u5),
    ]
    .into_iter()
    .fold(f64::INFINITY, f64::min);
    let ode_sum = &u.u3 + &u.u4 + &u.u5;
    Ok(Diagnostics {
        t,
        norm_z1: z.z1.xs_norm(s_minus),
        wnorm_z1: weight * z.z1.xs_norm(s_plus),
        norm_z2: z.z2.xs_norm(SobolevIndex::new(0.5)?),
        lp: [lp_norm(&z.z3, p), lp_norm(&z.z4, p), lp_norm(&z.z5, p)],
        sup: [sup_norm(&z.z3), sup_norm(&z.z4), sup_norm(&z.z5)],
        min_u,
        ode_sum_max: ode_sum.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    })
}
