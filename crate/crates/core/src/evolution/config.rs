use crate::error::{check_param, Error, Result};
use crate::spectral::{Grid1D, Grid2D};

use super::etd::Scheme;

#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    /// Modes in `x₁`; must be even.
    pub n1: usize,
    /// Modes in `x₂`.
    pub n2: usize,
    pub dt: f64,
    pub t_end: f64,
    pub scheme: Scheme,
    /// Evaluate boundary products on a grid padded by the 3/2 rule.
    pub dealias: bool,
    pub theta: f64,
    pub p_exp: f64,
    /// Record a frame every this many steps (the final time is always recorded).
    pub record_every: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            n1: 64,
            n2: 16,
            dt: 1e-3,
            t_end: 0.5,
            scheme: Scheme::Etd1,
            dealias: true,
            theta: 1.0 / 32.0,
            p_exp: 4.0,
            record_every: 10,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n1 == 0 || !self.n1.is_multiple_of(2) {
            return Err(Error::Precondition(format!(
                "n1 must be even and positive, got {}",
                self.n1
            )));
        }
        if self.n2 == 0 {
            return Err(Error::Precondition("n2 must be positive".into()));
        }
        if self.record_every == 0 {
            return Err(Error::Precondition("record_every must be positive".into()));
        }
        check_param("T", self.t_end, self.t_end > 0.0, "must be positive")?;
        check_param(
            "dt",
            self.dt,
            self.dt > 0.0 && self.dt < self.t_end,
            "must satisfy 0 < dt < T",
        )?;
        check_param("p_exp", self.p_exp, self.p_exp > 2.0, "must exceed 2")?;
        let cap = (1.0 / 16.0_f64).min(1.0 / (2.0 * self.p_exp));
        check_param(
            "theta",
            self.theta,
            self.theta > 0.0 && self.theta < cap,
            "must lie in (0, min{1/16, 1/2p})",
        )?;
        self.n_steps().map(|_| ())
    }

    pub fn n_steps(&self) -> Result<usize> {
        let n = (self.t_end / self.dt).round();
        if (n * self.dt - self.t_end).abs() > 1e-9 * self.t_end {
            return Err(Error::Precondition(format!(
                "T = {} is not a multiple of dt = {}",
                self.t_end, self.dt
            )));
        }
        Ok(n as usize)
    }

    /// Nodes of the boundary grid carrying `z₃, z₄, z₅` and the nonlinear products.
    pub fn n_nodes(&self) -> usize {
        if self.dealias {
            let m = (3 * self.n1).div_ceil(2);
            m + m % 2
        } else {
            self.n1
        }
    }

    pub fn boundary_grid(&self) -> Result<Grid1D> {
        Grid1D::new(self.n_nodes())
    }

    /// Collocation grid of the bulk field, one node per mode.
    pub fn bulk_grid(&self) -> Result<Grid2D> {
        Grid2D::new(self.n1, self.n2)
    }
}
