//! Time integration of the thin-domain systems and of their one-dimensional limit.

mod config;
mod diagnostics;
mod etd;
pub mod initial;
mod systems;

use ndarray::Array1;

pub use config::SolverConfig;
use diagnostics::min_excluding_bulk;
pub use diagnostics::{diagnostics, Diagnostics, NodalMin};
pub use etd::{phi1, phi2, Scheme};

use crate::error::{Error, Result};
use crate::model::{Params, UState, ZState};
use crate::singular::{boundary_values, build_m_mu, build_m_zero, layer_at_nodes, trace_of_m};
use crate::spectral::{BulkField, Grid1D, SpectralField1D, SpectralField2D};
use etd::Stepper;
use systems::{Boundary, Kind, System};

/// One recorded time level.
#[derive(Clone, Debug)]
pub struct Frame<B = SpectralField2D> {
    pub t: f64,
    /// Shifted variables; absent for the regular-source solver.
    pub z: Option<ZState<B>>,
    pub u: UState<B>,
    pub diag: Diagnostics,
}

#[derive(Clone, Debug, Default)]
pub struct Trajectory<B = SpectralField2D> {
    pub frames: Vec<Frame<B>>,
}

impl<B> Trajectory<B> {
    pub fn times(&self) -> Vec<f64> {
        self.frames.iter().map(|f| f.t).collect()
    }

    pub fn last(&self) -> &Frame<B> {
        self.frames
            .last()
            .expect("trajectories hold at least the initial frame")
    }

    pub fn diagnostics(&self) -> Vec<Diagnostics> {
        self.frames.iter().map(|f| f.diag.clone()).collect()
    }
}

fn flatten<B: BulkField>(z: &ZState<B>) -> Vec<f64> {
    let mut y = z.z1.coeff_slice().to_vec();
    y.extend(z.z2.coeffs.iter());
    y.extend(z.z3.iter());
    y.extend(z.z4.iter());
    y.extend(z.z5.iter());
    y
}

fn unflatten<B: BulkField>(y: &[f64], template: &ZState<B>, offsets: [usize; 4]) -> ZState<B> {
    let [o2, o3, o4, o5] = offsets;
    let mut z1 = template.z1.clone();
    z1.coeff_slice_mut().copy_from_slice(&y[..o2]);
    ZState {
        z1,
        z2: SpectralField1D::from_vec(y[o2..o3].to_vec()),
        z3: Array1::from(y[o3..o4].to_vec()),
        z4: Array1::from(y[o4..o5].to_vec()),
        z5: Array1::from(y[o5..].to_vec()),
    }
}

fn check_shapes<B>(u: &UState<B>, n1: usize, nodes: usize, bulk_ok: bool) -> Result<()> {
    if !bulk_ok
        || u.u2.n_modes() != n1
        || u.u3.len() != nodes
        || u.u4.len() != nodes
        || u.u5.len() != nodes
    {
        return Err(Error::Shape {
            expected: format!("{n1} modes and {nodes} boundary nodes"),
            found: format!("{} modes and {} boundary nodes", u.u2.n_modes(), u.u3.len()),
        });
    }
    Ok(())
}

fn check_nonnegative<B: NodalMin>(u: &UState<B>) -> Result<()> {
    const TOL: f64 = -1e-10;
    let mins = [
        u.u1.nodal_min()?,
        u.u2.nodal_min()?,
        u.u3.iter().copied().fold(f64::INFINITY, f64::min),
        u.u4.iter().copied().fold(f64::INFINITY, f64::min),
        u.u5.iter().copied().fold(f64::INFINITY, f64::min),
    ];
    match mins.iter().position(|&v| !(v >= TOL)) {
        Some(k) => Err(Error::Precondition(format!(
            "initial component u{} has minimum {}",
            k + 1,
            mins[k]
        ))),
        None => Ok(()),
    }
}

fn check_layer(layer: &Array1<f64>, what: &str) -> Result<()> {
    match layer.iter().find(|v| !(v.is_finite() && **v >= -1e-8)) {
        Some(bad) => Err(Error::Hypothesis(format!(
            "{what} must be finite and nonnegative, found {bad}"
        ))),
        None => Ok(()),
    }
}

fn run<B, F>(
    sys: &System,
    config: &SolverConfig,
    z0: &ZState<B>,
    mut frame: F,
) -> Result<Trajectory<B>>
where
    B: BulkField,
    F: FnMut(f64, ZState<B>) -> Result<Frame<B>>,
{
    let steps = config.n_steps()?;
    let stepper = Stepper::new(&sys.linear(), config.dt, config.scheme);
    let offsets = sys.offsets();
    let mut y = flatten(z0);
    let mut frames = vec![frame(0.0, z0.clone())?];
    let mut rhs = |y: &[f64], out: &mut [f64]| sys.rhs(y, out);
    for n in 1..=steps {
        stepper.step(&mut y, &mut rhs)?;
        if y.iter().any(|v| !v.is_finite()) {
            return Err(Error::BlowUp {
                t: (n - 1) as f64 * config.dt,
            });
        }
        if n % config.record_every == 0 || n == steps {
            frames.push(frame(n as f64 * config.dt, unflatten(&y, z0, offsets))?);
        }
    }
    Ok(Trajectory { frames })
}

fn system<'a>(
    kind: Kind,
    params: &'a Params,
    config: &SolverConfig,
    n2: usize,
    h: f64,
    layer: Array1<f64>,
) -> Result<System<'a>> {
    Ok(System {
        kind,
        params,
        boundary: Boundary {
            grid: config.boundary_grid()?,
            n1: config.n1,
        },
        n2,
        h,
        layer,
    })
}

fn check_h(h: f64) -> Result<()> {
    crate::error::check_param("h", h, h > 0.0 && h <= 1.0, "must lie in (0, 1]")
}

/// Thin-domain system with the boundary source `p₁η^ε` (`ε = 0`: point source),
/// integrated in the shifted variables `z = M(u₁ - m^μ, u₂, …)`.
pub fn evolve_2d(
    u0: &UState,
    params: &Params,
    h: f64,
    eps: f64,
    config: &SolverConfig,
) -> Result<Trajectory> {
    params.validate()?;
    config.validate()?;
    check_h(h)?;
    let nodes = config.n_nodes();
    check_shapes(
        u0,
        config.n1,
        nodes,
        u0.u1.shape() == (config.n1, config.n2),
    )?;
    check_nonnegative(u0)?;
    let m = build_m_mu(params, h, eps, config.n1, config.n2)?;
    let layer = trace_of_m(&m, &config.boundary_grid()?, eps)?;
    check_layer(&layer, "the boundary trace of the layer")?;
    let sys = system(Kind::Shifted2D, params, config, config.n2, h, layer)?;
    let z0 = u0.to_z(&m)?;
    let layer_nodes = layer_at_nodes(params, h, eps, config.n1, config.n2)?;
    let grid = config.bulk_grid()?;
    run(&sys, config, &z0, |t, z| {
        let u = z.from_z(&m)?;
        let mut diag = diagnostics(t, &z, &u, config.theta, config.p_exp)?;
        if t > 0.0 {
            // bulk values as smooth part plus the layer at the nodes, without its truncation ringing
            let bulk = (&grid.to_physical(&z.z1)? + &layer_nodes)
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min);
            diag.min_u = min_excluding_bulk(&u)?.min(bulk);
        }
        Ok(Frame {
            t,
            z: Some(z),
            u,
            diag,
        })
    })
}

/// One step of the shifted thin-domain system. `m_trace` holds `Tr m^μ` at the boundary nodes.
pub fn step_mmild(
    z: &ZState,
    dt: f64,
    params: &Params,
    h: f64,
    m_trace: &Array1<f64>,
    scheme: Scheme,
) -> Result<ZState> {
    check_h(h)?;
    check_layer(m_trace, "the boundary trace of the layer")?;
    let (n1, n2) = z.z1.shape();
    if z.z2.n_modes() != n1 || m_trace.len() != z.n_nodes() {
        return Err(Error::Shape {
            expected: format!("{n1} modes and {} nodes", z.n_nodes()),
            found: format!("{} modes and {} nodes", z.z2.n_modes(), m_trace.len()),
        });
    }
    let sys = System {
        kind: Kind::Shifted2D,
        params,
        boundary: Boundary {
            grid: Grid1D::new(z.n_nodes())?,
            n1,
        },
        n2,
        h,
        layer: m_trace.clone(),
    };
    let stepper = Stepper::new(&sys.linear(), dt, scheme);
    let mut y = flatten(z);
    stepper.step(&mut y, &mut |y: &[f64], out: &mut [f64]| sys.rhs(y, out))?;
    if y.iter().any(|v| !v.is_finite()) {
        return Err(Error::BlowUp { t: 0.0 });
    }
    Ok(unflatten(&y, z, sys.offsets()))
}

/// Thin-domain system in the original variables with a bounded boundary source `ω`
/// given at the boundary nodes. Degradation rates may vanish here.
pub fn evolve_regular(
    u0: &UState,
    params: &Params,
    h: f64,
    omega: &Array1<f64>,
    config: &SolverConfig,
) -> Result<Trajectory> {
    params.validate_relaxed()?;
    config.validate()?;
    check_h(h)?;
    let nodes = config.n_nodes();
    check_shapes(
        u0,
        config.n1,
        nodes,
        u0.u1.shape() == (config.n1, config.n2),
    )?;
    check_nonnegative(u0)?;
    if omega.len() != nodes {
        return Err(Error::Shape {
            expected: format!("{nodes} source samples"),
            found: omega.len().to_string(),
        });
    }
    check_layer(omega, "the boundary source")?;
    let sys = system(Kind::Regular2D, params, config, config.n2, h, omega.clone())?;
    let zero = SpectralField2D::zeros(config.n1, config.n2);
    let y0 = u0.to_z(&zero)?;
    run(&sys, config, &y0, |t, z| {
        let u = z.from_z(&zero)?;
        let diag = diagnostics(t, &z, &u, config.theta, config.p_exp)?;
        Ok(Frame {
            t,
            z: None,
            u,
            diag,
        })
    })
}

/// The one-dimensional limit system, integrated in `z = M(u₁ - m⁰, u₂, …)`.
pub fn evolve_limit(
    u0: &UState<SpectralField1D>,
    params: &Params,
    config: &SolverConfig,
) -> Result<Trajectory<SpectralField1D>> {
    params.validate()?;
    config.validate()?;
    let nodes = config.n_nodes();
    check_shapes(u0, config.n1, nodes, u0.u1.n_modes() == config.n1)?;
    check_nonnegative(u0)?;
    let m0 = build_m_zero(params, config.n1)?;
    let grid = config.boundary_grid()?;
    let layer = boundary_values(&m0, &grid, true)?;
    check_layer(&layer, "the limit layer")?;
    let sys = system(Kind::Limit1D, params, config, 1, 1.0, layer)?;
    let z0 = u0.to_z(&m0)?;
    run(&sys, config, &z0, |t, z| {
        let u = z.from_z(&m0)?;
        let diag = diagnostics(t, &z, &u, config.theta, config.p_exp)?;
        Ok(Frame {
            t,
            z: Some(z),
            u,
            diag,
        })
    })
}
