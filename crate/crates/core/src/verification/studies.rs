//! Parameter sweeps measuring the two singular limits and the time-step convergence.

use rayon::prelude::*;

use super::report::RateTable;
use crate::error::{check_param, Error, Result};
use crate::evolution::{evolve_2d, evolve_limit, initial, SolverConfig, Trajectory};
use crate::model::{Mollifier, Params, UState};
use crate::singular::{corrected_defect, defect_from_coefficients, mollifier_defect_norm};
use crate::spectral::ops::extend;
use crate::spectral::{lp_norm, SobolevIndex, SpectralField1D, SpectralField2D};

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    /// Decreasing thickness ratios.
    pub hs: Vec<f64>,
    /// Decreasing mollifier widths.
    pub epss: Vec<f64>,
    pub config: SolverConfig,
    pub seed: u64,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        for (name, list) in [("h", &self.hs), ("epsilon", &self.epss)] {
            if list.is_empty() {
                return Err(Error::Precondition(format!("{name}-list is empty")));
            }
            if list.windows(2).any(|w| w[1] >= w[0]) {
                return Err(Error::Precondition(format!(
                    "{name}-list must be strictly decreasing"
                )));
            }
        }
        self.config.validate()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MollifierStudy {
    /// Columns: tail-corrected norm at `n` modes, the same at `2n` modes, their relative
    /// change, and the plainly truncated norm at `n` modes.
    pub table: RateTable,
    pub max_sensitivity: f64,
    pub decreasing: bool,
    /// Last norm over first norm.
    pub decay_ratio: f64,
}

/// `‖η^ε - δ‖_{X^{-1/4-s}(I)}` from `n` and from `2n` modes, for each `ε`. The Dirac tail
/// past the truncation is added in closed form; the plain truncation converges only like
/// `n^{-2s}` and is kept as the last column.
pub fn mollifier_convergence_study(s: f64, epss: &[f64], n: usize) -> Result<MollifierStudy> {
    check_param("s", s, s > 0.0, "must be positive")?;
    let mut table = RateTable::new(
        "epsilon",
        &["norm", "norm_refined", "relative_change", "truncated"],
    );
    let rows: Vec<Result<(f64, Vec<f64>)>> = epss
        .par_iter()
        .map(|&eps| {
            let g = Mollifier::new(eps)?.coefficients(2 * n);
            let coarse = SpectralField1D::from_vec(g.coeffs.iter().take(n).copied().collect());
            let a = corrected_defect(&coarse, s, eps)?;
            let b = corrected_defect(&g, s, eps)?;
            let rel = if a > 0.0 { (b - a).abs() / a } else { 0.0 };
            Ok((eps, vec![a, b, rel, defect_from_coefficients(&coarse, s)]))
        })
        .collect();
    for r in rows {
        table.rows.push(r?);
    }
    let max_sensitivity = table.column(2).into_iter().fold(0.0, f64::max);
    let norms = table.column(0);
    let decay_ratio = norms.last().copied().unwrap_or(0.0) / norms.first().copied().unwrap_or(1.0);
    Ok(MollifierStudy {
        decreasing: table.strictly_decreasing(0),
        table,
        max_sensitivity,
        decay_ratio,
    })
}

/// `Σ_{i≥2} ‖u_i - v_i‖_{Z_i}` with `Z₂ = X^{1/2}(I)` and `Z₃..Z₅ = L_p(I)`.
fn boundary_distance<A, B>(u: &UState<A>, v: &UState<B>, p: f64) -> Result<f64> {
    Ok(u.u2.sub(&v.u2)?.xs_norm(SobolevIndex::new(0.5)?)
        + lp_norm(&(&u.u3 - &v.u3), p)
        + lp_norm(&(&u.u4 - &v.u4), p)
        + lp_norm(&(&u.u5 - &v.u5), p))
}

fn same_times<A, B>(a: &Trajectory<A>, b: &Trajectory<B>) -> Result<()> {
    if a.frames.len() != b.frames.len()
        || a.frames
            .iter()
            .zip(&b.frames)
            .any(|(x, y)| (x.t - y.t).abs() > 1e-12)
    {
        return Err(Error::Precondition(
            "trajectories are recorded at different times".into(),
        ));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct EpsilonStudy {
    /// Columns: sup-in-time `Σ‖u_i^μ - u_i^{μ₀}‖_{Z_i}`, its bulk part, its boundary part,
    /// and `‖η^ε - δ‖_{X^{-1/4-θ}}`.
    pub table: RateTable,
    pub decreasing: bool,
    /// Last distance over first distance.
    pub final_ratio: f64,
}

/// Distance of the `ε > 0` solutions to the point-source solution at fixed `h`.
pub fn epsilon_limit_study(
    params: &Params,
    h: f64,
    epss: &[f64],
    u0: &UState,
    config: &SolverConfig,
) -> Result<EpsilonStudy> {
    let s1 = SobolevIndex::new(0.5 - config.theta)?;
    let mut all = vec![0.0];
    all.extend_from_slice(epss);
    let runs: Vec<Result<Trajectory>> = all
        .par_iter()
        .map(|&e| evolve_2d(u0, params, h, e, config))
        .collect();
    let mut runs = runs.into_iter();
    let reference = runs.next().expect("reference run")?;
    let mut table = RateTable::new("epsilon", &["distance", "bulk", "boundary", "source_gap"]);
    for (&eps, run) in epss.iter().zip(runs) {
        let run = run?;
        same_times(&run, &reference)?;
        let (mut sup, mut sup_bulk, mut sup_bdry) = (0.0_f64, 0.0_f64, 0.0_f64);
        for (a, b) in run.frames.iter().zip(&reference.frames) {
            let bulk = a.u.u1.sub(&b.u.u1)?.xs_norm(s1);
            let bdry = boundary_distance(&a.u, &b.u, config.p_exp)?;
            sup = sup.max(bulk + bdry);
            sup_bulk = sup_bulk.max(bulk);
            sup_bdry = sup_bdry.max(bdry);
        }
        let gap = mollifier_defect_norm(eps, config.theta, config.n1)?;
        table.rows.push((eps, vec![sup, sup_bulk, sup_bdry, gap]));
    }
    let d = table.column(0);
    let final_ratio = d.last().copied().unwrap_or(0.0) / d.first().copied().unwrap_or(1.0);
    Ok(EpsilonStudy {
        decreasing: table.strictly_decreasing(0),
        table,
        final_ratio,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionStudy {
    /// Columns: the limit quantity, its weighted bulk part, its boundary part, and the two
    /// candidate rates `(h/π)^θ` and `(h/π)^{2(1/4-4θ)/(7/4+4θ)}`.
    pub table: RateTable,
    pub decreasing: bool,
    pub slope: Option<f64>,
}

/// `sup_t [t^{2θ}‖z₁^{μ₀} - E z₁⁰‖_{X^{1/2+θ}(Ω)} + Σ_{i≥2}‖u_i^{μ₀} - u_i⁰‖_{Z_i}]` per `h`,
/// with the point source throughout.
pub fn dimension_reduction_study(
    params: &Params,
    hs: &[f64],
    u0: &UState,
    config: &SolverConfig,
) -> Result<ReductionStudy> {
    let theta = config.theta;
    let s_plus = SobolevIndex::new(0.5 + theta)?;
    let limit = evolve_limit(&initial::limit_initial(u0), params, config)?;
    let runs: Vec<Result<Trajectory>> = hs
        .par_iter()
        .map(|&h| evolve_2d(u0, params, h, 0.0, config))
        .collect();
    let mut table = RateTable::new(
        "h",
        &[
            "distance",
            "bulk_weighted",
            "boundary",
            "rate_theta",
            "rate_mixed",
        ],
    );
    for (&h, run) in hs.iter().zip(runs) {
        let run = run?;
        same_times(&run, &limit)?;
        let (mut sup, mut sup_bulk, mut sup_bdry) = (0.0_f64, 0.0_f64, 0.0_f64);
        for (a, b) in run.frames.iter().zip(&limit.frames) {
            let (za, zb) = (
                a.z.as_ref().expect("shifted run"),
                b.z.as_ref().expect("shifted run"),
            );
            let w = if a.t > 0.0 {
                a.t.powf(2.0 * theta)
            } else {
                0.0
            };
            let bulk = w * za.z1.sub(&extend(&zb.z1, config.n2))?.xs_norm(s_plus);
            let bdry = boundary_distance(&a.u, &b.u, config.p_exp)?;
            sup = sup.max(bulk + bdry);
            sup_bulk = sup_bulk.max(bulk);
            sup_bdry = sup_bdry.max(bdry);
        }
        let x = h / std::f64::consts::PI;
        let mixed = x.powf(2.0 * (0.25 - 4.0 * theta) / (1.75 + 4.0 * theta));
        table
            .rows
            .push((h, vec![sup, sup_bulk, sup_bdry, x.powf(theta), mixed]));
    }
    Ok(ReductionStudy {
        decreasing: table.strictly_decreasing(0),
        slope: table.slope(0),
        table,
    })
}

/// `L²` distance summed over the five components.
pub fn l2_distance(a: &UState, b: &UState) -> Result<f64> {
    Ok(a.u1.sub(&b.u1)?.l2_norm()
        + a.u2.sub(&b.u2)?.l2_norm()
        + lp_norm(&(&a.u3 - &b.u3), 2.0)
        + lp_norm(&(&a.u4 - &b.u4), 2.0)
        + lp_norm(&(&a.u5 - &b.u5), 2.0))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceStudy {
    pub dts: Vec<f64>,
    /// Final-time `L²` distance of each run to the reference run at half the finest step.
    pub errors: Vec<f64>,
    /// `log₂` of successive error ratios.
    pub orders: Vec<f64>,
}

/// Time-step self-convergence of the shifted solver: runs at `dt₀, dt₀/2, …` (`halvings`
/// times) and compares each final state against a run at half the finest step.
pub fn self_convergence(
    params: &Params,
    h: f64,
    eps: f64,
    u0: &UState,
    config: &SolverConfig,
    halvings: usize,
) -> Result<ConvergenceStudy> {
    let dts: Vec<f64> = (0..=halvings + 1)
        .map(|k| config.dt / f64::powi(2.0, k as i32))
        .collect();
    let finals: Vec<Result<UState>> = dts
        .par_iter()
        .map(|&dt| {
            let cfg = SolverConfig {
                dt,
                record_every: usize::MAX / 2,
                ..config.clone()
            };
            Ok(evolve_2d(u0, params, h, eps, &cfg)?.last().u.clone())
        })
        .collect();
    let finals = finals.into_iter().collect::<Result<Vec<_>>>()?;
    let reference = finals.last().expect("reference run");
    let errors = finals[..=halvings]
        .iter()
        .map(|u| l2_distance(u, reference))
        .collect::<Result<Vec<_>>>()?;
    let orders = errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect();
    Ok(ConvergenceStudy {
        dts: dts[..=halvings].to_vec(),
        errors,
        orders,
    })
}

/// Distance of the shifted bulk field to an extended 1D field; exposed for the decoupled check.
pub fn layer_gap(z2d: &SpectralField2D, z1d: &SpectralField1D, s: SobolevIndex) -> Result<f64> {
    let (_, n2) = z2d.shape();
    Ok(z2d.sub(&extend(z1d, n2))?.xs_norm(s))
}
