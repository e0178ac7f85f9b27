//! Decay of the resolvent and the semigroup on the complement of thin-direction averages.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{Check, Report};
use crate::error::{Error, Result};
use crate::spectral::basis::lambda_rect;

#[derive(Clone, Debug, PartialEq)]
pub struct IronSpec {
    pub hs: Vec<f64>,
    pub pairs: Vec<(f64, f64)>,
    pub lambdas: Vec<f64>,
    pub ts: Vec<f64>,
    /// Modes per direction.
    pub n: usize,
    /// Random fields per semigroup row, checked in norm form.
    pub n_samples: usize,
    pub seed: u64,
}

impl Default for IronSpec {
    fn default() -> Self {
        let theta = 1.0 / 32.0;
        Self {
            hs: vec![1.0, 0.5, 0.25],
            pairs: vec![
                (0.0, 0.0),
                (0.0, 0.5),
                (0.0, 1.0),
                (-0.25 - theta, 0.5 + theta),
            ],
            lambdas: vec![0.5, 1.0, 5.0],
            ts: vec![1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0],
            n: 128,
            n_samples: 20,
            seed: 11,
        }
    }
}

/// Largest modewise ratio of `(1-λ_ij)^δ e^{tλ_{ij,h}}` to `(1 + t^{-δ}) e^{tλ_{01,h}}` over `j ≥ 1`.
fn semigroup_ratio(n: usize, h: f64, delta: f64, t: f64) -> f64 {
    let l01 = lambda_rect(0, 1, h);
    let den = 1.0 + t.powf(-delta);
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in 1..n {
            let r = (1.0 - lambda_rect(i, j, 1.0)).powf(delta)
                * (t * (lambda_rect(i, j, h) - l01)).exp()
                / den;
            worst = worst.max(r);
        }
    }
    worst
}

pub fn check_iron_estimates(spec: &IronSpec) -> Result<Report> {
    for &(s, s2) in &spec.pairs {
        if s2 < s {
            return Err(Error::Hypothesis(format!("need s' >= s, got ({s}, {s2})")));
        }
    }
    let n = spec.n;
    let mut report = Report::new("iron", Some(spec.seed));
    for &h in &spec.hs {
        let l01 = lambda_rect(0, 1, h);
        for &(s, s2) in &spec.pairs {
            let delta = s2 - s;
            if delta > 1.0 {
                continue;
            }
            for &lam in &spec.lambdas {
                let gap = lam - l01;
                let bound = (1.0 + gap.powf(delta)) / gap;
                let mut worst = 0.0_f64;
                for i in 0..n {
                    for j in 1..n {
                        let v = (1.0 - lambda_rect(i, j, 1.0)).powf(delta)
                            / (lam - lambda_rect(i, j, h));
                        worst = worst.max(v / bound);
                    }
                }
                report.push(Check::at_most(
                    format!("resolvent[h={h},s={s},s'={s2},lambda={lam}]"),
                    worst,
                    1.0 + 1e-12,
                ));
            }
        }
    }
    let fitted = spec
        .ts
        .iter()
        .map(|&t| semigroup_ratio(n, 1.0, 1.0, t))
        .fold(0.0, f64::max);
    report.push(Check::at_most(
        "semigroup_fitted_constant[s=0,s'=1,h=1]",
        fitted,
        f64::INFINITY,
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for &h in &spec.hs {
        let l01 = lambda_rect(0, 1, h);
        for &(s, s2) in &spec.pairs {
            let delta = s2 - s;
            for &t in &spec.ts {
                let modewise = semigroup_ratio(n, h, delta, t);
                let limit = if delta == 0.0 { 0.5 } else { fitted };
                report.push(Check::at_most(
                    format!("semigroup[h={h},s={s},s'={s2},t={t}]"),
                    modewise,
                    limit * (1.0 + 1e-12),
                ));
                // norm form on random fields supported off the averaged subspace
                let mut worst = 0.0_f64;
                for _ in 0..spec.n_samples {
                    let (mut num, mut den) = (0.0, 0.0);
                    for i in 0..n {
                        for j in 1..n {
                            let a: f64 = rng.random_range(-1.0..1.0)
                                * (1.0 - lambda_rect(i, j, 1.0)).powf(-0.5 - s);
                            let w = 1.0 - lambda_rect(i, j, 1.0);
                            den += w.powf(2.0 * s) * a * a;
                            num +=
                                w.powf(2.0 * s2) * (a * (t * lambda_rect(i, j, h)).exp()).powi(2);
                        }
                    }
                    let ratio = (num / den).sqrt() / ((1.0 + t.powf(-delta)) * (t * l01).exp());
                    worst = worst.max(ratio);
                }
                report.push(Check::at_most(
                    format!("semigroup_norm[h={h},s={s},s'={s2},t={t}]"),
                    worst,
                    fitted * (1.0 + 1e-12),
                ));
            }
        }
    }
    Ok(report)
}
