use ndarray::Array2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{Check, Report};
use crate::error::{Error, Result};
use crate::spectral::basis::lambda_rect;
use crate::spectral::ops::trace;
use crate::spectral::{SobolevIndex, SpectralField2D};

/// The trace constant, `C² = 3^{2s} (π/2)^{4s-1} 8s/(4s-1)` for `s > 1/4`.
pub fn trace_constant(s: f64) -> Result<f64> {
    if !(s > 0.25) {
        return Err(Error::Hypothesis(format!(
            "trace bound needs s > 1/4, got {s}"
        )));
    }
    let c2 = 3f64.powf(2.0 * s) * (std::f64::consts::FRAC_PI_2).powf(4.0 * s - 1.0) * 8.0 * s
        / (4.0 * s - 1.0);
    Ok(c2.sqrt())
}

/// Random field of shape `n1 × n2`: a random decay profile, and every third sample
/// concentrated on a single `x₁`-mode where the bound is tightest.
pub fn random_field(rng: &mut ChaCha8Rng, n1: usize, n2: usize) -> SpectralField2D {
    let decay = rng.random_range(0.0..1.5);
    let kind = rng.random_range(0..3);
    let row = rng.random_range(0..n1);
    SpectralField2D::from_array(Array2::from_shape_fn((n1, n2), |(i, j)| {
        if kind == 0 && i != row {
            return 0.0;
        }
        let sign = if kind == 1 {
            1.0
        } else {
            rng.random_range(-1.0..1.0)
        };
        sign * (1.0 - lambda_rect(i, j, 1.0)).powf(-decay)
    }))
}

/// Worst ratio `‖Tr w‖_{X^{s-1/4}(I)} / ‖w‖_{X^s(Ω)}` over random fields, against the constant.
pub fn check_trace_inequality(n_samples: usize, s_list: &[f64], seed: u64) -> Result<Report> {
    const N1: usize = 48;
    const N2: usize = 48;
    let mut report = Report::new("trace", Some(seed));
    for &s in s_list {
        let c = trace_constant(s)?;
        let (si, sb) = (SobolevIndex::new(s)?, SobolevIndex::new(s - 0.25)?);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ s.to_bits());
        let mut worst = 0.0_f64;
        for _ in 0..n_samples {
            let w = random_field(&mut rng, N1, N2);
            let den = w.xs_norm(si);
            if den > 0.0 {
                worst = worst.max(trace(&w).xs_norm(sb) / den);
            }
        }
        report.push(Check::at_most(format!("worst_ratio[s={s}]"), worst, c));
    }
    Ok(report)
}
