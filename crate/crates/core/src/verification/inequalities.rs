//! Elementary inequalities used throughout the fixed-point estimates.

use statrs::function::beta::beta;

use super::report::{Check, Report};
use crate::quadrature::integrate;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IneqSample {
    pub alpha: f64,
    pub beta: f64,
    pub r: f64,
    /// `t₀` for the supremum bound, `t` for the two integral bounds.
    pub t: f64,
}

/// 100 points: five exponent pairs, four rates, five times.
pub fn default_grid() -> Vec<IneqSample> {
    let pairs = [
        (0.0, 0.0),
        (0.25, 0.25),
        (0.5, 0.1),
        (0.1, 0.7),
        (0.45, 0.45),
    ];
    let rates = [0.1, 1.0, 5.0, 25.0];
    let times = [0.01, 0.1, 0.5, 1.0, 3.0];
    let mut out = Vec::with_capacity(100);
    for &(alpha, beta) in &pairs {
        for &r in &rates {
            for &t in &times {
                out.push(IneqSample { alpha, beta, r, t });
            }
        }
    }
    out
}

/// `sup_{t ≥ t₀} t^α e^{-rt}` by dense sampling followed by golden-section refinement.
pub fn sup_power_exp(alpha: f64, r: f64, t0: f64) -> f64 {
    let f = |t: f64| t.powf(alpha) * (-r * t).exp();
    let span = 60.0 / r + 10.0 * t0;
    let n = 20_000;
    let (mut best_t, mut best) = (t0, f(t0));
    for k in 1..=n {
        let t = t0 + span * (k as f64 / n as f64).powi(2);
        let v = f(t);
        if v > best {
            best = v;
            best_t = t;
        }
    }
    let step = span * 4.0 / n as f64;
    let (mut a, mut b) = ((best_t - step).max(t0), best_t + step);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..200 {
        let c = b - g * (b - a);
        let d = a + g * (b - a);
        if f(c) > f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    best.max(f(0.5 * (a + b)))
}

/// `∫₀ᵗ e^{-rτ} τ^{-α}(t-τ)^{-β} dτ` by adaptive quadrature after substitutions that
/// remove both endpoint singularities.
pub fn singular_integral(alpha: f64, beta: f64, r: f64, t: f64) -> f64 {
    let half = 0.5 * t;
    // τ = s^{1/(1-α)} on [0, t/2]
    let ea = 1.0 / (1.0 - alpha);
    let left = integrate(
        |s| {
            let tau = s.powf(ea);
            (-r * tau).exp() * (t - tau).powf(-beta) * ea
        },
        0.0,
        half.powf(1.0 - alpha),
        1e-300,
        1e-13,
    );
    // t - τ = s^{1/(1-β)} on [t/2, t]
    let eb = 1.0 / (1.0 - beta);
    let right = integrate(
        |s| {
            let sigma = s.powf(eb);
            let tau = t - sigma;
            (-r * tau).exp() * tau.powf(-alpha) * eb
        },
        0.0,
        half.powf(1.0 - beta),
        1e-300,
        1e-13,
    );
    left + right
}

/// Constant of the third inequality, from the Hölder step of its proof.
pub fn ineq3_constant(alpha: f64, beta: f64) -> f64 {
    let s = alpha + beta;
    if s == 0.0 {
        return 1.0;
    }
    let q = (s + 1.0) / (2.0 * s);
    let p = (1.0 + s) / (1.0 - s);
    beta_fn(1.0 - q * alpha, 1.0 - q * beta).powf(1.0 / q) * p.powf(-1.0 / p)
}

fn beta_fn(a: f64, b: f64) -> f64 {
    beta(a, b)
}

/// Checks the three inequalities at every sample; rows outside `α, β ≥ 0, α + β < 1, r > 0`
/// are skipped and flagged as failures of the grid itself.
pub fn check_elementary_inequalities(grid: &[IneqSample]) -> Report {
    const SLACK: f64 = 1e-9;
    let mut report = Report::new("inequalities", None);
    for s in grid {
        let tag = format!("a={},b={},r={},t={}", s.alpha, s.beta, s.r, s.t);
        if !(s.alpha >= 0.0 && s.beta >= 0.0 && s.alpha + s.beta < 1.0 && s.r > 0.0 && s.t > 0.0) {
            report.push(Check::flag(format!("hypotheses[{tag}]"), false));
            continue;
        }
        let c1 = s.alpha.powf(s.alpha).max(1.0);
        let lhs = sup_power_exp(s.alpha, s.r, s.t);
        let rhs = c1 * (s.r.powf(-s.alpha) + s.t.powf(s.alpha)) * (-s.r * s.t).exp();
        report.push(Check::at_most(
            format!("sup_bound[{tag}]"),
            lhs,
            rhs * (1.0 + SLACK),
        ));

        let lhs = singular_integral(s.alpha, s.beta, 0.0, s.t);
        let rhs = beta_fn(1.0 - s.alpha, 1.0 - s.beta) * s.t.powf(1.0 - s.alpha - s.beta);
        report.push(Check::at_most(
            format!("beta_bound[{tag}]"),
            lhs,
            rhs * (1.0 + SLACK),
        ));

        let sum = s.alpha + s.beta;
        let lhs = singular_integral(s.alpha, s.beta, s.r, s.t);
        let rhs =
            ineq3_constant(s.alpha, s.beta) * (s.t.powf(sum) / s.r).powf((1.0 - sum) / (1.0 + sum));
        report.push(Check::at_most(
            format!("decay_bound[{tag}]"),
            lhs,
            rhs * (1.0 + SLACK),
        ));
    }
    report
}
