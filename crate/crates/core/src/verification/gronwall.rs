//! Singular Gronwall bound and the extremal Volterra equation that it controls.

use statrs::function::beta::beta;

use super::report::{Check, Report};
use crate::error::{check_param, Error, Result};

fn check_exponents(alpha: f64, beta: f64) -> Result<()> {
    if !(alpha >= 0.0 && beta >= 0.0) {
        return Err(Error::Hypothesis(format!(
            "exponents must be nonnegative, got α={alpha}, β={beta}"
        )));
    }
    if alpha + beta >= 1.0 {
        return Err(Error::Hypothesis(format!(
            "α + β = {} must be below 1",
            alpha + beta
        )));
    }
    Ok(())
}

/// The constant `C` of the bound; `1` when `α = β = 0`.
pub fn gronwall_constant(alpha: f64, beta_: f64) -> Result<f64> {
    check_exponents(alpha, beta_)?;
    let s = alpha + beta_;
    if s == 0.0 {
        return Ok(1.0);
    }
    let q = (1.0 + 1.0 / s) / 2.0;
    let p = (1.0 + s) / (1.0 - s);
    let c0 = beta(1.0 - alpha * q, 1.0 - beta_ * q);
    Ok(2f64.powf(1.0 / q).max(2f64.powf(p - 1.0) * c0.powf(p) / p))
}

/// `ln` of the bound `C a exp(C b^p T^{1+α+β})`; finite even when the bound overflows.
pub fn gronwall_log_bound(a: f64, b: f64, alpha: f64, beta_: f64, t: f64) -> Result<f64> {
    check_param("a", a, a >= 0.0, "must be nonnegative")?;
    check_param("b", b, b > 0.0, "must be positive")?;
    check_param("T", t, t > 0.0, "must be positive")?;
    let c = gronwall_constant(alpha, beta_)?;
    let s = alpha + beta_;
    let p = (1.0 + s) / (1.0 - s);
    Ok(c.ln() + a.ln() + c * b.powf(p) * t.powf(1.0 + s))
}

pub fn gronwall_bound(a: f64, b: f64, alpha: f64, beta_: f64, t: f64) -> Result<f64> {
    Ok(gronwall_log_bound(a, b, alpha, beta_, t)?.exp())
}

/// Solves `f(t) = a + b ∫₀ᵗ f(τ) τ^{-α} (t-τ)^{-β} dτ` on a graded mesh `t_k = T(k/n)²` by
/// product integration: `f` is piecewise linear, and on each panel the singular factor nearer
/// to the panel is integrated exactly while the other is frozen at the panel midpoint.
pub fn volterra_oracle(
    a: f64,
    b: f64,
    alpha: f64,
    beta_: f64,
    t_end: f64,
    n: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    check_exponents(alpha, beta_)?;
    check_param("T", t_end, t_end > 0.0, "must be positive")?;
    if n < 2 {
        return Err(Error::Precondition("need at least two panels".into()));
    }
    let ts: Vec<f64> = (0..=n)
        .map(|k| t_end * (k as f64 / n as f64).powi(2))
        .collect();
    let mut f = vec![0.0; n + 1];
    f[0] = a;
    // ∫_lo^hi x^{-e} dx and ∫_lo^hi x^{1-e} dx
    let m0 = |e: f64, lo: f64, hi: f64| (hi.powf(1.0 - e) - lo.powf(1.0 - e)) / (1.0 - e);
    let m1 = |e: f64, lo: f64, hi: f64| (hi.powf(2.0 - e) - lo.powf(2.0 - e)) / (2.0 - e);
    let mut w = vec![0.0; n + 1];
    for step in 1..=n {
        let t = ts[step];
        w[..=step].iter_mut().for_each(|v| *v = 0.0);
        for k in 0..step {
            let (lo, hi) = (ts[k], ts[k + 1]);
            let len = hi - lo;
            let mid = 0.5 * (lo + hi);
            // weights of the two hat functions on this panel
            let (wl, wr) = if mid <= 0.5 * t {
                let frozen = (t - mid).powf(-beta_);
                let i0 = m0(alpha, lo, hi);
                let i1 = m1(alpha, lo, hi);
                (frozen * (hi * i0 - i1) / len, frozen * (i1 - lo * i0) / len)
            } else {
                // σ = t - τ, σ ∈ [t - hi, t - lo]
                let frozen = mid.powf(-alpha);
                let (slo, shi) = (t - hi, t - lo);
                let i0 = m0(beta_, slo, shi);
                let i1 = m1(beta_, slo, shi);
                // τ - lo = (t - lo) - σ,  hi - τ = σ - (t - hi)
                (
                    frozen * (i1 - slo * i0) / len,
                    frozen * (shi * i0 - i1) / len,
                )
            };
            w[k] += wl;
            w[k + 1] += wr;
        }
        let known: f64 = (0..step).map(|k| w[k] * f[k]).sum();
        let denom = 1.0 - b * w[step];
        if denom <= 0.0 {
            return Err(Error::Precondition(
                "mesh too coarse for the implicit step".into(),
            ));
        }
        f[step] = (a + b * known) / denom;
    }
    Ok((ts, f))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GronwallTuple {
    pub a: f64,
    pub b: f64,
    pub alpha: f64,
    pub beta: f64,
    pub t: f64,
}

/// Twenty tuples, the first four with `α = β = 0`.
pub fn default_tuples() -> Vec<GronwallTuple> {
    let mut out = Vec::new();
    for &(a, b, t) in &[
        (1.0, 1.0, 1.0),
        (0.5, 2.0, 1.5),
        (2.0, 0.3, 4.0),
        (1.0, 3.0, 0.5),
    ] {
        out.push(GronwallTuple {
            a,
            b,
            alpha: 0.0,
            beta: 0.0,
            t,
        });
    }
    let exps = [
        (0.25, 0.5),
        (0.1, 0.1),
        (0.3, 0.0),
        (0.0, 0.4),
        (0.45, 0.45),
        (0.6, 0.2),
        (0.05, 0.7),
        (0.2, 0.2),
    ];
    let scales = [(1.0, 1.0, 1.0), (0.3, 2.0, 0.8)];
    for &(alpha, beta) in &exps {
        for &(a, b, t) in &scales {
            out.push(GronwallTuple {
                a,
                b,
                alpha,
                beta,
                t,
            });
        }
    }
    out
}

/// For each tuple: the oracle's supremum does not exceed the bound. Compared in logarithms;
/// the slack is twice the Richardson estimate `|ln f_n - ln f_{n/2}|` of the oracle's own
/// discretisation error, plus `1e-9`.
pub fn check_gronwall(tuples: &[GronwallTuple], n: usize) -> Result<Report> {
    let mut report = Report::new("gronwall", None);
    let sup_of = |g: &GronwallTuple, n: usize| -> Result<f64> {
        let (_, f) = volterra_oracle(g.a, g.b, g.alpha, g.beta, g.t, n)?;
        Ok(f.iter().copied().fold(0.0, f64::max).ln())
    };
    for g in tuples {
        let fine = sup_of(g, n)?;
        let coarse = sup_of(g, (n / 2).max(1))?;
        let slack = 2.0 * (fine - coarse).abs() + 1e-9;
        let log_bound = gronwall_log_bound(g.a, g.b, g.alpha, g.beta, g.t)?;
        let tag = format!(
            "a={},b={},alpha={},beta={},T={}",
            g.a, g.b, g.alpha, g.beta, g.t
        );
        report.push(Check::at_most(
            format!("log_sup[{tag}]"),
            fine,
            log_bound + slack,
        ));
    }
    Ok(report)
}
