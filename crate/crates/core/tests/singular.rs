use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use approx::assert_abs_diff_eq;
use morphlab::quadrature::integrate;
use morphlab::singular::*;
use morphlab::spectral::basis::{lambda_line, u_basis, v_basis};
use morphlab::*;

fn params(p1: f64, b1: f64) -> Params {
    let mut p = Params::default();
    p.p[0] = p1;
    p.b[0] = b1;
    p
}

#[test]
fn zero_source_gives_zero_layers() {
    let p = params(0.0, 1.0);
    assert!(build_m_mu(&p, 0.5, 0.2, 16, 8)
        .unwrap()
        .coeffs
        .iter()
        .all(|a| *a == 0.0));
    assert!(build_m_zero(&p, 16)
        .unwrap()
        .coeffs
        .iter()
        .all(|a| *a == 0.0));
}

#[test]
fn dirac_layer_coefficient() {
    let p = params(1.5, 1.0);
    let m = build_m_mu(&p, 1.0, 0.0, 4, 4).unwrap();
    let want = 1.5 * FRAC_1_SQRT_2 * SQRT_2 / (1.0 + PI * PI);
    assert_abs_diff_eq!(m.coeffs[[0, 1]], want, epsilon = 1e-15);
}

#[test]
fn limit_layer_matches_green_function() {
    let p = params(1.0, 1.0);
    let m0 = build_m_zero(&p, 4096).unwrap();
    // independent oracle: the two-point problem solved by hand
    let r: f64 = 1.0;
    let green = |x: f64| (r * (1.0 - x.abs())).cosh() / (2.0 * r * r.sinh());
    assert_abs_diff_eq!(m0.eval(0.5).unwrap(), green(0.5), epsilon = 1e-6);
    for k in 0..32 {
        let x = -1.0 + (2 * k + 1) as f64 / 32.0;
        assert_abs_diff_eq!(m0.eval(x).unwrap(), green(x), epsilon = 1e-6);
        assert_abs_diff_eq!(m_zero_closed_form(&p, x), green(x), epsilon = 1e-15);
    }
}

#[test]
fn green_function_jump_and_neumann_ends() {
    let p = params(2.0, 3.0);
    let m = |x| m_zero_closed_form(&p, x);
    let d = 1e-6;
    let right = (m(2.0 * d) - m(d)) / d;
    let left = (m(-d) - m(-2.0 * d)) / d;
    assert_abs_diff_eq!(left - right, 2.0, epsilon = 1e-4);
    assert_abs_diff_eq!((m(1.0) - m(1.0 - d)) / d, 0.0, epsilon = 1e-4);
    // b m - m'' = 0 away from the source
    let x = 0.4;
    let lap = (m(x + 1e-4) - 2.0 * m(x) + m(x - 1e-4)) / 1e-8;
    assert_abs_diff_eq!(3.0 * m(x) - lap, 0.0, epsilon = 1e-5);
}

#[test]
fn limit_layer_is_lipschitz_uniformly_in_truncation() {
    let p = params(1.0, 1.0);
    let mut maxes = vec![];
    for n in [256, 512, 1024] {
        let m0 = build_m_zero(&p, n).unwrap();
        let deriv = |x: f64| -> f64 {
            m0.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| -a * (i as f64 * PI / 2.0) * (i as f64 * PI * (x + 1.0) / 2.0).sin())
                .sum()
        };
        let mx = (0..400)
            .map(|k| deriv(-1.0 + (2 * k + 1) as f64 / 400.0).abs())
            .fold(0.0, f64::max);
        maxes.push(mx);
    }
    // |m0'| <= p1/2, plus the Gibbs overshoot (about 9%) of the unit jump at the source
    for mx in &maxes {
        assert!(*mx < 0.5 + 0.09 + 0.01, "{maxes:?}");
    }
    assert!(maxes[2] <= maxes[0] * 1.01, "{maxes:?}");
}

#[test]
fn averaged_layer_is_the_limit_layer() {
    for h in [1.0, 0.5, 0.1] {
        assert!(average_matches_limit(&Params::default(), h, 64, 16).unwrap() <= 1e-15);
    }
}

#[test]
fn weak_form_residual() {
    // b m φ + ∇m·∇_h φ = p1 ∫ η^ε φ(·,0) for φ = e^{x/2} ψ(y)
    let (h, eps, p1, b1) = (0.5, 0.2, 1.3, 1.7);
    let p = params(p1, b1);
    let (n1, n2) = (160, 8);
    let m = build_m_mu(&p, h, eps, n1, n2).unwrap();
    let psi = |y: f64| 2.0 + (PI * y).cos() + 0.5 * (3.0 * PI * y).cos();
    let phi_x: Vec<f64> = (0..n1)
        .map(|i| integrate(|x| (x / 2.0).exp() * u_basis(i, x), -1.0, 1.0, 1e-15, 1e-13))
        .collect();
    let phi_y: Vec<f64> = (0..n2)
        .map(|j| integrate(|y| psi(y) * v_basis(j, y), 0.0, 1.0, 1e-15, 1e-13))
        .collect();
    let mut lhs = 0.0;
    for i in 0..n1 {
        for j in 0..n2 {
            let k1 = i as f64 * PI / 2.0;
            let k2 = j as f64 * PI / h;
            lhs += (b1 + k1 * k1 + k2 * k2) * m.coeffs[[i, j]] * phi_x[i] * phi_y[j];
        }
    }
    let eta = Mollifier::new(eps).unwrap();
    let rhs = p1
        * psi(0.0)
        * integrate(
            |x| eta.eval(x).unwrap() * (x / 2.0).exp(),
            -eps,
            eps,
            1e-15,
            1e-13,
        );
    assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-6);
}

#[test]
fn layer_trace_is_symmetric_and_nonnegative() {
    let p = Params::default();
    let m = build_m_mu(&p, 0.5, 0.2, 64, 16).unwrap();
    let grid = Grid1D::new(64).unwrap();
    let tr = trace_of_m(&m, &grid, 0.2).unwrap();
    for k in 0..64 {
        assert_abs_diff_eq!(tr[k], tr[63 - k], epsilon = 1e-12);
        assert!(tr[k] >= 0.0);
    }
}

#[test]
fn dirac_layer_trace_grows_toward_the_source() {
    let p = Params::default();
    let mut nearest = vec![];
    for n in [64, 128, 256] {
        let m = build_m_mu(&p, 1.0, 0.0, n, n / 4).unwrap();
        let grid = Grid1D::new(n).unwrap();
        let tr = trace_of_m(&m, &grid, 0.0).unwrap();
        assert!(tr.iter().all(|v| *v >= 0.0));
        // from the right end toward the centre
        for k in n / 2..n - 1 {
            assert!(tr[k] > tr[k + 1]);
        }
        nearest.push(tr[n / 2]);
    }
    assert!(nearest[0] < nearest[1] && nearest[1] < nearest[2]);
}

#[test]
fn dirac_values_need_a_grid_avoiding_the_source() {
    let m0 = build_m_zero(&Params::default(), 9).unwrap();
    assert!(boundary_values(&m0, &Grid1D::new(9).unwrap(), true).is_err());
    assert!(boundary_values(&m0, &Grid1D::new(9).unwrap(), false).is_ok());
    assert!(boundary_values(&m0, &Grid1D::new(10).unwrap(), true).is_ok());
}

#[test]
fn defect_norm_by_direct_summation() {
    let (eps, s, n) = (0.3, 0.2, 64);
    let g = Mollifier::new(eps).unwrap().coefficients(n);
    let direct: f64 = (0..n)
        .map(|i| {
            let d = g.coeffs[i] - u_basis(i, 0.0);
            (1.0 - lambda_line(i)).powf(-0.5 - 2.0 * s) * d * d
        })
        .sum::<f64>()
        .sqrt();
    assert_abs_diff_eq!(
        mollifier_defect_norm(eps, s, n).unwrap(),
        direct,
        epsilon = 1e-12
    );
    assert_eq!(mollifier_defect_norm(0.0, s, n).unwrap(), 0.0);
}

#[test]
fn swallow_columns() {
    let p = Params::default();
    let s = 0.125;
    let rows = swallow_diagnostics(&p, &[1.0], &[0.0, 0.4, 0.2, 0.1, 0.05], s, 256, 32).unwrap();
    assert_eq!(rows[0].layer_gap, Some(0.0));
    assert_eq!(rows[0].source_gap, Some(0.0));
    let gaps: Vec<f64> = rows[1..].iter().map(|r| r.layer_gap.unwrap()).collect();
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    let src: Vec<f64> = rows[1..].iter().map(|r| r.source_gap.unwrap()).collect();
    assert!(src.windows(2).all(|w| w[1] < w[0]), "{src:?}");

    let hs = [1.0, 0.5, 0.25, 0.125];
    let rows = swallow_diagnostics(&p, &hs, &[0.0], s, 256, 64).unwrap();
    let thin: Vec<f64> = rows.iter().map(|r| r.thin_gap).collect();
    assert!(thin.windows(2).all(|w| w[1] < w[0]), "{thin:?}");
    // least squares on all rows but the first
    let pts: Vec<(f64, f64)> = hs[1..]
        .iter()
        .zip(&thin[1..])
        .map(|(h, t)| (h.ln(), t.ln()))
        .collect();
    let n = pts.len() as f64;
    let (mx, my) = (
        pts.iter().map(|p| p.0).sum::<f64>() / n,
        pts.iter().map(|p| p.1).sum::<f64>() / n,
    );
    let slope = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
        / pts.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    assert!(slope >= 0.8 * s, "slope {slope}");
    assert_abs_diff_eq!(rows[1].thin_rate, (0.5 / PI).powf(s), epsilon = 1e-15);

    let rows = swallow_diagnostics(&p, &[0.5], &[0.2], 1.0, 32, 8).unwrap();
    assert!(rows[0].layer_gap.is_none() && rows[0].source_gap.is_none());
    assert!(swallow_diagnostics(&p, &[0.5], &[0.2], 0.0, 32, 8).is_err());
}

#[test]
fn nodal_layer_matches_a_fine_truncation() {
    let p = params(1.2, 0.8);
    let (h, eps, n1, n2) = (0.5, 0.4, 16, 4);
    let nodal = layer_at_nodes(&p, h, eps, n1, n2).unwrap();
    let fine = build_m_mu(&p, h, eps, 128, 4096).unwrap();
    let grid = Grid2D::new(n1, n2).unwrap();
    let (xs, ys) = (grid.x.nodes(), grid.y_nodes());
    let mut worst = 0.0_f64;
    for q in 0..n1 {
        for l in 0..n2 {
            worst = worst.max((nodal[[q, l]] - fine.eval(xs[q], ys[l]).unwrap()).abs());
        }
    }
    // the y-series of the fine field still has an O(1/N₂) tail
    assert!(worst < 2e-4, "{worst}");
}

#[test]
fn nodal_layer_of_the_point_source_by_direct_summation() {
    let p = params(1.0, 1.0);
    let (h, n1, n2) = (1.0, 8, 4);
    let nodal = layer_at_nodes(&p, h, 0.0, n1, n2).unwrap();
    let grid = Grid2D::new(n1, n2).unwrap();
    let (xs, ys) = (grid.x.nodes(), grid.y_nodes());
    for q in [0, 3, 4, 7] {
        let (x, y) = (xs[q], ys[0]);
        // Σ_i u_i(0) u_i(x) G_i(y) with the Neumann Green function in y
        let direct: f64 = (0..20000)
            .map(|i| {
                let a = 1.0 - lambda_line(i);
                let k = h * a.sqrt();
                u_basis(i, 0.0) * u_basis(i, x) * h * (k * (1.0 - y)).cosh()
                    / (a.sqrt() * k.sinh().max(1e-300))
            })
            .filter(|v| v.is_finite())
            .sum();
        assert_abs_diff_eq!(nodal[[q, 0]], direct, epsilon = 1e-10);
        assert!(nodal[[q, 0]] > 0.0);
    }
    assert!(layer_at_nodes(&p, 0.0, 0.0, 8, 4).is_err());
}

#[test]
fn dirac_tail_by_direct_summation() {
    const M: usize = 4_000_000;
    for (s, n) in [(0.5, 64), (0.5, 7), (0.5, 0), (0.5, 4096), (0.3, 4096)] {
        let direct: f64 = (n..M)
            .rev()
            .map(|i| (1.0 - lambda_line(i)).powf(-0.5 - 2.0 * s) * u_basis(i, 0.0).powi(2))
            .sum();
        // summed smallest first; what the oracle misses: even modes past M, bounded by ∫_{M/2-1}^∞ (πk)^{-1-4s} dk
        let k = (M / 2 - 1) as f64;
        let missing = PI.powf(-1.0 - 4.0 * s) * k.powf(-4.0 * s) / (4.0 * s);
        let tail = dirac_tail(s, n).unwrap();
        assert!(
            tail - direct >= -1e-12 * direct,
            "s={s} n={n}: {tail} vs {direct}"
        );
        assert!(
            tail - direct <= missing + 1e-12 * direct,
            "s={s} n={n}: {tail} vs {direct} + {missing}"
        );
    }
    assert!(dirac_tail(0.0, 8).is_err());
}

#[test]
fn corrected_defect_norm_is_insensitive_to_truncation() {
    let (eps, s) = (0.05, 0.125);
    let raw: Vec<f64> = [1024, 2048, 4096]
        .iter()
        .map(|&n| mollifier_defect_norm(eps, s, n).unwrap())
        .collect();
    let cor: Vec<f64> = [1024, 2048, 4096]
        .iter()
        .map(|&n| mollifier_defect_norm_corrected(eps, s, n).unwrap())
        .collect();
    // the plain truncation creeps up; the corrected value has settled
    assert!(raw.windows(2).all(|w| w[1] > w[0] * 1.005), "{raw:?}");
    assert!(
        cor.windows(2).all(|w| (w[1] - w[0]).abs() < 1e-6 * w[0]),
        "{cor:?}"
    );
    assert!(cor[2] > raw[2]);
    assert_eq!(mollifier_defect_norm_corrected(0.0, s, 64).unwrap(), 0.0);
}
