use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use approx::assert_abs_diff_eq;
use morphlab::spectral::basis::{lambda_line, lambda_rect, u_at_zero, u_basis, v_basis};
use morphlab::spectral::ops::*;
use morphlab::spectral::{lp_norm, sup_norm};
use morphlab::*;
use ndarray::{Array1, Array2};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_2d(seed: u64, n1: usize, n2: usize) -> SpectralField2D {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SpectralField2D::from_array(Array2::from_shape_fn((n1, n2), |_| {
        rng.random_range(-1.0..1.0)
    }))
}

fn random_1d(seed: u64, n: usize) -> SpectralField1D {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SpectralField1D::from_vec((0..n).map(|_| rng.random_range(-1.0..1.0)).collect())
}

fn unit_2d(n1: usize, n2: usize, i: usize, j: usize) -> SpectralField2D {
    let mut f = SpectralField2D::zeros(n1, n2);
    f.coeffs[[i, j]] = 1.0;
    f
}

fn unit_1d(n: usize, i: usize) -> SpectralField1D {
    let mut f = SpectralField1D::zeros(n);
    f.coeffs[i] = 1.0;
    f
}

#[test]
fn eigenvalues() {
    assert_eq!(lambda_line(0), 0.0);
    assert_abs_diff_eq!(lambda_line(2), -PI * PI, epsilon = 1e-14);
    assert_abs_diff_eq!(lambda_rect(0, 1, 0.5), -4.0 * PI * PI, epsilon = 1e-12);
}

#[test]
fn basis_values() {
    for x in [-1.0, -0.3, 0.0, 0.7, 1.0] {
        assert_abs_diff_eq!(u_basis(0, x), FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_eq!(v_basis(0, x.abs()), 1.0);
    }
    assert_abs_diff_eq!(u_basis(1, 0.0) * v_basis(1, 0.0), 0.0, epsilon = 1e-15);
    for i in 0..40 {
        assert_abs_diff_eq!(u_at_zero(i), u_basis(i, 0.0), epsilon = 1e-14);
    }
}

#[test]
fn basis_is_orthonormal_under_midpoint_quadrature() {
    // midpoint rule on cosines is exact below the Nyquist index
    let n = 32;
    let xs: Vec<f64> = (0..n)
        .map(|k| -1.0 + (2 * k + 1) as f64 / n as f64)
        .collect();
    for i in 0..8 {
        for k in 0..8 {
            let ip: f64 = xs
                .iter()
                .map(|&x| u_basis(i, x) * u_basis(k, x))
                .sum::<f64>()
                * 2.0
                / n as f64;
            assert_abs_diff_eq!(ip, if i == k { 1.0 } else { 0.0 }, epsilon = 1e-13);
        }
    }
}

#[test]
fn cosine_transform_matches_direct_sums() {
    for n in [1, 2, 3, 8, 15, 64] {
        let t = CosineTransform::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let x: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let mut fwd = vec![0.0; n];
        t.forward(&x, &mut fwd);
        let mut inv = vec![0.0; n];
        t.inverse(&x, &mut inv);
        for k in 0..n {
            let direct: f64 = (0..n)
                .map(|m| x[m] * (PI * k as f64 * (2 * m + 1) as f64 / (2 * n) as f64).cos())
                .sum();
            assert_abs_diff_eq!(fwd[k], direct, epsilon = 1e-12);
            let direct_inv: f64 = (0..n)
                .map(|m| x[m] * (PI * m as f64 * (2 * k + 1) as f64 / (2 * n) as f64).cos())
                .sum();
            assert_abs_diff_eq!(inv[k], direct_inv, epsilon = 1e-12);
        }
    }
}

#[test]
fn constant_mode_round_trip() {
    let g = Grid1D::new(16).unwrap();
    let f = unit_1d(16, 0);
    let s = g.to_physical(&f).unwrap();
    for v in s.iter() {
        assert_abs_diff_eq!(*v, FRAC_1_SQRT_2, epsilon = 1e-15);
    }
    let back = g.to_spectral(&s, 16).unwrap();
    assert_abs_diff_eq!(back.coeffs[0], 1.0, epsilon = 1e-14);
    assert!(back.coeffs.iter().skip(1).all(|a| a.abs() < 1e-14));
}

#[test]
fn random_round_trips() {
    let g = Grid2D::new(16, 16).unwrap();
    let f = random_2d(3, 16, 16);
    let back = g.to_spectral(&g.to_physical(&f).unwrap(), 16, 16).unwrap();
    assert!(back.sub(&f).unwrap().coeffs.iter().all(|a| a.abs() < 1e-12));

    let g1 = Grid1D::new(16).unwrap();
    let f1 = random_1d(4, 16);
    let back1 = g1.to_spectral(&g1.to_physical(&f1).unwrap(), 16).unwrap();
    assert!(back1
        .sub(&f1)
        .unwrap()
        .coeffs
        .iter()
        .all(|a| a.abs() < 1e-12));
}

#[test]
fn sampled_single_mode_is_recovered() {
    let g = Grid2D::new(16, 16).unwrap();
    let (xs, ys) = (g.x.nodes(), g.y_nodes());
    let s = Array2::from_shape_fn((16, 16), |(k, l)| u_basis(2, xs[k]) * v_basis(3, ys[l]));
    let f = g.to_spectral(&s, 16, 16).unwrap();
    for ((i, j), a) in f.coeffs.indexed_iter() {
        let want = if (i, j) == (2, 3) { 1.0 } else { 0.0 };
        assert_abs_diff_eq!(*a, want, epsilon = 1e-12);
    }
}

#[test]
fn physical_samples_match_point_evaluation() {
    let f = random_2d(9, 12, 6);
    let g = Grid2D::new(20, 10).unwrap();
    let s = g.to_physical(&f).unwrap();
    let (xs, ys) = (g.x.nodes(), g.y_nodes());
    for k in [0, 7, 19] {
        for l in [0, 4, 9] {
            let direct: f64 = (0..12)
                .flat_map(|i| (0..6).map(move |j| (i, j)))
                .map(|(i, j)| f.coeffs[[i, j]] * u_basis(i, xs[k]) * v_basis(j, ys[l]))
                .sum();
            assert_abs_diff_eq!(s[[k, l]], direct, epsilon = 1e-12);
            assert_abs_diff_eq!(f.eval(xs[k], ys[l]).unwrap(), direct, epsilon = 1e-12);
        }
    }
    assert!(f.eval(1.5, 0.5).is_err());
    assert!(f.eval(0.0, -0.1).is_err());
}

#[test]
fn grid_rejects_too_many_modes() {
    let g = Grid1D::new(8).unwrap();
    assert!(g.to_physical(&random_1d(1, 9)).is_err());
    assert!(Grid1D::new(0).is_err());
}

#[test]
fn sobolev_norms() {
    let half = SobolevIndex::new(0.5).unwrap();
    for i in 0..10 {
        assert_abs_diff_eq!(
            unit_1d(10, i).xs_norm(SobolevIndex::new(0.0).unwrap()),
            1.0,
            epsilon = 1e-15
        );
    }
    assert_abs_diff_eq!(
        unit_1d(4, 2).xs_norm(half),
        (1.0 + PI * PI).sqrt(),
        epsilon = 1e-12
    );
    assert_abs_diff_eq!((1.0 + PI * PI).sqrt(), 3.2969, epsilon = 1e-4);
    let s = SobolevIndex::new(0.25).unwrap();
    let direct = (1.0 + (PI / 2.0).powi(2) + PI * PI).powf(0.25);
    assert_abs_diff_eq!(unit_2d(3, 3, 1, 1).xs_norm(s), direct, epsilon = 1e-12);
    assert!(SobolevIndex::new(2.0).is_err());
    assert!(SobolevIndex::new(-1.5).is_err());
}

#[test]
fn x2_norm_uses_isotropic_weights() {
    let f = random_2d(5, 6, 4);
    let s = SobolevIndex::new(0.75).unwrap();
    let direct: f64 = f
        .coeffs
        .indexed_iter()
        .map(|((i, j), a)| {
            (1.0 + (i as f64 * PI / 2.0).powi(2) + (j as f64 * PI).powi(2)).powf(1.5) * a * a
        })
        .sum::<f64>()
        .sqrt();
    assert_abs_diff_eq!(f.xs_norm(s), direct, epsilon = 1e-10 * direct);
}

#[test]
fn extension_average_and_trace_on_single_modes() {
    let (n1, n2) = (5, 4);
    for i in 0..n1 {
        for j in 0..n2 {
            let w = unit_2d(n1, n2, i, j);
            let p = average(&w);
            let tr = trace(&w);
            for k in 0..n1 {
                let want_p = if k == i && j == 0 { 1.0 } else { 0.0 };
                assert_eq!(p.coeffs[k], want_p);
                let want_tr = if k == i {
                    if j == 0 {
                        1.0
                    } else {
                        SQRT_2
                    }
                } else {
                    0.0
                };
                assert_abs_diff_eq!(tr.coeffs[k], want_tr, epsilon = 1e-15);
            }
        }
        let e = extend(&unit_1d(n1, i), n2);
        assert_eq!(e, unit_2d(n1, n2, i, 0));
    }
}

#[test]
fn trace_agrees_with_point_values() {
    let f = random_2d(12, 10, 7);
    let tr = trace(&f);
    for x in [-0.9, -0.2, 0.3, 0.95] {
        assert_abs_diff_eq!(
            tr.eval(x).unwrap(),
            f.eval(x, 0.0).unwrap(),
            epsilon = 1e-12
        );
    }
}

#[test]
fn trace_adjoint_pairing() {
    let g = random_1d(1, 12);
    let w = random_2d(2, 12, 9);
    let lhs: f64 = trace_adjoint(&g, 9)
        .coeffs
        .iter()
        .zip(w.coeffs.iter())
        .map(|(a, b)| a * b)
        .sum();
    // ⟨g, Tr w⟩ by quadrature of physical values on the boundary
    let n = 64;
    let rhs: f64 = (0..n)
        .map(|k| {
            let x = -1.0 + (2 * k + 1) as f64 / n as f64;
            g.eval(x).unwrap() * w.eval(x, 0.0).unwrap()
        })
        .sum::<f64>()
        * 2.0
        / n as f64;
    assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12);
}

#[test]
fn mean_layer_removal() {
    let w = random_2d(8, 6, 5);
    let r = remove_mean_layer(&w);
    assert!(r.coeffs.column(0).iter().all(|a| *a == 0.0));
    for j in 1..5 {
        assert_eq!(r.coeffs.column(j), w.coeffs.column(j));
    }
    assert_eq!(remove_mean_layer(&r), r);
}

#[test]
fn resolvents() {
    let u0 = unit_1d(4, 0);
    assert_eq!(resolvent_1d(1.0, &u0).unwrap(), u0);
    let w = unit_2d(3, 3, 1, 2);
    let r = resolvent_2d(2.0, &w, 0.5).unwrap();
    let want = 1.0 / (2.0 + (PI / 2.0).powi(2) + (2.0 * PI / 0.5).powi(2));
    assert_abs_diff_eq!(r.coeffs[[1, 2]], want, epsilon = 1e-15);
    assert!(resolvent_2d(0.0, &w, 0.5).is_err());
    assert!(resolvent_2d(1.0, &w, 0.0).is_err());
    assert!(resolvent_2d(1.0, &w, 1.5).is_err());
}

#[test]
fn semigroups() {
    let f = random_2d(4, 8, 6);
    assert_eq!(semigroup_2d(0.0, &f, 0.3, 1.0, 0.0).unwrap(), f);
    let u2 = unit_1d(3, 2);
    let e = semigroup_1d(1.0, &u2, 1.0, 0.0).unwrap();
    assert_abs_diff_eq!(e.coeffs[2], (-PI * PI).exp(), epsilon = 1e-18);
    assert_abs_diff_eq!(e.coeffs[2], 5.17e-5, epsilon = 1e-7);
    assert!(semigroup_1d(-1.0, &u2, 1.0, 0.0).is_err());
}

#[test]
fn multiplication_semigroup() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let u = Array1::from_shape_fn(20, |_| rng.random_range(-1.0..1.0));
    let f = Array1::from_shape_fn(20, |_| -rng.random_range(0.0..3.0));
    assert_eq!(mult_semigroup(0.0, &f, &u).unwrap(), u);
    let half = mult_semigroup(2f64.ln(), &Array1::from_elem(20, -1.0), &u).unwrap();
    for k in 0..20 {
        assert_abs_diff_eq!(half[k], u[k] / 2.0, epsilon = 1e-15);
    }
    let (t, t2) = (0.3, 0.8);
    let diff = &mult_semigroup(t2, &f, &u).unwrap() - &mult_semigroup(t, &f, &u).unwrap();
    for p in [1.0, 2.0, 4.0] {
        assert!(lp_norm(&diff, p) <= (t2 - t) * lp_norm(&f, p) * sup_norm(&u) + 1e-14);
    }
    assert!(mult_semigroup(1.0, &Array1::from_elem(20, 0.1), &u).is_err());
}

#[test]
fn lp_norms_of_constants() {
    let c = Array1::from_elem(16, 3.0);
    for p in [1.0, 2.0, 3.5] {
        // |I| = 2
        assert_abs_diff_eq!(lp_norm(&c, p), 3.0 * 2f64.powf(1.0 / p), epsilon = 1e-12);
    }
    assert_eq!(sup_norm(&Array1::from(vec![1.0, -4.0, 2.0])), 4.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn commutation_identities(seed in any::<u64>(), lam in 0.1f64..10.0, h in 0.05f64..1.0, t in 0.0f64..2.0) {
        let u = random_1d(seed, 16);
        let e = extend(&u, 8);
        prop_assert_eq!(&average(&e), &u);
        let tr = trace(&e);
        for k in 0..16 {
            prop_assert!((tr.coeffs[k] - u.coeffs[k]).abs() < 1e-15);
        }
        let a = resolvent_2d(lam, &e, h).unwrap();
        let b = extend(&resolvent_1d(lam, &u).unwrap(), 8);
        prop_assert!(a.sub(&b).unwrap().coeffs.iter().all(|v| v.abs() < 1e-14));
        let a = semigroup_2d(t, &e, h, 1.0, 0.0).unwrap();
        let b = extend(&semigroup_1d(t, &u, 1.0, 0.0).unwrap(), 8);
        prop_assert!(a.sub(&b).unwrap().coeffs.iter().all(|v| v.abs() < 1e-14));
        let p_adj = trace_adjoint(&u, 8);
        prop_assert_eq!(&average(&p_adj), &u);
    }
}
