use std::f64::consts::FRAC_1_SQRT_2;

use approx::assert_abs_diff_eq;
use morphlab::model::*;
use morphlab::quadrature::integrate;
use morphlab::*;
use ndarray::{Array1, Array2};
use proptest::prelude::*;

fn physical() -> PhysicalParams {
    PhysicalParams {
        diff: 1.0,
        diff_star: 1.0,
        gamma: 0.01,
        gamma_star: 0.02,
        k: 0.03,
        k_prime: 0.04,
        k_r: 0.05,
        k_r_prime: 0.06,
        k_rg: 0.07,
        k_rg_prime: 0.08,
        alpha: 0.09,
        alpha_star: 0.1,
        secretion: 0.2,
        big_gamma: 0.3,
        glypican: 2.0,
        l: 10.0,
        depth: 10.0,
        eps: 1.0,
    }
}

#[test]
fn nondimensional_groups() {
    let nd = physical().nondimensionalize().unwrap();
    assert_eq!(nd.params.d, 1.0);
    assert_abs_diff_eq!(nd.params.b[0], 1.0, epsilon = 1e-12);
    assert_eq!(nd.h, 1.0);
    assert!(nd.h_in_range);
    assert_eq!(nd.params.p[1], 0.0);

    let mut pp = physical();
    pp.diff_star = 3.0;
    pp.eps = 0.25;
    let nd = pp.nondimensionalize().unwrap();
    assert_abs_diff_eq!(nd.params.d, 3.0, epsilon = 1e-15);
    assert_abs_diff_eq!(nd.h, 0.25, epsilon = 1e-15);

    pp.depth = 100.0;
    pp.eps = 1.0;
    assert!(!pp.nondimensionalize().unwrap().h_in_range);

    pp.gamma = -1.0;
    assert!(pp.nondimensionalize().is_err());
}

#[test]
fn parameter_validation() {
    assert!(Params::default().validate().is_ok());
    let mut p = Params::default();
    p.b[2] = 0.0;
    assert!(p.validate().is_err());
    assert!(p.validate_relaxed().is_ok());
    p.c[1] = -0.1;
    assert!(p.validate_relaxed().is_err());
    let mut p = Params::default();
    p.p[1] = 1.0;
    assert!(p.validate().is_err());
    let mut p = Params::default();
    p.d = 0.0;
    assert!(p.validate().is_err());
}

#[test]
fn ode_bound() {
    let mut p = Params::default();
    p.b = [1.0, 1.0, 2.0, 4.0, 0.5];
    p.p[2] = 3.0;
    assert_eq!(p.ode_sum_bound(1.0), 6.0);
    assert_eq!(p.ode_sum_bound(7.0), 7.0);
    p.p[2] = 0.0;
    assert_eq!(p.ode_sum_bound(1.0), 1.0);
}

#[test]
fn reaction_examples() {
    let p = Params::default();
    assert_eq!(reaction_f(&[0.0; 5], &p), [0.0, 0.0, 1.0, 0.0, 0.0]);

    let mut q = p.clone();
    q.b[3] = 0.0;
    q.c[3] = 0.0;
    assert_eq!(reaction_f(&[1.0, 0.0, 1.0, 0.0, 0.0], &q)[3], 1.0);

    assert_eq!(reaction_f(&[1.0; 5], &p)[2], 0.0);
    assert_eq!(reaction_g(&[0.0; 5], 0.0, &p), [0.0, 0.0, 1.0, 1.0, 1.0]);
}

#[test]
fn m_transform() {
    assert_eq!(
        apply_m(&[0.0, 0.0, 1.0, 1.0, 1.0]),
        [0.0, 0.0, 1.0, 2.0, 3.0]
    );
    let u = [0.3, -1.0, 2.0, 0.5, 7.0];
    assert_eq!(apply_m_inverse(&apply_m(&u)), u);
}

fn hand_f(u: &[f64; 5], p: &Params) -> [f64; 5] {
    // written out term by term
    let (b2, b3, b4, b5) = (p.b[1], p.b[2], p.b[3], p.b[4]);
    let (c1, c2, c3, c4, c5) = (p.c[0], p.c[1], p.c[2], p.c[3], p.c[4]);
    let (u1, u2, u3, u4, u5) = (u[0], u[1], u[2], u[3], u[4]);
    [
        -c1 * u1 - u1 * u3 + c2 * u2 + c4 * u4,
        c1 * u1 - b2 * u2 - c2 * u2 - c3 * u2 * u3 + c5 * u5,
        -b3 * u3 - u1 * u3 - c3 * u2 * u3 + c4 * u4 + c5 * u5 + p.p[2],
        u1 * u3 - b4 * u4 - c4 * u4,
        c3 * u2 * u3 - b5 * u5 - c5 * u5,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn f_matches_hand_expansion(u in prop::array::uniform5(-3.0f64..3.0), b in prop::array::uniform5(0.1f64..3.0), c in prop::array::uniform5(0.0f64..3.0), p3 in 0.0f64..2.0) {
        let p = Params { d: 1.0, b, c, p: [0.5, 0.0, p3, 0.0, 0.0] };
        let a = reaction_f(&u, &p);
        let h = hand_f(&u, &p);
        for k in 0..5 {
            prop_assert!((a[k] - h[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn g_is_f_under_m(u in prop::array::uniform5(-3.0f64..3.0), m in -2.0f64..2.0, b in prop::array::uniform5(0.1f64..3.0), c in prop::array::uniform5(0.0f64..3.0)) {
        let p = Params { d: 1.0, b, c, p: [0.5, 0.0, 0.7, 0.0, 0.0] };
        let f = hand_f(&u, &p);
        let mut z = apply_m(&u);
        z[0] = u[0] - m;
        let g = reaction_g(&z, m, &p);
        // the -m z3 part of the third equation lives in the linear flow; it cancels in the others
        let g3 = g[2] - m * z[2];
        let (g4, g5) = (g[3], g[4]);
        let tol = 1e-11;
        prop_assert!((g[0] - f[0]).abs() < tol);
        prop_assert!((g[1] - f[1]).abs() < tol);
        prop_assert!((g3 - f[2]).abs() < tol);
        prop_assert!((g4 - (f[2] + f[3])).abs() < tol);
        prop_assert!((g5 - (f[2] + f[3] + f[4])).abs() < tol);
    }

    #[test]
    fn g1_is_affine_in_m(z in prop::array::uniform5(-3.0f64..3.0), m in -2.0f64..2.0) {
        let p = Params::default();
        let d = reaction_g(&z, m, &p)[0] - reaction_g(&z, 0.0, &p)[0];
        prop_assert!((d + (p.c[0] + z[2]) * m).abs() < 1e-12);
    }
}

fn small_state(seed: f64) -> UState {
    UState {
        u1: SpectralField2D::from_array(Array2::from_shape_fn((4, 3), |(i, j)| {
            seed + (i * 3 + j) as f64
        })),
        u2: SpectralField1D::from_vec(vec![seed, 2.0, 3.0, 4.0]),
        u3: Array1::from(vec![1.0, 1.0, seed]),
        u4: Array1::from(vec![1.0, 0.5, 2.0]),
        u5: Array1::from(vec![1.0, -0.5, 0.25]),
    }
}

#[test]
fn state_change_of_variables() {
    let u = small_state(0.3);
    let zero = SpectralField2D::zeros(4, 3);
    let z = u.to_z(&zero).unwrap();
    assert_eq!(z.z1, u.u1);
    assert_eq!((z.z3[0], z.z4[0], z.z5[0]), (1.0, 2.0, 3.0));

    let m = SpectralField2D::from_array(Array2::from_elem((4, 3), 0.125));
    let back = u.to_z(&m).unwrap().from_z(&m).unwrap();
    assert_eq!(back.u1, u.u1);
    assert_eq!(back.u2, u.u2);
    assert_eq!(back.u3, u.u3);
    // (a + b) - a recovers b up to one rounding
    for (x, y) in back
        .u4
        .iter()
        .chain(back.u5.iter())
        .zip(u.u4.iter().chain(u.u5.iter()))
    {
        assert_abs_diff_eq!(x, y, epsilon = 1e-15);
    }

    let bad = SpectralField2D::zeros(5, 3);
    assert!(u.to_z(&bad).is_err());
}

#[test]
fn zero_state_shapes() {
    let u = UState::zeros(8, 4, 12);
    assert_eq!(u.u1.shape(), (8, 4));
    assert_eq!(u.u2.n_modes(), 8);
    assert_eq!(u.n_nodes(), 12);
}

#[test]
fn mollifier_has_unit_mass_and_compact_support() {
    let eta = Mollifier::new(0.1).unwrap();
    let mass = integrate(|x| eta.eval(x).unwrap(), -1.0, 1.0, 1e-14, 1e-13);
    assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-10);
    assert_eq!(eta.eval(0.101).unwrap(), 0.0);
    assert_eq!(eta.eval(-0.101).unwrap(), 0.0);
    assert!(eta.eval(0.0).unwrap() > 0.0);
    assert!(Mollifier::new(0.0).unwrap().eval(0.0).is_err());
    assert!(Mollifier::new(1.5).is_err());
    assert!(Mollifier::new(-0.1).is_err());
}

#[test]
fn dirac_coefficients() {
    let g = Mollifier::new(0.0).unwrap().coefficients(6);
    assert_abs_diff_eq!(g.coeffs[0], FRAC_1_SQRT_2, epsilon = 1e-15);
    assert_eq!(g.coeffs[1], 0.0);
    assert_eq!(g.coeffs[2], -1.0);
}

#[test]
fn mollifier_coefficients_match_direct_quadrature() {
    use morphlab::spectral::basis::u_basis;
    for eps in [0.05, 0.3, 1.0] {
        let eta = Mollifier::new(eps).unwrap();
        let g = eta.coefficients(40);
        for i in [0usize, 1, 2, 6, 17, 38] {
            let direct = integrate(
                |x| eta.eval(x).unwrap() * u_basis(i, x),
                -eps,
                eps,
                1e-14,
                1e-12,
            );
            assert_abs_diff_eq!(g.coeffs[i], direct, epsilon = 1e-10);
        }
    }
}

#[test]
fn mollifier_coefficients_tend_to_point_values() {
    let g = Mollifier::new(1e-3).unwrap().coefficients(8);
    let d = Mollifier::new(0.0).unwrap().coefficients(8);
    for i in 0..8 {
        assert_abs_diff_eq!(g.coeffs[i], d.coeffs[i], epsilon = 1e-4);
    }
}
