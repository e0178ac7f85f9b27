//! Pointwise reaction terms in the original and in the transformed variables.

use super::Params;

/// The five reaction terms `f(u)`.
pub fn reaction_f(u: &[f64; 5], p: &Params) -> [f64; 5] {
    let [u1, u2, u3, u4, u5] = *u;
    let (b, c) = (&p.b, &p.c);
    [
        -(c[0] + u3) * u1 + c[1] * u2 + c[3] * u4,
        c[0] * u1 - (b[1] + c[1] + c[2] * u3) * u2 + c[4] * u5,
        -(b[2] + u1 + c[2] * u2) * u3 + c[3] * u4 + c[4] * u5 + p.p[2],
        u1 * u3 - (b[3] + c[3]) * u4,
        c[2] * u2 * u3 - (b[4] + c[4]) * u5,
    ]
}

/// The transformed reaction terms `g(z)`; `m` is the boundary value of the
/// subtracted singular layer (`Tr m^μ` in 2D, `m⁰` in the limit system).
/// The `-m z₃` part of the third equation is carried by the linear flow and is not included.
pub fn reaction_g(z: &[f64; 5], m: f64, p: &Params) -> [f64; 5] {
    let [z1, z2, z3, z4, z5] = *z;
    let (b, c) = (&p.b, &p.c);
    let g5 = -b[2] * z3 - b[3] * (z4 - z3) - b[4] * (z5 - z4) + p.p[2];
    let g4 = -b[2] * z3 - b[3] * (z4 - z3) - c[2] * z2 * z3 + c[4] * (z5 - z4) + p.p[2];
    let g3 = -b[2] * z3 - z1 * z3 - c[2] * z2 * z3 + c[3] * (z4 - z3) + c[4] * (z5 - z4) + p.p[2];
    let g2 = -b[1] * z2 + c[0] * z1 - c[1] * z2 - c[2] * z2 * z3 + c[4] * (z5 - z4) + c[0] * m;
    let g1 = -c[0] * z1 + c[1] * z2 - z1 * z3 + c[3] * (z4 - z3) - (c[0] + z3) * m;
    [g1, g2, g3, g4, g5]
}

/// `M` applied to a point, the first entry already shifted by `m`.
pub fn apply_m(u: &[f64; 5]) -> [f64; 5] {
    [u[0], u[1], u[2], u[2] + u[3], u[2] + u[3] + u[4]]
}

pub fn apply_m_inverse(z: &[f64; 5]) -> [f64; 5] {
    [z[0], z[1], z[2], z[3] - z[2], z[4] - z[3]]
}
