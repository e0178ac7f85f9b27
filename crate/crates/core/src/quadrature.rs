//! Adaptive Gauss–Kronrod (7/15) quadrature.

#![allow(clippy::excessive_precision)]

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let hw = 0.5 * (b - a);
    let fc = f(c);
    let mut rk = WGK[7] * fc;
    let mut rg = WG[3] * fc;
    for k in 0..7 {
        let dx = hw * XGK[k];
        let s = f(c - dx) + f(c + dx);
        rk += WGK[k] * s;
        if k % 2 == 1 {
            rg += WG[k / 2] * s;
        }
    }
    (rk * hw, ((rk - rg) * hw).abs())
}

#[derive(PartialEq)]
struct Piece {
    lo: f64,
    hi: f64,
    val: f64,
    err: f64,
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Piece {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Integrates `f` over `[a, b]` to within `max(abs_tol, rel_tol·|I|)`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> f64 {
    integrate_panels(f, a, b, 1, abs_tol, rel_tol)
}

/// As [`integrate`], starting from `panels` equal subintervals (useful for oscillatory integrands).
pub fn integrate_panels<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    panels: usize,
    abs_tol: f64,
    rel_tol: f64,
) -> f64 {
    if a == b {
        return 0.0;
    }
    let panels = panels.max(1);
    let mut heap = std::collections::BinaryHeap::with_capacity(2 * panels);
    let (mut total, mut total_err) = (0.0, 0.0);
    for k in 0..panels {
        let lo = a + (b - a) * k as f64 / panels as f64;
        let hi = a + (b - a) * (k + 1) as f64 / panels as f64;
        let (val, err) = kronrod(&f, lo, hi);
        total += val;
        total_err += err;
        heap.push(Piece { lo, hi, val, err });
    }
    let mut iter = 0;
    while total_err > abs_tol.max(rel_tol * total.abs()) && iter < 20_000 {
        iter += 1;
        let p = heap.pop().expect("nonempty");
        let mid = 0.5 * (p.lo + p.hi);
        let (v1, e1) = kronrod(&f, p.lo, mid);
        let (v2, e2) = kronrod(&f, mid, p.hi);
        total += v1 + v2 - p.val;
        total_err += e1 + e2 - p.err;
        heap.push(Piece {
            lo: p.lo,
            hi: mid,
            val: v1,
            err: e1,
        });
        heap.push(Piece {
            lo: mid,
            hi: p.hi,
            val: v2,
            err: e2,
        });
    }
    heap.iter().map(|p| p.val).sum()
}
