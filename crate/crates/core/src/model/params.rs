use crate::error::{check_param, Result};

/// Nondimensional model coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    /// Diffusion coefficient of the membrane receptor.
    pub d: f64,
    pub b: [f64; 5],
    pub c: [f64; 5],
    /// Source strengths; only `p[0]` and `p[2]` may be nonzero.
    pub p: [f64; 5],
}

impl Default for Params {
    fn default() -> Self {
        Self {
            d: 1.0,
            b: [1.0; 5],
            c: [1.0; 5],
            p: [1.0, 0.0, 1.0, 0.0, 0.0],
        }
    }
}

impl Params {
    pub fn validate(&self) -> Result<()> {
        self.check(true)
    }

    /// As [`Params::validate`] but allowing vanishing degradation rates, which the
    /// regular-source system tolerates.
    pub fn validate_relaxed(&self) -> Result<()> {
        self.check(false)
    }

    fn check(&self, strict: bool) -> Result<()> {
        check_param("d", self.d, self.d > 0.0, "must be positive")?;
        const B: [&str; 5] = ["b1", "b2", "b3", "b4", "b5"];
        const C: [&str; 5] = ["c1", "c2", "c3", "c4", "c5"];
        for k in 0..5 {
            if strict {
                check_param(B[k], self.b[k], self.b[k] > 0.0, "must be positive")?;
            } else {
                check_param(B[k], self.b[k], self.b[k] >= 0.0, "must be nonnegative")?;
            }
            check_param(C[k], self.c[k], self.c[k] >= 0.0, "must be nonnegative")?;
        }
        check_param("p1", self.p[0], self.p[0] >= 0.0, "must be nonnegative")?;
        check_param("p3", self.p[2], self.p[2] >= 0.0, "must be nonnegative")?;
        for (k, name) in [(1, "p2"), (3, "p4"), (4, "p5")] {
            check_param(
                name,
                self.p[k],
                self.p[k] == 0.0,
                "only p1 and p3 may be nonzero",
            )?;
        }
        Ok(())
    }

    /// Bound on `u3 + u4 + u5` for nonnegative solutions of the boundary system.
    pub fn ode_sum_bound(&self, initial_sum_sup: f64) -> f64 {
        let bmin = self.b[2].min(self.b[3]).min(self.b[4]);
        if self.p[2] == 0.0 {
            initial_sum_sup
        } else {
            initial_sum_sup.max(self.p[2] / bmin)
        }
    }
}

/// Dimensional coefficients of the cell-scale model.
#[derive(Clone, Debug, PartialEq)]
pub struct PhysicalParams {
    pub diff: f64,
    pub diff_star: f64,
    pub gamma: f64,
    pub gamma_star: f64,
    pub k: f64,
    pub k_prime: f64,
    pub k_r: f64,
    pub k_r_prime: f64,
    pub k_rg: f64,
    pub k_rg_prime: f64,
    pub alpha: f64,
    pub alpha_star: f64,
    /// Secretion rate `s` of the point source.
    pub secretion: f64,
    /// Receptor production `Γ`.
    pub big_gamma: f64,
    /// Glypican level `G`.
    pub glypican: f64,
    pub l: f64,
    pub depth: f64,
    pub eps: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Nondimensional {
    pub params: Params,
    pub h: f64,
    /// False when `h` falls outside `(0, 1]`.
    pub h_in_range: bool,
}

impl PhysicalParams {
    pub fn nondimensionalize(&self) -> Result<Nondimensional> {
        let named = [
            ("D", self.diff),
            ("D*", self.diff_star),
            ("gamma", self.gamma),
            ("gamma*", self.gamma_star),
            ("k", self.k),
            ("k'", self.k_prime),
            ("k_R", self.k_r),
            ("k_R'", self.k_r_prime),
            ("k_Rg", self.k_rg),
            ("k_Rg'", self.k_rg_prime),
            ("alpha", self.alpha),
            ("alpha*", self.alpha_star),
            ("s", self.secretion),
            ("Gamma", self.big_gamma),
            ("G", self.glypican),
            ("L", self.l),
            ("H", self.depth),
            ("eps", self.eps),
        ];
        for (name, v) in named {
            check_param(name, v, v > 0.0, "must be positive")?;
        }
        check_param("eps", self.eps, self.eps <= 1.0, "must lie in (0, 1]")?;
        let t = self.l * self.l / self.diff;
        let k2 = self.k_r * t / self.depth;
        let h = self.eps * self.depth / self.l;
        let params = Params {
            d: self.diff_star / self.diff,
            b: [
                t * self.gamma,
                t * self.gamma_star,
                t * self.alpha,
                t * self.alpha_star,
                t * self.alpha_star,
            ],
            c: [
                t * self.k * self.glypican / self.depth,
                t * self.k_prime,
                self.depth * self.k_rg / self.k_r,
                t * self.k_r_prime,
                t * self.k_rg_prime,
            ],
            p: [
                k2 * t * self.secretion,
                0.0,
                k2 * t * self.big_gamma,
                0.0,
                0.0,
            ],
        };
        Ok(Nondimensional {
            params,
            h,
            h_in_range: h > 0.0 && h <= 1.0,
        })
    }
}
