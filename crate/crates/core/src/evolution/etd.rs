//! Exponential integrators for `y' = L y + N(y)` with diagonal `L`.

use crate::error::Result;

/// `φ₁(x) = (eˣ - 1)/x`.
pub fn phi1(x: f64) -> f64 {
    if x.abs() < 1e-5 {
        1.0 + x / 2.0 + x * x / 6.0
    } else {
        x.exp_m1() / x
    }
}

/// `φ₂(x) = (eˣ - 1 - x)/x²`.
pub fn phi2(x: f64) -> f64 {
    if x.abs() < 1e-2 {
        1.0 / 2.0 + x / 6.0 + x * x / 24.0 + x * x * x / 120.0 + x * x * x * x / 720.0
    } else {
        (x.exp_m1() - x) / (x * x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Scheme {
    #[default]
    Etd1,
    EtdRk2,
}

impl std::str::FromStr for Scheme {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "etd1" => Ok(Self::Etd1),
            "etd-rk2" | "etdrk2" | "etd2" => Ok(Self::EtdRk2),
            other => Err(format!(
                "unknown scheme `{other}` (expected etd1 or etd-rk2)"
            )),
        }
    }
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Etd1 => "etd1",
            Self::EtdRk2 => "etd-rk2",
        })
    }
}

pub(crate) struct Stepper {
    scheme: Scheme,
    expo: Vec<f64>,
    w1: Vec<f64>,
    w2: Vec<f64>,
}

impl Stepper {
    pub fn new(lin: &[f64], dt: f64, scheme: Scheme) -> Self {
        Self {
            scheme,
            expo: lin.iter().map(|l| (l * dt).exp()).collect(),
            w1: lin.iter().map(|l| dt * phi1(l * dt)).collect(),
            w2: lin.iter().map(|l| dt * phi2(l * dt)).collect(),
        }
    }

    pub fn step<F>(&self, y: &mut [f64], rhs: &mut F) -> Result<()>
    where
        F: FnMut(&[f64], &mut [f64]) -> Result<()>,
    {
        let n = y.len();
        let mut n0 = vec![0.0; n];
        rhs(y, &mut n0)?;
        let pred: Vec<f64> = (0..n)
            .map(|k| self.expo[k] * y[k] + self.w1[k] * n0[k])
            .collect();
        match self.scheme {
            Scheme::Etd1 => y.copy_from_slice(&pred),
            Scheme::EtdRk2 => {
                let mut n1 = vec![0.0; n];
                rhs(&pred, &mut n1)?;
                for k in 0..n {
                    y[k] = pred[k] + self.w2[k] * (n1[k] - n0[k]);
                }
            }
        }
        Ok(())
    }
}
