//! Flat `key = value` run configuration.
//!
//! | key | default | meaning |
//! |---|---|---|
//! | `d` | 1 | receptor diffusion coefficient |
//! | `b1`..`b5` | 1 | degradation rates |
//! | `c1`..`c5` | 1 | reaction rates |
//! | `p1` | 1 | strength of the membrane source |
//! | `p3` | 1 | receptor production |
//! | `h` | 1 | thickness ratio, in (0, 1] |
//! | `epsilon` | 0 | mollifier width, 0 for the point source |
//! | `n1`, `n2` | 64, 16 | modes along and across the layer |
//! | `dt`, `T` | 0.001, 0.5 | time step and horizon |
//! | `scheme` | etd1 | `etd1` or `etd-rk2` |
//! | `dealias` | true | 3/2-rule padding for boundary products |
//! | `theta` | 0.03125 | weight exponent of the time-weighted norm |
//! | `p_exp` | 4 | Lebesgue exponent of the boundary norms |
//! | `seed` | 0 | seed for random data and the randomised suites |
//! | `out_dir` | `out` | output directory; `MORPHLAB_OUT` overrides it |
//!
//! Blank lines and lines starting with `#` are ignored.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use morphlab::{Params, Scheme, SolverConfig};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

pub const OUT_ENV: &str = "MORPHLAB_OUT";

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub params: Params,
    pub h: f64,
    pub epsilon: f64,
    pub solver: SolverConfig,
    pub seed: u64,
    pub out_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            params: Params::default(),
            h: 1.0,
            epsilon: 0.0,
            solver: SolverConfig::default(),
            seed: 0,
            out_dir: PathBuf::from("out"),
        }
    }
}

const KEYS: [&str; 24] = [
    "d", "b1", "b2", "b3", "b4", "b5", "c1", "c2", "c3", "c4", "c5", "p1", "p3", "h", "epsilon",
    "n1", "n2", "dt", "T", "scheme", "dealias", "theta", "p_exp", "seed",
];

fn decimal(v: &str) -> Result<f64, String> {
    match v.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(format!("`{v}` is not a finite decimal number")),
    }
}

fn count<T: std::str::FromStr>(v: &str) -> Result<T, String> {
    v.parse::<T>()
        .map_err(|_| format!("`{v}` is not a nonnegative integer"))
}

/// Shortest decimal text that reads back to the same double.
fn num(x: f64) -> String {
    format!("{x:?}")
}

impl RunConfig {
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut cfg = Self::default();
        let mut seen = HashSet::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let (key, value) = s.split_once('=').ok_or_else(|| {
                CliError::at_line(line, format!("expected key = value, found `{s}`"))
            })?;
            let (key, value) = (key.trim(), value.trim());
            if !seen.insert(key.to_string()) {
                return Err(CliError::at_line(line, format!("duplicate key `{key}`")));
            }
            cfg.set(key, value)
                .map_err(|m| CliError::at_line(line, m))?;
        }
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn set(&mut self, key: &str, v: &str) -> Result<(), String> {
        let p = &mut self.params;
        let s = &mut self.solver;
        match key {
            "d" => p.d = decimal(v)?,
            "b1" | "b2" | "b3" | "b4" | "b5" => p.b[index(key)] = decimal(v)?,
            "c1" | "c2" | "c3" | "c4" | "c5" => p.c[index(key)] = decimal(v)?,
            "p1" => p.p[0] = decimal(v)?,
            "p3" => p.p[2] = decimal(v)?,
            "h" => self.h = decimal(v)?,
            "epsilon" => self.epsilon = decimal(v)?,
            "n1" => s.n1 = count(v)?,
            "n2" => s.n2 = count(v)?,
            "dt" => s.dt = decimal(v)?,
            "T" => s.t_end = decimal(v)?,
            "scheme" => s.scheme = v.parse::<Scheme>()?,
            "dealias" => {
                s.dealias = v
                    .parse::<bool>()
                    .map_err(|_| format!("`{v}` is not true or false"))?
            }
            "theta" => s.theta = decimal(v)?,
            "p_exp" => s.p_exp = decimal(v)?,
            "seed" => self.seed = count(v)?,
            "out_dir" => {
                if v.is_empty() {
                    return Err("out_dir is empty".into());
                }
                self.out_dir = PathBuf::from(v);
            }
            other => return Err(format!("unknown key `{other}`")),
        }
        Ok(())
    }

    /// Checks the values against the solvers' preconditions.
    pub fn validate(&self) -> CliResult<()> {
        let bad = |e: morphlab::Error| CliError::config(e.to_string());
        self.params.validate_relaxed().map_err(bad)?;
        self.solver.validate().map_err(bad)?;
        if !(self.h > 0.0 && self.h <= 1.0) {
            return Err(CliError::config(format!(
                "h must lie in (0, 1], got {}",
                self.h
            )));
        }
        if !(0.0..=1.0).contains(&self.epsilon) {
            return Err(CliError::config(format!(
                "epsilon must lie in [0, 1], got {}",
                self.epsilon
            )));
        }
        Ok(())
    }

    /// Every key but `out_dir`, in a fixed order, one `key=value` per line.
    pub fn canonical(&self) -> String {
        let p = &self.params;
        let s = &self.solver;
        let vals = [
            num(p.d),
            num(p.b[0]),
            num(p.b[1]),
            num(p.b[2]),
            num(p.b[3]),
            num(p.b[4]),
            num(p.c[0]),
            num(p.c[1]),
            num(p.c[2]),
            num(p.c[3]),
            num(p.c[4]),
            num(p.p[0]),
            num(p.p[2]),
            num(self.h),
            num(self.epsilon),
            s.n1.to_string(),
            s.n2.to_string(),
            num(s.dt),
            num(s.t_end),
            s.scheme.to_string(),
            s.dealias.to_string(),
            num(s.theta),
            num(s.p_exp),
            self.seed.to_string(),
        ];
        KEYS.iter()
            .zip(vals)
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }

    /// SHA-256 of [`RunConfig::canonical`], hex encoded.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.canonical().as_bytes()))
    }

    /// `out_dir`, unless `MORPHLAB_OUT` is set.
    pub fn output_dir(&self) -> PathBuf {
        match std::env::var_os(OUT_ENV) {
            Some(v) if !v.is_empty() => PathBuf::from(v),
            _ => self.out_dir.clone(),
        }
    }
}

fn index(key: &str) -> usize {
    (key.as_bytes()[1] - b'1') as usize
}
