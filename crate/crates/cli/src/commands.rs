use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use morphlab::evolution::{initial, Frame};
use morphlab::singular::{build_m_mu, build_m_zero, swallow_diagnostics};
use morphlab::verification::gronwall::{check_gronwall, default_tuples};
use morphlab::verification::identities::check_spectral_identities;
use morphlab::verification::inequalities::{check_elementary_inequalities, default_grid};
use morphlab::verification::iron::{check_iron_estimates, IronSpec};
use morphlab::verification::studies::{
    dimension_reduction_study, epsilon_limit_study, mollifier_convergence_study,
};
use morphlab::verification::trace_check::check_trace_inequality;
use morphlab::verification::{Check, Report};
use morphlab::{evolve_2d, evolve_limit, evolve_regular, Diagnostics, UState};
use ndarray::{Array1, Array2};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{
    fmt17, write_report, write_rows, write_table, write_trajectory, Meta, Snapshot,
};

#[derive(Debug, Parser)]
#[command(
    name = "morphlab",
    version,
    about = "Thin-layer morphogen solvers and property checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Run configuration (`key = value` lines); defaults are used when omitted.
    #[arg(long, short)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the layers m^μ and m⁰ and tabulate their differences across h and ε.
    Steady(Common),
    /// Run one solver and write the diagnostics trajectory and final snapshots.
    Evolve {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = System::TwoD)]
        system: System,
        #[arg(long, value_enum, default_value_t = Initial::Default)]
        initial: Initial,
    },
    /// Thin-domain and source-width studies.
    Reduce(Common),
    /// Convergence of the mollified source to the point source.
    MollifyCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0.125)]
        s: f64,
        #[arg(long, default_value_t = 4096)]
        modes: usize,
    },
    /// Property suites; exit status 0 iff every check passes.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Overrides the config seed.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum System {
    /// Shifted solver with the layer m^μ.
    #[value(name = "2d")]
    TwoD,
    /// Original variables with the bounded source p₁η^ε (needs ε > 0).
    Regular,
    /// One-dimensional limit system.
    #[value(name = "1d")]
    OneD,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Initial {
    Default,
    /// Band-limited nonnegative data from the config seed.
    Random,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Identities,
    Layer,
    Trace,
    Gronwall,
    Inequalities,
    Iron,
}

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Steady(c) => steady(&load(&c)?),
        Command::Evolve {
            common,
            system,
            initial,
        } => evolve(&load(&common)?, system, initial),
        Command::Reduce(c) => reduce(&load(&c)?),
        Command::MollifyCheck { common, s, modes } => mollify_check(&load(&common)?, s, modes),
        Command::Verify {
            common,
            suite,
            seed,
        } => {
            let mut cfg = load(&common)?;
            if let Some(s) = seed {
                cfg.seed = s;
            }
            verify(&cfg, suite)
        }
    }
}

fn load(c: &Common) -> CliResult<RunConfig> {
    let cfg = match &c.config {
        Some(p) => RunConfig::from_file(p)?,
        None => RunConfig::default(),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn meta(cfg: &RunConfig, extra: &[(&str, String)]) -> Meta {
    let mut m = vec![("config_hash".to_string(), cfg.hash())];
    m.extend(extra.iter().map(|(k, v)| (k.to_string(), v.clone())));
    m
}

fn out(cfg: &RunConfig, name: &str) -> PathBuf {
    cfg.output_dir().join(name)
}

fn opt(x: Option<f64>) -> String {
    x.map(fmt17).unwrap_or_default()
}

const HS: [f64; 4] = [1.0, 0.5, 0.25, 0.125];
const EPSS: [f64; 4] = [0.4, 0.2, 0.1, 0.05];

fn steady(cfg: &RunConfig) -> CliResult<()> {
    let (n1, n2) = (cfg.solver.n1, cfg.solver.n2);
    let m = build_m_mu(&cfg.params, cfg.h, cfg.epsilon, n1, n2)?;
    let m0 = build_m_zero(&cfg.params, n1)?;
    let base = [
        ("h", fmt17(cfg.h)),
        ("epsilon", fmt17(cfg.epsilon)),
        ("basis", "cosine".to_string()),
    ];
    Snapshot {
        meta: meta(cfg, &[&base[..], &[("component", "m_mu".into())]].concat()),
        values: m.coeffs.clone(),
    }
    .write(&out(cfg, "m_mu.csv"))?;
    Snapshot {
        meta: meta(
            cfg,
            &[&base[..], &[("component", "m_zero".into())]].concat(),
        ),
        values: column(&m0.coeffs),
    }
    .write(&out(cfg, "m_zero.csv"))?;

    let mut epss = EPSS.to_vec();
    epss.push(0.0);
    let rows = swallow_diagnostics(&cfg.params, &HS, &epss, cfg.solver.theta, n1, n2)?;
    let rows = rows
        .iter()
        .map(|r| {
            vec![
                fmt17(r.h),
                fmt17(r.eps),
                opt(r.layer_gap),
                opt(r.source_gap),
                fmt17(r.thin_gap),
                fmt17(r.thin_rate),
            ]
        })
        .collect();
    write_rows(
        &out(cfg, "swallow.csv"),
        &meta(cfg, &[("s", fmt17(cfg.solver.theta))]),
        &[
            "h",
            "epsilon",
            "layer_gap",
            "source_gap",
            "thin_gap",
            "thin_rate",
        ],
        rows,
    )?;
    println!(
        "steady: wrote m_mu.csv, m_zero.csv, swallow.csv to {}",
        cfg.output_dir().display()
    );
    Ok(())
}

fn column(v: &Array1<f64>) -> Array2<f64> {
    v.clone().insert_axis(ndarray::Axis(1))
}

fn initial_state(cfg: &RunConfig, kind: Initial) -> CliResult<UState> {
    let c = &cfg.solver;
    Ok(match kind {
        Initial::Default => initial::default_initial(c)?,
        Initial::Random => initial::random_initial(c, cfg.seed)?,
        Initial::Zero => UState::zeros(c.n1, c.n2, c.n_nodes()),
    })
}

fn snapshots<B>(
    cfg: &RunConfig,
    system: &str,
    frame: &Frame<B>,
    bulk: Array2<f64>,
) -> CliResult<()> {
    let u = &frame.u;
    let parts: [(&str, &str, Array2<f64>); 5] = [
        ("u1", "cosine", bulk),
        ("u2", "cosine", column(&u.u2.coeffs)),
        ("u3", "nodal", column(&u.u3)),
        ("u4", "nodal", column(&u.u4)),
        ("u5", "nodal", column(&u.u5)),
    ];
    for (name, basis, values) in parts {
        let m = meta(
            cfg,
            &[
                ("system", system.into()),
                ("component", name.into()),
                ("basis", basis.into()),
                ("h", fmt17(cfg.h)),
                ("time", fmt17(frame.t)),
            ],
        );
        Snapshot { meta: m, values }.write(&out(cfg, &format!("{name}_final.csv")))?;
    }
    Ok(())
}

fn evolve(cfg: &RunConfig, system: System, init: Initial) -> CliResult<()> {
    let u0 = initial_state(cfg, init)?;
    let c = &cfg.solver;
    let (name, diags): (&str, Vec<Diagnostics>) = match system {
        System::TwoD => {
            let tr = evolve_2d(&u0, &cfg.params, cfg.h, cfg.epsilon, c)?;
            snapshots(cfg, "2d", tr.last(), tr.last().u.u1.coeffs.clone())?;
            ("2d", tr.diagnostics())
        }
        System::Regular => {
            if cfg.epsilon == 0.0 {
                return Err(CliError::config("the regular system needs epsilon > 0"));
            }
            let omega = initial::source_samples(c, cfg.params.p[0], cfg.epsilon)?;
            let tr = evolve_regular(&u0, &cfg.params, cfg.h, &omega, c)?;
            snapshots(cfg, "regular", tr.last(), tr.last().u.u1.coeffs.clone())?;
            ("regular", tr.diagnostics())
        }
        System::OneD => {
            let tr = evolve_limit(&initial::limit_initial(&u0), &cfg.params, c)?;
            snapshots(cfg, "1d", tr.last(), column(&tr.last().u.u1.coeffs))?;
            ("1d", tr.diagnostics())
        }
    };
    write_trajectory(
        &out(cfg, "trajectory.csv"),
        &meta(cfg, &[("system", name.into())]),
        &diags,
    )?;
    let last = diags.last().expect("at least the initial frame");
    println!(
        "evolve {name}: {} frames to t = {}, min u = {:.3e}",
        diags.len(),
        last.t,
        last.min_u
    );
    Ok(())
}

fn reduce(cfg: &RunConfig) -> CliResult<()> {
    let u0 = initial::default_initial(&cfg.solver)?;
    let thin = dimension_reduction_study(&cfg.params, &HS, &u0, &cfg.solver)?;
    let width = epsilon_limit_study(&cfg.params, cfg.h, &EPSS, &u0, &cfg.solver)?;
    let slope = thin.slope.map(fmt17).unwrap_or_default();
    write_table(
        &out(cfg, "reduce_h.csv"),
        &meta(
            cfg,
            &[
                ("slope", slope),
                ("decreasing", thin.decreasing.to_string()),
            ],
        ),
        &thin.table,
    )?;
    write_table(
        &out(cfg, "reduce_epsilon.csv"),
        &meta(
            cfg,
            &[
                ("final_ratio", fmt17(width.final_ratio)),
                ("decreasing", width.decreasing.to_string()),
            ],
        ),
        &width.table,
    )?;
    println!(
        "reduce: h-study decreasing = {}, slope = {:?}",
        thin.decreasing, thin.slope
    );
    println!(
        "reduce: epsilon-study decreasing = {}, final/first = {:.4}",
        width.decreasing, width.final_ratio
    );
    match (thin.decreasing, width.decreasing) {
        (true, true) => Ok(()),
        (false, _) => Err(CliError::Assertion(
            "thin-domain distances are not strictly decreasing".into(),
        )),
        _ => Err(CliError::Assertion(
            "source-width distances are not strictly decreasing".into(),
        )),
    }
}

fn mollify_check(cfg: &RunConfig, s: f64, modes: usize) -> CliResult<()> {
    let mut epss = EPSS.to_vec();
    epss.push(0.0);
    let st = mollifier_convergence_study(s, &epss, modes)?;
    let m = meta(
        cfg,
        &[
            ("s", fmt17(s)),
            ("modes", modes.to_string()),
            ("max_sensitivity", fmt17(st.max_sensitivity)),
        ],
    );
    write_table(&out(cfg, "mollifier.csv"), &m, &st.table)?;
    println!(
        "mollify-check: decreasing = {}, sensitivity = {:.3e}",
        st.decreasing, st.max_sensitivity
    );
    if !st.decreasing {
        return Err(CliError::Assertion(
            "defect norms are not strictly decreasing".into(),
        ));
    }
    if st.max_sensitivity >= 0.01 {
        return Err(CliError::Assertion(format!(
            "truncation sensitivity {} exceeds 1%",
            st.max_sensitivity
        )));
    }
    Ok(())
}

fn layer_report() -> CliResult<Report> {
    let p = morphlab::Params::default();
    let m0 = build_m_zero(&p, 4096)?;
    let mut r = Report::new("layer", None);
    for k in 0..32 {
        let x = -1.0 + (2 * k + 1) as f64 / 32.0;
        let err = (m0.eval(x)? - morphlab::singular::m_zero_closed_form(&p, x)).abs();
        r.push(Check::at_most(format!("m0[x={x}]"), err, 1e-6));
    }
    for h in [1.0, 0.5, 0.25] {
        r.push(Check::at_most(
            format!("average[h={h}]"),
            morphlab::singular::average_matches_limit(&p, h, 64, 16)?,
            1e-15,
        ));
    }
    Ok(r)
}

pub fn suite_report(suite: Suite, seed: u64) -> CliResult<Report> {
    Ok(match suite {
        Suite::Identities => check_spectral_identities(100, 64, 32, seed, 1e-12)?,
        Suite::Layer => layer_report()?,
        Suite::Trace => check_trace_inequality(500, &[0.3, 0.5, 0.75], seed)?,
        Suite::Gronwall => check_gronwall(&default_tuples(), 2000)?,
        Suite::Inequalities => check_elementary_inequalities(&default_grid()),
        Suite::Iron => check_iron_estimates(&IronSpec {
            seed,
            ..IronSpec::default()
        })?,
        Suite::All => {
            let mut all = Report::new("all", Some(seed));
            for s in [
                Suite::Identities,
                Suite::Layer,
                Suite::Trace,
                Suite::Gronwall,
                Suite::Inequalities,
                Suite::Iron,
            ] {
                let r = suite_report(s, seed)?;
                all.checks.extend(r.checks.into_iter().map(|c| Check {
                    name: format!("{}/{}", r.suite, c.name),
                    ..c
                }));
            }
            all
        }
    })
}

fn verify(cfg: &RunConfig, suite: Suite) -> CliResult<()> {
    let report = suite_report(suite, cfg.seed)?;
    let name = suite
        .to_possible_value()
        .expect("named suite")
        .get_name()
        .to_string();
    let path = out(cfg, &format!("verify_{name}.csv"));
    write_report(
        &path,
        &meta(
            cfg,
            &[("suite", name.clone()), ("seed", cfg.seed.to_string())],
        ),
        &report,
    )?;
    let failed: Vec<&Check> = report.failures().collect();
    println!(
        "verify {name} (seed {}): {} checks, {} failed",
        cfg.seed,
        report.checks.len(),
        failed.len()
    );
    for c in &failed {
        println!("  FAIL {}: {} > {}", c.name, fmt17(c.value), fmt17(c.limit));
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Assertion(format!(
            "{} of {} checks failed in suite {name}",
            failed.len(),
            report.checks.len()
        )))
    }
}
