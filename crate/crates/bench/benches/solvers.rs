use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use morphlab::evolution::{initial, step_mmild};
use morphlab::singular::{build_m_mu, layer_at_nodes, trace_of_m};
use morphlab::{Grid1D, Grid2D, Params, Scheme, SolverConfig};
use ndarray::Array2;

fn transforms(c: &mut Criterion) {
    let mut g = c.benchmark_group("transform_2d");
    for (n1, n2) in [(64, 16), (128, 32), (256, 64)] {
        let grid = Grid2D::new(n1, n2).unwrap();
        let samples =
            Array2::from_shape_fn((n1, n2), |(i, j)| ((i * 7 + j * 3) % 11) as f64 / 11.0);
        let f = grid.to_spectral(&samples, n1, n2).unwrap();
        g.bench_with_input(
            BenchmarkId::new("round_trip", format!("{n1}x{n2}")),
            &f,
            |b, f| {
                b.iter(|| {
                    grid.to_spectral(&grid.to_physical(black_box(f)).unwrap(), n1, n2)
                        .unwrap()
                })
            },
        );
    }
    g.finish();
}

fn one_step(c: &mut Criterion) {
    let p = Params::default();
    let mut g = c.benchmark_group("step_mmild");
    for (n1, n2) in [(64, 16), (128, 32)] {
        let cfg = SolverConfig {
            n1,
            n2,
            ..Default::default()
        };
        let m = build_m_mu(&p, 0.5, 0.1, n1, n2).unwrap();
        let grid = Grid1D::new(cfg.n_nodes()).unwrap();
        let tr = trace_of_m(&m, &grid, 0.1).unwrap();
        let z = initial::default_initial(&cfg).unwrap().to_z(&m).unwrap();
        for scheme in [Scheme::Etd1, Scheme::EtdRk2] {
            g.bench_function(
                BenchmarkId::new(scheme.to_string(), format!("{n1}x{n2}")),
                |b| b.iter(|| step_mmild(black_box(&z), cfg.dt, &p, 0.5, &tr, scheme).unwrap()),
            );
        }
    }
    g.finish();
}

fn layers(c: &mut Criterion) {
    let p = Params::default();
    let mut g = c.benchmark_group("layer");
    g.bench_function("build_m_mu_128x32", |b| {
        b.iter(|| build_m_mu(&p, black_box(0.25), 0.05, 128, 32).unwrap())
    });
    g.bench_function("layer_at_nodes_128x32", |b| {
        b.iter(|| layer_at_nodes(&p, black_box(0.25), 0.05, 128, 32).unwrap())
    });
    g.finish();
}

criterion_group!(benches, transforms, one_step, layers);
criterion_main!(benches);
