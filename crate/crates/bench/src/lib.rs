//! Criterion benchmarks live under `benches/`; run `cargo bench -p morphlab-bench`.
