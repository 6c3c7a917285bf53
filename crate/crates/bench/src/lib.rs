//! Criterion benchmarks for the swan-core pipeline; see `benches/`.
