//! Criterion benchmarks for freepal; see `benches/`.
