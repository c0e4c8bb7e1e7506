//! Benchmarks for `wsg-core`; see `benches/`.
