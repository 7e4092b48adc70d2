//! Criterion benchmarks for `compedge-core`; run with `cargo bench -p compedge-bench`.
