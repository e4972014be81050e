//! Benchmark-only crate; see `benches/suite.rs`. The library target exists
//! so cargo has something to attach the bench target to.
