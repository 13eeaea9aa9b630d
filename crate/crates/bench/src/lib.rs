//! Bench-only crate; see `benches/sorting.rs`. Counter tables come from the
//! `wavesort` CLI, these benchmarks measure wall time.
