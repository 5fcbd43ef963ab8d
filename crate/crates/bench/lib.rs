//! Benchmarks live in `benches/`; this crate has no library code of its own
//! beyond the group lists they share.

/// Groups timed by the engine benchmarks, as cyclic orders.
pub const ENGINE_GROUPS: [&[u64]; 6] = [&[2, 4], &[3, 3], &[18], &[2, 2, 9], &[33], &[2, 2, 2, 4]];
