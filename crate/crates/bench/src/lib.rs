//! Shared inputs for the criterion benches.

use schubert2::partitions::{enumerate_partial_partitions, Partition};

/// Every `π ∈ Π_n` with at least `min_len` parts.
pub fn partitions_with_length(n: usize, min_len: usize) -> Vec<Partition> {
    enumerate_partial_partitions(n)
        .expect("n >= 2")
        .into_iter()
        .filter(|p| p.length() >= min_len)
        .collect()
}
