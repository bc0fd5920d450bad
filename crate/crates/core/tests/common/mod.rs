//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use schubert2::matroid::k_subsets;
use schubert2::partitions::Partition;
use schubert2::schubert_ring::{expand_poly, schur_poly};
use schubert2::{BasisMatroid, ClassVector, ElementSet, Grading, Rank2Matroid, SchubertIndex};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn cohomology(n: usize, a: SchubertIndex) -> ClassVector {
    ClassVector::basis(n, Grading::Cohomology, a).unwrap()
}

/// Every valid Schubert index of `G(2,n)`.
pub fn all_indices(n: usize) -> Vec<SchubertIndex> {
    (0..=2 * (n - 2))
        .flat_map(|d| SchubertIndex::of_degree(n, d))
        .collect()
}

/// `σ_a σ_b` through two-variable Schur polynomials, expanded in a
/// Grassmannian large enough that nothing is dropped, then truncated.
pub fn oracle_product(n: usize, a: SchubertIndex, b: SchubertIndex) -> ClassVector {
    let big = n.max(a.degree() + b.degree() + 2);
    let (u, v) = (cohomology(big, a), cohomology(big, b));
    let prod = &schur_poly(&u).unwrap() * &schur_poly(&v).unwrap();
    expand_poly(&prod, big).unwrap().truncated(n).unwrap()
}

/// Every basis family of 2-subsets of `[n]` that passes the exchange check.
pub fn brute_force_rank2(n: usize) -> Vec<BasisMatroid> {
    let pairs: Vec<ElementSet> = k_subsets(n, 2).collect();
    (1u64..1 << pairs.len())
        .filter_map(|mask| {
            let family = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &s)| s);
            BasisMatroid::from_bases(n, 2, family).ok()
        })
        .collect()
}

/// All matroids reachable from `m` by zero or more F⁻/B⁻ moves.
pub fn reachable(m: &Rank2Matroid) -> BTreeSet<Rank2Matroid> {
    let mut seen = BTreeSet::from([m.clone()]);
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        for y in x.degenerations() {
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}
