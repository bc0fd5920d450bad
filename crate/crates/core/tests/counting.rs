mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;

use common::{binom, brute_force_rank2, p, reachable};
use schubert2::matroid::schubert_matroid;
use schubert2::partitions::{
    enumerate_partial_partitions, orbit_count, partition_to_schubert_pair,
    schubert_pair_to_partition,
};
use schubert2::Rank2Matroid;

#[test]
fn tau_sums_to_brute_force_count() {
    let counts: Vec<u64> = (2..=6).map(|n| brute_force_rank2(n).len() as u64).collect();
    assert_eq!(counts[1], 7);
    for (n, &brute) in (2..=6).zip(&counts) {
        let tau: BigUint = enumerate_partial_partitions(n)
            .unwrap()
            .iter()
            .map(|pi| orbit_count(n, pi).unwrap())
            .sum();
        assert_eq!(tau, BigUint::from(brute), "n={n}");
    }
}

#[test]
fn brute_force_orbits_have_tau_members() {
    let n = 5;
    for pi in enumerate_partial_partitions(n).unwrap() {
        let members = brute_force_rank2(n)
            .iter()
            .filter(|m| Rank2Matroid::from_basis_matroid(m).unwrap().partition() == pi)
            .count();
        assert_eq!(
            BigUint::from(members),
            orbit_count(n, &pi).unwrap(),
            "({pi})"
        );
    }
}

#[test]
fn schubert_matroids_are_rank2_schubert_partitions() {
    for n in 3..=7 {
        for a1 in 0..=n - 2 {
            for a2 in 0..=a1 {
                let pi = schubert_pair_to_partition(n, a1, a2).unwrap();
                assert_eq!(partition_to_schubert_pair(n, &pi).unwrap(), (a1, a2));
                let m = schubert_matroid(n, 2, &[a1, a2]).unwrap();
                let r = Rank2Matroid::from_basis_matroid(&m).unwrap();
                assert_eq!(r.partition(), pi, "n={n} a=({a1},{a2})");
                assert_eq!(r.loops().len(), n - pi.weight());
            }
        }
    }
    let tau = orbit_count(7, &p(&[3, 1, 1])).unwrap();
    assert_eq!(tau, BigUint::from(binom(7, 5) * binom(5, 3)));
}

#[test]
fn weak_order_is_move_reachability() {
    for n in 2..=5 {
        let all: Vec<Rank2Matroid> = brute_force_rank2(n)
            .iter()
            .map(|m| Rank2Matroid::from_basis_matroid(m).unwrap())
            .collect();
        for hi in &all {
            let below: BTreeSet<_> = reachable(hi);
            for lo in &all {
                assert_eq!(lo.lies_below(hi).unwrap(), below.contains(lo), "n={n}");
            }
        }
    }
}
