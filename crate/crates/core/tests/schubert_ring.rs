mod common;

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;

use common::{all_indices, cohomology, oracle_product, p};
use schubert2::partitions::enumerate_partial_partitions;
use schubert2::schubert_ring::{expand_poly, gamma, multiply, schur_poly, sigma};
use schubert2::{ClassVector, Grading, SchubertIndex};

fn class_strategy() -> impl Strategy<Value = ClassVector> {
    (2usize..=10)
        .prop_flat_map(|n| (Just(n), 0..=2 * (n - 2)))
        .prop_flat_map(|(n, d)| {
            let idx = SchubertIndex::of_degree(n, d);
            (
                Just(n),
                Just(idx.clone()),
                proptest::collection::vec(-5i64..=5, idx.len()),
            )
        })
        .prop_map(|(n, idx, coeffs)| {
            ClassVector::from_terms(n, Grading::Cohomology, idx.into_iter().zip(coeffs)).unwrap()
        })
}

proptest! {
    #[test]
    fn duality_is_a_degree_flipping_involution(u in class_strategy()) {
        let d = u.poincare_dual();
        prop_assert_eq!(d.grading(), Grading::Homology);
        prop_assert_eq!(d.poincare_dual(), u.clone());
        if let Some(k) = u.degree() {
            prop_assert_eq!(d.degree(), Some(2 * (u.n() - 2) - k));
        }
    }

    #[test]
    fn schur_round_trip(u in class_strategy()) {
        prop_assert_eq!(expand_poly(&schur_poly(&u).unwrap(), u.n()).unwrap(), u);
    }

    #[test]
    fn products_commute_and_associate(n in 4usize..=9, seed in any::<[u8; 3]>()) {
        let idx = all_indices(n);
        let pick = |k: u8| cohomology(n, idx[k as usize % idx.len()]);
        let (a, b, c) = (pick(seed[0]), pick(seed[1]), pick(seed[2]));
        let ab = multiply(&a, &b).unwrap();
        prop_assert_eq!(&ab, &multiply(&b, &a).unwrap());
        prop_assert_eq!(
            multiply(&ab, &c).unwrap(),
            multiply(&a, &multiply(&b, &c).unwrap()).unwrap()
        );
    }
}

#[test]
fn small_products() {
    let s10 = cohomology(4, SchubertIndex::new(1, 0));
    let sq = multiply(&s10, &s10).unwrap();
    assert_eq!(sq.to_string(), "σ(2,0) + σ(1,1)");
    let s10 = cohomology(3, SchubertIndex::new(1, 0));
    assert_eq!(multiply(&s10, &s10).unwrap().to_string(), "σ(1,1)");
    let s11 = cohomology(5, SchubertIndex::new(1, 1));
    assert_eq!(multiply(&s11, &s11).unwrap().to_string(), "σ(2,2)");
    let homology = s11.poincare_dual();
    assert!(multiply(&homology, &homology).is_err());
    assert!(multiply(&s11, &cohomology(6, SchubertIndex::new(1, 1))).is_err());
}

#[test]
fn product_rule_matches_oracle_including_truncation() {
    for n in 2..=9 {
        for &a in &all_indices(n) {
            for &b in &all_indices(n) {
                let rule = multiply(&cohomology(n, a), &cohomology(n, b)).unwrap();
                assert_eq!(rule, oracle_product(n, a, b), "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn sigma_coordinates() {
    for n in 2..=9 {
        assert_eq!(sigma(1, n, n).unwrap(), ClassVector::one(n));
    }
    assert_eq!(
        sigma(2, 4, 4).unwrap(),
        cohomology(4, SchubertIndex::new(1, 0))
    );
    assert_eq!(
        sigma(1, 5, 6).unwrap(),
        cohomology(6, SchubertIndex::new(1, 1))
    );
    assert!(sigma(0, 4, 4).is_err());
    assert!(sigma(4, 4, 4).is_err());
    assert!(sigma(1, 5, 4).is_err());
}

#[test]
fn gamma_is_injective_and_graded() {
    for n in 2..=10 {
        let parts = enumerate_partial_partitions(n).unwrap();
        let classes: BTreeSet<String> = parts
            .iter()
            .map(|pi| {
                let g = gamma(n, pi).unwrap();
                assert_eq!(g.degree(), Some(2 * n - pi.weight() - pi.length()));
                g.to_string()
            })
            .collect();
        assert_eq!(classes.len(), parts.len(), "n={n}");
    }
}

/// Nonzero products of classes `σ_k(w)` of positive degree, by class.
fn monomial_classes(n: usize) -> HashSet<ClassVector> {
    let gens: Vec<ClassVector> = (2..=n)
        .flat_map(|w| (1..w).map(move |k| sigma(k, w, n).unwrap()))
        .filter(|g| g.degree() != Some(0))
        .collect();
    let mut out = HashSet::from([ClassVector::one(n)]);
    let mut frontier: Vec<(ClassVector, usize)> = vec![(ClassVector::one(n), 0)];
    while let Some((m, from)) = frontier.pop() {
        for (j, g) in gens.iter().enumerate().skip(from) {
            let next = multiply(&m, g).unwrap();
            if next.is_zero() {
                continue;
            }
            out.insert(next.clone());
            frontier.push((next, j));
        }
    }
    out
}

#[test]
fn gamma_images_are_monomials() {
    for n in 2..=7 {
        let monomials = monomial_classes(n);
        let image: HashSet<ClassVector> = enumerate_partial_partitions(n)
            .unwrap()
            .iter()
            .map(|pi| gamma(n, pi).unwrap())
            .collect();
        assert!(image.is_subset(&monomials), "n={n}");
        // σ_1(n−1)^B ∏ σ_{k_j}(n) with Σ k_j ≤ n − B is γ((k_j…, 1^…)).
        fn rec(
            n: usize,
            budget: usize,
            max_k: usize,
            ks: &mut Vec<usize>,
            b: usize,
            image: &HashSet<ClassVector>,
        ) {
            let ones = budget;
            if ks.len() + ones >= 2 {
                let mut parts = ks.clone();
                parts.extend(std::iter::repeat_n(1, ones));
                let mut m = ClassVector::one(n);
                for _ in 0..b {
                    m = multiply(&m, &sigma(1, n - 1, n).unwrap()).unwrap();
                }
                for &k in ks.iter() {
                    m = multiply(&m, &sigma(k, n, n).unwrap()).unwrap();
                }
                assert!(image.contains(&m), "n={n} B={b} ks={ks:?}");
                assert_eq!(gamma(n, &p(&parts)).unwrap(), m);
            }
            for k in 2..=max_k.min(budget) {
                ks.push(k);
                rec(n, budget - k, k, ks, b, image);
                ks.pop();
            }
        }
        for b in 0..=n - 2 {
            rec(n, n - b, n, &mut vec![], b, &image);
        }
    }
    // σ_{1,0}³ in G(2,5) is a monomial outside the image.
    let h = sigma(2, 5, 5).unwrap();
    let cube = multiply(&multiply(&h, &h).unwrap(), &h).unwrap();
    assert_eq!(cube.to_string(), "σ(3,0) + 2·σ(2,1)");
    assert!(monomial_classes(5).contains(&cube));
    assert!(enumerate_partial_partitions(5)
        .unwrap()
        .iter()
        .all(|pi| gamma(5, pi).unwrap() != cube));
}

#[test]
fn hook_dichotomy_on_strata() {
    for n in 3..=8 {
        for pi in enumerate_partial_partitions(n).unwrap() {
            let dual = gamma(n, &pi).unwrap().poincare_dual();
            assert!(
                dual.escapes_hook_ideal().unwrap() == (pi.length() <= 3),
                "n={n} ({pi})"
            );
            if pi != p(&[1, 1]) {
                assert_eq!(
                    dual.contains_hook().unwrap(),
                    pi.length() <= 3,
                    "n={n} ({pi})"
                );
            }
        }
    }
    let d = gamma(6, &p(&[2, 2, 1, 1])).unwrap().poincare_dual();
    assert_eq!(d.to_string(), "s(4,2) + s(3,3)");
    assert!(!d.contains_hook().unwrap());
    assert!(gamma(6, &p(&[2, 2, 1, 1]))
        .unwrap()
        .contains_hook()
        .is_err());
}
