//! Torus-fixed loci of Chow varieties of `G(2,n)` and the Euler–Chow series
//! they determine in small cases.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::orbit_classes::{orbit_class, orbit_homology};
use crate::partitions::{
    enumerate_partial_partitions, invariant_subvariety_dim, orbit_count, stratum_geometry,
    BaseKind, Partition, StratumGeometry,
};
use crate::schubert_ring::{gamma, ClassVector, SchubertIndex};

/// One family of `T`-invariant subvarieties `V_π(y)` of dimension `p`, where
/// `y` ranges over codimension-`e` subvarieties of the base of `G_π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedLocusRow {
    pub partition: Partition,
    pub e: usize,
    pub geometry: StratumGeometry,
    /// `τ_n(π)`, the number of strata of this shape.
    pub count: BigUint,
    /// Homology class, when known: the stratum closure `δγ(π)` for `e = 0`
    /// and the orbit closure for `e = ℓ−3`.
    pub class: Option<ClassVector>,
}

impl FixedLocusRow {
    /// Whether each `V_π(y)` is a single orbit closure (`y` a point).
    pub fn is_orbit_family(&self) -> bool {
        self.e == self.geometry.base_dim()
    }
}

/// All `(π, e)` with `dim V_π(y) = p`, ordered by `ℓ(π)`, then parts
/// ascending, then `e`.
pub fn fixed_locus_table(n: usize, p: usize) -> Result<Vec<FixedLocusRow>> {
    if n < 2 || p > 2 * (n - 2) {
        return Err(Error::OutOfRange(format!(
            "need n >= 2 and 0 <= p <= 2(n-2), got n={n} p={p}"
        )));
    }
    let mut rows = Vec::new();
    for pi in enumerate_partial_partitions(n)? {
        let geometry = stratum_geometry(n, &pi)?;
        for e in 0..=geometry.base_dim() {
            if invariant_subvariety_dim(n, &pi, e)? != p {
                continue;
            }
            let class = if e == geometry.base_dim() {
                Some(orbit_homology(n, &pi)?)
            } else if e == 0 {
                Some(gamma(n, &pi)?.poincare_dual())
            } else {
                None
            };
            rows.push(FixedLocusRow {
                count: orbit_count(n, &pi)?,
                partition: pi.clone(),
                e,
                geometry,
                class,
            });
        }
    }
    rows.sort_by(|a, b| {
        (a.partition.length(), a.partition.parts(), a.e).cmp(&(
            b.partition.length(),
            b.partition.parts(),
            b.e,
        ))
    });
    Ok(rows)
}

/// `χ(M_{0,ℓ}) = (−1)^{ℓ−3} (ℓ−3)!`.
pub fn moduli_euler_char(l: usize) -> Result<BigInt> {
    if l < 3 {
        return Err(Error::OutOfRange(format!("M_0,l needs l >= 3, got {l}")));
    }
    let f: BigInt = (1..=l - 3).fold(BigInt::one(), |acc, k| acc * k);
    Ok(if (l - 3) % 2 == 1 { -f } else { f })
}

/// `χ(Sym^m X) = (−1)^m C(−χ(X), m)`, the `t^m` coefficient of `(1−t)^{−χ}`.
pub fn sym_power_euler(chi: impl Into<BigInt>, m: usize) -> BigInt {
    let x = -chi.into();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..m {
        num *= &x - j;
        den *= j + 1;
    }
    let c = num / den;
    if m % 2 == 1 {
        -c
    } else {
        c
    }
}

/// Euler characteristics `χ(C_{p,λ})` for `λ = Σ_j λ_j g_j` in the basis
/// `generators` of `H_{2p}`, for all `λ` with `Σ λ_j ≤ max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCoefficients {
    pub n: usize,
    pub p: usize,
    pub generators: Vec<SchubertIndex>,
    pub max_degree: usize,
    /// Zero coefficients are omitted, except the empty cycle at `λ = 0`.
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SeriesCoefficients {
    pub fn coefficient(&self, lambda: &[u32]) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Dense coefficients `0..=max_degree`; `None` unless `H_{2p}` has rank 1.
    pub fn univariate(&self) -> Option<Vec<BigInt>> {
        (self.generators.len() == 1).then(|| {
            (0..=self.max_degree as u32)
                .map(|d| self.coefficient(&[d]))
                .collect()
        })
    }
}

/// Product of `(1 − t^{v})^{−χ}` over `(v, χ)` factors, truncated at total
/// degree `max_degree`.
fn series_product(
    generators: usize,
    factors: &[(Vec<u32>, BigInt)],
    max_degree: usize,
) -> BTreeMap<Vec<u32>, BigInt> {
    let mut acc = BTreeMap::from([(vec![0u32; generators], BigInt::one())]);
    for (v, chi) in factors {
        let step: usize = v.iter().map(|&x| x as usize).sum();
        let kmax = max_degree / step;
        let coeffs: Vec<BigInt> = (0..=kmax)
            .map(|k| sym_power_euler(chi.clone(), k))
            .collect();
        let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (lam, c) in &acc {
            let used: usize = lam.iter().map(|&x| x as usize).sum();
            for (k, s) in coeffs
                .iter()
                .enumerate()
                .take((max_degree - used) / step + 1)
            {
                if s.is_zero() {
                    continue;
                }
                let key: Vec<u32> = lam.iter().zip(v).map(|(a, b)| a + b * k as u32).collect();
                *next.entry(key).or_default() += c * s;
            }
        }
        next.retain(|lam, c| !c.is_zero() || lam.iter().all(|&x| x == 0));
        acc = next;
    }
    acc
}

fn exponent_vector(class: &ClassVector, generators: &[SchubertIndex]) -> Result<Vec<u32>> {
    let v: Vec<i64> = generators.iter().map(|&g| class.coefficient(g)).collect();
    if v.iter().any(|&c| c < 0) || v.iter().all(|&c| c == 0) {
        return Err(Error::Invariant {
            name: "effective-class",
            detail: format!("{class} is not a nonzero effective class"),
        });
    }
    Ok(v.into_iter().map(|c| c as u32).collect())
}

fn row_label(r: &FixedLocusRow) -> String {
    format!("({}) e={} base {}", r.partition, r.e, r.geometry.base)
}

/// `E_p(G(2,n))` when the `T`-fixed locus is finite: every invariant
/// `p`-dimensional subvariety is one of `Σ count` isolated orbit closures.
pub fn isolated_series(n: usize, p: usize, max_degree: usize) -> Result<SeriesCoefficients> {
    let rows = fixed_locus_table(n, p)?;
    let offending: Vec<String> = rows
        .iter()
        .filter(|r| !r.partition.is_rigid())
        .map(row_label)
        .collect();
    if !offending.is_empty() {
        return Err(Error::NonIsolatedFixedLocus(offending));
    }
    let generators = SchubertIndex::of_degree(n, p);
    let mut factors = Vec::new();
    for r in &rows {
        let class = r
            .class
            .as_ref()
            .expect("rigid rows carry their orbit class");
        factors.push((
            exponent_vector(class, &generators)?,
            BigInt::from(r.count.clone()),
        ));
    }
    Ok(SeriesCoefficients {
        n,
        p,
        terms: series_product(generators.len(), &factors, max_degree),
        generators,
        max_degree,
    })
}

/// `E_3(G(2,4))` up to `max_degree`: six isolated orbits of class `s_{2,1}`
/// and an `M_{0,4}`-family of orbits of class `2 s_{2,1}`.
pub fn g24_threecycle_coefficients(max_degree: usize) -> Result<SeriesCoefficients> {
    let (n, p) = (4, 3);
    let generators = SchubertIndex::of_degree(n, p);
    let mut factors = Vec::new();
    for r in fixed_locus_table(n, p)? {
        if !r.is_orbit_family() {
            return Err(Error::Invariant {
                name: "g24-fixed-locus",
                detail: format!("unexpected non-orbit family {}", row_label(&r)),
            });
        }
        let class = orbit_class(n, &r.partition, None)?.poincare_dual();
        let base_chi = match r.geometry.base {
            BaseKind::Point => BigInt::one(),
            BaseKind::Moduli(l) => moduli_euler_char(l)?,
        };
        factors.push((
            exponent_vector(&class, &generators)?,
            base_chi * BigInt::from(r.count),
        ));
    }
    let terms = series_product(generators.len(), &factors, max_degree);
    if terms.values().any(|c| c.is_negative()) {
        return Err(Error::Invariant {
            name: "g24-nonnegative",
            detail: "negative Euler characteristic".into(),
        });
    }
    Ok(SeriesCoefficients {
        n,
        p,
        generators,
        max_degree,
        terms,
    })
}
