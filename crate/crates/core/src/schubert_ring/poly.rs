//! Two-variable Schur polynomials `s_{a1,a2}(x, y)`, the injective ring map
//! used as an independent check on the product rule.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::schubert_ring::class::{ClassVector, Grading, SchubertIndex};

/// Integer polynomial in `x, y`, keyed by exponent pair `(i, j)` of `x^i y^j`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    coeffs: BTreeMap<(usize, usize), i64>,
}

impl BivariatePoly {
    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), i64)>>(terms: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        BivariatePoly { coeffs }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> i64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(i, j), &c)| self.coefficient(j, i) == c)
    }

    /// `s_{a1,a2} = Σ_{i=a2}^{a1} x^{a1+a2−i} y^i`.
    pub fn schur(a: SchubertIndex) -> Self {
        let d = a.degree();
        BivariatePoly::from_terms((a.a2..=a.a1).map(|i| ((d - i, i), 1)))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        BivariatePoly::from_terms(self.terms().chain(rhs.terms()))
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BTreeMap::new();
        for ((i, j), c) in self.terms() {
            for ((k, l), d) in rhs.terms() {
                *out.entry((i + k, j + l)).or_insert(0) += c * d;
            }
        }
        BivariatePoly::from_terms(out)
    }
}

/// `ŝ`: maps `σ_{a1,a2} ↦ s_{a1,a2}(x, y)` linearly. Homology input is
/// rejected.
pub fn schur_poly(u: &ClassVector) -> Result<BivariatePoly> {
    if u.grading() != Grading::Cohomology {
        return Err(Error::RingMismatch(
            "schur_poly takes a cohomology class".into(),
        ));
    }
    let mut acc = BivariatePoly::default();
    for (a, c) in u.terms() {
        let s = BivariatePoly::schur(a);
        acc = &acc + &BivariatePoly::from_terms(s.terms().map(|(e, one)| (e, one * c)));
    }
    Ok(acc)
}

/// Inverts [`schur_poly`] by leading-term elimination: repeatedly subtract
/// `c · s_{a,b}` at the lexicographically largest monomial `c x^a y^b`.
pub fn expand_poly(p: &BivariatePoly, n: usize) -> Result<ClassVector> {
    let mut rest = p.clone();
    let mut terms = Vec::new();
    while let Some((&(a, b), &c)) = rest.coeffs.iter().next_back() {
        if a < b {
            return Err(Error::NonSchurExpressible(format!(
                "leading monomial x^{a} y^{b} is not dominant; residue is asymmetric"
            )));
        }
        let idx = SchubertIndex::new(a, b);
        if !idx.is_valid(n) {
            return Err(Error::NonSchurExpressible(format!(
                "term s{idx} is not a Schubert class of G(2,{n})"
            )));
        }
        let s = BivariatePoly::schur(idx);
        rest = &rest + &BivariatePoly::from_terms(s.terms().map(|(e, one)| (e, -one * c)));
        terms.push((idx, c));
    }
    ClassVector::from_terms(n, Grading::Cohomology, terms)
}
