use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `(a1, a2)` with `a1 ≥ a2 ≥ 0`; valid in `G(2,n)` when `a1 ≤ n − 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertIndex {
    pub a1: usize,
    pub a2: usize,
}

impl SchubertIndex {
    pub const fn new(a1: usize, a2: usize) -> Self {
        SchubertIndex { a1, a2 }
    }

    pub fn degree(self) -> usize {
        self.a1 + self.a2
    }

    pub fn is_valid(self, n: usize) -> bool {
        n >= 2 && self.a1 <= n - 2 && self.a2 <= self.a1
    }

    /// `(n−2−a2, n−2−a1)`.
    pub fn dual(self, n: usize) -> Self {
        SchubertIndex::new(n - 2 - self.a2, n - 2 - self.a1)
    }

    /// All valid indices of total `degree` for `G(2,n)`, descending.
    pub fn of_degree(n: usize, degree: usize) -> Vec<SchubertIndex> {
        if n < 2 {
            return vec![];
        }
        (0..=degree / 2)
            .map(|a2| SchubertIndex::new(degree - a2, a2))
            .filter(|a| a.is_valid(n))
            .collect()
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a1, self.a2)
    }
}

/// Whether the indices of a [`ClassVector`] name cohomology classes `σ_a`
/// or their Poincaré duals `s_a = δ(σ_a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    Cohomology,
    Homology,
}

impl Grading {
    pub fn flipped(self) -> Self {
        match self {
            Grading::Cohomology => Grading::Homology,
            Grading::Homology => Grading::Cohomology,
        }
    }
}

/// A homogeneous integer combination of Schubert classes of `G(2,n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassVector {
    n: usize,
    grading: Grading,
    terms: BTreeMap<SchubertIndex, i64>,
}

impl ClassVector {
    pub fn zero(n: usize, grading: Grading) -> Self {
        ClassVector {
            n,
            grading,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, grading: Grading, a: SchubertIndex) -> Result<Self> {
        Self::from_terms(n, grading, [(a, 1)])
    }

    /// `σ_{0,0}`.
    pub fn one(n: usize) -> Self {
        Self::basis(n, Grading::Cohomology, SchubertIndex::new(0, 0)).expect("n >= 2")
    }

    /// Sums repeated indices, drops zero coefficients, and checks validity and
    /// homogeneity.
    pub fn from_terms<I>(n: usize, grading: Grading, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SchubertIndex, i64)>,
    {
        if n < 2 {
            return Err(Error::OutOfRange(format!("G(2,n) needs n >= 2, got {n}")));
        }
        let mut map: BTreeMap<SchubertIndex, i64> = BTreeMap::new();
        for (a, c) in terms {
            if !a.is_valid(n) {
                return Err(Error::InvalidIndex {
                    a1: a.a1,
                    a2: a.a2,
                    n,
                });
            }
            *map.entry(a).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        let mut degrees = map.keys().map(|a| a.degree());
        if let Some(d) = degrees.next() {
            if degrees.any(|e| e != d) {
                return Err(Error::RingMismatch("class is not homogeneous".into()));
            }
        }
        Ok(ClassVector {
            n,
            grading,
            terms: map,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common index degree `a1 + a2` of the terms; `None` for the zero class.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|a| a.degree())
    }

    pub fn coefficient(&self, a: SchubertIndex) -> i64 {
        self.terms.get(&a).copied().unwrap_or(0)
    }

    /// Terms in descending `(a1, a2)` order.
    pub fn terms(&self) -> impl Iterator<Item = (SchubertIndex, i64)> + '_ {
        self.terms.iter().rev().map(|(&a, &c)| (a, c))
    }

    fn check_same_ring(&self, other: &ClassVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RingMismatch(format!(
                "n={} vs n={}",
                self.n, other.n
            )));
        }
        if self.grading != other.grading {
            return Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.grading, other.grading
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassVector) -> Result<ClassVector> {
        self.check_same_ring(other)?;
        let terms = self.terms().chain(other.terms());
        ClassVector::from_terms(self.n, self.grading, terms)
    }

    pub fn scale(&self, k: i64) -> ClassVector {
        let terms = self.terms().map(|(a, c)| (a, c * k));
        ClassVector::from_terms(self.n, self.grading, terms).expect("scaling keeps validity")
    }

    /// Drops terms that are not Schubert classes of `G(2,m)`, `m ≤ n`; this is
    /// the ring map `H^*(G(2,n)) → H^*(G(2,m))`.
    pub fn truncated(&self, m: usize) -> Result<ClassVector> {
        if m < 2 || m > self.n {
            return Err(Error::OutOfRange(format!(
                "cannot truncate n={} to {m}",
                self.n
            )));
        }
        let terms = self.terms().filter(|(a, _)| a.is_valid(m));
        ClassVector::from_terms(m, self.grading, terms)
    }

    /// `δ`: flips the grading and maps `(a1,a2) ↦ (n−2−a2, n−2−a1)`.
    pub fn poincare_dual(&self) -> ClassVector {
        let terms = self.terms().map(|(a, c)| (a.dual(self.n), c));
        ClassVector::from_terms(self.n, self.grading.flipped(), terms)
            .expect("dual indices are valid")
    }

    /// Whether some term `s_{c1,c2}` is a hook: `c2 ≤ 1` and not the unit.
    pub fn contains_hook(&self) -> Result<bool> {
        self.require_homology()?;
        Ok(self
            .terms()
            .any(|(a, _)| a.a2 <= 1 && a != SchubertIndex::new(0, 0)))
    }

    /// Whether the class has a term outside the ideal spanned by `s_a` with
    /// `a2 ≥ 2`, i.e. a hook or the unit `s_{0,0}`.
    pub fn escapes_hook_ideal(&self) -> Result<bool> {
        self.require_homology()?;
        Ok(self.terms().any(|(a, _)| a.a2 <= 1))
    }

    fn require_homology(&self) -> Result<()> {
        if self.grading != Grading::Homology {
            return Err(Error::RingMismatch(
                "hook detection needs a homology class; dualize first".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sym = match self.grading {
            Grading::Cohomology => "σ",
            Grading::Homology => "s",
        };
        for (k, (a, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}·", c.abs())?;
            }
            write!(f, "{sym}{a}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermRepr {
    pub(crate) a: [usize; 2],
    pub(crate) coeff: i64,
}

impl TermRepr {
    pub(crate) fn list(class: &ClassVector) -> Vec<TermRepr> {
        class
            .terms()
            .map(|(a, coeff)| TermRepr {
                a: [a.a1, a.a2],
                coeff,
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct ClassRepr {
    n: usize,
    grading: Grading,
    terms: Vec<TermRepr>,
}

impl Serialize for ClassVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassRepr {
            n: self.n,
            grading: self.grading,
            terms: TermRepr::list(self),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ClassRepr::deserialize(d)?;
        if r.terms.iter().any(|t| t.coeff == 0) {
            return Err(D::Error::custom("zero coefficients are not stored"));
        }
        let terms = r
            .terms
            .into_iter()
            .map(|t| (SchubertIndex::new(t.a[0], t.a[1]), t.coeff));
        ClassVector::from_terms(r.n, r.grading, terms).map_err(D::Error::custom)
    }
}

/// `σ_a · σ_b` expanded with the two-row rule, before truncation.
/// Yields `(c1, c2)` pairs; callers drop those with `c1 > n − 2`.
pub(crate) fn pieri_pair(
    a: SchubertIndex,
    b: SchubertIndex,
) -> impl Iterator<Item = SchubertIndex> {
    let (a, b) = if a.a1 - a.a2 >= b.a1 - b.a2 {
        (a, b)
    } else {
        (b, a)
    };
    let total = a.degree() + b.degree();
    (a.a1 + b.a2..=a.a1 + b.a1).map(move |c1| SchubertIndex::new(c1, total - c1))
}

/// Cup product in `H^*(G(2,n))`.
pub fn multiply(u: &ClassVector, v: &ClassVector) -> Result<ClassVector> {
    u.check_same_ring(v)?;
    if u.grading != Grading::Cohomology {
        return Err(Error::RingMismatch(
            "products are taken in cohomology".into(),
        ));
    }
    let n = u.n;
    let mut acc: BTreeMap<SchubertIndex, i64> = BTreeMap::new();
    for (a, x) in u.terms() {
        for (b, y) in v.terms() {
            for c in pieri_pair(a, b).filter(|c| c.a1 <= n - 2) {
                *acc.entry(c).or_insert(0) += x * y;
            }
        }
    }
    ClassVector::from_terms(n, Grading::Cohomology, acc)
}

/// `σ_k(m) = σ_{(k+n−m−1, n−m)}` in `G(2,n)`, for `1 ≤ k < m ≤ n`.
pub fn sigma(k: usize, m: usize, n: usize) -> Result<ClassVector> {
    if k == 0 || k >= m || m > n {
        return Err(Error::OutOfRange(format!(
            "sigma_k(m) needs 1 <= k < m <= n, got k={k} m={m} n={n}"
        )));
    }
    ClassVector::basis(
        n,
        Grading::Cohomology,
        SchubertIndex::new(k + n - m - 1, n - m),
    )
}
