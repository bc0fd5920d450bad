//! Matroids given by explicit basis families, and the rank-2 specialization
//! described by parallel classes.
//!
//! Ground-set elements are 1-indexed (`1..=n`) throughout the public API and
//! in JSON; subsets are stored as 64-bit masks, which caps `n` at 64.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{canonical_set_partition, Partition};

pub const MAX_GROUND_SET: usize = 64;

/// A subset of `[n]` for `n ≤ 64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND_SET);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    /// Panics on elements outside `1..=64`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(ElementSet::EMPTY, |s, i| s.with(i))
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet::EMPTY.with(i)
    }

    pub fn with(self, i: usize) -> Self {
        assert!(
            (1..=MAX_GROUND_SET).contains(&i),
            "element {i} out of range"
        );
        ElementSet(self.0 | 1 << (i - 1))
    }

    pub fn without(self, i: usize) -> Self {
        assert!(
            (1..=MAX_GROUND_SET).contains(&i),
            "element {i} out of range"
        );
        ElementSet(self.0 & !(1 << (i - 1)))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_GROUND_SET).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = elements
            .iter()
            .find(|&&i| !(1..=MAX_GROUND_SET).contains(&i))
        {
            return Err(serde::de::Error::custom(format!(
                "element {bad} out of range"
            )));
        }
        Ok(ElementSet::from_elements(elements))
    }
}

/// Iterates over all `k`-subsets of `[n]` in increasing mask order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    assert!(n <= MAX_GROUND_SET);
    let limit = ElementSet::full(n).bits();
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(ElementSet::full(k).bits())
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let nxt = if r == 0 {
                0
            } else {
                (((r ^ cur) >> 2) / c) | r
            };
            (r != 0 && nxt & !limit == 0).then_some(nxt)
        };
        Some(ElementSet(cur))
    })
}

/// A matroid on `[n]` of rank `d` given by its validated basis family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisMatroid {
    n: usize,
    d: usize,
    /// Sorted by mask, deduplicated.
    bases: Vec<ElementSet>,
}

impl BasisMatroid {
    /// Validates sizes and checks the exchange property exhaustively.
    pub fn from_bases<I: IntoIterator<Item = ElementSet>>(
        n: usize,
        d: usize,
        bases: I,
    ) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::OutOfRange(format!("n={n} exceeds {MAX_GROUND_SET}")));
        }
        if d == 0 || d > n {
            return Err(Error::OutOfRange(format!(
                "rank d={d} must satisfy 0 < d <= n={n}"
            )));
        }
        let ground = ElementSet::full(n);
        let mut list: Vec<ElementSet> = bases.into_iter().collect();
        if list.is_empty() {
            return Err(Error::EmptyBases);
        }
        for &b in &list {
            if !b.is_subset(ground) {
                return Err(Error::OutOfRange(format!(
                    "basis {b} is not a subset of [{n}]"
                )));
            }
            if b.len() != d {
                return Err(Error::WrongSubsetSize {
                    subset: b.to_string(),
                    expected: d,
                    found: b.len(),
                });
            }
        }
        list.sort_unstable();
        list.dedup();
        let m = BasisMatroid { n, d, bases: list };
        if let Some((i_set, j_set, element)) = m.exchange_witness() {
            return Err(Error::ExchangeViolation {
                i_set: i_set.to_string(),
                j_set: j_set.to_string(),
                element,
            });
        }
        Ok(m)
    }

    fn exchange_witness(&self) -> Option<(ElementSet, ElementSet, usize)> {
        for &i_set in &self.bases {
            for &j_set in &self.bases {
                for i in i_set.difference(j_set).iter() {
                    let ok = j_set
                        .difference(i_set)
                        .iter()
                        .any(|j| self.is_basis(i_set.without(i).with(j)));
                    if !ok {
                        return Some((i_set, j_set, i));
                    }
                }
            }
        }
        None
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank_of_matroid(&self) -> usize {
        self.d
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn is_basis(&self, s: ElementSet) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// `(loops, coloops)`: elements in no basis and in every basis.
    pub fn classify_elements(&self) -> (ElementSet, ElementSet) {
        let union = self
            .bases
            .iter()
            .fold(ElementSet::EMPTY, |a, &b| a.union(b));
        let inter = self
            .bases
            .iter()
            .fold(ElementSet::full(self.n), |a, &b| a.intersection(b));
        (ElementSet::full(self.n).difference(union), inter)
    }

    /// Connected components: classes of the transitive closure of
    /// `i ∼ j ⇔ (I∖{i})∪{j} ∈ B` for some basis `I`. Sorted by least element.
    pub fn components(&self) -> Vec<ElementSet> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        let outside = |b: ElementSet| ElementSet::full(self.n).difference(b);
        for &b in &self.bases {
            for i in b.iter() {
                for j in outside(b).iter() {
                    if self.is_basis(b.without(i).with(j)) {
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        let mut comps: Vec<ElementSet> = Vec::new();
        let mut root_slot = vec![usize::MAX; self.n + 1];
        for i in 1..=self.n {
            let r = find(&mut parent, i);
            if root_slot[r] == usize::MAX {
                root_slot[r] = comps.len();
                comps.push(ElementSet::EMPTY);
            }
            let slot = root_slot[r];
            comps[slot] = comps[slot].with(i);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `n − #components`.
    pub fn polytope_dimension(&self) -> usize {
        self.n - self.components().len()
    }

    /// `max_B #(A ∩ B)`.
    pub fn rank(&self, a: ElementSet) -> usize {
        self.bases
            .iter()
            .map(|&b| a.intersection(b).len())
            .max()
            .unwrap_or(0)
    }

    /// `β(M) = (−1)^d Σ_{A⊆[n]} (−1)^{#A} r(A)`, by summing over all `2^n`
    /// subsets.
    pub fn beta_invariant(&self) -> i64 {
        assert!(self.n < 32, "beta_invariant brute force needs n < 32");
        let mut total: i64 = 0;
        for bits in 0u64..(1u64 << self.n) {
            let a = ElementSet(bits);
            let r = self.rank(a) as i64;
            if a.len().is_multiple_of(2) {
                total += r;
            } else {
                total -= r;
            }
        }
        if self.d.is_multiple_of(2) {
            total
        } else {
            -total
        }
    }
}

impl Serialize for BasisMatroid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            d: usize,
            bases: Vec<Vec<usize>>,
        }
        let mut bases: Vec<Vec<usize>> = self.bases.iter().map(|b| b.to_vec()).collect();
        bases.sort();
        Repr {
            n: self.n,
            d: self.d,
            bases,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasisMatroid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            d: usize,
            bases: Vec<ElementSet>,
        }
        let r = Repr::deserialize(d)?;
        BasisMatroid::from_bases(r.n, r.d, r.bases).map_err(serde::de::Error::custom)
    }
}

/// `I ≤ P(a)` termwise, where `P(a)_k = n − d + k − a_k`.
pub fn schubert_matroid(n: usize, d: usize, a: &[usize]) -> Result<BasisMatroid> {
    if d == 0 || d >= n || n > MAX_GROUND_SET {
        return Err(Error::OutOfRange(format!("need 0 < d={d} < n={n} <= 64")));
    }
    let malformed = a.len() != d || a[0] > n - d || a.windows(2).any(|w| w[0] < w[1]);
    if malformed {
        return Err(Error::OutOfRange(format!(
            "Schubert index {a:?} must have {d} entries with {} >= a_1 >= ... >= 0",
            n - d
        )));
    }
    let bound: Vec<usize> = (1..=d).map(|k| n - d + k - a[k - 1]).collect();
    let bases = k_subsets(n, d).filter(|s| s.iter().zip(&bound).all(|(i, &p)| i <= p));
    BasisMatroid::from_bases(n, d, bases)
}

/// A rank-2 matroid: its bases are the pairs meeting two distinct parallel
/// classes. Elements outside every block are loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank2Matroid {
    n: usize,
    /// Sorted by least element.
    blocks: Vec<ElementSet>,
}

impl Rank2Matroid {
    pub fn new(n: usize, mut blocks: Vec<ElementSet>) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::OutOfRange(format!("n={n} exceeds {MAX_GROUND_SET}")));
        }
        if blocks.len() < 2 {
            return Err(Error::InvalidMatroid(
                "a rank-2 matroid needs at least 2 blocks".into(),
            ));
        }
        let mut seen = ElementSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidMatroid("empty block".into()));
            }
            if !b.is_subset(ElementSet::full(n)) {
                return Err(Error::OutOfRange(format!(
                    "block {b} is not a subset of [{n}]"
                )));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::InvalidMatroid(format!(
                    "block {b} overlaps another block"
                )));
            }
            seen = seen.union(b);
        }
        blocks.sort_unstable_by_key(|b| b.first());
        Ok(Rank2Matroid { n, blocks })
    }

    /// `M_π`: blocks from the canonical set partition, loops `w(π)+1..=n`.
    pub fn from_partition(n: usize, pi: &Partition) -> Result<Self> {
        pi.check_in_pi(n)?;
        let blocks = canonical_set_partition(pi)
            .into_iter()
            .map(ElementSet::from_elements)
            .collect();
        Rank2Matroid::new(n, blocks)
    }

    /// Recovers the parallel-class structure of a rank-2 basis family.
    pub fn from_basis_matroid(m: &BasisMatroid) -> Result<Self> {
        if m.rank_of_matroid() != 2 {
            return Err(Error::InvalidMatroid(format!(
                "rank {} matroid is not rank 2",
                m.rank_of_matroid()
            )));
        }
        let (loops, _) = m.classify_elements();
        let mut remaining = ElementSet::full(m.n()).difference(loops);
        let mut blocks = Vec::new();
        while let Some(i) = remaining.first() {
            let block = remaining
                .iter()
                .filter(|&j| j == i || !m.is_basis(ElementSet::from_elements([i, j])))
                .fold(ElementSet::EMPTY, ElementSet::with);
            remaining = remaining.difference(block);
            blocks.push(block);
        }
        let r = Rank2Matroid::new(m.n(), blocks)?;
        if r.bases() != m.bases() {
            return Err(Error::InvalidMatroid(
                "basis family is not the partial 2-transversals of its parallel classes".into(),
            ));
        }
        Ok(r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn loops(&self) -> ElementSet {
        self.blocks
            .iter()
            .fold(ElementSet::full(self.n), |acc, &b| acc.difference(b))
    }

    /// `π(M)`: the multiset of block sizes.
    pub fn partition(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.len()).collect()).expect("blocks are non-empty")
    }

    /// Partial 2-transversals, sorted by mask.
    pub fn bases(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        for (x, &bx) in self.blocks.iter().enumerate() {
            for &by in &self.blocks[x + 1..] {
                for i in bx.iter() {
                    for j in by.iter() {
                        out.push(ElementSet::from_elements([i, j]));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn to_basis_matroid(&self) -> BasisMatroid {
        BasisMatroid {
            n: self.n,
            d: 2,
            bases: self.bases(),
        }
    }

    /// Turns the non-loop `i` into a loop.
    pub fn f_minus(&self, i: usize) -> Result<Self> {
        let pos = self
            .blocks
            .iter()
            .position(|b| b.contains(i))
            .ok_or_else(|| {
                Error::MoveRejected(format!("element {i} is a loop or not in [{}]", self.n))
            })?;
        let mut blocks = self.blocks.clone();
        blocks[pos] = blocks[pos].without(i);
        if blocks[pos].is_empty() {
            if blocks.len() == 2 {
                return Err(Error::MoveRejected(format!(
                    "removing {i} would leave a single parallel class"
                )));
            }
            blocks.remove(pos);
        }
        Rank2Matroid::new(self.n, blocks)
    }

    /// Merges blocks `p` and `q` (indices into [`Self::blocks`]).
    pub fn b_minus(&self, p: usize, q: usize) -> Result<Self> {
        if self.blocks.len() < 3 {
            return Err(Error::MoveRejected(
                "merging needs at least 3 blocks".into(),
            ));
        }
        if p == q || p >= self.blocks.len() || q >= self.blocks.len() {
            return Err(Error::MoveRejected(format!(
                "block indices {p},{q} must be distinct and below {}",
                self.blocks.len()
            )));
        }
        let merged = self.blocks[p].union(self.blocks[q]);
        let mut blocks: Vec<ElementSet> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != p && k != q)
            .map(|(_, &b)| b)
            .collect();
        blocks.push(merged);
        Rank2Matroid::new(self.n, blocks)
    }

    /// Every matroid reachable by one `f_minus` or `b_minus` move.
    pub fn degenerations(&self) -> BTreeSet<Rank2Matroid> {
        let mut out = BTreeSet::new();
        for b in &self.blocks {
            for i in b.iter() {
                if let Ok(m) = self.f_minus(i) {
                    out.insert(m);
                }
            }
        }
        for p in 0..self.blocks.len() {
            for q in p + 1..self.blocks.len() {
                if let Ok(m) = self.b_minus(p, q) {
                    out.insert(m);
                }
            }
        }
        out
    }

    /// Whether `self`'s stratum lies in the closure of `hi`'s, i.e.
    /// `B(self) ⊆ B(hi)`.
    pub fn lies_below(&self, hi: &Rank2Matroid) -> Result<bool> {
        if self.n != hi.n {
            return Err(Error::GroundSetMismatch(self.n, hi.n));
        }
        let upper = hi.bases();
        Ok(self.bases().iter().all(|b| upper.binary_search(b).is_ok()))
    }
}

impl Serialize for Rank2Matroid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            blocks: &'a [ElementSet],
            loops: ElementSet,
        }
        Repr {
            n: self.n,
            blocks: &self.blocks,
            loops: self.loops(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rank2Matroid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            blocks: Vec<ElementSet>,
            loops: ElementSet,
        }
        let r = Repr::deserialize(d)?;
        let m = Rank2Matroid::new(r.n, r.blocks).map_err(serde::de::Error::custom)?;
        if m.loops() != r.loops {
            return Err(serde::de::Error::custom(format!(
                "loops {} do not match the complement of the blocks {}",
                r.loops,
                m.loops()
            )));
        }
        Ok(m)
    }
}
