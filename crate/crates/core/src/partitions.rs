//! Partial partitions `Π_n` and the statistics of their thin Schubert cells.
//!
//! A partition `π ∈ Π_n` labels one `S_n`-orbit of rank-2 matroids on `[n]`:
//! its parts are the sizes of the parallel classes and `n − w(π)` counts the
//! loops.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite multiset of positive integers, stored sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Canonicalizes by sorting; rejects empty input and zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `w(π)`, the sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(π)`, the number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Distinct parts in decreasing order with their multiplicities `α_j`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &k in &self.parts {
            match out.last_mut() {
                Some((part, count)) if *part == k => *count += 1,
                _ => out.push((k, 1)),
            }
        }
        out
    }

    /// True for Schubert partitions `(k, 1^{m−k})` with `1 ≤ k < m`.
    pub fn is_schubert(&self) -> bool {
        self.length() >= 2 && self.parts[1..].iter().all(|&k| k == 1)
    }

    pub fn is_rigid(&self) -> bool {
        self.length() <= 3
    }

    /// Checks `2 ≤ ℓ(π) ≤ w(π) ≤ n`.
    pub fn check_in_pi(&self, n: usize) -> Result<()> {
        let reason = if self.length() < 2 {
            "length must be at least 2"
        } else if self.weight() > n {
            "weight exceeds n"
        } else {
            return Ok(());
        };
        Err(Error::NotInPi {
            partition: self.to_string(),
            n,
            reason,
        })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses `k` / `k^a` tokens separated by commas, e.g. `3^2,2^3,1`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::ParsePartition {
            token: String::new(),
            reason: "empty input",
        });
    }
    let mut parts = Vec::new();
    for raw in text.split(',') {
        let token = raw.trim();
        let bad = |reason| Error::ParsePartition {
            token: token.to_string(),
            reason,
        };
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b.trim(), Some(e.trim())),
            None => (token, None),
        };
        let k: usize = base
            .parse()
            .map_err(|_| bad("part is not a positive integer"))?;
        if k == 0 {
            return Err(bad("parts must be at least 1"));
        }
        let a: usize = match exp {
            Some(e) => e
                .parse()
                .map_err(|_| bad("exponent is not a positive integer"))?,
            None => 1,
        };
        if a == 0 {
            return Err(bad("exponent must be at least 1"));
        }
        parts.extend(std::iter::repeat_n(k, a));
    }
    Partition::new(parts)
}

/// All `π ∈ Π_n`, by weight ascending and then reverse-lexicographically.
pub fn enumerate_partial_partitions(n: usize) -> Result<Vec<Partition>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("Pi_n needs n >= 2, got {n}")));
    }
    let mut out = Vec::new();
    for w in 2..=n {
        let mut buf = Vec::new();
        descending_partitions(w, w - 1, &mut buf, &mut |p| {
            out.push(Partition { parts: p.to_vec() })
        });
    }
    Ok(out)
}

fn descending_partitions(
    remaining: usize,
    max_part: usize,
    buf: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(buf);
        return;
    }
    for k in (1..=max_part.min(remaining)).rev() {
        buf.push(k);
        descending_partitions(remaining - k, k, buf, emit);
        buf.pop();
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `τ_n(π) = n! / ((n−w)! ∏_j (k_j!)^{α_j} α_j!)`, the size of `S_n · M_π`.
pub fn orbit_count(n: usize, pi: &Partition) -> Result<BigUint> {
    pi.check_in_pi(n)?;
    let mut denom = factorial(n - pi.weight());
    for (k, alpha) in pi.multiplicities() {
        denom *= factorial(k).pow(alpha as u32) * factorial(alpha);
    }
    Ok(factorial(n) / denom)
}

/// Dimension of the matroid polytope of `M_π`.
pub fn polytope_dim(pi: &Partition) -> Result<usize> {
    if pi.length() < 2 {
        return Err(Error::InvalidPartition(format!(
            "({pi}) has fewer than two parts"
        )));
    }
    Ok(torus_dim(pi))
}

fn torus_dim(pi: &Partition) -> usize {
    if pi.length() == 2 {
        pi.weight() - 2
    } else {
        pi.weight() - 1
    }
}

/// Base of the torus bundle `G_π → 𝒢_π`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseKind {
    Point,
    /// `M_{0,ℓ}`, of dimension `ℓ − 3`.
    Moduli(usize),
}

impl BaseKind {
    pub fn dim(self) -> usize {
        match self {
            BaseKind::Point => 0,
            BaseKind::Moduli(l) => l.saturating_sub(3),
        }
    }
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseKind::Point => f.write_str("point"),
            BaseKind::Moduli(l) => write!(f, "M0_{l}"),
        }
    }
}

impl Serialize for BaseKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StratumGeometry {
    pub n: usize,
    pub torus_dim: usize,
    pub base: BaseKind,
    pub cell_dim: usize,
    pub rigid: bool,
}

impl StratumGeometry {
    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }
}

pub fn stratum_geometry(n: usize, pi: &Partition) -> Result<StratumGeometry> {
    pi.check_in_pi(n)?;
    let l = pi.length();
    let base = if l == 2 {
        BaseKind::Point
    } else {
        BaseKind::Moduli(l)
    };
    Ok(StratumGeometry {
        n,
        torus_dim: torus_dim(pi),
        base,
        cell_dim: pi.weight() + l - 4,
        rigid: pi.is_rigid(),
    })
}

/// Dimension of `V_π(y)` for a base subvariety `y` of codimension `e`.
pub fn invariant_subvariety_dim(n: usize, pi: &Partition, e: usize) -> Result<usize> {
    pi.check_in_pi(n)?;
    let l = pi.length();
    let max_e = l.saturating_sub(3);
    if e > max_e {
        return Err(Error::OutOfRange(format!(
            "base codimension e={e} exceeds {max_e} for ({pi})"
        )));
    }
    Ok(pi.weight() + l - 4 - e)
}

/// The blocks `P_i` of consecutive integers tiling `[w(π)]`, 1-indexed and
/// listed by increasing start. Block `j` in this list is `P_{ℓ−j}` (0-based
/// `j`), so it has size equal to the `j`-th smallest part.
pub fn canonical_set_partition(pi: &Partition) -> Vec<RangeInclusive<usize>> {
    let mut start = 1;
    pi.parts()
        .iter()
        .rev()
        .map(|&k| {
            let block = start..=start + k - 1;
            start += k;
            block
        })
        .collect()
}

/// `R(a1, a2) = (a1 − a2 + 1, 1^{n−a1−1})`.
pub fn schubert_pair_to_partition(n: usize, a1: usize, a2: usize) -> Result<Partition> {
    if n < 2 || a1 > n - 2 || a2 > a1 {
        return Err(Error::InvalidIndex { a1, a2, n });
    }
    let mut parts = vec![a1 - a2 + 1];
    parts.extend(std::iter::repeat_n(1, n - a1 - 1));
    Partition::new(parts)
}

/// `R^{-1}(π) = (n − ℓ(π), n − w(π))`.
pub fn partition_to_schubert_pair(n: usize, pi: &Partition) -> Result<(usize, usize)> {
    pi.check_in_pi(n)?;
    if !pi.is_schubert() {
        return Err(Error::NotSchubert(pi.to_string()));
    }
    Ok((n - pi.length(), n - pi.weight()))
}
