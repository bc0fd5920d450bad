//! Hook bookkeeping in `Λ / I`, where `I` is spanned by the Schur functions
//! `s_a` with `a_2 ≥ 2`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// `s_{h(d,m)}` with shape `(m−d+1, 1^{d−1})`: `d` rows, `m` boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookTerm {
    d: usize,
    m: usize,
}

impl HookTerm {
    pub fn new(d: usize, m: usize) -> Result<Self> {
        if d == 0 || m < d {
            return Err(Error::OutOfRange(format!(
                "hook h({d},{m}) needs m >= d >= 1"
            )));
        }
        Ok(HookTerm { d, m })
    }

    pub fn rows(self) -> usize {
        self.d
    }

    pub fn size(self) -> usize {
        self.m
    }

    /// The shape as a partition, e.g. `h(2,3) = (2,1)`.
    pub fn shape(self) -> Vec<usize> {
        let mut s = vec![self.m - self.d + 1];
        s.extend(std::iter::repeat_n(1, self.d - 1));
        s
    }

    /// Inverse of [`Self::shape`]; `None` unless the shape is a non-empty hook.
    pub fn from_shape(shape: &[usize]) -> Option<Self> {
        let first = *shape.first()?;
        if first == 0 || shape[1..].iter().any(|&r| r != 1) {
            return None;
        }
        HookTerm::new(shape.len(), shape.iter().sum()).ok()
    }

    /// `h(d,m) · h(d',m') ≡ h(d+d'−1, m+m') + h(d+d', m+m')  (mod I)`.
    pub fn times(self, other: HookTerm) -> [HookTerm; 2] {
        let m = self.m + other.m;
        [
            HookTerm {
                d: self.d + other.d - 1,
                m,
            },
            HookTerm {
                d: self.d + other.d,
                m,
            },
        ]
    }
}

impl fmt::Display for HookTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h({},{})", self.d, self.m)
    }
}

/// Product of hooks modulo `I`, as a multiset of hooks.
pub fn hook_product_mod_i(hooks: &[HookTerm]) -> Result<BTreeMap<HookTerm, u64>> {
    let (first, rest) = hooks
        .split_first()
        .ok_or_else(|| Error::OutOfRange("empty hook product".into()))?;
    let mut acc = BTreeMap::from([(*first, 1u64)]);
    for &h in rest {
        let mut next = BTreeMap::new();
        for (g, mult) in acc {
            for t in g.times(h) {
                *next.entry(t).or_insert(0) += mult;
            }
        }
        acc = next;
    }
    Ok(acc)
}
