//! The cohomology ring of `G(2,n)` in the Schubert basis, with the thin
//! Schubert class map `γ` and the hook calculus.

mod class;
mod hooks;
mod poly;
mod tableau;

pub use class::{multiply, sigma, ClassVector, Grading, SchubertIndex};
pub use hooks::{hook_product_mod_i, HookTerm};
pub use poly::{expand_poly, schur_poly, BivariatePoly};
pub use tableau::{schur_product_oracle, ORACLE_MAX_SIZE};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// `γ(π) = σ_1(n−1)^{n−w} · ∏_i σ_{k_i}(n)`, the class of the closure of the
/// thin Schubert cell `G_π`.
pub fn gamma(n: usize, pi: &Partition) -> Result<ClassVector> {
    pi.check_in_pi(n)?;
    let mut acc = ClassVector::one(n);
    for _ in pi.weight()..n {
        acc = multiply(&acc, &sigma(1, n - 1, n)?)?;
    }
    for &k in pi.parts() {
        if k > 1 {
            acc = multiply(&acc, &sigma(k, n, n)?)?;
        }
    }
    let want = 2 * n - pi.weight() - pi.length();
    if acc.is_zero() || acc.degree() != Some(want) {
        return Err(Error::Invariant {
            name: "gamma-grading",
            detail: format!("gamma({pi}) in n={n} is {acc}, expected degree {want}"),
        });
    }
    Ok(acc)
}
