//! Cohomology classes of torus-orbit closures in `G(2,n)`.
//!
//! Rigid partitions (`ℓ ≤ 3`) have orbit closure equal to the thin-cell
//! closure, so the class is `γ(π)`. Otherwise a tree model splits `Δ_π` into
//! rigid pieces and the class is `Σ_v γ(π(v))` over internal vertices.

mod tree;

pub use tree::{caterpillar_model, enumerate_models, TreeModel};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Rank2Matroid;
use crate::partitions::{stratum_geometry, Partition};
use crate::schubert_ring::{gamma, ClassVector, Grading, SchubertIndex};

/// Cohomology class of `closure(T·x)` for any `x` in the thin cell of `π`.
/// Uses the caterpillar when `model` is `None` and `ℓ(π) ≥ 4`.
pub fn orbit_class(n: usize, pi: &Partition, model: Option<&TreeModel>) -> Result<ClassVector> {
    let geometry = stratum_geometry(n, pi)?;
    let class = if pi.is_rigid() {
        gamma(n, pi)?
    } else {
        let fallback;
        let model = match model {
            Some(m) => m,
            None => {
                fallback = caterpillar_model(pi)?;
                &fallback
            }
        };
        if model.label_partition() != *pi {
            return Err(Error::InvalidModel(format!(
                "leaf labels ({}) do not match ({pi})",
                model.label_partition()
            )));
        }
        let mut acc = ClassVector::zero(n, Grading::Cohomology);
        for v in model.internal_vertices() {
            acc = acc.add(&gamma(n, &model.vertex_partition(v)?)?)?;
        }
        acc
    };
    let want = 2 * (n - 2) - geometry.torus_dim;
    if class.is_zero() || class.degree() != Some(want) {
        return Err(Error::Invariant {
            name: "orbit-class-codimension",
            detail: format!("orbit class of ({pi}) in n={n} is {class}, expected degree {want}"),
        });
    }
    Ok(class)
}

/// `δ(orbit_class)`: the homology class of the orbit closure.
pub fn orbit_homology(n: usize, pi: &Partition) -> Result<ClassVector> {
    Ok(orbit_class(n, pi, None)?.poincare_dual())
}

/// Outcome of comparing the orbit class across all tree models.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub models: usize,
    pub agree: bool,
    /// The class from model 0.
    pub class: ClassVector,
    /// Indices of the first model disagreeing with model 0.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<(usize, usize)>,
}

/// Computes [`orbit_class`] under every model of `π` in parallel.
pub fn verify_model_independence(n: usize, pi: &Partition) -> Result<ModelReport> {
    if pi.length() < 4 {
        return Err(Error::TooFewParts(pi.to_string()));
    }
    pi.check_in_pi(n)?;
    let models = enumerate_models(pi)?;
    let classes = models
        .par_iter()
        .map(|m| orbit_class(n, pi, Some(m)))
        .collect::<Result<Vec<_>>>()?;
    let first = classes[0].clone();
    let bad = classes.iter().position(|c| *c != first);
    Ok(ModelReport {
        models: models.len(),
        agree: bad.is_none(),
        class: first,
        counterexample: bad.map(|k| (0, k)),
    })
}

/// `(hook coefficient, β)` for `M_π` on `[w(π)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HookBeta {
    pub hook_coeff: i64,
    pub beta: i64,
}

/// Coefficient of `s_{(n−2,1)}` in the orbit homology at `n = w(π)`, next to
/// the brute-force beta invariant of `M_π`.
pub fn hook_beta_check(pi: &Partition) -> Result<HookBeta> {
    if pi.length() < 3 {
        return Err(Error::TooFewParts(pi.to_string()));
    }
    let n = pi.weight();
    let hook = SchubertIndex::new(n - 2, 1);
    let hook_coeff = orbit_homology(n, pi)?.coefficient(hook);
    let beta = Rank2Matroid::from_partition(n, pi)?
        .to_basis_matroid()
        .beta_invariant();
    Ok(HookBeta { hook_coeff, beta })
}
