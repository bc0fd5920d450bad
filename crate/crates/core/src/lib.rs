//! Exact Schubert calculus on `G(2,n)`: partial partitions, rank-2 matroids,
//! torus-orbit classes from tree models, and desk-scale Euler–Chow series.

pub mod error;
pub mod euler_chow;
pub mod matroid;
pub mod orbit_classes;
pub mod partitions;
pub mod schubert_ring;

pub use error::{Error, Result};
pub use euler_chow::{FixedLocusRow, SeriesCoefficients};
pub use matroid::{BasisMatroid, ElementSet, Rank2Matroid};
pub use orbit_classes::{HookBeta, ModelReport, TreeModel};
pub use partitions::{BaseKind, Partition, StratumGeometry};
pub use schubert_ring::{ClassVector, Grading, SchubertIndex};
