//! Output documents. Field order here is the byte order on the wire.

use num_bigint::{BigInt, BigUint};
use serde::{Serialize, Serializer};

use schubert2::euler_chow::{FixedLocusRow, SeriesCoefficients};
use schubert2::partitions::StratumGeometry;
use schubert2::{ClassVector, Partition};

/// Largest integer JSON consumers can hold exactly in a double.
const SAFE: u64 = (1 << 53) - 1;

/// An integer that falls back to a decimal string beyond 53 bits.
pub struct Count(pub BigInt);

impl From<BigUint> for Count {
    fn from(x: BigUint) -> Self {
        Count(x.into())
    }
}

impl From<BigInt> for Count {
    fn from(x: BigInt) -> Self {
        Count(x)
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) if v.unsigned_abs() <= SAFE => s.serialize_i64(v),
            _ => s.collect_str(&self.0),
        }
    }
}

#[derive(Serialize)]
pub struct Term {
    pub a: [usize; 2],
    pub coeff: i64,
}

#[derive(Serialize)]
pub struct TermsOnly {
    pub terms: Vec<Term>,
}

impl From<&ClassVector> for TermsOnly {
    fn from(c: &ClassVector) -> Self {
        TermsOnly {
            terms: c
                .terms()
                .map(|(a, coeff)| Term {
                    a: [a.a1, a.a2],
                    coeff,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct PartitionRow {
    pub pi: Partition,
    pub weight: usize,
    pub length: usize,
    pub tau: Count,
    pub torus_dim: usize,
    pub base: String,
    pub cell_dim: usize,
    pub rigid: bool,
}

impl PartitionRow {
    pub fn new(pi: Partition, tau: BigUint, g: StratumGeometry) -> Self {
        PartitionRow {
            weight: pi.weight(),
            length: pi.length(),
            pi,
            tau: tau.into(),
            torus_dim: g.torus_dim,
            base: g.base.to_string(),
            cell_dim: g.cell_dim,
            rigid: g.rigid,
        }
    }

    pub fn csv_header() -> [&'static str; 8] {
        [
            "pi",
            "weight",
            "length",
            "tau",
            "torus_dim",
            "base",
            "cell_dim",
            "rigid",
        ]
    }

    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.pi.to_string(),
            self.weight.to_string(),
            self.length.to_string(),
            self.tau.0.to_string(),
            self.torus_dim.to_string(),
            self.base.clone(),
            self.cell_dim.to_string(),
            self.rigid.to_string(),
        ]
    }
}

#[derive(Serialize)]
pub struct FixedRow<'a> {
    pub pi: &'a Partition,
    pub e: usize,
    pub torus_dim: usize,
    pub base: String,
    pub cell_dim: usize,
    pub count: Count,
    pub class: Option<&'a ClassVector>,
}

impl<'a> From<&'a FixedLocusRow> for FixedRow<'a> {
    fn from(r: &'a FixedLocusRow) -> Self {
        FixedRow {
            pi: &r.partition,
            e: r.e,
            torus_dim: r.geometry.torus_dim,
            base: r.geometry.base.to_string(),
            cell_dim: r.geometry.cell_dim,
            count: r.count.clone().into(),
            class: r.class.as_ref(),
        }
    }
}

impl FixedRow<'_> {
    pub fn csv_header() -> [&'static str; 7] {
        ["pi", "e", "torus_dim", "base", "cell_dim", "count", "class"]
    }

    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.pi.to_string(),
            self.e.to_string(),
            self.torus_dim.to_string(),
            self.base.clone(),
            self.cell_dim.to_string(),
            self.count.0.to_string(),
            self.class.map(|c| c.to_string()).unwrap_or_default(),
        ]
    }
}

#[derive(Serialize)]
pub struct SeriesRow {
    pub lambda: Vec<u32>,
    pub chi: Count,
}

/// Rank-1 series as a dense array, otherwise sparse `{"lambda","chi"}` rows.
pub enum SeriesDoc {
    Dense(Vec<Count>),
    Sparse(Vec<SeriesRow>),
}

impl From<&SeriesCoefficients> for SeriesDoc {
    fn from(s: &SeriesCoefficients) -> Self {
        match s.univariate() {
            Some(c) => SeriesDoc::Dense(c.into_iter().map(Count).collect()),
            None => SeriesDoc::Sparse(
                s.terms
                    .iter()
                    .map(|(lambda, chi)| SeriesRow {
                        lambda: lambda.clone(),
                        chi: Count(chi.clone()),
                    })
                    .collect(),
            ),
        }
    }
}

impl Serialize for SeriesDoc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SeriesDoc::Dense(v) => v.serialize(s),
            SeriesDoc::Sparse(v) => v.serialize(s),
        }
    }
}

impl SeriesDoc {
    pub fn csv_rows(&self) -> (Vec<String>, Vec<Vec<String>>) {
        match self {
            SeriesDoc::Dense(v) => (
                vec!["degree".into(), "chi".into()],
                v.iter()
                    .enumerate()
                    .map(|(d, c)| vec![d.to_string(), c.0.to_string()])
                    .collect(),
            ),
            SeriesDoc::Sparse(v) => (
                vec!["lambda".into(), "chi".into()],
                v.iter()
                    .map(|r| {
                        let lam: Vec<String> = r.lambda.iter().map(u32::to_string).collect();
                        vec![lam.join(","), r.chi.0.to_string()]
                    })
                    .collect(),
            ),
        }
    }
}

#[derive(Serialize)]
pub struct MatroidDoc {
    pub n: usize,
    pub pi: Partition,
    pub blocks: Vec<Vec<usize>>,
    pub loops: Vec<usize>,
    pub bases: Vec<Vec<usize>>,
    pub polytope_dim: usize,
    pub components: usize,
    pub connected: bool,
    pub beta: i64,
}

#[derive(Serialize)]
pub struct BetaDoc {
    pub pi: Partition,
    pub n: usize,
    pub hook_coeff: i64,
    pub beta: i64,
    pub equal: bool,
}
