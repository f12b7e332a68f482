//! JSON documents read and written by the CLI.
//!
//! Subsets are always sorted arrays of 1-based elements. The one exception is the
//! `submodular` table of a [`PolytopeDoc`], which is indexed by bitmask with bit 0
//! standing for element 1. For `n = 2` the table is
//! `[μ(∅), μ({1}), μ({2}), μ({1,2})]`, so the segment from `(1,0)` to `(0,1)` is
//! `{"n": 2, "submodular": [0, 1, 1, 1]}`.

use anyhow::{bail, Context, Result};
use mvlab_core::matroid::Matroid;
use mvlab_core::polynomial::Polynomial;
use mvlab_core::schubitope::Diagram;
use mvlab_core::{GenPermutahedron, LatticePoint, Subset};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub n: usize,
    pub submodular: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl PolytopeDoc {
    pub fn new(p: &GenPermutahedron, label: Option<String>) -> Self {
        PolytopeDoc {
            n: p.n(),
            submodular: p.table().to_vec(),
            label,
        }
    }

    /// Validates the table: length `2^n`, `μ(∅) = 0`, submodular.
    pub fn to_polytope(&self) -> Result<GenPermutahedron> {
        GenPermutahedron::from_submodular(self.n, self.submodular.clone()).context("invalid polytope document")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidDoc {
    pub n: usize,
    pub k: usize,
    pub bases: Vec<Vec<usize>>,
}

impl MatroidDoc {
    pub fn new(m: &Matroid) -> Self {
        MatroidDoc {
            n: m.n(),
            k: m.rank(),
            bases: m.bases().iter().map(Subset::to_vec).collect(),
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        let bases = subsets(self.n, &self.bases)?;
        if let Some(b) = bases.iter().find(|b| b.len() != self.k) {
            bail!("basis {b} does not have {} elements", self.k);
        }
        Ok(Matroid::from_bases(self.n, &bases)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDoc {
    pub n: usize,
    pub columns: Vec<Vec<usize>>,
}

impl DiagramDoc {
    pub fn new(d: &Diagram) -> Self {
        DiagramDoc {
            n: d.n(),
            columns: d.columns().iter().map(Subset::to_vec).collect(),
        }
    }

    pub fn to_diagram(&self) -> Result<Diagram> {
        Ok(Diagram::new(self.n, &subsets(self.n, &self.columns)?)?)
    }
}

/// A coefficient: a JSON integer when it fits in `i64`, a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Big(String),
}

impl Coeff {
    fn new(c: &BigInt) -> Self {
        i64::try_from(c).map_or_else(|_| Coeff::Big(c.to_string()), Coeff::Int)
    }

    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            Coeff::Int(c) => Ok(BigInt::from(*c)),
            Coeff::Big(s) => s.parse().with_context(|| format!("bad coefficient {s:?}")),
        }
    }
}

/// Terms in the order of the exponent vectors, lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialDoc {
    pub n: usize,
    pub terms: Vec<(Vec<u32>, Coeff)>,
}

impl PolynomialDoc {
    pub fn new(f: &Polynomial) -> Self {
        PolynomialDoc {
            n: f.n(),
            terms: f.terms().map(|(e, c)| (e.clone(), Coeff::new(c))).collect(),
        }
    }

    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((e.clone(), c.to_bigint()?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(self.n, terms)?)
    }
}

pub fn subsets(n: usize, sets: &[Vec<usize>]) -> Result<Vec<Subset>> {
    sets.iter()
        .map(|s| {
            let mut sorted = s.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                bail!("repeated element in {s:?}");
            }
            Ok(Subset::new(n, &sorted)?)
        })
        .collect()
}

pub fn coords(p: &LatticePoint) -> Vec<i64> {
    p.coords().to_vec()
}
