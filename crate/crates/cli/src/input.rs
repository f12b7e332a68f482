//! Reading documents and parsing the compact argument notations.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use mvlab_core::catalog::pitman_stanley;
use mvlab_core::matroid::{matroid_polytope, Matroid};
use mvlab_core::{GenPermutahedron, LatticePoint, Permutation};
use serde::de::DeserializeOwned;

use crate::doc::{subsets, MatroidDoc, PolytopeDoc};

/// Reads a JSON document from a file, or from stdin when the path is `-`.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Ways of naming a polytope on the command line. Exactly one must be given.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct PolytopeSource {
    /// Polytope JSON document (`-` for stdin)
    #[arg(long, value_name = "PATH")]
    pub doc: Option<std::path::PathBuf>,
    /// Matroid polytope from a JSON list of bases, e.g. '[[1,3],[2,3]]'; needs --n
    #[arg(long, value_name = "JSON", requires = "n")]
    pub matroid_bases: Option<String>,
    /// Matroid polytope from a matroid JSON document
    #[arg(long, value_name = "PATH")]
    pub matroid: Option<std::path::PathBuf>,
    /// Pitman-Stanley polytope PS(a) for a comma-separated vector
    #[arg(long, value_name = "A", value_delimiter = ',')]
    pub pitman_stanley: Option<Vec<i64>>,
    /// A single lattice point
    #[arg(long, value_name = "X", value_delimiter = ',', allow_hyphen_values = true)]
    pub point: Option<Vec<i64>>,
}

impl PolytopeSource {
    /// The polytope and the label it carries in output documents.
    pub fn load(&self, n: Option<usize>) -> Result<(GenPermutahedron, Option<String>)> {
        if let Some(path) = &self.doc {
            let doc: PolytopeDoc = read_json(path)?;
            return Ok((doc.to_polytope()?, doc.label));
        }
        if let Some(json) = &self.matroid_bases {
            let n = n.ok_or_else(|| anyhow!("--matroid-bases needs --n"))?;
            let sets: Vec<Vec<usize>> = serde_json::from_str(json).context("parsing --matroid-bases")?;
            let m = Matroid::from_bases(n, &subsets(n, &sets)?)?;
            return Ok((matroid_polytope(&m), Some(format!("matroid {json}"))));
        }
        if let Some(path) = &self.matroid {
            let m = read_json::<MatroidDoc>(path)?.to_matroid()?;
            return Ok((matroid_polytope(&m), Some(format!("matroid {}", path.display()))));
        }
        if let Some(a) = &self.pitman_stanley {
            return Ok((pitman_stanley(a)?, Some(format!("PS({})", join(a)))));
        }
        if let Some(x) = &self.point {
            let p = GenPermutahedron::point(&LatticePoint::new(x.clone()))?;
            return Ok((p, Some(format!("point ({})", join(x)))));
        }
        bail!("no polytope given")
    }
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

pub fn permutation(one_line: &[usize]) -> Result<Permutation> {
    Permutation::new(one_line).with_context(|| format!("{one_line:?} is not a permutation"))
}

/// Edges written `1-2,2-3`.
pub fn parse_edges(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .filter(|e| !e.trim().is_empty())
        .map(|e| {
            let (a, b) = e
                .split_once('-')
                .ok_or_else(|| anyhow!("edge {e:?} is not of the form a-b"))?;
            Ok((a.trim().parse()?, b.trim().parse()?))
        })
        .collect::<Result<_>>()
        .with_context(|| format!("parsing edges {s:?}"))
}

/// One column or set, written either as digits (`134`) or comma-separated (`1,3,10`).
/// `-` is the empty set.
pub fn parse_set(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "-" {
        return Ok(Vec::new());
    }
    let parsed: Result<Vec<usize>, _> = if s.contains(',') {
        s.split(',').map(|x| x.trim().parse()).collect()
    } else {
        s.chars().map(|c| c.to_string().parse()).collect()
    };
    parsed.with_context(|| format!("bad set {s:?}"))
}

/// Crystal operators written `e1 f2` (also `e_1`, comma separated).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Raise(usize),
    Lower(usize),
}

impl Op {
    pub fn index(self) -> usize {
        match self {
            Op::Raise(i) | Op::Lower(i) => i,
        }
    }
}

impl std::fmt::Display for Op {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Op::Raise(i) => write!(f, "e{i}"),
            Op::Lower(i) => write!(f, "f{i}"),
        }
    }
}

pub fn parse_ops(s: &str) -> Result<Vec<Op>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let mut chars = t.chars();
            let kind = chars.next();
            let i: usize = chars
                .as_str()
                .trim_start_matches('_')
                .parse()
                .with_context(|| format!("bad operator {t:?}"))?;
            match kind {
                Some('e') => Ok(Op::Raise(i)),
                Some('f') => Ok(Op::Lower(i)),
                _ => bail!("bad operator {t:?}: expected e<i> or f<i>"),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn notations() {
        assert_eq!(
            parse_ops("e1 e_1,f2").unwrap(),
            [Op::Raise(1), Op::Raise(1), Op::Lower(2)]
        );
        assert!(parse_ops("").unwrap().is_empty());
        assert!(parse_ops("g1").is_err());
        assert!(parse_ops("e").is_err());
        assert_eq!(parse_set("134").unwrap(), [1, 3, 4]);
        assert_eq!(parse_set("1,3,10").unwrap(), [1, 3, 10]);
        assert!(parse_set("-").unwrap().is_empty());
        assert_eq!(parse_edges("1-2, 2-3").unwrap(), [(1, 2), (2, 3)]);
        assert!(parse_edges("").unwrap().is_empty());
        assert!(parse_edges("12").is_err());
    }
}
