//! Reports produced by the single-object subcommands.

use anyhow::{bail, Result};
use mvlab_core::base::{bruhat_interval, weak_leq};
use mvlab_core::flag::{bip_constituents, projection_property, twisted_bip};
use mvlab_core::mv::{is_mv, lower, plucker_violation, raise, weight, PluckerWitness};
use mvlab_core::polynomial::{key, newton, rothe, schubert, skyline, Polynomial};
use mvlab_core::polytope::VERTEX_SWEEP_MAX_N;
use mvlab_core::schubitope::{orthodontic_chain, schubitope, strongly_separated, Diagram, OrthodonticMove};
use mvlab_core::{GenPermutahedron, Permutation};
use serde::Serialize;

use crate::doc::{coords, DiagramDoc, MatroidDoc, PolynomialDoc, PolytopeDoc};
use crate::input::Op;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessDoc {
    pub s: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub lhs: i64,
    pub rhs: i64,
}

impl From<PluckerWitness> for WitnessDoc {
    fn from(w: PluckerWitness) -> Self {
        WitnessDoc {
            s: w.s.to_vec(),
            a: w.a,
            b: w.b,
            c: w.c,
            lhs: w.lhs,
            rhs: w.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MvReport {
    pub is_mv: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    pub rank: i64,
    pub lowest: Vec<i64>,
    pub highest: Vec<i64>,
    /// Only for `n <= 9`, where sweeping `S_n` is cheap.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<i64>>>,
}

pub fn check_mv(p: &GenPermutahedron) -> MvReport {
    let witness = plucker_violation(p);
    let vertices = (p.n() <= VERTEX_SWEEP_MAX_N).then(|| {
        p.vertices()
            .expect("n within the sweep cap")
            .iter()
            .map(coords)
            .collect()
    });
    MvReport {
        is_mv: witness.is_none(),
        witness: witness.map(WitnessDoc::from),
        rank: p.rank(),
        lowest: coords(&p.lowest_coweight()),
        highest: coords(&p.highest_coweight()),
        vertices,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalStep {
    pub op: String,
    /// `None` once some `f_i` has killed the polytope.
    pub weight: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalReport {
    pub polytope: Option<PolytopeDoc>,
    pub trace: Vec<CrystalStep>,
}

impl CrystalReport {
    pub fn killed(&self) -> bool {
        self.polytope.is_none()
    }
}

/// Applies `ops` left to right, so `"e1 f2"` is `f_2 e_1 P`.
pub fn crystal(p: &GenPermutahedron, label: Option<String>, ops: &[Op]) -> Result<CrystalReport> {
    if !is_mv(p) {
        bail!("crystal operators need an MV polytope");
    }
    if let Some(op) = ops.iter().find(|op| op.index() == 0 || op.index() >= p.n()) {
        bail!("{op} is not an operator on {} coordinates", p.n());
    }
    let mut cur = Some(p.clone());
    let mut trace = Vec::with_capacity(ops.len());
    for &op in ops {
        cur = match (cur, op) {
            (None, _) => None,
            (Some(q), Op::Raise(i)) => Some(raise(&q, i)?),
            (Some(q), Op::Lower(i)) => lower(&q, i)?,
        };
        trace.push(CrystalStep {
            op: op.to_string(),
            weight: cur.as_ref().map(|q| coords(&weight(q))),
        });
    }
    Ok(CrystalReport {
        polytope: cur.map(|q| PolytopeDoc::new(&q, label)),
        trace,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveDoc {
    RemoveInitial(usize),
    Unswap(usize),
}

impl From<OrthodonticMove> for MoveDoc {
    fn from(m: OrthodonticMove) -> Self {
        match m {
            OrthodonticMove::RemoveInitial(k) => MoveDoc::RemoveInitial(k),
            OrthodonticMove::Unswap(i) => MoveDoc::Unswap(i),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchubitopeReport {
    pub diagram: DiagramDoc,
    pub polytope: PolytopeDoc,
    pub is_mv: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    pub strongly_separated: bool,
    /// Present when requested; `null` when `∅` is not below the diagram.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orthodontic_chain: Option<Option<Vec<MoveDoc>>>,
}

pub fn schubitope_report(d: &Diagram, with_chain: bool) -> SchubitopeReport {
    let p = schubitope(d);
    let witness = plucker_violation(&p);
    SchubitopeReport {
        diagram: DiagramDoc::new(d),
        polytope: PolytopeDoc::new(&p, Some(format!("schubitope {d}"))),
        is_mv: witness.is_none(),
        witness: witness.map(WitnessDoc::from),
        strongly_separated: strongly_separated(d),
        orthodontic_chain: with_chain
            .then(|| orthodontic_chain(d).map(|moves| moves.into_iter().map(MoveDoc::from).collect())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialReport {
    pub polynomial: PolynomialDoc,
    pub text: String,
    pub newton: PolytopeDoc,
    pub is_mv: bool,
    /// The Newton polytope equals the Schubitope of the associated diagram.
    pub matches_schubitope: bool,
}

fn polynomial_report(f: &Polynomial, d: &Diagram, label: String) -> Result<PolynomialReport> {
    let p = newton(f)?;
    Ok(PolynomialReport {
        polynomial: PolynomialDoc::new(f),
        text: f.to_string(),
        is_mv: is_mv(&p),
        matches_schubitope: p == schubitope(d),
        newton: PolytopeDoc::new(&p, Some(label)),
    })
}

/// The Schubert polynomial of `w`, compared against the Rothe diagram.
pub fn schubert_report(w: &Permutation) -> Result<PolynomialReport> {
    polynomial_report(&schubert(w), &rothe(w), format!("newton S_{w}"))
}

/// The key polynomial of `alpha`, compared against the skyline diagram.
pub fn key_report(alpha: &[u32]) -> Result<PolynomialReport> {
    let name = alpha.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    polynomial_report(&key(alpha)?, &skyline(alpha)?, format!("newton kappa_({name})"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipReport {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub interval_size: usize,
    pub weak_order: bool,
    pub projection_property: bool,
    pub is_mv: bool,
    pub polytope: PolytopeDoc,
    pub constituents: Vec<MatroidDoc>,
}

pub fn bip_report(u: &Permutation, v: &Permutation) -> Result<BipReport> {
    let p = twisted_bip(u, v)?;
    Ok(BipReport {
        u: u.one_line(),
        v: v.one_line(),
        interval_size: bruhat_interval(u, v)?.len(),
        weak_order: weak_leq(u, v)?,
        projection_property: projection_property(u, v)?,
        is_mv: is_mv(&p),
        polytope: PolytopeDoc::new(&p, Some(format!("twisted BIP [{u}, {v}]"))),
        constituents: bip_constituents(u, v)?
            .constituents()
            .iter()
            .map(MatroidDoc::new)
            .collect(),
    })
}
