//! Exhaustive classification sweeps, run on a rayon pool.
//!
//! Instances are generated up front in a fixed order and results are collected by
//! index, so reports do not depend on scheduling.

use anyhow::{bail, Context, Result};
use mvlab_core::base::{bruhat_leq, weak_leq};
use mvlab_core::catalog::{graph_associahedron, graphic_zonotope, is_interval_complete, pitman_stanley, SimpleGraph};
use mvlab_core::flag::{bip_constituents, flag_polytope, projection_property, twisted_bip, TWISTED_BIP_OFFSET};
use mvlab_core::matroid::{enumerate_matroids, is_lattice_path, matroid_polytope, Matroid, ENUMERATION_MAX_N};
use mvlab_core::mv::is_mv;
use mvlab_core::polynomial::{key, newton, rothe, schubert, skyline, Polynomial};
use mvlab_core::schubitope::{schubitope, Diagram};
use mvlab_core::{LatticePoint, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub const MATROIDS_MAX_N: usize = ENUMERATION_MAX_N;
pub const BIPS_MAX_N: usize = 5;
pub const GRAPHS_MAX_N: usize = 6;
pub const SCHUBERT_MAX_N: usize = 6;
pub const KEYS_MAX_N: usize = 5;
pub const KEYS_MAX_PART: u32 = 4;
pub const PITMAN_STANLEY_MAX_N: usize = 8;
pub const DEFAULT_SEED: u64 = 20240229;

/// Counterexamples listed per check; the count is always complete.
const LISTED_COUNTEREXAMPLES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    /// The check does not apply to this instance.
    Skip,
}

impl Verdict {
    fn check(ok: bool, describe: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail(describe())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub counterexamples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub family: &'static str,
    pub params: Value,
    pub checks: Vec<Check>,
    pub ok: bool,
}

/// Worker pool honoring `MVLAB_THREADS` (unset or 0: one worker per core).
pub fn pool() -> Result<rayon::ThreadPool> {
    let threads = match std::env::var("MVLAB_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("MVLAB_THREADS={v:?} is not a count"))?,
        Err(_) => 0,
    };
    Ok(rayon::ThreadPoolBuilder::new().num_threads(threads).build()?)
}

fn cap(what: &str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        bail!("{what} = {value} is outside the supported range {min}..={max}");
    }
    Ok(())
}

/// Runs `judge` on every instance in parallel and tallies one [`Check`] per name.
fn run<T: Sync, const K: usize>(
    family: &'static str,
    params: Value,
    names: [&'static str; K],
    instances: &[T],
    judge: impl Fn(&T) -> [Verdict; K] + Sync,
) -> SweepReport {
    let verdicts: Vec<[Verdict; K]> = instances.par_iter().map(&judge).collect();
    let checks: Vec<Check> = names
        .iter()
        .enumerate()
        .map(|(c, &name)| {
            let mut check = Check {
                name,
                instances: 0,
                passed: 0,
                failed: 0,
                counterexamples: Vec::new(),
            };
            for v in &verdicts {
                match &v[c] {
                    Verdict::Skip => continue,
                    Verdict::Pass => check.passed += 1,
                    Verdict::Fail(why) => {
                        check.failed += 1;
                        if check.counterexamples.len() < LISTED_COUNTEREXAMPLES {
                            check.counterexamples.push(why.clone());
                        }
                    }
                }
                check.instances += 1;
            }
            check
        })
        .collect();
    SweepReport {
        family,
        params,
        ok: checks.iter().all(|c| c.failed == 0),
        checks,
    }
}

fn bases_text(m: &Matroid) -> String {
    let bases: Vec<String> = m.bases().iter().map(ToString::to_string).collect();
    format!("rank {} on [{}]: {}", m.rank(), m.n(), bases.join(" "))
}

/// Matroid polytopes are MV exactly for lattice path matroids. All ranks `1..n` unless
/// `k` is given.
pub fn matroids(n: usize, k: Option<usize>) -> Result<SweepReport> {
    cap("n", n, 1, MATROIDS_MAX_N)?;
    let ranks: Vec<usize> = match k {
        Some(k) => {
            cap("k", k, 0, n)?;
            vec![k]
        }
        None => (1..n).collect(),
    };
    let mut instances = Vec::new();
    for k in ranks {
        instances.extend(enumerate_matroids(n, k)?);
    }
    Ok(run(
        "matroids",
        json!({ "n": n, "k": k }),
        ["mv_iff_lattice_path"],
        &instances,
        |m| {
            let mv = is_mv(&matroid_polytope(m));
            [Verdict::check(mv == is_lattice_path(m), || {
                format!("{} (is_mv = {mv})", bases_text(m))
            })]
        },
    ))
}

/// Every Bruhat interval of `S_n`: MV iff the projection property; weak-order pairs have
/// the projection property; the twisted polytope is the shifted flag polytope.
pub fn bips(n: usize) -> Result<SweepReport> {
    cap("n", n, 1, BIPS_MAX_N)?;
    let all = Permutation::all(n)?;
    let mut instances = Vec::new();
    for u in &all {
        for v in &all {
            if bruhat_leq(u, v)? {
                instances.push((u.clone(), v.clone()));
            }
        }
    }
    let ones = LatticePoint::new(vec![TWISTED_BIP_OFFSET; n]);
    Ok(run(
        "bips",
        json!({ "n": n }),
        [
            "mv_iff_projection_property",
            "weak_order_has_projection_property",
            "twisted_equals_shifted_flag_polytope",
        ],
        &instances,
        |(u, v)| {
            let name = || format!("[{u}, {v}]");
            let p = twisted_bip(u, v).expect("Bruhat ordered");
            let pp = projection_property(u, v).expect("Bruhat ordered");
            let weak = if weak_leq(u, v).expect("same n") {
                Verdict::check(pp, name)
            } else {
                Verdict::Skip
            };
            let flag = flag_polytope(&bip_constituents(u, v).expect("Bruhat ordered"));
            [
                Verdict::check(is_mv(&p) == pp, name),
                weak,
                Verdict::check(flag.translate(&ones).ok().as_ref() == Some(&p), name),
            ]
        },
    ))
}

/// Every simple graph on `[n]`: the graphic zonotope is MV iff every component is a
/// complete graph on an interval; for connected graphs the graph associahedron is MV iff
/// the graph is complete. Also `samples` random Pitman-Stanley polytopes, all MV.
pub fn graphs(n: usize, samples: usize, seed: u64) -> Result<SweepReport> {
    cap("n", n, 1, GRAPHS_MAX_N)?;
    let graphs = SimpleGraph::all(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vectors: Vec<Vec<i64>> = (0..samples)
        .map(|_| {
            let len = rng.gen_range(1..=PITMAN_STANLEY_MAX_N);
            (0..len).map(|_| rng.gen_range(0..=5)).collect()
        })
        .collect();
    let mut report = run(
        "graphs",
        json!({ "n": n, "pitman_stanley_samples": samples, "seed": seed }),
        ["zonotope_mv_iff_interval_complete", "associahedron_mv_iff_complete"],
        &graphs,
        |g| {
            let name = || format!("edges {:?}", g.edges());
            let zonotope = Verdict::check(is_mv(&graphic_zonotope(g)) == is_interval_complete(g), name);
            let associahedron = if g.is_connected() {
                let complete = g.edges().len() == n * (n - 1) / 2;
                Verdict::check(is_mv(&graph_associahedron(g)) == complete, name)
            } else {
                Verdict::Skip
            };
            [zonotope, associahedron]
        },
    );
    let ps = run("graphs", Value::Null, ["pitman_stanley_is_mv"], &vectors, |a| {
        [Verdict::check(pitman_stanley(a).is_ok_and(|p| is_mv(&p)), || {
            format!("PS({a:?})")
        })]
    });
    report.ok &= ps.ok;
    report.checks.extend(ps.checks);
    Ok(report)
}

/// Newton polytope of `f` is MV and equals the Schubitope of `d`.
fn polynomial_verdicts(f: &Polynomial, d: &Diagram, name: impl Fn() -> String) -> [Verdict; 2] {
    match newton(f) {
        Ok(p) => [
            Verdict::check(is_mv(&p), &name),
            Verdict::check(p == schubitope(d), &name),
        ],
        Err(e) => [Verdict::Fail(format!("{}: {e}", name())), Verdict::Skip],
    }
}

pub fn schubert_polynomials(n: usize) -> Result<SweepReport> {
    cap("n", n, 1, SCHUBERT_MAX_N)?;
    let perms = Permutation::all(n)?;
    Ok(run(
        "schubert",
        json!({ "n": n }),
        ["newton_is_mv", "newton_equals_rothe_schubitope"],
        &perms,
        |w| polynomial_verdicts(&schubert(w), &rothe(w), || format!("S_{w}")),
    ))
}

/// Every weak composition of length `n` with parts at most `max_part`.
pub fn key_polynomials(n: usize, max_part: u32) -> Result<SweepReport> {
    cap("n", n, 1, KEYS_MAX_N)?;
    cap("max-part", max_part as usize, 0, KEYS_MAX_PART as usize)?;
    let base = max_part as usize + 1;
    let compositions: Vec<Vec<u32>> = (0..base.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let part = (code % base) as u32;
                    code /= base;
                    part
                })
                .collect()
        })
        .collect();
    Ok(run(
        "keys",
        json!({ "n": n, "max_part": max_part }),
        ["newton_is_mv", "newton_equals_skyline_schubitope"],
        &compositions,
        |alpha| match (key(alpha), skyline(alpha)) {
            (Ok(f), Ok(d)) => polynomial_verdicts(&f, &d, || format!("kappa_{alpha:?}")),
            (Err(e), _) | (_, Err(e)) => [Verdict::Fail(format!("kappa_{alpha:?}: {e}")), Verdict::Skip],
        },
    ))
}
