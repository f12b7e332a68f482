//! The MV property (positive tropical Plücker relations) and the type-A crystal
//! structure on MV polytopes.
//!
//! Conventions: simple roots are `α_i = e_{i+1} − e_i`, the weight of `P` is its
//! highest coweight `v_{w0}`, and `raise` (the operator `e_i`) is defined on every
//! MV polytope while `lower` (`f_i`) may kill a polytope.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::base::{self, bit, check_adjacent, full_mask, Permutation, Subset};
use crate::error::{Error, Result};
use crate::polytope::{GenPermutahedron, LatticePoint};

/// A tuple `(S, a, b, c)` at which the supermodular Plücker relation fails.
///
/// `lhs = μ^P(Sb) + μ^P(Sac)` and `rhs = min(μ^P(Sa) + μ^P(Sbc), μ^P(Sab) + μ^P(Sc))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PluckerWitness {
    pub s: Subset,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub lhs: i64,
    pub rhs: i64,
}

impl fmt::Display for PluckerWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}): {} != {}",
            self.s, self.a, self.b, self.c, self.lhs, self.rhs
        )
    }
}

fn check_tuple(p: &GenPermutahedron, s: &Subset, a: usize, b: usize, c: usize) -> Result<()> {
    if s.n() != p.n() {
        return Err(Error::GroundSetMismatch {
            left: p.n(),
            right: s.n(),
        });
    }
    if !(1 <= a && a < b && b < c && c <= p.n()) || s.contains(a) || s.contains(b) || s.contains(c) {
        return Err(Error::InvalidPluckerTuple);
    }
    Ok(())
}

#[inline]
fn super_sides(p: &GenPermutahedron, s: u32, a: u32, b: u32, c: u32) -> (i64, i64) {
    let m = |x: u32| p.super_value(x);
    let lhs = m(s | b) + m(s | a | c);
    let rhs = (m(s | a) + m(s | b | c)).min(m(s | a | b) + m(s | c));
    (lhs, rhs)
}

#[inline]
fn sub_holds(p: &GenPermutahedron, s: u32, a: u32, b: u32, c: u32) -> bool {
    let m = |x: u32| p.value(x);
    m(s | a | c) + m(s | b) == (m(s | b | c) + m(s | a)).max(m(s | a | b) + m(s | c))
}

/// The `(S, a, b, c)` relation in supermodular form:
/// `μ^P(Sb) + μ^P(Sac) = min(μ^P(Sa) + μ^P(Sbc), μ^P(Sab) + μ^P(Sc))`.
pub fn check_plucker(p: &GenPermutahedron, s: &Subset, a: usize, b: usize, c: usize) -> Result<bool> {
    check_tuple(p, s, a, b, c)?;
    let (lhs, rhs) = super_sides(p, s.mask(), bit(a), bit(b), bit(c));
    Ok(lhs == rhs)
}

/// The `(S, a, b, c)` relation in submodular form:
/// `μ_P(Sac) + μ_P(Sb) = max(μ_P(Sbc) + μ_P(Sa), μ_P(Sab) + μ_P(Sc))`.
///
/// Under `μ^P(X) = μ_P([n]) − μ_P([n] \ X)` the supermodular relation at `S` is the
/// submodular relation at `[n] \ (S ∪ {a, b, c})`.
pub fn check_plucker_submodular(p: &GenPermutahedron, s: &Subset, a: usize, b: usize, c: usize) -> Result<bool> {
    check_tuple(p, s, a, b, c)?;
    Ok(sub_holds(p, s.mask(), bit(a), bit(b), bit(c)))
}

/// Lexicographically first failing tuple: `S` by increasing mask, then `(a, b, c)`
/// lexicographically. `None` when `P` is MV.
pub fn plucker_violation(p: &GenPermutahedron) -> Option<PluckerWitness> {
    let n = p.n();
    let full = full_mask(n);
    for s in 0..=full {
        let free = full & !s;
        if free.count_ones() < 3 {
            continue;
        }
        for a in base::mask_elements(free) {
            for b in base::mask_elements(free & !full_mask(a)) {
                for c in base::mask_elements(free & !full_mask(b)) {
                    let (lhs, rhs) = super_sides(p, s, bit(a), bit(b), bit(c));
                    if lhs != rhs {
                        return Some(PluckerWitness {
                            s: Subset::from_mask_unchecked(n, s),
                            a,
                            b,
                            c,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Sweep of every relation in submodular form. Agrees with [`is_mv`].
pub fn is_mv_submodular(p: &GenPermutahedron) -> bool {
    let n = p.n();
    let full = full_mask(n);
    (0..=full).all(|s| {
        let free = full & !s;
        base::mask_elements(free).all(|a| {
            base::mask_elements(free & !full_mask(a))
                .all(|b| base::mask_elements(free & !full_mask(b)).all(|c| sub_holds(p, s, bit(a), bit(b), bit(c))))
        })
    })
}

/// `P` satisfies every positive tropical Plücker relation.
pub fn is_mv(p: &GenPermutahedron) -> bool {
    plucker_violation(p).is_none()
}

/// `{i} ∪ {i+2, ..., n}` = `[n] \ s_i[i]`.
fn upper_with_i(n: usize, i: usize) -> u32 {
    (full_mask(n) & !full_mask(i + 1)) | bit(i)
}

/// `{i+1, ..., n}` = `[n] \ [i]`.
fn upper_from(n: usize, i: usize) -> u32 {
    full_mask(n) & !full_mask(i)
}

/// `c = μ([n] \ s_i[i]) − μ([n] \ [i]) − 1`.
pub fn crystal_c(p: &GenPermutahedron, i: usize) -> Result<i64> {
    let n = p.n();
    check_adjacent(n, i)?;
    Ok(p.value(upper_with_i(n, i)) - p.value(upper_from(n, i)) - 1)
}

/// Applies the raising table rewrite without checking the MV precondition.
pub(crate) fn raise_table(p: &GenPermutahedron, i: usize) -> GenPermutahedron {
    let n = p.n();
    let c = p.value(upper_with_i(n, i)) - p.value(upper_from(n, i)) - 1;
    let (bi, bj) = (bit(i), bit(i + 1));
    let table = (0..=full_mask(n))
        .map(|s| {
            let cur = p.value(s);
            if s & bi == 0 && s & bj != 0 {
                cur.max(p.value((s & !bj) | bi) - c)
            } else {
                cur
            }
        })
        .collect();
    GenPermutahedron::from_table_unchecked(n, table)
}

/// The raising operator `e_i`. Rejects polytopes that are not MV.
pub fn raise(p: &GenPermutahedron, i: usize) -> Result<GenPermutahedron> {
    check_adjacent(p.n(), i)?;
    if !is_mv(p) {
        return Err(Error::NotMv);
    }
    Ok(raise_table(p, i))
}

/// The table rewrite behind `e_i`, applied without the MV precondition. Fails when
/// the rewritten table is not submodular.
pub fn raise_rewrite(p: &GenPermutahedron, i: usize) -> Result<GenPermutahedron> {
    check_adjacent(p.n(), i)?;
    GenPermutahedron::from_submodular(p.n(), raise_table(p, i).into_table())
}

/// Length of the `i`-string below `P`: the number of times `lower` can be applied.
///
/// `e_i` keeps `v_e` and moves `v_{w0}` by `e_{i+1} - e_i`, so this is the length (in
/// units of `e_{i+1} - e_i`) of the edge from `v_{s_i w0}` to `v_{w0}`:
/// `μ({i+1..n}) + μ({i, i+2..n}) − μ({i+2..n}) − μ({i..n})`.
pub fn epsilon(p: &GenPermutahedron, i: usize) -> Result<i64> {
    check_adjacent(p.n(), i)?;
    Ok(epsilon_unchecked(p, i))
}

fn epsilon_unchecked(p: &GenPermutahedron, i: usize) -> i64 {
    let n = p.n();
    let above = upper_from(n, i + 1);
    p.value(above | bit(i + 1)) + p.value(above | bit(i)) - p.value(above) - p.value(upper_from(n, i - 1))
}

/// Moves `P` by `delta` steps along its `i`-string.
///
/// Take the GGMS path `e = w_0, ..., w_{N-1} = s_i w0, w_N = w0` of a reduced word for
/// `w0` ending in `n - i`. The crystal operators fix every vertex of this path except
/// `v_{w0}`, which moves by `delta (e_{i+1} - e_i)`. That pins the table on all prefix
/// sets of the path; the remaining values follow from the tropical Plücker relations.
/// Requires an MV input and `epsilon(P, i) + delta >= 0`.
pub fn shift_along_string(p: &GenPermutahedron, i: usize, delta: i64) -> Result<GenPermutahedron> {
    let n = p.n();
    check_adjacent(n, i)?;
    if !is_mv(p) {
        return Err(Error::NotMv);
    }
    if epsilon_unchecked(p, i) + delta < 0 {
        return Err(Error::Internal(format!(
            "cannot move {delta} steps along the {i}-string"
        )));
    }
    let mut known: Vec<Option<i64>> = vec![None; 1 << n];
    let target = Permutation::longest(n)?.swap_values(i);
    let mut w = Permutation::identity(n)?;
    for k in 0..=n {
        known[full_mask(k) as usize] = Some(p.value(full_mask(k)));
    }
    for j in target.reduced_word() {
        w = w.swap_positions(j);
        for k in 1..n {
            let s = w.prefix_mask(k);
            known[s as usize] = Some(p.value(s));
        }
    }
    let top = upper_from(n, i);
    known[top as usize] = Some(p.value(top) + delta);
    propagate_plucker(n, &mut known)?;
    let table: Vec<i64> = known.into_iter().map(|v| v.expect("filled")).collect();
    GenPermutahedron::from_submodular(n, table)
}

/// Fills unknown entries of a partial submodular table by solving the relation
/// `μ(Sac) + μ(Sb) = max(μ(Sbc) + μ(Sa), μ(Sab) + μ(Sc))` for `μ(Sb)` or `μ(Sac)`.
fn propagate_plucker(n: usize, known: &mut [Option<i64>]) -> Result<()> {
    let full = full_mask(n);
    loop {
        let mut progress = false;
        let mut missing = false;
        for s in 0..=full {
            let free = full & !s;
            for a in base::mask_elements(free) {
                for b in base::mask_elements(free & !full_mask(a)) {
                    for c in base::mask_elements(free & !full_mask(b)) {
                        let (a, b, c) = (bit(a), bit(b), bit(c));
                        let get = |m: u32| known[m as usize];
                        let (sb, sac) = (get(s | b), get(s | a | c));
                        if sb.is_some() == sac.is_some() {
                            continue;
                        }
                        let rest = (get(s | a), get(s | c), get(s | a | b), get(s | b | c));
                        if let (Some(sa), Some(sc), Some(sab), Some(sbc)) = rest {
                            let total = (sbc + sa).max(sab + sc);
                            match (sb, sac) {
                                (None, Some(v)) => known[(s | b) as usize] = Some(total - v),
                                (Some(v), None) => known[(s | a | c) as usize] = Some(total - v),
                                _ => unreachable!(),
                            }
                            progress = true;
                        }
                    }
                }
            }
        }
        for v in known.iter() {
            missing |= v.is_none();
        }
        if !missing {
            return Ok(());
        }
        if !progress {
            return Err(Error::Internal("Plücker propagation stalled".into()));
        }
    }
}

/// The lowering operator `f_i`; `None` when `f_i` kills `P`, i.e. `v_{s_i w0} = v_{w0}`.
///
/// The candidate is built by [`shift_along_string`] and then verified:
/// `raise(candidate, i)` must reproduce `P` exactly.
pub fn lower(p: &GenPermutahedron, i: usize) -> Result<Option<GenPermutahedron>> {
    let n = p.n();
    check_adjacent(n, i)?;
    if !is_mv(p) {
        return Err(Error::NotMv);
    }
    let w0 = Permutation::longest(n)?;
    let killed = p.vertex_unchecked(&w0) == p.vertex_unchecked(&w0.swap_values(i));
    if killed != (epsilon_unchecked(p, i) == 0) {
        return Err(Error::Internal(
            "string length disagrees with v_{s_i w0} = v_{w0}".into(),
        ));
    }
    if killed {
        return Ok(None);
    }
    let candidate = shift_along_string(p, i, -1)?;
    if !is_mv(&candidate) || raise_table(&candidate, i) != *p {
        return Err(Error::Internal(format!("lowering inversion failed for i = {i}")));
    }
    Ok(Some(candidate))
}

/// `wt(P) = v_{w0}`.
pub fn weight(p: &GenPermutahedron) -> LatticePoint {
    p.highest_coweight()
}

/// `e_i` applied `m` times.
pub fn raise_times(p: &GenPermutahedron, i: usize, m: usize) -> Result<GenPermutahedron> {
    let mut cur = p.clone();
    for _ in 0..m {
        cur = raise(&cur, i)?;
    }
    Ok(cur)
}

/// Product `P_1 × ... × P_k` with `P_j` placed on the `j`-th consecutive block of
/// coordinates: `μ(S) = Σ_j μ_j(S ∩ block_j)`.
pub fn product(parts: &[GenPermutahedron]) -> Result<GenPermutahedron> {
    if parts.is_empty() {
        return Err(Error::Empty("product"));
    }
    let n: usize = parts.iter().map(|p| p.n()).sum();
    base::check_n(n)?;
    let table = (0..=full_mask(n))
        .map(|s| {
            let mut offset = 0;
            let mut total = 0;
            for part in parts {
                total += part.value((s >> offset) & full_mask(part.n()));
                offset += part.n();
            }
            total
        })
        .collect();
    Ok(GenPermutahedron::from_table_unchecked(n, table))
}
