//! Matroid quotients, flag matroids, and Bruhat interval polytopes.

use alloc::vec::Vec;

use crate::base::{self, bruhat_interval, gale_interval, Permutation};
use crate::error::{Error, Result};
use crate::matroid::{matroid_polytope, Matroid};
use crate::polytope::{GenPermutahedron, LatticePoint};

/// Every coordinate of a twisted Bruhat interval polytope exceeds the corresponding
/// coordinate of the flag polytope of [`bip_constituents`] by this amount. The
/// constituents stop at rank `n - 1`; the omitted rank-`n` constituent is the point
/// `(1, ..., 1)`.
pub const TWISTED_BIP_OFFSET: i64 = 1;

/// `M ↠ N`: `μ_M(B) - μ_M(A) >= μ_N(B) - μ_N(A)` for all `A ⊆ B`.
pub fn is_quotient(m: &Matroid, n: &Matroid) -> Result<bool> {
    if m.n() != n.n() {
        return Err(Error::GroundSetMismatch {
            left: m.n(),
            right: n.n(),
        });
    }
    if m.rank() <= n.rank() {
        return Err(Error::RankOrder {
            lower: n.rank(),
            upper: m.rank(),
        });
    }
    Ok(quotient_violation(&m.rank_table(), &n.rank_table(), m.n()).is_none())
}

/// First nested pair `(A, B)` violating the quotient inequality.
fn quotient_violation(big: &[i64], small: &[i64], n: usize) -> Option<(u32, u32)> {
    for b in 0..=base::full_mask(n) {
        let mut a = b;
        loop {
            if big[b as usize] - big[a as usize] < small[b as usize] - small[a as usize] {
                return Some((a, b));
            }
            if a == 0 {
                break;
            }
            a = (a - 1) & b;
        }
    }
    None
}

/// A chain of matroids `M_1, ..., M_k` with strictly increasing ranks and each
/// `M_{i+1} ↠ M_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagMatroid {
    n: usize,
    constituents: Vec<Matroid>,
}

impl FlagMatroid {
    /// Validates ranks and the quotient chain. An empty chain is the trivial flag on `[n]`.
    pub fn new(n: usize, constituents: Vec<Matroid>) -> Result<Self> {
        base::check_n(n)?;
        for m in &constituents {
            if m.n() != n {
                return Err(Error::GroundSetMismatch { left: n, right: m.n() });
            }
        }
        for (index, pair) in constituents.windows(2).enumerate() {
            if pair[1].rank() <= pair[0].rank() {
                return Err(Error::RankOrder {
                    lower: pair[0].rank(),
                    upper: pair[1].rank(),
                });
            }
            if quotient_violation(&pair[1].rank_table(), &pair[0].rank_table(), n).is_some() {
                return Err(Error::NotQuotient { index: index + 1 });
            }
        }
        Ok(FlagMatroid { n, constituents })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constituents(&self) -> &[Matroid] {
        &self.constituents
    }
}

/// `P(M_1) + ... + P(M_k)`.
pub fn flag_polytope(fm: &FlagMatroid) -> GenPermutahedron {
    fm.constituents
        .iter()
        .fold(GenPermutahedron::origin(fm.n).expect("valid n"), |acc, m| {
            acc.minkowski_sum(&matroid_polytope(m)).expect("same ground set")
        })
}

/// `a_1 P(M_1) + ... + a_k P(M_k)` with positive weights.
pub fn weighted_flag_polytope(fm: &FlagMatroid, weights: &[i64]) -> Result<GenPermutahedron> {
    if weights.len() != fm.constituents.len() {
        return Err(Error::ArityMismatch {
            expected: fm.constituents.len(),
            found: weights.len(),
        });
    }
    let mut acc = GenPermutahedron::origin(fm.n)?;
    for (m, &a) in fm.constituents.iter().zip(weights) {
        if a <= 0 {
            return Err(Error::NonPositive(a));
        }
        acc = acc.minkowski_sum(&matroid_polytope(m).dilate(a)?)?;
    }
    Ok(acc)
}

/// The flag matroid of `[u, v]`: `M_i` has bases `proj_i(w)`, `w ∈ [u, v]`, for
/// `i = 1, ..., n - 1`.
pub fn bip_constituents(u: &Permutation, v: &Permutation) -> Result<FlagMatroid> {
    let interval = bruhat_interval(u, v)?;
    let n = u.n();
    let mut constituents = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..n {
        let masks = interval.iter().map(|w| w.prefix_mask(k)).collect();
        constituents.push(Matroid::from_masks(n, masks)?);
    }
    FlagMatroid::new(n, constituents)
}

/// `(n+1-w⁻¹(1), ..., n+1-w⁻¹(n))`.
pub fn twisted_point(w: &Permutation) -> LatticePoint {
    let n = w.n();
    let inv = w.inverse();
    LatticePoint::new((1..=n).map(|j| (n + 1 - inv.get(j)) as i64).collect())
}

/// Convex hull of the twisted points of `[u, v]`.
pub fn twisted_bip(u: &Permutation, v: &Permutation) -> Result<GenPermutahedron> {
    let points: Vec<LatticePoint> = bruhat_interval(u, v)?.iter().map(twisted_point).collect();
    GenPermutahedron::hull_from_points(&points)
}

/// `proj_k([u, v]) = [proj_k(u), proj_k(v)]` for every `k`.
pub fn projection_property(u: &Permutation, v: &Permutation) -> Result<bool> {
    let interval = bruhat_interval(u, v)?;
    let n = u.n();
    for k in 1..n {
        let mut projected: Vec<u32> = interval.iter().map(|w| w.prefix_mask(k)).collect();
        projected.sort_unstable();
        projected.dedup();
        let gale = gale_interval(&u.proj(k)?, &v.proj(k)?)?;
        if gale.len() != projected.len() || gale.iter().any(|s| projected.binary_search(&s.mask()).is_err()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{weak_leq, Subset};
    use crate::mv::is_mv;
    use alloc::vec;

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::new(n, e).unwrap()
    }

    fn p(one: &[usize]) -> Permutation {
        Permutation::new(one).unwrap()
    }

    fn intervals(n: usize) -> Vec<(Permutation, Permutation)> {
        let all = Permutation::all(n).unwrap();
        let mut out = Vec::new();
        for u in &all {
            for v in &all {
                if base::bruhat_leq(u, v).unwrap() {
                    out.push((u.clone(), v.clone()));
                }
            }
        }
        out
    }

    #[test]
    fn quotients() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let u13 = Matroid::uniform(1, 3).unwrap();
        assert!(is_quotient(&u23, &u13).unwrap());
        assert!(matches!(is_quotient(&u13, &u13), Err(Error::RankOrder { .. })));
        let u24 = Matroid::uniform(2, 4).unwrap();
        let only4 = Matroid::from_bases(4, &[s(4, &[4])]).unwrap();
        assert!(!is_quotient(&u24, &only4).unwrap());
        assert!(matches!(
            FlagMatroid::new(4, vec![only4, u24]),
            Err(Error::NotQuotient { index: 1 })
        ));
    }

    #[test]
    fn flag_polytopes() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let single = FlagMatroid::new(3, vec![u23.clone()]).unwrap();
        assert_eq!(flag_polytope(&single), matroid_polytope(&u23));
        let full = FlagMatroid::new(3, (1..=3).map(|k| Matroid::uniform(k, 3).unwrap()).collect()).unwrap();
        assert_eq!(
            flag_polytope(&full),
            GenPermutahedron::permutahedron(&[1, 2, 3]).unwrap()
        );
        let fm = FlagMatroid::new(3, vec![Matroid::uniform(1, 3).unwrap(), u23]).unwrap();
        assert_eq!(weighted_flag_polytope(&fm, &[1, 1]).unwrap(), flag_polytope(&fm));
        assert!(weighted_flag_polytope(&fm, &[1, 0]).is_err());
    }

    #[test]
    fn bip_examples() {
        let e = Permutation::identity(3).unwrap();
        let w0 = Permutation::longest(3).unwrap();
        let point = bip_constituents(&e, &e).unwrap();
        assert_eq!(point.constituents()[0].bases(), vec![s(3, &[1])]);
        assert_eq!(point.constituents()[1].bases(), vec![s(3, &[1, 2])]);
        let top = bip_constituents(&e, &w0).unwrap();
        assert_eq!(top.constituents()[0], Matroid::uniform(1, 3).unwrap());
        assert_eq!(top.constituents()[1], Matroid::uniform(2, 3).unwrap());
        let fm = bip_constituents(&p(&[1, 3, 2]), &p(&[3, 1, 2])).unwrap();
        assert_eq!(fm.constituents()[0].bases(), vec![s(3, &[1]), s(3, &[3])]);
        assert_eq!(fm.constituents()[1].bases(), vec![s(3, &[1, 3])]);

        let w = p(&[2, 3, 1]);
        assert_eq!(
            twisted_bip(&w, &w).unwrap(),
            GenPermutahedron::point(&twisted_point(&w)).unwrap()
        );
        assert_eq!(
            twisted_bip(&e, &w0).unwrap(),
            GenPermutahedron::permutahedron(&[1, 2, 3]).unwrap()
        );
        let seg = twisted_bip(&p(&[1, 3, 2]), &p(&[3, 1, 2])).unwrap();
        assert_eq!(seg.vertices().unwrap().len(), 2);
        assert!(base::bruhat_leq(&w0, &e).is_ok_and(|b| !b));
        assert!(matches!(twisted_bip(&w0, &e), Err(Error::NotBruhatOrdered)));
    }

    #[test]
    fn twisted_bip_is_shifted_flag_polytope() {
        for n in 1..=4 {
            let ones = LatticePoint::new(vec![TWISTED_BIP_OFFSET; n]);
            for (u, v) in intervals(n) {
                let flag = flag_polytope(&bip_constituents(&u, &v).unwrap());
                assert_eq!(
                    twisted_bip(&u, &v).unwrap(),
                    flag.translate(&ones).unwrap(),
                    "[{u}, {v}]"
                );
            }
        }
    }

    #[test]
    fn projection_property_s3() {
        for (u, v) in intervals(3) {
            if weak_leq(&u, &v).unwrap() {
                assert!(projection_property(&u, &v).unwrap());
            }
            assert_eq!(
                is_mv(&twisted_bip(&u, &v).unwrap()),
                projection_property(&u, &v).unwrap()
            );
        }
        let e = Permutation::identity(3).unwrap();
        assert!(projection_property(&e, &e).unwrap());
    }
}
