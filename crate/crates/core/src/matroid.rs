//! Matroids given by basis families: rank functions, matroid polytopes, lattice
//! path and Schubert matroids, and exhaustive enumeration of small matroids.

use alloc::vec;
use alloc::vec::Vec;

use crate::base::{self, full_mask, gale_leq_masks, k_subsets, mask_elements, Subset};
use crate::error::{Error, Result};
use crate::polytope::GenPermutahedron;

/// Cap on the ground set for [`enumerate_matroids`].
pub const ENUMERATION_MAX_N: usize = 6;

/// A matroid on `[n]` given by its bases, stored as masks sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    k: usize,
    bases: Vec<u32>,
}

/// First exchange failure `(B1, B2, x)` of a family of equal-size masks.
fn exchange_violation(bases: &[u32], contains: impl Fn(u32) -> bool) -> Option<(u32, u32, usize)> {
    for &b1 in bases {
        for &b2 in bases {
            let only_1 = b1 & !b2;
            let only_2 = b2 & !b1;
            for x in mask_elements(only_1) {
                let without = b1 & !base::bit(x);
                if !mask_elements(only_2).any(|y| contains(without | base::bit(y))) {
                    return Some((b1, b2, x));
                }
            }
        }
    }
    None
}

impl Matroid {
    /// Validates a basis family: nonempty, equal cardinalities, basis exchange.
    pub fn from_bases(n: usize, bases: &[Subset]) -> Result<Self> {
        base::check_n(n)?;
        let first = bases.first().ok_or(Error::Empty("basis family"))?;
        let k = first.len();
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            if b.n() != n {
                return Err(Error::GroundSetMismatch { left: n, right: b.n() });
            }
            if b.len() != k {
                return Err(Error::CardinalityMismatch {
                    left: k,
                    right: b.len(),
                });
            }
            masks.push(b.mask());
        }
        Self::from_masks(n, masks)
    }

    pub fn from_masks(n: usize, mut masks: Vec<u32>) -> Result<Self> {
        base::check_n(n)?;
        let first = *masks.first().ok_or(Error::Empty("basis family"))?;
        let k = first.count_ones() as usize;
        for &m in &masks {
            Subset::from_mask(n, m)?;
            if m.count_ones() as usize != k {
                return Err(Error::CardinalityMismatch {
                    left: k,
                    right: m.count_ones() as usize,
                });
            }
        }
        masks.sort_by(|a, b| base::lex_cmp_masks(*a, *b));
        masks.dedup();
        let mut member = vec![false; 1 << n];
        for &m in &masks {
            member[m as usize] = true;
        }
        if let Some((b1, b2, x)) = exchange_violation(&masks, |m| member[m as usize]) {
            return Err(Error::ExchangeFailure {
                b1: Subset::from_mask_unchecked(n, b1),
                b2: Subset::from_mask_unchecked(n, b2),
                x,
            });
        }
        Ok(Matroid { n, k, bases: masks })
    }

    /// The uniform matroid `U_{k,n}`.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        base::check_n(n)?;
        if k > n {
            return Err(Error::IndexOutOfRange {
                index: k,
                min: 0,
                max: n,
            });
        }
        Ok(Matroid {
            n,
            k,
            bases: k_subsets(n, k),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The rank `k`.
    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn basis_masks(&self) -> &[u32] {
        &self.bases
    }

    pub fn bases(&self) -> Vec<Subset> {
        self.bases
            .iter()
            .map(|&m| Subset::from_mask_unchecked(self.n, m))
            .collect()
    }

    pub fn is_basis(&self, s: &Subset) -> bool {
        s.n() == self.n
            && self
                .bases
                .binary_search_by(|m| base::lex_cmp_masks(*m, s.mask()))
                .is_ok()
    }

    /// `μ(S) = max_B |S ∩ B|`.
    pub fn rank_fn(&self, s: &Subset) -> usize {
        self.rank_of_mask(s.mask())
    }

    pub(crate) fn rank_of_mask(&self, s: u32) -> usize {
        self.bases
            .iter()
            .map(|b| (b & s).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// The full rank table, indexed by mask.
    pub fn rank_table(&self) -> Vec<i64> {
        (0..=full_mask(self.n)).map(|s| self.rank_of_mask(s) as i64).collect()
    }

    /// Gale-minimal basis, from the greedy algorithm with weights `(n, ..., 2, 1)`.
    pub fn gale_min_basis(&self) -> Subset {
        Subset::from_mask_unchecked(self.n, self.greedy((1..=self.n).collect()))
    }

    /// Gale-maximal basis, from the greedy algorithm with weights `(1, 2, ..., n)`.
    pub fn gale_max_basis(&self) -> Subset {
        Subset::from_mask_unchecked(self.n, self.greedy((1..=self.n).rev().collect()))
    }

    /// Greedy independent set, scanning elements in the given order.
    fn greedy(&self, order: Vec<usize>) -> u32 {
        let mut chosen = 0u32;
        for e in order {
            let next = chosen | base::bit(e);
            if self.bases.iter().any(|b| b & next == next) {
                chosen = next;
            }
        }
        chosen
    }
}

/// `P(M) = conv(e_B)`, whose submodular function is the rank function.
pub fn matroid_polytope(m: &Matroid) -> GenPermutahedron {
    GenPermutahedron::from_table_unchecked(m.n, m.rank_table())
}

/// `M[S, T]`, whose bases are the Gale interval `[S, T]`.
pub fn lattice_path_matroid(s: &Subset, t: &Subset) -> Result<Matroid> {
    let bases = base::gale_interval(s, t)?;
    Matroid::from_bases(s.n(), &bases)
}

/// The Schubert matroid `Ω_A = M[{1, ..., |A|}, A]`.
pub fn schubert_matroid(a: &Subset) -> Matroid {
    let n = a.n();
    let bases: Vec<u32> = k_subsets(n, a.len())
        .into_iter()
        .filter(|&c| gale_leq_masks(c, a.mask()))
        .collect();
    Matroid { n, k: a.len(), bases }
}

/// `M` is a lattice path matroid: its bases are exactly the Gale interval between
/// its Gale-extreme bases.
pub fn is_lattice_path(m: &Matroid) -> bool {
    let lo = m.gale_min_basis().mask();
    let hi = m.gale_max_basis().mask();
    let interval = k_subsets(m.n, m.k)
        .into_iter()
        .filter(|&c| gale_leq_masks(lo, c) && gale_leq_masks(c, hi))
        .count();
    interval == m.bases.len() && m.bases.iter().all(|&b| gale_leq_masks(lo, b) && gale_leq_masks(b, hi))
}

/// `P` is the polytope of a rank-`k` matroid: every vertex is a 0/1 vector with `k` ones.
///
/// Coordinate `i` ranges over `[μ^P({i}), μ_P({i})]` on `P`, so it suffices to bound
/// those and the rank.
pub fn is_matroid_polytope(p: &GenPermutahedron, k: usize) -> bool {
    if !p.is_lattice() || p.rank() != k as i64 {
        return false;
    }
    (1..=p.n()).all(|i| {
        let m = base::bit(i);
        p.super_value(m) >= 0 && p.value(m) <= 1
    })
}

/// Every labeled matroid of rank `k` on `[n]`, each once, in increasing order of the
/// bitmask that selects its bases from the lexicographic list of `k`-subsets.
pub fn enumerate_matroids(n: usize, k: usize) -> Result<MatroidEnumeration> {
    base::check_n(n)?;
    if n > ENUMERATION_MAX_N {
        return Err(Error::GroundSetSize {
            n,
            max: ENUMERATION_MAX_N,
        });
    }
    if k > n {
        return Err(Error::IndexOutOfRange {
            index: k,
            min: 0,
            max: n,
        });
    }
    let subsets = k_subsets(n, k);
    let mut index = vec![usize::MAX; 1 << n];
    for (pos, &m) in subsets.iter().enumerate() {
        index[m as usize] = pos;
    }
    let end = 1u64 << subsets.len();
    Ok(MatroidEnumeration {
        n,
        k,
        subsets,
        index,
        next: 1,
        end,
    })
}

/// Iterator returned by [`enumerate_matroids`].
pub struct MatroidEnumeration {
    n: usize,
    k: usize,
    subsets: Vec<u32>,
    index: Vec<usize>,
    next: u64,
    end: u64,
}

impl MatroidEnumeration {
    fn family_is_matroid(&self, family: u64) -> bool {
        let members: Vec<u32> = (0..self.subsets.len())
            .filter(|&p| family >> p & 1 == 1)
            .map(|p| self.subsets[p])
            .collect();
        exchange_violation(&members, |m| family >> self.index[m as usize] & 1 == 1).is_none()
    }
}

impl Iterator for MatroidEnumeration {
    type Item = Matroid;

    fn next(&mut self) -> Option<Matroid> {
        while self.next < self.end {
            let family = self.next;
            self.next += 1;
            if self.family_is_matroid(family) {
                let bases = (0..self.subsets.len())
                    .filter(|&p| family >> p & 1 == 1)
                    .map(|p| self.subsets[p])
                    .collect();
                return Some(Matroid {
                    n: self.n,
                    k: self.k,
                    bases,
                });
            }
        }
        None
    }
}
