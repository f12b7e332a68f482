//! Generalized permutahedra stored as dense integer submodular-function tables.
//!
//! `table[mask]` holds `μ_P(S) = max_{x ∈ P} e_S · x` for the subset `S` encoded by
//! `mask` (bit `i - 1` for element `i`). Monotonicity is not required: crystal
//! operators and translations routinely produce polytopes with negative
//! coordinates. Use [`GenPermutahedron::is_monotone`] when it matters.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::base::{self, full_mask, mask_elements, Permutation, Subset};
use crate::error::{Error, Result};

/// Above this ground-set size submodularity is checked through the local
/// exchange inequalities only.
pub const FULL_SUBMODULAR_CHECK_MAX_N: usize = 10;

/// Cap for routines that sweep all of `S_n`.
pub const VERTEX_SWEEP_MAX_N: usize = 9;

/// Up to this size [`GenPermutahedron::hull_from_points`] also confirms that every
/// vertex of the resulting table is one of the input points.
pub const HULL_VERTEX_CHECK_MAX_N: usize = 8;

/// An integer point in `Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn zero(n: usize) -> Self {
        LatticePoint(vec![0; n])
    }

    /// Indicator vector `e_S`.
    pub fn indicator(s: &Subset) -> Self {
        let mut v = vec![0; s.n()];
        for i in s.elements() {
            v[i - 1] = 1;
        }
        LatticePoint(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `e_S · x` for the subset encoded by `mask`.
    pub fn dot_mask(&self, mask: u32) -> i64 {
        mask_elements(mask).map(|i| self.0[i - 1]).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, a: i64) -> Self {
        LatticePoint(self.0.iter().map(|x| a * x).collect())
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (p, x) in self.0.iter().enumerate() {
            if p > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A lattice generalized permutahedron, represented by its submodular function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenPermutahedron {
    n: usize,
    table: Vec<i64>,
}

impl fmt::Debug for GenPermutahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenPermutahedron(n={}, {:?})", self.n, self.table)
    }
}

/// First pair `(S, T)` violating `μ(S∩T) + μ(S∪T) <= μ(S) + μ(T)`, if any.
pub fn submodular_violation(n: usize, table: &[i64]) -> Option<(u32, u32)> {
    let full = full_mask(n);
    if n <= FULL_SUBMODULAR_CHECK_MAX_N {
        for s in 0..=full {
            for t in s + 1..=full {
                let (i, u) = ((s & t) as usize, (s | t) as usize);
                if table[i] + table[u] > table[s as usize] + table[t as usize] {
                    return Some((s, t));
                }
            }
        }
        None
    } else {
        local_submodular_violation(n, table)
    }
}

/// Local criterion: `μ(S+i) + μ(S+j) >= μ(S+i+j) + μ(S)` for all `S` and `i, j ∉ S`.
pub fn local_submodular_violation(n: usize, table: &[i64]) -> Option<(u32, u32)> {
    let full = full_mask(n);
    for s in 0..=full {
        let free = full & !s;
        for i in mask_elements(free) {
            for j in mask_elements(free & !full_mask(i)) {
                let (si, sj) = (s | base::bit(i), s | base::bit(j));
                if table[(si | sj) as usize] + table[s as usize] > table[si as usize] + table[sj as usize] {
                    return Some((si, sj));
                }
            }
        }
    }
    None
}

impl GenPermutahedron {
    /// Validates a submodular table of length `2^n` with `μ(∅) = 0`.
    pub fn from_submodular(n: usize, table: Vec<i64>) -> Result<Self> {
        base::check_n(n)?;
        let expected = 1usize << n;
        if table.len() != expected {
            return Err(Error::TableLength {
                expected,
                found: table.len(),
            });
        }
        if table[0] != 0 {
            return Err(Error::NonzeroEmptyValue(table[0]));
        }
        if let Some((s, t)) = submodular_violation(n, &table) {
            return Err(Error::NotSubmodular {
                s: Subset::from_mask_unchecked(n, s),
                t: Subset::from_mask_unchecked(n, t),
            });
        }
        Ok(GenPermutahedron { n, table })
    }

    /// Builds from a supermodular table `μ^P(S) = min_{x ∈ P} e_S · x`.
    pub fn from_supermodular(n: usize, table: Vec<i64>) -> Result<Self> {
        base::check_n(n)?;
        let expected = 1usize << n;
        if table.len() != expected {
            return Err(Error::TableLength {
                expected,
                found: table.len(),
            });
        }
        Self::from_submodular(n, dual_table(n, &table))
    }

    /// Skips validation. Only for tables produced by operations that preserve
    /// submodularity (sums, translations, products).
    pub(crate) fn from_table_unchecked(n: usize, table: Vec<i64>) -> Self {
        debug_assert_eq!(table.len(), 1 << n);
        GenPermutahedron { n, table }
    }

    /// The single point `{v}`.
    pub fn point(v: &LatticePoint) -> Result<Self> {
        base::check_n(v.n())?;
        let n = v.n();
        let table = (0..=full_mask(n)).map(|m| v.dot_mask(m)).collect();
        Ok(Self::from_table_unchecked(n, table))
    }

    pub fn origin(n: usize) -> Result<Self> {
        Self::point(&LatticePoint::zero(n))
    }

    /// The simplex `Δ_T = conv(e_i : i ∈ T)`; the origin when `T` is empty.
    pub fn simplex(t: &Subset) -> Self {
        let n = t.n();
        let table = (0..=full_mask(n)).map(|m| i64::from(m & t.mask() != 0)).collect();
        Self::from_table_unchecked(n, table)
    }

    /// `Perm(λ) = conv(w · λ : w ∈ S_n)`: `μ(S)` is the sum of the `|S|` largest entries.
    pub fn permutahedron(lambda: &[i64]) -> Result<Self> {
        let n = lambda.len();
        base::check_n(n)?;
        let mut sorted = lambda.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut prefix = vec![0i64; n + 1];
        for k in 0..n {
            prefix[k + 1] = prefix[k] + sorted[k];
        }
        let table = (0..=full_mask(n)).map(|m| prefix[m.count_ones() as usize]).collect();
        Ok(Self::from_table_unchecked(n, table))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn table(&self) -> &[i64] {
        &self.table
    }

    pub fn into_table(self) -> Vec<i64> {
        self.table
    }

    /// `μ_P(S)` by mask.
    #[inline]
    pub fn value(&self, mask: u32) -> i64 {
        self.table[mask as usize]
    }

    pub fn submodular(&self, s: &Subset) -> i64 {
        self.value(s.mask())
    }

    /// `μ^P(S) = μ_P([n]) − μ_P([n] \ S)` by mask.
    #[inline]
    pub fn super_value(&self, mask: u32) -> i64 {
        let full = full_mask(self.n);
        self.table[full as usize] - self.table[(full & !mask) as usize]
    }

    /// The supermodular table `μ^P`.
    pub fn to_supermodular(&self) -> Vec<i64> {
        dual_table(self.n, &self.table)
    }

    /// `μ([n])`.
    pub fn rank(&self) -> i64 {
        self.table[full_mask(self.n) as usize]
    }

    /// Always true: tables are integral, so every vertex is a lattice point.
    pub fn is_lattice(&self) -> bool {
        true
    }

    pub fn is_monotone(&self) -> bool {
        let full = full_mask(self.n);
        (0..=full).all(|s| {
            mask_elements(full & !s).all(|i| self.table[(s | base::bit(i)) as usize] >= self.table[s as usize])
        })
    }

    /// The greedy vertex `v_w`: `x_{w(1)} + ... + x_{w(k)} = μ({w(1), ..., w(k)})`.
    pub fn vertex(&self, w: &Permutation) -> Result<LatticePoint> {
        if w.n() != self.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: w.n(),
            });
        }
        Ok(self.vertex_unchecked(w))
    }

    pub(crate) fn vertex_unchecked(&self, w: &Permutation) -> LatticePoint {
        let mut x = vec![0; self.n];
        let mut prefix = 0u32;
        let mut prev = 0;
        for k in 1..=self.n {
            let e = w.get(k);
            prefix |= base::bit(e);
            let cur = self.table[prefix as usize];
            x[e - 1] = cur - prev;
            prev = cur;
        }
        LatticePoint(x)
    }

    /// Lowest coweight `v_e`.
    pub fn lowest_coweight(&self) -> LatticePoint {
        self.vertex_unchecked(&Permutation::identity(self.n).expect("valid n"))
    }

    /// Highest coweight `v_{w0}`.
    pub fn highest_coweight(&self) -> LatticePoint {
        self.vertex_unchecked(&Permutation::longest(self.n).expect("valid n"))
    }

    /// The vertex set, deduplicated and sorted. Sweeps all of `S_n`.
    pub fn vertices(&self) -> Result<Vec<LatticePoint>> {
        if self.n > VERTEX_SWEEP_MAX_N {
            return Err(Error::GroundSetSize {
                n: self.n,
                max: VERTEX_SWEEP_MAX_N,
            });
        }
        let mut out: Vec<LatticePoint> = Permutation::all(self.n)?
            .iter()
            .map(|w| self.vertex_unchecked(w))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let table = self.table.iter().zip(&other.table).map(|(a, b)| a + b).collect();
        Ok(Self::from_table_unchecked(self.n, table))
    }

    /// `a · P` for `a >= 1`.
    pub fn dilate(&self, a: i64) -> Result<Self> {
        if a <= 0 {
            return Err(Error::NonPositive(a));
        }
        Ok(Self::from_table_unchecked(
            self.n,
            self.table.iter().map(|x| a * x).collect(),
        ))
    }

    /// `P + t`.
    pub fn translate(&self, t: &LatticePoint) -> Result<Self> {
        if t.n() != self.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: t.n(),
            });
        }
        let table = self
            .table
            .iter()
            .enumerate()
            .map(|(m, x)| x + t.dot_mask(m as u32))
            .collect();
        Ok(Self::from_table_unchecked(self.n, table))
    }

    /// The polytope with every coordinate negated.
    pub fn negate(&self) -> Self {
        Self::from_table_unchecked(self.n, self.to_supermodular().into_iter().map(|x| -x).collect())
    }

    /// Support function of a finite point set, validated to be submodular and, for
    /// `n <= HULL_VERTEX_CHECK_MAX_N`, to have all its vertices among the points.
    pub fn hull_from_points(points: &[LatticePoint]) -> Result<Self> {
        let first = points.first().ok_or(Error::Empty("point set"))?;
        let n = first.n();
        base::check_n(n)?;
        if let Some(p) = points.iter().find(|p| p.n() != n) {
            return Err(Error::GroundSetMismatch { left: n, right: p.n() });
        }
        let table = (0..=full_mask(n))
            .map(|m| points.iter().map(|p| p.dot_mask(m)).max().expect("nonempty"))
            .collect();
        let hull = Self::from_submodular(n, table)?;
        let rank = hull.rank();
        if let Some(p) = points.iter().find(|p| p.0.iter().sum::<i64>() != rank) {
            return Err(Error::NotGeneralizedPermutahedron(p.0.clone()));
        }
        if n <= HULL_VERTEX_CHECK_MAX_N {
            let given: BTreeSet<&LatticePoint> = points.iter().collect();
            for w in Permutation::all(n)? {
                let v = hull.vertex_unchecked(&w);
                if !given.contains(&v) {
                    return Err(Error::NotGeneralizedPermutahedron(v.0));
                }
            }
        }
        Ok(hull)
    }

    /// Edges of `P` as vertex pairs, computed from adjacent GGMS vertices:
    /// `v_w` and `v_{w s_j}` are joined whenever they differ.
    pub fn edges(&self) -> Result<Vec<(LatticePoint, LatticePoint)>> {
        if self.n > VERTEX_SWEEP_MAX_N {
            return Err(Error::GroundSetSize {
                n: self.n,
                max: VERTEX_SWEEP_MAX_N,
            });
        }
        let mut out = Vec::new();
        for w in Permutation::all(self.n)? {
            let a = self.vertex_unchecked(&w);
            for j in 1..self.n {
                let b = self.vertex_unchecked(&w.swap_positions(j));
                if a < b {
                    out.push((a.clone(), b));
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// The complement identity `ν(S) = μ([n]) − μ([n] \ S)`; it is an involution and maps
/// submodular tables to supermodular ones and back.
pub fn dual_table(n: usize, table: &[i64]) -> Vec<i64> {
    let full = full_mask(n);
    (0..=full)
        .map(|m| table[full as usize] - table[(full & !m) as usize])
        .collect()
}
