//! Ground-set combinatorics: subsets of `[n]`, the Gale order, permutations and
//! the strong and weak Bruhat orders.
//!
//! Elements of `[n] = {1, ..., n}` are 1-based everywhere in the public API;
//! element `i` is stored in bit `i - 1` of a mask.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set. Every set function fits in a dense `2^n` table.
pub const MAX_N: usize = 16;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::GroundSetSize { n, max: MAX_N })
    }
}

/// Mask with the low `n` bits set, i.e. the full ground set `[n]`.
#[inline]
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Bit for the 1-based element `i`.
#[inline]
pub fn bit(i: usize) -> u32 {
    1u32 << (i - 1)
}

/// Iterates the 1-based elements of a mask in increasing order.
pub fn mask_elements(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(t + 1)
        }
    })
}

/// Lexicographic comparison of the sorted element lists of two masks.
pub fn lex_cmp_masks(a: u32, b: u32) -> Ordering {
    mask_elements(a).cmp(mask_elements(b))
}

/// All masks over `[n]` of cardinality `k`, in lexicographic order of their element lists.
pub fn k_subsets(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (1..=k).collect();
    loop {
        out.push(idx.iter().fold(0, |m, &i| m | bit(i)));
        // advance to the next combination
        let mut pos = k;
        while pos > 0 && idx[pos - 1] == n - k + pos {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        idx[pos - 1] += 1;
        for j in pos..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// A subset of the ground set `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    mask: u32,
    n: u8,
}

impl Subset {
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut mask = 0;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            mask |= bit(e);
        }
        Ok(Subset { mask, n: n as u8 })
    }

    pub fn from_mask(n: usize, mask: u32) -> Result<Self> {
        check_n(n)?;
        if mask & !full_mask(n) != 0 {
            let element = 32 - (mask & !full_mask(n)).leading_zeros() as usize;
            return Err(Error::ElementOutOfRange { element, n });
        }
        Ok(Subset { mask, n: n as u8 })
    }

    /// Caller guarantees `mask` only uses the low `n` bits and `n <= MAX_N`.
    pub(crate) fn from_mask_unchecked(n: usize, mask: u32) -> Self {
        debug_assert!(mask & !full_mask(n) == 0);
        Subset { mask, n: n as u8 }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_mask(n, 0)
    }

    pub fn full(n: usize) -> Result<Self> {
        Self::from_mask(n, full_mask(n))
    }

    /// The initial interval `{1, ..., k}`.
    pub fn initial(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::IndexOutOfRange {
                index: k,
                min: 0,
                max: n,
            });
        }
        Self::from_mask(n, full_mask(k))
    }

    /// The final interval `{n-k+1, ..., n}`.
    pub fn terminal(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::IndexOutOfRange {
                index: k,
                min: 0,
                max: n,
            });
        }
        Self::from_mask(n, full_mask(n) & !full_mask(n - k))
    }

    #[inline]
    pub fn mask(&self) -> u32 {
        self.mask
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n() && self.mask & bit(i) != 0
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        mask_elements(self.mask)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elements().collect()
    }

    pub fn complement(&self) -> Self {
        Subset {
            mask: full_mask(self.n()) & !self.mask,
            n: self.n,
        }
    }

    /// `|self ∩ {i, ..., n}|`.
    pub fn count_at_least(&self, i: usize) -> usize {
        if i == 0 {
            return self.len();
        }
        (self.mask & !full_mask(i - 1)).count_ones() as usize
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on sorted element lists, ties broken by `n`.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp_masks(self.mask, other.mask).then(self.n.cmp(&other.n))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, e) in self.elements().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

fn check_same_level(a: &Subset, b: &Subset) -> Result<()> {
    if a.n != b.n {
        return Err(Error::GroundSetMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    if a.len() != b.len() {
        return Err(Error::CardinalityMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// Gale order on masks of equal cardinality, entrywise on sorted elements.
pub(crate) fn gale_leq_masks(a: u32, b: u32) -> bool {
    mask_elements(a).zip(mask_elements(b)).all(|(x, y)| x <= y)
}

/// Gale order: `a_j <= b_j` for the sorted elements of `A` and `B`.
pub fn gale_leq(a: &Subset, b: &Subset) -> Result<bool> {
    check_same_level(a, b)?;
    Ok(gale_leq_masks(a.mask, b.mask))
}

/// The slice form of the Gale order: `|A ∩ {i..n}| <= |B ∩ {i..n}|` for every `i`.
pub fn gale_leq_by_slices(a: &Subset, b: &Subset) -> Result<bool> {
    check_same_level(a, b)?;
    Ok((1..=a.n()).all(|i| a.count_at_least(i) <= b.count_at_least(i)))
}

/// The Gale interval `[A, B]`, sorted lexicographically.
pub fn gale_interval(a: &Subset, b: &Subset) -> Result<Vec<Subset>> {
    if !gale_leq(a, b)? {
        return Err(Error::NotGaleOrdered { lower: *a, upper: *b });
    }
    let n = a.n();
    Ok(k_subsets(n, a.len())
        .into_iter()
        .filter(|&c| gale_leq_masks(a.mask, c) && gale_leq_masks(c, b.mask))
        .map(|c| Subset::from_mask_unchecked(n, c))
        .collect())
}

/// Gale covers of `B`: every `B \ {i} ∪ {i+1}` with `i ∈ B`, `i+1 ∉ B`.
pub fn gale_covers(b: &Subset) -> Vec<Subset> {
    let n = b.n();
    (1..n)
        .filter(|&i| b.contains(i) && !b.contains(i + 1))
        .map(|i| Subset::from_mask_unchecked(n, (b.mask & !bit(i)) | bit(i + 1)))
        .collect()
}

/// A permutation of `[n]` in one-line notation. Composition is as functions:
/// `(u ∘ v)(k) = u(v(k))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    pub fn new(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        check_n(n)?;
        let mut seen = 0u32;
        for &v in one_line {
            if v == 0 || v > n || seen & bit(v) != 0 {
                return Err(Error::InvalidPermutation);
            }
            seen |= bit(v);
        }
        Ok(Permutation {
            one_line: one_line.iter().map(|&v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Permutation {
            one_line: (1..=n as u8).collect(),
        })
    }

    /// The longest element `w0 = n (n-1) ... 1`.
    pub fn longest(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Permutation {
            one_line: (1..=n as u8).rev().collect(),
        })
    }

    /// The adjacent transposition `s_i = (i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        let mut w = Self::identity(n)?;
        check_adjacent(n, i)?;
        w.one_line.swap(i - 1, i);
        Ok(w)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// `w(k)` for 1-based `k`.
    #[inline]
    pub fn get(&self, k: usize) -> usize {
        self.one_line[k - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.one_line.iter().map(|&v| v as usize).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (pos, &v) in self.one_line.iter().enumerate() {
            inv[v as usize - 1] = pos as u8 + 1;
        }
        Permutation { one_line: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::GroundSetMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            one_line: other.one_line.iter().map(|&v| self.one_line[v as usize - 1]).collect(),
        })
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(p, &v)| v as usize == p + 1)
    }

    /// `s_i ∘ self`: exchanges the values `i` and `i+1`.
    pub fn swap_values(&self, i: usize) -> Self {
        let a = i as u8;
        Permutation {
            one_line: self
                .one_line
                .iter()
                .map(|&v| {
                    if v == a {
                        a + 1
                    } else if v == a + 1 {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// `self ∘ s_i`: exchanges the entries in positions `i` and `i+1`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.one_line.swap(i - 1, i);
        w
    }

    /// `proj_k(w) = {w(1), ..., w(k)}`.
    pub fn proj(&self, k: usize) -> Result<Subset> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                index: k,
                min: 1,
                max: n,
            });
        }
        Ok(Subset::from_mask_unchecked(n, self.prefix_mask(k)))
    }

    pub(crate) fn prefix_mask(&self, k: usize) -> u32 {
        self.one_line[..k].iter().fold(0, |m, &v| m | bit(v as usize))
    }

    /// A reduced word `(i_1, ..., i_l)` with `self = s_{i_1} ∘ ... ∘ s_{i_l}`,
    /// obtained by repeatedly stripping a right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(j) = (1..w.n()).find(|&j| w.get(j) > w.get(j + 1)) {
            rev.push(j);
            w = w.swap_positions(j);
        }
        rev.reverse();
        rev
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Result<Vec<Permutation>> {
        let mut cur = Self::identity(n)?;
        let mut out = Vec::new();
        loop {
            out.push(cur.clone());
            if !next_permutation(&mut cur.one_line) {
                break;
            }
        }
        Ok(out)
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub(crate) fn check_adjacent(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n() > 9;
        for (p, v) in self.one_line.iter().enumerate() {
            if wide && p > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

fn check_same_n(u: &Permutation, v: &Permutation) -> Result<()> {
    if u.n() != v.n() {
        return Err(Error::GroundSetMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    Ok(())
}

pub(crate) fn bruhat_leq_unchecked(u: &Permutation, v: &Permutation) -> bool {
    (1..u.n()).all(|k| gale_leq_masks(u.prefix_mask(k), v.prefix_mask(k)))
}

/// Strong Bruhat order via the tableau criterion: `proj_k(u) <= proj_k(v)` in the
/// Gale order for every `k`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    check_same_n(u, v)?;
    Ok(bruhat_leq_unchecked(u, v))
}

/// Left weak order: `v` is reached from `u` by left multiplications `w ↦ s_i ∘ w`
/// (exchanging the values `i`, `i+1`), each increasing the length by one.
pub fn weak_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    check_same_n(u, v)?;
    let target_len = v.length();
    let start_len = u.length();
    if start_len > target_len {
        return Ok(false);
    }
    let mut seen = alloc::collections::BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(u.clone());
    queue.push_back((u.clone(), start_len));
    while let Some((w, len)) = queue.pop_front() {
        if &w == v {
            return Ok(true);
        }
        if len == target_len {
            continue;
        }
        for i in 1..w.n() {
            // s_i ∘ w is longer iff the value i appears before i+1
            let pos_i = w.one_line.iter().position(|&x| x as usize == i);
            let pos_j = w.one_line.iter().position(|&x| x as usize == i + 1);
            if pos_i < pos_j {
                let next = w.swap_values(i);
                if seen.insert(next.clone()) {
                    queue.push_back((next, len + 1));
                }
            }
        }
    }
    Ok(false)
}

/// All `w` with `u <= w <= v` in the strong Bruhat order, in lexicographic order.
pub fn bruhat_interval(u: &Permutation, v: &Permutation) -> Result<Vec<Permutation>> {
    if !bruhat_leq(u, v)? {
        return Err(Error::NotBruhatOrdered);
    }
    Ok(Permutation::all(u.n())?
        .into_iter()
        .filter(|w| bruhat_leq_unchecked(u, w) && bruhat_leq_unchecked(w, v))
        .collect())
}
