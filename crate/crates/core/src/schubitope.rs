//! Diagrams and their Schubitopes: the parenthesis-word formula, the decomposition
//! into Schubert matroid polytopes, row swaps at ascents, and the orthodontic order.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::base::{self, bit, check_adjacent, full_mask, Subset};
use crate::error::{Error, Result};
use crate::matroid::{matroid_polytope, schubert_matroid};
use crate::mv;
use crate::polytope::GenPermutahedron;

/// A multiset of columns, each a subset of `[n]`. Columns are kept in lexicographic
/// order, so equal multisets compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    n: usize,
    columns: Vec<u32>,
}

impl Diagram {
    pub fn new(n: usize, columns: &[Subset]) -> Result<Self> {
        base::check_n(n)?;
        for c in columns {
            if c.n() != n {
                return Err(Error::GroundSetMismatch { left: n, right: c.n() });
            }
        }
        Ok(Self::from_masks_unchecked(
            n,
            columns.iter().map(Subset::mask).collect(),
        ))
    }

    pub fn from_masks(n: usize, columns: Vec<u32>) -> Result<Self> {
        base::check_n(n)?;
        for &c in &columns {
            Subset::from_mask(n, c)?;
        }
        Ok(Self::from_masks_unchecked(n, columns))
    }

    fn from_masks_unchecked(n: usize, mut columns: Vec<u32>) -> Self {
        columns.sort_by(|a, b| base::lex_cmp_masks(*a, *b));
        Diagram { n, columns }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_masks(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn column_masks(&self) -> &[u32] {
        &self.columns
    }

    pub fn columns(&self) -> Vec<Subset> {
        self.columns
            .iter()
            .map(|&c| Subset::from_mask_unchecked(self.n, c))
            .collect()
    }

    /// Number of cells.
    pub fn cells(&self) -> usize {
        self.columns.iter().map(|c| c.count_ones() as usize).sum()
    }

    fn column(&self, j: usize) -> Result<u32> {
        if j == 0 || j > self.columns.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                min: 1,
                max: self.columns.len(),
            });
        }
        Ok(self.columns[j - 1])
    }

    fn check_subset(&self, s: &Subset) -> Result<()> {
        if s.n() != self.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: s.n(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, c) in self.columns().iter().enumerate() {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram(n={}, {self})", self.n)
    }
}

/// The word of column `j` (1-based, lexicographic column order) for the subset `S`,
/// read from row 1 down: `(` for `i ∈ S` outside the column, `)` for a cell outside
/// `S`, `★` for a cell in `S`.
pub fn column_word(d: &Diagram, j: usize, s: &Subset) -> Result<String> {
    d.check_subset(s)?;
    let c = d.column(j)?;
    let mut word = String::new();
    for i in 1..=d.n {
        match (c & bit(i) != 0, s.contains(i)) {
            (false, true) => word.push('('),
            (true, false) => word.push(')'),
            (true, true) => word.push('★'),
            (false, false) => {}
        }
    }
    Ok(word)
}

/// Matched `()` pairs plus stars in the word of column `j`.
pub fn theta(d: &Diagram, j: usize, s: &Subset) -> Result<i64> {
    d.check_subset(s)?;
    Ok(theta_masks(d.n, d.column(j)?, s.mask()))
}

fn theta_masks(n: usize, column: u32, s: u32) -> i64 {
    let mut open = 0i64;
    let mut count = 0i64;
    for i in 1..=n {
        match (column & bit(i) != 0, s & bit(i) != 0) {
            (false, true) => open += 1,
            (true, false) if open > 0 => {
                open -= 1;
                count += 1;
            }
            (true, true) => count += 1,
            _ => {}
        }
    }
    count
}

/// The Schubitope `S_D`, with `μ(S) = Σ_j θ(j, S, D)`.
pub fn schubitope(d: &Diagram) -> GenPermutahedron {
    let table = (0..=full_mask(d.n))
        .map(|s| d.columns.iter().map(|&c| theta_masks(d.n, c, s)).sum())
        .collect();
    GenPermutahedron::from_table_unchecked(d.n, table)
}

/// The Schubitope as the Minkowski sum of the Schubert matroid polytopes `P(Ω_C)`
/// over the columns `C`.
pub fn schubitope_by_minkowski(d: &Diagram) -> GenPermutahedron {
    let mut table = alloc::vec![0i64; 1 << d.n];
    for c in d.columns() {
        for (acc, v) in table.iter_mut().zip(matroid_polytope(&schubert_matroid(&c)).table()) {
            *acc += v;
        }
    }
    GenPermutahedron::from_table_unchecked(d.n, table)
}

/// No column meets `{i, i+1}` in exactly `{i+1}`.
pub fn has_ascent(d: &Diagram, i: usize) -> Result<bool> {
    check_adjacent(d.n, i)?;
    Ok(has_ascent_unchecked(&d.columns, i))
}

fn has_ascent_unchecked(columns: &[u32], i: usize) -> bool {
    columns.iter().all(|&c| c & (bit(i) | bit(i + 1)) != bit(i + 1))
}

fn swap_mask(c: u32, i: usize) -> u32 {
    let lo = bit(i);
    let hi = bit(i + 1);
    let rest = c & !(lo | hi);
    rest | if c & lo != 0 { hi } else { 0 } | if c & hi != 0 { lo } else { 0 }
}

/// `s_i D`: rows `i` and `i+1` exchanged.
pub fn swap_rows(d: &Diagram, i: usize) -> Result<Diagram> {
    check_adjacent(d.n, i)?;
    Ok(Diagram::from_masks_unchecked(
        d.n,
        d.columns.iter().map(|&c| swap_mask(c, i)).collect(),
    ))
}

/// Number of columns containing `i` but not `i+1`.
pub fn ell(d: &Diagram, i: usize) -> Result<usize> {
    check_adjacent(d.n, i)?;
    Ok(d.columns
        .iter()
        .filter(|&&c| c & bit(i) != 0 && c & bit(i + 1) == 0)
        .count())
}

/// Every element of `a` is below every element of `b`.
fn elt_leq(a: u32, b: u32) -> bool {
    a == 0 || b == 0 || (31 - a.leading_zeros()) < b.trailing_zeros()
}

/// For every two columns, one set difference lies entirely below the other.
pub fn strongly_separated(d: &Diagram) -> bool {
    let cols = &d.columns;
    (0..cols.len()).all(|x| {
        (x + 1..cols.len()).all(|y| {
            let a = cols[x] & !cols[y];
            let b = cols[y] & !cols[x];
            elt_leq(a, b) || elt_leq(b, a)
        })
    })
}

/// One step down the orthodontic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthodonticMove {
    /// Remove the lexicographically minimal column, which equals `[k]`.
    RemoveInitial(usize),
    /// Replace `D` by `s_i D`, which has an ascent at `i`.
    Unswap(usize),
}

/// A sequence of moves taking `D` down to the empty diagram, or `None` when `∅` is not
/// below `D` in the orthodontic order. Breadth-first, so the chain is a shortest one.
pub fn orthodontic_chain(d: &Diagram) -> Option<Vec<OrthodonticMove>> {
    let mut parent: BTreeMap<Diagram, Option<(Diagram, OrthodonticMove)>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    parent.insert(d.clone(), None);
    queue.push_back(d.clone());
    while let Some(cur) = queue.pop_front() {
        if cur.is_empty() {
            let mut moves = Vec::new();
            let mut node = cur;
            while let Some(Some((prev, mv))) = parent.get(&node) {
                moves.push(*mv);
                node = prev.clone();
            }
            moves.reverse();
            return Some(moves);
        }
        for (next, mv) in orthodontic_predecessors(&cur) {
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((cur.clone(), mv)));
                queue.push_back(next);
            }
        }
    }
    None
}

fn orthodontic_predecessors(d: &Diagram) -> Vec<(Diagram, OrthodonticMove)> {
    let mut out = Vec::new();
    let first = d.columns[0];
    if first & (first + 1) == 0 {
        out.push((
            Diagram::from_masks_unchecked(d.n, d.columns[1..].to_vec()),
            OrthodonticMove::RemoveInitial(first.count_ones() as usize),
        ));
    }
    for i in 1..d.n {
        let swapped: Vec<u32> = d.columns.iter().map(|&c| swap_mask(c, i)).collect();
        let prev = Diagram::from_masks_unchecked(d.n, swapped);
        if prev != *d && has_ascent_unchecked(&prev.columns, i) {
            out.push((prev, OrthodonticMove::Unswap(i)));
        }
    }
    out
}

/// `e_i` applied `m` times.
pub fn raise_power(p: &GenPermutahedron, i: usize, m: usize) -> Result<GenPermutahedron> {
    mv::raise_times(p, i, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::is_mv;
    use alloc::vec;

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::new(n, e).unwrap()
    }

    fn diagram(n: usize, cols: &[&[usize]]) -> Diagram {
        Diagram::new(n, &cols.iter().map(|c| s(n, c)).collect::<Vec<_>>()).unwrap()
    }

    fn example() -> Diagram {
        diagram(5, &[&[1, 3], &[2, 4], &[2, 4], &[3, 5]])
    }

    /// Every diagram on `[n]` with at most `max_cols` columns, as sorted multisets.
    fn small_diagrams(n: usize, max_cols: usize) -> Vec<Diagram> {
        let mut out = vec![Diagram::empty(n).unwrap()];
        let mut frontier = vec![Vec::<u32>::new()];
        for _ in 0..max_cols {
            let mut next = Vec::new();
            for cols in &frontier {
                let start = cols.last().copied().unwrap_or(0);
                for c in start..=full_mask(n) {
                    let mut more = cols.clone();
                    more.push(c);
                    out.push(Diagram::from_masks(n, more.clone()).unwrap());
                    next.push(more);
                }
            }
            frontier = next;
        }
        out
    }

    #[test]
    fn words_and_theta() {
        let d = example();
        let full = s(5, &[1, 2, 3]);
        assert_eq!(column_word(&d, 1, &full).unwrap(), "★(★");
        assert_eq!(column_word(&d, 2, &full).unwrap(), "(★()");
        let total: i64 = (1..=4).map(|j| theta(&d, j, &full).unwrap()).sum();
        assert_eq!(total, 8);
        assert_eq!(schubitope(&d).submodular(&full), 8);
        assert_eq!(column_word(&d, 1, &s(5, &[])).unwrap(), "))");
        assert_eq!(theta(&d, 1, &s(5, &[])).unwrap(), 0);
        let blank = diagram(3, &[&[]]);
        assert_eq!(column_word(&blank, 1, &s(3, &[1, 3])).unwrap(), "((");
        assert_eq!(theta(&diagram(2, &[&[2]]), 1, &s(2, &[1])).unwrap(), 1);
        assert!(column_word(&d, 5, &full).is_err());
    }

    #[test]
    fn schubitope_examples() {
        assert_eq!(
            schubitope(&Diagram::empty(3).unwrap()),
            GenPermutahedron::origin(3).unwrap()
        );
        let interval = diagram(4, &[&[1, 2]]);
        assert_eq!(
            schubitope(&interval),
            GenPermutahedron::point(&crate::LatticePoint::indicator(&s(4, &[1, 2]))).unwrap()
        );
        assert_eq!(schubitope(&example()), schubitope_by_minkowski(&example()));
        for d in small_diagrams(4, 2) {
            assert_eq!(schubitope(&d), schubitope_by_minkowski(&d), "{d}");
        }
    }

    #[test]
    fn ascents_and_swaps() {
        assert!(has_ascent(&diagram(2, &[&[1]]), 1).unwrap());
        assert!(!has_ascent(&diagram(2, &[&[2]]), 1).unwrap());
        assert!(!has_ascent(&example(), 1).unwrap());
        assert!((1..5).all(|i| !has_ascent(&example(), i).unwrap()));
        assert_eq!(swap_rows(&diagram(2, &[&[1]]), 1).unwrap(), diagram(2, &[&[2]]));
        let d = diagram(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(swap_rows(&d, 1).unwrap(), diagram(4, &[&[2, 3], &[1, 4]]));
        assert_eq!(swap_rows(&swap_rows(&example(), 3).unwrap(), 3).unwrap(), example());
        assert_eq!(ell(&example(), 1).unwrap(), 1);
        assert_eq!(ell(&Diagram::empty(3).unwrap(), 2).unwrap(), 0);
        assert_eq!(ell(&diagram(2, &[&[1], &[1]]), 1).unwrap(), 2);
    }

    #[test]
    fn separation() {
        assert!(!strongly_separated(&diagram(4, &[&[1, 4], &[2, 3]])));
        assert!(strongly_separated(&diagram(4, &[&[1, 4]])));
        assert!(strongly_separated(&diagram(3, &[&[1, 2], &[1, 3]])));
        assert!(strongly_separated(&diagram(3, &[&[1, 2], &[1, 2]])));
    }

    #[test]
    fn orthodontic_examples() {
        assert_eq!(orthodontic_chain(&Diagram::empty(2).unwrap()), Some(vec![]));
        assert_eq!(
            orthodontic_chain(&diagram(2, &[&[1]])),
            Some(vec![OrthodonticMove::RemoveInitial(1)])
        );
        assert_eq!(
            orthodontic_chain(&diagram(2, &[&[2]])),
            Some(vec![OrthodonticMove::Unswap(1), OrthodonticMove::RemoveInitial(1)])
        );
        assert_eq!(orthodontic_chain(&diagram(4, &[&[1, 4], &[2, 3]])), None);
    }

    #[test]
    fn orthodontic_reachability_is_separation() {
        for n in 1..=4 {
            for d in small_diagrams(n, 3) {
                assert_eq!(orthodontic_chain(&d).is_some(), strongly_separated(&d), "{d}");
            }
        }
    }

    #[test]
    fn remark_witnesses() {
        assert!(is_mv(&schubitope(&diagram(4, &[&[1, 4], &[2, 3]]))));
        assert!(!is_mv(&schubitope(&diagram(3, &[&[1, 3], &[2]]))));
    }

    /// `e_i^k S_D` from the table of `S_D`, for `D` with an ascent at `i`.
    fn raised_closed_form(p: &GenPermutahedron, i: usize, l: i64, k: i64) -> Vec<i64> {
        (0..=full_mask(p.n()))
            .map(|m| {
                if m & bit(i) == 0 && m & bit(i + 1) != 0 {
                    p.value(m).max(p.value(m & !bit(i + 1) | bit(i)) - (l - k))
                } else {
                    p.value(m)
                }
            })
            .collect()
    }

    #[test]
    fn demazure_crystal_closed_form() {
        let d = diagram(3, &[&[1], &[1], &[1, 3]]);
        let p = schubitope(&d);
        let l = ell(&d, 1).unwrap();
        assert_eq!(l, 3);
        for k in 0..=l {
            let raised = raise_power(&p, 1, k).unwrap();
            assert_eq!(raised.table(), &raised_closed_form(&p, 1, l as i64, k as i64)[..]);
        }
        assert_eq!(raise_power(&p, 1, l).unwrap(), schubitope(&swap_rows(&d, 1).unwrap()));
        assert_eq!(raise_power(&p, 1, 0).unwrap(), p);
    }

    #[test]
    fn demazure_crystal_small() {
        for d in small_diagrams(4, 2) {
            let p = schubitope(&d);
            if !is_mv(&p) {
                continue;
            }
            for i in 1..4 {
                if !has_ascent(&d, i).unwrap() {
                    continue;
                }
                let l = ell(&d, i).unwrap();
                let swapped = schubitope(&swap_rows(&d, i).unwrap());
                assert_eq!(raise_power(&p, i, l).unwrap(), swapped, "{d} i={i}");
                let by_rows: Vec<i64> = (0..=full_mask(4))
                    .map(|m| {
                        if m & bit(i) == 0 && m & bit(i + 1) != 0 {
                            p.value(m & !bit(i + 1) | bit(i))
                        } else {
                            p.value(m)
                        }
                    })
                    .collect();
                assert_eq!(swapped.table(), &by_rows[..]);
            }
        }
    }
}
