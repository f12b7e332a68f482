//! Graphic zonotopes, graph associahedra, nestohedra and Pitman–Stanley polytopes.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::base::{self, bit, full_mask, mask_elements, Permutation, Subset};
use crate::error::{Error, Result};
use crate::polytope::GenPermutahedron;

/// A simple graph on the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<u32>,
}

impl SimpleGraph {
    /// Rejects loops, repeated edges, and vertices outside `[n]`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        base::check_n(n)?;
        let mut adjacency = vec![0u32; n + 1];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::ElementOutOfRange { element: v, n });
                }
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if adjacency[a] & bit(b) != 0 {
                return Err(Error::InvalidGraph(format!("repeated edge {{{a}, {b}}}")));
            }
            adjacency[a] |= bit(b);
            adjacency[b] |= bit(a);
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        Ok(SimpleGraph {
            n,
            edges: normalized,
            adjacency,
        })
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        Self::new(n, &edges)
    }

    /// `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|a| (a, a + 1)).collect();
        Self::new(n, &edges)
    }

    /// Vertex 1 joined to every other vertex.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (2..=n).map(|b| (1, b)).collect();
        Self::new(n, &edges)
    }

    /// The path `1 - ... - n` closed by the edge `{1, n}`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<_> = (1..n).map(|a| (a, a + 1)).collect();
        edges.push((1, n));
        Self::new(n, &edges)
    }

    /// Every simple graph on `[n]`, one per edge subset.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        base::check_n(n)?;
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        if pairs.len() > 20 {
            return Err(Error::GroundSetSize { n, max: 6 });
        }
        (0u32..1 << pairs.len())
            .map(|sel| {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(p, _)| sel >> p & 1 == 1)
                    .map(|(_, e)| *e)
                    .collect();
                Self::new(n, &edges)
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The graph with vertex `v` renamed `w(v)`.
    pub fn relabel(&self, w: &Permutation) -> Result<Self> {
        if w.n() != self.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: w.n(),
            });
        }
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (w.get(a), w.get(b))).collect();
        Self::new(self.n, &edges)
    }

    /// Number of edges with both ends in the vertex set `s`.
    pub fn induced_edge_count(&self, s: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| s & bit(a) != 0 && s & bit(b) != 0)
            .count()
    }

    /// The induced subgraph on the nonempty vertex set `s` is connected.
    pub fn is_connected_on(&self, s: u32) -> bool {
        if s == 0 {
            return false;
        }
        let mut reached = s & s.wrapping_neg();
        loop {
            let grown = mask_elements(reached).fold(reached, |m, v| m | (self.adjacency[v] & s));
            if grown == reached {
                return reached == s;
            }
            reached = grown;
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_on(full_mask(self.n))
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut left = full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = mask_elements(comp).fold(comp, |m, v| m | self.adjacency[v]);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }
}

/// The graphic zonotope, with supermodular function `μ(S) = |E(G|_S)|`.
pub fn graphic_zonotope(g: &SimpleGraph) -> GenPermutahedron {
    let sup = (0..=full_mask(g.n)).map(|s| g.induced_edge_count(s) as i64).collect();
    GenPermutahedron::from_supermodular(g.n, sup).expect("edge counts are supermodular")
}

/// The graphic zonotope as the Minkowski sum of its edge segments `[e_a, e_b]`.
pub fn graphic_zonotope_by_segments(g: &SimpleGraph) -> GenPermutahedron {
    sum_of_simplices(g.n, g.edges.iter().map(|&(a, b)| (bit(a) | bit(b), 1)))
}

/// Every component is a complete graph on an interval of `[n]`.
pub fn is_interval_complete(g: &SimpleGraph) -> bool {
    g.components().into_iter().all(|c| {
        let interval = (c >> c.trailing_zeros()) & ((c >> c.trailing_zeros()) + 1) == 0;
        let k = c.count_ones() as usize;
        interval && g.induced_edge_count(c) == k * (k - 1) / 2
    })
}

/// Vertex sets of size at least 2 inducing a connected subgraph, in lexicographic order.
pub fn tubes(g: &SimpleGraph) -> Vec<Subset> {
    let mut masks: Vec<u32> = (0..=full_mask(g.n))
        .filter(|s| s.count_ones() > 1 && g.is_connected_on(*s))
        .collect();
    masks.sort_by(|a, b| base::lex_cmp_masks(*a, *b));
    masks.into_iter().map(|m| Subset::from_mask_unchecked(g.n, m)).collect()
}

/// `Σ_τ Δ_τ` over the tubes of `G`.
pub fn graph_associahedron(g: &SimpleGraph) -> GenPermutahedron {
    sum_of_simplices(g.n, tubes(g).iter().map(|t| (t.mask(), 1)))
}

/// `Σ a_T Δ_T` as a submodular table: `Δ_T` contributes 1 on sets meeting `T`.
fn sum_of_simplices(n: usize, parts: impl Iterator<Item = (u32, i64)>) -> GenPermutahedron {
    let mut table = vec![0i64; 1 << n];
    for (t, a) in parts {
        for (s, v) in table.iter_mut().enumerate() {
            if s as u32 & t != 0 {
                *v += a;
            }
        }
    }
    GenPermutahedron::from_table_unchecked(n, table)
}

/// A family of subsets closed under unions of intersecting members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingSet {
    n: usize,
    members: Vec<u32>,
}

impl BuildingSet {
    pub fn new(n: usize, members: &[Subset]) -> Result<Self> {
        base::check_n(n)?;
        let mut masks = Vec::with_capacity(members.len());
        for m in members {
            if m.n() != n {
                return Err(Error::GroundSetMismatch { left: n, right: m.n() });
            }
            if m.is_empty() {
                return Err(Error::Empty("building set member"));
            }
            masks.push(m.mask());
        }
        masks.sort_by(|a, b| base::lex_cmp_masks(*a, *b));
        masks.dedup();
        for &s in &masks {
            for &t in &masks {
                if s & t != 0 && masks.binary_search_by(|m| base::lex_cmp_masks(*m, s | t)).is_err() {
                    return Err(Error::NotBuildingSet {
                        s: Subset::from_mask_unchecked(n, s),
                        t: Subset::from_mask_unchecked(n, t),
                    });
                }
            }
        }
        Ok(BuildingSet { n, members: masks })
    }

    /// The tubes of a graph.
    pub fn from_graph(g: &SimpleGraph) -> Self {
        BuildingSet {
            n: g.n,
            members: tubes(g).iter().map(Subset::mask).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> Vec<Subset> {
        self.members
            .iter()
            .map(|&m| Subset::from_mask_unchecked(self.n, m))
            .collect()
    }
}

/// `Σ_{B} Δ_B` over the members of the building set.
pub fn nestohedron(b: &BuildingSet) -> GenPermutahedron {
    sum_of_simplices(b.n, b.members.iter().map(|&m| (m, 1)))
}

/// `PS(a) = Σ a_k Δ_{[k]}`, with `μ(S) = a_m + ... + a_n` for `m = min S`.
pub fn pitman_stanley(a: &[i64]) -> Result<GenPermutahedron> {
    let n = a.len();
    base::check_n(n)?;
    if let Some(&neg) = a.iter().find(|&&x| x < 0) {
        return Err(Error::NonPositive(neg));
    }
    let tails: Vec<i64> = (0..=n).map(|m| a[m.min(n)..].iter().sum()).collect();
    let table = (0..=full_mask(n))
        .map(|s| if s == 0 { 0 } else { tails[s.trailing_zeros() as usize] })
        .collect();
    Ok(GenPermutahedron::from_table_unchecked(n, table))
}

/// `PS(a)` built as the Minkowski sum of the dilated simplices `a_k Δ_{[k]}`.
pub fn pitman_stanley_by_minkowski(a: &[i64]) -> Result<GenPermutahedron> {
    let n = a.len();
    base::check_n(n)?;
    if let Some(&neg) = a.iter().find(|&&x| x < 0) {
        return Err(Error::NonPositive(neg));
    }
    Ok(sum_of_simplices(
        n,
        a.iter().enumerate().map(|(k, &ak)| (full_mask(k + 1), ak)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::is_mv;

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::new(n, e).unwrap()
    }

    #[test]
    fn graph_validation() {
        assert!(matches!(SimpleGraph::new(3, &[(1, 1)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(
            SimpleGraph::new(3, &[(1, 2), (2, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(SimpleGraph::new(3, &[(1, 4)]).is_err());
        assert_eq!(SimpleGraph::all(3).unwrap().len(), 8);
        assert_eq!(SimpleGraph::path(4).unwrap().components(), vec![0b1111]);
        assert_eq!(
            SimpleGraph::new(4, &[(1, 3)]).unwrap().components(),
            vec![0b0101, 0b0010, 0b1000]
        );
    }

    #[test]
    fn zonotopes() {
        for n in 1..=5 {
            assert_eq!(
                graphic_zonotope(&SimpleGraph::complete(n).unwrap()),
                GenPermutahedron::permutahedron(&(0..n as i64).collect::<Vec<_>>()).unwrap()
            );
        }
        assert_eq!(
            graphic_zonotope(&SimpleGraph::edgeless(3).unwrap()),
            GenPermutahedron::origin(3).unwrap()
        );
        let single = SimpleGraph::new(3, &[(1, 3)]).unwrap();
        assert_eq!(graphic_zonotope(&single), GenPermutahedron::simplex(&s(3, &[1, 3])));
        for g in SimpleGraph::all(4).unwrap() {
            assert_eq!(graphic_zonotope(&g), graphic_zonotope_by_segments(&g));
        }
    }

    #[test]
    fn interval_complete_predicate() {
        assert!(is_interval_complete(&SimpleGraph::complete(4).unwrap()));
        assert!(is_interval_complete(&SimpleGraph::new(4, &[(1, 2), (3, 4)]).unwrap()));
        assert!(!is_interval_complete(&SimpleGraph::new(3, &[(1, 3)]).unwrap()));
        assert!(!is_interval_complete(&SimpleGraph::path(3).unwrap()));
    }

    #[test]
    fn tube_lists() {
        let k3 = SimpleGraph::complete(3).unwrap();
        assert_eq!(
            tubes(&k3),
            vec![s(3, &[1, 2]), s(3, &[1, 2, 3]), s(3, &[1, 3]), s(3, &[2, 3])]
        );
        assert!(tubes(&SimpleGraph::edgeless(3).unwrap()).is_empty());
        assert_eq!(
            tubes(&SimpleGraph::path(3).unwrap()),
            vec![s(3, &[1, 2]), s(3, &[1, 2, 3]), s(3, &[2, 3])]
        );
    }

    #[test]
    fn associahedra() {
        for n in 2..=5 {
            let kn = graph_associahedron(&SimpleGraph::complete(n).unwrap());
            assert!(is_mv(&kn));
            assert_eq!(kn.vertices().unwrap().len(), (1..=n).product::<usize>());
        }
        // Loday's associahedron on 4 vertices has Catalan(4) = 14 vertices
        let path = graph_associahedron(&SimpleGraph::path(4).unwrap());
        assert_eq!(path.vertices().unwrap().len(), 14);
        for g in SimpleGraph::all(4).unwrap() {
            let p = graph_associahedron(&g);
            let sup = p.to_supermodular();
            for m in 0..16u32 {
                let count = tubes(&g).iter().filter(|t| t.mask() & !m == 0).count();
                assert_eq!(sup[m as usize], count as i64);
            }
        }
    }

    #[test]
    fn building_sets() {
        let initial: Vec<Subset> = (1..=4).map(|k| Subset::initial(4, k).unwrap()).collect();
        let b = BuildingSet::new(4, &initial).unwrap();
        assert_eq!(nestohedron(&b), pitman_stanley(&[1, 1, 1, 1]).unwrap());
        assert!(matches!(
            BuildingSet::new(3, &[s(3, &[1, 2]), s(3, &[2, 3])]),
            Err(Error::NotBuildingSet { .. })
        ));
        let g = SimpleGraph::cycle(4).unwrap();
        assert_eq!(nestohedron(&BuildingSet::from_graph(&g)), graph_associahedron(&g));
        assert!(BuildingSet::new(4, &BuildingSet::from_graph(&g).members()).is_ok());
    }

    #[test]
    fn pitman_stanley_tables() {
        assert_eq!(
            pitman_stanley(&[0, 0, 0]).unwrap(),
            GenPermutahedron::origin(3).unwrap()
        );
        let ps = pitman_stanley(&[1, 1, 1]).unwrap();
        assert_eq!(ps.submodular(&s(3, &[2, 3])), 2);
        assert!(is_mv(&ps));
        for a in [[2, 0, 3, 1], [0, 5, 0, 0], [1, 2, 3, 4]] {
            assert_eq!(pitman_stanley(&a).unwrap(), pitman_stanley_by_minkowski(&a).unwrap());
        }
        assert!(pitman_stanley(&[1, -1]).is_err());
    }
}
