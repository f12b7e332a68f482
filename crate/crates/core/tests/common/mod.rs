#![allow(dead_code)]

use mvlab_core::base::k_subsets;
use mvlab_core::matroid::{lattice_path_matroid, matroid_polytope};
use mvlab_core::{GenPermutahedron, LatticePoint, Permutation, Subset};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize, k: usize) -> Subset {
    let all = k_subsets(n, k);
    Subset::from_mask(n, all[rng.gen_range(0..all.len())]).unwrap()
}

/// A random pair `A <= B` in the Gale order on `k`-subsets of `[n]`.
pub fn random_gale_pair<R: Rng>(rng: &mut R, n: usize, k: usize) -> (Subset, Subset) {
    loop {
        let a = random_subset(rng, n, k);
        let b = random_subset(rng, n, k);
        if mvlab_core::base::gale_leq(&a, &b).unwrap() {
            return (a, b);
        }
    }
}

/// A random submodular table on `[n]`: a small nonnegative combination of simplices,
/// possibly a lattice path matroid polytope, and a translation.
pub fn random_gp<R: Rng>(rng: &mut R, n: usize) -> GenPermutahedron {
    let mut p = GenPermutahedron::origin(n).unwrap();
    for _ in 0..rng.gen_range(0..=2) {
        let t = Subset::from_mask(n, rng.gen_range(1..1u32 << n)).unwrap();
        p = p.minkowski_sum(&GenPermutahedron::simplex(&t)).unwrap();
    }
    if n >= 2 && rng.gen_bool(0.5) {
        let k = rng.gen_range(1..n);
        let (a, b) = random_gale_pair(rng, n, k);
        p = p
            .minkowski_sum(&matroid_polytope(&lattice_path_matroid(&a, &b).unwrap()))
            .unwrap();
    }
    let shift = LatticePoint::new((0..n).map(|_| rng.gen_range(-2..=2)).collect());
    p.translate(&shift).unwrap()
}

/// Lattice points of `P`, found by a pruned search of its bounding box.
pub fn lattice_points(p: &GenPermutahedron) -> Vec<Vec<i64>> {
    let n = p.n();
    let full = (1u32 << n) - 1;
    let lo: Vec<i64> = (0..n).map(|j| p.value(full) - p.value(full & !(1 << j))).collect();
    let hi: Vec<i64> = (0..n).map(|j| p.value(1 << j)).collect();
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    fn rec(p: &GenPermutahedron, j: usize, x: &mut Vec<i64>, lo: &[i64], hi: &[i64], out: &mut Vec<Vec<i64>>) {
        let n = x.len();
        if j == n {
            if x.iter().sum::<i64>() == p.rank() {
                out.push(x.clone());
            }
            return;
        }
        for v in lo[j]..=hi[j] {
            x[j] = v;
            // every inequality whose largest element is j + 1
            let ok = (0u32..1 << j).all(|rest| {
                let s = rest | 1 << j;
                let sum: i64 = (0..=j).filter(|&e| s >> e & 1 == 1).map(|e| x[e]).sum();
                sum <= p.value(s)
            });
            if ok {
                rec(p, j + 1, x, lo, hi, out);
            }
        }
    }
    rec(p, 0, &mut x, &lo, &hi, &mut out);
    out
}

/// The unique minimizer of `Σ_j w⁻¹(j) x_j` over the given points, if unique.
pub fn argmin_vertex(points: &[Vec<i64>], w: &Permutation) -> Option<Vec<i64>> {
    let inv = w.inverse();
    let score = |x: &Vec<i64>| -> i64 { x.iter().enumerate().map(|(j, &v)| inv.get(j + 1) as i64 * v).sum() };
    let best = points.iter().map(score).min()?;
    let mut winners = points.iter().filter(|x| score(x) == best);
    let first = winners.next()?.clone();
    winners.next().is_none().then_some(first)
}
