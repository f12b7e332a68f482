//! Exact polynomials in `x_1, ..., x_n`, divided differences and Demazure operators,
//! Schubert and key polynomials, and their Rothe and skyline diagrams.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::base::{self, bit, check_adjacent, Permutation};
use crate::error::{Error, Result};
use crate::polytope::{GenPermutahedron, LatticePoint};
use crate::schubitope::Diagram;

/// Rothe diagram orientation: `false` means column `j` collects the rows `i` of the
/// cells `(i, j)` with `i < w⁻¹(j)` and `j < w(i)`; `true` would use the transpose.
/// Fixed by requiring `Newton(X(w))` to be the Schubitope of the Rothe diagram.
pub const ROTHE_TRANSPOSED: bool = false;

/// A polynomial with integer coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], BigInt::one())
    }

    /// `coeff · x^exps`.
    pub fn monomial(exps: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    /// `x_i`.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: n,
            });
        }
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Ok(Self::monomial(exps, BigInt::one()))
    }

    /// Builds from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(n);
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: exps.len(),
                });
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }

    fn shift_var(&self, i: usize, by: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[i - 1] += by;
                (e, c.clone())
            })
            .collect();
        Polynomial { n: self.n, terms }
    }

    /// `x_i · f`.
    pub fn mul_var(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: self.n,
            });
        }
        Ok(self.shift_var(i, 1))
    }

    /// `s_i f`: `x_i` and `x_{i+1}` exchanged.
    pub fn swap_vars(&self, i: usize) -> Result<Self> {
        check_adjacent(self.n, i)?;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i - 1, i);
                (e, c.clone())
            })
            .collect();
        Ok(Polynomial { n: self.n, terms })
    }

    /// Exact quotient by `x_i - x_{i+1}`, by synthetic division in `x_i`.
    fn div_by_root_difference(&self, i: usize) -> Result<Self> {
        // coefficients of x_i^d, each a polynomial free of x_i
        let mut by_degree: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let d = core::mem::replace(&mut rest[i - 1], 0);
            by_degree
                .entry(d)
                .or_insert_with(|| Self::zero(self.n))
                .add_term(rest, c.clone());
        }
        let Some(&top) = by_degree.keys().next_back() else {
            return Ok(Self::zero(self.n));
        };
        let mut quotient = Self::zero(self.n);
        let mut carry = Self::zero(self.n);
        for d in (0..=top).rev() {
            let coeff = by_degree.remove(&d).unwrap_or_else(|| Self::zero(self.n));
            let value = coeff.add(&carry.shift_var(i + 1, 1));
            if d == 0 {
                if !value.is_zero() {
                    return Err(Error::Internal("nonzero remainder in divided difference".into()));
                }
            } else {
                quotient = quotient.add(&value.shift_var(i, d - 1));
                carry = value;
            }
        }
        Ok(quotient)
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        let diff = self.sub(&self.swap_vars(i)?);
        diff.div_by_root_difference(i)
    }

    /// `Λ_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})`.
    pub fn demazure(&self, i: usize) -> Result<Self> {
        let s = self.swap_vars(i)?;
        let num = self.shift_var(i, 1).sub(&s.shift_var(i + 1, 1));
        num.div_by_root_difference(i)
    }

    /// Exponent vectors with nonzero coefficient.
    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms
            .keys()
            .map(|e| LatticePoint::new(e.iter().map(|&a| a as i64).collect()))
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (pos, (e, c)) in self.terms.iter().rev().enumerate() {
            let constant = e.iter().all(|&a| a == 0);
            let mag = c.abs();
            if pos == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if constant || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            let mut first = constant || !mag.is_one();
            for (v, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if first {
                    f.write_str("*")?;
                }
                first = true;
                write!(f, "x{}", v + 1)?;
                if a > 1 {
                    write!(f, "^{a}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial(n={}, {self})", self.n)
    }
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
pub fn staircase(n: usize) -> Polynomial {
    Polynomial::monomial((0..n).map(|k| (n - 1 - k) as u32).collect(), BigInt::one())
}

/// `∂_{i_1} ∘ ... ∘ ∂_{i_l}` applied to `f`.
pub fn apply_divided_differences(f: &Polynomial, word: &[usize]) -> Result<Polynomial> {
    word.iter()
        .rev()
        .try_fold(f.clone(), |acc, &i| acc.divided_difference(i))
}

/// The Schubert polynomial `X(w) = ∂_u(x^δ)` with `u = w⁻¹ w₀`.
pub fn schubert(w: &Permutation) -> Polynomial {
    let n = w.n();
    let w0 = Permutation::longest(n).expect("valid n");
    let u = w.inverse().compose(&w0).expect("same n");
    apply_divided_differences(&staircase(n), &u.reduced_word()).expect("reduced word letters are in range")
}

/// The key polynomial `κ_α`.
pub fn key(alpha: &[u32]) -> Result<Polynomial> {
    base::check_n(alpha.len())?;
    Ok(key_rec(alpha))
}

fn key_rec(alpha: &[u32]) -> Polynomial {
    match (1..alpha.len()).find(|&i| alpha[i - 1] < alpha[i]) {
        None => Polynomial::monomial(alpha.to_vec(), BigInt::one()),
        Some(i) => {
            let mut swapped = alpha.to_vec();
            swapped.swap(i - 1, i);
            key_rec(&swapped).demazure(i).expect("index in range")
        }
    }
}

/// The Rothe diagram of `w`, empty columns dropped.
pub fn rothe(w: &Permutation) -> Diagram {
    rothe_oriented(w, ROTHE_TRANSPOSED)
}

fn rothe_oriented(w: &Permutation, transposed: bool) -> Diagram {
    let n = w.n();
    let inv = w.inverse();
    let mut columns = Vec::new();
    for j in 1..=n {
        let mut col = 0u32;
        for i in 1..=n {
            let (r, c) = if transposed { (j, i) } else { (i, j) };
            if r < inv.get(c) && c < w.get(r) {
                col |= bit(i);
            }
        }
        if col != 0 {
            columns.push(col);
        }
    }
    Diagram::from_masks(n, columns).expect("rows lie in [n]")
}

/// The skyline diagram of `α`: column `j` is `{i : α_i >= j}`.
pub fn skyline(alpha: &[u32]) -> Result<Diagram> {
    let n = alpha.len();
    let height = alpha.iter().copied().max().unwrap_or(0);
    let columns = (1..=height)
        .map(|j| (1..=n).filter(|&i| alpha[i - 1] >= j).fold(0, |m, i| m | bit(i)))
        .collect();
    Diagram::from_masks(n, columns)
}

/// The Newton polytope: convex hull of the support.
pub fn newton(f: &Polynomial) -> Result<GenPermutahedron> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    GenPermutahedron::hull_from_points(&f.support())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubitope::schubitope;

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c)))).unwrap()
    }

    fn p(one: &[usize]) -> Permutation {
        Permutation::new(one).unwrap()
    }

    /// `∂_i` on monomials by the geometric-series formula.
    fn divided_difference_by_formula(f: &Polynomial, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(f.n());
        for (e, c) in f.terms() {
            let (a, b) = (e[i - 1], e[i]);
            let (lo, hi, sign) = if a >= b { (b, a, 1) } else { (a, b, -1) };
            for t in 0..hi - lo {
                let mut x = e.clone();
                x[i - 1] = hi - 1 - t;
                x[i] = lo + t;
                if sign < 0 {
                    x.swap(i - 1, i);
                }
                out = out.add(&Polynomial::monomial(x, c * sign));
            }
        }
        out
    }

    #[test]
    fn divided_differences() {
        let sym = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert!(sym.divided_difference(1).unwrap().is_zero());
        assert_eq!(
            poly(2, &[(&[1, 0], 1)]).divided_difference(1).unwrap(),
            Polynomial::one(2)
        );
        assert_eq!(poly(2, &[(&[2, 0], 1)]).divided_difference(1).unwrap(), sym);
        let f = poly(
            3,
            &[(&[3, 1, 0], 2), (&[0, 2, 1], -5), (&[1, 1, 4], 7), (&[0, 0, 0], 3)],
        );
        for i in 1..3 {
            assert_eq!(f.divided_difference(i).unwrap(), divided_difference_by_formula(&f, i));
            assert!(f
                .divided_difference(i)
                .unwrap()
                .divided_difference(i)
                .unwrap()
                .is_zero());
        }
        assert!(f.divided_difference(3).is_err());
    }

    #[test]
    fn demazure_operators() {
        assert_eq!(Polynomial::one(2).demazure(1).unwrap(), Polynomial::one(2));
        let x1 = Polynomial::var(2, 1).unwrap();
        assert_eq!(x1.demazure(1).unwrap(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        let f = poly(3, &[(&[0, 2, 1], 1), (&[1, 0, 3], -2)]);
        for i in 1..3 {
            let once = f.demazure(i).unwrap();
            assert_eq!(once, f.mul_var(i).unwrap().divided_difference(i).unwrap());
            assert_eq!(once.demazure(i).unwrap(), once);
        }
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert(&Permutation::longest(3).unwrap()), staircase(3));
        assert_eq!(schubert(&Permutation::identity(4).unwrap()), Polynomial::one(4));
        assert_eq!(schubert(&p(&[1, 3, 2])), poly(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1)]));
        assert_eq!(schubert(&p(&[2, 1, 3])), poly(3, &[(&[1, 0, 0], 1)]));
        // X(1432) = x1^2 x2 + x1^2 x3 + x1 x2^2 + x1 x2 x3 + x2^2 x3
        assert_eq!(
            schubert(&p(&[1, 4, 3, 2])),
            poly(
                4,
                &[
                    (&[2, 1, 0, 0], 1),
                    (&[2, 0, 1, 0], 1),
                    (&[1, 2, 0, 0], 1),
                    (&[1, 1, 1, 0], 1),
                    (&[0, 2, 1, 0], 1)
                ]
            )
        );
    }

    /// A reduced word built by stripping the largest right descent each time.
    fn other_reduced_word(w: &Permutation) -> Vec<usize> {
        let mut w = w.clone();
        let mut rev = Vec::new();
        while let Some(j) = (1..w.n()).rev().find(|&j| w.get(j) > w.get(j + 1)) {
            rev.push(j);
            w = w.swap_positions(j);
        }
        rev.reverse();
        rev
    }

    #[test]
    fn schubert_is_independent_of_reduced_word() {
        let w0 = Permutation::longest(4).unwrap();
        for w in Permutation::all(4).unwrap() {
            let u = w.inverse().compose(&w0).unwrap();
            let word = other_reduced_word(&u);
            assert_eq!(word.len(), u.length());
            assert_eq!(
                apply_divided_differences(&staircase(4), &word).unwrap(),
                schubert(&w),
                "{w}"
            );
        }
    }

    #[test]
    fn key_examples() {
        assert_eq!(key(&[2, 1, 0]).unwrap(), poly(3, &[(&[2, 1, 0], 1)]));
        assert_eq!(key(&[0, 1]).unwrap(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        // κ_(0,0,2) = h_2(x1, x2, x3)
        let h2 = poly(
            3,
            &[
                (&[2, 0, 0], 1),
                (&[0, 2, 0], 1),
                (&[0, 0, 2], 1),
                (&[1, 1, 0], 1),
                (&[1, 0, 1], 1),
                (&[0, 1, 1], 1),
            ],
        );
        assert_eq!(key(&[0, 0, 2]).unwrap(), h2);
    }

    #[test]
    fn diagrams() {
        assert!(rothe(&Permutation::identity(3).unwrap()).is_empty());
        let staircase_diagram = Diagram::from_masks(3, vec![0b001, 0b011]).unwrap();
        assert_eq!(rothe(&Permutation::longest(3).unwrap()), staircase_diagram);
        assert_eq!(rothe(&p(&[1, 3, 2])), Diagram::from_masks(3, vec![0b010]).unwrap());
        for w in Permutation::all(4).unwrap() {
            assert_eq!(rothe(&w).cells(), w.length());
        }
        assert!(skyline(&[0, 0, 0]).unwrap().is_empty());
        assert_eq!(
            skyline(&[2, 1]).unwrap(),
            Diagram::from_masks(2, vec![0b11, 0b01]).unwrap()
        );
        assert_eq!(
            skyline(&[1, 2]).unwrap(),
            Diagram::from_masks(2, vec![0b11, 0b10]).unwrap()
        );
    }

    #[test]
    fn rothe_orientation_calibration() {
        let matches = |transposed: bool| {
            Permutation::all(3)
                .unwrap()
                .iter()
                .all(|w| newton(&schubert(w)).unwrap() == schubitope(&rothe_oriented(w, transposed)))
        };
        assert!(matches(ROTHE_TRANSPOSED));
        assert!(!matches(!ROTHE_TRANSPOSED));
    }

    #[test]
    fn newton_polytopes() {
        assert_eq!(
            newton(&poly(2, &[(&[3, 1], 4)])).unwrap(),
            GenPermutahedron::point(&LatticePoint::new(vec![3, 1])).unwrap()
        );
        let seg = newton(&poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])).unwrap();
        assert_eq!(seg.table(), &[0, 1, 1, 1]);
        assert_eq!(newton(&Polynomial::zero(2)), Err(Error::ZeroPolynomial));
        let w = p(&[1, 3, 2]);
        assert_eq!(newton(&schubert(&w)).unwrap(), schubitope(&rothe(&w)));
    }

    #[test]
    fn display() {
        let f = poly(3, &[(&[2, 0, 1], 1), (&[0, 1, 0], -3), (&[0, 0, 0], 2)]);
        assert_eq!(alloc::format!("{f}"), "x1^2*x3 - 3*x2 + 2");
    }
}
