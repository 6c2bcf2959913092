//! Chevalley-Eilenberg cochains with trivial coefficients in degrees 1-3 and
//! the differentials d¹, d².
//!
//! Wedge indices are kept sorted ascending. Pairs and triples are laid out in
//! lexicographic order, which is also the coordinate order of every matrix
//! built from these spaces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::{Gf, Matrix};

/// Sorted pairs `(i, j)`, `i < j < n`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Sorted triples `(s, t, u)`, `s < t < u < n`, in lexicographic order.
pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    (0..n)
        .flat_map(|s| (s + 1..n).flat_map(move |t| (t + 1..n).map(move |u| (s, t, u))))
        .collect()
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn triple_count(n: usize) -> usize {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// Position of the sorted pair `i < j` in [`pairs`].
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Position of the sorted triple `s < t < u` in [`triples`].
pub fn triple_index(n: usize, s: usize, t: usize, u: usize) -> usize {
    debug_assert!(s < t && t < u && u < n);
    let before_s: usize = (0..s).map(|a| pair_count(n - 1 - a)).sum();
    let m = n - 1 - s;
    before_s + pair_index(m, t - s - 1, u - s - 1)
}

/// Weight of a wedge basis element given by 1-based indices: their sum.
pub fn weight(indices: &[usize]) -> usize {
    indices.iter().sum()
}

/// Sorts `idx` in place and returns the sign of the sorting permutation, or
/// `None` if an index repeats.
pub(crate) fn sort_with_sign(idx: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for a in 0..idx.len() {
        for b in 0..idx.len() - 1 - a {
            if idx[b] == idx[b + 1] {
                return None;
            }
            if idx[b] > idx[b + 1] {
                idx.swap(b, b + 1);
                negative = !negative;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(negative)
}

/// One `{indices, coefficient}` record of the JSON form; indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainTerm {
    pub indices: Vec<usize>,
    pub coefficient: u32,
}

/// Renders `Σ c·label` in the usual notation, e.g. `e^{2,5} - e^{3,4}`.
pub(crate) fn render_terms<I>(gf: Gf, terms: I) -> String
where
    I: IntoIterator<Item = (String, u32)>,
{
    let mut out = String::new();
    for (label, c) in terms {
        if c == 0 {
            continue;
        }
        let s = gf.signed(c);
        let mag = s.unsigned_abs();
        let coeff = if mag == 1 { String::new() } else { mag.to_string() };
        if out.is_empty() {
            if s < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if s < 0 { " - " } else { " + " });
        }
        out.push_str(&coeff);
        out.push_str(&label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn wedge_label(prefix: &str, indices: &[usize]) -> String {
    if indices.len() == 1 {
        format!("{prefix}^{}", indices[0] + 1)
    } else {
        let inner: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
        format!("{prefix}^{{{}}}", inner.join(","))
    }
}

/// A 1-cochain `ψ = Σ μ_k e^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain1 {
    gf: Gf,
    coeffs: Vec<u32>,
}

impl Cochain1 {
    pub fn zero(gf: Gf, dim: usize) -> Self {
        Cochain1 {
            gf,
            coeffs: vec![0; dim],
        }
    }

    pub fn from_coeffs(gf: Gf, coeffs: Vec<u32>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| c % gf.modulus()).collect();
        Cochain1 { gf, coeffs }
    }

    /// The dual basis element `e^k` (0-based `k`).
    pub fn basis(gf: Gf, dim: usize, k: usize) -> Self {
        let mut c = Cochain1::zero(gf, dim);
        c.coeffs[k] = 1;
        c
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> Gf {
        self.gf
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn eval(&self, g: &Element) -> u32 {
        self.gf.dot(&self.coeffs, g.coeffs())
    }

    pub fn terms(&self) -> Vec<CochainTerm> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| CochainTerm {
                indices: vec![k + 1],
                coefficient: c,
            })
            .collect()
    }

    pub fn weight(&self, weights: &[i64]) -> Option<i64> {
        homogeneous_weight(self.coeffs.iter().enumerate().map(|(k, &c)| (c, weights[k])))
    }
}

impl std::fmt::Display for Cochain1 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| (wedge_label("e", &[k]), c));
        f.write_str(&render_terms(self.gf, terms))
    }
}

/// A 2-cochain `φ = Σ σ_{ij} e^{i,j}` on sorted pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain2 {
    gf: Gf,
    dim: usize,
    coeffs: Vec<u32>,
}

impl Cochain2 {
    pub fn zero(gf: Gf, dim: usize) -> Self {
        Cochain2 {
            gf,
            dim,
            coeffs: vec![0; pair_count(dim)],
        }
    }

    /// Coordinates in [`pairs`] order.
    pub fn from_coords(gf: Gf, dim: usize, coords: Vec<u32>) -> Result<Self> {
        if coords.len() != pair_count(dim) {
            return Err(Error::DimensionMismatch {
                expected: pair_count(dim),
                found: coords.len(),
            });
        }
        let coeffs = coords.into_iter().map(|c| c % gf.modulus()).collect();
        Ok(Cochain2 { gf, dim, coeffs })
    }

    /// `Σ c · e^{i,j}` from 1-based index pairs in any order; swapped pairs
    /// contribute with a sign and repeated indices contribute nothing.
    pub fn from_terms(gf: Gf, dim: usize, terms: &[(usize, usize, i64)]) -> Result<Self> {
        let mut c = Cochain2::zero(gf, dim);
        for &(i, j, v) in terms {
            if i == 0 || j == 0 || i > dim || j > dim {
                return Err(Error::IndexOutOfRange(format!("e^{{{i},{j}}} in dimension {dim}")));
            }
            c.add_to(i - 1, j - 1, gf.elem(v));
        }
        Ok(c)
    }

    /// The basis cochain `e^{i,j}` (0-based, any order).
    pub fn basis(gf: Gf, dim: usize, i: usize, j: usize) -> Self {
        let mut c = Cochain2::zero(gf, dim);
        c.add_to(i, j, 1);
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Gf {
        self.gf
    }

    pub fn coords(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `σ_{ij}`, with `σ_{ji} = -σ_{ij}` and `σ_{ii} = 0`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs[pair_index(self.dim, i, j)],
            std::cmp::Ordering::Greater => self.gf.neg(self.coeffs[pair_index(self.dim, j, i)]),
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: u32) {
        let gf = self.gf;
        match i.cmp(&j) {
            std::cmp::Ordering::Less => {
                let k = pair_index(self.dim, i, j);
                self.coeffs[k] = gf.add(self.coeffs[k], v);
            }
            std::cmp::Ordering::Greater => {
                let k = pair_index(self.dim, j, i);
                self.coeffs[k] = gf.sub(self.coeffs[k], v);
            }
            std::cmp::Ordering::Equal => {}
        }
    }

    pub fn add(&self, other: &Cochain2) -> Cochain2 {
        Cochain2 {
            gf: self.gf,
            dim: self.dim,
            coeffs: self.gf.add_vec(&self.coeffs, &other.coeffs),
        }
    }

    pub fn scale(&self, a: u32) -> Cochain2 {
        Cochain2 {
            gf: self.gf,
            dim: self.dim,
            coeffs: self.gf.scale(a, &self.coeffs),
        }
    }

    /// `φ(x ∧ y) = Σ_{i<j} σ_{ij} (x_i y_j - x_j y_i)`.
    pub fn eval(&self, x: &Element, y: &Element) -> u32 {
        let gf = self.gf;
        let mut acc = 0;
        for (k, (i, j)) in pairs(self.dim).into_iter().enumerate() {
            let s = self.coeffs[k];
            if s == 0 {
                continue;
            }
            let m = gf.sub(gf.mul(x.0[i], y.0[j]), gf.mul(x.0[j], y.0[i]));
            acc = gf.mul_add(acc, s, m);
        }
        acc
    }

    pub fn terms(&self) -> Vec<CochainTerm> {
        pairs(self.dim)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|((i, j), &c)| CochainTerm {
                indices: vec![i + 1, j + 1],
                coefficient: c,
            })
            .collect()
    }

    pub fn from_json_terms(gf: Gf, dim: usize, terms: &[CochainTerm]) -> Result<Self> {
        let mut c = Cochain2::zero(gf, dim);
        for t in terms {
            let [i, j] = t.indices[..] else {
                return Err(Error::Parse(format!("expected 2 indices, got {:?}", t.indices)));
            };
            if i == 0 || j == 0 || i > dim || j > dim {
                return Err(Error::IndexOutOfRange(format!("e^{{{i},{j}}}")));
            }
            c.add_to(i - 1, j - 1, t.coefficient % gf.modulus());
        }
        Ok(c)
    }

    /// Common weight `w_i + w_j` of all nonzero terms, if homogeneous.
    pub fn weight(&self, weights: &[i64]) -> Option<i64> {
        homogeneous_weight(
            pairs(self.dim)
                .into_iter()
                .zip(&self.coeffs)
                .map(|((i, j), &c)| (c, weights[i] + weights[j])),
        )
    }

    /// Prints with a custom symbol (`e` for the cochain, `ẽ` for its tilde map).
    pub fn render_with(&self, prefix: &str) -> String {
        let terms = pairs(self.dim)
            .into_iter()
            .zip(&self.coeffs)
            .map(|((i, j), &c)| (wedge_label(prefix, &[i, j]), c));
        render_terms(self.gf, terms)
    }
}

impl std::fmt::Display for Cochain2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render_with("e"))
    }
}

/// A 3-cochain on sorted triples.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain3 {
    gf: Gf,
    dim: usize,
    coeffs: Vec<u32>,
}

impl Cochain3 {
    pub fn zero(gf: Gf, dim: usize) -> Self {
        Cochain3 {
            gf,
            dim,
            coeffs: vec![0; triple_count(dim)],
        }
    }

    pub fn from_coords(gf: Gf, dim: usize, coords: Vec<u32>) -> Result<Self> {
        if coords.len() != triple_count(dim) {
            return Err(Error::DimensionMismatch {
                expected: triple_count(dim),
                found: coords.len(),
            });
        }
        let coeffs = coords.into_iter().map(|c| c % gf.modulus()).collect();
        Ok(Cochain3 { gf, dim, coeffs })
    }

    /// `Σ c · e^{s,t,u}` from 1-based triples in any order: odd permutations
    /// negate, repeated indices vanish.
    pub fn from_terms(gf: Gf, dim: usize, terms: &[([usize; 3], i64)]) -> Result<Self> {
        let mut c = Cochain3::zero(gf, dim);
        for (idx, v) in terms {
            if idx.iter().any(|&i| i == 0 || i > dim) {
                return Err(Error::IndexOutOfRange(format!("e^{idx:?} in dimension {dim}")));
            }
            let mut z = [idx[0] - 1, idx[1] - 1, idx[2] - 1];
            c.add_to(&mut z, gf.elem(*v));
        }
        Ok(c)
    }

    fn add_to(&mut self, idx: &mut [usize; 3], v: u32) {
        let Some(negative) = sort_with_sign(idx) else {
            return;
        };
        let k = triple_index(self.dim, idx[0], idx[1], idx[2]);
        self.coeffs[k] = if negative {
            self.gf.sub(self.coeffs[k], v)
        } else {
            self.gf.add(self.coeffs[k], v)
        };
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Coefficient on `e^{s,t,u}` for indices in any order.
    pub fn get(&self, s: usize, t: usize, u: usize) -> u32 {
        let mut idx = [s, t, u];
        match sort_with_sign(&mut idx) {
            None => 0,
            Some(negative) => {
                let c = self.coeffs[triple_index(self.dim, idx[0], idx[1], idx[2])];
                if negative {
                    self.gf.neg(c)
                } else {
                    c
                }
            }
        }
    }

    /// `α(x ∧ y ∧ z)`: sum over sorted triples of the coefficient times the
    /// 3x3 minor of `(x, y, z)` on those rows.
    pub fn eval(&self, x: &Element, y: &Element, z: &Element) -> u32 {
        let gf = self.gf;
        let mut acc = 0;
        for (k, (s, t, u)) in triples(self.dim).into_iter().enumerate() {
            let c = self.coeffs[k];
            if c == 0 {
                continue;
            }
            let m = |a: usize, b: usize, d: usize| {
                gf.mul(x.0[a], gf.mul(y.0[b], z.0[d]))
            };
            let plus = gf.add(gf.add(m(s, t, u), m(t, u, s)), m(u, s, t));
            let minus = gf.add(gf.add(m(s, u, t), m(t, s, u)), m(u, t, s));
            acc = gf.mul_add(acc, c, gf.sub(plus, minus));
        }
        acc
    }

    pub fn terms(&self) -> Vec<CochainTerm> {
        triples(self.dim)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|((s, t, u), &c)| CochainTerm {
                indices: vec![s + 1, t + 1, u + 1],
                coefficient: c,
            })
            .collect()
    }

    pub fn weight(&self, weights: &[i64]) -> Option<i64> {
        homogeneous_weight(
            triples(self.dim)
                .into_iter()
                .zip(&self.coeffs)
                .map(|((s, t, u), &c)| (c, weights[s] + weights[t] + weights[u])),
        )
    }
}

impl std::fmt::Display for Cochain3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms = triples(self.dim)
            .into_iter()
            .zip(&self.coeffs)
            .map(|((s, t, u), &c)| (wedge_label("e", &[s, t, u]), c));
        f.write_str(&render_terms(self.gf, terms))
    }
}

/// `Some(w)` when every nonzero coefficient sits on weight `w`; `None` for
/// mixed weights. The zero cochain is reported as `None` as well.
fn homogeneous_weight(items: impl Iterator<Item = (u32, i64)>) -> Option<i64> {
    let mut found = None;
    for (c, w) in items {
        if c == 0 {
            continue;
        }
        match found {
            None => found = Some(w),
            Some(f) if f != w => return None,
            _ => {}
        }
    }
    found
}

/// `d¹(ψ)(e_i ∧ e_j) = ψ([e_i, e_j])`.
pub fn d1(algebra: &LieAlgebra, psi: &Cochain1) -> Cochain2 {
    let gf = algebra.field();
    let n = algebra.dim();
    let mut out = Cochain2::zero(gf, n);
    for (i, j, v) in algebra.brackets() {
        out.coeffs[pair_index(n, i, j)] = gf.dot(psi.coeffs(), v);
    }
    out
}

/// `d²(φ)(x, y, z) = φ([x,y] ∧ z) - φ([x,z] ∧ y) + φ([y,z] ∧ x)` on basis
/// triples, straight from the structure constants.
pub fn d2(algebra: &LieAlgebra, phi: &Cochain2) -> Cochain3 {
    let gf = algebra.field();
    let n = algebra.dim();
    // φ([e_a, e_b] ∧ e_c)
    let bracket_against = |a: usize, b: usize, c: usize| -> u32 {
        algebra
            .basis_bracket(a, b)
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &ck)| gf.mul_add(acc, ck, phi.get(k, c)))
    };
    let mut out = Cochain3::zero(gf, n);
    for (idx, (l, m, r)) in triples(n).into_iter().enumerate() {
        let val = gf.add(
            gf.sub(bracket_against(l, m, r), bracket_against(l, r, m)),
            bracket_against(m, r, l),
        );
        out.coeffs[idx] = val;
    }
    out
}

/// Matrix of d¹ in the bases `e^k` (columns) and `e^{i,j}` (rows).
pub fn d1_matrix(algebra: &LieAlgebra) -> Matrix {
    let gf = algebra.field();
    let n = algebra.dim();
    let cols: Vec<Vec<u32>> = (0..n)
        .map(|k| d1(algebra, &Cochain1::basis(gf, n, k)).coeffs)
        .collect();
    Matrix::from_columns(gf, pair_count(n), &cols)
}

/// Matrix of d² in the bases `e^{i,j}` (columns) and `e^{s,t,u}` (rows).
pub fn d2_matrix(algebra: &LieAlgebra) -> Matrix {
    let gf = algebra.field();
    let n = algebra.dim();
    let cols: Vec<Vec<u32>> = pairs(n)
        .into_iter()
        .map(|(i, j)| d2(algebra, &Cochain2::basis(gf, n, i, j)).coeffs)
        .collect();
    Matrix::from_columns(gf, triple_count(n), &cols)
}

/// `φ_k = e^{2,k-2} - e^{3,k-3} + ... + (-1)^⌊k/2⌋ e^{⌊k/2⌋, k-⌊k/2⌋}` in
/// m0(p), for odd `k` with `5 ≤ k ≤ p + 2`.
pub fn phi_k(p: u32, k: usize) -> Result<Cochain2> {
    let gf = Gf::new(p)?;
    let n = p as usize;
    if k < 5 || k.is_multiple_of(2) || k > n + 2 {
        return Err(Error::WeightOutOfRange { k, max: n + 2 });
    }
    let terms: Vec<(usize, usize, i64)> = (2..=k / 2)
        .map(|i| (i, k - i, if i % 2 == 0 { 1 } else { -1 }))
        .collect();
    Cochain2::from_terms(gf, n, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Gf {
        Gf::new(p).unwrap()
    }

    #[test]
    fn index_layouts() {
        for n in 0..9 {
            let ps = pairs(n);
            assert_eq!(ps.len(), pair_count(n));
            for (k, &(i, j)) in ps.iter().enumerate() {
                assert_eq!(pair_index(n, i, j), k);
            }
            let ts = triples(n);
            assert_eq!(ts.len(), triple_count(n));
            for (k, &(s, t, u)) in ts.iter().enumerate() {
                assert_eq!(triple_index(n, s, t, u), k);
            }
        }
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&[1, 4]), 5);
        assert_eq!(weight(&[3]), 3);
        assert_eq!(weight(&[2, 3, 4]), 9);
    }

    #[test]
    fn d1_examples() {
        for p in [3u32, 5, 7, 11] {
            let a = LieAlgebra::m0(p).unwrap();
            let n = p as usize;
            assert!(d1(&a, &Cochain1::basis(gf(p), n, 0)).is_zero());
            assert!(d1(&a, &Cochain1::basis(gf(p), n, 1)).is_zero());
            for k in 3..=n {
                assert_eq!(
                    d1(&a, &Cochain1::basis(gf(p), n, k - 1)),
                    Cochain2::basis(gf(p), n, 0, k - 2)
                );
            }
        }
        let a = LieAlgebra::m0(7).unwrap();
        let psi = Cochain1::from_coeffs(gf(7), vec![0, 0, 1, 0, 2, 0, 0]);
        let expect = Cochain2::from_terms(gf(7), 7, &[(1, 2, 1), (1, 4, 2)]).unwrap();
        assert_eq!(d1(&a, &psi), expect);
    }

    #[test]
    fn d2_examples() {
        let a7 = LieAlgebra::m0(7).unwrap();
        for j in 2..=7 {
            assert!(d2(&a7, &Cochain2::basis(gf(7), 7, 0, j - 1)).is_zero());
        }
        let a5 = LieAlgebra::m0(5).unwrap();
        assert!(d2(&a5, &Cochain2::basis(gf(5), 5, 1, 2)).is_zero());
        let e34 = Cochain2::basis(gf(7), 7, 2, 3);
        let e124 = Cochain3::from_terms(gf(7), 7, &[([1, 2, 4], 1)]).unwrap();
        assert_eq!(d2(&a7, &e34), e124);
    }

    #[test]
    fn phi_k_examples() {
        assert_eq!(phi_k(3, 5).unwrap().to_string(), "e^{2,3}");
        assert_eq!(phi_k(7, 7).unwrap().to_string(), "e^{2,5} - e^{3,4}");
        assert_eq!(phi_k(7, 9).unwrap().to_string(), "e^{2,7} - e^{3,6} + e^{4,5}");
        assert!(phi_k(7, 11).is_err());
        assert!(phi_k(7, 6).is_err());
        assert!(phi_k(7, 3).is_err());
        for p in [5u32, 7, 11, 13] {
            let a = LieAlgebra::m0(p).unwrap();
            for k in (5..=p as usize + 2).step_by(2) {
                let phi = phi_k(p, k).unwrap();
                assert_eq!(phi.weight(a.weights()), Some(k as i64));
                assert!(d2(&a, &phi).is_zero(), "φ_{k} at p = {p}");
            }
        }
    }

    #[test]
    fn antisymmetric_access() {
        let g = gf(5);
        let mut c = Cochain2::zero(g, 4);
        c.add_to(2, 0, 1);
        assert_eq!(c.get(0, 2), 4);
        assert_eq!(c.get(2, 0), 1);
        assert_eq!(c.get(1, 1), 0);
        let t = Cochain3::from_terms(g, 4, &[([3, 1, 2], 1), ([1, 1, 2], 3)]).unwrap();
        assert_eq!(t.get(0, 1, 2), 1);
        assert_eq!(t.get(1, 0, 2), 4);
        assert_eq!(t.terms().len(), 1);
    }

    #[test]
    fn evaluation_on_basis() {
        let g = gf(7);
        let phi = Cochain2::from_terms(g, 4, &[(1, 3, 2)]).unwrap();
        let e = |k| Element::basis(4, k);
        assert_eq!(phi.eval(&e(0), &e(2)), 2);
        assert_eq!(phi.eval(&e(2), &e(0)), 5);
        let alpha = Cochain3::from_terms(g, 4, &[([1, 2, 4], 3)]).unwrap();
        assert_eq!(alpha.eval(&e(0), &e(1), &e(3)), 3);
        assert_eq!(alpha.eval(&e(1), &e(0), &e(3)), 4);
        assert_eq!(alpha.eval(&e(3), &e(0), &e(1)), 3);
    }

    #[test]
    fn rendering() {
        let g = gf(3);
        let c = Cochain2::from_terms(g, 3, &[(1, 3, 2), (2, 3, 1)]).unwrap();
        assert_eq!(c.to_string(), "-e^{1,3} + e^{2,3}");
        assert_eq!(Cochain2::zero(g, 3).to_string(), "0");
        let c = Cochain1::from_coeffs(gf(7), vec![0, 2, 0]);
        assert_eq!(c.to_string(), "2e^2");
    }
}
