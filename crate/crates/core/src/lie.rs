//! Finite-dimensional graded Lie algebras over GF(p) given by structure
//! constants, with the filiform algebra m0(p) built in.
//!
//! Indices are 0-based in code (`e_1` is index 0) and 1-based in everything a
//! user sees: labels, printed cochains and the JSON file format.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{Gf, Matrix};
use crate::Verdict;

/// An element `Σ α_i e_i`, stored by its coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(pub Vec<u32>);

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element(vec![0; dim])
    }

    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = vec![0; dim];
        v[k] = 1;
        Element(v)
    }

    pub fn from_signed(gf: Gf, coeffs: &[i64]) -> Self {
        Element(coeffs.iter().map(|&c| gf.elem(c)).collect())
    }

    pub fn random<R: Rng + ?Sized>(gf: Gf, dim: usize, rng: &mut R) -> Self {
        Element((0..dim).map(|_| rng.gen_range(0..gf.modulus())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, gf: Gf, other: &Element) -> Element {
        Element(gf.add_vec(&self.0, &other.0))
    }

    pub fn sub(&self, gf: Gf, other: &Element) -> Element {
        Element(gf.sub_vec(&self.0, &other.0))
    }

    pub fn scale(&self, gf: Gf, a: u32) -> Element {
        Element(gf.scale(a, &self.0))
    }

    /// The single-term pieces `α_k e_k` with `α_k ≠ 0`, in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().copied().enumerate().filter(|&(_, a)| a != 0)
    }
}

/// A Lie algebra presented by structure constants on the basis `e_1..e_n`.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; the rest follow from
/// antisymmetry. Zero brackets are not stored.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    gf: Gf,
    dim: usize,
    brackets: BTreeMap<(usize, usize), Vec<u32>>,
    weights: Vec<i64>,
    labels: Vec<String>,
}

/// Structural equality: dimension, prime, constants and weights. Labels are
/// cosmetic and ignored.
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.gf == other.gf
            && self.dim == other.dim
            && self.brackets == other.brackets
            && self.weights == other.weights
    }
}

impl Eq for LieAlgebra {}

pub fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|k| format!("e_{k}")).collect()
}

impl LieAlgebra {
    /// Builds an algebra from brackets `(i, j, coeffs)` with 0-based indices.
    ///
    /// Pairs with `i > j` are normalized by antisymmetry. Jacobi is not
    /// enforced here; see [`LieAlgebra::jacobi_check`].
    pub fn new(
        gf: Gf,
        dim: usize,
        weights: Vec<i64>,
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<u32>)>,
    ) -> Result<Self> {
        if weights.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: weights.len(),
            });
        }
        if labels.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: labels.len(),
            });
        }
        let mut table: BTreeMap<(usize, usize), Vec<u32>> = BTreeMap::new();
        for (i, j, coeffs) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::IndexOutOfRange(format!(
                    "bracket ({}, {}) in dimension {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if coeffs.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: coeffs.len(),
                });
            }
            let coeffs: Vec<u32> = coeffs.iter().map(|&c| c % gf.modulus()).collect();
            if i == j {
                if coeffs.iter().any(|&c| c != 0) {
                    return Err(Error::InvalidAlgebra(format!(
                        "nonzero self-bracket [e_{0}, e_{0}]",
                        i + 1
                    )));
                }
                continue;
            }
            let (key, v) = if i < j {
                ((i, j), coeffs)
            } else {
                ((j, i), coeffs.iter().map(|&c| gf.neg(c)).collect())
            };
            let entry = table.entry(key).or_insert_with(|| vec![0; dim]);
            for (e, c) in entry.iter_mut().zip(v) {
                *e = gf.add(*e, c);
            }
        }
        table.retain(|_, v| v.iter().any(|&c| c != 0));
        Ok(LieAlgebra {
            gf,
            dim,
            brackets: table,
            weights,
            labels,
        })
    }

    /// The filiform algebra m0(p): `[e_1, e_i] = e_{i+1}` for `1 < i < p`,
    /// all other brackets zero, `e_k` of weight `k`.
    pub fn m0(p: u32) -> Result<Self> {
        let gf = Gf::new(p)?;
        let n = p as usize;
        let brackets = (1..n.saturating_sub(1)).map(|i| {
            let mut v = vec![0; n];
            v[i + 1] = 1;
            (0, i, v)
        });
        LieAlgebra::new(gf, n, (1..=n as i64).collect(), default_labels(n), brackets)
    }

    pub fn field(&self) -> Gf {
        self.gf
    }

    pub fn prime(&self) -> u32 {
        self.gf.modulus()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Nonzero brackets `[e_i, e_j]`, `i < j`, in index order.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &[u32])> {
        self.brackets
            .iter()
            .map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Coefficient vector of `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<u32> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self
                .brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![0; self.dim]),
            std::cmp::Ordering::Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|&c| self.gf.neg(c)).collect())
                .unwrap_or_else(|| vec![0; self.dim]),
            std::cmp::Ordering::Equal => vec![0; self.dim],
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.basis_bracket(i, j)[k]
    }

    fn check_dim(&self, g: &Element) -> Result<()> {
        if g.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: g.dim(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, g: &Element, h: &Element) -> Result<Element> {
        self.check_dim(g)?;
        self.check_dim(h)?;
        Ok(self.bracket_unchecked(g, h))
    }

    pub(crate) fn bracket_unchecked(&self, g: &Element, h: &Element) -> Element {
        let gf = self.gf;
        let mut out = vec![0; self.dim];
        for (&(i, j), c) in &self.brackets {
            let a = gf.sub(gf.mul(g.0[i], h.0[j]), gf.mul(g.0[j], h.0[i]));
            gf.axpy(&mut out, a, c);
        }
        Element(out)
    }

    /// `[g_1, g_2, ..., g_j] = [[...[g_1, g_2], ...], g_j]`.
    pub fn left_normed_bracket(&self, gs: &[Element]) -> Result<Element> {
        if gs.len() < 2 {
            return Err(Error::BracketTooShort(gs.len()));
        }
        for g in gs {
            self.check_dim(g)?;
        }
        let mut acc = self.bracket_unchecked(&gs[0], &gs[1]);
        for g in &gs[2..] {
            acc = self.bracket_unchecked(&acc, g);
        }
        Ok(acc)
    }

    /// Matrix of `h ↦ [g, h]`; column `j` holds `[g, e_j]`.
    pub fn ad_matrix(&self, g: &Element) -> Result<Matrix> {
        self.check_dim(g)?;
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|j| self.bracket_unchecked(g, &Element::basis(self.dim, j)).0)
            .collect();
        Ok(Matrix::from_columns(self.gf, self.dim, &cols))
    }

    /// Checks `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on all basis triples
    /// `i < j < k`; fails with the first violating triple.
    pub fn jacobi_check(&self) -> Verdict<(usize, usize, usize)> {
        let n = self.dim;
        let e = |k| Element::basis(n, k);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let a = self.bracket_unchecked(&self.bracket_unchecked(&x, &y), &z);
                    let b = self.bracket_unchecked(&self.bracket_unchecked(&y, &z), &x);
                    let c = self.bracket_unchecked(&self.bracket_unchecked(&z, &x), &y);
                    let sum = a.add(self.gf, &b).add(self.gf, &c);
                    if !sum.is_zero() {
                        return Verdict::Fail((i, j, k));
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// Checks that `c_{ij}^k ≠ 0` implies `w_k = w_i + w_j`; fails with the
    /// first offending `(i, j, k)`.
    pub fn graded_check(&self) -> Verdict<(usize, usize, usize)> {
        for (&(i, j), v) in &self.brackets {
            for (k, &c) in v.iter().enumerate() {
                if c != 0 && self.weights[k] != self.weights[i] + self.weights[j] {
                    return Verdict::Fail((i, j, k));
                }
            }
        }
        Verdict::Pass
    }

    /// Basis of the center, as the common kernel of `z ↦ [z, e_i]`.
    pub fn center(&self) -> Vec<Element> {
        let n = self.dim;
        let mut stacked = Matrix::zeros(self.gf, n * n, n);
        for i in 0..n {
            for z in 0..n {
                let col = self.basis_bracket(z, i);
                for (k, &c) in col.iter().enumerate() {
                    stacked[(i * n + k, z)] = c;
                }
            }
        }
        stacked.kernel_basis().into_iter().map(Element).collect()
    }
}
