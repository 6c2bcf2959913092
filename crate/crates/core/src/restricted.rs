//! Restricted structures (p-maps) on Lie algebras over GF(p).
//!
//! A restricted structure is stored by the p-powers of the basis vectors. Off
//! the basis, p-powers are evaluated with Jacobson's formula
//!
//! ```text
//! (x + y)^[p] = x^[p] + y^[p] + Σ_{i=1}^{p-1} s_i(x, y),
//! i·s_i(x, y) = coefficient of t^(i-1) in ad(t·x + y)^(p-1)(x),
//! ```
//!
//! together with `(α x)^[p] = α^p x^[p]`. For m0^λ(p) every p-fold bracket
//! vanishes and the p-map collapses to `g^[p] = (Σ α_k^p λ_k) e_p`; that closed
//! form is kept as a separate entry point so the two can check each other.

use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::Gf;
use crate::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedAlgebra {
    algebra: LieAlgebra,
    basis_p_powers: Vec<Element>,
    /// Set only for algebras built by [`RestrictedAlgebra::m0_lambda`].
    lambda: Option<Vec<u32>>,
}

impl RestrictedAlgebra {
    /// Wraps an algebra with the given basis p-powers. The restrictedness
    /// axiom is not enforced; call [`RestrictedAlgebra::verify_restricted_map`].
    pub fn new(algebra: LieAlgebra, basis_p_powers: Vec<Element>) -> Result<Self> {
        let n = algebra.dim();
        if basis_p_powers.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: basis_p_powers.len(),
            });
        }
        if let Some(bad) = basis_p_powers.iter().find(|v| v.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.dim(),
            });
        }
        Ok(RestrictedAlgebra {
            algebra,
            basis_p_powers,
            lambda: None,
        })
    }

    /// m0^λ(p): m0(p) with `e_k^[p] = λ_k e_p`.
    pub fn m0_lambda(p: u32, lambda: &[u32]) -> Result<Self> {
        let algebra = LieAlgebra::m0(p)?;
        let n = algebra.dim();
        if lambda.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: lambda.len(),
            });
        }
        let gf = algebra.field();
        let lambda: Vec<u32> = lambda.iter().map(|&l| l % gf.modulus()).collect();
        let basis_p_powers = lambda
            .iter()
            .map(|&l| Element::basis(n, n - 1).scale(gf, l))
            .collect();
        Ok(RestrictedAlgebra {
            algebra,
            basis_p_powers,
            lambda: Some(lambda),
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> Gf {
        self.algebra.field()
    }

    pub fn prime(&self) -> u32 {
        self.algebra.prime()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn basis_p_powers(&self) -> &[Element] {
        &self.basis_p_powers
    }

    /// `Some(λ)` when this is m0^λ(p).
    pub fn lambda(&self) -> Option<&[u32]> {
        self.lambda.as_deref()
    }

    pub fn into_parts(self) -> (LieAlgebra, Vec<Element>) {
        (self.algebra, self.basis_p_powers)
    }

    /// Closed form `g^[p] = (Σ α_k^p λ_k) e_p`, valid only on m0^λ(p).
    pub fn p_power_closed(&self, g: &Element) -> Result<Element> {
        let lambda = self.lambda.as_ref().ok_or(Error::NotM0Lambda)?;
        let gf = self.field();
        let n = self.dim();
        if g.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.dim(),
            });
        }
        let coeff = g
            .coeffs()
            .iter()
            .zip(lambda)
            .fold(0, |acc, (&a, &l)| gf.mul_add(acc, gf.frob(a), l));
        Ok(Element::basis(n, n - 1).scale(gf, coeff))
    }

    /// Generic p-power through Jacobson's formula, splitting `g` into its
    /// basis terms in index order.
    pub fn p_power_jacobson(&self, g: &Element) -> Element {
        let gf = self.field();
        let n = self.dim();
        let mut acc = Element::zero(n);
        let mut power = Element::zero(n);
        for (k, a) in g.terms() {
            let term = Element::basis(n, k).scale(gf, a);
            let term_power = self.basis_p_powers[k].scale(gf, gf.frob(a));
            power = power
                .add(gf, &term_power)
                .add(gf, &jacobson_correction(&self.algebra, &acc, &term));
            acc = acc.add(gf, &term);
        }
        power
    }

    /// Checks `ad(e_k^[p]) = (ad e_k)^p` for every basis index; fails with the
    /// first `k` where it does not hold.
    pub fn verify_restricted_map(&self) -> Verdict<usize> {
        let p = self.prime() as u64;
        for (k, pk) in self.basis_p_powers.iter().enumerate() {
            let lhs = self
                .algebra
                .ad_matrix(pk)
                .expect("p-powers have algebra dimension");
            let rhs = self
                .algebra
                .ad_matrix(&Element::basis(self.dim(), k))
                .expect("basis vector")
                .pow(p);
            if lhs != rhs {
                return Verdict::Fail(k);
            }
        }
        Verdict::Pass
    }
}

/// `Σ_i s_i(x, y)`, read off the t-expansion of `ad(t·x + y)^(p-1)(x)`.
///
/// The polynomial in `t` has vector coefficients; applying `ad(t·x + y)` to
/// `Σ_d t^d v_d` gives `Σ_d t^(d+1) [x, v_d] + t^d [y, v_d]`.
pub fn jacobson_correction(algebra: &LieAlgebra, x: &Element, y: &Element) -> Element {
    let gf = algebra.field();
    let p = gf.modulus() as usize;
    let n = algebra.dim();
    let mut poly: Vec<Element> = vec![x.clone()];
    for _ in 0..p - 1 {
        let mut next = vec![Element::zero(n); poly.len() + 1];
        for (d, v) in poly.iter().enumerate() {
            next[d + 1] = next[d + 1].add(gf, &algebra.bracket_unchecked(x, v));
            next[d] = next[d].add(gf, &algebra.bracket_unchecked(y, v));
        }
        poly = next;
    }
    // poly[d] is i·s_i with i = d + 1, for d = 0..p-2.
    let mut total = Element::zero(n);
    for (d, v) in poly.iter().enumerate().take(p - 1) {
        let inv_i = gf.inv((d + 1) as u32).expect("i < p");
        total = total.add(gf, &v.scale(gf, inv_i));
    }
    total
}
