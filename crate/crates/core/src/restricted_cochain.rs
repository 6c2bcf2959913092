//! Restricted cochains in degrees 2 and 3 and the restricted differentials.
//!
//! A restricted 2-cochain is a pair `(φ, ω)`: an ordinary 2-cochain `φ` and a
//! map `ω: g → F` that is p-homogeneous (`ω(α g) = α^p ω(g)`) and satisfies
//! the *-property with respect to `φ`:
//!
//! ```text
//! ω(g + h) = ω(g) + ω(h) + Σ (1/#g) φ([g_1, ..., g_{p-1}] ∧ g_p)
//! ```
//!
//! summed over sequences `g_i ∈ {g, h}` with `g_1 = g`, `g_2 = h`, where `#g`
//! counts the positions holding `g`. The correction is exactly the
//! `c`-component of Jacobson's `Σ s_i(g, h)` in the central extension by `φ`.
//! `ω` is stored by its values on the basis and evaluated by splitting its
//! argument into basis terms and adding corrections.
//!
//! Restricted 3-cochains `(α, β)` are handled the same way: `β` is linear in
//! its first argument and obeys the analogous **-property in the second.
//!
//! Correction sums are evaluated by dynamic programming over (position, number
//! of `g` factors so far), carrying the partial left-normed bracket as a
//! vector. The literal enumeration over all `2^(p-2)` sequences is kept as
//! [`star_correction_naive`] and [`doublestar_correction_naive`] for testing.
//!
//! The recursion defines `ω` unambiguously only when `φ` kills
//! `γ_{p-1} ∧ [g, g]`, where `γ_{p-1}` is spanned by (p-1)-fold brackets; see
//! [`is_star_admissible`]. Every 2-cocycle of m0(p) is admissible.

use serde::{Deserialize, Serialize};

use crate::cochain::{d1, d2, pairs, render_terms, wedge_label, Cochain1, Cochain2, Cochain3, CochainTerm};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::{EchelonBasis, Gf, Matrix};
use crate::restricted::RestrictedAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RestrictedTwoCochain {
    phi: Cochain2,
    omega_basis: Vec<u32>,
}

impl RestrictedTwoCochain {
    pub fn new(phi: Cochain2, omega_basis: Vec<u32>) -> Result<Self> {
        if omega_basis.len() != phi.dim() {
            return Err(Error::DimensionMismatch {
                expected: phi.dim(),
                found: omega_basis.len(),
            });
        }
        let gf = phi.field();
        let omega_basis = omega_basis.into_iter().map(|x| x % gf.modulus()).collect();
        Ok(RestrictedTwoCochain { phi, omega_basis })
    }

    pub fn zero(gf: Gf, dim: usize) -> Self {
        RestrictedTwoCochain {
            phi: Cochain2::zero(gf, dim),
            omega_basis: vec![0; dim],
        }
    }

    /// `(0, ē^k)` with `ē^k(Σ α_i e_i) = α_k^p` (0-based `k`).
    pub fn bar(gf: Gf, dim: usize, k: usize) -> Self {
        let mut omega_basis = vec![0; dim];
        omega_basis[k] = 1;
        RestrictedTwoCochain {
            phi: Cochain2::zero(gf, dim),
            omega_basis,
        }
    }

    /// `(φ, φ̃)` where `φ̃` vanishes on the basis.
    pub fn tilde(phi: Cochain2) -> Self {
        let dim = phi.dim();
        RestrictedTwoCochain {
            phi,
            omega_basis: vec![0; dim],
        }
    }

    /// From flat coordinates `[σ in pair order | ω on the basis]`.
    pub fn from_coords(gf: Gf, dim: usize, coords: &[u32]) -> Result<Self> {
        let np = crate::cochain::pair_count(dim);
        if coords.len() != np + dim {
            return Err(Error::DimensionMismatch {
                expected: np + dim,
                found: coords.len(),
            });
        }
        let phi = Cochain2::from_coords(gf, dim, coords[..np].to_vec())?;
        RestrictedTwoCochain::new(phi, coords[np..].to_vec())
    }

    pub fn coords(&self) -> Vec<u32> {
        let mut v = self.phi.coords().to_vec();
        v.extend_from_slice(&self.omega_basis);
        v
    }

    pub fn phi(&self) -> &Cochain2 {
        &self.phi
    }

    pub fn omega_basis(&self) -> &[u32] {
        &self.omega_basis
    }

    pub fn dim(&self) -> usize {
        self.phi.dim()
    }

    pub fn field(&self) -> Gf {
        self.phi.field()
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.omega_basis.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let gf = self.field();
        RestrictedTwoCochain {
            phi: self.phi.add(&other.phi),
            omega_basis: gf.add_vec(&self.omega_basis, &other.omega_basis),
        }
    }

    pub fn scale(&self, a: u32) -> Self {
        let gf = self.field();
        RestrictedTwoCochain {
            phi: self.phi.scale(a),
            omega_basis: gf.scale(a, &self.omega_basis),
        }
    }

    pub fn to_json(&self) -> RestrictedTwoCochainJson {
        RestrictedTwoCochainJson {
            phi: self.phi.terms(),
            omega: self.omega_basis.clone(),
        }
    }

    pub fn from_json(gf: Gf, dim: usize, json: &RestrictedTwoCochainJson) -> Result<Self> {
        let phi = Cochain2::from_json_terms(gf, dim, &json.phi)?;
        RestrictedTwoCochain::new(phi, json.omega.clone())
    }
}

/// `(φ, ω)` printed as `(e^{2,5} - e^{3,4}, ẽ^{2,5} - ẽ^{3,4} + ē^1)`.
impl std::fmt::Display for RestrictedTwoCochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gf = self.field();
        let n = self.dim();
        let tilde = pairs(n)
            .into_iter()
            .zip(self.phi.coords())
            .map(|((i, j), &c)| (wedge_label("ẽ", &[i, j]), c));
        let bars = (0..n).map(|k| (wedge_label("ē", &[k]), self.omega_basis[k]));
        let omega = render_terms(gf, tilde.chain(bars));
        write!(f, "({}, {})", self.phi, omega)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedTwoCochainJson {
    pub phi: Vec<CochainTerm>,
    pub omega: Vec<u32>,
}

/// `(α, β)` with `β` stored by its values `β(e_i, e_j)` on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedThreeCochain {
    pub alpha: Cochain3,
    pub beta_pairs: Vec<Vec<u32>>,
}

impl RestrictedThreeCochain {
    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta_pairs.iter().flatten().all(|&x| x == 0)
    }
}

/// For each count `m` of `x` among the first `p-1` positions, the sum of the
/// left-normed brackets `[x_1, ..., x_{p-1}]` over sequences with `x_1 = x`,
/// `x_2 = y` having that count. When `p = 2` the sequence is just `(x, y)` and
/// the last position is pinned to `y`.
struct LongBrackets {
    by_count: Vec<Element>,
    last_free: bool,
}

fn long_brackets(algebra: &LieAlgebra, x: &Element, y: &Element) -> LongBrackets {
    let gf = algebra.field();
    let p = gf.modulus() as usize;
    let n = algebra.dim();
    if p == 2 {
        let mut by_count = vec![Element::zero(n); 2];
        by_count[1] = x.clone();
        return LongBrackets {
            by_count,
            last_free: false,
        };
    }
    let mut by_count = vec![Element::zero(n); p];
    by_count[1] = algebra.bracket_unchecked(x, y);
    for _ in 3..p {
        let mut next = vec![Element::zero(n); p];
        for (m, v) in by_count.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            next[m + 1] = next[m + 1].add(gf, &algebra.bracket_unchecked(v, x));
            next[m] = next[m].add(gf, &algebra.bracket_unchecked(v, y));
        }
        by_count = next;
    }
    LongBrackets {
        by_count,
        last_free: true,
    }
}

/// `Σ (1/#x) F([x_1..x_{p-1}], x_p)` for a form `F` linear in its first slot.
fn correction_with<F>(algebra: &LieAlgebra, x: &Element, y: &Element, form: F) -> u32
where
    F: Fn(&Element, &Element) -> u32,
{
    let gf = algebra.field();
    let lb = long_brackets(algebra, x, y);
    let mut total = 0;
    for (m, w) in lb.by_count.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        if lb.last_free {
            let inv = gf.inv((m + 1) as u32).expect("count below p");
            total = gf.mul_add(total, inv, form(w, x));
        }
        let inv = gf.inv(m as u32).expect("count below p");
        total = gf.mul_add(total, inv, form(w, y));
    }
    total
}

/// Literal enumeration of all sequences; exponential in `p`.
fn correction_naive<F>(algebra: &LieAlgebra, x: &Element, y: &Element, form: F) -> u32
where
    F: Fn(&Element, &Element) -> u32,
{
    let gf = algebra.field();
    let p = gf.modulus() as usize;
    let free = p - 2;
    let mut total = 0;
    for mask in 0u64..(1u64 << free) {
        // positions 3..=p; bit set means x
        let mut seq: Vec<&Element> = vec![x, y];
        seq.extend((0..free).map(|b| if mask >> b & 1 == 1 { x } else { y }));
        let count = seq.iter().filter(|e| std::ptr::eq(**e, x)).count();
        let head: Vec<Element> = seq[..p - 1].iter().map(|e| (*e).clone()).collect();
        let w = if head.len() == 1 {
            head[0].clone()
        } else {
            algebra
                .left_normed_bracket(&head)
                .expect("elements have algebra dimension")
        };
        let inv = gf.inv(count as u32).expect("count below p");
        total = gf.mul_add(total, inv, form(&w, seq[p - 1]));
    }
    total
}

/// Correction term of the *-property at `(g, h)`.
pub fn star_correction(algebra: &LieAlgebra, phi: &Cochain2, g: &Element, h: &Element) -> u32 {
    correction_with(algebra, g, h, |w, v| phi.eval(w, v))
}

pub fn star_correction_naive(algebra: &LieAlgebra, phi: &Cochain2, g: &Element, h: &Element) -> u32 {
    correction_with_naive_guard(algebra, g, h, |w, v| phi.eval(w, v))
}

/// Correction term of the **-property: `Σ (1/#h_1) α(g ∧ [h_{l_1}..h_{l_{p-1}}] ∧ h_{l_p})`.
pub fn doublestar_correction(
    algebra: &LieAlgebra,
    alpha: &Cochain3,
    g: &Element,
    h1: &Element,
    h2: &Element,
) -> u32 {
    correction_with(algebra, h1, h2, |w, v| alpha.eval(g, w, v))
}

pub fn doublestar_correction_naive(
    algebra: &LieAlgebra,
    alpha: &Cochain3,
    g: &Element,
    h1: &Element,
    h2: &Element,
) -> u32 {
    correction_with_naive_guard(algebra, h1, h2, |w, v| alpha.eval(g, w, v))
}

fn correction_with_naive_guard<F>(algebra: &LieAlgebra, x: &Element, y: &Element, form: F) -> u32
where
    F: Fn(&Element, &Element) -> u32,
{
    // `std::ptr::eq` in the enumeration tells the two arguments apart, so an
    // aliased pair must be copied first.
    let y_own = y.clone();
    correction_naive(algebra, x, &y_own, form)
}

/// `ω(g)` for the restricted cochain `c`, splitting `g` into basis terms in
/// index order.
pub fn star_eval(algebra: &LieAlgebra, c: &RestrictedTwoCochain, g: &Element) -> u32 {
    let gf = algebra.field();
    let n = algebra.dim();
    let mut acc = Element::zero(n);
    let mut value = 0;
    for (k, a) in g.terms() {
        let term = Element::basis(n, k).scale(gf, a);
        value = gf.add(value, gf.mul(gf.frob(a), c.omega_basis[k]));
        value = gf.add(value, star_correction(algebra, &c.phi, &acc, &term));
        acc = acc.add(gf, &term);
    }
    value
}

/// `ω(g_1 + g_2 + ...)` computed by adding the given summands one at a time,
/// each evaluated with [`star_eval`]. For admissible `φ` this agrees with
/// `star_eval` of the sum for every grouping.
pub fn star_eval_grouped(algebra: &LieAlgebra, c: &RestrictedTwoCochain, parts: &[Element]) -> u32 {
    let gf = algebra.field();
    let n = algebra.dim();
    let mut acc = Element::zero(n);
    let mut value = 0;
    for part in parts {
        value = gf.add(value, star_eval(algebra, c, part));
        value = gf.add(value, star_correction(algebra, &c.phi, &acc, part));
        acc = acc.add(gf, part);
    }
    value
}

/// Both sides of the *-property for `c` at `(g, h)`.
pub fn star_property_holds(algebra: &LieAlgebra, c: &RestrictedTwoCochain, g: &Element, h: &Element) -> bool {
    star_property_holds_with(algebra, &c.phi, |x| star_eval(algebra, c, x), g, h)
}

/// The *-property for an arbitrary evaluator `omega` against `phi`.
pub fn star_property_holds_with<W>(algebra: &LieAlgebra, phi: &Cochain2, omega: W, g: &Element, h: &Element) -> bool
where
    W: Fn(&Element) -> u32,
{
    let gf = algebra.field();
    let lhs = omega(&g.add(gf, h));
    let rhs = gf.add(
        gf.add(omega(g), omega(h)),
        star_correction(algebra, phi, g, h),
    );
    lhs == rhs
}

/// Basis of `γ_k`, the span of all k-fold brackets (`γ_1` is the algebra).
pub fn lower_central_term(algebra: &LieAlgebra, k: usize) -> Vec<Element> {
    let gf = algebra.field();
    let n = algebra.dim();
    let mut current: Vec<Element> = (0..n).map(|i| Element::basis(n, i)).collect();
    for _ in 1..k {
        let mut span = EchelonBasis::new(gf, n);
        let mut next = Vec::new();
        for v in &current {
            for i in 0..n {
                let b = algebra.bracket_unchecked(v, &Element::basis(n, i));
                if span.insert(&b.0) {
                    next.push(b);
                }
            }
        }
        current = next;
    }
    current
}

/// Linear conditions `φ(u ∧ [e_a, e_b]) = 0` for `u ∈ γ_{p-1}`, as rows over
/// the pair coordinates of `φ`.
fn admissibility_conditions(algebra: &LieAlgebra) -> Matrix {
    let gf = algebra.field();
    let n = algebra.dim();
    let p = gf.modulus() as usize;
    let long = lower_central_term(algebra, p.saturating_sub(1).max(1));
    let ps = pairs(n);
    let mut rows = Vec::new();
    for u in &long {
        for (a, b) in &ps {
            let ab = Element(algebra.basis_bracket(*a, *b));
            if ab.is_zero() {
                continue;
            }
            // φ(u ∧ v) = Σ_{i<j} σ_ij (u_i v_j - u_j v_i)
            let row: Vec<u32> = ps
                .iter()
                .map(|&(i, j)| gf.sub(gf.mul(u.0[i], ab.0[j]), gf.mul(u.0[j], ab.0[i])))
                .collect();
            rows.push(row);
        }
    }
    Matrix::from_row_vectors(gf, ps.len(), &rows)
}

/// Whether the *-recursion defines `ω` independently of how arguments are
/// split, which holds when `φ(γ_{p-1} ∧ [g, g]) = 0`.
pub fn is_star_admissible(algebra: &LieAlgebra, phi: &Cochain2) -> bool {
    admissibility_conditions(algebra).mul_vec(phi.coords()).iter().all(|&x| x == 0)
}

/// Basis of the admissible 2-cochains.
pub fn admissible_basis(algebra: &LieAlgebra) -> Vec<Cochain2> {
    let gf = algebra.field();
    let n = algebra.dim();
    admissibility_conditions(algebra)
        .kernel_basis()
        .into_iter()
        .map(|v| Cochain2::from_coords(gf, n, v).expect("pair coordinates"))
        .collect()
}

/// Basis values of `ind¹(ψ)`: `ψ(e_k^[p])`.
pub fn ind1(r: &RestrictedAlgebra, psi: &Cochain1) -> Vec<u32> {
    r.basis_p_powers().iter().map(|v| psi.eval(v)).collect()
}

/// `ind¹(ψ)(g) = ψ(g^[p])`.
pub fn ind1_eval(r: &RestrictedAlgebra, psi: &Cochain1, g: &Element) -> u32 {
    psi.eval(&r.p_power_jacobson(g))
}

/// Values `ind²(φ)(e_i, e_j) = φ(e_i ∧ e_j^[p])` on all basis pairs.
pub fn ind2(r: &RestrictedAlgebra, phi: &Cochain2) -> Vec<Vec<u32>> {
    let n = r.dim();
    (0..n)
        .map(|i| {
            let ei = Element::basis(n, i);
            r.basis_p_powers().iter().map(|pj| phi.eval(&ei, pj)).collect()
        })
        .collect()
}

/// `ind²(φ, ω)(g, h) = φ(g ∧ h^[p])`; `ω` plays no role.
pub fn ind2_eval(r: &RestrictedAlgebra, phi: &Cochain2, g: &Element, h: &Element) -> u32 {
    phi.eval(g, &r.p_power_jacobson(h))
}

pub fn d1_star(r: &RestrictedAlgebra, psi: &Cochain1) -> RestrictedTwoCochain {
    RestrictedTwoCochain {
        phi: d1(r.algebra(), psi),
        omega_basis: ind1(r, psi),
    }
}

pub fn d2_star(r: &RestrictedAlgebra, c: &RestrictedTwoCochain) -> RestrictedThreeCochain {
    RestrictedThreeCochain {
        alpha: d2(r.algebra(), &c.phi),
        beta_pairs: ind2(r, &c.phi),
    }
}

/// `β(g, h)`: linear in `g`; in `h`, built from basis values through the
/// **-recursion.
pub fn beta_eval(algebra: &LieAlgebra, rc3: &RestrictedThreeCochain, g: &Element, h: &Element) -> u32 {
    let gf = algebra.field();
    let n = algebra.dim();
    let mut total = 0;
    for (i, gi) in g.terms() {
        let ei = Element::basis(n, i);
        let mut acc = Element::zero(n);
        let mut value = 0;
        for (k, a) in h.terms() {
            let term = Element::basis(n, k).scale(gf, a);
            value = gf.add(value, gf.mul(gf.frob(a), rc3.beta_pairs[i][k]));
            value = gf.sub(value, doublestar_correction(algebra, &rc3.alpha, &ei, &acc, &term));
            acc = acc.add(gf, &term);
        }
        total = gf.mul_add(total, gi, value);
    }
    total
}

pub fn doublestar_property_holds(
    algebra: &LieAlgebra,
    rc3: &RestrictedThreeCochain,
    g: &Element,
    h1: &Element,
    h2: &Element,
) -> bool {
    doublestar_property_holds_with(algebra, &rc3.alpha, |x, y| beta_eval(algebra, rc3, x, y), g, h1, h2)
}

/// The **-property for an arbitrary evaluator `beta` against `alpha`.
pub fn doublestar_property_holds_with<B>(
    algebra: &LieAlgebra,
    alpha: &Cochain3,
    beta: B,
    g: &Element,
    h1: &Element,
    h2: &Element,
) -> bool
where
    B: Fn(&Element, &Element) -> u32,
{
    let gf = algebra.field();
    let lhs = beta(g, &h1.add(gf, h2));
    let rhs = gf.sub(
        gf.add(beta(g, h1), beta(g, h2)),
        doublestar_correction(algebra, alpha, g, h1, h2),
    );
    lhs == rhs
}
