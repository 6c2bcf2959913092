//! One-dimensional central extensions by 2-cocycles.
//!
//! The extension `E = A ⊕ F c` of `A` by `φ` has bracket
//! `[x, y]_E = [x, y]_A + φ(x ∧ y) c` with `c` central. A restricted cocycle
//! `(φ, ω)` also fixes the p-map: `x^[p]_E = x^[p] + ω(x) c` and `c^[p] = 0`.
//! The new generator always sits at the last index.

use crate::cochain::{d2, triples, Cochain1, Cochain2};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::{rank_of, Matrix};
use crate::restricted::RestrictedAlgebra;
use crate::restricted_cochain::{d2_star, is_star_admissible, lower_central_term, RestrictedTwoCochain};
use crate::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionResult {
    pub algebra: LieAlgebra,
    /// Basis p-powers of the extension, for restricted extensions.
    pub p_powers: Option<Vec<Element>>,
    /// Printed form of the cocycle the extension was built from.
    pub source: String,
}

impl ExtensionResult {
    pub fn restricted(&self) -> Option<RestrictedAlgebra> {
        self.p_powers
            .as_ref()
            .map(|pp| RestrictedAlgebra::new(self.algebra.clone(), pp.clone()).expect("dimensions checked at construction"))
    }

    /// Index of the central generator `c`.
    pub fn central_index(&self) -> usize {
        self.algebra.dim() - 1
    }

    /// Whether every p-fold bracket of the extension vanishes, in which case
    /// Jacobson's correction terms are identically zero.
    pub fn p_fold_brackets_vanish(&self) -> bool {
        let p = self.algebra.prime() as usize;
        lower_central_term(&self.algebra, p).is_empty()
    }
}

fn lift(v: &[u32]) -> Vec<u32> {
    let mut out = v.to_vec();
    out.push(0);
    out
}

/// Weight for `c`: the weight of `φ` when it is nonzero and homogeneous, so the
/// extension stays graded; otherwise one past the largest weight.
fn central_weight(algebra: &LieAlgebra, phi: &Cochain2) -> i64 {
    match phi.weight(algebra.weights()) {
        Some(w) if !phi.is_zero() => w,
        _ => algebra.weights().iter().copied().max().unwrap_or(0) + 1,
    }
}

fn extended_algebra(algebra: &LieAlgebra, phi: &Cochain2) -> Result<LieAlgebra> {
    let gf = algebra.field();
    let n = algebra.dim();
    let mut weights = algebra.weights().to_vec();
    weights.push(central_weight(algebra, phi));
    let mut labels = algebra.labels().to_vec();
    labels.push("c".to_string());
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = lift(&algebra.basis_bracket(i, j));
            v[n] = phi.get(i, j);
            if v.iter().any(|&x| x != 0) {
                brackets.push((i, j, v));
            }
        }
    }
    LieAlgebra::new(gf, n + 1, weights, labels, brackets)
}

fn check_cocycle(algebra: &LieAlgebra, phi: &Cochain2) -> Result<()> {
    let alpha = d2(algebra, phi);
    if let Some((i, j, k)) = triples(algebra.dim())
        .into_iter()
        .find(|&(i, j, k)| alpha.get(i, j, k) != 0)
    {
        return Err(Error::NotCocycle(i + 1, j + 1, k + 1));
    }
    Ok(())
}

pub fn extend_ordinary(algebra: &LieAlgebra, phi: &Cochain2) -> Result<ExtensionResult> {
    if phi.dim() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            found: phi.dim(),
        });
    }
    check_cocycle(algebra, phi)?;
    Ok(ExtensionResult {
        algebra: extended_algebra(algebra, phi)?,
        p_powers: None,
        source: phi.to_string(),
    })
}

pub fn extend_restricted(r: &RestrictedAlgebra, c2: &RestrictedTwoCochain) -> Result<ExtensionResult> {
    let algebra = r.algebra();
    let n = algebra.dim();
    if c2.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: c2.dim(),
        });
    }
    let image = d2_star(r, c2);
    if !image.alpha.is_zero() {
        return Err(Error::NotRestrictedCocycle(format!("d²φ ≠ 0 for {c2}")));
    }
    if let Some((i, j)) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| image.beta_pairs[i][j] != 0)
    {
        return Err(Error::NotRestrictedCocycle(format!(
            "φ(e_{} ∧ e_{}^[p]) ≠ 0 for {c2}",
            i + 1,
            j + 1
        )));
    }
    if !is_star_admissible(algebra, c2.phi()) {
        return Err(Error::NotRestrictedCocycle(format!(
            "ω is not well defined for {c2}"
        )));
    }
    let e = extended_algebra(algebra, c2.phi())?;
    let mut p_powers: Vec<Element> = r
        .basis_p_powers()
        .iter()
        .zip(c2.omega_basis())
        .map(|(v, &w)| {
            let mut out = lift(&v.0);
            out[n] = w;
            Element(out)
        })
        .collect();
    p_powers.push(Element::zero(n + 1));
    Ok(ExtensionResult {
        algebra: e,
        p_powers: Some(p_powers),
        source: c2.to_string(),
    })
}

/// True iff `φ` is a coboundary, decided by comparing ranks.
pub fn is_trivial_ordinary_extension(algebra: &LieAlgebra, phi: &Cochain2) -> bool {
    let gf = algebra.field();
    let np = phi.coords().len();
    let d1m = crate::cochain::d1_matrix(algebra);
    let mut cols: Vec<Vec<u32>> = (0..algebra.dim()).map(|k| d1m.column(k)).collect();
    let before = rank_of(gf, np, &cols);
    cols.push(phi.coords().to_vec());
    rank_of(gf, np, &cols) == before
}

/// Matrix of `x ↦ x - ψ(x) c`, an isomorphism from the extension by
/// `φ + d¹ψ` onto the extension by `φ` (restricted cochains: by
/// `(φ, ω) + d¹₊ψ` onto `(φ, ω)`).
pub fn coboundary_isomorphism(psi: &Cochain1) -> Matrix {
    let gf = psi.field();
    let n = psi.dim();
    let mut m = Matrix::identity(gf, n + 1);
    for k in 0..n {
        m[(n, k)] = gf.neg(psi.coeffs()[k]);
    }
    m
}

/// Checks that `m` is invertible and `m [e_i, e_j] = [m e_i, m e_j]`; fails
/// with the first offending basis pair.
pub fn verify_lie_isomorphism(src: &LieAlgebra, dst: &LieAlgebra, m: &Matrix) -> Verdict<(usize, usize)> {
    let n = src.dim();
    if dst.dim() != n || m.rows() != n || m.cols() != n || m.rank() != n {
        return Verdict::Fail((usize::MAX, usize::MAX));
    }
    let image = |k: usize| Element(m.column(k));
    for i in 0..n {
        for j in i + 1..n {
            let lhs = Element(m.mul_vec(&src.basis_bracket(i, j)));
            let rhs = dst.bracket_unchecked(&image(i), &image(j));
            if lhs != rhs {
                return Verdict::Fail((i, j));
            }
        }
    }
    Verdict::Pass
}

/// Lie isomorphism that also carries `e_k^[p]` to `(m e_k)^[p]`; a failing
/// basis pair is reported as in [`verify_lie_isomorphism`], a failing p-power
/// as `(k, k)`.
pub fn verify_restricted_isomorphism(
    src: &RestrictedAlgebra,
    dst: &RestrictedAlgebra,
    m: &Matrix,
) -> Verdict<(usize, usize)> {
    if let Verdict::Fail(w) = verify_lie_isomorphism(src.algebra(), dst.algebra(), m) {
        return Verdict::Fail(w);
    }
    for (k, pk) in src.basis_p_powers().iter().enumerate() {
        let lhs = Element(m.mul_vec(&pk.0));
        let rhs = dst.p_power_jacobson(&Element(m.column(k)));
        if lhs != rhs {
            return Verdict::Fail((k, k));
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{d1, phi_k};
    use crate::linalg::Gf;
    use crate::restricted_cochain::{d1_star, star_eval};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u32) -> Gf {
        Gf::new(p).unwrap()
    }

    #[test]
    fn zero_cocycle_gives_direct_sum() {
        let a = LieAlgebra::m0(5).unwrap();
        let e = extend_ordinary(&a, &Cochain2::zero(gf(5), 5)).unwrap();
        assert_eq!(e.algebra.dim(), 6);
        assert_eq!(e.algebra.center().len(), 2);
        for (i, j, v) in a.brackets() {
            assert_eq!(e.algebra.basis_bracket(i, j), lift(v));
        }
    }

    #[test]
    fn e1p_extension_of_m0() {
        for p in [3u32, 5, 7] {
            let n = p as usize;
            let a = LieAlgebra::m0(p).unwrap();
            let e = extend_ordinary(&a, &Cochain2::basis(gf(p), n, 0, n - 1)).unwrap();
            let mut c = vec![0; n + 1];
            c[n] = 1;
            assert_eq!(e.algebra.basis_bracket(0, n - 1), c);
            // brute-force Jacobi on every basis triple
            assert!(e.algebra.jacobi_check().passed());
            assert!(e.algebra.graded_check().passed());
            assert_eq!(e.algebra.weights()[n], p as i64 + 1);
            for i in 0..=n {
                assert!(e.algebra.basis_bracket(i, n).iter().all(|&x| x == 0));
            }
            assert!(!e.p_fold_brackets_vanish());
        }
    }

    #[test]
    fn rejects_non_cocycles() {
        let a = LieAlgebra::m0(7).unwrap();
        let err = extend_ordinary(&a, &Cochain2::basis(gf(7), 7, 2, 3)).unwrap_err();
        assert_eq!(err, Error::NotCocycle(1, 2, 4));
        let r = RestrictedAlgebra::m0_lambda(5, &[0, 0, 0, 0, 1]).unwrap();
        let c2 = RestrictedTwoCochain::tilde(Cochain2::basis(gf(5), 5, 0, 4));
        assert!(matches!(extend_restricted(&r, &c2), Err(Error::NotRestrictedCocycle(_))));
    }

    #[test]
    fn coboundary_extensions_split() {
        let a = LieAlgebra::m0(5).unwrap();
        let trivial = extend_ordinary(&a, &Cochain2::zero(gf(5), 5)).unwrap();
        for k in 0..5 {
            let psi = Cochain1::basis(gf(5), 5, k);
            let phi = d1(&a, &psi);
            assert!(is_trivial_ordinary_extension(&a, &phi));
            let e = extend_ordinary(&a, &phi).unwrap();
            let m = coboundary_isomorphism(&psi);
            assert!(verify_lie_isomorphism(&e.algebra, &trivial.algebra, &m).passed());
        }
    }

    #[test]
    fn triviality() {
        let a = LieAlgebra::m0(7).unwrap();
        assert!(is_trivial_ordinary_extension(&a, &Cochain2::zero(gf(7), 7)));
        assert!(!is_trivial_ordinary_extension(&a, &Cochain2::basis(gf(7), 7, 0, 6)));
        assert!(!is_trivial_ordinary_extension(&a, &phi_k(7, 5).unwrap()));
    }

    #[test]
    fn bar_extensions_match_table() {
        let lambda = [2, 0, 1, 4, 3];
        let r = RestrictedAlgebra::m0_lambda(5, &lambda).unwrap();
        for k in 0..5 {
            let bar = RestrictedTwoCochain::bar(gf(5), 5, k);
            let e = extend_restricted(&r, &bar).unwrap();
            let pp = e.p_powers.as_ref().unwrap();
            for i in 0..5 {
                let mut expected = vec![0; 6];
                expected[4] = lambda[i];
                expected[5] = u32::from(i == k);
                assert_eq!(pp[i].0, expected);
            }
            assert!(pp[5].is_zero());
            let re = e.restricted().unwrap();
            assert!(re.verify_restricted_map().passed());
            assert!(e.p_fold_brackets_vanish());
            // trivial as an ordinary extension
            assert!(is_trivial_ordinary_extension(r.algebra(), bar.phi()));
        }
    }

    #[test]
    fn phi5_extension_at_seven() {
        let r = RestrictedAlgebra::m0_lambda(7, &[0; 7]).unwrap();
        let c2 = RestrictedTwoCochain::tilde(phi_k(7, 5).unwrap());
        let e = extend_restricted(&r, &c2).unwrap();
        let re = e.restricted().unwrap();
        assert!(re.verify_restricted_map().passed());
        assert!(e.p_fold_brackets_vanish());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x = Element::random(gf(7), 7, &mut rng);
            let mut expected = lift(&r.p_power_jacobson(&x).0);
            expected[7] = star_eval(r.algebra(), &c2, &x);
            assert_eq!(re.p_power_jacobson(&Element(lift(&x.0))).0, expected);
        }
    }

    #[test]
    fn e1p_restricted_extension_needs_corrections() {
        // p-fold brackets survive in the extension, yet Jacobson's formula
        // still reproduces x^[p] + ω(x) c.
        let r = RestrictedAlgebra::m0_lambda(5, &[0; 5]).unwrap();
        let c2 = RestrictedTwoCochain::new(Cochain2::basis(gf(5), 5, 0, 4), vec![1, 0, 2, 0, 3]).unwrap();
        let e = extend_restricted(&r, &c2).unwrap();
        assert!(!e.p_fold_brackets_vanish());
        let re = e.restricted().unwrap();
        assert!(re.verify_restricted_map().passed());
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let x = Element::random(gf(5), 5, &mut rng);
            let mut expected = lift(&r.p_power_jacobson(&x).0);
            expected[5] = star_eval(r.algebra(), &c2, &x);
            assert_eq!(re.p_power_jacobson(&Element(lift(&x.0))).0, expected);
        }
    }

    #[test]
    fn restricted_coboundary_isomorphism() {
        let r = RestrictedAlgebra::m0_lambda(5, &[1, 2, 0, 0, 3]).unwrap();
        let base = RestrictedTwoCochain::bar(gf(5), 5, 1);
        let eb = extend_restricted(&r, &base).unwrap().restricted().unwrap();
        for k in 0..5 {
            let psi = Cochain1::basis(gf(5), 5, k);
            let shifted = base.add(&d1_star(&r, &psi));
            let es = extend_restricted(&r, &shifted).unwrap().restricted().unwrap();
            let m = coboundary_isomorphism(&psi);
            assert!(verify_restricted_isomorphism(&es, &eb, &m).passed(), "k = {k}");
        }
    }

    #[test]
    fn wrong_map_is_caught() {
        let a = LieAlgebra::m0(5).unwrap();
        let e = extend_ordinary(&a, &Cochain2::basis(gf(5), 5, 0, 4)).unwrap();
        let trivial = extend_ordinary(&a, &Cochain2::zero(gf(5), 5)).unwrap();
        let id = Matrix::identity(gf(5), 6);
        assert!(!verify_lie_isomorphism(&e.algebra, &trivial.algebra, &id).passed());
    }
}
