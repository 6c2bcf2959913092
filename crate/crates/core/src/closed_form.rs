//! Hand-derived closed forms for m0^λ(p).
//!
//! Nothing in the computation path calls these; they exist so tests and the
//! verification report can compare the generic structure-constant machinery
//! against independently written formulas.

use crate::cochain::{pairs, Cochain1, Cochain2, Cochain3};
use crate::lie::Element;
use crate::linalg::Gf;

/// `d¹(e^k) = e^{1,k-1}` for `k ≥ 3`, zero for `k = 1, 2` (1-based `k`).
pub fn d1_basis(gf: Gf, p: usize, k: usize) -> Cochain2 {
    if k >= 3 {
        Cochain2::basis(gf, p, 0, k - 2)
    } else {
        Cochain2::zero(gf, p)
    }
}

/// `d²(e^{i,j}) = e^{1,i-1,j} + e^{1,i,j-1}` for `2 ≤ i < j`, zero for
/// `i = 1`. Terms with repeated indices vanish. 1-based indices.
pub fn d2_basis(gf: Gf, p: usize, i: usize, j: usize) -> Cochain3 {
    if i == 1 {
        return Cochain3::zero(gf, p);
    }
    Cochain3::from_terms(gf, p, &[([1, i - 1, j], 1), ([1, i, j - 1], 1)])
        .expect("indices in range")
}

/// The same formula with the second term written `e^{1,i,j-i}`, as it is
/// sometimes printed. Kept only to report where it disagrees with `d²`.
pub fn d2_basis_misprinted(gf: Gf, p: usize, i: usize, j: usize) -> Cochain3 {
    if i == 1 {
        return Cochain3::zero(gf, p);
    }
    Cochain3::from_terms(gf, p, &[([1, i - 1, j], 1), ([1, i, j - i], 1)])
        .expect("indices in range")
}

/// `ind¹(ψ)(g) = μ_p (Σ α_j^p λ_j)`.
pub fn ind1(gf: Gf, lambda: &[u32], psi: &Cochain1, g: &Element) -> u32 {
    let p = lambda.len();
    let s = g
        .coeffs()
        .iter()
        .zip(lambda)
        .fold(0, |acc, (&a, &l)| gf.mul_add(acc, gf.frob(a), l));
    gf.mul(psi.coeffs()[p - 1], s)
}

/// `ind²(φ, ω)(g, h) = (Σ β_i^p λ_i)(Σ_{j<p} α_j σ_{jp})` with `g = Σ α_j e_j`
/// and `h = Σ β_i e_i`.
pub fn ind2(gf: Gf, lambda: &[u32], phi: &Cochain2, g: &Element, h: &Element) -> u32 {
    let p = lambda.len();
    let hp = h
        .coeffs()
        .iter()
        .zip(lambda)
        .fold(0, |acc, (&b, &l)| gf.mul_add(acc, gf.frob(b), l));
    let gs = (0..p - 1).fold(0, |acc, j| gf.mul_add(acc, g.coeffs()[j], phi.get(j, p - 1)));
    gf.mul(hp, gs)
}

/// Bracket of m0(p) from the coefficient formula
/// `[g, h] = Σ_{j=3}^p (α_1 β_{j-1} - α_{j-1} β_1) e_j`.
pub fn bracket(gf: Gf, g: &Element, h: &Element) -> Element {
    let p = g.dim();
    let (a, b) = (g.coeffs(), h.coeffs());
    let mut out = vec![0; p];
    for j in 3..=p {
        out[j - 1] = gf.sub(gf.mul(a[0], b[j - 2]), gf.mul(a[j - 2], b[0]));
    }
    Element(out)
}

/// Basis pairs `(i, j)` (1-based, `2 ≤ i < j`) on which the misprinted `d²`
/// formula differs from the structure-constant differential.
pub fn misprint_disagreements(p: u32) -> Vec<(usize, usize)> {
    let gf = Gf::new(p).expect("prime");
    let n = p as usize;
    let algebra = crate::lie::LieAlgebra::m0(p).expect("prime");
    pairs(n)
        .into_iter()
        .map(|(i, j)| (i + 1, j + 1))
        .filter(|&(i, j)| {
            let generic = crate::cochain::d2(&algebra, &Cochain2::basis(gf, n, i - 1, j - 1));
            generic != d2_basis_misprinted(gf, n, i, j)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn misprint_disagreements_at_small_primes() {
        assert!(misprint_disagreements(3).is_empty());
        let bad = misprint_disagreements(7);
        // e^{2,5}: e^{1,2,4} versus e^{1,2,3}
        assert!(bad.contains(&(2, 5)));
        // e^{3,4}: the second term vanishes either way
        assert!(!bad.contains(&(3, 4)));
        assert!(bad.iter().all(|&(i, _)| i >= 2));
    }
}
