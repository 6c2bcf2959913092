//! Graded restricted isomorphisms between the m0^λ(p).
//!
//! A graded isomorphism is diagonal, `e_k ↦ μ_k e_k`, and preserving the
//! bracket forces `μ_k = μ_2 μ_1^(k-2)` for `k ≥ 3`. It respects the p-maps
//! exactly when
//!
//! ```text
//! λ_k μ_p = μ_k^p λ'_k    for k = 1, ..., p.
//! ```
//!
//! [`iso_bruteforce`] decides isomorphism by trying every `(μ_1, μ_2)`.
//! [`proposition_formula_check`] compares that verdict against a second,
//! closed-form condition set (with its own `k = 1, 2` clauses) and reports
//! any disagreement without deciding which one is right.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{is_prime, Gf, Matrix};
use crate::Verdict;

/// Largest prime for which the `(p-1)²` search is allowed.
pub const SEARCH_LIMIT: u32 = 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsoWitness {
    pub mu1: u32,
    pub mu2: u32,
}

impl IsoWitness {
    /// `μ_k` for 1-based `k`.
    pub fn scale(&self, gf: Gf, k: usize) -> u32 {
        mu_k(gf, self.mu1, self.mu2, k)
    }

    /// The diagonal map `e_k ↦ μ_k e_k` on m0(p).
    pub fn matrix(&self, gf: Gf) -> Matrix {
        let n = gf.modulus() as usize;
        let mut m = Matrix::zeros(gf, n, n);
        for k in 0..n {
            m[(k, k)] = self.scale(gf, k + 1);
        }
        m
    }

    /// Witness for the inverse map.
    pub fn inverse(&self, gf: Gf) -> Result<IsoWitness> {
        Ok(IsoWitness {
            mu1: gf.inv(self.mu1)?,
            mu2: gf.inv(self.mu2)?,
        })
    }
}

impl std::fmt::Display for IsoWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "mu1={}, mu2={}", self.mu1, self.mu2)
    }
}

pub fn mu_k(gf: Gf, mu1: u32, mu2: u32, k: usize) -> u32 {
    match k {
        1 => mu1,
        2 => mu2,
        _ => gf.mul(mu2, gf.pow(mu1, k as u64 - 2)),
    }
}

fn validate(p: u32, lambda: &[u32], lambda_prime: &[u32]) -> Result<Gf> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    for l in [lambda, lambda_prime] {
        if l.len() != p as usize {
            return Err(Error::DimensionMismatch {
                expected: p as usize,
                found: l.len(),
            });
        }
    }
    Gf::new(p)
}

fn condition_holds(gf: Gf, lambda: &[u32], lambda_prime: &[u32], mu1: u32, mu2: u32) -> Verdict<usize> {
    let p = gf.modulus() as usize;
    let mu_p = mu_k(gf, mu1, mu2, p);
    for k in 1..=p {
        let lhs = gf.mul(gf.elem(lambda[k - 1] as i64), mu_p);
        let rhs = gf.mul(gf.pow(mu_k(gf, mu1, mu2, k), p as u64), gf.elem(lambda_prime[k - 1] as i64));
        if lhs != rhs {
            return Verdict::Fail(k);
        }
    }
    Verdict::Pass
}

/// Whether `e_k ↦ μ_k e_k` is a restricted isomorphism m0^λ(p) → m0^λ'(p);
/// fails with the first 1-based `k` violating the condition.
pub fn diag_iso_check(p: u32, lambda: &[u32], lambda_prime: &[u32], mu1: u32, mu2: u32) -> Result<Verdict<usize>> {
    let gf = validate(p, lambda, lambda_prime)?;
    if mu1.is_multiple_of(p) || mu2.is_multiple_of(p) {
        return Err(Error::ZeroScale);
    }
    Ok(condition_holds(gf, lambda, lambda_prime, mu1 % p, mu2 % p))
}

/// First witness in lexicographic `(μ_1, μ_2)` order, or `None` after the
/// full search.
pub fn iso_bruteforce(p: u32, lambda: &[u32], lambda_prime: &[u32]) -> Result<Option<IsoWitness>> {
    if p > SEARCH_LIMIT {
        return Err(Error::SearchLimit { p, limit: SEARCH_LIMIT });
    }
    let gf = validate(p, lambda, lambda_prime)?;
    for mu1 in gf.units() {
        for mu2 in gf.units() {
            if condition_holds(gf, lambda, lambda_prime, mu1, mu2).passed() {
                return Ok(Some(IsoWitness { mu1, mu2 }));
            }
        }
    }
    Ok(None)
}

/// `λ_k = μ_k^p μ_p^(-1) λ'_k`: the λ that `(μ_1, μ_2)` carries onto `λ'`.
pub fn transform_lambda(p: u32, lambda_prime: &[u32], mu1: u32, mu2: u32) -> Result<Vec<u32>> {
    let gf = validate(p, lambda_prime, lambda_prime)?;
    if mu1.is_multiple_of(p) || mu2.is_multiple_of(p) {
        return Err(Error::ZeroScale);
    }
    let n = p as usize;
    let inv_mu_p = gf.inv(mu_k(gf, mu1, mu2, n))?;
    Ok((1..=n)
        .map(|k| {
            let s = gf.mul(gf.pow(mu_k(gf, mu1, mu2, k), p as u64), inv_mu_p);
            gf.mul(s, gf.elem(lambda_prime[k - 1] as i64))
        })
        .collect())
}

/// The closed-form condition set: `λ_1 = μ_1 λ'_1`, `λ_2 = μ_2 λ'_2` and
/// `λ_k = μ_2^(p-1) μ_1^(p(k-3)+2) λ'_k` for `k ≥ 3`.
pub fn statement_condition(p: u32, lambda: &[u32], lambda_prime: &[u32], mu1: u32, mu2: u32) -> Result<bool> {
    let gf = validate(p, lambda, lambda_prime)?;
    let n = p as usize;
    let l = |k: usize| gf.elem(lambda[k - 1] as i64);
    let lp = |k: usize| gf.elem(lambda_prime[k - 1] as i64);
    if l(1) != gf.mul(mu1, lp(1)) || l(2) != gf.mul(mu2, lp(2)) {
        return Ok(false);
    }
    for k in 3..=n {
        let e = p as u64 * (k as u64 - 3) + 2;
        let s = gf.mul(gf.pow(mu2, p as u64 - 1), gf.pow(mu1, e));
        if l(k) != gf.mul(s, lp(k)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaCheck {
    pub prime: u32,
    pub lambda: Vec<u32>,
    pub lambda_prime: Vec<u32>,
    /// Verdict of the exhaustive search.
    pub bruteforce: Option<IsoWitness>,
    /// First `(μ_1, μ_2)` satisfying the closed-form condition set.
    pub statement: Option<IsoWitness>,
    pub agree: bool,
}

pub fn proposition_formula_check(p: u32, lambda: &[u32], lambda_prime: &[u32]) -> Result<FormulaCheck> {
    let gf = validate(p, lambda, lambda_prime)?;
    let bruteforce = iso_bruteforce(p, lambda, lambda_prime)?;
    let mut statement = None;
    'search: for mu1 in gf.units() {
        for mu2 in gf.units() {
            if statement_condition(p, lambda, lambda_prime, mu1, mu2)? {
                statement = Some(IsoWitness { mu1, mu2 });
                break 'search;
            }
        }
    }
    Ok(FormulaCheck {
        prime: p,
        lambda: lambda.to_vec(),
        lambda_prime: lambda_prime.to_vec(),
        agree: bruteforce.is_some() == statement.is_some(),
        bruteforce,
        statement,
    })
}

/// Partition of `lambdas` into isomorphism classes, in order of first
/// appearance.
pub fn isomorphism_classes(p: u32, lambdas: &[Vec<u32>]) -> Result<Vec<Vec<Vec<u32>>>> {
    let mut classes: Vec<Vec<Vec<u32>>> = Vec::new();
    for l in lambdas {
        let mut placed = false;
        for class in classes.iter_mut() {
            if iso_bruteforce(p, &class[0], l)?.is_some() {
                class.push(l.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![l.clone()]);
        }
    }
    Ok(classes)
}

/// Every λ ∈ GF(p)^p, in base-p counting order with `λ_1` varying fastest.
pub fn all_lambdas(p: u32) -> Vec<Vec<u32>> {
    let n = p as usize;
    let total = (p as u64).pow(p);
    (0..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = (code % p as u64) as u32;
                    code /= p as u64;
                    d
                })
                .collect()
        })
        .collect()
}
