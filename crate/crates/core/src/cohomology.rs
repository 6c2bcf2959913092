//! H¹, H², H¹₊ and H²₊ with labeled representatives.
//!
//! Cocycle spaces are kernels of explicit matrices over GF(p), coboundary
//! spaces are column spans, and representatives are picked greedily from a
//! candidate list (see [`complement_basis`]). For m0(p) the candidate list puts
//! the distinguished cocycles `e^{1,p}` and `φ_k` first, so the representatives
//! come out in a predictable, readable form.
//!
//! Restricted 2-cochains are flattened to `[σ_ij | ω(e_k)]`. This is legitimate
//! because Frobenius is the identity on GF(p), so the basis values of `ω` add
//! and scale like ordinary coordinates.

use serde::{Deserialize, Serialize};

use crate::cochain::{d1_matrix, d2_matrix, pair_count, pairs, phi_k, Cochain1, Cochain2};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{complement_basis, is_prime, Gf, Matrix};
use crate::restricted::RestrictedAlgebra;
use crate::restricted_cochain::{d1_star, RestrictedTwoCochain};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologySummary {
    pub prime: u32,
    #[serde(default)]
    pub lambda: Option<Vec<u32>>,
    pub degree: u8,
    pub restricted: bool,
    pub dim: usize,
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub representatives: Vec<String>,
    /// Coordinates of the representatives in the cochain space.
    #[serde(skip)]
    pub representative_coords: Vec<Vec<u32>>,
    /// Dimension of the algebra the cochains live on.
    #[serde(skip)]
    pub algebra_dim: usize,
}

impl CohomologySummary {
    fn field(&self) -> Gf {
        Gf::new(self.prime).expect("summary built from a field")
    }

    pub fn representatives_deg1(&self) -> Vec<Cochain1> {
        assert_eq!(self.degree, 1);
        self.representative_coords
            .iter()
            .map(|v| Cochain1::from_coeffs(self.field(), v.clone()))
            .collect()
    }

    pub fn representatives_deg2(&self) -> Vec<Cochain2> {
        assert!(self.degree == 2 && !self.restricted);
        self.representative_coords
            .iter()
            .map(|v| Cochain2::from_coords(self.field(), self.algebra_dim, v.clone()).expect("pair coordinates"))
            .collect()
    }

    pub fn representatives_restricted(&self) -> Vec<RestrictedTwoCochain> {
        assert!(self.degree == 2 && self.restricted);
        self.representative_coords
            .iter()
            .map(|v| RestrictedTwoCochain::from_coords(self.field(), self.algebra_dim, v).expect("restricted coordinates"))
            .collect()
    }
}

/// `(kernel basis, image spanning set)` for one degree.
struct Complex {
    kernel: Vec<Vec<u32>>,
    image: Vec<Vec<u32>>,
    len: usize,
}

fn summarize(
    gf: Gf,
    complex: Complex,
    preferred: Vec<Vec<u32>>,
    label: impl Fn(&[u32]) -> String,
    header: (u8, bool, Option<Vec<u32>>, usize),
) -> CohomologySummary {
    let Complex { kernel, image, len } = complex;
    let kernel_rows = Matrix::from_row_vectors(gf, len, &kernel);
    // v lies in the kernel iff it adds nothing to the kernel's span
    let in_kernel = |v: &Vec<u32>| {
        let mut rows = kernel.clone();
        rows.push(v.clone());
        Matrix::from_row_vectors(gf, len, &rows).rank() == kernel_rows.rank()
    };
    let mut candidates: Vec<Vec<u32>> = preferred.into_iter().filter(|v| in_kernel(v)).collect();
    candidates.extend(kernel.iter().cloned());
    let image_dim = crate::linalg::rank_of(gf, len, &image);
    let reps = complement_basis(gf, len, &image, &candidates).expect("coboundaries are cocycles");
    let (degree, restricted, lambda, algebra_dim) = header;
    CohomologySummary {
        prime: gf.modulus(),
        lambda,
        degree,
        restricted,
        dim: kernel.len() - image_dim,
        kernel_dim: kernel.len(),
        image_dim,
        representatives: reps.iter().map(|v| label(v)).collect(),
        representative_coords: reps,
        algebra_dim,
    }
}

fn unit(len: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[k] = 1;
    v
}

/// H¹ = ker d¹, since d⁰ = 0.
pub fn h1(algebra: &LieAlgebra) -> CohomologySummary {
    let gf = algebra.field();
    let n = algebra.dim();
    let complex = Complex {
        kernel: d1_matrix(algebra).kernel_basis(),
        image: Vec::new(),
        len: n,
    };
    let preferred = (0..n).map(|k| unit(n, k)).collect();
    summarize(
        gf,
        complex,
        preferred,
        |v| Cochain1::from_coeffs(gf, v.to_vec()).to_string(),
        (1, false, None, n),
    )
}

/// Matrix whose kernel is ker d¹₊: the rows of d¹ and `ψ(e_k^[p]) = 0`.
pub fn d1_star_kernel_matrix(r: &RestrictedAlgebra) -> Matrix {
    let gf = r.field();
    let n = r.dim();
    let ind_rows: Vec<Vec<u32>> = r.basis_p_powers().iter().map(|v| v.0.clone()).collect();
    d1_matrix(r.algebra()).vstack(&Matrix::from_row_vectors(gf, n, &ind_rows))
}

/// H¹₊ = ker d¹₊ = {ψ ∈ ker d¹ : ind¹(ψ) = 0}.
pub fn h1_star(r: &RestrictedAlgebra) -> CohomologySummary {
    let gf = r.field();
    let n = r.dim();
    let complex = Complex {
        kernel: d1_star_kernel_matrix(r).kernel_basis(),
        image: Vec::new(),
        len: n,
    };
    let preferred = (0..n).map(|k| unit(n, k)).collect();
    summarize(
        gf,
        complex,
        preferred,
        |v| Cochain1::from_coeffs(gf, v.to_vec()).to_string(),
        (1, true, r.lambda().map(|l| l.to_vec()), n),
    )
}

fn is_m0(algebra: &LieAlgebra) -> bool {
    LieAlgebra::m0(algebra.prime()).map(|m| &m == algebra).unwrap_or(false)
}

/// `e^{1,p}` followed by `φ_5, φ_7, ..., φ_{p+2}`, as pair coordinates. Empty
/// unless the algebra is m0(p).
fn distinguished_cocycles(algebra: &LieAlgebra) -> Vec<Vec<u32>> {
    if !is_m0(algebra) {
        return Vec::new();
    }
    let gf = algebra.field();
    let p = algebra.prime();
    let n = algebra.dim();
    let mut out = vec![Cochain2::basis(gf, n, 0, n - 1).coords().to_vec()];
    for k in (5..=p as usize + 2).step_by(2) {
        out.push(phi_k(p, k).expect("odd k in range").coords().to_vec());
    }
    out
}

/// H² = ker d² / im d¹.
pub fn h2(algebra: &LieAlgebra) -> CohomologySummary {
    let gf = algebra.field();
    let n = algebra.dim();
    let np = pair_count(n);
    let d1m = d1_matrix(algebra);
    let complex = Complex {
        kernel: d2_matrix(algebra).kernel_basis(),
        image: (0..n).map(|k| d1m.column(k)).collect(),
        len: np,
    };
    let mut preferred = distinguished_cocycles(algebra);
    preferred.extend((0..np).map(|k| unit(np, k)));
    summarize(
        gf,
        complex,
        preferred,
        |v| Cochain2::from_coords(gf, n, v.to_vec()).expect("pair coordinates").to_string(),
        (2, false, None, n),
    )
}

/// Matrix whose kernel is ker d²₊ in `[σ | ω]` coordinates: `d²φ = 0` and
/// `φ(e_i ∧ e_j^[p]) = 0` for all basis pairs. `ω` is unconstrained.
pub fn d2_star_kernel_matrix(r: &RestrictedAlgebra) -> Matrix {
    let gf = r.field();
    let n = r.dim();
    let ps = pairs(n);
    let np = ps.len();
    let d2m = d2_matrix(r.algebra());
    let mut rows: Vec<Vec<u32>> = (0..d2m.rows())
        .map(|i| {
            let mut row = d2m.row(i).to_vec();
            row.resize(np + n, 0);
            row
        })
        .collect();
    for i in 0..n {
        for pj in r.basis_p_powers() {
            // φ(e_i ∧ v) = Σ_{a<b} σ_ab (δ_ia v_b - δ_ib v_a)
            let mut row = vec![0; np + n];
            for (idx, &(a, b)) in ps.iter().enumerate() {
                if a == i {
                    row[idx] = gf.add(row[idx], pj.0[b]);
                }
                if b == i {
                    row[idx] = gf.sub(row[idx], pj.0[a]);
                }
            }
            rows.push(row);
        }
    }
    Matrix::from_row_vectors(gf, np + n, &rows)
}

/// Columns `d¹₊(e^k)` in `[σ | ω]` coordinates.
pub fn d1_star_matrix(r: &RestrictedAlgebra) -> Matrix {
    let gf = r.field();
    let n = r.dim();
    let cols: Vec<Vec<u32>> = (0..n)
        .map(|k| d1_star(r, &Cochain1::basis(gf, n, k)).coords())
        .collect();
    Matrix::from_columns(gf, pair_count(n) + n, &cols)
}

/// H²₊ = ker d²₊ / im d¹₊.
pub fn h2_star(r: &RestrictedAlgebra) -> CohomologySummary {
    let gf = r.field();
    let n = r.dim();
    let np = pair_count(n);
    let len = np + n;
    let d1s = d1_star_matrix(r);
    let complex = Complex {
        kernel: d2_star_kernel_matrix(r).kernel_basis(),
        image: (0..n).map(|k| d1s.column(k)).collect(),
        len,
    };
    let lift = |sigma: Vec<u32>| {
        let mut v = sigma;
        v.resize(len, 0);
        v
    };
    let mut preferred: Vec<Vec<u32>> = (0..n).map(|k| unit(len, np + k)).collect();
    preferred.extend(distinguished_cocycles(r.algebra()).into_iter().map(lift));
    preferred.extend((0..np).map(|k| unit(len, k)));
    summarize(
        gf,
        complex,
        preferred,
        |v| RestrictedTwoCochain::from_coords(gf, n, v).expect("restricted coordinates").to_string(),
        (2, true, r.lambda().map(|l| l.to_vec()), n),
    )
}

/// Dimensions predicted by the closed-form theorems for m0^λ(p).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedSummary {
    pub prime: u32,
    pub lambda: Vec<u32>,
    pub h1: usize,
    pub h1_star: usize,
    pub h2: usize,
    pub h2_star: usize,
    /// `dim ker d²`, known for `p ≥ 3`.
    pub h2_kernel: Option<usize>,
    /// `dim ker d²₊` at `λ = 0`, known for `p ≥ 3`.
    pub h2_star_kernel: Option<usize>,
}

pub fn expected_summary(p: u32, lambda: &[u32]) -> Result<ExpectedSummary> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if lambda.len() != p as usize {
        return Err(Error::DimensionMismatch {
            expected: p as usize,
            found: lambda.len(),
        });
    }
    let lambda: Vec<u32> = lambda.iter().map(|&l| l % p).collect();
    let zero = lambda.iter().all(|&l| l == 0);
    let pu = p as usize;
    let e = if p == 2 {
        ExpectedSummary {
            prime: p,
            lambda,
            h1: 2,
            h1_star: if zero { 2 } else { 1 },
            h2: 1,
            h2_star: if zero { 3 } else { 1 },
            h2_kernel: None,
            h2_star_kernel: None,
        }
    } else {
        ExpectedSummary {
            prime: p,
            lambda,
            h1: 2,
            h1_star: 2,
            h2: pu.div_ceil(2),
            h2_star: if zero { (3 * pu).div_ceil(2) } else { (3 * pu - 3) / 2 },
            h2_kernel: Some((3 * pu - 3) / 2),
            h2_star_kernel: if zero { Some((5 * pu - 3) / 2) } else { None },
        }
    };
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub field: String,
    pub expected: usize,
    pub computed: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub prime: u32,
    pub lambda: Vec<u32>,
    pub rows: Vec<ComparisonRow>,
}

impl Comparison {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ComparisonRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

fn row(field: &str, expected: usize, computed: usize) -> ComparisonRow {
    ComparisonRow {
        field: field.to_string(),
        expected,
        computed,
        pass: expected == computed,
    }
}

/// Compares one computed summary with the matching expected fields. Never
/// fails: mismatches become rows with `pass = false`.
pub fn compare(computed: &CohomologySummary, expected: &ExpectedSummary) -> Comparison {
    let name = match (computed.degree, computed.restricted) {
        (1, false) => "H1",
        (1, true) => "H1*",
        (2, false) => "H2",
        _ => "H2*",
    };
    let (dim, kernel) = match name {
        "H1" => (expected.h1, None),
        "H1*" => (expected.h1_star, None),
        "H2" => (expected.h2, expected.h2_kernel),
        _ => (expected.h2_star, expected.h2_star_kernel),
    };
    let mut rows = vec![row(&format!("{name} dim"), dim, computed.dim)];
    if let Some(k) = kernel {
        rows.push(row(&format!("{name} kernel_dim"), k, computed.kernel_dim));
    }
    Comparison {
        prime: expected.prime,
        lambda: expected.lambda.clone(),
        rows,
    }
}

/// All four cohomology groups of m0^λ(p) with their comparison rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullReport {
    pub h1: CohomologySummary,
    pub h1_star: CohomologySummary,
    pub h2: CohomologySummary,
    pub h2_star: CohomologySummary,
    pub comparison: Comparison,
}

pub fn full_report(p: u32, lambda: &[u32]) -> Result<FullReport> {
    let expected = expected_summary(p, lambda)?;
    let r = RestrictedAlgebra::m0_lambda(p, lambda)?;
    let h1 = h1(r.algebra());
    let h1s = h1_star(&r);
    let h2 = h2(r.algebra());
    let h2s = h2_star(&r);
    let mut rows = Vec::new();
    for s in [&h1, &h1s, &h2, &h2s] {
        rows.extend(compare(s, &expected).rows);
    }
    Ok(FullReport {
        h1,
        h1_star: h1s,
        h2,
        h2_star: h2s,
        comparison: Comparison {
            prime: p,
            lambda: expected.lambda,
            rows,
        },
    })
}
