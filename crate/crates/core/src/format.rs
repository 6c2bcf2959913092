//! JSON description of algebras, restricted algebras and extensions.
//!
//! ```json
//! {
//!   "prime": 3,
//!   "dim": 3,
//!   "weights": [1, 2, 3],
//!   "labels": ["e_1", "e_2", "e_3"],
//!   "brackets": [{"i": 1, "j": 2, "coeffs": [0, 0, 1]}],
//!   "lambda": [0, 0, 1],
//!   "p_powers": [[0, 0, 0], [0, 0, 0], [0, 0, 1]]
//! }
//! ```
//!
//! Bracket indices are 1-based and only `i < j` is written. `lambda` and
//! `p_powers` appear for restricted algebras, `extension_of` for extensions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::ExtensionResult;
use crate::lie::{default_labels, Element, LieAlgebra};
use crate::linalg::Gf;
use crate::restricted::RestrictedAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionOf {
    pub base_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_lambda: Option<Vec<u32>>,
    pub cocycle: String,
    pub restricted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub prime: u32,
    pub dim: usize,
    pub weights: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub brackets: Vec<BracketRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_powers: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension_of: Option<ExtensionOf>,
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &LieAlgebra) -> Self {
        AlgebraFile {
            prime: algebra.prime(),
            dim: algebra.dim(),
            weights: algebra.weights().to_vec(),
            labels: Some(algebra.labels().to_vec()),
            brackets: algebra
                .brackets()
                .map(|(i, j, v)| BracketRecord {
                    i: i + 1,
                    j: j + 1,
                    coeffs: v.to_vec(),
                })
                .collect(),
            lambda: None,
            p_powers: None,
            extension_of: None,
        }
    }

    pub fn from_restricted(r: &RestrictedAlgebra) -> Self {
        let mut file = AlgebraFile::from_algebra(r.algebra());
        file.lambda = r.lambda().map(|l| l.to_vec());
        file.p_powers = Some(r.basis_p_powers().iter().map(|v| v.0.clone()).collect());
        file
    }

    pub fn from_extension(ext: &ExtensionResult, base_lambda: Option<&[u32]>) -> Self {
        let mut file = match ext.restricted() {
            Some(r) => AlgebraFile::from_restricted(&r),
            None => AlgebraFile::from_algebra(&ext.algebra),
        };
        file.extension_of = Some(ExtensionOf {
            base_dim: ext.algebra.dim() - 1,
            base_lambda: base_lambda.map(|l| l.to_vec()),
            cocycle: ext.source.clone(),
            restricted: ext.p_powers.is_some(),
        });
        file
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let gf = Gf::new(self.prime)?;
        let n = self.dim;
        if self.weights.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.weights.len(),
            });
        }
        let labels = self.labels.clone().unwrap_or_else(|| default_labels(n));
        if labels.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: labels.len(),
            });
        }
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if b.i == 0 || b.j == 0 || b.i > n || b.j > n {
                return Err(Error::IndexOutOfRange(format!("bracket ({}, {}) in dimension {n}", b.i, b.j)));
            }
            if b.coeffs.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: b.coeffs.len(),
                });
            }
            brackets.push((b.i - 1, b.j - 1, b.coeffs.clone()));
        }
        LieAlgebra::new(gf, n, self.weights.clone(), labels, brackets)
    }

    /// The restricted structure, if the file carries one. With `lambda` on
    /// m0(p) the p-map is rebuilt from λ and must agree with any listed
    /// `p_powers`.
    pub fn to_restricted(&self) -> Result<Option<RestrictedAlgebra>> {
        let algebra = self.to_algebra()?;
        let listed = match &self.p_powers {
            Some(pp) => Some(
                RestrictedAlgebra::new(algebra.clone(), pp.iter().map(|v| Element(v.clone())).collect())?,
            ),
            None => None,
        };
        if let Some(lambda) = &self.lambda {
            let m0 = LieAlgebra::m0(self.prime)?;
            if m0 != algebra {
                return Err(Error::InvalidAlgebra("lambda given for an algebra other than m0(p)".into()));
            }
            let r = RestrictedAlgebra::m0_lambda(self.prime, lambda)?;
            if let Some(listed) = &listed {
                if listed.basis_p_powers() != r.basis_p_powers() {
                    return Err(Error::InvalidAlgebra("p_powers disagree with lambda".into()));
                }
            }
            return Ok(Some(r));
        }
        Ok(listed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::Cochain2;
    use crate::extension::extend_ordinary;

    #[test]
    fn m0_round_trip() {
        for p in [2u32, 3, 7] {
            let a = LieAlgebra::m0(p).unwrap();
            let text = AlgebraFile::from_algebra(&a).to_json();
            let back = AlgebraFile::from_json(&text).unwrap();
            assert_eq!(back.to_json(), text);
            let b = back.to_algebra().unwrap();
            assert_eq!(b, a);
            assert_eq!(b.labels(), a.labels());
        }
    }

    #[test]
    fn restricted_round_trip() {
        let r = RestrictedAlgebra::m0_lambda(5, &[1, 0, 2, 0, 4]).unwrap();
        let text = AlgebraFile::from_restricted(&r).to_json();
        let back = AlgebraFile::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        let r2 = back.to_restricted().unwrap().unwrap();
        assert_eq!(r2, r);
    }

    #[test]
    fn extension_round_trip() {
        let a = LieAlgebra::m0(5).unwrap();
        let ext = extend_ordinary(&a, &Cochain2::basis(a.field(), 5, 0, 4)).unwrap();
        let file = AlgebraFile::from_extension(&ext, None);
        let text = file.to_json();
        assert!(text.contains("extension_of"));
        let back = AlgebraFile::from_json(&text).unwrap();
        assert_eq!(back.to_algebra().unwrap(), ext.algebra);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn bad_files() {
        assert!(AlgebraFile::from_json("{").is_err());
        let mut f = AlgebraFile::from_algebra(&LieAlgebra::m0(3).unwrap());
        f.brackets[0].i = 9;
        assert!(f.to_algebra().is_err());
        let mut f = AlgebraFile::from_algebra(&LieAlgebra::m0(3).unwrap());
        f.prime = 4;
        assert_eq!(f.to_algebra(), Err(Error::NotPrime(4)));
        let mut f = AlgebraFile::from_restricted(&RestrictedAlgebra::m0_lambda(3, &[0, 0, 1]).unwrap());
        f.p_powers.as_mut().unwrap()[0][2] = 1;
        assert!(f.to_restricted().is_err());
    }
}
