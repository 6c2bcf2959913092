//! Exact dense linear algebra over GF(p).

mod field;
mod matrix;

pub use field::{is_prime, Gf, MAX_PRIME};
pub use matrix::{complement_basis, in_span, rank_of, reduced_span, EchelonBasis, Matrix, Rref};
