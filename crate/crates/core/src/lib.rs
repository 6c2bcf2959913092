//! Exact ordinary and restricted cohomology of the filiform Lie algebras
//! m0^λ(p) over the prime field GF(p).
//!
//! The crate builds m0(p) and its restricted structures, assembles the
//! Chevalley-Eilenberg differentials in degrees 1 and 2 together with their
//! restricted counterparts, computes H¹, H², H¹₊ and H²₊ with explicit
//! representatives, constructs one-dimensional central extensions and decides
//! graded restricted isomorphism between the m0^λ(p).
//!
//! Everything is exact: all arithmetic happens in GF(p) and every routine is a
//! pure function of its inputs.

pub mod closed_form;
pub mod cochain;
pub mod cohomology;
pub mod error;
pub mod extension;
pub mod format;
pub mod iso;
pub mod lie;
pub mod linalg;
pub mod restricted;
pub mod restricted_cochain;
pub mod verify;

pub use cochain::{Cochain1, Cochain2, Cochain3};
pub use cohomology::{CohomologySummary, ExpectedSummary};
pub use error::{Error, Result};
pub use extension::ExtensionResult;
pub use lie::{Element, LieAlgebra};
pub use linalg::{Gf, Matrix};
pub use restricted::RestrictedAlgebra;
pub use restricted_cochain::{RestrictedThreeCochain, RestrictedTwoCochain};

/// Outcome of a structural check that can name a counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}
