//! Exact computations on the 1-bridge braids `B(ω, t+mω, b)`: closures, knot
//! group presentations and their re-derivation, peripheral audits, Alexander
//! polynomials, and certified non-left-orderability derivations.

pub mod alexander;
pub mod braid;
pub mod freeword;
pub mod homology;
pub mod laurent;
pub mod nlo;
pub mod presentation;
pub mod props;
pub mod report;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Braid(#[from] braid::BraidError),
    #[error(transparent)]
    Word(#[from] freeword::WordError),
    #[error(transparent)]
    Presentation(#[from] presentation::PresentationError),
    #[error(transparent)]
    Homology(#[from] homology::HomologyError),
    #[error(transparent)]
    Alexander(#[from] alexander::AlexanderError),
    #[error(transparent)]
    Derive(#[from] nlo::DeriveError),
    #[error(transparent)]
    Nlo(#[from] nlo::NloError),
}
