//! Non-left-orderability: the criterion's hypotheses, certified derivations of
//! `β·t > t` from `α·t > t`, and surgery slope thresholds.

pub mod certificate;
pub mod derive;
pub mod mutate;
pub mod threshold;

pub use certificate::{
    verify_certificate, Certificate, CertificateRecord, DerivationStep, IneqFact, Rel, Rule,
    VerifyError,
};
pub use derive::{derive_beta_monotone, search_beta_monotone, DeriveError, SearchBound};
pub use mutate::mutate;
pub use threshold::{
    criterion_check, genus_positive_braid, surgery_threshold, CriterionReport, NloError, Policy,
    SlopeBound,
};
