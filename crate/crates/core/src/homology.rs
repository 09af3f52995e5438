//! Abelianization audit of a two-generator one-relator presentation.
//!
//! With relator exponent vector `(e_α, e_β)`, `H₁ = Z²/⟨(e_α, e_β)⟩`, which is
//! `Z` exactly when `gcd(|e_α|, |e_β|) = 1`. When `|e_β| = 1`, `β ≡ α^e` with
//! `e_α + e·e_β = 0`, and a word `w` abelianizes to `α^{w_α + e·w_β}`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::freeword::GroupWord;
use crate::presentation::{KnotGroupPresentation, ALPHA, BETA};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("β is not a power of the meridian in H₁: relator exponents ({0}, {1})")]
    BetaNotUnit(i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianizationReport {
    pub relator_exponents: (i64, i64),
    pub h1_is_z: bool,
    /// `e` with `β ≡ α^e`, when `|e_β| = 1`.
    pub beta_power: Option<i64>,
    /// Exponent of `s` in `H₁ = ⟨α⟩`.
    pub homological_framing: Option<i64>,
    /// The same for the alternate reading of `s`, when there is one.
    pub alternate_homological_framing: Option<i64>,
    pub claimed_framing: i64,
    /// `v* − v`.
    pub discrepancy: Option<i64>,
}

impl AbelianizationReport {
    pub fn beta_is_unit(&self) -> bool {
        self.beta_power.is_some()
    }

    /// Image of `w` in `H₁ = ⟨α⟩`.
    pub fn abelian_exponent(&self, w: &GroupWord) -> Option<i64> {
        let e = self.beta_power?;
        let v = w.exponent_vector();
        Some(v.get(ALPHA) + e * v.get(BETA))
    }
}

pub fn abelianize(pres: &KnotGroupPresentation) -> AbelianizationReport {
    let v = pres.relator().exponent_vector();
    let (ea, eb) = (v.get(ALPHA), v.get(BETA));
    let h1_is_z = ea.abs().gcd(&eb.abs()) == 1;
    let beta_power = (eb.abs() == 1).then(|| -ea * eb);
    let mut report = AbelianizationReport {
        relator_exponents: (ea, eb),
        h1_is_z,
        beta_power,
        homological_framing: None,
        alternate_homological_framing: None,
        claimed_framing: pres.claimed_framing(),
        discrepancy: None,
    };
    report.homological_framing = report.abelian_exponent(pres.surface_framing());
    report.alternate_homological_framing = pres
        .alternate_surface_framing()
        .and_then(|alt| report.abelian_exponent(alt));
    report.discrepancy = report
        .homological_framing
        .map(|vs| vs - pres.claimed_framing());
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramingAudit {
    pub v: i64,
    pub v_star: i64,
    pub discrepancy: i64,
}

/// Claimed framing `v` next to the homological framing `v*`.
pub fn audit_framing(pres: &KnotGroupPresentation) -> Result<FramingAudit, HomologyError> {
    let r = abelianize(pres);
    match r.homological_framing {
        Some(v_star) => Ok(FramingAudit {
            v: r.claimed_framing,
            v_star,
            discrepancy: v_star - r.claimed_framing,
        }),
        None => Err(HomologyError::BetaNotUnit(
            r.relator_exponents.0,
            r.relator_exponents.1,
        )),
    }
}
