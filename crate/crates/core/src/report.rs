//! Serializable per-family reports: one record type per CLI subcommand plus
//! the combined sweep record. `finding()` is true when a mathematical check
//! did not come out as the construction predicts.

use serde::{Deserialize, Serialize};

use crate::alexander::{burau_alexander, fox_alexander};
use crate::braid::{FamilyParams, OneBridgeParams};
use crate::homology::{abelianize, audit_framing, AbelianizationReport, FramingAudit};
use crate::laurent::PolyRecord;
use crate::nlo::{
    criterion_check, derive_beta_monotone, surgery_threshold, verify_certificate, Certificate,
    CriterionReport, Policy, SlopeBound,
};
use crate::presentation::rewrite::{replay_s_script, s_script};
use crate::presentation::{
    derive_relator, svk_relations, KnotGroupPresentation, PresentationRecord,
};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub params: OneBridgeParams,
    pub family: Option<FamilyParams>,
    /// Signed generator indices, `i` for `σᵢ`.
    pub braid: Vec<i64>,
    pub permutation: String,
    pub is_knot: bool,
    pub exponent_sum: i64,
    pub claimed_framing: i64,
    /// Whether the permutation matches the family's closed-form cycle.
    pub closed_form_matches: Option<bool>,
}

impl ClassifyReport {
    pub fn new(params: OneBridgeParams, family: Option<FamilyParams>) -> Self {
        let word = params.word();
        let perm = word.induced_permutation();
        Self {
            params,
            family,
            braid: word
                .letters()
                .iter()
                .map(|l| l.index as i64 * l.sign())
                .collect(),
            permutation: perm.cycle_notation(" "),
            is_knot: word.is_knot(),
            exponent_sum: word.exponent_sum(),
            claimed_framing: params.claimed_surface_framing(),
            closed_form_matches: family.map(|f| f.closed_form_permutation() == perm),
        }
    }

    /// Family members must close to knots along the closed-form cycle.
    pub fn finding(&self) -> bool {
        self.family.is_some() && (!self.is_knot || self.closed_form_matches != Some(true))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentReport {
    pub family: FamilyParams,
    pub presentation: PresentationRecord,
    pub rederived_relator: Option<String>,
    pub rederivation_ok: bool,
    /// The rewrite script from the unsimplified to the stated `s` replays.
    pub surface_script_ok: bool,
    pub error: Option<String>,
}

impl PresentReport {
    pub fn new(f: &FamilyParams) -> Result<Self, Error> {
        let pres = KnotGroupPresentation::for_family(f)?;
        let derived = derive_relator(&svk_relations(f));
        let surface_script_ok = replay_s_script(&pres, &s_script(f)?).is_ok();
        Ok(Self {
            family: *f,
            presentation: PresentationRecord::from(&pres),
            rederivation_ok: derived.as_ref().is_ok_and(|r| pres.relator_equivalent(r)),
            rederived_relator: derived.as_ref().ok().map(ToString::to_string),
            surface_script_ok,
            error: derived.err().map(|e| e.to_string()),
        })
    }

    pub fn finding(&self) -> bool {
        !self.rederivation_ok || !self.surface_script_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub family: FamilyParams,
    pub abelianization: AbelianizationReport,
    pub audit: Option<FramingAudit>,
}

impl AuditReport {
    pub fn new(f: &FamilyParams) -> Result<Self, Error> {
        let pres = KnotGroupPresentation::for_family(f)?;
        Ok(Self {
            family: *f,
            abelianization: abelianize(&pres),
            audit: audit_framing(&pres).ok(),
        })
    }

    /// `H₁ ≠ Z`, no homological framing, or `v ≠ v*`.
    pub fn finding(&self) -> bool {
        !self.abelianization.h1_is_z || self.audit.is_none_or(|a| a.discrepancy != 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderReport {
    pub family: FamilyParams,
    pub fox: Option<PolyRecord>,
    pub burau: Option<PolyRecord>,
    pub agree: bool,
    pub error: Option<String>,
}

impl AlexanderReport {
    pub fn new(f: &FamilyParams) -> Result<Self, Error> {
        let pres = KnotGroupPresentation::for_family(f)?;
        let fox = fox_alexander(&pres, &abelianize(&pres));
        let burau = burau_alexander(&f.one_bridge().word());
        let agree = matches!((&fox, &burau), (Ok(a), Ok(b)) if a.equal_up_to_units(b));
        let error = fox
            .as_ref()
            .err()
            .or(burau.as_ref().err())
            .map(ToString::to_string);
        Ok(Self {
            family: *f,
            fox: fox.ok().and_then(|p| PolyRecord::from_poly(&p)),
            burau: burau.ok().and_then(|p| PolyRecord::from_poly(&p)),
            agree,
            error,
        })
    }

    pub fn finding(&self) -> bool {
        !self.agree
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NloReport {
    pub family: FamilyParams,
    pub criterion: CriterionReport,
    pub certificate_steps: usize,
    pub verified: bool,
    pub verify_error: Option<String>,
    pub policy: Policy,
    pub bound: Option<SlopeBound>,
    pub bound_error: Option<String>,
}

impl NloReport {
    /// The report and the certificate it verified.
    pub fn new(f: &FamilyParams, policy: Policy) -> Result<(Self, Certificate), Error> {
        let pres = KnotGroupPresentation::for_family(f)?;
        let cert = derive_beta_monotone(&pres)?;
        let verdict = verify_certificate(&cert, &pres);
        let bound = surgery_threshold(&pres, &f.one_bridge(), policy);
        let report = Self {
            family: *f,
            criterion: criterion_check(&pres),
            certificate_steps: cert.steps.len(),
            verified: verdict.is_ok(),
            verify_error: verdict.err().map(|e| e.to_string()),
            policy,
            bound_error: bound.as_ref().err().map(ToString::to_string),
            bound: bound.ok(),
        };
        Ok((report, cert))
    }

    pub fn finding(&self) -> bool {
        !self.criterion.passes(self.policy) || !self.verified || self.bound.is_none()
    }
}

/// Everything checked for one parameter set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub family: FamilyParams,
    pub is_knot: bool,
    pub closed_form_matches: bool,
    pub rederivation_ok: bool,
    pub surface_script_ok: bool,
    pub audit: Option<FramingAudit>,
    pub alexander_agree: bool,
    pub certificate_verified: bool,
    pub criterion_pass: bool,
    pub claimed_bound: Option<SlopeBound>,
    pub audited_bound: Option<SlopeBound>,
}

impl SweepRecord {
    pub fn new(f: &FamilyParams) -> Result<Self, Error> {
        let classify = ClassifyReport::new(f.one_bridge(), Some(*f));
        let present = PresentReport::new(f)?;
        let audit = AuditReport::new(f)?;
        let alexander = AlexanderReport::new(f)?;
        let (nlo, _) = NloReport::new(f, Policy::Claimed)?;
        let pres = KnotGroupPresentation::for_family(f)?;
        Ok(Self {
            family: *f,
            is_knot: classify.is_knot,
            closed_form_matches: classify.closed_form_matches == Some(true),
            rederivation_ok: present.rederivation_ok,
            surface_script_ok: present.surface_script_ok,
            audit: audit.audit,
            alexander_agree: alexander.agree,
            certificate_verified: nlo.verified,
            criterion_pass: nlo.criterion.pass,
            claimed_bound: nlo.bound,
            audited_bound: surgery_threshold(&pres, &f.one_bridge(), Policy::Audited).ok(),
        })
    }

    pub fn finding(&self) -> bool {
        !(self.is_knot
            && self.closed_form_matches
            && self.rederivation_ok
            && self.surface_script_ok
            && self.alexander_agree
            && self.certificate_verified
            && self.criterion_pass)
            || self.audit.is_none_or(|a| a.discrepancy != 0)
    }
}

/// One JSONL line, tagged by the subcommand that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Record {
    Classify(ClassifyReport),
    Present(PresentReport),
    Audit(AuditReport),
    Alexander(AlexanderReport),
    Nlo(NloReport),
    Sweep(SweepRecord),
    Props(crate::props::PropReport),
}

impl Record {
    pub fn finding(&self) -> bool {
        match self {
            Record::Classify(r) => r.finding(),
            Record::Present(r) => r.finding(),
            Record::Audit(r) => r.finding(),
            Record::Alexander(r) => r.finding(),
            Record::Nlo(r) => r.finding(),
            Record::Sweep(r) => r.finding(),
            Record::Props(r) => !r.passed(),
        }
    }
}
