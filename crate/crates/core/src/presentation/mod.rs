//! Two-generator one-relator knot group presentations for the three families,
//! with the peripheral words μ and s.
//!
//! A displayed relation `L = R` is stored as the relator `R·L⁻¹`, freely and
//! cyclically reduced. Relators are compared up to rotation and inversion.

pub mod rewrite;
pub mod svk;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{BraidError, FamilyParams};
use crate::freeword::{Alphabet, GroupWord, Letter, WordError};

pub use rewrite::{apply_relator, Direction, RewriteSite, SScript};
pub use svk::{derive_relator, svk_relations, LoopRelation, SvkData};

pub const ALPHA: usize = 0;
pub const BETA: usize = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error(transparent)]
    Params(#[from] BraidError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("presentations must use the alphabet (a, b)")]
    WrongAlphabet,
    #[error("the relator is trivial")]
    TrivialRelator,
    #[error("the unified form only covers families 2 and 3")]
    NotUnified,
    #[error("elimination step failed: {0}")]
    Elimination(String),
    #[error("no relator match at position {position}")]
    NoMatch { position: usize },
    #[error("no rewrite site relates step {step} to its successor")]
    NoSite { step: usize },
    #[error("script ends at {got} instead of {expected}")]
    ScriptMismatch { got: String, expected: String },
}

/// `⟨α, β | r⟩` with meridian `μ`, surface framing word `s` and the framing `v`
/// the construction claims for `s = μ^v λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotGroupPresentation {
    family: Option<FamilyParams>,
    relation: Option<(GroupWord, GroupWord)>,
    relator: GroupWord,
    meridian: GroupWord,
    surface_framing: GroupWord,
    alternate_surface_framing: Option<GroupWord>,
    claimed_framing: i64,
}

/// Word helpers over `(a, b)`.
pub(crate) mod words {
    use super::*;

    pub fn ab() -> Alphabet {
        Alphabet::alpha_beta()
    }

    pub fn a(e: i64) -> GroupWord {
        gen_power(ALPHA, e)
    }

    pub fn b(e: i64) -> GroupWord {
        gen_power(BETA, e)
    }

    fn gen_power(g: usize, e: i64) -> GroupWord {
        let l = if e < 0 {
            Letter::neg(g)
        } else {
            Letter::pos(g)
        };
        GroupWord::from_letters_unchecked(&ab(), vec![l; e.unsigned_abs() as usize])
    }

    /// `αβ`.
    pub fn ab1() -> GroupWord {
        cat(&[a(1), b(1)])
    }

    /// `βα`.
    pub fn ba1() -> GroupWord {
        cat(&[b(1), a(1)])
    }

    /// Literal juxtaposition of words over one alphabet.
    pub fn cat(parts: &[GroupWord]) -> GroupWord {
        let alphabet = parts
            .first()
            .map(|p| p.alphabet().clone())
            .unwrap_or_else(ab);
        let letters = parts
            .iter()
            .flat_map(|p| p.letters().iter().copied())
            .collect();
        GroupWord::from_letters_unchecked(&alphabet, letters)
    }

    /// Literal power (inverse repeated when `e < 0`).
    pub fn pw(w: &GroupWord, e: i64) -> GroupWord {
        w.raw_power(e)
    }
}

use words::{a, ab1, b, ba1, cat, pw};

/// `X = (βα)^k β α⁻¹ (αβ)^{−k}`; family 1 has `γ^m = αXα⁻¹`.
pub(crate) fn family1_x(k: i64) -> GroupWord {
    cat(&[pw(&ba1(), k), b(1), a(-1), pw(&ab1(), -k)])
}

/// `P = (βα)^k β^{ω−2k}`.
pub(crate) fn family1_p(w: i64, k: i64) -> GroupWord {
    cat(&[pw(&ba1(), k), b(w - 2 * k)])
}

/// `Y = P X^{−(ω−k)}`; family 1 has `γ = αYα⁻¹` and relation `Y^m = X`.
pub(crate) fn family1_y(w: i64, k: i64) -> GroupWord {
    cat(&[family1_p(w, k), pw(&family1_x(k), -(w - k))])
}

/// `C₁ = αβ^{n−k+1}`.
pub(crate) fn c1(n: i64, k: i64) -> GroupWord {
    cat(&[a(1), b(n - k + 1)])
}

/// `C₂ = αβ^{−n+k}`.
pub(crate) fn c2(n: i64, k: i64) -> GroupWord {
    cat(&[a(1), b(-n + k)])
}

/// `Q = C₁C₂`.
pub(crate) fn unified_q(n: i64, k: i64) -> GroupWord {
    cat(&[c1(n, k), c2(n, k)])
}

/// `E = (αβ)^{−b+1} β^{−n+k−1}`.
pub(crate) fn unified_e(n: i64, k: i64, bb: i64) -> GroupWord {
    cat(&[pw(&ab1(), -bb + 1), b(-n + k - 1)])
}

/// `Z = Q^{n−k+b} E`; families 2 and 3 have `γ = αZα⁻¹` and relation `Z^{m+1} = Q`.
pub(crate) fn unified_z(n: i64, k: i64, bb: i64) -> GroupWord {
    cat(&[pw(&unified_q(n, k), n - k + bb), unified_e(n, k, bb)])
}

/// `(n, k, m, b)` for families 2 and 3.
pub(crate) fn unified_params(f: &FamilyParams) -> Option<(i64, i64, i64, i64)> {
    match *f {
        FamilyParams::Family2 { n, k, m } => Some((n as i64, k as i64, m as i64, 2 * k as i64)),
        FamilyParams::Family3 { n, k, m } => Some((n as i64, k as i64, m as i64, 2 * k as i64 - 1)),
        FamilyParams::Family1 { .. } => None,
    }
}

impl KnotGroupPresentation {
    /// Builds from the displayed relation `lhs = rhs`.
    pub fn from_relation(
        lhs: &GroupWord,
        rhs: &GroupWord,
        surface_framing: &GroupWord,
        claimed_framing: i64,
    ) -> Result<Self, PresentationError> {
        let relator = rhs.then(&lhs.raw_inverse())?;
        let mut p = Self::from_relator(&relator, surface_framing, claimed_framing)?;
        p.relation = Some((lhs.clone(), rhs.clone()));
        Ok(p)
    }

    /// Builds directly from a relator, with `μ = α`.
    pub fn from_relator(
        relator: &GroupWord,
        surface_framing: &GroupWord,
        claimed_framing: i64,
    ) -> Result<Self, PresentationError> {
        let alphabet = words::ab();
        if relator.alphabet() != &alphabet || surface_framing.alphabet() != &alphabet {
            return Err(PresentationError::WrongAlphabet);
        }
        let relator = relator.cyclic_reduce();
        if relator.is_empty() {
            return Err(PresentationError::TrivialRelator);
        }
        Ok(Self {
            family: None,
            relation: None,
            relator,
            meridian: a(1),
            surface_framing: surface_framing.reduce(),
            alternate_surface_framing: None,
            claimed_framing,
        })
    }

    /// `(βα)^k β = {(βα)^k β^{ω−2k} [(βα)^k β α⁻¹ (αβ)^{−k}]^{−ω+k}}^m (αβ)^k α`,
    /// `s = α(βα)^k β^{ω−2k} (αβ)^k`, `v = (ω−1)(1+mω)+2k`.
    pub fn family1(w: usize, k: usize, m: usize) -> Result<Self, PresentationError> {
        let f = FamilyParams::family1(w, k, m)?;
        let (wi, ki, mi) = (w as i64, k as i64, m as i64);
        let lhs = cat(&[pw(&ba1(), ki), b(1)]);
        let rhs = cat(&[pw(&family1_y(wi, ki), mi), pw(&ab1(), ki), a(1)]);
        let s = cat(&[a(1), family1_p(wi, ki), pw(&ab1(), ki)]);
        let mut p = Self::from_relation(&lhs, &rhs, &s, f.one_bridge().claimed_surface_framing())?;
        p.family = Some(f);
        Ok(p)
    }

    /// `[(αβ^{n−k+1}αβ^{−n+k})^{n+k} (αβ)^{−2k+1} β^{−n+k−1}]^{m+1} = αβ^{n−k+1}αβ^{−n+k}`,
    /// `s = αβ^{n−k+1}(αβ)^{2k−1}αβ^{n−k+1}`, `v = 2n[2n−1+m(2n+1)]+2k`.
    pub fn family2(n: usize, k: usize, m: usize) -> Result<Self, PresentationError> {
        Self::unified_family(FamilyParams::family2(n, k, m)?)
    }

    /// `[(αβ^{n−k+1}αβ^{−n+k})^{n+k−1} (αβ)^{−2k+2} β^{−n+k−1}]^{m+1} = αβ^{n−k+1}αβ^{−n+k}`,
    /// `s = αβ^{n−k+1}(αβ)^{2k−2}αβ^{n−k+1}`, `v = (2n−1)(2n−2+2mn)+2k−1`.
    ///
    /// The alternate surface word `β^{n−k+1}(αβ)^{2k−2}αβ^{n−k+1}α` is a cyclic
    /// conjugate of `s` and is kept alongside it.
    pub fn family3(n: usize, k: usize, m: usize) -> Result<Self, PresentationError> {
        let mut p = Self::unified_family(FamilyParams::family3(n, k, m)?)?;
        let (n, k) = (n as i64, k as i64);
        p.alternate_surface_framing = Some(
            cat(&[
                b(n - k + 1),
                pw(&ab1(), 2 * k - 2),
                a(1),
                b(n - k + 1),
                a(1),
            ])
            .reduce(),
        );
        Ok(p)
    }

    fn unified_family(f: FamilyParams) -> Result<Self, PresentationError> {
        let (n, k, m, bb) = unified_params(&f).ok_or(PresentationError::NotUnified)?;
        let lhs = pw(&unified_z(n, k, bb), m + 1);
        let rhs = unified_q(n, k);
        let s = cat(&[a(1), b(n - k + 1), pw(&ab1(), bb - 1), a(1), b(n - k + 1)]);
        let mut p = Self::from_relation(&lhs, &rhs, &s, f.one_bridge().claimed_surface_framing())?;
        p.family = Some(f);
        Ok(p)
    }

    pub fn for_family(f: &FamilyParams) -> Result<Self, PresentationError> {
        match *f {
            FamilyParams::Family1 { w, k, m } => Self::family1(w, k, m),
            FamilyParams::Family2 { n, k, m } => Self::family2(n, k, m),
            FamilyParams::Family3 { n, k, m } => Self::family3(n, k, m),
        }
    }

    pub fn family(&self) -> Option<&FamilyParams> {
        self.family.as_ref()
    }

    /// The displayed relation `(lhs, rhs)`, when built from one.
    pub fn relation(&self) -> Option<(&GroupWord, &GroupWord)> {
        self.relation.as_ref().map(|(l, r)| (l, r))
    }

    pub fn relator(&self) -> &GroupWord {
        &self.relator
    }

    pub fn meridian(&self) -> &GroupWord {
        &self.meridian
    }

    pub fn surface_framing(&self) -> &GroupWord {
        &self.surface_framing
    }

    /// Second reading of `s` where the source gives two (family 3).
    pub fn alternate_surface_framing(&self) -> Option<&GroupWord> {
        self.alternate_surface_framing.as_ref()
    }

    pub fn claimed_framing(&self) -> i64 {
        self.claimed_framing
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.relator.alphabet()
    }

    /// `λ = μ^{−framing} s`, reduced.
    pub fn longitude(&self, framing: i64) -> GroupWord {
        cat(&[pw(&self.meridian, -framing), self.surface_framing.clone()]).reduce()
    }

    /// Relator equality up to rotation and inversion.
    pub fn relator_equivalent(&self, other: &GroupWord) -> bool {
        self.relator.cyclically_equivalent(other).unwrap_or(false)
    }
}

/// The families 2 and 3 relator in the form
/// `[(C₁C₂)^{n−k+b}(αβ)^{−b+1}β^{−n+k−1}]^{m+1} (C₁C₂)⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnifiedPresentation {
    pub c1: GroupWord,
    pub c2: GroupWord,
    pub relator: GroupWord,
    pub b: i64,
}

pub fn unified_presentation(f: &FamilyParams) -> Result<UnifiedPresentation, PresentationError> {
    let (n, k, m, bb) = unified_params(f).ok_or(PresentationError::NotUnified)?;
    let (c1w, c2w) = (c1(n, k), c2(n, k));
    let q = cat(&[c1w.clone(), c2w.clone()]);
    let relator = cat(&[pw(&unified_z(n, k, bb), m + 1), pw(&q, -1)]).reduce();
    Ok(UnifiedPresentation {
        c1: c1w,
        c2: c2w,
        relator,
        b: bb,
    })
}

/// Wire form of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationRecord {
    pub generators: Vec<String>,
    pub family: Option<FamilyParams>,
    pub relation_lhs: Option<String>,
    pub relation_rhs: Option<String>,
    pub relator: String,
    pub meridian: String,
    pub surface_framing: String,
    pub alternate_surface_framing: Option<String>,
    pub claimed_framing: i64,
}

impl From<&KnotGroupPresentation> for PresentationRecord {
    fn from(p: &KnotGroupPresentation) -> Self {
        Self {
            generators: p.alphabet().names().to_vec(),
            family: p.family,
            relation_lhs: p.relation.as_ref().map(|(l, _)| l.to_string()),
            relation_rhs: p.relation.as_ref().map(|(_, r)| r.to_string()),
            relator: p.relator.to_string(),
            meridian: p.meridian.to_string(),
            surface_framing: p.surface_framing.to_string(),
            alternate_surface_framing: p
                .alternate_surface_framing
                .as_ref()
                .map(ToString::to_string),
            claimed_framing: p.claimed_framing,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(&words::ab(), s).unwrap()
    }

    #[test]
    fn trefoil_relation() {
        let p = KnotGroupPresentation::family1(3, 1, 0).unwrap();
        let (lhs, rhs) = p.relation().unwrap();
        assert_eq!(lhs, &w("b a b"));
        assert_eq!(rhs, &w("a b a"));
        assert!(p.relator_equivalent(&w("a b a B A B")));
        assert_eq!(p.surface_framing(), &w("a b a b a b"));
        assert_eq!(p.claimed_framing(), 4);
        assert_eq!(p.meridian(), &w("a"));
    }

    #[test]
    fn family1_examples() {
        let p = KnotGroupPresentation::family1(5, 1, 0).unwrap();
        assert!(p.relator_equivalent(&w("a b a B A B")));
        assert_eq!(p.surface_framing(), &w("a b a b b b a b"));
        assert_eq!(p.claimed_framing(), 6);

        let p = KnotGroupPresentation::family1(5, 1, 1).unwrap();
        let x = family1_x(1).reduce();
        assert_eq!(x, w("b a b A B A"));
        let y = family1_y(5, 1).reduce();
        // P = βαβ³ ends in β and X⁻¹ = αβαβ⁻¹α⁻¹β⁻¹ starts with α: nothing cancels
        assert_eq!(y.len(), 5 + 24);
        let expected = cat(&[y, w("a b a"), w("B A B")]).cyclic_reduce();
        assert_eq!(p.relator(), &expected);
    }

    #[test]
    fn families_2_and_3_examples() {
        let p = KnotGroupPresentation::family2(2, 1, 0).unwrap();
        let (lhs, rhs) = p.relation().unwrap();
        assert_eq!(
            lhs.reduce(),
            w("a b b a B a b b a B a b b a B B A B B").reduce()
        );
        assert_eq!(rhs, &w("a b b a B"));
        assert_eq!(p.surface_framing(), &w("a b b a b a b b"));
        assert_eq!(p.claimed_framing(), 14);

        let p = KnotGroupPresentation::family3(2, 1, 0).unwrap();
        let (lhs, _) = p.relation().unwrap();
        assert_eq!(lhs.reduce(), w("a b b a B a b b a B B B").reduce());
        assert_eq!(p.claimed_framing(), 7);
        assert_eq!(p.surface_framing(), &w("a b b a b b"));
        assert_eq!(p.alternate_surface_framing().unwrap(), &w("b b a b b a"));

        let p = KnotGroupPresentation::family2(2, 1, 1).unwrap();
        let z = unified_z(2, 1, 2);
        assert_eq!(p.relation().unwrap().0, &pw(&z, 2));
    }

    #[test]
    fn unified_form_matches_constructors() {
        for family in [2, 3] {
            for f in FamilyParams::sweep(family, 6, 0..=2) {
                let u = unified_presentation(&f).unwrap();
                let (n, k, _, bb) = unified_params(&f).unwrap();
                assert_eq!(n - k + bb, if family == 2 { n + k } else { n + k - 1 });
                let p = KnotGroupPresentation::for_family(&f).unwrap();
                assert!(p.relator_equivalent(&u.relator), "{f}");
            }
        }
        assert_eq!(
            unified_presentation(&FamilyParams::family1(5, 1, 0).unwrap()),
            Err(PresentationError::NotUnified)
        );
    }

    #[test]
    fn peripheral_invariants_over_sweep() {
        for family in [1, 2, 3] {
            let max = if family == 1 { 11 } else { 6 };
            for f in FamilyParams::sweep(family, max, 0..=2) {
                let p = KnotGroupPresentation::for_family(&f).unwrap();
                let s = p.surface_framing();
                assert!(
                    s.is_positive(&[ALPHA, BETA]) && s.contains_letter(Letter::pos(ALPHA)),
                    "{f}"
                );
                assert!(s.is_reduced());
                assert_eq!(p.meridian(), &a(1));
                assert!(p.relator().is_cyclically_reduced() && !p.relator().is_empty());
                assert_eq!(
                    p.claimed_framing(),
                    f.one_bridge().claimed_surface_framing()
                );
                if let Some(alt) = p.alternate_surface_framing() {
                    assert!(alt.cyclically_equivalent(s).unwrap());
                }
            }
        }
    }

    #[test]
    fn longitude_examples() {
        let p = KnotGroupPresentation::family1(3, 1, 0).unwrap();
        assert_eq!(p.longitude(4), w("A A A b a b a b"));
        assert_eq!(p.longitude(0), *p.surface_framing());
    }

    #[test]
    fn custom_presentations() {
        assert_eq!(
            KnotGroupPresentation::from_relator(&w("a A"), &w("a"), 1),
            Err(PresentationError::TrivialRelator)
        );
        let p = KnotGroupPresentation::from_relator(&w("b a b A B"), &w("a"), 1).unwrap();
        assert_eq!(p.relator(), &w("b"));
        let other = GroupWord::parse(&Alphabet::alpha_beta_gamma_delta(), "c").unwrap();
        assert_eq!(
            KnotGroupPresentation::from_relator(&other, &w("a"), 1),
            Err(PresentationError::WrongAlphabet)
        );
    }
}
