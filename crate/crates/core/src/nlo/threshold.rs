//! Hypotheses of the slope criterion and the two slope thresholds it is
//! compared with: the framing `v` and the L-space bound `2g − 1`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{FamilyParams, OneBridgeParams};
use crate::freeword::Letter;
use crate::homology::abelianize;
use crate::presentation::{KnotGroupPresentation, ALPHA, BETA};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NloError {
    #[error("the braid closure is not a knot")]
    NotKnot,
    #[error("the braid word is not positive")]
    NotPositive,
    #[error("the criterion does not hold under the {0} framing")]
    CriterionFailed(Policy),
}

/// Which framing of `s` feeds the criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Policy {
    /// `v = (ω−1)(t+mω)+b` as constructed.
    Claimed,
    /// `v*`, the exponent of `s` in `H₁`.
    Audited,
}

impl std::fmt::Display for Policy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Policy::Claimed => "claimed",
            Policy::Audited => "audited",
        })
    }
}

impl std::str::FromStr for Policy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "claimed" => Ok(Policy::Claimed),
            "audited" => Ok(Policy::Audited),
            other => Err(format!("unknown policy {other}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub meridian_is_alpha: bool,
    pub surface_positive: bool,
    pub surface_has_alpha: bool,
    pub claimed_framing: i64,
    pub homological_framing: Option<i64>,
    pub claimed_positive: bool,
    pub audited_positive: bool,
    pub pass: bool,
}

impl CriterionReport {
    pub fn passes(&self, policy: Policy) -> bool {
        let framing = match policy {
            Policy::Claimed => self.claimed_positive,
            Policy::Audited => self.audited_positive,
        };
        self.meridian_is_alpha && self.surface_positive && self.surface_has_alpha && framing
    }
}

pub fn criterion_check(pres: &KnotGroupPresentation) -> CriterionReport {
    let s = pres.surface_framing();
    let meridian_is_alpha = pres.meridian().letters() == [Letter::pos(ALPHA)];
    let surface_positive = s.is_positive(&[ALPHA, BETA]);
    let surface_has_alpha = s.contains_letter(Letter::pos(ALPHA));
    let homological_framing = abelianize(pres).homological_framing;
    let mut report = CriterionReport {
        meridian_is_alpha,
        surface_positive,
        surface_has_alpha,
        claimed_framing: pres.claimed_framing(),
        homological_framing,
        claimed_positive: pres.claimed_framing() > 0,
        audited_positive: homological_framing.is_some_and(|v| v > 0),
        pass: false,
    };
    report.pass = report.passes(Policy::Claimed) && report.passes(Policy::Audited);
    report
}

/// Genus of the closure of a positive braid knot: `(e − ω + 1)/2`.
pub fn genus_positive_braid(p: &OneBridgeParams) -> Result<i64, NloError> {
    let word = p.word();
    if !word.is_positive() {
        return Err(NloError::NotPositive);
    }
    if !word.is_knot() {
        return Err(NloError::NotKnot);
    }
    let euler = word.exponent_sum() - word.strands() as i64 + 1;
    assert!(
        euler % 2 == 0,
        "a knot's Seifert surface has even first Betti number"
    );
    Ok(euler / 2)
}

/// Bound as literally stated for each family.
pub fn stated_bound(f: &FamilyParams) -> i64 {
    match *f {
        FamilyParams::Family1 { w, k, .. } => (w + 2 * k) as i64 - 1,
        FamilyParams::Family2 { n, k, m } => {
            let (n, k, m) = (n as i64, k as i64, m as i64);
            2 * n * (2 * n - 1 + m * (2 * n + 1)) + 2 * k
        }
        FamilyParams::Family3 { n, k, m } => {
            let (n, k, m) = (n as i64, k as i64, m as i64);
            (2 * n - 1) * (2 * n - 2 + 2 * m * n) + 2 * k - 1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeBound {
    pub family: Option<FamilyParams>,
    pub params: OneBridgeParams,
    pub policy: Policy,
    /// Slopes `r ≥ criterion_bound` give non-left-orderable surgeries.
    #[serde(with = "ratio_string")]
    pub criterion_bound: Rational64,
    /// Slopes `r ≥ 2g − 1` give L-spaces.
    #[serde(with = "ratio_string")]
    pub lspace_bound: Rational64,
    /// The family's bound, taken literally.
    #[serde(with = "ratio_string::option")]
    pub stated_bound: Option<Rational64>,
}

pub fn surgery_threshold(
    pres: &KnotGroupPresentation,
    params: &OneBridgeParams,
    policy: Policy,
) -> Result<SlopeBound, NloError> {
    let report = criterion_check(pres);
    if !report.passes(policy) {
        return Err(NloError::CriterionFailed(policy));
    }
    let v = match policy {
        Policy::Claimed => report.claimed_framing,
        Policy::Audited => report
            .homological_framing
            .expect("audited positivity implies a framing"),
    };
    let g = genus_positive_braid(params)?;
    Ok(SlopeBound {
        family: pres.family().copied(),
        params: *params,
        policy,
        criterion_bound: Rational64::from_integer(v),
        lspace_bound: Rational64::from_integer(2 * g - 1),
        stated_bound: pres
            .family()
            .map(|f| Rational64::from_integer(stated_bound(f))),
    })
}

/// Rationals as `"p"` or `"p/q"`.
mod ratio_string {
    use num_rational::Rational64;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let text = String::deserialize(d)?;
        text.parse()
            .map_err(|_| D::Error::custom(format!("not a rational: {text}")))
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational64>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.collect_str(r),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Option<Rational64>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|t| {
                    t.parse()
                        .map_err(|_| D::Error::custom(format!("not a rational: {t}")))
                })
                .transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeword::{Alphabet, GroupWord};

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(&Alphabet::alpha_beta(), s).unwrap()
    }

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn criterion_examples() {
        let p = KnotGroupPresentation::family1(5, 1, 0).unwrap();
        assert_eq!(p.surface_framing(), &w("a b a b b b a b"));
        assert!(criterion_check(&p).pass);
        assert!(criterion_check(&KnotGroupPresentation::family3(2, 1, 0).unwrap()).pass);

        let bad = KnotGroupPresentation::from_relator(p.relator(), &w("a B a"), 3).unwrap();
        let report = criterion_check(&bad);
        assert!(!report.surface_positive && !report.pass);
        let no_alpha = KnotGroupPresentation::from_relator(p.relator(), &w("b b"), 3).unwrap();
        assert!(!criterion_check(&no_alpha).surface_has_alpha);
    }

    #[test]
    fn genus_examples() {
        let g = |w, t, b| genus_positive_braid(&OneBridgeParams::new(w, t, b, 0).unwrap());
        let trefoil = FamilyParams::family1(3, 1, 0).unwrap().one_bridge();
        assert_eq!(genus_positive_braid(&trefoil), Ok(1));
        assert_eq!(g(3, 1, 1), Err(NloError::NotKnot));
        assert_eq!(g(5, 1, 2), Ok(1));
        assert_eq!(g(5, 3, 2), Ok(5));
    }

    #[test]
    fn threshold_examples() {
        let f = FamilyParams::family2(2, 1, 0).unwrap();
        let p = KnotGroupPresentation::for_family(&f).unwrap();
        let b = surgery_threshold(&p, &f.one_bridge(), Policy::Claimed).unwrap();
        assert_eq!(b.criterion_bound, r(14));
        assert_eq!(b.stated_bound, Some(r(14)));

        let f = FamilyParams::family1(5, 1, 0).unwrap();
        let p = KnotGroupPresentation::for_family(&f).unwrap();
        assert_eq!(
            surgery_threshold(&p, &f.one_bridge(), Policy::Claimed)
                .unwrap()
                .criterion_bound,
            r(6)
        );

        let f = FamilyParams::family1(3, 1, 0).unwrap();
        let p = KnotGroupPresentation::for_family(&f).unwrap();
        let b = surgery_threshold(&p, &f.one_bridge(), Policy::Audited).unwrap();
        assert_eq!((b.criterion_bound, b.lspace_bound), (r(6), r(1)));

        let json = serde_json::to_string(&b).unwrap();
        assert!(
            json.contains("\"criterion_bound\":\"6\"") && json.contains("\"policy\":\"audited\"")
        );
        assert_eq!(serde_json::from_str::<SlopeBound>(&json).unwrap(), b);
    }

    #[test]
    fn failed_criterion_is_an_error() {
        let p = KnotGroupPresentation::family1(5, 1, 0).unwrap();
        let bad = KnotGroupPresentation::from_relator(p.relator(), &w("a B a"), 3).unwrap();
        let params = OneBridgeParams::new(5, 1, 2, 0).unwrap();
        assert_eq!(
            surgery_threshold(&bad, &params, Policy::Claimed),
            Err(NloError::CriterionFailed(Policy::Claimed))
        );
    }

    #[test]
    fn stated_bound_matches_claimed_framing() {
        for family in [1, 2, 3] {
            for f in FamilyParams::sweep(family, 9, 0..=2) {
                let v = f.one_bridge().claimed_surface_framing();
                if family != 1 || f.m() == 0 {
                    assert_eq!(stated_bound(&f), v, "{f}");
                }
            }
        }
    }
}
