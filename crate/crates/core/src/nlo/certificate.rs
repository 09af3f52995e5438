//! Inequality facts, derivation steps and the certificate checker.
//!
//! A fact `(L, rel, R)` asserts `L·t rel R·t` for every point `t` of an ordered
//! line on which the group acts by order-preserving maps with `α·t > t`.
//! Words act on the left and are kept literally (possibly unreduced); only
//! `FreeReduce` and `RelatorEquality` change the letters of a side.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::freeword::{Alphabet, GroupWord, Letter};
use crate::presentation::{KnotGroupPresentation, ALPHA};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rel {
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl Rel {
    /// Relation of a composite `a rel₁ b rel₂ c`.
    pub fn then(self, other: Rel) -> Rel {
        match (self, other) {
            (Rel::Eq, Rel::Eq) => Rel::Eq,
            (Rel::Gt, _) | (_, Rel::Gt) => Rel::Gt,
            _ => Rel::Ge,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Gt => ">",
            Rel::Ge => ">=",
            Rel::Eq => "=",
        }
    }

    pub fn parse(s: &str) -> Option<Rel> {
        match s {
            ">" => Some(Rel::Gt),
            ">=" => Some(Rel::Ge),
            "=" => Some(Rel::Eq),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IneqFact {
    pub lhs: GroupWord,
    pub rel: Rel,
    pub rhs: GroupWord,
}

impl IneqFact {
    pub fn new(lhs: GroupWord, rel: Rel, rhs: GroupWord) -> Self {
        Self { lhs, rel, rhs }
    }
}

impl fmt::Display for IneqFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} t {} {} t", self.lhs, self.rel.symbol(), self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `α > 1`.
    Hypothesis,
    /// `L = R` where `L·R⁻¹` is conjugate to the relator or its inverse.
    RelatorEquality,
    /// `w = w`.
    Reflexive,
    /// From `L rel R` with a letter `α` at `position` of `R`, and the hypothesis:
    /// `L > R` with that letter removed.
    DeleteAlpha { position: usize },
    /// From `L rel R` and the hypothesis: `L > R` with `α⁻¹` inserted at `position`.
    InsertAlphaInverse { position: usize },
    /// From `w₁ rel w₂` and `w₃ rel' w₄`: `w₁w₃ (rel·rel') w₂w₄`.
    Compose,
    /// From `L rel R`: `gL rel gR`.
    PrependWord { word: GroupWord },
    /// From `L rel R`: `L' rel R'` with `L' ≡ L`, `R' ≡ R` freely.
    FreeReduce,
    /// From `a rel b` and `b rel' c`: `a (rel·rel') c`.
    Chain,
    /// From `L rel R`: `L ≥ R`.
    Weaken,
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Hypothesis => "hypothesis",
            Rule::RelatorEquality => "relator_equality",
            Rule::Reflexive => "reflexive",
            Rule::DeleteAlpha { .. } => "delete_alpha",
            Rule::InsertAlphaInverse { .. } => "insert_alpha_inverse",
            Rule::Compose => "compose",
            Rule::PrependWord { .. } => "prepend_word",
            Rule::FreeReduce => "free_reduce",
            Rule::Chain => "chain",
            Rule::Weaken => "weaken",
        }
    }

    fn arity(&self) -> usize {
        match self {
            Rule::Hypothesis | Rule::RelatorEquality | Rule::Reflexive => 0,
            Rule::PrependWord { .. } | Rule::FreeReduce | Rule::Weaken => 1,
            Rule::DeleteAlpha { .. }
            | Rule::InsertAlphaInverse { .. }
            | Rule::Compose
            | Rule::Chain => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DerivationStep {
    pub rule: Rule,
    pub inputs: Vec<usize>,
    pub fact: IneqFact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub steps: Vec<DerivationStep>,
    pub conclusion: IneqFact,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("step {step}: {reason}")]
pub struct VerifyError {
    pub step: usize,
    pub reason: String,
}

fn hypothesis_fact(alphabet: &Alphabet) -> IneqFact {
    IneqFact::new(
        GroupWord::from_letters(alphabet, vec![Letter::pos(ALPHA)]).expect("α is a generator"),
        Rel::Gt,
        GroupWord::empty(alphabet),
    )
}

/// `w` is trivial in the group because it is conjugate to `r` or `r⁻¹`.
fn is_relator_conjugate(w: &GroupWord, r: &GroupWord) -> bool {
    let c = w.cyclic_reduce();
    c.rotation_offset(r).is_some() || c.rotation_offset(&r.invert()).is_some()
}

fn concat(a: &GroupWord, b: &GroupWord) -> GroupWord {
    a.then(b).expect("facts share one alphabet")
}

/// The fact a step yields, recomputed from its inputs alone. Rules whose result
/// is not determined by the inputs validate the claimed fact instead.
fn check_step(
    step: &DerivationStep,
    facts: &[IneqFact],
    relator: &GroupWord,
) -> Result<IneqFact, String> {
    let alphabet = relator.alphabet();
    let claimed = &step.fact;
    if claimed.lhs.alphabet() != alphabet || claimed.rhs.alphabet() != alphabet {
        return Err("fact uses a different alphabet".into());
    }
    if step.inputs.len() != step.rule.arity() {
        return Err(format!(
            "{} takes {} inputs, got {}",
            step.rule.name(),
            step.rule.arity(),
            step.inputs.len()
        ));
    }
    let mut inputs = Vec::with_capacity(step.inputs.len());
    for &i in &step.inputs {
        inputs.push(
            facts
                .get(i)
                .ok_or_else(|| format!("input {i} does not precede this step"))?,
        );
    }
    let require_hypothesis = |f: &IneqFact| -> Result<(), String> {
        if *f == hypothesis_fact(alphabet) {
            Ok(())
        } else {
            Err("second input must be the hypothesis α > 1".into())
        }
    };
    Ok(match &step.rule {
        Rule::Hypothesis => hypothesis_fact(alphabet),
        Rule::RelatorEquality => {
            if claimed.rel != Rel::Eq {
                return Err("relator equalities use =".into());
            }
            if !is_relator_conjugate(&concat(&claimed.lhs, &claimed.rhs.raw_inverse()), relator) {
                return Err("lhs·rhs⁻¹ is not conjugate to the relator or its inverse".into());
            }
            claimed.clone()
        }
        Rule::Reflexive => {
            if claimed.rel != Rel::Eq || claimed.lhs != claimed.rhs {
                return Err("reflexive facts have the form w = w".into());
            }
            claimed.clone()
        }
        Rule::DeleteAlpha { position } => {
            require_hypothesis(inputs[1])?;
            let f = inputs[0];
            if f.rhs.letters().get(*position) != Some(&Letter::pos(ALPHA)) {
                return Err(format!("no α at position {position} of the right side"));
            }
            let mut letters = f.rhs.letters().to_vec();
            letters.remove(*position);
            IneqFact::new(
                f.lhs.clone(),
                Rel::Gt,
                GroupWord::from_letters(alphabet, letters).map_err(|e| e.to_string())?,
            )
        }
        Rule::InsertAlphaInverse { position } => {
            require_hypothesis(inputs[1])?;
            let f = inputs[0];
            if *position > f.rhs.len() {
                return Err(format!("position {position} is past the right side"));
            }
            let mut letters = f.rhs.letters().to_vec();
            letters.insert(*position, Letter::neg(ALPHA));
            IneqFact::new(
                f.lhs.clone(),
                Rel::Gt,
                GroupWord::from_letters(alphabet, letters).map_err(|e| e.to_string())?,
            )
        }
        Rule::Compose => {
            let (a, b) = (inputs[0], inputs[1]);
            IneqFact::new(
                concat(&a.lhs, &b.lhs),
                a.rel.then(b.rel),
                concat(&a.rhs, &b.rhs),
            )
        }
        Rule::PrependWord { word } => {
            if word.alphabet() != alphabet {
                return Err("prepended word uses a different alphabet".into());
            }
            let f = inputs[0];
            IneqFact::new(concat(word, &f.lhs), f.rel, concat(word, &f.rhs))
        }
        Rule::FreeReduce => {
            let f = inputs[0];
            let same = |x: &GroupWord, y: &GroupWord| x.free_equal(y).unwrap_or(false);
            if claimed.rel != f.rel || !same(&claimed.lhs, &f.lhs) || !same(&claimed.rhs, &f.rhs) {
                return Err("free reduction changed a side or the relation".into());
            }
            claimed.clone()
        }
        Rule::Chain => {
            let (a, b) = (inputs[0], inputs[1]);
            if a.rhs != b.lhs {
                return Err("chained facts do not share the middle word".into());
            }
            IneqFact::new(a.lhs.clone(), a.rel.then(b.rel), b.rhs.clone())
        }
        Rule::Weaken => {
            let f = inputs[0];
            IneqFact::new(f.lhs.clone(), Rel::Ge, f.rhs.clone())
        }
    })
}

/// Replays every step against the relator of `pres`; each recomputed fact must
/// equal the claimed one and the conclusion must be the final fact.
pub fn verify_certificate(
    cert: &Certificate,
    pres: &KnotGroupPresentation,
) -> Result<(), VerifyError> {
    let mut facts: Vec<IneqFact> = Vec::with_capacity(cert.steps.len());
    for (i, step) in cert.steps.iter().enumerate() {
        let fact = check_step(step, &facts, pres.relator())
            .map_err(|reason| VerifyError { step: i, reason })?;
        if fact != step.fact {
            return Err(VerifyError {
                step: i,
                reason: format!("claimed {} but the rule gives {}", step.fact, fact),
            });
        }
        facts.push(fact);
    }
    match facts.last() {
        Some(last) if *last == cert.conclusion => Ok(()),
        _ => Err(VerifyError {
            step: cert.steps.len(),
            reason: "conclusion is not the final fact".into(),
        }),
    }
}

/// Accumulates steps while building a certificate.
#[derive(Default)]
pub(crate) struct Builder {
    pub steps: Vec<DerivationStep>,
}

impl Builder {
    pub fn push(&mut self, rule: Rule, inputs: Vec<usize>, fact: IneqFact) -> usize {
        self.steps.push(DerivationStep { rule, inputs, fact });
        self.steps.len() - 1
    }

    pub fn fact(&self, i: usize) -> &IneqFact {
        &self.steps[i].fact
    }

    /// Appends a step whose fact is computed by the checker itself.
    pub fn derive(&mut self, rule: Rule, inputs: Vec<usize>, relator: &GroupWord) -> usize {
        let facts: Vec<IneqFact> = self.steps.iter().map(|s| s.fact.clone()).collect();
        let probe = DerivationStep {
            rule: rule.clone(),
            inputs: inputs.clone(),
            fact: hypothesis_fact(relator.alphabet()),
        };
        let fact = check_step(&probe, &facts, relator).expect("scripted step is valid");
        self.push(rule, inputs, fact)
    }

    pub fn finish(self) -> Certificate {
        let conclusion = self.steps.last().expect("nonempty derivation").fact.clone();
        Certificate {
            steps: self.steps,
            conclusion,
        }
    }
}

// ---------- wire format ----------

pub const CERTIFICATE_FORMAT: &str = "onebridge-certificate";
pub const CERTIFICATE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactRecord {
    pub lhs: String,
    pub rel: Rel,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub rule: String,
    pub inputs: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    pub fact: FactRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub format: String,
    pub version: u32,
    pub alphabet: Vec<String>,
    pub relator: String,
    pub steps: Vec<StepRecord>,
    pub conclusion: FactRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertificateParseError {
    #[error("unsupported certificate format {0} version {1}")]
    Format(String, u32),
    #[error("unknown rule {0}")]
    UnknownRule(String),
    #[error("rule {0} is missing parameter {1}")]
    MissingParameter(String, &'static str),
    #[error("bad word: {0}")]
    Word(String),
}

impl FactRecord {
    fn from_fact(f: &IneqFact) -> Self {
        Self {
            lhs: f.lhs.to_string(),
            rel: f.rel,
            rhs: f.rhs.to_string(),
        }
    }

    fn to_fact(&self, alphabet: &Alphabet) -> Result<IneqFact, CertificateParseError> {
        let parse = |s: &str| {
            GroupWord::parse(alphabet, s).map_err(|e| CertificateParseError::Word(e.to_string()))
        };
        Ok(IneqFact::new(
            parse(&self.lhs)?,
            self.rel,
            parse(&self.rhs)?,
        ))
    }
}

impl CertificateRecord {
    pub fn from_certificate(cert: &Certificate, relator: &GroupWord) -> Self {
        let steps = cert
            .steps
            .iter()
            .map(|s| {
                let (position, word) = match &s.rule {
                    Rule::DeleteAlpha { position } | Rule::InsertAlphaInverse { position } => {
                        (Some(*position), None)
                    }
                    Rule::PrependWord { word } => (None, Some(word.to_string())),
                    _ => (None, None),
                };
                StepRecord {
                    rule: s.rule.name().to_string(),
                    inputs: s.inputs.clone(),
                    position,
                    word,
                    fact: FactRecord::from_fact(&s.fact),
                }
            })
            .collect();
        Self {
            format: CERTIFICATE_FORMAT.into(),
            version: CERTIFICATE_VERSION,
            alphabet: relator.alphabet().names().to_vec(),
            relator: relator.to_string(),
            steps,
            conclusion: FactRecord::from_fact(&cert.conclusion),
        }
    }

    pub fn to_certificate(&self) -> Result<Certificate, CertificateParseError> {
        if self.format != CERTIFICATE_FORMAT || self.version != CERTIFICATE_VERSION {
            return Err(CertificateParseError::Format(
                self.format.clone(),
                self.version,
            ));
        }
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())
            .map_err(|e| CertificateParseError::Word(e.to_string()))?;
        let mut steps = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            let missing = |p| CertificateParseError::MissingParameter(s.rule.clone(), p);
            let rule = match s.rule.as_str() {
                "hypothesis" => Rule::Hypothesis,
                "relator_equality" => Rule::RelatorEquality,
                "reflexive" => Rule::Reflexive,
                "delete_alpha" => Rule::DeleteAlpha {
                    position: s.position.ok_or_else(|| missing("position"))?,
                },
                "insert_alpha_inverse" => Rule::InsertAlphaInverse {
                    position: s.position.ok_or_else(|| missing("position"))?,
                },
                "compose" => Rule::Compose,
                "prepend_word" => {
                    let w = s.word.as_deref().ok_or_else(|| missing("word"))?;
                    Rule::PrependWord {
                        word: GroupWord::parse(&alphabet, w)
                            .map_err(|e| CertificateParseError::Word(e.to_string()))?,
                    }
                }
                "free_reduce" => Rule::FreeReduce,
                "chain" => Rule::Chain,
                "weaken" => Rule::Weaken,
                other => return Err(CertificateParseError::UnknownRule(other.to_string())),
            };
            steps.push(DerivationStep {
                rule,
                inputs: s.inputs.clone(),
                fact: s.fact.to_fact(&alphabet)?,
            });
        }
        Ok(Certificate {
            steps,
            conclusion: self.conclusion.to_fact(&alphabet)?,
        })
    }
}

impl Certificate {
    pub fn to_json(&self, relator: &GroupWord) -> String {
        serde_json::to_string_pretty(&CertificateRecord::from_certificate(self, relator))
            .expect("certificate serializes")
    }
}
