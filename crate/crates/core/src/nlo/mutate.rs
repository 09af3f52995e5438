//! Single-step corruptions of a certificate, for robustness tests.

use rand::{Rng, RngExt};

use crate::freeword::{GroupWord, Letter};
use crate::presentation::{ALPHA, BETA};

use super::certificate::{Certificate, Rel, Rule};

fn with_letter(w: &GroupWord, letter: Letter, front: bool) -> GroupWord {
    let mut letters = w.letters().to_vec();
    if front {
        letters.insert(0, letter);
    } else {
        letters.push(letter);
    }
    GroupWord::from_letters(w.alphabet(), letters).expect("letter from the same alphabet")
}

fn shift(position: usize, down: bool) -> usize {
    if down && position > 0 {
        position - 1
    } else {
        position + 1
    }
}

/// Corrupts one step of `cert`: its claimed relation, a letter on one side of
/// its claimed fact, or a rule parameter. The result always differs from the input.
pub fn mutate<R: Rng + ?Sized>(cert: &Certificate, rng: &mut R) -> Certificate {
    assert!(!cert.steps.is_empty(), "nothing to mutate");
    let mut out = cert.clone();
    let i = rng.random_range(0..out.steps.len());
    let step = &mut out.steps[i];
    let letter = if rng.random_bool(0.5) {
        Letter::pos(ALPHA)
    } else {
        Letter::pos(BETA)
    };
    let letter = if rng.random_bool(0.5) {
        letter
    } else {
        letter.inv()
    };
    match rng.random_range(0..4) {
        0 => {
            let others: Vec<Rel> = [Rel::Gt, Rel::Ge, Rel::Eq]
                .into_iter()
                .filter(|r| *r != step.fact.rel)
                .collect();
            step.fact.rel = others[rng.random_range(0..others.len())];
        }
        1 => step.fact.lhs = with_letter(&step.fact.lhs, letter, rng.random_bool(0.5)),
        2 => step.fact.rhs = with_letter(&step.fact.rhs, letter, rng.random_bool(0.5)),
        _ => {
            let front = rng.random_bool(0.5);
            let down = rng.random_bool(0.5);
            match step.rule.clone() {
                Rule::DeleteAlpha { position } => {
                    step.rule = Rule::DeleteAlpha {
                        position: shift(position, down),
                    };
                }
                Rule::InsertAlphaInverse { position } => {
                    step.rule = Rule::InsertAlphaInverse {
                        position: shift(position, down),
                    };
                }
                Rule::PrependWord { word } => {
                    step.rule = Rule::PrependWord {
                        word: with_letter(&word, letter, front),
                    }
                }
                _ => step.fact.rhs = with_letter(&step.fact.rhs, letter, false),
            }
        }
    }
    out
}
