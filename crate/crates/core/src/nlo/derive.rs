//! Derivations of `β·t > t` from `α·t > t`.
//!
//! Family presentations follow fixed scripts: family 1 deletes `α`'s from a
//! rewritten relation `1 = V`, families 2 and 3 insert `α⁻¹`'s into the unified
//! relation. Other presentations go through a bounded search over deletions.

use thiserror::Error;

use crate::braid::FamilyParams;
use crate::freeword::{GroupWord, Letter};
use crate::presentation::words::{a, ab1, b, ba1, cat, pw};
use crate::presentation::{
    c1, c2, family1_p, family1_x, unified_e, unified_params, KnotGroupPresentation, ALPHA, BETA,
};

use super::certificate::{Builder, Certificate, IneqFact, Rel, Rule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeriveError {
    #[error("no derivation within {deletions} deletions and {budget} candidates")]
    SearchExhausted { deletions: usize, budget: usize },
}

/// Limits of the fallback search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBound {
    /// Most `α`'s removed from one relator rotation.
    pub deletions: usize,
    /// Most deletion sets examined overall.
    pub budget: usize,
}

impl Default for SearchBound {
    fn default() -> Self {
        Self {
            deletions: 4,
            budget: 200_000,
        }
    }
}

pub fn derive_beta_monotone(pres: &KnotGroupPresentation) -> Result<Certificate, DeriveError> {
    match pres.family() {
        Some(f @ FamilyParams::Family1 { .. }) => Ok(family1_script(f, pres.relator())),
        Some(f) => Ok(unified_script(f, pres.relator())),
        None => search_beta_monotone(pres, SearchBound::default()),
    }
}

/// Positions of the letters `α` inside `word` once it is placed at `offset`.
fn alpha_positions(word: &GroupWord, offset: usize, out: &mut Vec<usize>) {
    out.extend(
        word.letters()
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == Letter::pos(ALPHA))
            .map(|(i, _)| offset + i),
    );
}

/// `1 = [P C₀^{ω−k}]^m C₀` with `C₀ = X⁻¹ = (αβ)^k α (αβ)^{−k} β⁻¹`; dropping the
/// `α`'s of each `(βα)^k` and the middle `α` of each `C₀` leaves `β⁻¹`.
fn family1_script(f: &FamilyParams, relator: &GroupWord) -> Certificate {
    let FamilyParams::Family1 { w, k, m } = *f else {
        unreachable!("family 1 only")
    };
    let (w, k, m) = (w as i64, k as i64, m as i64);
    let p = family1_p(w, k);
    let c0 = cat(&[pw(&ab1(), k), a(1), pw(&ab1(), -k), b(-1)]);
    debug_assert_eq!(c0, family1_x(k).raw_inverse());

    // V = [P C₀^{ω−k}]^m C₀, recording the α's to delete
    let middle = 2 * k as usize;
    let mut parts = Vec::new();
    let mut targets = Vec::new();
    let mut offset = 0;
    for _ in 0..m {
        alpha_positions(&pw(&ba1(), k), offset, &mut targets);
        offset += p.len();
        parts.push(p.clone());
        for _ in 0..w - k {
            targets.push(offset + middle);
            offset += c0.len();
            parts.push(c0.clone());
        }
    }
    targets.push(offset + middle);
    parts.push(c0.clone());
    let v = cat(&parts);

    let mut cert = Builder::default();
    let hyp = cert.derive(Rule::Hypothesis, vec![], relator);
    let empty = GroupWord::empty(relator.alphabet());
    let mut cur = cert.push(
        Rule::RelatorEquality,
        vec![],
        IneqFact::new(empty.clone(), Rel::Eq, v),
    );
    targets.sort_unstable();
    for &position in targets.iter().rev() {
        cur = cert.derive(Rule::DeleteAlpha { position }, vec![cur, hyp], relator);
    }
    let reduced = cert.push(
        Rule::FreeReduce,
        vec![cur],
        IneqFact::new(empty.clone(), Rel::Gt, b(-1)),
    );
    let lifted = cert.derive(Rule::PrependWord { word: b(1) }, vec![reduced], relator);
    cert.push(
        Rule::FreeReduce,
        vec![lifted],
        IneqFact::new(b(1), Rel::Gt, empty),
    );
    cert.finish()
}

/// `D^{blocks} > β^{full}(αβ)^{b−1}` with `D = C₁C₂`: `α⁻¹` goes before both
/// halves of the first `full` blocks and before `C₂` in the remaining `b−1`.
fn insertion_fact(
    cert: &mut Builder,
    hyp: usize,
    n: i64,
    k: i64,
    bb: i64,
    full: i64,
    relator: &GroupWord,
) -> usize {
    let (x1, x2) = (c1(n, k), c2(n, k));
    let d = cat(&[x1.clone(), x2.clone()]);
    let lhs = pw(&d, full + bb - 1);
    let mut positions = Vec::new();
    for block in 0..(full + bb - 1) as usize {
        let start = block * d.len();
        if (block as i64) < full {
            positions.push(start);
        }
        positions.push(start + x1.len());
    }
    let mut cur = cert.push(
        Rule::Reflexive,
        vec![],
        IneqFact::new(lhs.clone(), Rel::Eq, lhs.clone()),
    );
    for &position in positions.iter().rev() {
        cur = cert.derive(
            Rule::InsertAlphaInverse { position },
            vec![cur, hyp],
            relator,
        );
    }
    let target = cat(&[b(full), pw(&ab1(), bb - 1)]);
    cert.push(
        Rule::FreeReduce,
        vec![cur],
        IneqFact::new(lhs, Rel::Gt, target),
    )
}

/// `E⁻¹ = D^{N−1}(E D^N)^m`, then `D^{N−1}(ED^N)^m > β^{n−k}(αβ)^{b−1}` via
/// `ED^N > 1`, and finally the substitution `t₀ = (αβ)^{−b+1}β^{−n+k} t`.
fn unified_script(f: &FamilyParams, relator: &GroupWord) -> Certificate {
    let (n, k, m, bb) = unified_params(f).expect("families 2 and 3");
    let big_n = n - k + bb;
    let d = cat(&[c1(n, k), c2(n, k)]);
    let e = unified_e(n, k, bb);
    let e_inv = e.raw_inverse();
    let rhs = cat(&[pw(&d, big_n - 1), pw(&cat(&[e.clone(), pw(&d, big_n)]), m)]);

    let mut cert = Builder::default();
    let hyp = cert.derive(Rule::Hypothesis, vec![], relator);
    let rel = cert.push(
        Rule::RelatorEquality,
        vec![],
        IneqFact::new(e_inv, Rel::Eq, rhs),
    );
    let mut bound = insertion_fact(&mut cert, hyp, n, k, bb, n - k, relator);
    if m >= 1 {
        let whole = insertion_fact(&mut cert, hyp, n, k, bb, n - k + 1, relator);
        let refl_e = cert.push(
            Rule::Reflexive,
            vec![],
            IneqFact::new(e.clone(), Rel::Eq, e.clone()),
        );
        let composed = cert.derive(Rule::Compose, vec![refl_e, whole], relator);
        let lhs = cert.fact(composed).lhs.clone();
        let one = GroupWord::empty(relator.alphabet());
        let step = cert.push(
            Rule::FreeReduce,
            vec![composed],
            IneqFact::new(lhs, Rel::Gt, one),
        );
        let mut power = step;
        for _ in 1..m {
            power = cert.derive(Rule::Compose, vec![power, step], relator);
        }
        bound = cert.derive(Rule::Compose, vec![bound, power], relator);
    }
    let chained = cert.derive(Rule::Chain, vec![rel, bound], relator);
    let g = cat(&[pw(&ab1(), -bb + 1), b(-n + k)]);
    let refl_g = cert.push(
        Rule::Reflexive,
        vec![],
        IneqFact::new(g.clone(), Rel::Eq, g),
    );
    let shifted = cert.derive(Rule::Compose, vec![chained, refl_g], relator);
    let empty = GroupWord::empty(relator.alphabet());
    cert.push(
        Rule::FreeReduce,
        vec![shifted],
        IneqFact::new(b(1), Rel::Gt, empty),
    );
    cert.finish()
}

/// Tries rotations of `r` then of `r⁻¹`, deleting sets of `α`'s (smallest sets
/// first, lexicographic within a size) until the reduced word is `gβ⁻¹g⁻¹`.
pub fn search_beta_monotone(
    pres: &KnotGroupPresentation,
    bound: SearchBound,
) -> Result<Certificate, DeriveError> {
    let r = pres.relator();
    let alphabet = r.alphabet();
    let mut examined = 0usize;
    let candidates: Vec<GroupWord> = (0..r.len())
        .map(|s| r.rotate(s))
        .chain((0..r.len()).map(|s| r.invert().rotate(s)))
        .collect();
    for size in 0..=bound.deletions {
        for c in &candidates {
            let mut alphas = Vec::new();
            alpha_positions(c, 0, &mut alphas);
            if alphas.len() < size {
                continue;
            }
            let mut chosen: Vec<usize> = (0..size).collect();
            loop {
                examined += 1;
                if examined > bound.budget {
                    return Err(DeriveError::SearchExhausted {
                        deletions: bound.deletions,
                        budget: bound.budget,
                    });
                }
                let deleted: Vec<usize> = chosen.iter().map(|&i| alphas[i]).collect();
                let letters: Vec<Letter> = c
                    .letters()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !deleted.contains(i))
                    .map(|(_, l)| *l)
                    .collect();
                let reduced = GroupWord::from_letters(alphabet, letters)
                    .expect("same alphabet")
                    .reduce();
                if let Some(g) = conjugator_of_beta_inverse(&reduced) {
                    return Ok(search_certificate(c, &deleted, &reduced, &g, r));
                }
                if !next_combination(&mut chosen, alphas.len()) {
                    break;
                }
            }
        }
    }
    Err(DeriveError::SearchExhausted {
        deletions: bound.deletions,
        budget: bound.budget,
    })
}

/// `g` with `w = g β⁻¹ g⁻¹` for a reduced `w`.
fn conjugator_of_beta_inverse(w: &GroupWord) -> Option<GroupWord> {
    let l = w.letters();
    if l.len().is_multiple_of(2) {
        return None;
    }
    let h = l.len() / 2;
    if l[h] != Letter::neg(BETA) {
        return None;
    }
    let g = w.slice(0, h);
    (w.slice(h + 1, l.len()) == g.invert()).then_some(g)
}

fn next_combination(chosen: &mut [usize], n: usize) -> bool {
    let k = chosen.len();
    for i in (0..k).rev() {
        if chosen[i] < n - k + i {
            chosen[i] += 1;
            for j in i + 1..k {
                chosen[j] = chosen[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `1 = c`, deletions, `1 > gβ⁻¹g⁻¹`, then `βg⁻¹ · (·) · g` and reduction to `β > 1`.
fn search_certificate(
    c: &GroupWord,
    deleted: &[usize],
    reduced: &GroupWord,
    g: &GroupWord,
    relator: &GroupWord,
) -> Certificate {
    let empty = GroupWord::empty(relator.alphabet());
    let mut cert = Builder::default();
    let hyp = cert.derive(Rule::Hypothesis, vec![], relator);
    let mut cur = cert.push(
        Rule::RelatorEquality,
        vec![],
        IneqFact::new(empty.clone(), Rel::Eq, c.clone()),
    );
    for &position in deleted.iter().rev() {
        cur = cert.derive(Rule::DeleteAlpha { position }, vec![cur, hyp], relator);
    }
    let rel = if deleted.is_empty() { Rel::Eq } else { Rel::Gt };
    cur = cert.push(
        Rule::FreeReduce,
        vec![cur],
        IneqFact::new(empty.clone(), rel, reduced.clone()),
    );
    let front = cat(&[b(1), g.raw_inverse()]);
    cur = cert.derive(Rule::PrependWord { word: front }, vec![cur], relator);
    let refl = cert.push(
        Rule::Reflexive,
        vec![],
        IneqFact::new(g.clone(), Rel::Eq, g.clone()),
    );
    cur = cert.derive(Rule::Compose, vec![cur, refl], relator);
    cert.push(Rule::FreeReduce, vec![cur], IneqFact::new(b(1), rel, empty));
    cert.finish()
}
