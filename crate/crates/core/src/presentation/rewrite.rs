//! Guided single-relator rewrites and the stored scripts that simplify the
//! surface framing word `s = γ^E δ` to its closed form.
//!
//! A site names a rotation `c = r.rotate(shift)` of the relator split as
//! `c = u·x`, so that `u = x⁻¹` holds in the group. `Forward` replaces an
//! occurrence of `u` at `position` by `x⁻¹`; `Backward` replaces an occurrence
//! of `x⁻¹` by `u`. The result is freely reduced.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::braid::FamilyParams;
use crate::freeword::{GroupWord, Letter};

use super::svk::{svk_relations, unsimplified_surface_word};
use super::words::{a, b, cat, pw};
use super::{
    family1_x, family1_y, unified_params, unified_q, unified_z, KnotGroupPresentation,
    PresentationError,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RewriteSite {
    pub position: usize,
    pub direction: Direction,
    pub shift: usize,
    pub split: usize,
}

/// `(pattern, replacement)` of a site against relator `r`.
fn site_words(r: &GroupWord, site: &RewriteSite) -> Option<(Vec<Letter>, Vec<Letter>)> {
    if site.split > r.len() || (site.shift >= r.len() && !r.is_empty()) {
        return None;
    }
    let c = r.rotate(site.shift);
    let u = c.letters()[..site.split].to_vec();
    let x_inv: Vec<Letter> = c.letters()[site.split..]
        .iter()
        .rev()
        .map(|l| l.inv())
        .collect();
    Some(match site.direction {
        Direction::Forward => (u, x_inv),
        Direction::Backward => (x_inv, u),
    })
}

/// One rewrite of `w` with the relator of `pres`.
pub fn apply_relator(
    w: &GroupWord,
    pres: &KnotGroupPresentation,
    site: &RewriteSite,
) -> Result<GroupWord, PresentationError> {
    apply_with_relator(w, pres.relator(), site)
}

pub(crate) fn apply_with_relator(
    w: &GroupWord,
    r: &GroupWord,
    site: &RewriteSite,
) -> Result<GroupWord, PresentationError> {
    w.same_alphabet(r)?;
    let no_match = PresentationError::NoMatch {
        position: site.position,
    };
    let (pattern, replacement) = site_words(r, site).ok_or(no_match.clone())?;
    let end = site.position + pattern.len();
    if end > w.len() || w.letters()[site.position..end] != pattern[..] {
        return Err(no_match);
    }
    let mut letters = w.letters()[..site.position].to_vec();
    letters.extend(replacement);
    letters.extend_from_slice(&w.letters()[end..]);
    Ok(GroupWord::from_letters(w.alphabet(), letters)?.reduce())
}

/// A site turning `w` into `next` with one rewrite, if one exists.
///
/// With `w = w₁·u·w₂` and `c = u·x`, the rewrite yields `w · w₂⁻¹(x·u)⁻¹w₂`,
/// so the suffix `w₂` must conjugate `g = w⁻¹·next` onto `h = (x·u)⁻¹`, a
/// rotation of `r^{±1}`, and `u` must be the suffix of `h⁻¹` that ends where
/// `w₂` starts. All suffixes are scanned; among valid sites the longest `u`
/// wins, then the smallest `(position, direction, shift, split)`.
pub fn find_site(w: &GroupWord, next: &GroupWord, r: &GroupWord) -> Option<RewriteSite> {
    let rl = r.len();
    if rl == 0 {
        return None;
    }
    let g = w.invert().concat(next).ok()?;
    if g.is_empty() {
        return None;
    }
    // h → (is h a rotation of r, offset s0) with h = r.rotate(s0) or h⁻¹ = r.rotate(s0)
    let mut targets: HashMap<Vec<Letter>, Vec<(bool, usize)>> = HashMap::new();
    for s0 in 0..rl {
        let rot = r.rotate(s0);
        targets
            .entry(rot.letters().to_vec())
            .or_default()
            .push((true, s0));
        targets
            .entry(rot.raw_inverse().letters().to_vec())
            .or_default()
            .push((false, s0));
    }
    let wl = w.letters();
    let mut h: VecDeque<Letter> = g.letters().iter().copied().collect();
    let mut best: Option<(usize, RewriteSite)> = None;
    for q in (0..=wl.len()).rev() {
        if q < wl.len() {
            let l = wl[q];
            if h.front().is_some_and(|f| f.cancels(l)) {
                h.pop_front();
            } else {
                h.push_front(l);
            }
            if h.back().is_some_and(|x| x.cancels(l.inv())) {
                h.pop_back();
            } else {
                h.push_back(l.inv());
            }
        }
        if h.len() != rl {
            continue;
        }
        let Some(cands) = targets.get(h.make_contiguous() as &[Letter]) else {
            continue;
        };
        // h⁻¹ = x·u
        let xu: Vec<Letter> = h.iter().rev().map(|l| l.inv()).collect();
        for ell in 0..=rl.min(q) {
            if xu[rl - ell..] != wl[q - ell..q] {
                continue;
            }
            for &(h_is_rotation, s0) in cands {
                // u·x = r.rotate(·) gives Forward; (u·x)⁻¹ = x⁻¹u⁻¹ = r.rotate(·) gives Backward
                let (direction, shift, split) = if h_is_rotation {
                    (Direction::Backward, (s0 + ell) % rl, rl - ell)
                } else {
                    (Direction::Forward, (s0 + rl - ell) % rl, ell)
                };
                let site = RewriteSite {
                    position: q - ell,
                    direction,
                    shift,
                    split,
                };
                let better = match &best {
                    None => true,
                    Some((bl, bs)) => ell > *bl || (ell == *bl && site < *bs),
                };
                if better {
                    best = Some((ell, site));
                }
            }
        }
    }
    let site = best?.1;
    match apply_with_relator(w, r, &site) {
        Ok(result) if &result == next => Some(site),
        _ => None,
    }
}

/// A rewrite script taking the unsimplified `s` of a family to its closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SScript {
    pub params: FamilyParams,
    pub steps: Vec<RewriteSite>,
}

/// The intermediate words `w_i = prefix · block^{c−i} · R^i · suffix`, reduced,
/// where `block = R` is the defining relation.
///
/// Family 1: `αY · (Y^m)^ω · X^{−k}(αβ)^k` with `Y^m → X`.
/// Families 2, 3: `αZ⁻¹ · (Z^{m+1})^{N+1} · β^{n−k}α⁻¹` with `Z^{m+1} → Q`.
pub fn s_chain(f: &FamilyParams) -> Vec<GroupWord> {
    let (prefix, block, replacement, suffix, count) = match *f {
        FamilyParams::Family1 { w, k, m } => {
            let (w, k, m) = (w as i64, k as i64, m as i64);
            let y = family1_y(w, k);
            let x = family1_x(k);
            let suffix = cat(&[pw(&x, -k), pw(&super::words::ab1(), k)]);
            (cat(&[a(1), y.clone()]), pw(&y, m), x, suffix, w)
        }
        _ => {
            let (n, k, m, bb) = unified_params(f).expect("families 2 and 3");
            let z = unified_z(n, k, bb);
            let count = n - k + bb + 1;
            (
                cat(&[a(1), pw(&z, -1)]),
                pw(&z, m + 1),
                unified_q(n, k),
                cat(&[b(n - k), a(-1)]),
                count,
            )
        }
    };
    (0..=count)
        .map(|i| {
            cat(&[
                prefix.clone(),
                pw(&block, count - i),
                pw(&replacement, i),
                suffix.clone(),
            ])
            .reduce()
        })
        .collect()
}

/// Searches a script for `f` from scratch.
pub fn generate_s_script(f: &FamilyParams) -> Result<SScript, PresentationError> {
    let pres = KnotGroupPresentation::for_family(f)?;
    let chain = s_chain(f);
    let start = unsimplified_surface_word(&svk_relations(f));
    if chain[0] != start {
        return Err(PresentationError::ScriptMismatch {
            got: chain[0].to_string(),
            expected: start.to_string(),
        });
    }
    let mut steps = Vec::with_capacity(chain.len() - 1);
    for (i, pair) in chain.windows(2).enumerate() {
        if pair[0] == pair[1] {
            continue;
        }
        steps.push(
            find_site(&pair[0], &pair[1], pres.relator())
                .ok_or(PresentationError::NoSite { step: i })?,
        );
    }
    Ok(SScript { params: *f, steps })
}

#[derive(Serialize, Deserialize)]
struct ScriptFile {
    format: String,
    version: u32,
    scripts: Vec<SScript>,
}

const SHIPPED: &str = include_str!("../../data/s_scripts.json");

fn shipped() -> &'static HashMap<FamilyParams, SScript> {
    static CELL: OnceLock<HashMap<FamilyParams, SScript>> = OnceLock::new();
    CELL.get_or_init(|| {
        let file: ScriptFile = serde_json::from_str(SHIPPED).expect("shipped script data parses");
        file.scripts.into_iter().map(|s| (s.params, s)).collect()
    })
}

/// The shipped script for `f`, when `f` lies in the shipped range.
pub fn shipped_s_script(f: &FamilyParams) -> Option<&'static SScript> {
    shipped().get(f)
}

/// Shipped script if available, otherwise a live search.
pub fn s_script(f: &FamilyParams) -> Result<SScript, PresentationError> {
    match shipped_s_script(f) {
        Some(s) => Ok(s.clone()),
        None => generate_s_script(f),
    }
}

/// Parameters covered by the shipped data.
pub fn shipped_range() -> Vec<FamilyParams> {
    let mut out = FamilyParams::sweep(1, 11, 0..=2);
    out.extend(FamilyParams::sweep(2, 5, 0..=2));
    out.extend(FamilyParams::sweep(3, 5, 0..=2));
    out
}

/// Serializes scripts in the shipped file format, one script per line.
pub fn scripts_to_json(scripts: Vec<SScript>) -> String {
    let lines: Vec<String> = scripts
        .iter()
        .map(|s| serde_json::to_string(s).expect("scripts serialize"))
        .collect();
    format!(
        "{{\"format\": \"onebridge-s-scripts\", \"version\": 1, \"scripts\": [\n{}\n]}}\n",
        lines.join(",\n")
    )
}

/// Replays `script` from the unsimplified `s` and checks it ends at the closed form.
pub fn replay_s_script(
    pres: &KnotGroupPresentation,
    script: &SScript,
) -> Result<Vec<GroupWord>, PresentationError> {
    let mut words = vec![unsimplified_surface_word(&svk_relations(&script.params))];
    for site in &script.steps {
        let next = apply_relator(words.last().expect("nonempty"), pres, site)?;
        words.push(next);
    }
    let last = words.last().expect("nonempty");
    if last != pres.surface_framing() {
        return Err(PresentationError::ScriptMismatch {
            got: last.to_string(),
            expected: pres.surface_framing().to_string(),
        });
    }
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::words::ab;

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(&ab(), s).unwrap()
    }

    fn trefoil() -> KnotGroupPresentation {
        KnotGroupPresentation::family1(3, 1, 0).unwrap()
    }

    #[test]
    fn forward_and_backward() {
        let p = trefoil();
        let r = p.relator().clone();
        assert_eq!(r, w("a b a B A B"));
        // u = a b a, x = B A B: a b a → b a b
        let site = RewriteSite {
            position: 1,
            direction: Direction::Forward,
            shift: 0,
            split: 3,
        };
        let out = apply_relator(&w("b a b a"), &p, &site).unwrap();
        assert_eq!(out, w("b b a b"));
        let back = RewriteSite {
            direction: Direction::Backward,
            ..site
        };
        assert_eq!(apply_relator(&out, &p, &back).unwrap(), w("b a b a"));
    }

    #[test]
    fn non_matching_position_is_an_error() {
        let p = trefoil();
        let site = RewriteSite {
            position: 0,
            direction: Direction::Forward,
            shift: 0,
            split: 3,
        };
        assert_eq!(
            apply_relator(&w("b a b a"), &p, &site),
            Err(PresentationError::NoMatch { position: 0 })
        );
        let far = RewriteSite {
            position: 9,
            ..site
        };
        assert!(apply_relator(&w("b a b a"), &p, &far).is_err());
    }

    #[test]
    fn found_sites_reproduce_their_target() {
        let p = trefoil();
        let r = p.relator();
        let x = w("b b a A b");
        for (pos, shift, split) in [(0, 0, 2), (2, 3, 4), (3, 5, 0), (1, 1, 6)] {
            let site = RewriteSite {
                position: pos,
                direction: Direction::Forward,
                shift,
                split,
            };
            let Ok(y) = apply_with_relator(&x.reduce(), r, &site) else {
                continue;
            };
            let found = find_site(&x.reduce(), &y, r).unwrap();
            assert_eq!(apply_with_relator(&x.reduce(), r, &found).unwrap(), y);
        }
    }

    #[test]
    fn chain_endpoints() {
        for f in [
            FamilyParams::family1(5, 1, 1).unwrap(),
            FamilyParams::family2(3, 2, 1).unwrap(),
            FamilyParams::family3(3, 1, 2).unwrap(),
        ] {
            let chain = s_chain(&f);
            let pres = KnotGroupPresentation::for_family(&f).unwrap();
            assert_eq!(
                chain[0],
                unsimplified_surface_word(&svk_relations(&f)),
                "{f}"
            );
            assert_eq!(chain.last().unwrap(), pres.surface_framing(), "{f}");
        }
    }

    #[test]
    fn shipped_scripts_replay() {
        for f in shipped_range() {
            let script =
                shipped_s_script(&f).unwrap_or_else(|| panic!("no shipped script for {f}"));
            let pres = KnotGroupPresentation::for_family(&f).unwrap();
            replay_s_script(&pres, script).unwrap_or_else(|e| panic!("{f}: {e}"));
        }
    }

    #[test]
    fn shipped_scripts_regenerate_exactly() {
        let scripts: Vec<SScript> = shipped_range()
            .iter()
            .map(|f| generate_s_script(f).unwrap())
            .collect();
        assert_eq!(scripts_to_json(scripts), SHIPPED);
    }

    #[test]
    fn live_search_outside_shipped_range() {
        let f = FamilyParams::family2(6, 2, 0).unwrap();
        assert!(shipped_s_script(&f).is_none());
        let script = s_script(&f).unwrap();
        replay_s_script(&KnotGroupPresentation::for_family(&f).unwrap(), &script).unwrap();
    }
}
