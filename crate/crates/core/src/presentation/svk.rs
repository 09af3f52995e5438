//! Seifert–van Kampen loop relations and their elimination.
//!
//! Each family contributes three loop relations `L = γ^E δ^ε` over `(a, b, c, d)`
//! with `c = γ`, `d = δ`, the left sides in `π₁(U) = F(α, β)`. Every `γ`
//! exponent has the form `q·p + c₀` where `p` is the power of `γ` the second
//! and third relations isolate (`m` for family 1, `m+1` otherwise), so the
//! elimination is carried out symbolically in `p` and works for `p = 0` too.

use crate::braid::FamilyParams;
use crate::freeword::{Alphabet, GroupWord, Homomorphism};

use super::words::{a, ab, ab1, b, ba1, cat, pw};
use super::{family1_p, family1_x, unified_params, unified_q, unified_z, PresentationError};

/// `γ^{per_p·p + offset}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaExponent {
    pub per_p: i64,
    pub offset: i64,
}

impl GammaExponent {
    pub fn value(self, p: i64) -> i64 {
        self.per_p * p + self.offset
    }
}

/// `left = γ^gamma δ^{[delta]}`, `left` over `(α, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopRelation {
    pub left: GroupWord,
    pub gamma: GammaExponent,
    pub delta: bool,
    /// The right side over `(a, b, c, d)`.
    pub right: GroupWord,
}

impl LoopRelation {
    fn new(left: GroupWord, gamma: GammaExponent, delta: bool, p: i64) -> Self {
        let abcd = Alphabet::alpha_beta_gamma_delta();
        let mut right =
            GroupWord::named_power(&abcd, "c", gamma.value(p)).expect("c is in the alphabet");
        if delta {
            right = right
                .then(&GroupWord::named_power(&abcd, "d", 1).expect("d is in the alphabet"))
                .expect("same alphabet");
        }
        Self {
            left,
            gamma,
            delta,
            right,
        }
    }

    /// `left` viewed in `F(α, β, γ, δ)`.
    pub fn left_in_abcd(&self) -> GroupWord {
        let abcd = Alphabet::alpha_beta_gamma_delta();
        self.left
            .substitute(&Homomorphism::inclusion(&ab(), &abcd))
            .expect("α, β are shared")
    }
}

/// The three loop relations of a family together with the expressions the
/// source states for `γ^p`, `γ` and `δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvkData {
    pub family: FamilyParams,
    /// The power of `γ` isolated by the second and third relations.
    pub gamma_power: i64,
    pub green: LoopRelation,
    pub purple: LoopRelation,
    pub olive: LoopRelation,
    pub stated_gamma_power: GroupWord,
    pub stated_gamma: GroupWord,
    pub stated_delta: GroupWord,
    /// `E` in `s = γ^E δ`.
    pub surface_gamma_exponent: i64,
}

pub fn svk_relations(f: &FamilyParams) -> SvkData {
    let e = |per_p, offset| GammaExponent { per_p, offset };
    match *f {
        FamilyParams::Family1 { w, k, m } => {
            let (w, k, p) = (w as i64, k as i64, m as i64);
            let x = family1_x(k);
            let green =
                LoopRelation::new(cat(&[a(1), family1_p(w, k), a(-1)]), e(w - k, 1), false, p);
            let purple = LoopRelation::new(
                cat(&[a(1), pw(&ba1(), k), b(1), a(-1)]),
                e(k + 1, 0),
                true,
                p,
            );
            let olive = LoopRelation::new(cat(&[a(1), pw(&ab1(), k)]), e(k, 0), true, p);
            SvkData {
                family: *f,
                gamma_power: p,
                green,
                purple,
                olive,
                stated_gamma_power: cat(&[a(1), x.clone(), a(-1)]),
                stated_gamma: cat(&[a(1), family1_p(w, k), pw(&x, -w + k), a(-1)]),
                stated_delta: cat(&[a(1), pw(&x, -k), pw(&ab1(), k)]),
                surface_gamma_exponent: f.one_bridge().twists() as i64,
            }
        }
        FamilyParams::Family2 { .. } | FamilyParams::Family3 { .. } => {
            let (n, k, m, bb) = unified_params(f).expect("families 2 and 3");
            let p = m + 1;
            let big_n = n - k + bb;
            let z = unified_z(n, k, bb);
            let green = LoopRelation::new(
                cat(&[a(1), b(n - k + 1), pw(&ab1(), bb - 1), a(-1)]),
                e(big_n, -1),
                false,
                p,
            );
            let purple = LoopRelation::new(cat(&[a(1), b(n - k), a(-1)]), e(n - k, -1), true, p);
            let olive = LoopRelation::new(cat(&[a(2), b(n - k + 1)]), e(n - k + 1, -1), true, p);
            SvkData {
                family: *f,
                gamma_power: p,
                green,
                purple,
                olive,
                stated_gamma_power: cat(&[a(2), b(n - k + 1), a(1), b(-n + k), a(-1)]),
                stated_gamma: cat(&[
                    a(1),
                    pw(&unified_q(n, k), big_n),
                    pw(&ab1(), -bb + 1),
                    b(-n + k - 1),
                    a(-1),
                ]),
                stated_delta: cat(&[a(1), pw(&z, -p * (n - k) + 1), b(n - k), a(-1)]),
                surface_gamma_exponent: f.one_bridge().twists() as i64,
            }
        }
    }
}

/// Expressions obtained by eliminating `γ` and `δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub gamma_power: GroupWord,
    pub gamma: GroupWord,
    pub delta: GroupWord,
    pub relator: GroupWord,
}

fn fail(msg: impl Into<String>) -> PresentationError {
    PresentationError::Elimination(msg.into())
}

/// Replays the elimination: `γ^p` from the two relations containing `δ`, `γ`
/// from the relation without `δ`, then `δ`, and finally the single relator
/// `γ(α,β)^p · (γ^p)(α,β)⁻¹`. Each derived expression must freely equal the
/// stated one.
pub fn eliminate(d: &SvkData) -> Result<Elimination, PresentationError> {
    let p = d.gamma_power;
    let abcd = Alphabet::alpha_beta_gamma_delta();
    let (first, second) = match d.family {
        FamilyParams::Family1 { .. } => (&d.purple, &d.olive),
        _ => (&d.olive, &d.purple),
    };
    if !first.delta || !second.delta || d.green.delta {
        return Err(fail("expected δ in exactly the second and third relations"));
    }
    // first·second⁻¹ on the right must leave exactly γ^p
    let right = first.right.concat(&second.right.invert())?;
    let gamma_p_word = GroupWord::named_power(&abcd, "c", p)?;
    if right != gamma_p_word {
        return Err(fail(format!("right sides combine to {right}, not γ^{p}")));
    }
    if first.gamma.per_p - second.gamma.per_p != 1 || first.gamma.offset != second.gamma.offset {
        return Err(fail("exponent bookkeeping does not isolate γ^p"));
    }
    let gamma_power = first.left.concat(&second.left.invert())?;
    check(&gamma_power, &d.stated_gamma_power, "γ^p")?;

    // γ^{q p + c} = L with c = ±1
    let GammaExponent {
        per_p: q,
        offset: c,
    } = d.green.gamma;
    let gamma = match c {
        1 => cat(&[d.green.left.clone(), pw(&gamma_power, -q)]).reduce(),
        -1 => cat(&[pw(&gamma_power, q), d.green.left.raw_inverse()]).reduce(),
        _ => return Err(fail(format!("green exponent offset {c} is not ±1"))),
    };
    check(&gamma, &d.stated_gamma, "γ")?;

    // δ from the relation carrying it with offset 0 if any, else through γ itself
    let delta = if d.olive.gamma.offset == 0 {
        cat(&[pw(&gamma_power, -d.olive.gamma.per_p), d.olive.left.clone()]).reduce()
    } else {
        let e = d.purple.gamma.value(p);
        cat(&[pw(&gamma, -e), d.purple.left.clone()]).reduce()
    };
    check(&delta, &d.stated_delta, "δ")?;

    let relator = cat(&[pw(&gamma, p), gamma_power.raw_inverse()]).cyclic_reduce();
    if relator.is_empty() {
        return Err(fail("elimination left no relation"));
    }
    Ok(Elimination {
        gamma_power,
        gamma,
        delta,
        relator,
    })
}

fn check(derived: &GroupWord, stated: &GroupWord, what: &str) -> Result<(), PresentationError> {
    if derived.free_equal(stated)? {
        Ok(())
    } else {
        Err(fail(format!(
            "derived {what} = {derived} differs from the stated {}",
            stated.reduce()
        )))
    }
}

/// The single relator left after eliminating `γ` and `δ`.
pub fn derive_relator(d: &SvkData) -> Result<GroupWord, PresentationError> {
    eliminate(d).map(|e| e.relator)
}

/// `s = γ^E δ` with the stated expressions substituted, reduced.
pub fn unsimplified_surface_word(d: &SvkData) -> GroupWord {
    cat(&[
        pw(&d.stated_gamma, d.surface_gamma_exponent),
        d.stated_delta.clone(),
    ])
    .reduce()
}
