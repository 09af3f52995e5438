//! The Alexander polynomial two ways: Fox calculus on `⟨α, β | r⟩` and the
//! reduced Burau representation of the braid.

use thiserror::Error;

use crate::braid::{BraidLetter, BraidWord};
use crate::freeword::GroupWord;
use crate::homology::AbelianizationReport;
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::presentation::{KnotGroupPresentation, ALPHA, BETA};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("β is not a power of the meridian, so the abelianization is not α ↦ t, β ↦ t^e")]
    BetaNotUnit,
    #[error("the Fox derivatives are inconsistent: {0}")]
    InconsistentFox(String),
    #[error("the closure is not a knot")]
    NotKnot,
    #[error("reduced Burau needs at least 3 strands, got {0}")]
    TooFewStrands(usize),
    #[error("det(I − ρ) is not divisible by 1 + t + ⋯ + t^(ω−1)")]
    NonExactDivision,
}

/// `φ(∂w/∂x)` under `α ↦ t^{deg[0]}`, `β ↦ t^{deg[1]}`, …
pub fn fox_derivative(w: &GroupWord, generator: usize, degrees: &[i64]) -> LaurentPoly {
    let mut d = 0i64;
    let mut acc = LaurentPoly::zero();
    for l in w.letters() {
        let deg = degrees[l.generator];
        if l.inverse {
            d -= deg;
            if l.generator == generator {
                acc = &acc - &LaurentPoly::monomial(1, d);
            }
        } else {
            if l.generator == generator {
                acc = &acc + &LaurentPoly::monomial(1, d);
            }
            d += deg;
        }
    }
    acc
}

/// `Δ ≐ φ(∂r/∂β)`, checked against `φ(∂r/∂α)·(t − 1)/(t^e − 1)`.
pub fn fox_alexander(
    pres: &KnotGroupPresentation,
    report: &AbelianizationReport,
) -> Result<LaurentPoly, AlexanderError> {
    let e = report.beta_power.ok_or(AlexanderError::BetaNotUnit)?;
    let degrees = [1, e];
    let r = pres.relator();
    let d_alpha = fox_derivative(r, ALPHA, &degrees);
    let d_beta = fox_derivative(r, BETA, &degrees);
    // fundamental identity: ∂r/∂α (t − 1) + ∂r/∂β (t^e − 1) = φ(r) − 1 = 0
    let lhs = &(&d_alpha * &LaurentPoly::t_power_minus_one(1))
        + &(&d_beta * &LaurentPoly::t_power_minus_one(e));
    if !lhs.is_zero() {
        return Err(AlexanderError::InconsistentFox(format!(
            "fundamental identity leaves {lhs}"
        )));
    }
    if e != 0 {
        let via_alpha = (&d_alpha * &LaurentPoly::t_power_minus_one(1))
            .div_exact(&LaurentPoly::t_power_minus_one(e))
            .ok_or_else(|| {
                AlexanderError::InconsistentFox("∂r/∂α (t−1) not divisible by t^e − 1".into())
            })?;
        if !via_alpha.equal_up_to_units(&d_beta) {
            return Err(AlexanderError::InconsistentFox(format!(
                "{via_alpha} vs {d_beta}"
            )));
        }
    }
    Ok(d_beta.normalize())
}

/// Reduced Burau image of one letter on `strands` strands.
pub fn burau_generator(strands: usize, letter: BraidLetter) -> LaurentMatrix {
    let n = strands - 1;
    let j = letter.index - 1;
    let mut m = LaurentMatrix::identity(n);
    let (diag, below, above) = if letter.positive {
        (
            LaurentPoly::monomial(-1, 1),
            LaurentPoly::t(),
            LaurentPoly::one(),
        )
    } else {
        (
            LaurentPoly::monomial(-1, -1),
            LaurentPoly::one(),
            LaurentPoly::monomial(1, -1),
        )
    };
    m.set(j, j, diag);
    if j > 0 {
        m.set(j, j - 1, below);
    }
    if j + 1 < n {
        m.set(j, j + 1, above);
    }
    m
}

/// `ρ(w)`, the product of the letter images in word order.
pub fn burau_matrix(w: &BraidWord) -> LaurentMatrix {
    let n = w.strands() - 1;
    let mut p = LaurentMatrix::identity(n);
    for &letter in w.letters() {
        // right multiplication by a matrix that differs from I only in row j
        let g = burau_generator(w.strands(), letter);
        let j = letter.index - 1;
        let lo = j.saturating_sub(1);
        let hi = (j + 1).min(n - 1);
        for r in 0..n {
            let pj = p.get(r, j).clone();
            if pj.is_zero() {
                continue;
            }
            for c in lo..=hi {
                let entry = if c == j {
                    &pj * g.get(j, j)
                } else {
                    p.get(r, c) + &(&pj * g.get(j, c))
                };
                p.set(r, c, entry);
            }
        }
    }
    p
}

/// `Δ ≐ det(I − ρ(w)) / (1 + t + ⋯ + t^{ω−1})`.
pub fn burau_alexander(w: &BraidWord) -> Result<LaurentPoly, AlexanderError> {
    if w.strands() < 3 {
        return Err(AlexanderError::TooFewStrands(w.strands()));
    }
    if !w.is_knot() {
        return Err(AlexanderError::NotKnot);
    }
    let n = w.strands() - 1;
    let det = (&LaurentMatrix::identity(n) - &burau_matrix(w)).determinant();
    det.div_exact(&LaurentPoly::geometric(w.strands()))
        .map(|p| p.normalize())
        .ok_or(AlexanderError::NonExactDivision)
}

pub fn normalize(p: &LaurentPoly) -> LaurentPoly {
    p.normalize()
}

pub fn equal_up_to_units(p: &LaurentPoly, q: &LaurentPoly) -> bool {
    p.equal_up_to_units(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{FamilyParams, OneBridgeParams};
    use crate::freeword::Alphabet;
    use crate::homology::abelianize;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64(low, c)
    }

    fn fox(pres: &KnotGroupPresentation) -> LaurentPoly {
        fox_alexander(pres, &abelianize(pres)).unwrap()
    }

    #[test]
    fn trefoil_both_ways() {
        let pres = KnotGroupPresentation::family1(3, 1, 0).unwrap();
        assert_eq!(fox(&pres), p(0, &[1, -1, 1]));
        let braid = FamilyParams::family1(3, 1, 0).unwrap().one_bridge().word();
        assert_eq!(burau_alexander(&braid).unwrap(), p(0, &[1, -1, 1]));
    }

    #[test]
    fn unknot_like_relator() {
        let ab = Alphabet::alpha_beta();
        let r = GroupWord::parse(&ab, "a B").unwrap();
        let pres = KnotGroupPresentation::from_relator(&r, &GroupWord::parse(&ab, "a").unwrap(), 1)
            .unwrap();
        assert_eq!(fox(&pres), LaurentPoly::one());
    }

    #[test]
    fn burau_guards() {
        assert_eq!(
            burau_alexander(&BraidWord::identity(3).unwrap()),
            Err(AlexanderError::NotKnot)
        );
        assert_eq!(
            burau_alexander(&BraidWord::from_signed(2, &[1, 1, 1]).unwrap()),
            Err(AlexanderError::TooFewStrands(2))
        );
    }

    #[test]
    fn burau_generators_satisfy_braid_relations() {
        for n in 3..=6 {
            let g =
                |i: usize, positive: bool| burau_generator(n, BraidLetter { index: i, positive });
            for i in 1..n {
                assert_eq!(&g(i, true) * &g(i, false), LaurentMatrix::identity(n - 1));
                if i + 1 < n {
                    let lhs = &(&g(i, true) * &g(i + 1, true)) * &g(i, true);
                    let rhs = &(&g(i + 1, true) * &g(i, true)) * &g(i + 1, true);
                    assert_eq!(lhs, rhs);
                }
                for j in i + 2..n {
                    assert_eq!(&g(i, true) * &g(j, true), &g(j, true) * &g(i, true));
                }
            }
        }
    }

    #[test]
    fn torus_knots_from_family1_m0() {
        // B(ω, 1, 2k) with m = 0 closes to T(2, 2k+1): Δ = (t^{2k+1} + 1)/(t + 1)
        for w in 4..=9 {
            for k in 1..=(w - 2) / 2 {
                let f = FamilyParams::family1(w, k, 0).unwrap();
                let expected = (&LaurentPoly::monomial(1, 2 * k as i64 + 1) + &LaurentPoly::one())
                    .div_exact(&p(0, &[1, 1]))
                    .unwrap();
                assert_eq!(
                    burau_alexander(&f.one_bridge().word()).unwrap(),
                    expected,
                    "{f}"
                );
            }
        }
    }

    #[test]
    fn oracle_equivalence_small_cases() {
        for f in [
            FamilyParams::family1(5, 1, 0).unwrap(),
            FamilyParams::family2(2, 1, 0).unwrap(),
            FamilyParams::family3(3, 2, 0).unwrap(),
            FamilyParams::family1(4, 1, 1).unwrap(),
        ] {
            let pres = KnotGroupPresentation::for_family(&f).unwrap();
            let burau = burau_alexander(&f.one_bridge().word()).unwrap();
            assert!(
                equal_up_to_units(&fox(&pres), &burau),
                "{f}: {} vs {burau}",
                fox(&pres)
            );
        }
    }

    #[test]
    fn positive_braid_degree_is_twice_the_genus() {
        for params in [
            OneBridgeParams::new(5, 3, 2, 0).unwrap(),
            OneBridgeParams::new(6, 4, 3, 1).unwrap(),
        ] {
            let w = params.word();
            let delta = burau_alexander(&w).unwrap();
            assert_eq!(delta.span(), w.exponent_sum() - w.strands() as i64 + 1);
        }
    }

    #[test]
    fn normalize_and_units() {
        assert_eq!(normalize(&p(-1, &[-1, 1, -1])), p(0, &[1, -1, 1]));
        assert!(equal_up_to_units(&p(0, &[1, -1, 1]), &p(1, &[-1, 1, -1])));
        assert!(!equal_up_to_units(&p(0, &[1, -1, 1]), &p(0, &[1, 1, 1])));
    }
}
