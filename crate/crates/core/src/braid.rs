//! Braid words, the permutation homomorphism `B_ω → S_ω`, and the 1-bridge
//! braid normal form `(σ₁⋯σ_b)(σ₁⋯σ_{ω−1})^{t+mω}`.
//!
//! Composition runs right to left everywhere: in a word the rightmost letter
//! acts first, and `compose(left, right)` applies `right` first. With this
//! convention `σ₁σ₂⋯σ_{ω−1}` sends `i ↦ i+1` for `i < ω` and `ω ↦ 1`.
//!
//! The permutation of a letter ignores its sign since `s_i² = 1` in `S_ω`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator σ_{index} does not exist on {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("invalid 1-bridge parameters: {0}")]
    InvalidParams(String),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
}

/// `σ_index^{±1}`, with `index` 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub positive: bool,
}

impl BraidLetter {
    pub fn sign(self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(BraidError::GeneratorOutOfRange {
                index: l.index,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    /// From signed indices: `2` is σ₂, `-2` is σ₂⁻¹.
    pub fn from_signed(strands: usize, signed: &[i64]) -> Result<Self, BraidError> {
        let letters = signed
            .iter()
            .map(|&s| BraidLetter {
                index: s.unsigned_abs() as usize,
                positive: s > 0,
            })
            .collect();
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.positive)
    }

    /// `left ∘ right`; `right` acts first, so the letters are `left` then `right`.
    pub fn compose(left: &BraidWord, right: &BraidWord) -> Result<BraidWord, BraidError> {
        if left.strands != right.strands {
            return Err(BraidError::StrandMismatch(left.strands, right.strands));
        }
        let mut letters = left.letters.clone();
        letters.extend_from_slice(&right.letters);
        Ok(BraidWord {
            strands: left.strands,
            letters,
        })
    }

    pub fn induced_permutation(&self) -> Permutation {
        let n = self.strands;
        let mut images: Vec<usize> = (1..=n).collect();
        // rightmost letter first: track each start strand through the letters in reverse
        for l in self.letters.iter().rev() {
            let i = l.index;
            for img in images.iter_mut() {
                if *img == i {
                    *img = i + 1;
                } else if *img == i + 1 {
                    *img = i;
                }
            }
        }
        Permutation { images }
    }

    /// The closure is a knot iff the permutation is one ω-cycle.
    pub fn is_knot(&self) -> bool {
        self.induced_permutation().is_full_cycle()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l.positive {
                write!(f, "s{}", l.index)?;
            } else {
                write!(f, "S{}", l.index)?;
            }
        }
        Ok(())
    }
}

/// A bijection of `{1, …, ω}` stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// `images[i - 1] = p(i)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, BraidError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(BraidError::NotAPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// The single cycle `(c₀ c₁ … )` on `n` points; unlisted points are fixed.
    pub fn from_cycle(n: usize, cycle: &[usize]) -> Result<Self, BraidError> {
        let mut images: Vec<usize> = (1..=n).collect();
        for (j, &x) in cycle.iter().enumerate() {
            if x == 0 || x > n {
                return Err(BraidError::NotAPermutation(cycle.to_vec()));
            }
            images[x - 1] = cycle[(j + 1) % cycle.len()];
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j - 1]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Disjoint cycles, each starting at its smallest point, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    /// Cycle notation with a chosen separator, e.g. `(1 3 4 5 2)`; identity is `()`.
    pub fn cycle_notation(&self, sep: &str) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                format!(
                    "({})",
                    c.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(sep)
                )
            })
            .collect();
        if parts.is_empty() {
            "()".to_string()
        } else {
            parts.concat()
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation(", "))
    }
}

/// Parameters of `B(ω, t + mω, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneBridgeParams {
    pub w: usize,
    pub t: usize,
    pub b: usize,
    pub m: usize,
}

impl OneBridgeParams {
    pub fn new(w: usize, t: usize, b: usize, m: usize) -> Result<Self, BraidError> {
        if w < 3 {
            return Err(BraidError::InvalidParams(format!(
                "need ω ≥ 3, got ω = {w}"
            )));
        }
        if !(1..=w - 2).contains(&t) {
            return Err(BraidError::InvalidParams(format!(
                "need 1 ≤ t ≤ ω−2 = {}, got t = {t}",
                w - 2
            )));
        }
        if !(1..=w - 2).contains(&b) {
            return Err(BraidError::InvalidParams(format!(
                "need 1 ≤ b ≤ ω−2 = {}, got b = {b}",
                w - 2
            )));
        }
        Ok(Self { w, t, b, m })
    }

    /// Number of full passes `t + mω`.
    pub fn twists(&self) -> usize {
        self.t + self.m * self.w
    }

    /// `(σ₁⋯σ_b)(σ₁⋯σ_{ω−1})^{t+mω}`.
    pub fn word(&self) -> BraidWord {
        let mut letters: Vec<BraidLetter> = (1..=self.b)
            .map(|index| BraidLetter {
                index,
                positive: true,
            })
            .collect();
        let pass: Vec<BraidLetter> = (1..self.w)
            .map(|index| BraidLetter {
                index,
                positive: true,
            })
            .collect();
        for _ in 0..self.twists() {
            letters.extend_from_slice(&pass);
        }
        BraidWord {
            strands: self.w,
            letters,
        }
    }

    /// `(ω−1)(t+mω) + b`, the framing the construction assigns to the surface push-off.
    pub fn claimed_surface_framing(&self) -> i64 {
        ((self.w - 1) * self.twists() + self.b) as i64
    }
}

impl fmt::Display for OneBridgeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "B({}, {} + {}·{}, {})",
            self.w, self.t, self.m, self.w, self.b
        )
    }
}

/// The three knot families, each a sub-family of [`OneBridgeParams`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilyParams {
    /// `B(ω, 1 + mω, 2k)`, `1 ≤ k ≤ ⌊(ω−2)/2⌋`.
    #[serde(rename = "1")]
    Family1 { w: usize, k: usize, m: usize },
    /// `B(2n+1, 2n−1 + m(2n+1), 2k)`, `1 ≤ k ≤ n−1`.
    #[serde(rename = "2")]
    Family2 { n: usize, k: usize, m: usize },
    /// `B(2n, 2n−2 + 2mn, 2k−1)`, `1 ≤ k ≤ n−1`.
    #[serde(rename = "3")]
    Family3 { n: usize, k: usize, m: usize },
}

impl FamilyParams {
    pub fn family1(w: usize, k: usize, m: usize) -> Result<Self, BraidError> {
        let f = FamilyParams::Family1 { w, k, m };
        f.validate()?;
        Ok(f)
    }

    pub fn family2(n: usize, k: usize, m: usize) -> Result<Self, BraidError> {
        let f = FamilyParams::Family2 { n, k, m };
        f.validate()?;
        Ok(f)
    }

    pub fn family3(n: usize, k: usize, m: usize) -> Result<Self, BraidError> {
        let f = FamilyParams::Family3 { n, k, m };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<(), BraidError> {
        match *self {
            FamilyParams::Family1 { w, k, .. } => {
                if w < 3 {
                    return Err(BraidError::InvalidParams(format!(
                        "family 1 needs ω ≥ 3, got ω = {w}"
                    )));
                }
                let kmax = family1_max_k(w);
                if !(1..=kmax).contains(&k) {
                    return Err(BraidError::InvalidParams(format!(
                        "family 1 needs 1 ≤ k ≤ {kmax}, got k = {k}"
                    )));
                }
            }
            FamilyParams::Family2 { n, k, .. } | FamilyParams::Family3 { n, k, .. } => {
                if n < 2 {
                    return Err(BraidError::InvalidParams(format!(
                        "families 2 and 3 need n ≥ 2, got n = {n}"
                    )));
                }
                if !(1..n).contains(&k) {
                    return Err(BraidError::InvalidParams(format!(
                        "need 1 ≤ k ≤ n−1 = {}, got k = {k}",
                        n - 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        match *self {
            FamilyParams::Family1 { k, .. }
            | FamilyParams::Family2 { k, .. }
            | FamilyParams::Family3 { k, .. } => k,
        }
    }

    pub fn m(&self) -> usize {
        match *self {
            FamilyParams::Family1 { m, .. }
            | FamilyParams::Family2 { m, .. }
            | FamilyParams::Family3 { m, .. } => m,
        }
    }

    pub fn family_number(&self) -> u8 {
        match self {
            FamilyParams::Family1 { .. } => 1,
            FamilyParams::Family2 { .. } => 2,
            FamilyParams::Family3 { .. } => 3,
        }
    }

    /// The underlying `(ω, t, b, m)`.
    pub fn one_bridge(&self) -> OneBridgeParams {
        match *self {
            FamilyParams::Family1 { w, k, m } => OneBridgeParams {
                w,
                t: 1,
                b: 2 * k,
                m,
            },
            FamilyParams::Family2 { n, k, m } => OneBridgeParams {
                w: 2 * n + 1,
                t: 2 * n - 1,
                b: 2 * k,
                m,
            },
            FamilyParams::Family3 { n, k, m } => OneBridgeParams {
                w: 2 * n,
                t: 2 * n - 2,
                b: 2 * k - 1,
                m,
            },
        }
    }

    /// The endpoint permutation as a closed-form cycle.
    pub fn closed_form_cycle(&self) -> Vec<usize> {
        match *self {
            FamilyParams::Family1 { w, k, .. } => {
                // (1, 3, …, 2k+1, 2k+2, …, ω, 2, 4, …, 2k)
                let mut c: Vec<usize> = (1..=2 * k + 1).step_by(2).collect();
                c.extend(2 * k + 2..=w);
                c.extend((2..=2 * k).step_by(2));
                c
            }
            FamilyParams::Family2 { n, k, .. } => {
                // (1, 2n, 2n−2, …, 2k+2, 2k+1, 2k, …, 2, 2n+1, 2n−1, …, 2k+3)
                let mut c = vec![1];
                c.extend((2 * k + 2..=2 * n).rev().step_by(2));
                c.extend((2..=2 * k + 1).rev());
                c.extend((2 * k + 3..=2 * n + 1).rev().step_by(2));
                c
            }
            FamilyParams::Family3 { n, k, .. } => {
                // (1, 2n−1, 2n−3, …, 2k+1, 2k, 2k−1, …, 2, 2n, 2n−2, …, 2k+2)
                let mut c = vec![1];
                c.extend((2 * k + 1..=2 * n - 1).rev().step_by(2));
                c.extend((2..=2 * k).rev());
                c.extend((2 * k + 2..=2 * n).rev().step_by(2));
                c
            }
        }
    }

    pub fn closed_form_permutation(&self) -> Permutation {
        let w = self.one_bridge().w;
        Permutation::from_cycle(w, &self.closed_form_cycle())
            .expect("closed-form cycle lists each strand once")
    }

    /// Every valid parameter set of one family with `m` in `ms`: family 1 over
    /// `ω ∈ [3, max_size]`, families 2 and 3 over `n ∈ [2, max_size]`.
    pub fn sweep(
        family: u8,
        max_size: usize,
        ms: std::ops::RangeInclusive<usize>,
    ) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        for m in ms {
            match family {
                1 => {
                    for w in 3..=max_size {
                        for k in 1..=family1_max_k(w) {
                            out.push(FamilyParams::Family1 { w, k, m });
                        }
                    }
                }
                2 | 3 => {
                    for n in 2..=max_size {
                        for k in 1..n {
                            out.push(if family == 2 {
                                FamilyParams::Family2 { n, k, m }
                            } else {
                                FamilyParams::Family3 { n, k, m }
                            });
                        }
                    }
                }
                _ => {}
            }
        }
        out
    }
}

/// `⌊(ω−2)/2⌋`, except that ω = 3 admits k = 1: `B(3, 1, 2)` is the trefoil.
fn family1_max_k(w: usize) -> usize {
    if w == 3 {
        1
    } else {
        (w - 2) / 2
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyParams::Family1 { w, k, m } => write!(f, "family1(ω={w}, k={k}, m={m})"),
            FamilyParams::Family2 { n, k, m } => write!(f, "family2(n={n}, k={k}, m={m})"),
            FamilyParams::Family3 { n, k, m } => write!(f, "family3(n={n}, k={k}, m={m})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Oracle: compose the transpositions one by one, rightmost first, on an explicit strand array.
    fn brute_force(word: &BraidWord) -> Vec<usize> {
        let n = word.strands();
        (1..=n)
            .map(|start| {
                let mut pos = start;
                for l in word.letters().iter().rev() {
                    if pos == l.index {
                        pos += 1;
                    } else if pos == l.index + 1 {
                        pos -= 1;
                    }
                }
                pos
            })
            .collect()
    }

    fn sig(strands: usize, s: &[i64]) -> BraidWord {
        BraidWord::from_signed(strands, s).unwrap()
    }

    #[test]
    fn compose_examples() {
        let c = BraidWord::compose(&sig(3, &[1]), &sig(3, &[2])).unwrap();
        assert_eq!(c, sig(3, &[1, 2]));
        assert_eq!(c.induced_permutation().images(), &[2, 3, 1]);
        let w = sig(4, &[1, -3, 2]);
        assert_eq!(
            BraidWord::compose(&w, &BraidWord::identity(4).unwrap()).unwrap(),
            w
        );
        let inv = BraidWord::compose(&sig(3, &[1]), &sig(3, &[-1])).unwrap();
        assert_eq!(inv.len(), 2);
        assert!(inv.induced_permutation().is_identity());
        assert_eq!(
            BraidWord::compose(&sig(3, &[1]), &sig(4, &[1])),
            Err(BraidError::StrandMismatch(3, 4))
        );
    }

    #[test]
    fn figure_pinned_permutation() {
        let p = OneBridgeParams::new(5, 1, 2, 0).unwrap();
        let perm = p.word().induced_permutation();
        assert_eq!(perm, Permutation::from_cycle(5, &[1, 3, 4, 5, 2]).unwrap());
        assert_eq!(perm.to_string(), "(1, 3, 4, 5, 2)");
        assert!(BraidWord::identity(5)
            .unwrap()
            .induced_permutation()
            .is_identity());
        // B(4,2,1) = σ₁(σ₁σ₂σ₃)²
        let p = OneBridgeParams::new(4, 2, 1, 0).unwrap();
        let perm = p.word().induced_permutation();
        assert_eq!(perm.images(), brute_force(&p.word()).as_slice());
        assert_eq!(perm, Permutation::from_cycle(4, &[1, 3, 2, 4]).unwrap());
    }

    #[test]
    fn one_bridge_word_examples() {
        let w = OneBridgeParams::new(5, 1, 2, 0).unwrap().word();
        assert_eq!(w, sig(5, &[1, 2, 1, 2, 3, 4]));
        let w = OneBridgeParams::new(3, 1, 1, 0).unwrap().word();
        assert_eq!(w, sig(3, &[1, 1, 2]));
        let w = OneBridgeParams::new(5, 3, 2, 1).unwrap().word();
        assert_eq!(w.len(), 34);
        assert!(w.is_positive());
        assert!(OneBridgeParams::new(2, 1, 1, 0).is_err());
        assert!(OneBridgeParams::new(5, 4, 1, 0).is_err());
        assert!(OneBridgeParams::new(5, 1, 0, 0).is_err());
    }

    #[test]
    fn knot_examples() {
        assert!(OneBridgeParams::new(5, 1, 2, 0).unwrap().word().is_knot());
        assert!(!BraidWord::identity(3).unwrap().is_knot());
        // B(5,2,2): shift by two then (σ₁σ₂); brute force decides
        let w = OneBridgeParams::new(5, 2, 2, 0).unwrap().word();
        let cycles = Permutation::from_images(brute_force(&w))
            .unwrap()
            .cycles()
            .len();
        assert_eq!(w.is_knot(), cycles == 1);
    }

    #[test]
    fn exponent_sum_and_framing() {
        assert_eq!(
            OneBridgeParams::new(5, 1, 2, 0)
                .unwrap()
                .word()
                .exponent_sum(),
            6
        );
        assert_eq!(BraidWord::identity(3).unwrap().exponent_sum(), 0);
        assert_eq!(sig(3, &[1, -1]).exponent_sum(), 0);
        assert_eq!(
            OneBridgeParams::new(5, 3, 2, 0)
                .unwrap()
                .claimed_surface_framing(),
            14
        );
        assert_eq!(
            OneBridgeParams::new(3, 1, 1, 0)
                .unwrap()
                .claimed_surface_framing(),
            3
        );
    }

    #[test]
    fn closed_form_examples() {
        let f = FamilyParams::family1(5, 1, 0).unwrap();
        assert_eq!(f.closed_form_cycle(), vec![1, 3, 4, 5, 2]);
        let f = FamilyParams::family2(2, 1, 0).unwrap();
        assert_eq!(f.closed_form_cycle(), vec![1, 4, 3, 2, 5]);
        assert_eq!(f.one_bridge(), OneBridgeParams::new(5, 3, 2, 0).unwrap());
        assert_eq!(
            f.closed_form_permutation().images(),
            brute_force(&f.one_bridge().word()).as_slice()
        );
        let f = FamilyParams::family3(3, 2, 0).unwrap();
        assert_eq!(f.one_bridge(), OneBridgeParams::new(6, 4, 3, 0).unwrap());
        assert_eq!(f.closed_form_cycle(), vec![1, 5, 4, 3, 2, 6]);
        assert_eq!(
            f.closed_form_permutation().images(),
            brute_force(&f.one_bridge().word()).as_slice()
        );
    }

    #[test]
    fn family_validation() {
        assert!(FamilyParams::family1(3, 1, 0).is_ok());
        assert!(FamilyParams::family1(5, 2, 0).is_err());
        assert!(FamilyParams::family1(6, 2, 0).is_ok());
        assert!(FamilyParams::family2(2, 2, 0).is_err());
        assert!(FamilyParams::family3(1, 1, 0).is_err());
        assert!(FamilyParams::family2(4, 3, 1).is_ok());
    }

    #[test]
    fn closed_form_sweep() {
        for fam in 1..=3u8 {
            let size = if fam == 1 { 15 } else { 7 };
            for f in FamilyParams::sweep(fam, size, 0..=3) {
                let word = f.one_bridge().word();
                let perm = word.induced_permutation();
                assert_eq!(perm, f.closed_form_permutation(), "{f}");
                assert!(perm.is_full_cycle(), "{f}");
                assert_eq!(
                    f.one_bridge().claimed_surface_framing(),
                    word.exponent_sum()
                );
            }
        }
    }

    #[test]
    fn full_twist_and_shift() {
        for n in 3..=12 {
            let pass: Vec<i64> = (1..n as i64).collect();
            let p = sig(n, &pass).induced_permutation();
            for i in 1..n {
                assert_eq!(p.apply(i), i + 1);
            }
            assert_eq!(p.apply(n), 1);
            let twist: Vec<i64> = pass.iter().copied().cycle().take(pass.len() * n).collect();
            assert!(sig(n, &twist).induced_permutation().is_identity());
        }
    }

    fn arb_braid(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec((1..strands as i64, any::<bool>()), 0..max_len).prop_map(move |v| {
            let signed: Vec<i64> = v.into_iter().map(|(i, p)| if p { i } else { -i }).collect();
            BraidWord::from_signed(strands, &signed).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

        #[test]
        fn permutation_is_a_homomorphism(u in arb_braid(6, 20), v in arb_braid(6, 20)) {
            let uv = BraidWord::compose(&u, &v).unwrap();
            prop_assert_eq!(uv.induced_permutation(), u.induced_permutation().compose(&v.induced_permutation()));
            let p = uv.induced_permutation();
            let bf = brute_force(&uv);
            prop_assert_eq!(p.images(), bf.as_slice());
        }

        #[test]
        fn braid_relations_hold(i in 1usize..6, j in 1usize..7, pre in arb_braid(7, 6)) {
            let (a, b) = (i as i64, i as i64 + 1);
            let l = BraidWord::compose(&pre, &sig(7, &[a, b, a])).unwrap();
            let r = BraidWord::compose(&pre, &sig(7, &[b, a, b])).unwrap();
            prop_assert_eq!(l.induced_permutation(), r.induced_permutation());
            if i.abs_diff(j) >= 2 {
                let (x, y) = (i as i64, j as i64);
                prop_assert_eq!(sig(7, &[x, y]).induced_permutation(), sig(7, &[y, x]).induced_permutation());
            }
        }
    }
}
