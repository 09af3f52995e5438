//! Words in free groups over small named alphabets.
//!
//! A [`GroupWord`] is a plain letter sequence. Constructors that take raw
//! letters keep them as given (the certificate and rewrite machinery need
//! literal, unreduced words); the group operations [`GroupWord::concat`],
//! [`GroupWord::invert`] and [`GroupWord::power`] always return freely reduced
//! words.
//!
//! Text syntax: letters are whitespace-separated generator names, a lowercase
//! name is the generator and its uppercase spelling the inverse, so `"a B a"`
//! is `a b⁻¹ a`. When every name is a single character the separators may be
//! dropped (`"aBa"`). The empty word is written `1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid generator name {0:?} (expected a lowercase identifier)")]
    InvalidName(String),
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("generator index {index} out of range for an alphabet of {len} generators")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("words over different alphabets ({left}) and ({right})")]
    AlphabetMismatch { left: String, right: String },
    #[error("unknown token {0:?}")]
    UnknownToken(String),
    #[error("no image given for generator {0:?}")]
    MissingImage(String),
}

/// Ordered list of generator names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet(Arc<[String]>);

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let ok = matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
                && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_');
            if !ok {
                return Err(WordError::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(WordError::DuplicateName(name.clone()));
            }
        }
        Ok(Self(names.into()))
    }

    /// `{a, b}`: the generators α, β of the handlebody group.
    pub fn alpha_beta() -> Self {
        Self::new(["a", "b"]).expect("static alphabet")
    }

    /// `{a, b, c, d}`: α, β and the second handlebody's γ, δ.
    pub fn alpha_beta_gamma_delta() -> Self {
        Self::new(["a", "b", "c", "d"]).expect("static alphabet")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, generator: usize) -> &str {
        &self.0[generator]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    fn describe(&self) -> String {
        self.0.join(", ")
    }

    fn check_same(&self, other: &Alphabet) -> Result<(), WordError> {
        if Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0 {
            Ok(())
        } else {
            Err(WordError::AlphabetMismatch {
                left: self.describe(),
                right: other.describe(),
            })
        }
    }

    fn single_char_names(&self) -> bool {
        self.0.iter().all(|n| n.len() == 1)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet[{}]", self.describe())
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub const fn pos(generator: usize) -> Self {
        Self {
            generator,
            inverse: false,
        }
    }

    pub const fn neg(generator: usize) -> Self {
        Self {
            generator,
            inverse: true,
        }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Self {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// Signed letter count per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn get(&self, generator: usize) -> i64 {
        self.0[generator]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Image under the linear map whose column `g` is `columns[g]`.
    pub fn apply(&self, columns: &[ExponentVector]) -> ExponentVector {
        let rows = columns.first().map_or(0, |c| c.0.len());
        let mut out = ExponentVector::zero(rows);
        for (coeff, col) in self.0.iter().zip(columns) {
            for (o, c) in out.0.iter_mut().zip(&col.0) {
                *o += coeff * c;
            }
        }
        out
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty(alphabet: &Alphabet) -> Self {
        Self {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    /// Builds a word from raw letters, without reducing.
    pub fn from_letters(alphabet: &Alphabet, letters: Vec<Letter>) -> Result<Self, WordError> {
        if let Some(l) = letters.iter().find(|l| l.generator >= alphabet.len()) {
            return Err(WordError::IndexOutOfRange {
                index: l.generator,
                len: alphabet.len(),
            });
        }
        Ok(Self {
            alphabet: alphabet.clone(),
            letters,
        })
    }

    pub(crate) fn from_letters_unchecked(alphabet: &Alphabet, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.generator < alphabet.len()));
        Self {
            alphabet: alphabet.clone(),
            letters,
        }
    }

    pub fn generator(alphabet: &Alphabet, generator: usize) -> Result<Self, WordError> {
        Self::from_letters(alphabet, vec![Letter::pos(generator)])
    }

    /// Generator power `g^e` by name.
    pub fn named_power(alphabet: &Alphabet, name: &str, e: i64) -> Result<Self, WordError> {
        let g = alphabet
            .index_of(name)
            .ok_or_else(|| WordError::UnknownToken(name.to_string()))?;
        let l = if e < 0 {
            Letter::neg(g)
        } else {
            Letter::pos(g)
        };
        Ok(Self::from_letters_unchecked(
            alphabet,
            vec![l; e.unsigned_abs() as usize],
        ))
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            if let Some(l) = Self::parse_token(alphabet, token) {
                letters.push(l);
            } else if alphabet.single_char_names() && token.chars().count() > 1 {
                for c in token.chars() {
                    let l = Self::parse_token(alphabet, c.encode_utf8(&mut [0; 4]))
                        .ok_or_else(|| WordError::UnknownToken(c.to_string()))?;
                    letters.push(l);
                }
            } else {
                return Err(WordError::UnknownToken(token.to_string()));
            }
        }
        Ok(Self {
            alphabet: alphabet.clone(),
            letters,
        })
    }

    fn parse_token(alphabet: &Alphabet, token: &str) -> Option<Letter> {
        if let Some(g) = alphabet.index_of(token) {
            return Some(Letter::pos(g));
        }
        let lower = token.to_ascii_lowercase();
        if lower != token && token.to_ascii_uppercase() == token {
            return alphabet.index_of(&lower).map(Letter::neg);
        }
        None
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Free reduction.
    pub fn reduce(&self) -> GroupWord {
        Self::from_letters_unchecked(&self.alphabet, reduce_letters(self.letters.iter().copied()))
    }

    pub fn invert(&self) -> GroupWord {
        self.raw_inverse().reduce()
    }

    /// Letter-reversed, letter-inverted word, not reduced.
    pub fn raw_inverse(&self) -> GroupWord {
        let letters = self.letters.iter().rev().map(|l| l.inv()).collect();
        Self::from_letters_unchecked(&self.alphabet, letters)
    }

    /// Reduced product `self · other`.
    pub fn concat(&self, other: &GroupWord) -> Result<GroupWord, WordError> {
        Ok(self.then(other)?.reduce())
    }

    /// Literal juxtaposition `self other`, not reduced.
    pub fn then(&self, other: &GroupWord) -> Result<GroupWord, WordError> {
        self.alphabet.check_same(&other.alphabet)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_letters_unchecked(&self.alphabet, letters))
    }

    /// Reduced power; negative exponents invert.
    pub fn power(&self, e: i64) -> GroupWord {
        self.raw_power(e).reduce()
    }

    /// Literal repetition (of the inverse when `e < 0`), not reduced.
    pub fn raw_power(&self, e: i64) -> GroupWord {
        let base = if e < 0 {
            self.raw_inverse()
        } else {
            self.clone()
        };
        let n = e.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&base.letters);
        }
        Self::from_letters_unchecked(&self.alphabet, letters)
    }

    /// Image under a homomorphism, reduced.
    pub fn substitute(&self, hom: &Homomorphism) -> Result<GroupWord, WordError> {
        self.alphabet.check_same(&hom.source)?;
        let mut out = Vec::new();
        for l in &self.letters {
            let image = hom.images[l.generator].as_ref().ok_or_else(|| {
                WordError::MissingImage(self.alphabet.name(l.generator).to_string())
            })?;
            if l.inverse {
                out.extend(image.letters.iter().rev().map(|x| x.inv()));
            } else {
                out.extend_from_slice(&image.letters);
            }
        }
        Ok(Self::from_letters_unchecked(
            &hom.target,
            reduce_letters(out),
        ))
    }

    pub fn exponent_vector(&self) -> ExponentVector {
        let mut v = ExponentVector::zero(self.alphabet.len());
        for l in &self.letters {
            v.0[l.generator] += l.sign();
        }
        v
    }

    /// True iff no letter is the inverse of one of `generators`.
    pub fn is_positive(&self, generators: &[usize]) -> bool {
        !self
            .letters
            .iter()
            .any(|l| l.inverse && generators.contains(&l.generator))
    }

    pub fn contains_letter(&self, letter: Letter) -> bool {
        self.letters.contains(&letter)
    }

    pub fn free_equal(&self, other: &GroupWord) -> Result<bool, WordError> {
        self.alphabet.check_same(&other.alphabet)?;
        Ok(reduce_letters(self.letters.iter().copied())
            == reduce_letters(other.letters.iter().copied()))
    }

    /// Reduces, then strips conjugating letters `x … x⁻¹` from both ends.
    pub fn cyclic_reduce(&self) -> GroupWord {
        let r = reduce_letters(self.letters.iter().copied());
        let (mut i, mut j) = (0, r.len());
        while j - i >= 2 && r[i].cancels(r[j - 1]) {
            i += 1;
            j -= 1;
        }
        Self::from_letters_unchecked(&self.alphabet, r[i..j].to_vec())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(a), Some(b)) if self.len() > 1 => !a.cancels(*b),
                _ => true,
            }
    }

    /// Cyclic shift starting at `shift`: `w[shift..] w[..shift]`.
    pub fn rotate(&self, shift: usize) -> GroupWord {
        if self.is_empty() {
            return self.clone();
        }
        let s = shift % self.len();
        let mut letters = self.letters[s..].to_vec();
        letters.extend_from_slice(&self.letters[..s]);
        Self::from_letters_unchecked(&self.alphabet, letters)
    }

    /// Offset `s` with `other == self.rotate(s)`, if any.
    pub fn rotation_offset(&self, other: &GroupWord) -> Option<usize> {
        if self.len() != other.len() || self.alphabet != other.alphabet {
            return None;
        }
        if self.is_empty() {
            return Some(0);
        }
        let n = self.len();
        (0..n).find(|&s| (0..n).all(|i| self.letters[(s + i) % n] == other.letters[i]))
    }

    /// Same cyclic word up to rotation and inversion, after cyclic reduction.
    pub fn cyclically_equivalent(&self, other: &GroupWord) -> Result<bool, WordError> {
        self.alphabet.check_same(&other.alphabet)?;
        let a = self.cyclic_reduce();
        let b = other.cyclic_reduce();
        Ok(a.rotation_offset(&b).is_some() || a.rotation_offset(&b.invert()).is_some())
    }

    /// Subword `[start, end)` as a new word.
    pub fn slice(&self, start: usize, end: usize) -> GroupWord {
        Self::from_letters_unchecked(&self.alphabet, self.letters[start..end].to_vec())
    }

    /// `(self, other)` with the alphabet check made explicit for callers that compare letters.
    pub fn same_alphabet(&self, other: &GroupWord) -> Result<(), WordError> {
        self.alphabet.check_same(&other.alphabet)
    }
}

/// Stack-based free reduction.
pub(crate) fn reduce_letters(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let name = self.alphabet.name(l.generator);
            if l.inverse {
                f.write_str(&name.to_ascii_uppercase())?;
            } else {
                f.write_str(name)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupWord({self})")
    }
}

/// A homomorphism between free groups, given by generator images.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Option<GroupWord>>,
}

impl Homomorphism {
    pub fn new(source: &Alphabet, target: &Alphabet) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            images: vec![None; source.len()],
        }
    }

    /// Identity on the generators the two alphabets share by name.
    pub fn inclusion(source: &Alphabet, target: &Alphabet) -> Self {
        let mut hom = Self::new(source, target);
        for (g, name) in source.names().iter().enumerate() {
            if let Some(t) = target.index_of(name) {
                hom.images[g] = Some(GroupWord::from_letters_unchecked(
                    target,
                    vec![Letter::pos(t)],
                ));
            }
        }
        hom
    }

    pub fn map(mut self, name: &str, image: GroupWord) -> Result<Self, WordError> {
        let g = self
            .source
            .index_of(name)
            .ok_or_else(|| WordError::UnknownToken(name.to_string()))?;
        self.target.check_same(&image.alphabet)?;
        self.images[g] = Some(image);
        Ok(self)
    }

    pub fn image(&self, generator: usize) -> Option<&GroupWord> {
        self.images.get(generator).and_then(Option::as_ref)
    }
}
