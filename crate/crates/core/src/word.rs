//! Freely reduced words in a free group and endomorphisms given by
//! generator images.
//!
//! Words are stored reduced at all times, so `==` on [`Word`] is equality in
//! the free group. The ambient rank is carried on [`Endo`] and validated on
//! every application; words themselves are rank-agnostic letter sequences.
//!
//! Products of endomorphisms are read left to right with the rightmost
//! factor applied first: `(a·b)(w) = a(b(w))`. Every relation suite in
//! [`crate::autgrp`] verifies under this convention.

use std::fmt;
use std::str::FromStr;

/// 1-based index of a free generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GenIndex(usize);

impl GenIndex {
    /// A generator index; `value` must be at least 1.
    pub fn new(value: usize) -> GenIndex {
        assert!(value >= 1, "generator indices are 1-based");
        GenIndex(value)
    }

    pub fn value(self) -> usize {
        self.0
    }
}

/// A signed generator letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: GenIndex,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Letter {
        Letter {
            gen: GenIndex::new(gen),
            inverse,
        }
    }

    pub fn flipped(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WordError {
    IndexOutOfRange { index: usize, rank: usize },
    RankMismatch { left: usize, right: usize },
    Parse(String),
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::IndexOutOfRange { index, rank } => {
                write!(f, "generator index {index} out of range for rank {rank}")
            }
            WordError::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            WordError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for WordError {}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    /// The single-letter word `x_i`.
    pub fn generator(i: usize) -> Word {
        Word {
            letters: vec![Letter::new(i, false)],
        }
    }

    /// Builds a word from raw letters, freely reducing. Reduction is
    /// idempotent: feeding a reduced word back in returns it unchanged.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(t) if t.gen == l.gen && t.inverse != l.inverse => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index appearing, 0 for the identity.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.gen.value()).max().unwrap_or(0)
    }

    pub fn validate_rank(&self, rank: usize) -> Result<(), WordError> {
        match self.letters.iter().find(|l| l.gen.value() > rank) {
            Some(l) => Err(WordError::IndexOutOfRange {
                index: l.gen.value(),
                rank,
            }),
            None => Ok(()),
        }
    }

    /// Reduced concatenation `self · other`.
    pub fn mul(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// Reverses and flips signs, so `w.mul(&w.inverse())` is the identity.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.flipped()).collect(),
        }
    }
}

/// The commutator `(a, b) = a⁻¹ b⁻¹ a b`, reduced.
pub fn commutator(a: &Word, b: &Word) -> Word {
    a.inverse().mul(&b.inverse()).mul(a).mul(b)
}

/// The conjugate `a^b = b⁻¹ a b`.
pub fn conjugate(a: &Word, b: &Word) -> Word {
    b.inverse().mul(a).mul(b)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if l.inverse {
                write!(f, "x{}^-1", l.gen.value())?;
            } else {
                write!(f, "x{}", l.gen.value())?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Parses `"x1 x2^-1 x1"`; `""` and `"1"` denote the identity. Exponents
    /// other than ±1 are accepted and expanded.
    fn from_str(s: &str) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let body = tok
                .strip_prefix('x')
                .ok_or_else(|| WordError::Parse(format!("bad token `{tok}`")))?;
            let (idx_str, exp) = match body.split_once('^') {
                Some((i, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| WordError::Parse(format!("bad exponent in `{tok}`")))?;
                    (i, exp)
                }
                None => (body, 1),
            };
            let idx: usize = idx_str
                .parse()
                .map_err(|_| WordError::Parse(format!("bad index in `{tok}`")))?;
            if idx == 0 {
                return Err(WordError::Parse(format!("index must be >= 1 in `{tok}`")));
            }
            if exp == 0 {
                return Err(WordError::Parse(format!("zero exponent in `{tok}`")));
            }
            for _ in 0..exp.unsigned_abs() {
                letters.push(Letter::new(idx, exp < 0));
            }
        }
        Ok(Word::from_letters(letters))
    }
}

/// An endomorphism of the free group of rank `rank`, given by the images of
/// the generators. Automorphisms arise by evaluating words in named
/// generators; no general inversion is attempted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Endo {
    rank: usize,
    images: Vec<Word>,
}

impl Endo {
    pub fn new(rank: usize, images: Vec<Word>) -> Result<Endo, WordError> {
        if images.len() != rank {
            return Err(WordError::RankMismatch {
                left: rank,
                right: images.len(),
            });
        }
        for im in &images {
            im.validate_rank(rank)?;
        }
        Ok(Endo { rank, images })
    }

    pub fn identity(rank: usize) -> Endo {
        Endo {
            rank,
            images: (1..=rank).map(Word::generator).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of `x_i` (1-based).
    pub fn image(&self, i: usize) -> &Word {
        &self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(j, im)| im.letters() == Word::generator(j + 1).letters())
    }

    /// Substitutes images for letters (inverse letters get inverted images)
    /// and reduces.
    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        w.validate_rank(self.rank)?;
        let mut letters = Vec::new();
        for l in w.letters() {
            let img = &self.images[l.gen.value() - 1];
            if l.inverse {
                letters.extend(img.letters().iter().rev().map(|x| x.flipped()));
            } else {
                letters.extend(img.letters().iter().copied());
            }
        }
        Ok(Word::from_letters(letters))
    }

    /// Group product `self · other`. The right factor acts first:
    /// `a.compose(b).apply(w) == a.apply(&b.apply(w))`.
    pub fn compose(&self, other: &Endo) -> Result<Endo, WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let images = other
            .images
            .iter()
            .map(|im| self.apply(im))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Endo {
            rank: self.rank,
            images,
        })
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, im) in self.images.iter().enumerate() {
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            write!(f, "x{} -> {}", i + 1, im)?;
        }
        Ok(())
    }
}
