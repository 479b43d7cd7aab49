//! Free-group words over a countable indexed alphabet.
//!
//! A [`Word`] is always freely reduced: adjacent letters carry distinct
//! generator indices and exponents are run-length merged, so `a0 a0 a0` is
//! stored as the single letter `a0^3`. Both Thompson's group `F` and the
//! finitely generated free groups used by the endomorphism code share this
//! representation; only the interpretation of the letters differs.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("zero exponent on generator {index} at position {position}")]
    ZeroExponent { index: u64, position: usize },
    #[error("exponent overflow on generator {0}")]
    ExponentOverflow(u64),
    #[error("generator index overflow")]
    IndexOverflow,
}

/// A generator raised to a nonzero power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    index: u64,
    exponent: i64,
}

impl Letter {
    pub fn new(index: u64, exponent: i64) -> Result<Letter, WordError> {
        if exponent == 0 {
            return Err(WordError::ZeroExponent { index, position: 0 });
        }
        Ok(Letter { index, exponent })
    }

    /// `a_index^1`.
    pub fn gen(index: u64) -> Letter {
        Letter { index, exponent: 1 }
    }

    /// `a_index^-1`.
    pub fn inv(index: u64) -> Letter {
        Letter { index, exponent: -1 }
    }

    #[inline]
    pub fn index(&self) -> u64 {
        self.index
    }

    #[inline]
    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn inverse(&self) -> Letter {
        Letter {
            index: self.index,
            exponent: -self.exponent,
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Appends `letter` to an already reduced buffer, merging or cancelling at the
/// join point.
fn push_reduced(buf: &mut Vec<Letter>, letter: Letter) -> Result<(), WordError> {
    match buf.last_mut() {
        Some(last) if last.index == letter.index => {
            let e = last
                .exponent
                .checked_add(letter.exponent)
                .ok_or(WordError::ExponentOverflow(letter.index))?;
            if e == 0 {
                buf.pop();
            } else {
                last.exponent = e;
            }
        }
        _ => buf.push(letter),
    }
    Ok(())
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn from_letter(letter: Letter) -> Word {
        Word {
            letters: vec![letter],
        }
    }

    /// `a_index^exponent`; the identity when `exponent == 0`.
    pub fn power_of(index: u64, exponent: i64) -> Word {
        if exponent == 0 {
            Word::identity()
        } else {
            Word::from_letter(Letter { index, exponent })
        }
    }

    /// Freely reduces an arbitrary letter sequence. Letters with exponent 0
    /// are rejected with their (zero-based) position.
    pub fn reduce<I>(raw: I) -> Result<Word, WordError>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        let mut buf = Vec::new();
        for (position, (index, exponent)) in raw.into_iter().enumerate() {
            if exponent == 0 {
                return Err(WordError::ZeroExponent { index, position });
            }
            push_reduced(&mut buf, Letter { index, exponent })?;
        }
        Ok(Word { letters: buf })
    }

    /// Reduces a sequence of already validated letters.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut buf = Vec::new();
        for l in letters {
            push_reduced(&mut buf, l).expect("exponent overflow while reducing");
        }
        Word { letters: buf }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables (run-length letters).
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Length as a word over `a_i^{±1}`, i.e. the sum of absolute exponents.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|l| l.exponent.unsigned_abs()).sum()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut buf = self.letters.clone();
        buf.reserve(other.letters.len());
        let mut rest = other.letters.iter();
        // Cancellation only happens at the junction; once a letter survives,
        // the tail can be copied verbatim.
        for l in rest.by_ref() {
            let before = buf.len();
            push_reduced(&mut buf, *l).expect("exponent overflow in multiply");
            if buf.len() >= before {
                break;
            }
        }
        buf.extend(rest);
        Word { letters: buf }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.multiply(&base);
        }
        acc
    }

    /// `g^-1 · self · g`.
    pub fn conjugate(&self, g: &Word) -> Word {
        g.inverse().multiply(self).multiply(g)
    }

    /// Splits `self` as `conjugator^-1 · core · conjugator` with `core`
    /// cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut core = self.letters.clone();
        // Conjugators peeled off the outside, innermost last.
        let mut peeled: Vec<Letter> = Vec::new();
        while core.len() >= 2 && core[0].index == core[core.len() - 1].index {
            let last = core.pop().expect("len >= 2");
            // L u R = R^-1 (R L u) R
            let merged = core[0].exponent + last.exponent;
            if merged == 0 {
                core.remove(0);
            } else {
                core[0].exponent = merged;
            }
            peeled.push(last);
        }
        let conjugator = Word::from_letters(peeled.into_iter().rev());
        (Word { letters: core }, conjugator)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(a), Some(b)) => self.letters.len() == 1 || a.index != b.index,
            _ => true,
        }
    }

    /// Set of generator indices occurring in the word.
    pub fn support(&self) -> BTreeSet<u64> {
        self.letters.iter().map(|l| l.index).collect()
    }

    pub fn max_index(&self) -> Option<u64> {
        self.letters.iter().map(|l| l.index).max()
    }

    pub fn min_index(&self) -> Option<u64> {
        self.letters.iter().map(|l| l.index).min()
    }

    /// Sum of exponents (the image in the abelianization of `Z`).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent).sum()
    }

    /// Applies `f` to every generator index. The result is re-reduced since
    /// non-injective maps can create new cancellations.
    pub fn map_indices<F>(&self, mut f: F) -> Result<Word, WordError>
    where
        F: FnMut(u64) -> Option<u64>,
    {
        let mut raw = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            raw.push((f(l.index).ok_or(WordError::IndexOverflow)?, l.exponent));
        }
        Word::reduce(raw)
    }

    /// Substitutes `image(index)` for each generator and reduces.
    pub fn substitute<E, F>(&self, mut image: F) -> Result<Word, E>
    where
        F: FnMut(u64) -> Result<Word, E>,
    {
        let mut acc = Word::identity();
        for l in &self.letters {
            let w = image(l.index)?;
            acc = acc.multiply(&w.pow(l.exponent));
        }
        Ok(acc)
    }

    /// Renders the word using `family` as the generator letter, e.g.
    /// `a0 a1^-1 a3^2`. The identity renders as the empty string.
    pub fn render(&self, family: char) -> String {
        let mut out = String::new();
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push(family);
            out.push_str(&l.index.to_string());
            if l.exponent != 1 {
                out.push('^');
                out.push_str(&l.exponent.to_string());
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("1")
        } else {
            f.write_str(&self.render('a'))
        }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word::from_letters(iter)
    }
}

#[cfg(test)]
pub(crate) fn w(raw: &[(u64, i64)]) -> Word {
    Word::reduce(raw.iter().copied()).unwrap()
}
