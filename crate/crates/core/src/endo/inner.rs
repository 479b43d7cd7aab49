//! Detecting inner endomorphisms `f(x) = a^-1 x a`.
//!
//! For each generator the solutions of `f(x_s) = c^-1 x_s c` form either the
//! empty set or a coset `⟨x_s⟩ · a(s)`, read off from the cyclic reduction of
//! `f(x_s)`. An inner conjugator is a common element of all these cosets.

use super::{EndoError, FreeEndo};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InnerVerdict {
    /// Certified: `f(x_s) = a^-1 x_s a` for every generator.
    Inner(Word),
    /// `f(x_s)` is not conjugate to `x_s`, so `f` is not inner.
    NotConjugate { generator: usize },
    /// Every `f(x_s)` is a conjugate of `x_s` but no common conjugator was
    /// found within the exponent bound.
    NotFound,
}

impl InnerVerdict {
    pub fn conjugator(&self) -> Option<&Word> {
        match self {
            InnerVerdict::Inner(a) => Some(a),
            _ => None,
        }
    }
}

/// Some `c` with `target = c^-1 x_s c`, if one exists.
pub fn generator_conjugator(target: &Word, s: u64) -> Option<Word> {
    let (core, c) = target.cyclic_reduce();
    (core == Word::power_of(s, 1)).then_some(c)
}

fn certifies(f: &FreeEndo, a: &Word) -> bool {
    (0..f.rank()).all(|s| *f.image(s) == f.generator(s).conjugate(a))
}

/// `0, 1, -1, 2, -2, …, bound, -bound`.
fn exponent_order(bound: u32) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=i64::from(bound)).flat_map(|k| [k, -k]))
}

pub fn is_inner(f: &FreeEndo, exp_bound: u32) -> InnerVerdict {
    let mut seeds = Vec::with_capacity(f.rank());
    for s in 0..f.rank() {
        match generator_conjugator(f.image(s), s as u64) {
            Some(c) => seeds.push(c),
            None => return InnerVerdict::NotConjugate { generator: s },
        }
    }
    // Any common conjugator lies in ⟨x_0⟩ · a(0).
    for k in exponent_order(exp_bound) {
        let candidate = Word::power_of(0, k).multiply(&seeds[0]);
        if certifies(f, &candidate) {
            return InnerVerdict::Inner(candidate);
        }
    }
    InnerVerdict::NotFound
}

/// Among the conjugators `x_base^k · seed` (`|k| <= exp_bound`) of `x_base`
/// onto `target`, the one using the fewest distinct generators; ties go to
/// the smallest `|k|`, then to `k >= 0`.
pub fn min_support_conjugator(
    target: &Word,
    base_index: u64,
    seed: &Word,
    exp_bound: u32,
) -> Result<Word, EndoError> {
    if Word::power_of(base_index, 1).conjugate(seed) != *target {
        return Err(EndoError::Precondition(format!(
            "seed does not conjugate x{base_index} onto the target"
        )));
    }
    let mut best: Option<(usize, Word)> = None;
    for k in exponent_order(exp_bound) {
        let c = Word::power_of(base_index, k).multiply(seed);
        let size = c.support().len();
        if best.as_ref().is_none_or(|(b, _)| size < *b) {
            best = Some((size, c));
        }
    }
    Ok(best.expect("k = 0 is always a candidate").1)
}
