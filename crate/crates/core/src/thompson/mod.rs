//! Thompson's group `F = ⟨a_0, a_1, … | a_i^-1 a_j a_i = a_{j+1}, i < j⟩`.
//!
//! Equality of elements is decided twice, independently: by the rewriting
//! normal form in [`normal`] and by the faithful action on `[0, 1]` through
//! dyadic PL maps ([`to_pl`]). [`words_equal`] insists the two agree.

pub mod normal;
pub mod standard;

use std::fmt;

use crate::pl::PlMap;
use crate::word::Word;

pub use normal::NormalForm;
pub use standard::{standard_form_check, standard_form_of, standard_form_search, StandardForm};

/// An element of `F` given by a free word in the `a_i`. Equality of
/// `FWord`s as values is free equality; use [`words_equal`] for equality in
/// `F`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FWord(Word);

impl FWord {
    pub fn new(word: Word) -> FWord {
        FWord(word)
    }

    pub fn identity() -> FWord {
        FWord(Word::identity())
    }

    /// The generator `a_i`.
    pub fn gen(i: u64) -> FWord {
        FWord(Word::power_of(i, 1))
    }

    /// `a_i^n`.
    pub fn gen_pow(i: u64, n: i64) -> FWord {
        FWord(Word::power_of(i, n))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn multiply(&self, other: &FWord) -> FWord {
        FWord(self.0.multiply(&other.0))
    }

    pub fn inverse(&self) -> FWord {
        FWord(self.0.inverse())
    }

    pub fn pow(&self, n: i64) -> FWord {
        FWord(self.0.pow(n))
    }

    /// `g^-1 · self · g` as a free word; no `F`-rewriting is applied.
    pub fn conjugate(&self, g: &FWord) -> FWord {
        FWord(self.0.conjugate(&g.0))
    }

    /// `s^k`: every index is raised by `k`.
    pub fn shift(&self, k: u64) -> FWord {
        FWord(
            self.0
                .map_indices(|i| i.checked_add(k))
                .expect("generator index overflow in shift"),
        )
    }

    /// Inverse of [`FWord::shift`] on words whose indices are all `>= k`.
    pub fn unshift(&self, k: u64) -> Option<FWord> {
        self.0.map_indices(|i| i.checked_sub(k)).ok().map(FWord)
    }

    pub fn normal_form(&self) -> FWord {
        FWord(NormalForm::of(&self.0).to_word())
    }

    pub fn is_trivial(&self) -> bool {
        NormalForm::of(&self.0).is_identity()
    }
}

impl From<Word> for FWord {
    fn from(w: Word) -> FWord {
        FWord(w)
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

pub fn shift(w: &FWord, k: u64) -> FWord {
    w.shift(k)
}

pub fn normal_form(w: &FWord) -> FWord {
    w.normal_form()
}

/// How a word acts through composition of its letters' PL maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// `ρ(uv) = ρ(u) ∘ ρ(v)`: the rightmost letter is applied first.
    LeftAction,
    /// `ρ(uv) = ρ(v) ∘ ρ(u)`: the leftmost letter is applied first.
    RightAction,
}

/// The convention under which `a_i^-1 a_j a_i = a_{j+1}` holds in the PL
/// model. Pinned by the `presentation_holds_under_chosen_convention` test.
pub const CONVENTION: Convention = Convention::LeftAction;

fn generator_power(index: u64, exponent: i64) -> PlMap {
    let g = PlMap::generator(index);
    let base = if exponent < 0 { g.inverse() } else { g };
    let mut acc = base.clone();
    for _ in 1..exponent.unsigned_abs() {
        acc = acc.compose(&base);
    }
    acc
}

pub fn to_pl_with(w: &FWord, convention: Convention) -> PlMap {
    w.word()
        .letters()
        .iter()
        .fold(PlMap::identity(), |acc, l| {
            let g = generator_power(l.index(), l.exponent());
            match convention {
                Convention::LeftAction => acc.compose(&g),
                Convention::RightAction => g.compose(&acc),
            }
        })
}

/// The faithful representation `F → PL_2([0,1])`.
pub fn to_pl(w: &FWord) -> PlMap {
    to_pl_with(w, CONVENTION)
}

/// Both word-problem verdicts: `(normal forms equal, PL maps equal)`.
pub fn word_problem_verdicts(u: &FWord, v: &FWord) -> (bool, bool) {
    let by_nf = NormalForm::of(u.word()) == NormalForm::of(v.word());
    let by_pl = to_pl(u) == to_pl(v);
    (by_nf, by_pl)
}

/// Decides `u = v` in `F`.
///
/// # Panics
///
/// If the normal form and the PL representation disagree. That can only
/// happen through a bug in one of them.
pub fn words_equal(u: &FWord, v: &FWord) -> bool {
    let (by_nf, by_pl) = word_problem_verdicts(u, v);
    assert_eq!(
        by_nf, by_pl,
        "word-problem oracles disagree on {u} vs {v}: normal form says {by_nf}, PL says {by_pl}"
    );
    by_nf
}

pub fn verify_presentation_with(depth: u64, convention: Convention) -> bool {
    (0..=depth).all(|j| {
        (0..j).all(|i| {
            let lhs = FWord::gen(j).conjugate(&FWord::gen(i));
            to_pl_with(&lhs, convention) == to_pl_with(&FWord::gen(j + 1), convention)
        })
    })
}

/// Checks `ρ(a_i^-1 a_j a_i) = ρ(a_{j+1})` for all `0 <= i < j <= depth`.
pub fn verify_presentation(depth: u64) -> bool {
    verify_presentation_with(depth, CONVENTION)
}

/// `c_i = a_{3i}^-1 a_{3i+1}`.
pub fn family_element(i: u64) -> FWord {
    FWord::gen(3 * i).inverse().multiply(&FWord::gen(3 * i + 1))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyReport {
    pub pairs_checked: usize,
    pub products_checked: usize,
    pub non_commuting: Vec<(u64, u64)>,
    /// Exponent vectors whose product is trivial in `F`.
    pub trivial_products: Vec<Vec<i64>>,
}

impl FamilyReport {
    pub fn holds(&self) -> bool {
        self.non_commuting.is_empty() && self.trivial_products.is_empty()
    }
}

/// Checks that `c_0, …, c_{i_max}` commute pairwise and that no product
/// `c_0^{k_0} ⋯ c_{i_max}^{k_{i_max}}` with `0 < max |k_t| <= exp_bound` is
/// trivial.
pub fn commuting_family_report(i_max: u64, exp_bound: u32) -> FamilyReport {
    let family: Vec<FWord> = (0..=i_max).map(family_element).collect();
    let mut report = FamilyReport::default();
    for i in 0..=i_max {
        for j in (i + 1)..=i_max {
            let (ci, cj) = (&family[i as usize], &family[j as usize]);
            report.pairs_checked += 1;
            if !words_equal(&ci.multiply(cj), &cj.multiply(ci)) {
                report.non_commuting.push((i, j));
            }
        }
    }
    let b = i64::from(exp_bound);
    let width = family.len();
    let mut exps = vec![-b; width];
    loop {
        if exps.iter().any(|&k| k != 0) {
            let product = family
                .iter()
                .zip(&exps)
                .fold(FWord::identity(), |acc, (c, &k)| acc.multiply(&c.pow(k)));
            report.products_checked += 1;
            if words_equal(&product, &FWord::identity()) {
                report.trivial_products.push(exps.clone());
            }
        }
        // odometer over [-b, b]^width
        let mut pos = 0;
        while pos < width && exps[pos] == b {
            exps[pos] = -b;
            pos += 1;
        }
        if pos == width {
            break;
        }
        exps[pos] += 1;
    }
    report
}

pub fn commuting_family_check(i_max: u64, exp_bound: u32) -> bool {
    commuting_family_report(i_max, exp_bound).holds()
}
