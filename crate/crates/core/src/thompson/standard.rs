//! Elements of the shape `a_i^n · s^{i+1}(b)` with `i ∈ {0, 1}`, `n ≠ 0`.

use super::{words_equal, FWord, NormalForm};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardForm {
    /// 0 or 1.
    pub i: u64,
    pub n: i64,
    pub b: FWord,
}

impl StandardForm {
    /// `a_i^n · s^{i+1}(b)` as a word.
    pub fn render(&self) -> FWord {
        FWord::gen_pow(self.i, self.n).multiply(&self.b.shift(self.i + 1))
    }
}

/// Literal decomposition: the first syllable is `a_i^n` with `i ∈ {0,1}` and
/// every later letter has index `>= i + 1`.
pub fn standard_form_check(w: &FWord) -> Option<StandardForm> {
    let (head, tail) = w.word().letters().split_first()?;
    let i = head.index();
    if i > 1 {
        return None;
    }
    if tail.iter().any(|l| l.index() < i + 1) {
        return None;
    }
    let b = FWord::new(Word::from_letters(tail.iter().copied()))
        .unshift(i + 1)
        .expect("tail indices checked");
    Some(StandardForm {
        i,
        n: head.exponent(),
        b,
    })
}

fn unshift_nf(nf: &NormalForm, k: u64) -> FWord {
    FWord::new(nf.to_word())
        .unshift(k)
        .expect("normal form indices checked")
}

/// Whether the element `x` (given by its normal form, all indices `>= base`)
/// lies in `a_base^n · s^{base+1}(F)` for some `n ≠ 0`.
///
/// Writing `x = a_base^n y` with `y ∈ s^{base+1}(F)`, the normal form of `x`
/// is `a_base^n · nf(y)` when `n > 0` and `s^{|n|}(nf(y)) · a_base^n` when
/// `n < 0`, so membership can be read off directly.
fn leading_block(nf: &NormalForm, base: u64) -> Option<(i64, FWord)> {
    let p = nf.positive().get(&base).copied().unwrap_or(0);
    let q = nf.negative().get(&base).copied().unwrap_or(0);
    match (p, q) {
        (0, 0) => None,
        (p, 0) => {
            let mut rest = nf.clone();
            let stripped = FWord::new(rest_without(&mut rest, base, true));
            let b = stripped.unshift(base + 1).expect("indices above base");
            Some((p as i64, b))
        }
        (0, q) => {
            let mut rest = nf.clone();
            let stripped = rest_without(&mut rest, base, false);
            if stripped.min_index().is_some_and(|m| m < base + q + 1) {
                return None;
            }
            let b = FWord::new(stripped).unshift(base + q + 1).expect("indices checked");
            Some((-(q as i64), b))
        }
        _ => None,
    }
}

/// The normal form word with the `a_base` syllable removed from one side.
fn rest_without(nf: &mut NormalForm, base: u64, positive_side: bool) -> Word {
    let w = nf.to_word();
    let letters = w.letters();
    let kept: Vec<Letter> = if positive_side {
        letters[1..].to_vec()
    } else {
        letters[..letters.len() - 1].to_vec()
    };
    debug_assert!(kept.iter().all(|l| l.index() > base));
    Word::from_letters(kept)
}

/// Decides whether the `F`-element `w` can be written as
/// `a_i^n · s^{i+1}(b)`; `b` is returned in normal form and `i = 0` is
/// preferred when both apply.
pub fn standard_form_of(w: &FWord) -> Option<StandardForm> {
    let nf = NormalForm::of(w.word());
    let min = nf.min_index()?;
    if min == 0 {
        if let Some((n, b)) = leading_block(&nf, 0) {
            return Some(StandardForm { i: 0, n, b });
        }
        return None;
    }
    let shifted = NormalForm::of(unshift_nf(&nf, 1).word());
    if let Some((n, b)) = leading_block(&shifted, 0) {
        return Some(StandardForm { i: 1, n, b });
    }
    None
}

/// Reduced words over `a_0^{±1} … a_{max_index}^{±1}` of exactly `len`
/// letters, in lexicographic order (`a_0 < a_0^-1 < a_1 < …`).
fn words_of_length(len: usize, max_index: u64) -> impl Iterator<Item = Word> {
    let alphabet: Vec<Letter> = (0..=max_index)
        .flat_map(|i| [Letter::gen(i), Letter::inv(i)])
        .collect();
    let k = alphabet.len();
    let mut digits = vec![0usize; len];
    let mut done = k == 0 && len > 0;
    std::iter::from_fn(move || loop {
        if done {
            return None;
        }
        let candidate: Vec<Letter> = digits.iter().map(|&d| alphabet[d]).collect();
        // advance odometer (last position fastest)
        let mut pos = len;
        loop {
            if pos == 0 {
                done = true;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < k {
                break;
            }
            digits[pos] = 0;
        }
        let reduced = candidate
            .windows(2)
            .all(|p| p[0] != p[1].inverse());
        if reduced {
            return Some(Word::from_letters(candidate));
        }
    })
}

/// Bounded search for a conjugator `h` with `h^-1 w h` in standard form.
/// Candidates are all words of length `<= radius` over `a_0 … a_radius`,
/// tried in order of length then lexicographically, applied to the cyclic
/// core of `w`. `None` means nothing was found within the radius. Returned
/// pairs are certified with [`words_equal`].
pub fn standard_form_search(w: &FWord, radius: usize) -> Option<(FWord, StandardForm)> {
    if w.is_trivial() {
        return None;
    }
    let (core, outer) = w.word().cyclic_reduce();
    let core = FWord::new(core);
    let outer_inv = FWord::new(outer.inverse());
    for len in 0..=radius {
        for g in words_of_length(len, radius as u64) {
            let g = FWord::new(g);
            if let Some(form) = standard_form_of(&core.conjugate(&g)) {
                let h = outer_inv.multiply(&g);
                assert!(
                    words_equal(&w.conjugate(&h), &form.render()),
                    "standard form search produced an uncertified conjugator"
                );
                return Some((h, form));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pl::PlMap;
    use crate::thompson::to_pl;
    use crate::word::w;
    use proptest::prelude::*;

    fn f(raw: &[(u64, i64)]) -> FWord {
        FWord::new(w(raw))
    }

    #[test]
    fn literal_check_examples() {
        let sf = standard_form_check(&f(&[(0, 2), (3, 1), (1, -1)])).unwrap();
        assert_eq!(sf, StandardForm { i: 0, n: 2, b: f(&[(2, 1), (0, -1)]) });
        let sf = standard_form_check(&f(&[(1, 3)])).unwrap();
        assert_eq!(sf, StandardForm { i: 1, n: 3, b: FWord::identity() });
        assert_eq!(standard_form_check(&FWord::identity()), None);
        assert_eq!(standard_form_check(&f(&[(2, 1)])), None);
        assert_eq!(standard_form_check(&f(&[(1, 1), (0, 1)])), None);
        assert_eq!(sf.render(), f(&[(1, 3)]));
    }

    #[test]
    fn semantic_check_sees_through_rewriting() {
        // a0^-1 a2 has normal form a3 a0^-1
        let sf = standard_form_of(&f(&[(3, 1), (0, -1)])).unwrap();
        assert_eq!(sf, StandardForm { i: 0, n: -1, b: FWord::gen(1) });
        assert!(words_equal(&sf.render(), &f(&[(3, 1), (0, -1)])));
        // a1 a0 = a0 a2
        let sf = standard_form_of(&f(&[(1, 1), (0, 1)])).unwrap();
        assert_eq!(sf, StandardForm { i: 0, n: 1, b: FWord::gen(1) });
        assert_eq!(standard_form_of(&FWord::gen(2)), None);
        assert_eq!(standard_form_of(&FWord::identity()), None);
        // a0 a1 a0^-1: both a0 and a0^-1 survive in the normal form
        assert_eq!(standard_form_of(&f(&[(0, 1), (1, 1), (0, -1)])), None);
    }

    #[test]
    fn search_examples() {
        let (h, form) = standard_form_search(&FWord::gen_pow(0, 5), 6).unwrap();
        assert_eq!(h, FWord::identity());
        assert_eq!(form, StandardForm { i: 0, n: 5, b: FWord::identity() });

        let (h, form) = standard_form_search(&f(&[(1, 1), (0, 1)]), 6).unwrap();
        assert_eq!(h, FWord::identity());
        assert_eq!(form, StandardForm { i: 0, n: 1, b: FWord::gen(1) });

        let a2 = FWord::gen(2);
        let (h, form) = standard_form_search(&a2, 2).unwrap();
        assert!(words_equal(&a2.conjugate(&h), &form.render()));
        assert_eq!(h, FWord::gen_pow(0, -1));
        assert_eq!(form, StandardForm { i: 1, n: 1, b: FWord::identity() });

        assert_eq!(standard_form_search(&FWord::identity(), 3), None);
    }

    #[test]
    fn search_uses_cyclic_core() {
        // conjugate of a0^2 by a junk word
        let junk = f(&[(4, 1), (2, -1)]);
        let x = FWord::gen_pow(0, 2).conjugate(&junk);
        let (h, form) = standard_form_search(&x, 2).unwrap();
        assert!(words_equal(&x.conjugate(&h), &form.render()));
        assert_eq!(form.n, 2);
    }

    #[test]
    fn enumeration_counts_reduced_words() {
        // 2k letters, reduced words of length L: 2k (2k-1)^(L-1)
        assert_eq!(words_of_length(0, 2).count(), 1);
        assert_eq!(words_of_length(1, 2).count(), 6);
        assert_eq!(words_of_length(3, 2).count(), 6 * 5 * 5);
    }

    /// Independent membership test through the PL action: `x ∈ a_i^n s^{i+1}(F)`
    /// iff `ρ(x)` is the identity on `[0, 1 - 2^-i]` and has slope `2^-n` on
    /// the segment leaving `1 - 2^-i`, after which `a_i^-n x` must act
    /// trivially on `[0, 1 - 2^-(i+1)]`.
    fn pl_standard_exponent(x: &FWord, i: u64) -> Option<i64> {
        let m = to_pl(x);
        let left = crate::dyadic::Dyadic::one_minus_pow2(i as u32);
        let pts = m.breakpoints();
        let seg = pts.iter().position(|(x, _)| *x >= left)?;
        if pts[seg].0 != left || pts[seg].1 != left {
            return None;
        }
        if seg > 0 && m.slopes()[..seg].iter().any(|&s| s != 0) {
            return None;
        }
        let n = -m.slopes()[seg];
        if n == 0 {
            return None;
        }
        let rest = to_pl(&FWord::gen_pow(i, -n).multiply(x));
        let right = crate::dyadic::Dyadic::one_minus_pow2(i as u32 + 1);
        let fixed = rest
            .breakpoints()
            .iter()
            .zip(rest.slopes())
            .take_while(|((x, _), _)| *x < right)
            .all(|(_, &s)| s == 0);
        fixed.then_some(n)
    }

    fn fword(max_len: usize, max_index: u64) -> impl Strategy<Value = FWord> {
        prop::collection::vec((0..=max_index, prop_oneof![Just(-1i64), Just(1i64)]), 0..=max_len)
            .prop_map(|raw| FWord::new(Word::reduce(raw).unwrap()))
    }

    #[test]
    fn pl_oracle_sanity() {
        assert_eq!(pl_standard_exponent(&FWord::gen_pow(0, 3), 0), Some(3));
        assert_eq!(pl_standard_exponent(&FWord::gen(2), 0), None);
        assert_eq!(pl_standard_exponent(&FWord::gen_pow(1, -2), 1), Some(-2));
        assert!(PlMap::generator(1).slopes()[0] == 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn semantic_check_matches_pl_oracle(
            x in fword(12, 5),
            lead in prop_oneof![Just(0u64), Just(1u64)],
            n in prop_oneof![-3i64..=-1, 1i64..=3],
            tail in fword(8, 4),
            planted in any::<bool>(),
        ) {
            // half the cases are planted standard forms so both branches get exercised
            let x = if planted {
                FWord::gen_pow(lead, n).multiply(&tail.shift(lead + 1))
            } else {
                x
            };
            let ours = standard_form_of(&x);
            let oracle = pl_standard_exponent(&x, 0)
                .map(|n| (0, n))
                .or_else(|| pl_standard_exponent(&x, 1).map(|n| (1, n)));
            prop_assert_eq!(ours.as_ref().map(|s| (s.i, s.n)), oracle);
            if let Some(sf) = ours {
                prop_assert!(words_equal(&sf.render(), &x));
            }
        }

        #[test]
        fn literal_forms_are_semantic_forms(x in fword(10, 5)) {
            if let Some(sf) = standard_form_check(&x) {
                prop_assert!(words_equal(&sf.render(), &x));
                let sem = standard_form_of(&x).unwrap();
                prop_assert_eq!((sem.i, sem.n), (sf.i, sf.n));
            }
        }
    }
}
