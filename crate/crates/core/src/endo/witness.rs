//! Conjugate-idempotent endomorphisms: `f^2(x) = x0^-1 · f(x) · x0`.
//!
//! Setting `x_i = f^i(x0)`, repeated application of `f` to the defining
//! identity gives, for `m > i` and `k >= 1`,
//!
//! ```text
//! x_i^-k · f^m(x) · x_i^k = f^(m+k)(x)
//! ```
//!
//! which is exactly what makes `e(a_k) = x_k` respect the relations of `F`.

use super::{EndoError, FreeEndo};
use crate::thompson::{words_equal, FWord};
use crate::word::Word;

/// A group with a distinguished endomorphism `f` and element `x0`, together
/// with a finite set of test elements on which identities between
/// homomorphisms are checked.
pub trait ConjIdemSystem {
    type Elem: Clone;

    fn identity(&self) -> Self::Elem;
    fn x0(&self) -> Self::Elem;
    /// Elements whose images determine a homomorphism (for `F`, a finite
    /// window of generators).
    fn test_elements(&self) -> Vec<Self::Elem>;
    fn apply_power(&self, n: u32, x: &Self::Elem) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.multiply(&acc, a);
        }
        acc
    }

    fn conjugate(&self, a: &Self::Elem, by: &Self::Elem) -> Self::Elem {
        self.multiply(&self.multiply(&self.inverse(by), a), by)
    }

    fn x_sequence(&self, i: u32) -> Self::Elem {
        self.apply_power(i, &self.x0())
    }

    /// `f^2(x) = x0^-1 f(x) x0` on every test element.
    fn satisfies_hypothesis(&self) -> bool {
        let x0 = self.x0();
        self.test_elements().iter().all(|x| {
            self.equal(
                &self.apply_power(2, x),
                &self.conjugate(&self.apply_power(1, x), &x0),
            )
        })
    }

    /// `x_i^-k · f^m(x) · x_i^k = f^(m+k)(x)` on every test element.
    fn conjugation_identity(&self, m: u32, i: u32, k: u32) -> Result<bool, EndoError> {
        if m <= i {
            return Err(EndoError::IndexOrder { m, i });
        }
        if k == 0 {
            return Err(EndoError::ZeroPower);
        }
        let c = self.pow(&self.x_sequence(i), k);
        Ok(self.test_elements().iter().all(|x| {
            self.equal(
                &self.conjugate(&self.apply_power(m, x), &c),
                &self.apply_power(m + k, x),
            )
        }))
    }
}

/// `(f, x0)` with the conjugate-idempotent identity verified on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjIdemWitness {
    endo: FreeEndo,
    x0: Word,
}

pub fn check_conj_idem(f: &FreeEndo, x0: &Word) -> bool {
    first_failure(f, x0).is_none()
}

fn first_failure(f: &FreeEndo, x0: &Word) -> Option<usize> {
    if f.check_word(x0).is_err() {
        return Some(0);
    }
    let f2 = f.power(2);
    (0..f.rank()).find(|&s| *f2.image(s) != f.image(s).conjugate(x0))
}

impl ConjIdemWitness {
    pub fn new(endo: FreeEndo, x0: Word) -> Result<ConjIdemWitness, EndoError> {
        endo.check_word(&x0)?;
        match first_failure(&endo, &x0) {
            Some(s) => Err(EndoError::NotConjugateIdempotent(s)),
            None => Ok(ConjIdemWitness { endo, x0 }),
        }
    }

    pub fn endo(&self) -> &FreeEndo {
        &self.endo
    }

    pub fn x0(&self) -> &Word {
        &self.x0
    }

    pub fn rank(&self) -> usize {
        self.endo.rank()
    }

    /// `x_0, x_1, …, x_n` with `x_i = f^i(x0)`.
    pub fn x_prefix(&self, n: usize) -> Vec<Word> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(self.x0.clone());
        for i in 0..n {
            let next = self.endo.apply(&out[i]).expect("x0 in range");
            out.push(next);
        }
        out
    }
}

impl ConjIdemSystem for ConjIdemWitness {
    type Elem = Word;

    fn identity(&self) -> Word {
        Word::identity()
    }

    fn x0(&self) -> Word {
        self.x0.clone()
    }

    fn test_elements(&self) -> Vec<Word> {
        (0..self.rank()).map(|s| self.endo.generator(s)).collect()
    }

    fn apply_power(&self, n: u32, x: &Word) -> Word {
        let mut acc = x.clone();
        for _ in 0..n {
            acc = self.endo.apply(&acc).expect("word in range");
        }
        acc
    }

    fn multiply(&self, a: &Word, b: &Word) -> Word {
        a.multiply(b)
    }

    fn inverse(&self, a: &Word) -> Word {
        a.inverse()
    }

    fn equal(&self, a: &Word, b: &Word) -> bool {
        a == b
    }
}

/// The shift `s` on `F` with `x0 = a_0`, tested on `a_0 … a_window`.
///
/// `s^2(a_j) = a_{j+2} = a_0^-1 a_{j+1} a_0`, so this is the model case of a
/// conjugate-idempotent endomorphism; its `e` is the identity of `F`.
#[derive(Debug, Clone, Copy)]
pub struct ShiftOnF {
    pub window: u64,
}

impl ConjIdemSystem for ShiftOnF {
    type Elem = FWord;

    fn identity(&self) -> FWord {
        FWord::identity()
    }

    fn x0(&self) -> FWord {
        FWord::gen(0)
    }

    fn test_elements(&self) -> Vec<FWord> {
        (0..=self.window).map(FWord::gen).collect()
    }

    fn apply_power(&self, n: u32, x: &FWord) -> FWord {
        x.shift(u64::from(n))
    }

    fn multiply(&self, a: &FWord, b: &FWord) -> FWord {
        a.multiply(b)
    }

    fn inverse(&self, a: &FWord) -> FWord {
        a.inverse()
    }

    fn equal(&self, a: &FWord, b: &FWord) -> bool {
        words_equal(a, b)
    }
}

pub fn x_sequence(wit: &ConjIdemWitness, i: u32) -> Word {
    wit.x_sequence(i)
}

pub fn verify_conjugation_identity(
    wit: &ConjIdemWitness,
    m: u32,
    i: u32,
    k: u32,
) -> Result<bool, EndoError> {
    wit.conjugation_identity(m, i, k)
}

/// Checks `e(a_i)^-1 e(a_j) e(a_i) = e(a_{j+1})` for all `i < j <= depth`.
pub fn e_respects_relations(wit: &ConjIdemWitness, depth: usize) -> bool {
    let xs = wit.x_prefix(depth + 1);
    (0..=depth).all(|j| (0..j).all(|i| xs[j].conjugate(&xs[i]) == xs[j + 1]))
}

/// The canonical homomorphism `e : F → G`, `a_k ↦ f^k(x0)`.
pub fn e_hom(wit: &ConjIdemWitness, w: &FWord) -> Word {
    let Some(max) = w.word().max_index() else {
        return Word::identity();
    };
    let max = usize::try_from(max).expect("index fits in usize");
    assert!(
        e_respects_relations(wit, max),
        "e does not respect the relations of F up to index {max}"
    );
    let xs = wit.x_prefix(max);
    w.word()
        .substitute::<(), _>(|k| Ok(xs[k as usize].clone()))
        .expect("infallible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn inner_witness(c: &Word) -> ConjIdemWitness {
        ConjIdemWitness::new(FreeEndo::inner(2, c).unwrap(), c.clone()).unwrap()
    }

    fn projection() -> FreeEndo {
        FreeEndo::new(2, vec![w(&[(1, 1)]), w(&[(1, 1)])]).unwrap()
    }

    #[test]
    fn hypothesis_examples() {
        assert!(check_conj_idem(&projection(), &Word::identity()));
        let c = w(&[(0, 1), (1, -2)]);
        assert!(check_conj_idem(&FreeEndo::inner(2, &c).unwrap(), &c));
        let swap = FreeEndo::new(2, vec![w(&[(1, 1)]), w(&[(0, 1)])]).unwrap();
        assert!(!check_conj_idem(&swap, &Word::identity()));
        assert_eq!(
            ConjIdemWitness::new(swap, Word::identity()).unwrap_err(),
            EndoError::NotConjugateIdempotent(0)
        );
    }

    #[test]
    fn x_sequence_examples() {
        let c = w(&[(0, 1), (1, 1)]);
        let wit = inner_witness(&c);
        assert_eq!(x_sequence(&wit, 0), c);
        assert_eq!(x_sequence(&wit, 1), c);
        let idem = ConjIdemWitness::new(projection(), Word::identity()).unwrap();
        assert_eq!(x_sequence(&idem, 4), Word::identity());
    }

    #[test]
    fn conjugation_identity_examples() {
        let c = w(&[(0, 1), (1, 1)]);
        let wit = inner_witness(&c);
        assert_eq!(verify_conjugation_identity(&wit, 1, 0, 1), Ok(true));
        assert_eq!(verify_conjugation_identity(&wit, 2, 1, 3), Ok(true));
        let idem = ConjIdemWitness::new(projection(), Word::identity()).unwrap();
        assert_eq!(verify_conjugation_identity(&idem, 4, 2, 2), Ok(true));
        assert_eq!(
            verify_conjugation_identity(&wit, 1, 1, 1),
            Err(EndoError::IndexOrder { m: 1, i: 1 })
        );
        assert_eq!(verify_conjugation_identity(&wit, 2, 0, 0), Err(EndoError::ZeroPower));
    }

    #[test]
    fn exponents_other_than_m_plus_k_fail() {
        // conjugating f^2 by x_1^3 lands on f^5, not on f^(2 + 2*3)
        let c = w(&[(0, 1), (1, 1)]);
        let wit = inner_witness(&c);
        let x1 = wit.x_sequence(1);
        let lhs = wit.apply_power(2, &w(&[(0, 1)])).conjugate(&x1.pow(3));
        assert_eq!(lhs, wit.apply_power(5, &w(&[(0, 1)])));
        assert_ne!(lhs, wit.apply_power(8, &w(&[(0, 1)])));
    }

    #[test]
    fn shift_on_f_instance() {
        let s = ShiftOnF { window: 8 };
        assert!(s.satisfies_hypothesis());
        for m in 1..=5 {
            for i in 0..m {
                for k in 1..=3 {
                    assert_eq!(s.conjugation_identity(m, i, k), Ok(true), "m={m} i={i} k={k}");
                }
            }
        }
    }

    #[test]
    fn e_hom_examples() {
        let c = w(&[(0, 1), (1, 1)]);
        let wit = inner_witness(&c);
        assert_eq!(e_hom(&wit, &FWord::gen(0)), c);
        assert_eq!(e_hom(&wit, &FWord::identity()), Word::identity());
        let k = FWord::gen(0).multiply(&FWord::gen(1).inverse());
        assert_eq!(e_hom(&wit, &k), Word::identity());
        assert!(e_respects_relations(&wit, 6));
    }
}
