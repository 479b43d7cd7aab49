//! Seeded random instances for the property suites.
//!
//! All generators take a `ChaCha8Rng`, so a run is reproducible from its
//! seed alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::endo::{ConjIdemWitness, FreeEndo};
use crate::thompson::FWord;
use crate::word::Word;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Unit letters `(index, ±1)`, not yet reduced.
fn unit_letters(rng: &mut ChaCha8Rng, len: usize, max_index: u64) -> Vec<(u64, i64)> {
    (0..len)
        .map(|_| {
            let i = rng.random_range(0..=max_index);
            (i, if rng.random_bool(0.5) { 1 } else { -1 })
        })
        .collect()
}

fn reduce_units(raw: Vec<(u64, i64)>) -> Word {
    Word::reduce(raw).expect("unit exponents are nonzero")
}

/// A reduced word of at most `max_len` unit letters over indices
/// `0..=max_index`.
pub fn random_word(rng: &mut ChaCha8Rng, max_len: usize, max_index: u64) -> Word {
    let len = rng.random_range(0..=max_len);
    reduce_units(unit_letters(rng, len, max_index))
}

pub fn random_fword(rng: &mut ChaCha8Rng, max_len: usize, max_index: u64) -> FWord {
    FWord::new(random_word(rng, max_len, max_index))
}

/// Rewrites with one `F`-relation: either replaces some `a_t^±1` (`t >= 2`)
/// by `a_i^-1 a_{t-1}^±1 a_i` with `i < t - 1`, or inserts the relator
/// `a_i^-1 a_j a_i a_{j+1}^-1`. Adds at most four letters.
fn rewrite_once(rng: &mut ChaCha8Rng, raw: &mut Vec<(u64, i64)>, max_index: u64) {
    let candidates: Vec<usize> = (0..raw.len()).filter(|&p| raw[p].0 >= 2).collect();
    if !candidates.is_empty() && rng.random_bool(0.5) {
        let p = candidates[rng.random_range(0..candidates.len())];
        let (t, e) = raw[p];
        let i = rng.random_range(0..t - 1);
        raw.splice(p..=p, [(i, -1), (t - 1, e), (i, 1)]);
    } else {
        let j = rng.random_range(1..max_index.max(2));
        let i = rng.random_range(0..j);
        let p = rng.random_range(0..=raw.len());
        raw.splice(p..p, [(i, -1), (j, 1), (i, 1), (j + 1, -1)]);
    }
}

/// A pair of `F`-words with at most `max_len` letters each and indices at
/// most `max_index`. Half of the pairs are equal in `F` by construction (one
/// side rewritten with a defining relation); the rest are independent.
pub fn random_fword_pair(rng: &mut ChaCha8Rng, max_len: usize, max_index: u64) -> (FWord, FWord) {
    if max_len >= 4 && max_index >= 2 && rng.random_bool(0.5) {
        let base_len = rng.random_range(0..=max_len - 4);
        let mut raw = unit_letters(rng, base_len, max_index);
        let u = reduce_units(raw.clone());
        rewrite_once(rng, &mut raw, max_index);
        if raw.len() + 4 <= max_len && rng.random_bool(0.5) {
            rewrite_once(rng, &mut raw, max_index);
        }
        (FWord::new(u), FWord::new(reduce_units(raw)))
    } else {
        (random_fword(rng, max_len, max_index), random_fword(rng, max_len, max_index))
    }
}

/// An automorphism and its inverse, as a product of elementary Nielsen
/// moves.
fn random_automorphism(rng: &mut ChaCha8Rng, rank: usize, moves: usize) -> (FreeEndo, FreeEndo) {
    let mut phi = FreeEndo::identity(rank);
    let mut phi_inv = FreeEndo::identity(rank);
    for _ in 0..moves {
        let a = rng.random_range(0..rank);
        let b = rng.random_range(0..rank);
        let mut m = FreeEndo::identity(rank).images().to_vec();
        let mut m_inv = m.clone();
        let x = |s: usize, e: i64| Word::power_of(s as u64, e);
        if a == b {
            m[a] = x(a, -1);
            m_inv[a] = x(a, -1);
        } else if rng.random_bool(0.5) {
            m[a] = x(a, 1).multiply(&x(b, 1));
            m_inv[a] = x(a, 1).multiply(&x(b, -1));
        } else {
            m[a] = x(b, 1).multiply(&x(a, 1));
            m_inv[a] = x(b, -1).multiply(&x(a, 1));
        }
        let m = FreeEndo::new(rank, m).expect("in range");
        let m_inv = FreeEndo::new(rank, m_inv).expect("in range");
        phi = phi.compose(&m);
        phi_inv = m_inv.compose(&phi_inv);
    }
    (phi, phi_inv)
}

/// `φ ∘ p0 ∘ φ^-1` where `p0` retracts onto the first `m` generators and
/// `φ` is a short product of Nielsen moves. Images have length at most six.
pub fn random_idempotent(rng: &mut ChaCha8Rng, rank: usize) -> FreeEndo {
    loop {
        let m = rng.random_range(1..=rank);
        let images = (0..rank)
            .map(|s| {
                if s < m {
                    Word::power_of(s as u64, 1)
                } else {
                    random_word(rng, 3, m as u64 - 1)
                }
            })
            .collect();
        let p0 = FreeEndo::new(rank, images).expect("in range");
        let moves = rng.random_range(0..=2);
        let (phi, phi_inv) = random_automorphism(rng, rank, moves);
        let p = phi.compose(&p0).compose(&phi_inv);
        debug_assert!(p.is_idempotent());
        if p.images().iter().all(|w| w.length() <= 6) {
            return p;
        }
    }
}

#[derive(Debug, Clone)]
pub struct WitnessSample {
    pub witness: ConjIdemWitness,
    /// `f(preimage) = x0`.
    pub preimage: Word,
}

/// `f(x) = w^-1 p(x) w` for a random idempotent `p` and word `w`, with
/// `x0 = w^-1 p(w) w` and preimage `w`. Rank is in `1..=max_rank`.
pub fn random_witness(rng: &mut ChaCha8Rng, max_rank: usize) -> WitnessSample {
    let rank = rng.random_range(1..=max_rank);
    let p = random_idempotent(rng, rank);
    let w = random_word(rng, 3, rank as u64 - 1);
    let f = p.conjugated_by(&w);
    let x0 = p.apply(&w).expect("in range").conjugate(&w);
    let witness = ConjIdemWitness::new(f, x0).expect("construction satisfies the hypothesis");
    WitnessSample { witness, preimage: w }
}

#[derive(Debug, Clone)]
pub struct KernelSample {
    pub witness: ConjIdemWitness,
    /// A nontrivial `a_i^n · s^{i+1}(b)` with `e` of it trivial.
    pub kernel: FWord,
}

/// For the witnesses of [`random_witness`] every `x_i` equals `x0`, so `e`
/// kills exactly the words of exponent sum zero. The kernel element is
/// `a_i^n · s^{i+1}(b)` with `b` adjusted to have exponent sum `-n`.
pub fn random_kernel_instance(rng: &mut ChaCha8Rng, max_rank: usize) -> KernelSample {
    let WitnessSample { witness, .. } = random_witness(rng, max_rank);
    let i = rng.random_range(0..=1u64);
    let n: i64 = [-2, -1, 1, 2][rng.random_range(0..4)];
    let b = random_word(rng, 4, 2);
    let fix = -n - b.exponent_sum();
    let b = b.multiply(&Word::power_of(0, fix));
    let kernel = FWord::gen_pow(i, n).multiply(&FWord::new(b).shift(i + 1));
    KernelSample { witness, kernel }
}

/// A reduced conjugator of at most `max_len` unit letters over `rank`
/// generators.
pub fn random_conjugator(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Word {
    random_word(rng, max_len, rank as u64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::{e_hom, ConjIdemSystem};
    use crate::thompson::words_equal;

    #[test]
    fn pairs_respect_bounds_and_rewrites_are_equal() {
        let mut r = rng(7);
        let mut equal = 0;
        for _ in 0..500 {
            let (u, v) = random_fword_pair(&mut r, 16, 8);
            for w in [&u, &v] {
                assert!(w.word().length() <= 16);
                assert!(w.word().max_index().unwrap_or(0) <= 8);
            }
            if words_equal(&u, &v) {
                equal += 1;
            }
        }
        assert!(equal > 200, "only {equal} equal pairs");
    }

    #[test]
    fn idempotents_are_idempotent() {
        let mut r = rng(1);
        for _ in 0..100 {
            let rank = r.random_range(1..=3);
            assert!(random_idempotent(&mut r, rank).is_idempotent());
        }
    }

    #[test]
    fn witnesses_have_their_preimage() {
        let mut r = rng(2);
        for _ in 0..100 {
            let s = random_witness(&mut r, 3);
            let f = s.witness.endo();
            assert_eq!(&f.apply(&s.preimage).unwrap(), s.witness.x0());
            assert_eq!(s.witness.x_sequence(3), *s.witness.x0());
        }
    }

    #[test]
    fn kernel_instances_are_in_the_kernel() {
        let mut r = rng(3);
        for _ in 0..50 {
            let s = random_kernel_instance(&mut r, 3);
            assert!(!s.kernel.is_trivial());
            assert!(e_hom(&s.witness, &s.kernel).is_identity());
            assert!(crate::thompson::standard_form_check(&s.kernel).is_some());
        }
    }

    #[test]
    fn same_seed_same_instances() {
        let a: Vec<_> = (0..5).map({
            let mut r = rng(11);
            move |_| random_witness(&mut r, 3).witness
        }).collect();
        let b: Vec<_> = (0..5).map({
            let mut r = rng(11);
            move |_| random_witness(&mut r, 3).witness
        }).collect();
        assert_eq!(a, b);
    }
}
