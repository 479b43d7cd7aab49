//! Endomorphisms of finitely generated free groups `G = F(x_0, …, x_{r-1})`.
//!
//! An endomorphism is determined by the images of the basis, so every
//! functional identity between homomorphisms is checked on generators only.

pub mod inner;
pub mod split;
pub mod witness;

use thiserror::Error;

use crate::word::Word;

pub use inner::{is_inner, min_support_conjugator, InnerVerdict};
pub use split::{
    kernel_witness_to_splitting, make_idempotent_from_preimage, splitting_power,
    splitting_power_at, SplitResult,
};
pub use witness::{
    check_conj_idem, e_hom, verify_conjugation_identity, x_sequence, ConjIdemSystem,
    ConjIdemWitness, ShiftOnF,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("generator x{index} is out of range for rank {rank}")]
    IndexOutOfRange { index: u64, rank: usize },
    #[error("f^2(x) = x0^-1 f(x) x0 fails on generator x{0}")]
    NotConjugateIdempotent(usize),
    #[error("identity requires m > i (got m = {m}, i = {i})")]
    IndexOrder { m: u32, i: u32 },
    #[error("k must be positive")]
    ZeroPower,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("element is not in the form a_i^n s^(i+1)(b)")]
    NotStandardForm,
    #[error("not a kernel element: e(w) = {0}")]
    NotKernelElement(String),
    #[error("trivial element of F carries no splitting information")]
    TrivialKernelElement,
    #[error("internal post-check failed: {0}")]
    PostCheck(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeEndo {
    rank: usize,
    images: Vec<Word>,
}

impl FreeEndo {
    pub fn new(rank: usize, images: Vec<Word>) -> Result<FreeEndo, EndoError> {
        if rank == 0 {
            return Err(EndoError::ZeroRank);
        }
        if images.len() != rank {
            return Err(EndoError::ImageCount {
                expected: rank,
                got: images.len(),
            });
        }
        for img in &images {
            if let Some(index) = img.max_index().filter(|&m| m >= rank as u64) {
                return Err(EndoError::IndexOutOfRange { index, rank });
            }
        }
        Ok(FreeEndo { rank, images })
    }

    pub fn identity(rank: usize) -> FreeEndo {
        FreeEndo {
            rank,
            images: (0..rank as u64).map(|s| Word::power_of(s, 1)).collect(),
        }
    }

    /// `x ↦ w^-1 x w`.
    pub fn inner(rank: usize, w: &Word) -> Result<FreeEndo, EndoError> {
        FreeEndo::new(
            rank,
            (0..rank as u64)
                .map(|s| Word::power_of(s, 1).conjugate(w))
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, s: usize) -> &Word {
        &self.images[s]
    }

    pub fn generator(&self, s: usize) -> Word {
        Word::power_of(s as u64, 1)
    }

    pub fn check_word(&self, w: &Word) -> Result<(), EndoError> {
        match w.max_index() {
            Some(index) if index >= self.rank as u64 => Err(EndoError::IndexOutOfRange {
                index,
                rank: self.rank,
            }),
            _ => Ok(()),
        }
    }

    pub fn apply(&self, w: &Word) -> Result<Word, EndoError> {
        w.substitute(|i| {
            self.images
                .get(i as usize)
                .cloned()
                .ok_or(EndoError::IndexOutOfRange {
                    index: i,
                    rank: self.rank,
                })
        })
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &FreeEndo) -> FreeEndo {
        assert_eq!(self.rank, inner.rank, "rank mismatch in composition");
        FreeEndo {
            rank: self.rank,
            images: inner
                .images
                .iter()
                .map(|img| self.apply(img).expect("images stay in range"))
                .collect(),
        }
    }

    /// `f^n`; `f^0` is the identity.
    pub fn power(&self, n: u32) -> FreeEndo {
        let mut acc = FreeEndo::identity(self.rank);
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }

    /// `x ↦ c^-1 · self(x) · c`.
    pub fn conjugated_by(&self, c: &Word) -> FreeEndo {
        FreeEndo {
            rank: self.rank,
            images: self.images.iter().map(|img| img.conjugate(c)).collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }
}
