//! Two-sided normal form `p · q^-1` for elements of `F`.
//!
//! `p` and `q` are positive words with non-decreasing indices, stored as
//! index → multiplicity maps. A word is pushed letter by letter using the
//! relations (for `i < j`)
//!
//! ```text
//! a_j   a_i = a_i a_{j+1}        a_j^-1 a_i = a_i a_{j+1}^-1
//! a_i^-1 a_j = a_{j+1} a_i^-1    a_i^-1 a_j^-1 = a_{j+1}^-1 a_i^-1
//! ```
//!
//! plus free cancellation, which keeps the form `p · q^-1` sorted after every
//! letter. A final pass enforces the uniqueness condition: if `a_t` occurs in
//! both `p` and `q` but `a_{t+1}` occurs in neither, then
//! `a_t · X · a_t^-1 = X'` where `X` uses only indices `>= t+2` and `X'` is
//! `X` shifted down by one.

use std::collections::BTreeMap;

use crate::word::{Letter, Word};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    positive: BTreeMap<u64, u64>,
    negative: BTreeMap<u64, u64>,
}

/// Adds `delta` to every key strictly greater than `above`.
fn shift_keys_above(map: &mut BTreeMap<u64, u64>, above: u64, delta: i64) {
    let tail = map.split_off(&(above + 1));
    for (k, c) in tail {
        let nk = k.checked_add_signed(delta).expect("index underflow in normal form");
        *map.entry(nk).or_insert(0) += c;
    }
}

fn remove_one(map: &mut BTreeMap<u64, u64>, key: u64) {
    match map.get_mut(&key) {
        Some(1) => {
            map.remove(&key);
        }
        Some(c) => *c -= 1,
        None => unreachable!("removing absent letter"),
    }
}

impl NormalForm {
    pub fn of(word: &Word) -> NormalForm {
        let mut nf = NormalForm::default();
        for l in word.letters() {
            for _ in 0..l.exponent().unsigned_abs() {
                if l.exponent() > 0 {
                    nf.push_generator(l.index());
                } else {
                    nf.push_inverse(l.index());
                }
            }
        }
        nf.enforce_uniqueness();
        nf
    }

    /// Right-multiplies by `a_i`.
    fn push_generator(&mut self, i: u64) {
        // a_i travels left through q^-1, meeting q's smallest letters first
        let mut cur = i;
        let mut blocked_at = None;
        for (&k, &c) in &self.negative {
            if k < cur {
                cur += c;
            } else {
                blocked_at = Some(k);
                break;
            }
        }
        if blocked_at == Some(cur) {
            remove_one(&mut self.negative, cur);
            return;
        }
        if blocked_at.is_some() {
            // a_k^-1 a_cur = a_cur a_{k+1}^-1 for every remaining k > cur
            shift_keys_above(&mut self.negative, cur, 1);
        }
        // p · a_cur: every letter of p above cur moves up by one
        shift_keys_above(&mut self.positive, cur, 1);
        *self.positive.entry(cur).or_insert(0) += 1;
    }

    /// Right-multiplies by `a_i^-1`, i.e. replaces `q` by the sorted `a_i q`.
    fn push_inverse(&mut self, i: u64) {
        let mut cur = i;
        for (&k, &c) in &self.negative {
            if k < cur {
                cur += c;
            } else {
                break;
            }
        }
        *self.negative.entry(cur).or_insert(0) += 1;
    }

    fn violation(&self) -> Option<u64> {
        self.positive
            .keys()
            .rev()
            .copied()
            .find(|t| {
                self.negative.contains_key(t)
                    && !self.positive.contains_key(&(t + 1))
                    && !self.negative.contains_key(&(t + 1))
            })
    }

    fn enforce_uniqueness(&mut self) {
        while let Some(t) = self.violation() {
            remove_one(&mut self.positive, t);
            remove_one(&mut self.negative, t);
            shift_keys_above(&mut self.positive, t, -1);
            shift_keys_above(&mut self.negative, t, -1);
        }
    }

    pub fn positive(&self) -> &BTreeMap<u64, u64> {
        &self.positive
    }

    pub fn negative(&self) -> &BTreeMap<u64, u64> {
        &self.negative
    }

    pub fn is_identity(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }

    pub fn min_index(&self) -> Option<u64> {
        let p = self.positive.keys().next().copied();
        let n = self.negative.keys().next().copied();
        match (p, n) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Renders `p · q^-1` as a reduced word.
    pub fn to_word(&self) -> Word {
        let p = self
            .positive
            .iter()
            .map(|(&k, &c)| Letter::new(k, c as i64).expect("nonzero"));
        let q = self
            .negative
            .iter()
            .rev()
            .map(|(&k, &c)| Letter::new(k, -(c as i64)).expect("nonzero"));
        let w = Word::from_letters(p.chain(q));
        debug_assert_eq!(
            w.syllables(),
            self.positive.len() + self.negative.len(),
            "normal form junction cancelled"
        );
        w
    }
}
