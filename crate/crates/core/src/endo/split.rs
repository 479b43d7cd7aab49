//! From a conjugate-idempotent `f` to a genuine idempotent `g = y f^n(·) y^-1`.
//!
//! The chain runs: a kernel element of `e` in standard form gives a power of
//! some `x_i` inside `im(f^{i+1})`; conjugating by `x_i` pushes that preimage
//! into every `im(f^N)`, `N > i`; with `n = k(i+1)` the pair
//! `(f^n, x_i^n)` satisfies the hypothesis of the preimage construction, and
//! `y = v^{i+1}` is an explicit preimage of `x_i^n` under `f^n`.

use super::witness::{e_hom, ConjIdemSystem, ConjIdemWitness};
use super::{EndoError, FreeEndo};
use crate::thompson::{standard_form_check, standard_form_of, FWord};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResult {
    pub power: u32,
    pub conjugator: Word,
    pub idempotent: FreeEndo,
}

impl SplitResult {
    /// Re-checks `g∘g = g` and `g(x) = y f^n(x) y^-1` on generators.
    pub fn certify(&self, f: &FreeEndo) -> bool {
        let fnp = f.power(self.power);
        self.idempotent.is_idempotent()
            && self.idempotent == fnp.conjugated_by(&self.conjugator.inverse())
    }
}

/// `g(x) = y · f(x) · y^-1` for an arbitrary pair `(f, x0)` satisfying the
/// hypothesis, given `f(y) = x0`.
fn idempotent_from(f: &FreeEndo, x0: &Word, y: &Word) -> Result<FreeEndo, EndoError> {
    f.check_word(y)?;
    let fy = f.apply(y)?;
    if fy != *x0 {
        return Err(EndoError::Precondition(format!(
            "f(y) = {} differs from x0 = {}",
            fy.render('x'),
            x0.render('x')
        )));
    }
    let g = f.conjugated_by(&y.inverse());
    if !g.is_idempotent() {
        return Err(EndoError::PostCheck("g∘g ≠ g".into()));
    }
    Ok(g)
}

/// Given `f(y) = x0`, returns `g(x) = y f(x) y^-1`, which satisfies `g² = g`.
pub fn make_idempotent_from_preimage(
    wit: &ConjIdemWitness,
    y: &Word,
) -> Result<FreeEndo, EndoError> {
    idempotent_from(wit.endo(), wit.x0(), y)
}

/// Splitting from `f^{i+1}(v) = x_i^k`, using `i` as given.
///
/// Returns `n = k(i+1)`, `y = v^{i+1}` with `f^n(y) = x_i^n`, and the
/// idempotent `g(x) = y f^n(x) y^-1`.
pub fn splitting_power_at(
    wit: &ConjIdemWitness,
    i: u32,
    k: u32,
    v: &Word,
) -> Result<SplitResult, EndoError> {
    if k == 0 {
        return Err(EndoError::ZeroPower);
    }
    let f = wit.endo();
    f.check_word(v)?;
    let xi = wit.x_sequence(i);
    let target = xi.pow(i64::from(k));
    if wit.apply_power(i + 1, v) != target {
        return Err(EndoError::Precondition(format!(
            "f^{}(v) is not x_{i}^{k}",
            i + 1
        )));
    }
    let n = k * (i + 1);
    let fnp = f.power(n);
    let big_x0 = xi.pow(i64::from(n));
    let y = v.pow(i64::from(i + 1));
    if !super::witness::check_conj_idem(&fnp, &big_x0) {
        return Err(EndoError::PostCheck(format!(
            "f^{n} is not conjugate-idempotent with x_{i}^{n}"
        )));
    }
    let g = idempotent_from(&fnp, &big_x0, &y)
        .map_err(|e| EndoError::PostCheck(e.to_string()))?;
    let result = SplitResult {
        power: n,
        conjugator: y,
        idempotent: g,
    };
    debug_assert!(result.certify(f));
    Ok(result)
}

/// Like [`splitting_power_at`], but first moves to `i >= 1`: when `i = 0`,
/// applying `f` to `f(v) = x_0^k` gives `f^2(v) = x_1^k`.
pub fn splitting_power(
    wit: &ConjIdemWitness,
    i: u32,
    k: u32,
    v: &Word,
) -> Result<SplitResult, EndoError> {
    if i == 0 {
        let base = wit.x_sequence(0).pow(i64::from(k));
        if wit.endo().apply(v)? != base {
            return Err(EndoError::Precondition("f(v) is not x_0^k".into()));
        }
        return splitting_power_at(wit, 1, k, v);
    }
    splitting_power_at(wit, i, k, v)
}

/// Turns a nontrivial kernel element of `e` of the form
/// `a_i^n · s^{i+1}(b)` into a splitting of a power of `f`.
///
/// From `e(w) = 1`: `x_i^n = e(s^{i+1}(b))^-1 = f^{i+1}(e(b))^-1`, so
/// `v = e(b)` is the preimage, inverted when `n > 0`.
pub fn kernel_witness_to_splitting(
    wit: &ConjIdemWitness,
    w: &FWord,
) -> Result<SplitResult, EndoError> {
    if w.is_trivial() {
        return Err(EndoError::TrivialKernelElement);
    }
    let form = standard_form_check(w)
        .or_else(|| standard_form_of(w))
        .ok_or(EndoError::NotStandardForm)?;
    let image = e_hom(wit, w);
    if !image.is_identity() {
        return Err(EndoError::NotKernelElement(image.render('x')));
    }
    let v = e_hom(wit, &form.b);
    let (k, witness) = if form.n > 0 {
        (form.n, v.inverse())
    } else {
        (-form.n, v)
    };
    let k = u32::try_from(k).map_err(|_| EndoError::Precondition("exponent too large".into()))?;
    splitting_power_at(wit, form.i as u32, k, &witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn wconj() -> Word {
        w(&[(0, 1), (1, -1), (0, 1)])
    }

    fn inner_witness(c: &Word) -> ConjIdemWitness {
        ConjIdemWitness::new(FreeEndo::inner(2, c).unwrap(), c.clone()).unwrap()
    }

    fn projection_witness() -> ConjIdemWitness {
        let p = FreeEndo::new(2, vec![w(&[(1, 1)]), w(&[(1, 1)])]).unwrap();
        ConjIdemWitness::new(p, Word::identity()).unwrap()
    }

    #[test]
    fn preimage_examples() {
        let idem = projection_witness();
        let g = make_idempotent_from_preimage(&idem, &Word::identity()).unwrap();
        assert_eq!(&g, idem.endo());

        let c = wconj();
        let wit = inner_witness(&c);
        let g = make_idempotent_from_preimage(&wit, &c).unwrap();
        assert_eq!(g, FreeEndo::identity(2));

        assert!(matches!(
            make_idempotent_from_preimage(&wit, &Word::identity()),
            Err(EndoError::Precondition(_))
        ));
    }

    #[test]
    fn splitting_power_bumps_index() {
        let c = wconj();
        let wit = inner_witness(&c);
        let r = splitting_power(&wit, 0, 1, &c).unwrap();
        assert_eq!(r.power, 2);
        assert_eq!(r.idempotent, FreeEndo::identity(2));
        assert!(r.certify(wit.endo()));

        let idem = projection_witness();
        let r = splitting_power(&idem, 1, 1, &Word::identity()).unwrap();
        assert_eq!(r.power, 2);
        assert_eq!(&r.idempotent, idem.endo());
        assert!(r.certify(idem.endo()));
    }

    #[test]
    fn splitting_power_rejects_bad_witness() {
        let c = wconj();
        let wit = inner_witness(&c);
        assert!(matches!(
            splitting_power(&wit, 0, 1, &Word::identity()),
            Err(EndoError::Precondition(_))
        ));
        assert_eq!(splitting_power(&wit, 1, 0, &c), Err(EndoError::ZeroPower));
    }

    #[test]
    fn splitting_power_at_higher_index() {
        let c = wconj();
        let wit = inner_witness(&c);
        // f^3(c^2) = c^2 = x_2^2, so n = 2 * 3 = 6, y = c^6
        let r = splitting_power_at(&wit, 2, 2, &c.pow(2)).unwrap();
        assert_eq!(r.power, 6);
        assert_eq!(r.conjugator, c.pow(6));
        assert_eq!(r.idempotent, FreeEndo::identity(2));
    }

    #[test]
    fn kernel_pipeline_inner_instance() {
        let c = wconj();
        let wit = inner_witness(&c);
        let k = FWord::gen(0).multiply(&FWord::gen(1).inverse());
        let r = kernel_witness_to_splitting(&wit, &k).unwrap();
        assert_eq!(r.power, 1);
        assert_eq!(r.conjugator, c);
        assert_eq!(r.idempotent, FreeEndo::identity(2));
    }

    #[test]
    fn kernel_pipeline_degenerate_witness() {
        let idem = projection_witness();
        let k = FWord::gen(0).multiply(&FWord::gen(1).inverse());
        let r = kernel_witness_to_splitting(&idem, &k).unwrap();
        assert!(r.certify(idem.endo()));
        assert!(r.idempotent.is_idempotent());
    }

    #[test]
    fn kernel_pipeline_negative_exponent() {
        let c = wconj();
        let wit = inner_witness(&c);
        // a1^-2 · s^2(a0 a1): e = c^-2 c c = 1
        let k = FWord::gen_pow(1, -2).multiply(&FWord::gen(2)).multiply(&FWord::gen(3));
        let r = kernel_witness_to_splitting(&wit, &k).unwrap();
        assert_eq!(r.power, 4);
        assert!(r.certify(wit.endo()));
    }

    #[test]
    fn kernel_pipeline_errors() {
        let c = wconj();
        let wit = inner_witness(&c);
        assert!(matches!(
            kernel_witness_to_splitting(&wit, &FWord::gen(0)),
            Err(EndoError::NotKernelElement(_))
        ));
        assert_eq!(
            kernel_witness_to_splitting(&wit, &FWord::identity()),
            Err(EndoError::TrivialKernelElement)
        );
        // a2 is in no standard form
        assert_eq!(
            kernel_witness_to_splitting(&wit, &FWord::gen(2)),
            Err(EndoError::NotStandardForm)
        );
    }
}
