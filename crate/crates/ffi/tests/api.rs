use std::ffi::{c_char, CStr, CString};
use std::ptr;

use idemsplit_ffi::*;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    idemsplit_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(idemsplit_last_error()).to_str().unwrap().to_owned()
}

unsafe fn word(s: &str) -> *mut IdemsplitWord {
    let mut w = ptr::null_mut();
    assert_eq!(idemsplit_word_parse(cs(s).as_ptr(), &mut w), IdemsplitStatus::Ok);
    w
}

#[test]
fn words() {
    unsafe {
        let u = word("a1 a0");
        let mut nf = ptr::null_mut();
        assert_eq!(idemsplit_word_normal_form(u, &mut nf), IdemsplitStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(idemsplit_word_render(nf, &mut s), IdemsplitStatus::Ok);
        assert_eq!(take(s), "a0 a2");

        let mut inv = ptr::null_mut();
        let mut prod = ptr::null_mut();
        assert_eq!(idemsplit_word_inverse(u, &mut inv), IdemsplitStatus::Ok);
        assert_eq!(idemsplit_word_multiply(u, inv, &mut prod), IdemsplitStatus::Ok);
        let id = word("");
        let mut eq = false;
        assert_eq!(idemsplit_word_equal(prod, id, &mut eq), IdemsplitStatus::Ok);
        assert!(eq);
        assert_eq!(idemsplit_word_equal(u, id, &mut eq), IdemsplitStatus::Ok);
        assert!(!eq);

        assert_eq!(idemsplit_word_pl_render(id, &mut s), IdemsplitStatus::Ok);
        assert_eq!(take(s), "0/2^0 -> 0/2^0\n1/2^0 -> 1/2^0\n");

        for w in [u, nf, inv, prod, id] {
            idemsplit_word_free(w);
        }
    }
}

#[test]
fn errors_and_null_handling() {
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(idemsplit_word_parse(cs("a0^0").as_ptr(), &mut w), IdemsplitStatus::Parse);
        assert_eq!(last_error(), "zero exponent at token 1");
        assert!(w.is_null());
        assert_eq!(idemsplit_word_parse(ptr::null(), &mut w), IdemsplitStatus::NullPointer);
        assert_eq!(idemsplit_word_parse(cs("a0").as_ptr(), ptr::null_mut()), IdemsplitStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(idemsplit_word_parse(bad.as_ptr().cast(), &mut w), IdemsplitStatus::InvalidUtf8);
        let mut eq = false;
        assert_eq!(idemsplit_word_equal(ptr::null(), ptr::null(), &mut eq), IdemsplitStatus::NullPointer);
        idemsplit_word_free(ptr::null_mut());
        idemsplit_string_free(ptr::null_mut());

        let mut ok = false;
        assert_eq!(idemsplit_verify_presentation(4, &mut ok), IdemsplitStatus::Ok);
        assert!(ok);
        assert_eq!(last_error(), "");
    }
}

#[test]
fn endomorphisms() {
    unsafe {
        let text = "rank 2\nx0 -> x0^-1 x1 x0 x1^-1 x0\nx1 -> x0^-1 x1 x0^-1 x1 x0 x1^-1 x0\nx0 = x0 x1^-1 x0\n";
        let mut f = ptr::null_mut();
        assert_eq!(idemsplit_endo_parse(cs(text).as_ptr(), &mut f), IdemsplitStatus::Ok);
        let mut ok = false;
        assert_eq!(idemsplit_endo_check(f, &mut ok), IdemsplitStatus::Ok);
        assert!(ok);

        let mut conj = ptr::null_mut();
        assert_eq!(idemsplit_endo_is_inner(f, 8, &mut conj), IdemsplitStatus::Ok);
        assert_eq!(take(conj), "x0 x1^-1 x0");

        let k = word("a0 a1^-1");
        let mut power = 0u32;
        let mut g = ptr::null_mut();
        assert_eq!(
            idemsplit_endo_split_from_kernel(f, k, &mut power, &mut conj, &mut g),
            IdemsplitStatus::Ok
        );
        assert_eq!(power, 1);
        assert_eq!(take(conj), "x0 x1^-1 x0");
        let mut s = ptr::null_mut();
        assert_eq!(idemsplit_endo_render(g, &mut s), IdemsplitStatus::Ok);
        assert_eq!(take(s), "rank 2\nx0 -> x0\nx1 -> x1\nx0 = \n");

        let a0 = word("a0");
        assert_eq!(
            idemsplit_endo_split_from_kernel(f, a0, &mut power, &mut conj, &mut g),
            IdemsplitStatus::Precondition
        );
        assert!(last_error().contains("not a kernel element"));

        let mut swap = ptr::null_mut();
        assert_eq!(idemsplit_endo_parse(cs("rank 2\nx0 -> x1\nx1 -> x0\n").as_ptr(), &mut swap), IdemsplitStatus::Ok);
        assert_eq!(idemsplit_endo_is_inner(swap, 8, &mut conj), IdemsplitStatus::Negative);
        assert_eq!(idemsplit_endo_check(swap, &mut ok), IdemsplitStatus::Precondition);

        idemsplit_word_free(k);
        idemsplit_word_free(a0);
        idemsplit_endo_free(f);
        idemsplit_endo_free(g);
        idemsplit_endo_free(swap);
    }
}

#[test]
fn graphs() {
    unsafe {
        let theta = "vertices 2\nedge 0 0 1\nedge 1 0 1\nedge 2 0 1\nbase 0\n";
        let mut g = ptr::null_mut();
        assert_eq!(idemsplit_graph_parse(cs(theta).as_ptr(), &mut g), IdemsplitStatus::Ok);
        let mut ok = false;
        assert_eq!(idemsplit_graph_validate(g, &mut ok), IdemsplitStatus::Ok);
        assert!(ok);
        let mut s = ptr::null_mut();
        assert_eq!(idemsplit_graph_class(g, cs("e0 e1^-1 e2").as_ptr(), &mut s), IdemsplitStatus::Ok);
        assert_eq!(take(s), "e1^-1 e2");
        assert_eq!(idemsplit_graph_class(g, cs("e1 e2").as_ptr(), &mut s), IdemsplitStatus::Precondition);
        let mut n = 0usize;
        assert_eq!(idemsplit_graph_enumerate_count(g, 2, &mut n), IdemsplitStatus::Ok);
        assert_eq!(n, 9);
        assert_eq!(idemsplit_graph_iso_check(g, 1, 4, &mut ok), IdemsplitStatus::Ok);
        assert!(ok);
        idemsplit_graph_free(g);

        assert_eq!(idemsplit_graph_parse(cs("edge 0 0 0").as_ptr(), &mut g), IdemsplitStatus::Parse);
    }
}

#[test]
fn criteria() {
    unsafe {
        let mut ok = false;
        for id in [1, 9] {
            assert_eq!(idemsplit_verify_criterion(id, cs("small").as_ptr(), 0, &mut ok), IdemsplitStatus::Ok);
            assert!(ok, "criterion {id}");
        }
        assert_eq!(idemsplit_verify_criterion(10, cs("small").as_ptr(), 0, &mut ok), IdemsplitStatus::Precondition);
        assert_eq!(idemsplit_verify_criterion(1, cs("huge").as_ptr(), 0, &mut ok), IdemsplitStatus::Parse);
    }
}
