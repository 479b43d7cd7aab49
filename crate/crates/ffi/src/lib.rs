//! C ABI for `idemsplit`.
//!
//! Objects cross the boundary as opaque handles created by a `*_parse`
//! function and released with the matching `*_free`. Every fallible call
//! returns an [`IdemsplitStatus`]; on anything other than `OK` a message is
//! available from [`idemsplit_last_error`] on the same thread. Strings handed
//! out through `char **` parameters are owned by the caller and must be
//! released with [`idemsplit_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use idemsplit::endo::{
    check_conj_idem, is_inner, kernel_witness_to_splitting, ConjIdemWitness, FreeEndo,
    InnerVerdict,
};
use idemsplit::pi1::{basepoint_iso_check, enumerate_classes, GraphComplex};
use idemsplit::text::{parse_endo, parse_fword, parse_graph, parse_path, render_endo};
use idemsplit::thompson::{to_pl, verify_presentation, words_equal, FWord};
use idemsplit::verify::{run_criterion, Profile};
use idemsplit::word::Word;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdemsplitStatus {
    Ok = 0,
    /// A bounded search finished without an answer.
    NotFound = 1,
    /// A definitive negative answer (for example, not inner).
    Negative = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    Parse = 5,
    /// Arguments are well-formed but violate a precondition.
    Precondition = 6,
    Panic = 7,
}

/// An element of Thompson's group `F`, as a word in `a0, a1, …`.
pub struct IdemsplitWord {
    word: FWord,
}

/// An endomorphism of a free group, optionally with its `x0`.
pub struct IdemsplitEndo {
    endo: FreeEndo,
    x0: Option<Word>,
}

/// A finite graph with a base subtree.
pub struct IdemsplitGraph {
    graph: GraphComplex,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure {
    status: IdemsplitStatus,
    message: String,
}

fn fail(status: IdemsplitStatus, message: impl Into<String>) -> Failure {
    Failure { status, message: message.into() }
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<IdemsplitStatus, Failure>) -> IdemsplitStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            set_error("");
            status
        }
        Ok(Err(e)) => {
            set_error(&e.message);
            e.status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            IdemsplitStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(IdemsplitStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(IdemsplitStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(IdemsplitStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(IdemsplitStatus::NullPointer, format!("{what} is null")));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

fn parse_err(e: impl std::fmt::Display) -> Failure {
    fail(IdemsplitStatus::Parse, e.to_string())
}

/// The message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn idemsplit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an `F`-word such as `"a0 a1^-1"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_word_parse(
    text: *const c_char,
    out: *mut *mut IdemsplitWord,
) -> IdemsplitStatus {
    guard(|| {
        let word = parse_fword(c_str(text, "text")?).map_err(parse_err)?;
        write(out, Box::into_raw(Box::new(IdemsplitWord { word })), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// # Safety
/// `w` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_word_free(w: *mut IdemsplitWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

fn new_word(word: FWord) -> *mut IdemsplitWord {
    Box::into_raw(Box::new(IdemsplitWord { word }))
}

/// Renders `w`; the identity renders as the empty string.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_word_render(
    w: *const IdemsplitWord,
    out: *mut *mut c_char,
) -> IdemsplitStatus {
    guard(|| {
        let w = handle(w, "word")?;
        write(out, owned_string(w.word.word().render('a')), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_word_normal_form(
    w: *const IdemsplitWord,
    out: *mut *mut IdemsplitWord,
) -> IdemsplitStatus {
    guard(|| {
        let w = handle(w, "word")?;
        write(out, new_word(w.word.normal_form()), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// # Safety
/// `u`, `v` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_word_multiply(
    u: *const IdemsplitWord,
    v: *const IdemsplitWord,
    out: *mut *mut IdemsplitWord,
) -> IdemsplitStatus {
    guard(|| {
        let (u, v) = (handle(u, "u")?, handle(v, "v")?);
        write(out, new_word(u.word.multiply(&v.word)), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_word_inverse(
    w: *const IdemsplitWord,
    out: *mut *mut IdemsplitWord,
) -> IdemsplitStatus {
    guard(|| {
        let w = handle(w, "word")?;
        write(out, new_word(w.word.inverse()), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// Equality in `F`.
///
/// # Safety
/// `u`, `v` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_word_equal(
    u: *const IdemsplitWord,
    v: *const IdemsplitWord,
    out: *mut bool,
) -> IdemsplitStatus {
    guard(|| {
        let (u, v) = (handle(u, "u")?, handle(v, "v")?);
        write(out, words_equal(&u.word, &v.word), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// Breakpoints of the PL map of `w`, one `x -> y` line each.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_word_pl_render(
    w: *const IdemsplitWord,
    out: *mut *mut c_char,
) -> IdemsplitStatus {
    guard(|| {
        let w = handle(w, "word")?;
        write(out, owned_string(to_pl(&w.word).render()), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_verify_presentation(depth: u64, out: *mut bool) -> IdemsplitStatus {
    guard(|| {
        write(out, verify_presentation(depth), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// Parses an endomorphism file (`rank r`, `x<s> -> word` lines, optional
/// `x0 = word`).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_endo_parse(
    text: *const c_char,
    out: *mut *mut IdemsplitEndo,
) -> IdemsplitStatus {
    guard(|| {
        let (endo, x0) = parse_endo(c_str(text, "text")?).map_err(parse_err)?;
        write(out, Box::into_raw(Box::new(IdemsplitEndo { endo, x0 })), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// # Safety
/// `e` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_endo_free(e: *mut IdemsplitEndo) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Renders `e` in the file format accepted by [`idemsplit_endo_parse`].
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_endo_render(
    e: *const IdemsplitEndo,
    out: *mut *mut c_char,
) -> IdemsplitStatus {
    guard(|| {
        let e = handle(e, "endo")?;
        write(out, owned_string(render_endo(&e.endo, e.x0.as_ref())), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

fn require_x0(e: &IdemsplitEndo) -> Result<&Word, Failure> {
    e.x0
        .as_ref()
        .ok_or_else(|| fail(IdemsplitStatus::Precondition, "endomorphism has no x0"))
}

/// Whether `f^2(x) = x0^-1 f(x) x0` holds; needs `x0`.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_endo_check(e: *const IdemsplitEndo, out: *mut bool) -> IdemsplitStatus {
    guard(|| {
        let e = handle(e, "endo")?;
        write(out, check_conj_idem(&e.endo, require_x0(e)?), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// Looks for `a` with `f(x) = a^-1 x a`. Returns `OK` and writes `a` to
/// `out_conjugator`, `NEGATIVE` when some `f(x_s)` is not conjugate to
/// `x_s`, or `NOT_FOUND` when the exponent bound was exhausted.
///
/// # Safety
/// `e` must be a live handle; `out_conjugator` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_endo_is_inner(
    e: *const IdemsplitEndo,
    exp_bound: u32,
    out_conjugator: *mut *mut c_char,
) -> IdemsplitStatus {
    guard(|| {
        let e = handle(e, "endo")?;
        if out_conjugator.is_null() {
            return Err(fail(IdemsplitStatus::NullPointer, "out_conjugator is null"));
        }
        match is_inner(&e.endo, exp_bound) {
            InnerVerdict::Inner(a) => {
                write(out_conjugator, owned_string(a.render('x')), "out_conjugator")?;
                Ok(IdemsplitStatus::Ok)
            }
            InnerVerdict::NotConjugate { generator } => Err(fail(
                IdemsplitStatus::Negative,
                format!("f(x{generator}) is not conjugate to x{generator}"),
            )),
            InnerVerdict::NotFound => Err(fail(
                IdemsplitStatus::NotFound,
                format!("no common conjugator with exponent bound {exp_bound}"),
            )),
        }
    })
}

/// Splits a power of `f` from a kernel element of `e` in standard form.
/// Writes `n`, the conjugator `y`, and the idempotent `g(x) = y f^n(x) y^-1`.
///
/// # Safety
/// `e` and `kernel` must be live handles; all out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_endo_split_from_kernel(
    e: *const IdemsplitEndo,
    kernel: *const IdemsplitWord,
    out_power: *mut u32,
    out_conjugator: *mut *mut c_char,
    out_idempotent: *mut *mut IdemsplitEndo,
) -> IdemsplitStatus {
    guard(|| {
        let e = handle(e, "endo")?;
        let k = handle(kernel, "kernel")?;
        if out_power.is_null() || out_conjugator.is_null() || out_idempotent.is_null() {
            return Err(fail(IdemsplitStatus::NullPointer, "an out-pointer is null"));
        }
        let wit = ConjIdemWitness::new(e.endo.clone(), require_x0(e)?.clone())
            .map_err(|err| fail(IdemsplitStatus::Precondition, err.to_string()))?;
        let r = kernel_witness_to_splitting(&wit, &k.word)
            .map_err(|err| fail(IdemsplitStatus::Precondition, err.to_string()))?;
        write(out_power, r.power, "out_power")?;
        write(out_conjugator, owned_string(r.conjugator.render('x')), "out_conjugator")?;
        let g = IdemsplitEndo { endo: r.idempotent, x0: Some(Word::identity()) };
        write(out_idempotent, Box::into_raw(Box::new(g)), "out_idempotent")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// Parses a graph file (`vertices n`, `edge id tail head`, `base ids…`,
/// optional `basevertex v`).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_graph_parse(
    text: *const c_char,
    out: *mut *mut IdemsplitGraph,
) -> IdemsplitStatus {
    guard(|| {
        let graph = parse_graph(c_str(text, "text")?).map_err(parse_err)?;
        write(out, Box::into_raw(Box::new(IdemsplitGraph { graph })), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_graph_free(g: *mut IdemsplitGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Connectivity of the graph and the subtree condition on the base.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_graph_validate(g: *const IdemsplitGraph, out: *mut bool) -> IdemsplitStatus {
    guard(|| {
        write(out, handle(g, "graph")?.graph.validate(), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// Canonical representative of the class of a path such as `"e1 e2^-1"`;
/// the identity class renders as the empty string.
///
/// # Safety
/// `g` must be a live handle, `path` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_graph_class(
    g: *const IdemsplitGraph,
    path: *const c_char,
    out: *mut *mut c_char,
) -> IdemsplitStatus {
    guard(|| {
        let g = &handle(g, "graph")?.graph;
        let steps = parse_path(c_str(path, "path")?).map_err(parse_err)?;
        let c = g
            .path_from_steps(steps)
            .and_then(|p| g.class_of(&p))
            .map_err(|err| fail(IdemsplitStatus::Precondition, err.to_string()))?;
        write(out, owned_string(c.render()), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// Number of classes with canonical length at most `max_len`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_graph_enumerate_count(
    g: *const IdemsplitGraph,
    max_len: usize,
    out: *mut usize,
) -> IdemsplitStatus {
    guard(|| {
        let g = &handle(g, "graph")?.graph;
        write(out, enumerate_classes(g, max_len).len(), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// Whether loops at `x0` map isomorphically onto the relative group on the
/// window of length `max_len`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_graph_iso_check(
    g: *const IdemsplitGraph,
    x0: usize,
    max_len: usize,
    out: *mut bool,
) -> IdemsplitStatus {
    guard(|| {
        let g = &handle(g, "graph")?.graph;
        write(out, basepoint_iso_check(g, x0, max_len), "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}

/// Runs acceptance criterion `id` (1 to 9) at `profile` (`"small"` or
/// `"standard"`) and writes whether it passed.
///
/// # Safety
/// `profile` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idemsplit_verify_criterion(
    id: u8,
    profile: *const c_char,
    seed: u64,
    out: *mut bool,
) -> IdemsplitStatus {
    guard(|| {
        let profile: Profile = c_str(profile, "profile")?.parse().map_err(parse_err)?;
        let o = run_criterion(id, profile, seed)
            .ok_or_else(|| fail(IdemsplitStatus::Precondition, format!("no criterion {id}")))?;
        write(out, o.passed, "out")?;
        Ok(IdemsplitStatus::Ok)
    })
}
