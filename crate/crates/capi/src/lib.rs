//! C ABI over the word-language toolkit.
//!
//! Conventions, mirrored in the generated `include/lex.h`:
//! - Handles (`LexModel`, `LexCode`) are opaque; create them with the
//!   constructors here and release them with the matching `_free`.
//! - Every fallible call returns a [`LexStatus`] and writes results through
//!   out-pointers, which are touched only on `LexOk`.
//! - Strings crossing the boundary are NUL-terminated UTF-8. Returned
//!   strings are owned by the caller and must be released with
//!   [`lex_string_free`]. Words use the library's text form: letters
//!   separated by spaces (`"1 -1 0"`), or a compact digit string (`"0121"`)
//!   when every letter is a single digit.
//! - Counts are returned as decimal strings, since they outgrow every fixed
//!   integer width.
//! - Enumerated parameters (`method`, `family`) are passed as `uint32_t`
//!   holding a [`LexCountMethod`] / [`LexCodeFamily`] value, so an
//!   out-of-range integer is rejected with a status instead of being
//!   undefined behavior.
//!
//! No call unwinds across the boundary: panics are caught and reported as
//! [`LexStatus::LexInternal`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lex_core::aspec::{self, AspecModel};
use lex_core::aws;
use lex_core::codes::{self, Code};
use lex_core::error::Error;
use lex_core::subshift::{higher_power, CountMethod, SubshiftModel};
use lex_core::word::{hamming, LetterSet, Word};

/// Result discipline for every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexStatus {
    /// The call succeeded and all out-pointers are filled.
    LexOk = 0,
    /// A parameter was malformed (bad word text, zero alphabet, …).
    LexInvalidArgument = 1,
    /// A required pointer was NULL.
    LexNullPointer = 2,
    /// The operation exceeded its enumeration budget.
    LexBudgetExceeded = 3,
    /// The model/method pairing (or repair on this family) is not defined.
    LexUnsupported = 4,
    /// An internal invariant failed; this is a bug in the library.
    LexInternal = 5,
}

/// Counting strategies accepted by [`lex_model_count`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexCountMethod {
    /// Budgeted prefix-tree enumeration.
    LexCountBrute = 0,
    /// The model's exact run-structure recurrence.
    LexCountDp = 1,
    /// The closed-form parametrization (run-family model only).
    LexCountFormula = 2,
}

/// Code families accepted by [`lex_code_build`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexCodeFamily {
    /// Parity-anchored 1-spanning family.
    LexFamilyT = 0,
    /// Product-of-halves 2-spanning family.
    LexFamilyU = 1,
    /// Fixed-prefix 2-spanning family.
    LexFamilyV = 2,
}

/// Opaque subshift-model handle.
pub struct LexModel {
    inner: SubshiftModel,
}

/// Opaque covering-code handle.
pub struct LexCode {
    inner: Code,
}

fn status_of(err: &Error) -> LexStatus {
    match err {
        Error::BudgetExceeded { .. } => LexStatus::LexBudgetExceeded,
        Error::UnsupportedMethod { .. } | Error::RepairUnsupported { .. } => {
            LexStatus::LexUnsupported
        }
        _ => LexStatus::LexInvalidArgument,
    }
}

/// Runs `f`, converting a panic into `LexInternal` instead of unwinding
/// into the caller.
fn guarded(f: impl FnOnce() -> LexStatus) -> LexStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(LexStatus::LexInternal)
}

unsafe fn get_str<'a>(p: *const c_char) -> Result<&'a str, LexStatus> {
    if p.is_null() {
        return Err(LexStatus::LexNullPointer);
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| LexStatus::LexInvalidArgument)
}

unsafe fn put_string(out: *mut *mut c_char, value: String) -> LexStatus {
    match CString::new(value) {
        Ok(c) => {
            *out = c.into_raw();
            LexStatus::LexOk
        }
        Err(_) => LexStatus::LexInternal,
    }
}

fn parse_method(method: u32) -> Result<CountMethod, LexStatus> {
    match method {
        0 => Ok(CountMethod::Brute),
        1 => Ok(CountMethod::Dp),
        2 => Ok(CountMethod::Formula),
        _ => Err(LexStatus::LexInvalidArgument),
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a pointer previously returned through one of this
/// library's string out-parameters, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lex_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A static, never-freed description of a status code.
#[no_mangle]
pub extern "C" fn lex_status_message(status: LexStatus) -> *const c_char {
    let text: &'static CStr = match status {
        LexStatus::LexOk => c"ok",
        LexStatus::LexInvalidArgument => c"invalid argument",
        LexStatus::LexNullPointer => c"null pointer",
        LexStatus::LexBudgetExceeded => c"enumeration budget exceeded",
        LexStatus::LexUnsupported => c"unsupported operation for this model or family",
        LexStatus::LexInternal => c"internal error",
    };
    text.as_ptr()
}

unsafe fn put_model(out_model: *mut *mut LexModel, model: SubshiftModel) -> LexStatus {
    *out_model = Box::into_raw(Box::new(LexModel { inner: model }));
    LexStatus::LexOk
}

/// Builds the full shift over `{-N,…,N}` (zero included only on request).
///
/// # Safety
/// `out_model` must be a valid pointer; on `LexOk` it receives a handle the
/// caller must release with [`lex_model_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_model_full(
    max_magnitude: u32,
    include_zero: bool,
    out_model: *mut *mut LexModel,
) -> LexStatus {
    if out_model.is_null() {
        return LexStatus::LexNullPointer;
    }
    guarded(|| match SubshiftModel::full(max_magnitude, include_zero) {
        Ok(model) => put_model(out_model, model),
        Err(e) => status_of(&e),
    })
}

/// Builds the zero-gap model over `{-N,…,N}`.
///
/// # Safety
/// `out_model` must be a valid pointer; on `LexOk` it receives a handle the
/// caller must release with [`lex_model_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_model_aws(
    max_magnitude: u32,
    out_model: *mut *mut LexModel,
) -> LexStatus {
    if out_model.is_null() {
        return LexStatus::LexNullPointer;
    }
    guarded(|| match SubshiftModel::aws(max_magnitude) {
        Ok(model) => put_model(out_model, model),
        Err(e) => status_of(&e),
    })
}

/// Builds the run-family model over `{-N,…,-1,1,…,N}` with threshold `ell`.
///
/// # Safety
/// `out_model` must be a valid pointer; on `LexOk` it receives a handle the
/// caller must release with [`lex_model_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_model_aspec(
    max_magnitude: u32,
    ell: u32,
    out_model: *mut *mut LexModel,
) -> LexStatus {
    if out_model.is_null() {
        return LexStatus::LexNullPointer;
    }
    guarded(|| match SubshiftModel::aspec(max_magnitude, ell) {
        Ok(model) => put_model(out_model, model),
        Err(e) => status_of(&e),
    })
}

/// Wraps a model into its `k`-th higher power (`k = 1` copies the model).
/// The base handle stays valid and still owned by the caller.
///
/// # Safety
/// `base` must be a live handle from this library; `out_model` must be a
/// valid pointer and receives a new handle to free with [`lex_model_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_model_power(
    base: *const LexModel,
    k: usize,
    out_model: *mut *mut LexModel,
) -> LexStatus {
    if base.is_null() || out_model.is_null() {
        return LexStatus::LexNullPointer;
    }
    let model = (*base).inner.clone();
    guarded(|| match higher_power(model, k) {
        Ok(power) => put_model(out_model, power),
        Err(e) => status_of(&e),
    })
}

/// Releases a model handle. NULL is ignored.
///
/// # Safety
/// `model` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lex_model_free(model: *mut LexModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Writes the model's parameter summary (e.g. `aspec{N=2,ell=3}`).
///
/// # Safety
/// `model` must be a live handle; `out_text` must be valid and, on `LexOk`,
/// receives a string to free with [`lex_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_model_describe(
    model: *const LexModel,
    out_text: *mut *mut c_char,
) -> LexStatus {
    if model.is_null() || out_text.is_null() {
        return LexStatus::LexNullPointer;
    }
    let text = (*model).inner.describe();
    guarded(|| put_string(out_text, text))
}

/// Decides membership of `word` in the model's language.
///
/// # Safety
/// `model` must be a live handle; `word` must be a NUL-terminated string;
/// `out_member` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lex_model_is_member(
    model: *const LexModel,
    word: *const c_char,
    out_member: *mut bool,
) -> LexStatus {
    if model.is_null() || out_member.is_null() {
        return LexStatus::LexNullPointer;
    }
    let text = match get_str(word) {
        Ok(t) => t,
        Err(status) => return status,
    };
    guarded(|| {
        let parsed = match Word::parse(text) {
            Ok(w) => w,
            Err(e) => return status_of(&e),
        };
        match (*model).inner.is_member(&parsed) {
            Ok(member) => {
                *out_member = member;
                LexStatus::LexOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Counts the length-`n` words of the language by the requested method
/// (`LexCountMethod` value) and writes the count as a decimal string.
///
/// # Safety
/// `model` must be a live handle; `out_decimal` must be valid and, on
/// `LexOk`, receives a string to free with [`lex_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_model_count(
    model: *const LexModel,
    n: usize,
    method: u32,
    budget: u64,
    out_decimal: *mut *mut c_char,
) -> LexStatus {
    if model.is_null() || out_decimal.is_null() {
        return LexStatus::LexNullPointer;
    }
    let method = match parse_method(method) {
        Ok(m) => m,
        Err(status) => return status,
    };
    guarded(|| match (*model).inner.count_language(n, method, budget) {
        Ok(count) => put_string(out_decimal, count.to_string()),
        Err(e) => status_of(&e),
    })
}

/// Writes the `n,count,method,log_rate` CSV of exact counts and per-level
/// entropy upper bounds for `n = 1..=n_max`.
///
/// # Safety
/// `model` must be a live handle; `out_csv` must be valid and, on `LexOk`,
/// receives a string to free with [`lex_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_model_entropy_csv(
    model: *const LexModel,
    n_max: usize,
    method: u32,
    budget: u64,
    out_csv: *mut *mut c_char,
) -> LexStatus {
    if model.is_null() || out_csv.is_null() {
        return LexStatus::LexNullPointer;
    }
    let method = match parse_method(method) {
        Ok(m) => m,
        Err(status) => return status,
    };
    guarded(|| match (*model).inner.entropy_table(n_max, method, budget) {
        Ok(table) => put_string(out_csv, table.to_csv()),
        Err(e) => status_of(&e),
    })
}

/// The zero-gap gluing gap `2 + ⌈log₃ n⌉` (0 is treated as 1).
#[no_mangle]
pub extern "C" fn lex_gap_length(n: u64) -> u64 {
    aws::gap_f(n.max(1))
}

/// Glues member words of the zero-gap model with the given zero-run gaps
/// (`gap_count` must be `word_count - 1`, every gap at least the value of
/// [`lex_gap_length`] for the preceding word's length).
///
/// # Safety
/// `words` must point to `word_count` NUL-terminated strings; `gaps` must
/// point to `gap_count` integers; `out_word` must be valid and, on `LexOk`,
/// receives a string to free with [`lex_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_glue_zero_gap(
    max_magnitude: u32,
    words: *const *const c_char,
    word_count: usize,
    gaps: *const u64,
    gap_count: usize,
    out_word: *mut *mut c_char,
) -> LexStatus {
    if words.is_null() || (gaps.is_null() && gap_count > 0) || out_word.is_null() {
        return LexStatus::LexNullPointer;
    }
    let mut parsed = Vec::with_capacity(word_count);
    for i in 0..word_count {
        let text = match get_str(*words.add(i)) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match Word::parse(text) {
            Ok(w) => parsed.push(w),
            Err(e) => return status_of(&e),
        }
    }
    let gap_values: Vec<u64> = std::slice::from_raw_parts(gaps, gap_count).to_vec();
    guarded(|| match aws::glue(max_magnitude, &parsed, &gap_values) {
        Ok(glued) => put_string(out_word, glued.to_string()),
        Err(e) => status_of(&e),
    })
}

/// Repairs the concatenation of run-family member words into the language,
/// writing the repaired concatenation and the largest per-word letter
/// distance (always at most 4).
///
/// # Safety
/// `words` must point to `word_count` NUL-terminated strings; `out_word`
/// and `out_max_distance` must be valid; on `LexOk` the string must be
/// freed with [`lex_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_repair_concatenation(
    max_magnitude: u32,
    ell: u32,
    words: *const *const c_char,
    word_count: usize,
    out_word: *mut *mut c_char,
    out_max_distance: *mut usize,
) -> LexStatus {
    if words.is_null() || out_word.is_null() || out_max_distance.is_null() {
        return LexStatus::LexNullPointer;
    }
    let mut parsed = Vec::with_capacity(word_count);
    for i in 0..word_count {
        let text = match get_str(*words.add(i)) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match Word::parse(text) {
            Ok(w) => parsed.push(w),
            Err(e) => return status_of(&e),
        }
    }
    guarded(|| {
        let model = match AspecModel::new(max_magnitude, ell) {
            Ok(m) => m,
            Err(e) => return status_of(&e),
        };
        match aspec::repair_concatenation(&model, &parsed) {
            Ok(outcome) => {
                *out_max_distance = outcome.distances.iter().copied().max().unwrap_or(0);
                put_string(out_word, outcome.glued.to_string())
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Hamming distance between two equal-length words.
///
/// # Safety
/// `left` and `right` must be NUL-terminated strings; `out_distance` must
/// be valid.
#[no_mangle]
pub unsafe extern "C" fn lex_hamming(
    left: *const c_char,
    right: *const c_char,
    out_distance: *mut usize,
) -> LexStatus {
    if out_distance.is_null() {
        return LexStatus::LexNullPointer;
    }
    let left_text = match get_str(left) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let right_text = match get_str(right) {
        Ok(t) => t,
        Err(status) => return status,
    };
    guarded(|| {
        let (a, b) = match (Word::parse(left_text), Word::parse(right_text)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return status_of(&e),
        };
        match hamming(&a, &b) {
            Ok(d) => {
                *out_distance = d;
                LexStatus::LexOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Builds a covering code of the given family (`LexCodeFamily` value) over
/// the alphabet `{0,…,alphabet_size-1}` at word length `n`.
///
/// # Safety
/// `out_code` must be a valid pointer; on `LexOk` it receives a handle the
/// caller must release with [`lex_code_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_code_build(
    family: u32,
    alphabet_size: u32,
    n: usize,
    out_code: *mut *mut LexCode,
) -> LexStatus {
    if out_code.is_null() {
        return LexStatus::LexNullPointer;
    }
    guarded(|| {
        if alphabet_size < 2 {
            return LexStatus::LexInvalidArgument;
        }
        let alphabet = match LetterSet::range(0, alphabet_size as i32 - 1) {
            Ok(a) => a,
            Err(e) => return status_of(&e),
        };
        let built = match family {
            0 => codes::build_t(&alphabet, n),
            1 => codes::build_u(&alphabet, n),
            2 => codes::build_v(&alphabet, n),
            _ => return LexStatus::LexInvalidArgument,
        };
        match built {
            Ok(code) => {
                *out_code = Box::into_raw(Box::new(LexCode { inner: code }));
                LexStatus::LexOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a code handle. NULL is ignored.
///
/// # Safety
/// `code` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lex_code_free(code: *mut LexCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Writes the code's exact cardinality as a decimal string.
///
/// # Safety
/// `code` must be a live handle; `out_decimal` must be valid and, on
/// `LexOk`, receives a string to free with [`lex_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_code_cardinality(
    code: *const LexCode,
    out_decimal: *mut *mut c_char,
) -> LexStatus {
    if code.is_null() || out_decimal.is_null() {
        return LexStatus::LexNullPointer;
    }
    let text = (*code).inner.cardinality().to_string();
    guarded(|| put_string(out_decimal, text))
}

/// Decides whether `word` belongs to the code.
///
/// # Safety
/// `code` must be a live handle; `word` must be a NUL-terminated string;
/// `out_member` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lex_code_contains(
    code: *const LexCode,
    word: *const c_char,
    out_member: *mut bool,
) -> LexStatus {
    if code.is_null() || out_member.is_null() {
        return LexStatus::LexNullPointer;
    }
    let text = match get_str(word) {
        Ok(t) => t,
        Err(status) => return status,
    };
    guarded(|| {
        let parsed = match Word::parse(text) {
            Ok(w) => w,
            Err(e) => return status_of(&e),
        };
        match (*code).inner.contains(&parsed) {
            Ok(member) => {
                *out_member = member;
                LexStatus::LexOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Moves `word` into the code within the family's spanning radius and
/// writes the repaired word.
///
/// # Safety
/// `code` must be a live handle; `word` must be a NUL-terminated string;
/// `out_word` must be valid and, on `LexOk`, receives a string to free
/// with [`lex_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lex_code_repair(
    code: *const LexCode,
    word: *const c_char,
    out_word: *mut *mut c_char,
) -> LexStatus {
    if code.is_null() || out_word.is_null() {
        return LexStatus::LexNullPointer;
    }
    let text = match get_str(word) {
        Ok(t) => t,
        Err(status) => return status,
    };
    guarded(|| {
        let parsed = match Word::parse(text) {
            Ok(w) => w,
            Err(e) => return status_of(&e),
        };
        match (*code).inner.repair(&parsed) {
            Ok(repaired) => put_string(out_word, repaired.to_string()),
            Err(e) => status_of(&e),
        }
    })
}

/// Exhaustively verifies that every cube word lies within `radius` letter
/// changes of the code.
///
/// # Safety
/// `code` must be a live handle; `out_ok` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lex_code_verify_spanning(
    code: *const LexCode,
    radius: usize,
    budget: u64,
    out_ok: *mut bool,
) -> LexStatus {
    if code.is_null() || out_ok.is_null() {
        return LexStatus::LexNullPointer;
    }
    guarded(|| match codes::verify_spanning(&(*code).inner, radius, budget) {
        Ok(check) => {
            *out_ok = check.ok;
            LexStatus::LexOk
        }
        Err(e) => status_of(&e),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn take_string(p: *mut c_char) -> String {
        assert!(!p.is_null());
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        lex_string_free(p);
        s
    }

    fn c(text: &str) -> CString {
        CString::new(text).unwrap()
    }

    #[test]
    fn model_round_trip_and_membership() {
        unsafe {
            let mut model: *mut LexModel = ptr::null_mut();
            assert_eq!(lex_model_aws(1, &mut model), LexStatus::LexOk);
            let mut text: *mut c_char = ptr::null_mut();
            assert_eq!(lex_model_describe(model, &mut text), LexStatus::LexOk);
            assert_eq!(take_string(text), "aws{N=1}");

            let mut member = false;
            let word = c("1 1 0 0");
            assert_eq!(
                lex_model_is_member(model, word.as_ptr(), &mut member),
                LexStatus::LexOk
            );
            assert!(member);
            let word = c("1 0 1");
            assert_eq!(
                lex_model_is_member(model, word.as_ptr(), &mut member),
                LexStatus::LexOk
            );
            assert!(!member);
            lex_model_free(model);
        }
    }

    #[test]
    fn count_returns_decimal_strings() {
        unsafe {
            let mut model: *mut LexModel = ptr::null_mut();
            assert_eq!(lex_model_aspec(2, 2, &mut model), LexStatus::LexOk);
            let mut decimal: *mut c_char = ptr::null_mut();
            assert_eq!(
                lex_model_count(model, 3, LexCountMethod::LexCountFormula as u32, 1 << 20, &mut decimal),
                LexStatus::LexOk
            );
            assert_eq!(take_string(decimal), "56");
            // Formula is rejected off the run-family model.
            let mut full: *mut LexModel = ptr::null_mut();
            assert_eq!(lex_model_full(1, false, &mut full), LexStatus::LexOk);
            assert_eq!(
                lex_model_count(full, 3, LexCountMethod::LexCountFormula as u32, 1 << 20, &mut decimal),
                LexStatus::LexUnsupported
            );
            assert_eq!(
                lex_model_count(full, 3, 99, 1 << 20, &mut decimal),
                LexStatus::LexInvalidArgument
            );
            lex_model_free(full);
            lex_model_free(model);
        }
    }

    #[test]
    fn higher_power_membership_through_the_boundary() {
        unsafe {
            let mut base: *mut LexModel = ptr::null_mut();
            assert_eq!(lex_model_aws(1, &mut base), LexStatus::LexOk);
            let mut power: *mut LexModel = ptr::null_mut();
            assert_eq!(lex_model_power(base, 2, &mut power), LexStatus::LexOk);
            let mut member = false;
            let word = c("1 1 0");
            assert_eq!(
                lex_model_is_member(power, word.as_ptr(), &mut member),
                LexStatus::LexOk
            );
            assert!(!member, "odd flat length is not a block word");
            lex_model_free(power);
            lex_model_free(base);
        }
    }

    #[test]
    fn entropy_csv_has_the_documented_header() {
        unsafe {
            let mut model: *mut LexModel = ptr::null_mut();
            assert_eq!(lex_model_aws(2, &mut model), LexStatus::LexOk);
            let mut csv: *mut c_char = ptr::null_mut();
            assert_eq!(
                lex_model_entropy_csv(model, 6, LexCountMethod::LexCountDp as u32, 1 << 20, &mut csv),
                LexStatus::LexOk
            );
            let text = take_string(csv);
            assert!(text.starts_with("n,count,method,log_rate\n1,5,dp,"));
            lex_model_free(model);
        }
    }

    #[test]
    fn gluing_and_repair_round_trip() {
        unsafe {
            let w1 = c("1 1");
            let w2 = c("-1");
            let words = [w1.as_ptr(), w2.as_ptr()];
            let gaps = [lex_gap_length(2)];
            let mut glued: *mut c_char = ptr::null_mut();
            assert_eq!(
                lex_glue_zero_gap(1, words.as_ptr(), 2, gaps.as_ptr(), 1, &mut glued),
                LexStatus::LexOk
            );
            assert_eq!(take_string(glued), "1 1 0 0 0 -1");

            let r1 = c("2");
            let r2 = c("-2 -2");
            let words = [r1.as_ptr(), r2.as_ptr()];
            let mut repaired: *mut c_char = ptr::null_mut();
            let mut max_distance = usize::MAX;
            assert_eq!(
                lex_repair_concatenation(2, 2, words.as_ptr(), 2, &mut repaired, &mut max_distance),
                LexStatus::LexOk
            );
            let text = take_string(repaired);
            assert!(max_distance <= 4, "distance {max_distance}");
            // The repaired concatenation is a member of the model it names.
            let mut model: *mut LexModel = ptr::null_mut();
            assert_eq!(lex_model_aspec(2, 2, &mut model), LexStatus::LexOk);
            let mut member = false;
            let glued_c = c(&text);
            assert_eq!(
                lex_model_is_member(model, glued_c.as_ptr(), &mut member),
                LexStatus::LexOk
            );
            assert!(member, "{text} should be a member");
            lex_model_free(model);
        }
    }

    #[test]
    fn code_handles_cover_build_contains_repair_verify() {
        unsafe {
            let mut code: *mut LexCode = ptr::null_mut();
            assert_eq!(
                lex_code_build(LexCodeFamily::LexFamilyT as u32, 2, 4, &mut code),
                LexStatus::LexOk
            );
            let mut decimal: *mut c_char = ptr::null_mut();
            assert_eq!(lex_code_cardinality(code, &mut decimal), LexStatus::LexOk);
            assert_eq!(take_string(decimal), "4");

            let word = c("0 1 1 0");
            let mut repaired: *mut c_char = ptr::null_mut();
            assert_eq!(lex_code_repair(code, word.as_ptr(), &mut repaired), LexStatus::LexOk);
            let repaired_text = take_string(repaired);
            let repaired_c = c(&repaired_text);
            let mut member = false;
            assert_eq!(
                lex_code_contains(code, repaired_c.as_ptr(), &mut member),
                LexStatus::LexOk
            );
            assert!(member);

            let mut ok = false;
            assert_eq!(
                lex_code_verify_spanning(code, 1, 1 << 20, &mut ok),
                LexStatus::LexOk
            );
            assert!(ok);
            assert_eq!(
                lex_code_build(99, 2, 4, &mut code),
                LexStatus::LexInvalidArgument
            );
            lex_code_free(code);
        }
    }

    #[test]
    fn null_and_garbage_inputs_are_statuses_not_crashes() {
        unsafe {
            assert_eq!(
                lex_model_aws(1, ptr::null_mut()),
                LexStatus::LexNullPointer
            );
            let mut model: *mut LexModel = ptr::null_mut();
            assert_eq!(lex_model_aws(1, &mut model), LexStatus::LexOk);
            let mut member = false;
            assert_eq!(
                lex_model_is_member(model, ptr::null(), &mut member),
                LexStatus::LexNullPointer
            );
            let garbage = c("this is not a word");
            assert_eq!(
                lex_model_is_member(model, garbage.as_ptr(), &mut member),
                LexStatus::LexInvalidArgument
            );
            let outside = c("9 9");
            assert_eq!(
                lex_model_is_member(model, outside.as_ptr(), &mut member),
                LexStatus::LexInvalidArgument
            );
            lex_model_free(model);
            lex_model_free(ptr::null_mut());
            lex_string_free(ptr::null_mut());
            for status in [
                LexStatus::LexOk,
                LexStatus::LexInvalidArgument,
                LexStatus::LexNullPointer,
                LexStatus::LexBudgetExceeded,
                LexStatus::LexUnsupported,
                LexStatus::LexInternal,
            ] {
                assert!(!lex_status_message(status).is_null());
            }
        }
    }

    #[test]
    fn budget_exhaustion_maps_to_its_status() {
        unsafe {
            let mut model: *mut LexModel = ptr::null_mut();
            assert_eq!(lex_model_full(2, true, &mut model), LexStatus::LexOk);
            let mut decimal: *mut c_char = ptr::null_mut();
            assert_eq!(
                lex_model_count(model, 10, LexCountMethod::LexCountBrute as u32, 10, &mut decimal),
                LexStatus::LexBudgetExceeded
            );
            lex_model_free(model);
        }
    }

    #[test]
    fn generated_header_is_present_and_guarded() {
        let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("include")
            .join("lex.h");
        let text = std::fs::read_to_string(&header).expect("build.rs generates include/lex.h");
        assert!(text.contains("LEX_H"));
        assert!(text.contains("lex_model_count"));
        assert!(text.contains("LexStatus"));
    }
}
