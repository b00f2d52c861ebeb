//! C ABI for `pants-arcs`.
//!
//! Words live behind an opaque `PaArcWord` handle created by the parse,
//! family or witness constructors and released with `pa_word_free`.
//! Strings returned to the caller are released with `pa_string_free`.
//! Every fallible call returns a `PaStatus`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pants_arcs::census::census;
use pants_arcs::family::{family_predicted_i, family_word, FamilyId};
use pants_arcs::intersect::self_intersection;
use pants_arcs::lowlying::witness;
use pants_arcs::positive::positivize;
use pants_arcs::word::ArcWord;
use pants_arcs::WordError;

/// Status codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    MalformedToken = 3,
    BadShape = 4,
    ForbiddenPair = 5,
    NonReduced = 6,
    EndpointClash = 7,
    BadParams = 8,
    UnknownFamily = 9,
    Internal = 10,
}

impl From<&WordError> for PaStatus {
    fn from(e: &WordError) -> Self {
        match e {
            WordError::MalformedToken { .. } => PaStatus::MalformedToken,
            WordError::BadShape { .. } => PaStatus::BadShape,
            WordError::ForbiddenPair { .. } => PaStatus::ForbiddenPair,
            WordError::NonReduced { .. } => PaStatus::NonReduced,
            WordError::EndpointClash { .. } => PaStatus::EndpointClash,
        }
    }
}

/// Opaque word handle.
pub struct PaArcWord {
    word: ArcWord,
}

fn guard(f: impl FnOnce() -> PaStatus) -> PaStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(PaStatus::Internal)
}

fn boxed(word: ArcWord) -> *mut PaArcWord {
    Box::into_raw(Box::new(PaArcWord { word }))
}

/// Static description of a status code. Never free the result.
#[no_mangle]
pub extern "C" fn pa_status_message(status: PaStatus) -> *const c_char {
    let s: &'static CStr = match status {
        PaStatus::Ok => c"ok",
        PaStatus::NullPointer => c"null pointer argument",
        PaStatus::InvalidUtf8 => c"input is not valid UTF-8",
        PaStatus::MalformedToken => c"character outside 1 2 3 a A b B",
        PaStatus::BadShape => c"punctures must appear exactly at both ends",
        PaStatus::ForbiddenPair => c"11 and 22 are not arcs",
        PaStatus::NonReduced => c"letter followed by its inverse",
        PaStatus::EndpointClash => c"seam letter lies on the adjacent puncture",
        PaStatus::BadParams => c"bad family parameters",
        PaStatus::UnknownFamily => c"unknown family id",
        PaStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Parses `text`. On a grammar error `*error_position` (if not null)
/// receives the 0-based offending character offset.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_word_parse(
    text: *const c_char,
    out: *mut *mut PaArcWord,
    error_position: *mut usize,
) -> PaStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return PaStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return PaStatus::InvalidUtf8;
        };
        match s.parse::<ArcWord>() {
            Ok(w) => {
                *out = boxed(w);
                PaStatus::Ok
            }
            Err(e) => {
                if !error_position.is_null() {
                    *error_position = e.position();
                }
                PaStatus::from(&e)
            }
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `word` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pa_word_free(word: *mut PaArcWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Total number of letters, or 0 for a null handle.
///
/// # Safety
/// `word` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pa_word_length(word: *const PaArcWord) -> usize {
    word.as_ref().map_or(0, |w| w.word.word_length())
}

/// Text form; release with `pa_string_free`. Null for a null handle.
///
/// # Safety
/// `word` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pa_word_to_string(word: *const PaArcWord) -> *mut c_char {
    let Some(w) = word.as_ref() else {
        return ptr::null_mut();
    };
    CString::new(w.word.to_string()).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `s` must be null or come from `pa_word_to_string`.
#[no_mangle]
pub unsafe extern "C" fn pa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_self_intersection(word: *const PaArcWord, out: *mut u64) -> PaStatus {
    guard(|| {
        let (Some(w), false) = (word.as_ref(), out.is_null()) else {
            return PaStatus::NullPointer;
        };
        *out = self_intersection(&w.word);
        PaStatus::Ok
    })
}

unsafe fn derive(
    word: *const PaArcWord,
    out: *mut *mut PaArcWord,
    f: impl FnOnce(&ArcWord) -> ArcWord,
) -> PaStatus {
    guard(|| {
        let (Some(w), false) = (word.as_ref(), out.is_null()) else {
            return PaStatus::NullPointer;
        };
        *out = boxed(f(&w.word));
        PaStatus::Ok
    })
}

/// The same arc traversed backwards, as a new handle.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_word_inverse(word: *const PaArcWord, out: *mut *mut PaArcWord) -> PaStatus {
    derive(word, out, ArcWord::inverse)
}

/// Image under `a <-> b`, `1 <-> 2`, as a new handle.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_word_relabel(word: *const PaArcWord, out: *mut *mut PaArcWord) -> PaStatus {
    derive(word, out, ArcWord::relabel)
}

/// A lower-case word of the same shape with no more self-intersections.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_word_positivize(word: *const PaArcWord, out: *mut *mut PaArcWord) -> PaStatus {
    derive(word, out, positivize)
}

/// Family member `id` (e.g. "Z2") with parameters `n` and, when `has_m`, `m`.
/// `*predicted` (if not null) receives the closed-form value.
///
/// # Safety
/// `id` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_family_word(
    id: *const c_char,
    n: u32,
    m: u32,
    has_m: bool,
    out: *mut *mut PaArcWord,
    predicted: *mut u64,
) -> PaStatus {
    guard(|| {
        if id.is_null() || out.is_null() {
            return PaStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let Ok(id) = CStr::from_ptr(id).to_str() else {
            return PaStatus::InvalidUtf8;
        };
        let Ok(family) = id.parse::<FamilyId>() else {
            return PaStatus::UnknownFamily;
        };
        let m = has_m.then_some(m);
        match (family_word(family, n, m), family_predicted_i(family, n, m)) {
            (Ok(w), Ok(p)) => {
                if !predicted.is_null() {
                    *predicted = p;
                }
                *out = boxed(w);
                PaStatus::Ok
            }
            _ => PaStatus::BadParams,
        }
    })
}

/// A 2-low-lying word with exactly `n` self-intersections.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_witness(n: u64, out: *mut *mut PaArcWord) -> PaStatus {
    guard(|| {
        if out.is_null() {
            return PaStatus::NullPointer;
        }
        *out = boxed(witness(n).word);
        PaStatus::Ok
    })
}

/// Word count and self-intersection range over all words of a length.
/// `jobs` of 0 uses every logical CPU.
///
/// # Safety
/// The three output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pa_census(
    word_length: usize,
    jobs: usize,
    word_count: *mut u64,
    min_i: *mut u64,
    max_i: *mut u64,
) -> PaStatus {
    guard(|| {
        if word_count.is_null() || min_i.is_null() || max_i.is_null() {
            return PaStatus::NullPointer;
        }
        match census(word_length, jobs) {
            Ok(r) => {
                *word_count = r.word_count;
                *min_i = r.min_i;
                *max_i = r.max_i;
                PaStatus::Ok
            }
            Err(_) => PaStatus::BadParams,
        }
    })
}
