//! C ABI over `matroid-betti`.
//!
//! Objects are opaque handles created by `mb_*_new`/`mb_*_from_*` calls and released
//! with the matching `*_free`. Every fallible call returns an [`MbStatus`]; on failure
//! [`mb_last_error`] describes the most recent error on the calling thread.
//!
//! Array outputs follow one convention: the caller passes a buffer and its capacity,
//! the callee always stores the required length in `*out_len`, copies as much as fits
//! and returns [`MbStatus::BufferTooSmall`] if the buffer was short. Passing a null
//! buffer with capacity 0 is a length query.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use matroid_betti::json::{betti_to_json, parse_matroid};
use matroid_betti::weights::weight_hierarchy;
use matroid_betti::{
    betti, cactus_betti, dual_min_distance, fixture, invert_cactus_betti, Algorithm, BettiTable,
    CycleProfile, Error, Fixture, Matroid, PrimeField,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MbStatus {
    Ok = 0,
    /// Malformed or out-of-range input.
    InvalidInput = 1,
    /// Well-formed input outside the domain of the operation (not a cactus, zero ideal, ...).
    Contract = 2,
    NullPointer = 3,
    BufferTooSmall = 4,
    /// A Rust panic was caught at the boundary.
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MbAlgorithm {
    Auto = 0,
    Hochster = 1,
    Blocks = 2,
    Cactus = 3,
}

impl From<MbAlgorithm> for Algorithm {
    fn from(a: MbAlgorithm) -> Self {
        match a {
            MbAlgorithm::Auto => Algorithm::Auto,
            MbAlgorithm::Hochster => Algorithm::Hochster,
            MbAlgorithm::Blocks => Algorithm::Blocks,
            MbAlgorithm::Cactus => Algorithm::Cactus,
        }
    }
}

/// Opaque matroid handle.
pub struct MbMatroid(Matroid);

/// Opaque Betti table handle.
pub struct MbBettiTable(BettiTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let mut msg = msg.into();
    msg.retain(|c| c != '\0');
    let c = CString::new(msg).expect("nul bytes were removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MbStatus {
    match e {
        Error::GroundTooLarge(_) | Error::OutOfRange { .. } | Error::InvalidInput(_) | Error::Parse(_) => {
            MbStatus::InvalidInput
        }
        Error::NotAMatroid(_)
        | Error::ZeroIdeal
        | Error::NotACactus(_)
        | Error::NotCactusBetti(_)
        | Error::DualIsFree
        | Error::Contract(_) => MbStatus::Contract,
    }
}

fn fail(status: MbStatus, msg: impl Into<String>) -> MbStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning library errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<MbStatus, (MbStatus, String)>) -> MbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => fail(s, msg),
        Err(_) => fail(MbStatus::Internal, "internal panic"),
    }
}

fn lib_err(e: Error) -> (MbStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (MbStatus, String) {
    (MbStatus::NullPointer, format!("{what} is null"))
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (MbStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (MbStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (MbStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Result<MbStatus, (MbStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(MbStatus::Ok)
}

unsafe fn copy_out<T: Copy>(
    src: &[T],
    buf: *mut T,
    cap: usize,
    out_len: *mut usize,
) -> Result<MbStatus, (MbStatus, String)> {
    if out_len.is_null() {
        return Err(null("out_len"));
    }
    *out_len = src.len();
    if buf.is_null() && cap > 0 {
        return Err(null("buffer"));
    }
    let k = src.len().min(cap);
    if k > 0 {
        ptr::copy_nonoverlapping(src.as_ptr(), buf, k);
    }
    if cap < src.len() {
        return Err((MbStatus::BufferTooSmall, format!("need {} slots, got {cap}", src.len())));
    }
    Ok(MbStatus::Ok)
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], (MbStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

/// Message for the last failed call on this thread, or null if none. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mb_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn mb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a matroid from a JSON document (tagged matroid or bare graph).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_matroid_from_json(json: *const c_char, out: *mut *mut MbMatroid) -> MbStatus {
    guard(|| {
        let text = c_str(json, "json")?;
        let m = parse_matroid(text).map_err(lib_err)?;
        store(out, MbMatroid(m))
    })
}

/// Cycle matroid of a named fixture graph (`"g1"` .. `"g4"`).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_matroid_fixture(name: *const c_char, out: *mut *mut MbMatroid) -> MbStatus {
    guard(|| {
        let f = Fixture::parse(c_str(name, "name")?).map_err(lib_err)?;
        let m = Matroid::graphic(&fixture(f)).map_err(lib_err)?;
        store(out, MbMatroid(m))
    })
}

/// Uniform matroid `U(r, n)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_matroid_uniform(r: usize, n: usize, out: *mut *mut MbMatroid) -> MbStatus {
    guard(|| store(out, MbMatroid(Matroid::uniform(r, n).map_err(lib_err)?)))
}

/// # Safety
/// `m` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn mb_matroid_free(m: *mut MbMatroid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Ground set size, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mb_matroid_size(m: *const MbMatroid) -> usize {
    m.as_ref().map_or(0, |m| m.0.n())
}

/// Rank of the ground set, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mb_matroid_rank(m: *const MbMatroid) -> usize {
    m.as_ref().map_or(0, |m| m.0.full_rank())
}

/// Graded Betti numbers of the facet ideal over `GF(field)`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_betti(
    m: *const MbMatroid,
    algorithm: MbAlgorithm,
    field: u32,
    out: *mut *mut MbBettiTable,
) -> MbStatus {
    guard(|| {
        let m = handle(m, "matroid")?;
        let fld = PrimeField::new(field).map_err(lib_err)?;
        let t = betti(&m.0, algorithm.into(), fld).map_err(lib_err)?;
        store(out, MbBettiTable(t))
    })
}

/// Closed-form table of a cactus with the given cycle lengths (1 = loop).
///
/// # Safety
/// `lengths` must point to `len` values (or be null with `len == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_cactus_betti(
    lengths: *const u64,
    len: usize,
    out: *mut *mut MbBettiTable,
) -> MbStatus {
    guard(|| {
        let lengths = slice(lengths, len, "lengths")?;
        let p = CycleProfile::new(lengths.to_vec()).map_err(lib_err)?;
        store(out, MbBettiTable(cactus_betti(&p).map_err(lib_err)?))
    })
}

/// # Safety
/// `t` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn mb_betti_free(t: *mut MbBettiTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Degree of the minimal generators, i.e. the matroid rank.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mb_betti_rank(t: *const MbBettiTable) -> usize {
    t.as_ref().map_or(0, |t| t.0.rank)
}

/// Copies the global Betti numbers `β_0, β_1, ..` into `buf`.
///
/// # Safety
/// `t` must be a live handle; `buf` must hold `cap` values; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_betti_global(
    t: *const MbBettiTable,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> MbStatus {
    guard(|| copy_out(&handle(t, "table")?.0.global, buf, cap, out_len))
}

/// `β_{i,j}`, or 0 outside the table.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mb_betti_get(t: *const MbBettiTable, i: usize, j: usize) -> u64 {
    t.as_ref().map_or(0, |t| t.0.get(i, j))
}

/// JSON rendering of the table. Release with [`mb_string_free`].
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_betti_to_json(t: *const MbBettiTable, out: *mut *mut c_char) -> MbStatus {
    guard(|| {
        let text = betti_to_json(&handle(t, "table")?.0);
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = CString::new(text).expect("JSON has no NUL bytes").into_raw();
        Ok(MbStatus::Ok)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn mb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Higher weight hierarchy `d_1 < d_2 < ..` into `buf`.
///
/// # Safety
/// `m` must be a live handle; `buf` must hold `cap` values; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_weights(
    m: *const MbMatroid,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> MbStatus {
    guard(|| copy_out(&weight_hierarchy(&handle(m, "matroid")?.0).d, buf, cap, out_len))
}

/// Minimum circuit size of the dual matroid.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_dual_d1(m: *const MbMatroid, out: *mut usize) -> MbStatus {
    guard(|| {
        let d = dual_min_distance(&handle(m, "matroid")?.0).map_err(lib_err)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = d;
        Ok(MbStatus::Ok)
    })
}

/// Recovers sorted cycle lengths from a cactus global Betti vector; `loops` of the
/// recovered lengths are 1.
///
/// # Safety
/// `global` must point to `len` values; `buf` must hold `cap` values; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_invert_cactus(
    global: *const u64,
    len: usize,
    loops: usize,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> MbStatus {
    guard(|| {
        let global = slice(global, len, "global")?;
        let p = invert_cactus_betti(global, loops).map_err(lib_err)?;
        copy_out(p.lengths(), buf, cap, out_len)
    })
}
