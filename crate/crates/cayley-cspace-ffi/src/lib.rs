// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! C ABI for the configuration-space library: opaque linkage handles,
//! integer status codes, and flat `[lo, hi, lo, hi, …]` interval buffers.
//! All functions are panic-safe; errors map to status codes and never
//! unwind across the boundary.

use cayley_cspace::classify::low_sampling_complexity;
use cayley_cspace::cspace::config_space;
use cayley_cspace::error::Error;
use cayley_cspace::io::LinkageFile;
use cayley_cspace::linkage::Linkage;
use cayley_cspace::oracle::realizable_at;
use cayley_cspace::realize::Tolerance;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleyStatus {
    /// Success.
    Ok = 0,
    /// A pointer argument was null.
    NullPointer = 1,
    /// Input was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The linkage description failed validation.
    InvalidInput = 3,
    /// The substrate is not buildable from its base non-edge.
    NotBuildable = 4,
    /// The computation panicked; this indicates a library bug.
    Internal = 5,
}

/// Opaque handle to a validated linkage.
pub struct CayleyLinkage {
    inner: Linkage,
}

fn status_for(e: &Error) -> CayleyStatus {
    match e {
        Error::NotSimple1DofHenneberg | Error::NotHennebergFromF => CayleyStatus::NotBuildable,
        _ => CayleyStatus::InvalidInput,
    }
}

fn guarded(f: impl FnOnce() -> CayleyStatus) -> CayleyStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(CayleyStatus::Internal)
}

/// Parses a linkage from its JSON file representation and returns an
/// owned handle through `out`.
///
/// # Safety
/// `json` must be a valid NUL-terminated C string; `out` must be a valid
/// pointer. On `Ok` the handle must be released with
/// [`cayley_linkage_free`].
#[no_mangle]
pub unsafe extern "C" fn cayley_linkage_from_json(
    json: *const c_char,
    out: *mut *mut CayleyLinkage,
) -> CayleyStatus {
    if json.is_null() || out.is_null() {
        return CayleyStatus::NullPointer;
    }
    let text = match CStr::from_ptr(json).to_str() {
        Ok(t) => t,
        Err(_) => return CayleyStatus::InvalidUtf8,
    };
    guarded(|| match LinkageFile::parse(text).and_then(|f| f.to_linkage()) {
        Ok(linkage) => {
            *out = Box::into_raw(Box::new(CayleyLinkage { inner: linkage }));
            CayleyStatus::Ok
        }
        Err(e) => status_for(&e),
    })
}

/// Releases a handle returned by [`cayley_linkage_from_json`].
///
/// # Safety
/// `l` must be a handle from this library, released at most once; null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn cayley_linkage_free(l: *mut CayleyLinkage) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Computes the configuration space and writes a freshly allocated flat
/// buffer `[lo0, hi0, lo1, hi1, …]` to `intervals` with the number of
/// intervals in `count`. Free the buffer with [`cayley_intervals_free`].
///
/// # Safety
/// `l` must be a live handle; `intervals` and `count` must be valid
/// pointers.
#[no_mangle]
pub unsafe extern "C" fn cayley_config_space(
    l: *const CayleyLinkage,
    abs_tol: f64,
    intervals: *mut *mut f64,
    count: *mut usize,
) -> CayleyStatus {
    if l.is_null() || intervals.is_null() || count.is_null() {
        return CayleyStatus::NullPointer;
    }
    let linkage = &(*l).inner;
    guarded(|| {
        let tol = Tolerance { abs_tol, ..Tolerance::default() };
        match config_space(linkage, &tol) {
            Ok(r) => {
                let flat: Vec<f64> = r
                    .intervals
                    .intervals()
                    .iter()
                    .flat_map(|iv| [iv.lo, iv.hi])
                    .collect();
                let n = flat.len() / 2;
                let boxed = flat.into_boxed_slice();
                *intervals = Box::into_raw(boxed) as *mut f64;
                *count = n;
                CayleyStatus::Ok
            }
            Err(e) => status_for(&e),
        }
    })
}

/// Releases a buffer returned by [`cayley_config_space`].
///
/// # Safety
/// `ptr`/`count` must come from a single successful
/// [`cayley_config_space`] call and be released at most once; null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn cayley_intervals_free(ptr: *mut f64, count: usize) {
    if !ptr.is_null() {
        drop(Box::from_raw(std::ptr::slice_from_raw_parts_mut(ptr, count * 2)));
    }
}

/// Decides whether some orientation realizes the linkage with the base
/// non-edge at length `dstar`, writing the verdict to `out`.
///
/// # Safety
/// `l` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cayley_realizable_at(
    l: *const CayleyLinkage,
    dstar: f64,
    out: *mut bool,
) -> CayleyStatus {
    if l.is_null() || out.is_null() {
        return CayleyStatus::NullPointer;
    }
    let linkage = &(*l).inner;
    guarded(|| match realizable_at(linkage, dstar, &Tolerance::default()) {
        Ok(v) => {
            *out = v;
            CayleyStatus::Ok
        }
        Err(e) => status_for(&e),
    })
}

/// Decides low sampling complexity of the substrate, writing the verdict
/// to `out`.
///
/// # Safety
/// `l` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cayley_low_sampling(
    l: *const CayleyLinkage,
    out: *mut bool,
) -> CayleyStatus {
    if l.is_null() || out.is_null() {
        return CayleyStatus::NullPointer;
    }
    let linkage = &(*l).inner;
    guarded(|| {
        match low_sampling_complexity(linkage.graph(), linkage.base_nonedge()) {
            Ok(r) => {
                *out = r.low_sampling;
                CayleyStatus::Ok
            }
            Err(e) => status_for(&e),
        }
    })
}
