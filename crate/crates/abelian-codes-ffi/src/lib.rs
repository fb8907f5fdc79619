//! C ABI for the abelian-codes library. Codes are opaque handles created
//! with `ac_code_new` and released with `ac_code_free`; every computation
//! reports an `AcStatus` and writes its result through an out pointer.
//!
//! The generated header lives in `include/abelian_codes.h`.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use abelian_codes::algebra::{Index, Shape};
use abelian_codes::codes::{
    apparent_distance_alpha, apparent_distance_code, bch_bound, code_from_orbits,
    multiply_dimension, AbelianCode,
};
use abelian_codes::oracle::{generator_matrix, min_distance_bruteforce};
use abelian_codes::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcStatus {
    /// The call succeeded and the out parameters are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// q is not a prime power, or some r_j is zero or shares a factor with q.
    InvalidShape = 2,
    /// An argument is outside its domain.
    InvalidArgument = 3,
    /// The defining set is not a union of q-orbits.
    NotOrbitClosed = 4,
    /// The defining set covers the whole index set, so the code is zero.
    ZeroCode = 5,
    /// The requested computation exceeds the given enumeration budget.
    BudgetExceeded = 6,
    /// An internal invariant failed; please report the inputs.
    InternalError = 7,
}

impl From<Error> for AcStatus {
    fn from(e: Error) -> AcStatus {
        match e {
            Error::InvalidShape(_) => AcStatus::InvalidShape,
            Error::InvalidArgument(_) => AcStatus::InvalidArgument,
            Error::NotOrbitClosed(_) => AcStatus::NotOrbitClosed,
            Error::BudgetExceeded { .. } => AcStatus::BudgetExceeded,
            Error::ZeroHypercolumn { .. } | Error::Internal(_) => AcStatus::InternalError,
        }
    }
}

/// An abelian code over its ambient algebra; opaque to C callers.
pub struct AcCode {
    inner: AbelianCode,
}

unsafe fn code_ref<'a>(p: *const AcCode) -> Option<&'a AcCode> {
    unsafe { p.as_ref() }
}

/// Runs a computation, converting panics into `InternalError` so they never
/// unwind across the C boundary.
fn guarded<F: FnOnce() -> AcStatus>(f: F) -> AcStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(AcStatus::InternalError)
}

/// Builds a code from its shape and the orbit representatives of its
/// defining set. `r` points to `r_len` coordinate orders; `orbit_reps`
/// points to `rep_count * r_len` values, one row of `r_len` coordinates per
/// representative. On success `*out` owns the new handle.
///
/// # Safety
/// `r` must be valid for `r_len` reads, `orbit_reps` for
/// `rep_count * r_len` reads (it may be null when `rep_count` is zero), and
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ac_code_new(
    q: u64,
    r: *const u32,
    r_len: usize,
    orbit_reps: *const u32,
    rep_count: usize,
    out: *mut *mut AcCode,
) -> AcStatus {
    if r.is_null() || out.is_null() || (orbit_reps.is_null() && rep_count > 0) {
        return AcStatus::NullArgument;
    }
    let r = unsafe { std::slice::from_raw_parts(r, r_len) }.to_vec();
    let flat = if rep_count == 0 {
        &[][..]
    } else {
        unsafe { std::slice::from_raw_parts(orbit_reps, rep_count * r_len) }
    };
    let reps: Vec<Index> = flat
        .chunks(r_len.max(1))
        .map(|row| Index::new(row.to_vec()))
        .collect();
    guarded(|| {
        let shape = match Shape::new(q, r.clone()) {
            Ok(shape) => shape,
            Err(e) => return e.into(),
        };
        match code_from_orbits(&shape, &reps) {
            Ok(code) => {
                let handle = Box::new(AcCode { inner: code });
                unsafe { out.write(Box::into_raw(handle)) };
                AcStatus::Ok
            }
            Err(e) => e.into(),
        }
    })
}

/// Releases a handle returned by `ac_code_new` or `ac_multiply_dimension`.
/// Passing null is a no-op.
///
/// # Safety
/// `code` must be null or a handle from this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn ac_code_free(code: *mut AcCode) {
    if !code.is_null() {
        drop(unsafe { Box::from_raw(code) });
    }
}

/// Writes the code length (the size of the index set) to `*out`.
///
/// # Safety
/// `code` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ac_code_length(code: *const AcCode, out: *mut usize) -> AcStatus {
    let Some(code) = (unsafe { code_ref(code) }) else {
        return AcStatus::NullArgument;
    };
    if out.is_null() {
        return AcStatus::NullArgument;
    }
    unsafe { out.write(code.inner.shape().size()) };
    AcStatus::Ok
}

/// Writes the code dimension to `*out`.
///
/// # Safety
/// `code` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ac_code_dimension(code: *const AcCode, out: *mut usize) -> AcStatus {
    let Some(code) = (unsafe { code_ref(code) }) else {
        return AcStatus::NullArgument;
    };
    if out.is_null() {
        return AcStatus::NullArgument;
    }
    unsafe { out.write(code.inner.dimension()) };
    AcStatus::Ok
}

/// Writes the number of defining-set orbit representatives to `*out`. Each
/// representative occupies as many values as there are coordinate orders.
///
/// # Safety
/// `code` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ac_code_defining_set_len(
    code: *const AcCode,
    out: *mut usize,
) -> AcStatus {
    let Some(code) = (unsafe { code_ref(code) }) else {
        return AcStatus::NullArgument;
    };
    if out.is_null() {
        return AcStatus::NullArgument;
    }
    unsafe { out.write(code.inner.defining_orbit_reps().len()) };
    AcStatus::Ok
}

/// Copies the defining-set orbit representatives, sorted and flattened row
/// by row, into `buf`. Writes the number of u32 values copied to
/// `*written`; fails with `InvalidArgument` when `cap` is too small.
///
/// # Safety
/// `code` must be a live handle, `buf` valid for `cap` writes and
/// `written` for one write.
#[no_mangle]
pub unsafe extern "C" fn ac_code_defining_set(
    code: *const AcCode,
    buf: *mut u32,
    cap: usize,
    written: *mut usize,
) -> AcStatus {
    let Some(code) = (unsafe { code_ref(code) }) else {
        return AcStatus::NullArgument;
    };
    if buf.is_null() || written.is_null() {
        return AcStatus::NullArgument;
    }
    let reps = code.inner.defining_orbit_reps();
    let s = code.inner.shape().s();
    let needed = reps.len() * s;
    if cap < needed {
        return AcStatus::InvalidArgument;
    }
    let out = unsafe { std::slice::from_raw_parts_mut(buf, needed) };
    for (row, rep) in reps.iter().enumerate() {
        out[row * s..(row + 1) * s].copy_from_slice(&rep.coords);
    }
    unsafe { written.write(needed) };
    AcStatus::Ok
}

fn distance_call<F>(code: *const AcCode, out: *mut u64, f: F) -> AcStatus
where
    F: FnOnce(&AbelianCode) -> Result<u64, Error>,
{
    let Some(code) = (unsafe { code_ref(code) }) else {
        return AcStatus::NullArgument;
    };
    if out.is_null() {
        return AcStatus::NullArgument;
    }
    if code.inner.is_zero() {
        return AcStatus::ZeroCode;
    }
    guarded(|| match f(&code.inner) {
        Ok(value) => {
            unsafe { out.write(value) };
            AcStatus::Ok
        }
        Err(e) => e.into(),
    })
}

/// Apparent distance with respect to the reference root, written to `*out`.
///
/// # Safety
/// `code` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ac_apparent_distance_alpha(
    code: *const AcCode,
    out: *mut u64,
) -> AcStatus {
    distance_call(code, out, apparent_distance_alpha)
}

/// Apparent distance of the code, the maximum over all root classes,
/// written to `*out`.
///
/// # Safety
/// `code` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ac_apparent_distance(code: *const AcCode, out: *mut u64) -> AcStatus {
    distance_call(code, out, |c| apparent_distance_code(c).map(|r| r.value))
}

/// Multivariate BCH bound of the code, written to `*out`.
///
/// # Safety
/// `code` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ac_bch_bound(code: *const AcCode, out: *mut u64) -> AcStatus {
    distance_call(code, out, bch_bound)
}

/// Brute-force minimum distance, enumerating at most `budget` codewords;
/// requires a prime q. Written to `*out`.
///
/// # Safety
/// `code` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ac_min_distance(
    code: *const AcCode,
    budget: u64,
    out: *mut u64,
) -> AcStatus {
    distance_call(code, out, |c| {
        let gm = generator_matrix(c.matrix())?;
        min_distance_bruteforce(&gm, budget as u128)
    })
}

/// Extends a cyclic code to `n` times its dimension at the same apparent
/// distance. On success `*out` owns a new handle.
///
/// # Safety
/// `code` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ac_multiply_dimension(
    code: *const AcCode,
    n: u32,
    out: *mut *mut AcCode,
) -> AcStatus {
    let Some(code) = (unsafe { code_ref(code) }) else {
        return AcStatus::NullArgument;
    };
    if out.is_null() {
        return AcStatus::NullArgument;
    }
    guarded(|| match multiply_dimension(&code.inner, n) {
        Ok(product) => {
            let handle = Box::new(AcCode { inner: product });
            unsafe { out.write(Box::into_raw(handle)) };
            AcStatus::Ok
        }
        Err(e) => e.into(),
    })
}

/// A static, null-terminated description of a status code.
#[no_mangle]
pub extern "C" fn ac_status_message(status: AcStatus) -> *const c_char {
    let text: &'static [u8] = match status {
        AcStatus::Ok => b"ok\0",
        AcStatus::NullArgument => b"a required pointer argument was null\0",
        AcStatus::InvalidShape => b"invalid shape: q must be a prime power coprime to every r_j\0",
        AcStatus::InvalidArgument => b"an argument is outside its domain\0",
        AcStatus::NotOrbitClosed => b"the defining set is not a union of q-orbits\0",
        AcStatus::ZeroCode => b"the defining set covers every index: this is the zero code\0",
        AcStatus::BudgetExceeded => b"the computation exceeds the enumeration budget\0",
        AcStatus::InternalError => b"internal error\0",
    };
    text.as_ptr().cast()
}
