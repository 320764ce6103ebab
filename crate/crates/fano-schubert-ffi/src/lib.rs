//! C ABI for the fano-schubert library.
//!
//! Conventions:
//! - every function returns an `FsStatus`; results come back through out
//!   pointers;
//! - strings returned through `char**` are UTF-8 JSON allocated by Rust
//!   and must be released with `fs_string_free`;
//! - `FsGrassmannian` is an opaque handle created by `fs_grassmannian_new`
//!   and released with `fs_grassmannian_free`;
//! - partitions and degree lists are passed as `const uint32_t*` plus a
//!   length, ordered weakly decreasing for partitions.
//!
//! The generated header lives at `include/fano_schubert.h`.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fano_schubert::bott::{bott_cohomology, BottCohomology};
use fano_schubert::bundles::{fano_class, fano_expected_dim};
use fano_schubert::chow::{ChowClass, Grassmannian};
use fano_schubert::invariants::ThreefoldInvariants;
use fano_schubert::koszul;
use fano_schubert::partition::{lr_coefficients, weyl_dim, Partition};
use serde_json::json;

/// Status code of every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FsStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments failed validation (bad partition, bad dimensions, ...).
    InvalidArgument = 2,
    /// A domain precondition failed (box violation, rank too large, ...).
    DomainError = 3,
    /// Internal inconsistency; indicates a bug, not a caller error.
    InternalError = 4,
}

/// Opaque ambient-Grassmannian handle.
pub struct FsGrassmannian {
    inner: Grassmannian,
}

unsafe fn read_parts<'a>(ptr: *const u32, len: usize) -> Option<&'a [u32]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

fn partition_from(parts: &[u32]) -> Result<Partition, FsStatus> {
    Partition::new(parts.to_vec()).map_err(|_| FsStatus::InvalidArgument)
}

fn write_json(value: serde_json::Value, out: *mut *mut c_char) -> FsStatus {
    let text = match serde_json::to_string(&value) {
        Ok(t) => t,
        Err(_) => return FsStatus::InternalError,
    };
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            FsStatus::Ok
        }
        Err(_) => FsStatus::InternalError,
    }
}

fn guarded(f: impl FnOnce() -> FsStatus) -> FsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => FsStatus::InternalError,
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn fs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned through a `char**` out
/// parameter of this library, not yet freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a Gr(k,n) handle; requires 0 < k < n.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn fs_grassmannian_new(
    k: u32,
    n: u32,
    out: *mut *mut FsGrassmannian,
) -> FsStatus {
    if out.is_null() {
        return FsStatus::NullPointer;
    }
    match Grassmannian::new(k, n) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(FsGrassmannian { inner }));
            FsStatus::Ok
        }
        Err(_) => FsStatus::InvalidArgument,
    }
}

/// Releases a Grassmannian handle.
///
/// # Safety
/// `gr` must come from `fs_grassmannian_new` and not be freed twice; null
/// is ignored.
#[no_mangle]
pub unsafe extern "C" fn fs_grassmannian_free(gr: *mut FsGrassmannian) {
    if !gr.is_null() {
        drop(Box::from_raw(gr));
    }
}

/// Littlewood-Richardson expansion of σ_λ·σ_μ as JSON:
/// {"terms":[{"partition":[...],"coeff":N},...]} sorted descending.
///
/// # Safety
/// `lambda`/`mu` must point to `lambda_len`/`mu_len` readable u32 values
/// (null allowed only when the length is 0); `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_lr_expand(
    lambda: *const u32,
    lambda_len: usize,
    mu: *const u32,
    mu_len: usize,
    out_json: *mut *mut c_char,
) -> FsStatus {
    if out_json.is_null() {
        return FsStatus::NullPointer;
    }
    let (Some(lambda), Some(mu)) = (read_parts(lambda, lambda_len), read_parts(mu, mu_len)) else {
        return FsStatus::NullPointer;
    };
    guarded(|| {
        let (lambda, mu) = match (partition_from(lambda), partition_from(mu)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return FsStatus::InvalidArgument,
        };
        let expansion = lr_coefficients(&lambda, &mu);
        let terms: Vec<serde_json::Value> = expansion
            .sorted_desc()
            .into_iter()
            .map(|(p, c)| json!({"partition": p, "coeff": c}))
            .collect();
        write_json(json!({ "terms": terms }), out_json)
    })
}

/// Dimension of the Schur functor Γ^λ of an r-dimensional space.
///
/// # Safety
/// `parts` must point to `len` readable u32 values (null allowed when
/// `len` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_weyl_dim(
    parts: *const u32,
    len: usize,
    rank: u32,
    out: *mut u64,
) -> FsStatus {
    if out.is_null() {
        return FsStatus::NullPointer;
    }
    let Some(parts) = read_parts(parts, len) else {
        return FsStatus::NullPointer;
    };
    guarded(|| match partition_from(parts) {
        Ok(lambda) => {
            *out = weyl_dim(&lambda, rank);
            FsStatus::Ok
        }
        Err(status) => status,
    })
}

/// Degree of the locus of k-planes on a complete intersection with the
/// given form degrees: the integral of `[F]`·σ₁^expdim.
///
/// # Safety
/// `gr` must be a live handle; `degrees` must point to `degrees_len`
/// readable u32 values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_fano_degree(
    gr: *const FsGrassmannian,
    degrees: *const u32,
    degrees_len: usize,
    out: *mut i64,
) -> FsStatus {
    if gr.is_null() || out.is_null() {
        return FsStatus::NullPointer;
    }
    let Some(degrees) = read_parts(degrees, degrees_len) else {
        return FsStatus::NullPointer;
    };
    let gr = (*gr).inner;
    guarded(|| {
        if degrees.is_empty() || degrees.contains(&0) {
            return FsStatus::InvalidArgument;
        }
        let class = match fano_class(gr, degrees) {
            Ok(c) => c,
            Err(_) => return FsStatus::DomainError,
        };
        let expdim = fano_expected_dim(gr, degrees);
        if expdim < 0 {
            return FsStatus::DomainError;
        }
        let sigma1 = match ChowClass::schubert(gr, Partition::row(1)) {
            Ok(s) => s,
            Err(_) => return FsStatus::DomainError,
        };
        let mut acc = class;
        for _ in 0..expdim {
            acc = match acc.mul(&sigma1) {
                Ok(v) => v,
                Err(_) => return FsStatus::InternalError,
            };
        }
        *out = acc.integrate();
        FsStatus::Ok
    })
}

/// Bott cohomology of Γ^a S as JSON: either {"result":"zero"} or
/// {"result":{"degree":j,"ambient_weight":[...],"dimension":d}}.
///
/// # Safety
/// `gr` must be a live handle; `weight` must point to `weight_len`
/// readable u32 values; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_bott_cohomology(
    gr: *const FsGrassmannian,
    weight: *const u32,
    weight_len: usize,
    out_json: *mut *mut c_char,
) -> FsStatus {
    if gr.is_null() || out_json.is_null() {
        return FsStatus::NullPointer;
    }
    let Some(weight) = read_parts(weight, weight_len) else {
        return FsStatus::NullPointer;
    };
    let gr = (*gr).inner;
    guarded(|| {
        let weight = match partition_from(weight) {
            Ok(w) => w,
            Err(status) => return status,
        };
        let body = match bott_cohomology(&weight, gr) {
            Ok(BottCohomology::Zero) => json!({"result": "zero"}),
            Ok(BottCohomology::NonZero(g)) => json!({
                "result": {
                    "degree": g.degree,
                    "ambient_weight": g.weight,
                    "twist": g.twist,
                    "dimension": g.dimension,
                }
            }),
            Err(_) => return FsStatus::DomainError,
        };
        write_json(body, out_json)
    })
}

/// Euler characteristic of the m-th Plücker twist of the threefold of
/// planes by Riemann-Roch; requires expected dimension three.
///
/// # Safety
/// `gr` must be a live handle; `degrees` must point to `degrees_len`
/// readable u32 values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_hrr_chi(
    gr: *const FsGrassmannian,
    degrees: *const u32,
    degrees_len: usize,
    m: i64,
    out: *mut i64,
) -> FsStatus {
    if gr.is_null() || out.is_null() {
        return FsStatus::NullPointer;
    }
    let Some(degrees) = read_parts(degrees, degrees_len) else {
        return FsStatus::NullPointer;
    };
    let gr = (*gr).inner;
    guarded(|| {
        if degrees.is_empty() || degrees.contains(&0) {
            return FsStatus::InvalidArgument;
        }
        match ThreefoldInvariants::new(gr, degrees) {
            Ok(inv) => {
                *out = inv.hrr_chi(m);
                FsStatus::Ok
            }
            Err(_) => FsStatus::DomainError,
        }
    })
}

/// Alternating sum of the hypercohomology first page for the standard
/// threefold (Gr(3,10), degrees 2,2,2), cross-checked against
/// Riemann-Roch.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_koszul_euler_check(out: *mut i64) -> FsStatus {
    if out.is_null() {
        return FsStatus::NullPointer;
    }
    guarded(|| {
        *out = koszul::euler_check();
        FsStatus::Ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn version_is_static_c_string() {
        let v = fs_version();
        assert!(!v.is_null());
        let s = unsafe { std::ffi::CStr::from_ptr(v) }.to_str().unwrap();
        assert_eq!(s, env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn null_out_pointer_reported() {
        let status = unsafe { fs_grassmannian_new(3, 10, std::ptr::null_mut()) };
        assert_eq!(status, FsStatus::NullPointer);
    }
}
