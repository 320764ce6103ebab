//! Exercises the C entry points exactly the way a foreign caller would:
//! raw pointers in, status codes and owned strings out.

use std::ffi::{c_char, CStr};
use std::ptr;

use fano_schubert_ffi::{
    fs_bott_cohomology, fs_fano_degree, fs_grassmannian_free, fs_grassmannian_new, fs_hrr_chi,
    fs_koszul_euler_check, fs_lr_expand, fs_string_free, fs_weyl_dim, FsGrassmannian, FsStatus,
};

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    unsafe { fs_string_free(ptr) };
    text
}

fn new_gr(k: u32, n: u32) -> *mut FsGrassmannian {
    let mut handle: *mut FsGrassmannian = ptr::null_mut();
    let status = unsafe { fs_grassmannian_new(k, n, &mut handle) };
    assert_eq!(status, FsStatus::Ok);
    assert!(!handle.is_null());
    handle
}

#[test]
fn grassmannian_handle_lifecycle() {
    let gr = new_gr(3, 10);
    unsafe { fs_grassmannian_free(gr) };
    // Invalid dimensions are rejected before allocation.
    let mut handle: *mut FsGrassmannian = ptr::null_mut();
    let status = unsafe { fs_grassmannian_new(5, 5, &mut handle) };
    assert_eq!(status, FsStatus::InvalidArgument);
    assert!(handle.is_null());
}

#[test]
fn lr_expansion_roundtrip() {
    let lambda = [2u32, 1];
    let mu = [1u32];
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { fs_lr_expand(lambda.as_ptr(), 2, mu.as_ptr(), 1, &mut out) };
    assert_eq!(status, FsStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["terms"][0]["partition"], serde_json::json!([3, 1]));
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);

    // Not weakly decreasing.
    let bad = [1u32, 2];
    let status = unsafe { fs_lr_expand(bad.as_ptr(), 2, mu.as_ptr(), 1, &mut out) };
    assert_eq!(status, FsStatus::InvalidArgument);
}

#[test]
fn weyl_dimensions() {
    let mut dim = 0u64;
    let parts = [2u32];
    assert_eq!(
        unsafe { fs_weyl_dim(parts.as_ptr(), 1, 3, &mut dim) },
        FsStatus::Ok
    );
    assert_eq!(dim, 6);
    let big = [3u32, 3, 2, 2, 2, 2, 2, 2, 2, 2];
    assert_eq!(
        unsafe { fs_weyl_dim(big.as_ptr(), big.len(), 10, &mut dim) },
        FsStatus::Ok
    );
    assert_eq!(dim, 45);
    // Empty partition through a null pointer with length zero.
    assert_eq!(
        unsafe { fs_weyl_dim(ptr::null(), 0, 7, &mut dim) },
        FsStatus::Ok
    );
    assert_eq!(dim, 1);
}

#[test]
fn fano_degrees() {
    let degrees = [2u32, 2, 2];
    let mut value = 0i64;
    let gr39 = new_gr(3, 9);
    assert_eq!(
        unsafe { fs_fano_degree(gr39, degrees.as_ptr(), 3, &mut value) },
        FsStatus::Ok
    );
    assert_eq!(value, 1024);
    unsafe { fs_grassmannian_free(gr39) };

    let gr310 = new_gr(3, 10);
    assert_eq!(
        unsafe { fs_fano_degree(gr310, degrees.as_ptr(), 3, &mut value) },
        FsStatus::Ok
    );
    assert_eq!(value, 11264);

    // Section bundle larger than the ambient dimension.
    let too_big = [2u32, 2, 2, 2];
    assert_eq!(
        unsafe { fs_fano_degree(gr310, too_big.as_ptr(), 4, &mut value) },
        FsStatus::DomainError
    );
    unsafe { fs_grassmannian_free(gr310) };
}

#[test]
fn bott_results() {
    let gr = new_gr(3, 10);
    let mut out: *mut c_char = ptr::null_mut();
    let weight = [8u32, 1, 1];
    assert_eq!(
        unsafe { fs_bott_cohomology(gr, weight.as_ptr(), 3, &mut out) },
        FsStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["result"]["degree"], 7);
    assert_eq!(v["result"]["dimension"], 1);

    let singular = [2u32];
    assert_eq!(
        unsafe { fs_bott_cohomology(gr, singular.as_ptr(), 1, &mut out) },
        FsStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["result"], "zero");

    let too_many = [4u32, 3, 2, 1];
    assert_eq!(
        unsafe { fs_bott_cohomology(gr, too_many.as_ptr(), 4, &mut out) },
        FsStatus::DomainError
    );
    unsafe { fs_grassmannian_free(gr) };
}

#[test]
fn riemann_roch_and_euler_check() {
    let gr = new_gr(3, 10);
    let degrees = [2u32, 2, 2];
    let mut chi = 0i64;
    for (m, want) in [(0i64, -2816i64), (1, 0), (2, 2816), (3, 16896)] {
        assert_eq!(
            unsafe { fs_hrr_chi(gr, degrees.as_ptr(), 3, m, &mut chi) },
            FsStatus::Ok
        );
        assert_eq!(chi, want, "m = {m}");
    }
    // Not a threefold on Gr(3,9).
    let gr39 = new_gr(3, 9);
    assert_eq!(
        unsafe { fs_hrr_chi(gr39, degrees.as_ptr(), 3, 0, &mut chi) },
        FsStatus::DomainError
    );
    unsafe { fs_grassmannian_free(gr39) };
    unsafe { fs_grassmannian_free(gr) };

    let mut euler = 0i64;
    assert_eq!(unsafe { fs_koszul_euler_check(&mut euler) }, FsStatus::Ok);
    assert_eq!(euler, -2816);
}

#[test]
fn null_pointers_are_rejected_not_crashed() {
    let mut out: *mut c_char = ptr::null_mut();
    let mut value = 0i64;
    let degrees = [2u32, 2, 2];
    assert_eq!(
        unsafe { fs_fano_degree(ptr::null(), degrees.as_ptr(), 3, &mut value) },
        FsStatus::NullPointer
    );
    assert_eq!(
        unsafe { fs_lr_expand(ptr::null(), 2, ptr::null(), 0, &mut out) },
        FsStatus::NullPointer
    );
    let gr = new_gr(3, 10);
    assert_eq!(
        unsafe { fs_bott_cohomology(gr, ptr::null(), 3, &mut out) },
        FsStatus::NullPointer
    );
    unsafe { fs_grassmannian_free(gr) };
    unsafe { fs_string_free(ptr::null_mut()) };
}
