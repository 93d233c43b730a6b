use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use depolar_ffi::*;

const TL: &str = "left: 2 -2 1 -1 1 -1\nright: -1 1 -2 -1 1 2\n";
const JACOBI: &str = "left: 1 -1 -1 -1 1 1\nright: -1 1 1 1 -1 -1\n";
const ASSOC: &str = "left: 1 1 -1 0 -1 0\nright: -1 0 1 -1 0 1\n";

fn parse(src: &str) -> *mut DpIdentity {
    let c = CString::new(src).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { dp_identity_parse(c.as_ptr(), &mut out) }, DpStatus::Ok);
    out
}

fn take_string(s: *mut c_char) -> String {
    let r = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { dp_string_free(s) };
    r
}

#[test]
fn identity_roundtrip_and_poisson() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { dp_solve_poisson(&mut p) }, DpStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { dp_identity_to_string(p, &mut s) }, DpStatus::Ok);
    assert_eq!(take_string(s), "left: 3 1 0 -1 -1 1\nright: -3 0 0 0 0 0\n");
    assert_eq!(unsafe { dp_identity_polarize(p, &mut s) }, DpStatus::Ok);
    assert!(take_string(s).starts_with("lambda: 4 -4 0 4 2"));
    unsafe { dp_identity_free(p) };
}

#[test]
fn operad_of_transposed_poisson() {
    let ids = [parse(TL), parse(JACOBI), parse(ASSOC)];
    let fam: Vec<*const DpIdentity> = ids.iter().map(|&p| p as *const _).collect();
    let mut dim = 0usize;
    assert_eq!(unsafe { dp_operad_dim3(fam.as_ptr(), 3, &mut dim) }, DpStatus::Ok);
    assert_eq!(dim, 6);
    let mut sd = false;
    assert_eq!(unsafe { dp_operad_is_self_dual(fam.as_ptr(), 3, &mut sd) }, DpStatus::Ok);
    assert!(sd);
    let mut dims = [0usize; 5];
    assert_eq!(unsafe { dp_operad_free_dims(fam.as_ptr(), 3, 4, dims.as_mut_ptr(), 5) }, DpStatus::Ok);
    assert_eq!(dims, [1, 1, 1, 2, 3]);
    assert_eq!(unsafe { dp_operad_free_dims(fam.as_ptr(), 3, 4, dims.as_mut_ptr(), 4) }, DpStatus::InvalidArgument);
    let mut implied = true;
    assert_eq!(unsafe { dp_implies(fam.as_ptr(), 1, ids[1], &mut implied) }, DpStatus::Ok);
    assert!(!implied);
    for p in ids {
        unsafe { dp_identity_free(p) };
    }
}

#[test]
fn algebra_verify() {
    let src = CString::new("dim 2\ne 1 2 = 0 1\ne 2 1 = 0 -1\n").unwrap();
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { dp_algebra_parse(src.as_ptr(), &mut alg) }, DpStatus::Ok);
    let jac = parse(JACOBI);
    let mut passed = false;
    assert_eq!(unsafe { dp_algebra_verify(alg, jac, &mut passed) }, DpStatus::Ok);
    assert!(passed);
    unsafe {
        dp_identity_free(jac);
        dp_algebra_free(alg);
    }
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("left: 1 2 3\n").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { dp_identity_parse(bad.as_ptr(), &mut out) }, DpStatus::Parse);
    assert!(out.is_null());
    let msg = unsafe { CStr::from_ptr(dp_last_error()) }.to_str().unwrap();
    assert!(msg.starts_with("<input>:1:"), "{msg}");
    assert_eq!(unsafe { dp_identity_parse(ptr::null(), &mut out) }, DpStatus::NullPointer);
    let mut dim = 0usize;
    assert_eq!(unsafe { dp_operad_dim3(ptr::null(), 2, &mut dim) }, DpStatus::NullPointer);
    unsafe {
        dp_identity_free(ptr::null_mut());
        dp_string_free(ptr::null_mut());
    }
}

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include").join("depolar.h")
}

#[test]
fn header_declares_api() {
    let h = std::fs::read_to_string(header()).unwrap();
    for name in [
        "dp_last_error",
        "dp_identity_parse",
        "dp_identity_free",
        "dp_implies",
        "dp_solve_poisson",
        "dp_operad_free_dims",
        "dp_algebra_verify",
        "typedef struct DpIdentity DpIdentity",
        "DP_STATUS_PARSE = 3",
    ] {
        assert!(h.contains(name), "{name}");
    }
}

#[test]
fn c_program_links_against_staticlib() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler, skipping");
        return;
    }
    let debug = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = debug.join("libdepolar_ffi.a");
    if !lib.exists() {
        eprintln!("{} missing, skipping", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "depolar.h"
int main(void) {
    DpIdentity *p = NULL;
    char *s = NULL;
    if (dp_solve_poisson(&p) != DP_STATUS_OK) return 1;
    if (dp_identity_to_string(p, &s) != DP_STATUS_OK) return 2;
    fputs(s, stdout);
    dp_string_free(s);
    dp_identity_free(p);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("main");
    let status = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "left: 3 1 0 -1 -1 1\nright: -3 0 0 0 0 0\n");
}
