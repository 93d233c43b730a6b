//! C ABI over the depolar library.
//!
//! Objects are opaque handles created by `*_parse` functions and released with
//! the matching `*_free`. Every fallible call returns a `DpStatus`; on failure
//! `dp_last_error` describes the problem. Strings returned through out-pointers
//! are owned by the caller and released with `dp_string_free`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use depolar::algebra::{check_identity, StructureAlgebra};
use depolar::depolarization::solve_poisson;
use depolar::format;
use depolar::identity::{implies_all, polarize_coeffs, Identity};
use depolar::operad::{dim_arity3, free_dims, is_self_dual, orbit_span};
use depolar::superalgebra::{check_signed, SignedIdentity};
use depolar::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Compute = 5,
    Panic = 6,
}

/// A degree-3 identity.
pub struct DpIdentity(Identity);

/// A finite-dimensional algebra given by structure constants.
pub struct DpAlgebra(StructureAlgebra);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(status: DpStatus, msg: impl Into<String>) -> DpStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> DpStatus {
    let status = match e {
        Error::Parse { .. } => DpStatus::Parse,
        Error::Dimension { .. } | Error::InvalidArgument(_) | Error::DegreeBound(_) | Error::Grading { .. } => {
            DpStatus::InvalidArgument
        }
        _ => DpStatus::Compute,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> DpStatus + UnwindSafe) -> DpStatus {
    catch_unwind(f).unwrap_or_else(|_| fail(DpStatus::Panic, "internal panic"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, DpStatus> {
    if s.is_null() {
        return Err(fail(DpStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(DpStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn collect_family<'a>(ids: *const *const DpIdentity, len: usize) -> Result<Vec<&'a Identity>, DpStatus> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if ids.is_null() {
        return Err(fail(DpStatus::NullPointer, "null family"));
    }
    std::slice::from_raw_parts(ids, len)
        .iter()
        .map(|&p| p.as_ref().map(|h| &h.0).ok_or_else(|| fail(DpStatus::NullPointer, "null identity in family")))
        .collect()
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> DpStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            DpStatus::Ok
        }
        Err(_) => fail(DpStatus::Compute, "output contains NUL"),
    }
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(DpStatus::NullPointer, concat!("null ", stringify!($p)));
        })+
    };
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub extern "C" fn dp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn dp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse an identity in the `left:` / `right:` text format.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dp_identity_parse(src: *const c_char, out: *mut *mut DpIdentity) -> DpStatus {
    guard(|| {
        non_null!(out);
        let src = try_ffi!(text(src));
        match format::parse_identity(src, "<input>") {
            Ok(id) => {
                *out = Box::into_raw(Box::new(DpIdentity(id)));
                DpStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `id` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dp_identity_free(id: *mut DpIdentity) {
    if !id.is_null() {
        drop(Box::from_raw(id));
    }
}

/// # Safety
/// `id` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dp_identity_to_string(id: *const DpIdentity, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        non_null!(id, out);
        put_string(out, format::write_identity(&(*id).0))
    })
}

/// The polarized coefficients λ1..λ12 written as `lambda: ...`.
///
/// # Safety
/// `id` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dp_identity_polarize(id: *const DpIdentity, out: *mut *mut c_char) -> DpStatus {
    guard(|| {
        non_null!(id, out);
        put_string(out, format::write_lambda(&polarize_coeffs(&(*id).0)))
    })
}

/// Whether the `len` identities in `family` imply `target`.
///
/// # Safety
/// `family` must point to `len` live handles, `target` must be live and
/// `implied` valid.
#[no_mangle]
pub unsafe extern "C" fn dp_implies(
    family: *const *const DpIdentity,
    len: usize,
    target: *const DpIdentity,
    implied: *mut bool,
) -> DpStatus {
    guard(|| {
        non_null!(target, implied);
        let fam: Vec<Identity> = try_ffi!(collect_family(family, len)).into_iter().cloned().collect();
        *implied = implies_all(&fam, &(*target).0).holds();
        DpStatus::Ok
    })
}

/// The Poisson identity obtained by fitting the JacAss family.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dp_solve_poisson(out: *mut *mut DpIdentity) -> DpStatus {
    guard(|| {
        non_null!(out);
        match solve_poisson() {
            Ok(s) => {
                *out = Box::into_raw(Box::new(DpIdentity(s.identity)));
                DpStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Dimension of the arity-3 component of the operad defined by the family.
///
/// # Safety
/// `family` must point to `len` live handles and `dim` be valid.
#[no_mangle]
pub unsafe extern "C" fn dp_operad_dim3(family: *const *const DpIdentity, len: usize, dim: *mut usize) -> DpStatus {
    guard(|| {
        non_null!(dim);
        let fam: Vec<Identity> = try_ffi!(collect_family(family, len)).into_iter().cloned().collect();
        *dim = dim_arity3(&fam);
        DpStatus::Ok
    })
}

/// # Safety
/// `family` must point to `len` live handles and `self_dual` be valid.
#[no_mangle]
pub unsafe extern "C" fn dp_operad_is_self_dual(
    family: *const *const DpIdentity,
    len: usize,
    self_dual: *mut bool,
) -> DpStatus {
    guard(|| {
        non_null!(self_dual);
        let fam: Vec<Identity> = try_ffi!(collect_family(family, len)).into_iter().cloned().collect();
        *self_dual = is_self_dual(&orbit_span(&fam));
        DpStatus::Ok
    })
}

/// Writes the dimensions of degrees 0..=max_degree into `dims`, which must
/// hold `max_degree + 1` entries.
///
/// # Safety
/// `family` must point to `len` live handles and `dims` to `dims_len` writable entries.
#[no_mangle]
pub unsafe extern "C" fn dp_operad_free_dims(
    family: *const *const DpIdentity,
    len: usize,
    max_degree: usize,
    dims: *mut usize,
    dims_len: usize,
) -> DpStatus {
    guard(|| {
        non_null!(dims);
        if dims_len < max_degree + 1 {
            return fail(DpStatus::InvalidArgument, "output buffer too short");
        }
        let fam: Vec<Identity> = try_ffi!(collect_family(family, len)).into_iter().cloned().collect();
        match free_dims(&fam, max_degree) {
            Ok(d) => {
                std::slice::from_raw_parts_mut(dims, d.len()).copy_from_slice(&d);
                DpStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Parse an algebra in the `dim` / `deg` / `e i j = ...` text format.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dp_algebra_parse(src: *const c_char, out: *mut *mut DpAlgebra) -> DpStatus {
    guard(|| {
        non_null!(out);
        let src = try_ffi!(text(src));
        match format::parse_algebra(src, "<input>") {
            Ok(a) => {
                *out = Box::into_raw(Box::new(DpAlgebra(a)));
                DpStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `alg` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dp_algebra_free(alg: *mut DpAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Check the identity on every triple of basis vectors. Graded algebras use
/// the Koszul sign rule.
///
/// # Safety
/// `alg` and `id` must be live handles and `passed` valid.
#[no_mangle]
pub unsafe extern "C" fn dp_algebra_verify(alg: *const DpAlgebra, id: *const DpIdentity, passed: *mut bool) -> DpStatus {
    guard(|| {
        non_null!(alg, id, passed);
        let (alg, id) = (&(*alg).0, &(*id).0);
        let verdict = if alg.grading().is_some() {
            check_signed(alg, &SignedIdentity::koszul(id))
        } else {
            check_identity(alg, id)
        };
        match verdict {
            Ok(v) => {
                *passed = v.passed();
                DpStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}
