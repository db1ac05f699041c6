//! C ABI for `coglobe`.
//!
//! Objects cross the boundary as opaque handles created by `cg_*_from_json`
//! or a constructor and released with the matching `*_free`. Every fallible
//! call returns a [`CgStatus`]; on failure, [`cg_last_error`] describes the
//! problem until the next call on the same thread. Strings handed out by the
//! library are NUL-terminated UTF-8 and must be released with
//! [`cg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use coglobe::chain::BasedComplex;
use coglobe::coalgebra::{validate_cosymmetric, Coalgebra};
use coglobe::globular::{validate_globular, GlobularCoalgebra, GlobularDoc, GlobularSet};
use coglobe::omega::{oriental, validate_sadc, Bounds, OmegaCat};
use coglobe::simplicial::{cohomology_f2, steenrod_square, ComplexFile, SimplicialComplex, SteenrodCoalgebra};
use coglobe::{Error, Report, F2};
use num_bigint::BigInt;

/// Result of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CgStatus {
    Ok = 0,
    /// A check ran and found violations; the report is still produced.
    ValidationFailed = 1,
    /// Malformed input: bad JSON, unknown names, null pointers.
    InvalidInput = 2,
    /// A closure bound was exceeded.
    BoundExceeded = 3,
    /// The input violates a precondition of the operation.
    Precondition = 4,
    /// A bug in the library; the message carries the panic payload.
    Internal = 5,
}

/// Coefficient ring selector.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CgRing {
    Integers = 0,
    F2 = 1,
}

/// A finite reflexive globular set.
pub struct CgGlobular(GlobularSet);

/// An ordered simplicial complex with its cup-i coalgebra.
pub struct CgComplex(SteenrodCoalgebra);

/// A generated ω-category over the integers, with the complex naming its cells.
pub struct CgOmega {
    cat: OmegaCat<BigInt>,
    complex: BasedComplex<BigInt>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn status_of(e: &Error) -> CgStatus {
    match e {
        Error::BoundExceeded(_) => CgStatus::BoundExceeded,
        Error::Parse(_) | Error::Json(_) | Error::Io(_) | Error::UnknownCell(_) => CgStatus::InvalidInput,
        _ => CgStatus::Precondition,
    }
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<CgStatus, (CgStatus, String)>) -> CgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {message}"));
            CgStatus::Internal
        }
    }
}

fn lib(e: Error) -> (CgStatus, String) {
    (status_of(&e), e.to_string())
}

fn invalid(message: impl Into<String>) -> (CgStatus, String) {
    (CgStatus::InvalidInput, message.into())
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (CgStatus, String)> {
    if s.is_null() {
        return Err(invalid(format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| invalid(format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (CgStatus, String)> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    *out = CString::new(s).map_err(|_| invalid("output contains NUL"))?.into_raw();
    Ok(())
}

unsafe fn write_report(out: *mut *mut c_char, report: &Report) -> Result<CgStatus, (CgStatus, String)> {
    write_string(out, serde_json::to_string(report).expect("serializable"))?;
    Ok(if report.pass { CgStatus::Ok } else { CgStatus::ValidationFailed })
}

unsafe fn handle<'a, T>(h: *const T, what: &str) -> Result<&'a T, (CgStatus, String)> {
    h.as_ref().ok_or_else(|| invalid(format!("{what} handle is null")))
}

/// The message of the last failed call on this thread, or null. Owned by the
/// library; valid until the next call.
#[no_mangle]
pub extern "C" fn cg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a globular set from its JSON form. The relations are not checked;
/// see [`cg_globular_validate`].
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_globular_from_json(json: *const c_char, out: *mut *mut CgGlobular) -> CgStatus {
    guard(|| {
        let doc: GlobularDoc = serde_json::from_str(read_str(json, "json")?).map_err(|e| invalid(e.to_string()))?;
        let set = GlobularSet::from_doc(&doc).map_err(lib)?;
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        *out = Box::into_raw(Box::new(CgGlobular(set)));
        Ok(CgStatus::Ok)
    })
}

/// # Safety
/// `h` must come from [`cg_globular_from_json`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cg_globular_free(h: *mut CgGlobular) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Checks the globular relations; writes the JSON report to `report`.
///
/// # Safety
/// `h` must be a live handle and `report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_globular_validate(h: *const CgGlobular, report: *mut *mut c_char) -> CgStatus {
    guard(|| write_report(report, &validate_globular(&handle(h, "globular")?.0)))
}

/// Checks the cosymmetry relation and counit of the globular coalgebra up
/// to `kmax`; writes the JSON report to `report`.
///
/// # Safety
/// `h` must be a live handle and `report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_globular_validate_coalgebra(
    h: *const CgGlobular,
    ring: CgRing,
    kmax: usize,
    report: *mut *mut c_char,
) -> CgStatus {
    guard(|| {
        let set = &handle(h, "globular")?.0;
        let r = match ring {
            CgRing::Integers => validate_cosymmetric(&GlobularCoalgebra::<BigInt>::new(set).map_err(lib)?, kmax),
            CgRing::F2 => validate_cosymmetric(&GlobularCoalgebra::<F2>::new(set).map_err(lib)?, kmax),
        };
        write_report(report, &r)
    })
}

/// Parses `{ "maximal_simplices": [[0, 1, 2], ...] }`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_complex_from_json(json: *const c_char, out: *mut *mut CgComplex) -> CgStatus {
    guard(|| {
        let file: ComplexFile = serde_json::from_str(read_str(json, "json")?).map_err(|e| invalid(e.to_string()))?;
        let complex = SimplicialComplex::from_file(&file).map_err(lib)?;
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        *out = Box::into_raw(Box::new(CgComplex(SteenrodCoalgebra::new(complex))));
        Ok(CgStatus::Ok)
    })
}

/// The standard `n`-simplex.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_complex_simplex(n: usize, out: *mut *mut CgComplex) -> CgStatus {
    guard(|| {
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        *out = Box::into_raw(Box::new(CgComplex(SteenrodCoalgebra::standard_simplex(n))));
        Ok(CgStatus::Ok)
    })
}

/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cg_complex_free(h: *mut CgComplex) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Checks the cosymmetry relation of the cup-i coalgebra up to `kmax`.
///
/// # Safety
/// `h` must be a live handle and `report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_complex_validate_coalgebra(h: *const CgComplex, kmax: usize, report: *mut *mut c_char) -> CgStatus {
    guard(|| write_report(report, &validate_cosymmetric(&handle(h, "complex")?.0, kmax)))
}

/// Checks that the integral chains form a strong augmented directed complex.
///
/// # Safety
/// `h` must be a live handle and `report` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_complex_validate_sadc(h: *const CgComplex, report: *mut *mut c_char) -> CgStatus {
    guard(|| write_report(report, &validate_sadc(&handle(h, "complex")?.0.simplicial().chains())))
}

/// Writes up to `cap` mod 2 Betti numbers to `ranks` and their count to
/// `len`. When `len > cap` the call succeeds with a truncated array.
///
/// # Safety
/// `h` must be a live handle, `ranks` valid for `cap` writes, `len` valid.
#[no_mangle]
pub unsafe extern "C" fn cg_complex_cohomology(h: *const CgComplex, ranks: *mut usize, cap: usize, len: *mut usize) -> CgStatus {
    guard(|| {
        let c = &handle(h, "complex")?.0;
        if len.is_null() || (ranks.is_null() && cap > 0) {
            return Err(invalid("output pointer is null"));
        }
        let r = cohomology_f2(c.complex()).ranks();
        for (j, v) in r.iter().take(cap).enumerate() {
            *ranks.add(j) = *v;
        }
        *len = r.len();
        Ok(CgStatus::Ok)
    })
}

/// Sets `nonzero` to whether `Sq^k` is non-zero on the `index`-th generator
/// of `H^degree`.
///
/// # Safety
/// `h` must be a live handle and `nonzero` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_complex_sq_nonzero(
    h: *const CgComplex,
    k: usize,
    degree: usize,
    index: usize,
    nonzero: *mut bool,
) -> CgStatus {
    guard(|| {
        let c = &handle(h, "complex")?.0;
        if nonzero.is_null() {
            return Err(invalid("output pointer is null"));
        }
        let hc = cohomology_f2(c.complex());
        let alpha = hc
            .generators(degree)
            .get(index)
            .ok_or_else(|| invalid(format!("H^{degree} has no generator {index}")))?;
        let square = steenrod_square(c, k, alpha).map_err(lib)?;
        *nonzero = square.degree() < hc.ranks().len() && hc.class_of(&square).map_err(lib)?.iter().any(|b| *b);
        Ok(CgStatus::Ok)
    })
}

/// Generates the oriental of the `n`-simplex within the given bounds.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_oriental(n: usize, max_elements: usize, max_coeff: u64, out: *mut *mut CgOmega) -> CgStatus {
    guard(|| {
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        let cat = oriental(n, Bounds { max_elements, max_coeff }).map_err(lib)?;
        let complex = SimplicialComplex::standard_simplex(n).chains();
        *out = Box::into_raw(Box::new(CgOmega { cat, complex }));
        Ok(CgStatus::Ok)
    })
}

/// Number of elements; 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cg_omega_len(h: *const CgOmega) -> usize {
    h.as_ref().map_or(0, |o| o.cat.len())
}

/// Writes the JSON document of the ω-category to `json`.
///
/// # Safety
/// `h` must be a live handle and `json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_omega_to_json(h: *const CgOmega, json: *mut *mut c_char) -> CgStatus {
    guard(|| {
        let o = handle(h, "omega")?;
        write_string(json, serde_json::to_string(&o.cat.to_doc(&o.complex)).expect("serializable"))?;
        Ok(CgStatus::Ok)
    })
}

/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cg_omega_free(h: *mut CgOmega) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Runs the command line with `argc` arguments (without the program name).
/// Standard output is written to `out`; the return value is the exit code,
/// or -1 when the arguments themselves are unusable.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cg_cli_run(argc: usize, argv: *const *const c_char, out: *mut *mut c_char) -> i32 {
    let mut code = -1;
    let status = guard(|| {
        if argv.is_null() && argc > 0 {
            return Err(invalid("argv is null"));
        }
        let mut args = vec!["coglobe".to_string()];
        for j in 0..argc {
            args.push(read_str(*argv.add(j), "argument")?.to_string());
        }
        let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
        code = coglobe::cli::run(args, &mut stdout, &mut stderr);
        if !stderr.is_empty() {
            set_error(String::from_utf8_lossy(&stderr).trim_end().to_string());
        }
        write_string(out, String::from_utf8(stdout).map_err(|_| invalid("output is not UTF-8"))?)?;
        Ok(CgStatus::Ok)
    });
    if status == CgStatus::Ok {
        code
    } else {
        -1
    }
}
