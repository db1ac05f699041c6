use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use coglobe::globular::representable;
use coglobe_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { cg_string_free(s) };
    out
}

fn last_error() -> String {
    let e = cg_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_string()
}

#[test]
fn globular_round_trip_and_validation() {
    let json = CString::new(serde_json::to_string(&representable(2, 2).unwrap().to_doc()).unwrap()).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cg_globular_from_json(json.as_ptr(), &mut g) }, CgStatus::Ok);
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { cg_globular_validate(g, &mut report) }, CgStatus::Ok);
    assert!(take(report).contains("\"pass\":true"));
    for ring in [CgRing::Integers, CgRing::F2] {
        let mut report = ptr::null_mut();
        assert_eq!(unsafe { cg_globular_validate_coalgebra(g, ring, 4, &mut report) }, CgStatus::Ok);
        take(report);
    }
    unsafe { cg_globular_free(g) };
}

#[test]
fn malformed_input_is_reported() {
    let bad = CString::new("{ not json").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cg_globular_from_json(bad.as_ptr(), &mut g) }, CgStatus::InvalidInput);
    assert!(g.is_null());
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { cg_globular_from_json(ptr::null(), &mut g) }, CgStatus::InvalidInput);
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { cg_globular_validate(ptr::null(), &mut report) }, CgStatus::InvalidInput);
    assert!(last_error().contains("null"));
}

#[test]
fn projective_plane_through_the_abi() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/rp2.json");
    let json = CString::new(std::fs::read_to_string(path).unwrap()).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { cg_complex_from_json(json.as_ptr(), &mut c) }, CgStatus::Ok);
    let mut ranks = [0usize; 4];
    let mut len = 0;
    assert_eq!(unsafe { cg_complex_cohomology(c, ranks.as_mut_ptr(), ranks.len(), &mut len) }, CgStatus::Ok);
    assert_eq!(&ranks[..len], &[1, 1, 1]);
    let mut nonzero = false;
    assert_eq!(unsafe { cg_complex_sq_nonzero(c, 1, 1, 0, &mut nonzero) }, CgStatus::Ok);
    assert!(nonzero);
    assert_eq!(unsafe { cg_complex_sq_nonzero(c, 1, 1, 5, &mut nonzero) }, CgStatus::InvalidInput);
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { cg_complex_validate_coalgebra(c, 4, &mut report) }, CgStatus::Ok);
    take(report);
    unsafe { cg_complex_free(c) };
}

#[test]
fn simplices_are_sadcs() {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { cg_complex_simplex(3, &mut c) }, CgStatus::Ok);
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { cg_complex_validate_sadc(c, &mut report) }, CgStatus::Ok);
    take(report);
    unsafe { cg_complex_free(c) };
}

#[test]
fn orientals_and_bounds() {
    let mut o = ptr::null_mut();
    assert_eq!(unsafe { cg_oriental(2, 100_000, 64, &mut o) }, CgStatus::Ok);
    assert_eq!(unsafe { cg_omega_len(o) }, 8);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { cg_omega_to_json(o, &mut json) }, CgStatus::Ok);
    assert!(take(json).starts_with("{\"elements\""));
    unsafe { cg_omega_free(o) };

    let mut o = ptr::null_mut();
    assert_eq!(unsafe { cg_oriental(3, 5, 64, &mut o) }, CgStatus::BoundExceeded);
    assert!(o.is_null());
    assert_eq!(unsafe { cg_omega_len(ptr::null()) }, 0);
}

#[test]
fn command_line_through_the_abi() {
    let args: Vec<CString> = ["compare-atoms", "--n", "2"].iter().map(|a| CString::new(*a).unwrap()).collect();
    let argv: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cg_cli_run(argv.len(), argv.as_ptr(), &mut out) }, 0);
    assert!(take(out).contains("pass"));

    let args: Vec<CString> = ["compare-atoms", "--nope"].iter().map(|a| CString::new(*a).unwrap()).collect();
    let argv: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cg_cli_run(argv.len(), argv.as_ptr(), &mut out) }, 2);
    take(out);
    assert!(last_error().contains("--nope"));
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/coglobe.h");
    assert!(header.exists());
    let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"]).arg(&header).status() else {
        eprintln!("no C compiler; skipping the syntax check");
        return;
    };
    assert!(status.success());
}
