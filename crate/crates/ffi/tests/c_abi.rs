use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use ftr_ffi::*;

fn last_error() -> String {
    let p = ftr_last_error();
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { ftr_string_free(p) };
    s
}

fn modern() -> *mut FtrConstants {
    let mut set = ptr::null_mut();
    assert_eq!(unsafe { ftr_constants_modern(50, &mut set) }, FtrStatus::Ok);
    set
}

#[test]
fn constants_round_trip() {
    let set = modern();
    let mut c = 0.0;
    let name = CString::new("c").unwrap();
    assert_eq!(
        unsafe { ftr_constants_get(set, name.as_ptr(), &mut c) },
        FtrStatus::Ok
    );
    assert_eq!(c, 2.99792458e10);
    let missing = CString::new("nope").unwrap();
    assert_eq!(
        unsafe { ftr_constants_get(set, missing.as_ptr(), &mut c) },
        FtrStatus::MissingConstant
    );
    assert!(last_error().contains("nope"));
    unsafe { ftr_constants_free(set) };
}

#[test]
fn null_and_precision_errors() {
    assert_eq!(
        unsafe { ftr_constants_modern(50, ptr::null_mut()) },
        FtrStatus::NullPointer
    );
    let mut set = ptr::null_mut();
    assert_eq!(
        unsafe { ftr_constants_modern(10, &mut set) },
        FtrStatus::Config
    );
    assert!(set.is_null());
    let mut g = 0.0;
    assert_eq!(
        unsafe { ftr_derive_g(ptr::null(), &mut g) },
        FtrStatus::NullPointer
    );
    unsafe {
        ftr_constants_free(ptr::null_mut());
        ftr_report_free(ptr::null_mut());
        ftr_string_free(ptr::null_mut());
    }
}

#[test]
fn parse_errors_carry_the_line() {
    let text = CString::new("c 2.99792458e10 cm.s-1 modern\nh 6.6e-27\n").unwrap();
    let mut set = ptr::null_mut();
    assert_eq!(
        unsafe { ftr_constants_parse(text.as_ptr(), 50, &mut set) },
        FtrStatus::Parse
    );
    assert!(last_error().contains("line 2"));
}

#[test]
fn derivations() {
    let mut n = 0.0;
    assert_eq!(unsafe { ftr_theoretical_n(&mut n) }, FtrStatus::Ok);
    assert!((n / 2.3622e79 - 1.0).abs() < 1e-4);
    let set = modern();
    let mut g = 0.0;
    assert_eq!(unsafe { ftr_derive_g(set, &mut g) }, FtrStatus::Ok);
    assert!((g / 6.6665e-8 - 1.0).abs() < 2e-3);
    let mut fails = 99;
    assert_eq!(
        unsafe { ftr_chain_failures(set, &mut fails) },
        FtrStatus::Ok
    );
    assert_eq!(fails, 0);
    unsafe { ftr_constants_free(set) };
}

#[test]
fn monte_carlo_and_zoo() {
    let mut mc = FtrMcResult::default();
    assert_eq!(
        unsafe { ftr_mc_centroid(100, 1000, 3, 1.0, &mut mc) },
        FtrStatus::Ok
    );
    assert!(mc.passed);
    assert_eq!(
        unsafe { ftr_mc_centroid(0, 1000, 3, 1.0, &mut mc) },
        FtrStatus::Domain
    );
    let mut z = FtrZooResult::default();
    assert_eq!(unsafe { ftr_zoo_solve(&mut z) }, FtrStatus::Ok);
    assert_eq!(
        (z.size, z.boys, z.girls, z.winner_score, z.winner_is_boy),
        (5, 3, 2, 4, true)
    );
}

#[test]
fn report_handles() {
    let set = modern();
    let mut rep = ptr::null_mut();
    assert_eq!(
        unsafe { ftr_report_derive(set, 6, &mut rep) },
        FtrStatus::Ok
    );
    let mut rows = 0usize;
    assert_eq!(
        unsafe { ftr_report_row_count(rep, &mut rows) },
        FtrStatus::Ok
    );
    assert!(rows >= 12);
    assert_eq!(unsafe { ftr_report_passed(rep) }, FtrStatus::Ok);
    let mut text = ptr::null_mut();
    assert_eq!(
        unsafe { ftr_report_emit(rep, FtrFormat::Json, &mut text) },
        FtrStatus::Ok
    );
    let json = unsafe { CStr::from_ptr(text) }.to_str().unwrap().to_owned();
    assert!(json.contains("\"passed\": true"));
    unsafe {
        ftr_string_free(text);
        ftr_report_free(rep);
        ftr_constants_free(set);
    }
    let v = unsafe { CStr::from_ptr(ftr_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include "ftr.h"

int main(void) {
    FtrConstants *set = NULL;
    double g = 0.0;
    FtrZooResult zoo;
    FtrStatus s = ftr_constants_modern(50, &set);
    if (s != FTR_STATUS_OK) return 10;
    if (ftr_derive_g(set, &g) != FTR_STATUS_OK) return 11;
    if (ftr_constants_get(set, "missing", &g) != FTR_STATUS_MISSING_CONSTANT) return 12;
    char *msg = ftr_last_error();
    if (msg == NULL) return 13;
    ftr_string_free(msg);
    if (ftr_zoo_solve(&zoo) != FTR_STATUS_OK || zoo.size != 5) return 14;
    ftr_derive_g(set, &g);
    printf("%.4e\n", g);
    ftr_constants_free(set);
    return 0;
}
"#;

#[test]
fn header_compiles_and_links_from_c() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = crate_dir.join("include").join("ftr.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "ftr_constants_modern",
        "ftr_report_emit",
        "ftr_last_error",
        "FTR_STATUS_OK",
    ] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libftr_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let bin = dir.path().join("main");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "6.6650e-08");
}
