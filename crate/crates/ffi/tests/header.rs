//! Compiles `tests/c/smoke.c` against the generated header and links it to
//! the static library produced next to the test binary.

use std::env;
use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn cc() -> String {
    env::var("CC").unwrap_or_else(|_| "cc".into())
}

#[test]
fn header_is_current_and_complete() {
    let header = std::fs::read_to_string(crate_dir().join("include/changhee.h")).unwrap();
    for symbol in [
        "ch_spec_new",
        "ch_spec_from_json",
        "ch_spec_free",
        "ch_mp_first",
        "ch_mp_second",
        "ch_mp_second_lah",
        "ch_poly_cauchy_first",
        "ch_poly_cauchy_second",
        "ch_run_suite",
        "ch_report_json",
        "ch_report_free",
        "ch_string_free",
        "ch_last_error",
        "CH_STATUS_INVALID_PARAMS",
        "typedef struct ChSpec ChSpec",
    ] {
        assert!(header.contains(symbol), "{symbol}");
    }
}

#[test]
fn header_compiles_as_c() {
    let status = Command::new(cc())
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .status()
        .expect("C compiler available");
    assert!(status.success());
}

fn static_lib() -> PathBuf {
    // target/<profile>/deps/<test binary>
    let exe = env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap().to_path_buf();
    profile_dir.join("libchanghee_ffi.a")
}

#[test]
fn c_program_links_and_runs() {
    let lib = static_lib();
    assert!(lib.exists(), "{} missing; cargo builds it with the test targets", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new(cc())
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "link failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
