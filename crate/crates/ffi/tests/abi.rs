use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use srw_ffi::*;

unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    srw_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = srw_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn bipyramid_ideal_and_decomposition() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(srw_complex_bipyramid(4, &mut c), SrwStatus::Ok);
        let mut i = ptr::null_mut();
        assert_eq!(srw_ideal_stanley_reisner(c, &mut i), SrwStatus::Ok);
        assert_eq!(srw_ideal_num_generators(i), 3);

        let mut s = ptr::null_mut();
        assert_eq!(srw_ideal_to_string(i, &mut s), SrwStatus::Ok);
        assert_eq!(take_string(s), "x0*x5, x1*x3, x2*x4");

        assert_eq!(srw_primary_decomposition(i, &mut s), SrwStatus::Ok);
        assert_eq!(take_string(s).lines().count(), 8);

        let mut h = 0usize;
        assert_eq!(srw_big_height(i, &mut h), SrwStatus::Ok);
        assert_eq!(h, 3);

        let mut contained = false;
        assert_eq!(
            srw_containment_check(i, 2, 2, 200_000, &mut contained),
            SrwStatus::Ok
        );
        assert!(contained);

        srw_ideal_free(i);
        srw_complex_free(c);
    }
}

#[test]
fn json_complex_and_parsed_ideal() {
    unsafe {
        let json = CString::new(r#"{"vertices": 3, "facets": [[0,1],[1,2],[0,2]]}"#).unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(srw_complex_from_json(json.as_ptr(), &mut c), SrwStatus::Ok);
        assert_eq!(srw_complex_num_vertices(c), 3);
        srw_complex_free(c);

        let gens = CString::new("x0*x4").unwrap();
        let mut i = ptr::null_mut();
        assert_eq!(srw_ideal_parse(gens.as_ptr(), 5, &mut i), SrwStatus::Ok);
        let mut sym = ptr::null_mut();
        assert_eq!(
            srw_ideal_symbolic_power(i, 3, 1000, &mut sym),
            SrwStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(srw_ideal_to_string(sym, &mut s), SrwStatus::Ok);
        assert_eq!(take_string(s), "x0^3*x4^3");
        let mut w = ptr::null_mut();
        assert_eq!(srw_waldschmidt(i, &mut w), SrwStatus::Ok);
        assert_eq!(take_string(w), "2");
        srw_ideal_free(sym);
        srw_ideal_free(i);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(srw_complex_bipyramid(2, &mut c), SrwStatus::Domain);
        assert!(c.is_null());
        assert!(last_error().contains("n ≥ 3"));

        let bad = CString::new(r#"{"vertices": 2, "facets": [[0,5]]}"#).unwrap();
        assert_eq!(
            srw_complex_from_json(bad.as_ptr(), &mut c),
            SrwStatus::Domain
        );
        assert!(last_error().starts_with("facet 0"));

        assert_eq!(
            srw_complex_from_json(ptr::null(), &mut c),
            SrwStatus::InvalidArgument
        );
        assert_eq!(
            srw_ideal_stanley_reisner(ptr::null(), &mut ptr::null_mut()),
            SrwStatus::InvalidArgument
        );

        let mut g = ptr::null_mut();
        assert_eq!(srw_complex_bipyramidal_graph(5, &mut g), SrwStatus::Ok);
        let mut i = ptr::null_mut();
        assert_eq!(srw_ideal_stanley_reisner(g, &mut i), SrwStatus::Ok);
        let mut sym = ptr::null_mut();
        assert_eq!(
            srw_ideal_symbolic_power(i, 8, 10, &mut sym),
            SrwStatus::Resource
        );
        assert!(sym.is_null());

        // success clears the previous message
        let mut h = 0usize;
        assert_eq!(srw_big_height(i, &mut h), SrwStatus::Ok);
        assert!(srw_last_error_message().is_null());

        srw_ideal_free(i);
        srw_complex_free(g);
        srw_ideal_free(ptr::null_mut());
        srw_string_free(ptr::null_mut());
    }
}

#[test]
fn header_lists_exported_functions() {
    let header =
        std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/srw.h"))
            .unwrap();
    for name in [
        "srw_complex_bipyramid",
        "srw_complex_bipyramidal_graph",
        "srw_complex_from_json",
        "srw_ideal_stanley_reisner",
        "srw_ideal_symbolic_power",
        "srw_alpha_symbolic",
        "srw_waldschmidt",
        "srw_containment_check",
        "srw_verify_els_hh",
        "srw_last_error_message",
        "typedef struct SrwIdeal SrwIdeal",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compiles the C smoke test against the static library when a C compiler
/// is on the PATH.
#[test]
fn c_smoke_test() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libsrw_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: static library or C compiler unavailable");
        return;
    }
    let out = std::env::temp_dir().join(format!("srw_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&out).output().unwrap();
    std::fs::remove_file(&out).ok();
    assert!(
        run.status.success(),
        "smoke test failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
