use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use pants_arcs_ffi::*;

fn parse(text: &str) -> (PaStatus, *mut PaArcWord, usize) {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    let mut pos = usize::MAX;
    let st = unsafe { pa_word_parse(c.as_ptr(), &mut out, &mut pos) };
    (st, out, pos)
}

fn text(w: *const PaArcWord) -> String {
    unsafe {
        let s = pa_word_to_string(w);
        let r = CStr::from_ptr(s).to_str().unwrap().to_owned();
        pa_string_free(s);
        r
    }
}

#[test]
fn parse_count_free() {
    let (st, w, _) = parse("1BABA2");
    assert_eq!(st, PaStatus::Ok);
    let mut i = 0;
    unsafe {
        assert_eq!(pa_self_intersection(w, &mut i), PaStatus::Ok);
        assert_eq!(pa_word_length(w), 6);
    }
    assert_eq!(i, 2);
    assert_eq!(text(w), "1BABA2");

    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(pa_word_relabel(w, &mut r), PaStatus::Ok);
    }
    assert_eq!(text(r), "2ABAB1");
    unsafe {
        pa_word_free(r);
        pa_word_free(w);
    }
}

#[test]
fn grammar_errors_map_to_codes() {
    for (word, code, pos) in [
        ("11", PaStatus::ForbiddenPair, 0),
        ("1a2", PaStatus::EndpointClash, 1),
        ("1bB3", PaStatus::NonReduced, 1),
        ("1bx3", PaStatus::MalformedToken, 2),
        ("b1", PaStatus::BadShape, 0),
    ] {
        let (st, w, p) = parse(word);
        assert_eq!(st, code, "{word}");
        assert!(w.is_null());
        assert_eq!(p, pos, "{word}");
    }
}

#[test]
fn null_arguments() {
    let mut out = ptr::null_mut();
    let mut i = 0;
    unsafe {
        assert_eq!(pa_word_parse(ptr::null(), &mut out, ptr::null_mut()), PaStatus::NullPointer);
        assert_eq!(pa_self_intersection(ptr::null(), &mut i), PaStatus::NullPointer);
        assert_eq!(pa_word_length(ptr::null()), 0);
        assert!(pa_word_to_string(ptr::null()).is_null());
        pa_word_free(ptr::null_mut());
        pa_string_free(ptr::null_mut());
    }
}

#[test]
fn families_and_witnesses() {
    let id = CString::new("F2").unwrap();
    let mut w = ptr::null_mut();
    let mut predicted = 0;
    unsafe {
        assert_eq!(pa_family_word(id.as_ptr(), 3, 0, false, &mut w, &mut predicted), PaStatus::Ok);
    }
    assert_eq!(text(w), "1bAbAbA3");
    assert_eq!(predicted, 15);
    unsafe { pa_word_free(w) };

    let bad = CString::new("Q1").unwrap();
    unsafe {
        assert_eq!(
            pa_family_word(bad.as_ptr(), 0, 0, false, &mut w, ptr::null_mut()),
            PaStatus::UnknownFamily
        );
        assert_eq!(pa_witness(14, &mut w), PaStatus::Ok);
    }
    assert_eq!(text(w), "1bABAbabA3");
    unsafe { pa_word_free(w) };
}

#[test]
fn status_messages_are_static() {
    let m = unsafe { CStr::from_ptr(pa_status_message(PaStatus::NonReduced)) };
    assert_eq!(m.to_str().unwrap(), "letter followed by its inverse");
}

/// Compiles the C smoke test against the generated header and static library.
#[test]
fn c_program_links_and_runs() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    // target/<profile>/deps/<test binary>
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libpants_arcs_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let out = tempfile::tempdir().unwrap();
    let bin = out.path().join("smoke");
    let status = Command::new("cc")
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "c abi ok");
}
