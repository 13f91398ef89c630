//! The exported functions used the way a C caller would.

use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use plandec_ffi::*;

const V8: &str = "8 12\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n0 7\n0 4\n1 5\n2 6\n3 7\n";

fn graph(text: &str) -> *mut PlandecGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { plandec_graph_parse(c.as_ptr(), &mut g) }, PlandecStatus::Ok);
    g
}

/// Copies and frees a string handed out by the library.
fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { plandec_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(plandec_last_error()) }.to_str().unwrap().into()
}

#[test]
fn v8_decomposes_and_round_trips_through_json() {
    let g = graph(V8);
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { plandec_decompose(g, PlandecClass::K5, false, &mut d) }, PlandecStatus::Ok);
    assert_eq!(unsafe { plandec_decomposition_width(d) }, 2);
    assert_eq!(unsafe { plandec_decomposition_order(d) }, 4);
    assert_eq!(unsafe { plandec_decomposition_validate(d) }, PlandecStatus::Ok);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { plandec_decomposition_to_json(d, &mut json) }, PlandecStatus::Ok);
    let json = take(json);
    let c = CString::new(json.clone()).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { plandec_decomposition_from_json(c.as_ptr(), &mut back) }, PlandecStatus::Ok);
    let mut again = ptr::null_mut();
    assert_eq!(unsafe { plandec_decomposition_to_json(back, &mut again) }, PlandecStatus::Ok);
    assert_eq!(take(again), json);

    let mut strong = ptr::null_mut();
    assert_eq!(unsafe { plandec_decompose(g, PlandecClass::K5, true, &mut strong) }, PlandecStatus::Ok);
    // V8 is a single leaf: the order-13 decomposition of its one-crossing drawing.
    assert!(unsafe { plandec_decomposition_width(strong) } <= 3);
    assert_eq!(unsafe { plandec_decomposition_order(strong) }, 13);
    unsafe {
        plandec_decomposition_free(strong);
        plandec_decomposition_free(back);
        plandec_decomposition_free(d);
        plandec_graph_free(g);
    }
}

#[test]
fn broken_decompositions_name_their_violation() {
    let json = r#"{"host": {"n": 2, "edges": [[0, 1]]}, "bags": [[0]], "dedges": [], "strong": false, "p": 2}"#;
    let c = CString::new(json).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { plandec_decomposition_from_json(c.as_ptr(), &mut d) }, PlandecStatus::Ok);
    assert_eq!(unsafe { plandec_decomposition_validate(d) }, PlandecStatus::Invariant);
    assert!(last_error().contains("D(1)"), "{}", last_error());
    unsafe { plandec_decomposition_free(d) };
}

#[test]
fn drawings_carry_their_certificates() {
    let g = graph(V8);
    for class in [PlandecClass::K5, PlandecClass::Treewidth, PlandecClass::Generic] {
        let mut dr = ptr::null_mut();
        assert_eq!(unsafe { plandec_draw(g, class, 3, &mut dr) }, PlandecStatus::Ok, "{class:?}");
        let mut holds = false;
        assert_eq!(unsafe { plandec_drawing_certified(dr, &mut holds) }, PlandecStatus::Ok);
        assert!(holds, "{class:?}");
        let crossings = unsafe { plandec_drawing_crossings(dr) };
        assert!(crossings >= 1, "V8 is not planar");

        let mut json = ptr::null_mut();
        assert_eq!(unsafe { plandec_drawing_to_json(dr, &mut json) }, PlandecStatus::Ok);
        let c = CString::new(take(json)).unwrap();
        let mut recounted = ptr::null_mut();
        assert_eq!(unsafe { plandec_drawing_from_json(c.as_ptr(), &mut recounted) }, PlandecStatus::Ok);
        assert_eq!(unsafe { plandec_drawing_crossings(recounted) }, crossings);

        let mut svg = ptr::null_mut();
        assert_eq!(unsafe { plandec_drawing_to_svg(dr, &mut svg) }, PlandecStatus::Ok);
        assert!(take(svg).contains("<svg"));
        unsafe {
            plandec_drawing_free(recounted);
            plandec_drawing_free(dr);
        }
    }
    let mut k33 = ptr::null_mut();
    assert_eq!(unsafe { plandec_draw(g, PlandecClass::K33, 0, &mut k33) }, PlandecStatus::Precondition);
    assert!(k33.is_null());
    unsafe { plandec_graph_free(g) };
}

#[test]
fn rendering_a_quadratic_decomposition() {
    let g = graph("5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { plandec_quadratic_decomposition(g, &mut d) }, PlandecStatus::Ok);
    assert_eq!(unsafe { plandec_decomposition_order(d) }, 15);
    let mut dr = ptr::null_mut();
    assert_eq!(unsafe { plandec_render(d, 9, &mut dr) }, PlandecStatus::Ok);
    let mut holds = false;
    assert_eq!(unsafe { plandec_drawing_certified(dr, &mut holds) }, PlandecStatus::Ok);
    assert!(holds);
    unsafe {
        plandec_drawing_free(dr);
        plandec_decomposition_free(d);
        plandec_graph_free(g);
    }
}

#[test]
fn degenerate_drawings_are_refused() {
    let json = r#"{"host": {"n": 6, "edges": [[0, 1], [2, 3], [4, 5]]},
        "points": [[-1,1,0,1],[1,1,0,1],[0,1,-1,1],[0,1,1,1],[-1,1,-1,1],[1,1,1,1]],
        "routes": [[], [], []]}"#;
    let c = CString::new(json).unwrap();
    let mut dr = ptr::null_mut();
    assert_eq!(unsafe { plandec_drawing_from_json(c.as_ptr(), &mut dr) }, PlandecStatus::Precondition);
    assert!(dr.is_null());
    assert!(last_error().contains("common point"));
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        plandec_graph_free(ptr::null_mut());
        plandec_decomposition_free(ptr::null_mut());
        plandec_drawing_free(ptr::null_mut());
        plandec_string_free(ptr::null_mut());
        assert_eq!(plandec_graph_vertex_count(ptr::null()), 0);
        assert_eq!(plandec_decomposition_validate(ptr::null()), PlandecStatus::InvalidArgument);
        assert_eq!(
            plandec_decompose(ptr::null(), PlandecClass::K5, false, ptr::null_mut()),
            PlandecStatus::InvalidArgument
        );
    }
    let g = graph("0 0\n");
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { plandec_decompose(g, PlandecClass::K5, false, &mut d) }, PlandecStatus::Ok);
    assert_eq!(unsafe { plandec_decomposition_order(d) }, 0);
    unsafe {
        plandec_decomposition_free(d);
        plandec_graph_free(g);
    }
    assert!(unsafe { CStr::from_ptr(plandec_version()) }.to_str().unwrap().starts_with("0."));
}

/// The generated header compiles as C and, when the static library sits next
/// to the test binary's directory, links and runs a C caller.
#[test]
fn c_callers_compile_against_the_header() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(root.join("include/plandec.h")).unwrap();
    for f in ["plandec_last_error", "plandec_decompose", "plandec_draw", "plandec_drawing_free"] {
        assert!(header.contains(f), "{f} missing from the header");
    }
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; header not compiled");
        return;
    }
    let smoke = root.join("tests/c/smoke.c");
    let include = root.join("include");
    let syntax = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&smoke)
        .status();
    assert!(syntax.unwrap().success());

    let exe = std::env::current_exe().unwrap();
    let lib = exe.parent().and_then(|deps| deps.parent()).map(|dir| dir.join("libplandec_ffi.a"));
    let Some(lib) = lib.filter(|l| l.exists()) else {
        eprintln!("static library not found; link step skipped");
        return;
    };
    let dir = tempfile_dir();
    let bin = dir.join("smoke");
    let linked = Command::new("cc")
        .arg("-I")
        .arg(&include)
        .arg(&smoke)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(linked.success());
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}

fn tempfile_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("plandec-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
