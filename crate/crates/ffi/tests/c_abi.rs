use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use wordrep_ffi::*;

fn last_error() -> String {
    let p = wr_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn graph(n: usize, edges: &[u32]) -> *mut WrGraph {
    let mut g = ptr::null_mut();
    let status = unsafe { wr_graph_new(n, edges.as_ptr(), edges.len() / 2, &mut g) };
    assert_eq!(status, WrStatus::Ok);
    g
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_string_lossy().into_owned();
    wr_string_free(p);
    s
}

#[test]
fn graph_handles() {
    let g = graph(4, &[1, 2, 2, 3, 3, 4, 1, 4]);
    unsafe {
        assert_eq!(wr_graph_vertex_count(g), 4);
        assert_eq!(wr_graph_edge_count(g), 4);
        assert!(wr_graph_has_edge(g, 1, 4));
        assert!(!wr_graph_has_edge(g, 1, 3));
        wr_graph_free(g);
        assert_eq!(wr_graph_vertex_count(ptr::null()), 0);
        wr_graph_free(ptr::null_mut());
    }
    let mut bad = ptr::null_mut();
    let status = unsafe { wr_graph_new(2, [1u32, 5].as_ptr(), 1, &mut bad) };
    assert_eq!(status, WrStatus::InvalidInput);
    assert!(bad.is_null());
    assert!(last_error().contains('5'));
}

#[test]
fn decode_and_verify() {
    let word = [1u32, 4, 2, 1, 3, 2, 4, 3];
    let eleven = CString::new("11").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(wr_decode(word.as_ptr(), word.len(), eleven.as_ptr(), &mut g), WrStatus::Ok);
        assert_eq!(wr_graph_edge_count(g), 4);
        let mut ok = false;
        assert_eq!(wr_verifies(word.as_ptr(), word.len(), g, eleven.as_ptr(), &mut ok), WrStatus::Ok);
        assert!(ok);
        let twelve = CString::new("12").unwrap();
        assert_eq!(wr_verifies(word.as_ptr(), word.len(), g, twelve.as_ptr(), &mut ok), WrStatus::Ok);
        assert!(!ok);
        let bogus = CString::new("31").unwrap();
        assert_eq!(wr_verifies(word.as_ptr(), word.len(), g, bogus.as_ptr(), &mut ok), WrStatus::InvalidInput);
        assert_eq!(wr_decode(word.as_ptr(), word.len(), ptr::null(), &mut g), WrStatus::NullPointer);
        wr_graph_free(g);
    }
}

#[test]
fn recognize_cycles() {
    let c5 = CString::new("Dhc").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(wr_graph_from_graph6(c5.as_ptr(), &mut g), WrStatus::Ok);
        let mut answer = WrAnswer::Unknown;
        let mut json = ptr::null_mut();
        assert_eq!(wr_recognize(g, 1000, 1, &mut answer, &mut json), WrStatus::Ok);
        assert_eq!(answer, WrAnswer::No);
        assert!(take_string(json).starts_with("{\"status\":\"no\""));
        wr_graph_free(g);
    }
    let c4 = graph(4, &[1, 2, 2, 3, 3, 4, 1, 4]);
    unsafe {
        let mut answer = WrAnswer::Unknown;
        assert_eq!(wr_recognize(c4, 1000, 2, &mut answer, ptr::null_mut()), WrStatus::Ok);
        assert_eq!(answer, WrAnswer::Yes);
        wr_graph_free(c4);
    }
    let big = graph(13, &[]);
    unsafe {
        let mut answer = WrAnswer::Unknown;
        assert_eq!(wr_recognize(big, 10, 1, &mut answer, ptr::null_mut()), WrStatus::TooLarge);
        wr_graph_free(big);
    }
}

#[test]
fn constructions() {
    let corner = CString::new("corner").unwrap();
    let mut json = ptr::null_mut();
    unsafe {
        assert_eq!(wr_construct(ptr::null(), corner.as_ptr(), 3, &mut json), WrStatus::Ok);
        let text = take_string(json);
        assert!(text.contains("\"word\":[3,5,1,7,2,9,4,11,6,13,8,15,12,17,10,12,19,14,21,16,23,18,24,20,22]"));
        assert!(text.contains("\"method\":\"corner\""));
    }
    let i3 = graph(3, &[1, 2, 2, 3]);
    let perm = CString::new("perm").unwrap();
    let dcat = CString::new("dcat").unwrap();
    unsafe {
        assert_eq!(wr_construct(i3, perm.as_ptr(), 0, &mut json), WrStatus::NotFound);
        assert_eq!(wr_construct(i3, dcat.as_ptr(), 0, &mut json), WrStatus::Ok);
        wr_string_free(json);
        assert_eq!(wr_construct(ptr::null(), dcat.as_ptr(), 0, &mut json), WrStatus::NullPointer);
        wr_graph_free(i3);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(wr_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_interface() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/wordrep.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "wr_last_error",
        "wr_graph_new",
        "wr_graph_from_graph6",
        "wr_graph_free",
        "wr_decode",
        "wr_verifies",
        "wr_recognize",
        "wr_construct",
        "wr_string_free",
        "WR_STATUS_NOT_FOUND",
        "typedef struct WrGraph WrGraph",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    // Syntax-check the header with a C compiler when one is installed.
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", "-std=c99", "-Wall", "-Werror"])
        .arg(&header)
        .output()
    else {
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
