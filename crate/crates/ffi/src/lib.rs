//! C ABI for `wordrep`.
//!
//! Graphs are opaque `WrGraph` handles owned by the caller and released with
//! [`wr_graph_free`]. Every fallible call returns a [`WrStatus`]; on failure
//! [`wr_last_error`] describes the problem. Strings returned through out
//! parameters are owned by the caller and released with [`wr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wordrep::construct::{
    identity_labeling, represent_1k, represent_corner, represent_double_caterpillar, represent_permutation_graph,
    represent_skew_ladder, ConstructionResult, Method,
};
use wordrep::graphs::io::parse_graph6;
use wordrep::recognize::{is_12_representable, SearchOptions, Status};
use wordrep::represent::{decode, verifies};
use wordrep::{Error, LabeledGraph, Pattern, Word};

/// Opaque graph handle.
pub struct WrGraph(LabeledGraph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    TooLarge = 3,
    /// The input lies outside the class the operation handles.
    NotFound = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WrAnswer {
    Yes = 0,
    No = 1,
    Unknown = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(e: Error) -> WrStatus {
    let status = match e {
        Error::TooLarge { .. } => WrStatus::TooLarge,
        Error::SelfCheckFailed => WrStatus::Internal,
        _ => WrStatus::InvalidInput,
    };
    set_error(e.to_string());
    status
}

/// Runs `body`, turning panics into `WrStatus::Internal`.
fn guard(body: impl FnOnce() -> WrStatus) -> WrStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            WrStatus::Internal
        }
    }
}

macro_rules! try_wr {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(
            if $p.is_null() {
                set_error(concat!("`", stringify!($p), "` is null"));
                return WrStatus::NullPointer;
            }
        )+
    };
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Error> {
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Error::Precondition("string argument is not UTF-8".into()))
}

unsafe fn word_arg(letters: *const u32, len: usize) -> Result<Word, Error> {
    if len == 0 {
        return Ok(Word::empty());
    }
    Word::new(std::slice::from_raw_parts(letters, len).to_vec())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the most recent failure on this thread, or NULL. Valid until
/// the next `wr_` call on the same thread.
#[no_mangle]
pub extern "C" fn wr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn wr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph on `1..=n` from `edge_count` label pairs stored flat in
/// `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be NULL
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wr_graph_new(n: usize, edges: *const u32, edge_count: usize, out: *mut *mut WrGraph) -> WrStatus {
    guard(|| {
        non_null!(out);
        if edge_count > 0 {
            non_null!(edges);
        }
        let pairs: Vec<(u32, u32)> = if edge_count == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
                .chunks_exact(2)
                .map(|c| (c[0], c[1]))
                .collect()
        };
        let g = try_wr!(LabeledGraph::from_edges(n, &pairs));
        *out = Box::into_raw(Box::new(WrGraph(g)));
        WrStatus::Ok
    })
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wr_graph_from_graph6(text: *const c_char, out: *mut *mut WrGraph) -> WrStatus {
    guard(|| {
        non_null!(text, out);
        let g = try_wr!(str_arg(text).and_then(parse_graph6));
        *out = Box::into_raw(Box::new(WrGraph(g)));
        WrStatus::Ok
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wr_graph_free(g: *mut WrGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wr_graph_vertex_count(g: *const WrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wr_graph_edge_count(g: *const WrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Whether `x` and `y` are adjacent; false for NULL or unknown labels.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wr_graph_has_edge(g: *const WrGraph, x: u32, y: u32) -> bool {
    g.as_ref().is_some_and(|g| g.0.has_edge(x, y))
}

/// Decodes `word` under `pattern` (e.g. `"12"`).
///
/// # Safety
/// `word` must point to `len` readable letters; `pattern` must be a
/// NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wr_decode(word: *const u32, len: usize, pattern: *const c_char, out: *mut *mut WrGraph) -> WrStatus {
    guard(|| {
        non_null!(word, pattern, out);
        let w = try_wr!(word_arg(word, len));
        let u: Pattern = try_wr!(str_arg(pattern).and_then(str::parse));
        let g = try_wr!(decode(&w, &u));
        *out = Box::into_raw(Box::new(WrGraph(g)));
        WrStatus::Ok
    })
}

/// Sets `*result` to whether `word` `pattern`-represents `g` exactly.
///
/// # Safety
/// As for [`wr_decode`]; `g` must be a live handle and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn wr_verifies(
    word: *const u32,
    len: usize,
    g: *const WrGraph,
    pattern: *const c_char,
    result: *mut bool,
) -> WrStatus {
    guard(|| {
        non_null!(g, pattern, result);
        if len > 0 {
            non_null!(word);
        }
        let w = try_wr!(word_arg(word, len));
        let u: Pattern = try_wr!(str_arg(pattern).and_then(str::parse));
        *result = verifies(&w, &(*g).0, &u);
        WrStatus::Ok
    })
}

/// Decides 12-representability of `g` up to relabeling. `json_out` may be
/// NULL; otherwise it receives the certificate as JSON.
///
/// # Safety
/// `g` must be a live handle; `answer` writable; `json_out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn wr_recognize(
    g: *const WrGraph,
    budget: u64,
    jobs: usize,
    answer: *mut WrAnswer,
    json_out: *mut *mut c_char,
) -> WrStatus {
    guard(|| {
        non_null!(g, answer);
        let opts = SearchOptions {
            budget,
            jobs: jobs.max(1),
        };
        let cert = try_wr!(is_12_representable(&(*g).0, &opts));
        *answer = match cert.status {
            Status::Yes => WrAnswer::Yes,
            Status::No => WrAnswer::No,
            Status::Unknown => WrAnswer::Unknown,
        };
        if !json_out.is_null() {
            *json_out = into_c_string(cert.to_json());
        }
        WrStatus::Ok
    })
}

/// Runs a construction and writes its JSON to `json_out`. `method` is one of
/// `perm`, `1k`, `dcat` (these use `g`; `1k` takes the pattern length `k`)
/// or `corner`, `skewladder` (these ignore `g` and use `k`). Returns
/// `NotFound` when `g` is outside the method's class.
///
/// # Safety
/// `method` must be a NUL-terminated string; `g` a live handle or NULL for
/// the grid methods; `json_out` writable.
#[no_mangle]
pub unsafe extern "C" fn wr_construct(
    g: *const WrGraph,
    method: *const c_char,
    k: usize,
    json_out: *mut *mut c_char,
) -> WrStatus {
    guard(|| {
        non_null!(method, json_out);
        let method: Method = try_wr!(str_arg(method).and_then(str::parse));
        let graph = || g.as_ref().map(|g| &g.0);
        let built: Option<ConstructionResult> = match method {
            Method::Corner => Some(try_wr!(represent_corner(k))),
            Method::SkewLadder => Some(try_wr!(represent_skew_ladder(k))),
            Method::Permutation | Method::Ones | Method::DoubleCaterpillar => {
                let Some(g) = graph() else {
                    set_error("`g` is null");
                    return WrStatus::NullPointer;
                };
                match method {
                    Method::Permutation => match try_wr!(represent_permutation_graph(g)) {
                        Some(w) => Some(try_wr!(ConstructionResult::new(g, identity_labeling(g), w, Pattern::twelve(), method))),
                        None => None,
                    },
                    Method::Ones => {
                        let w = try_wr!(represent_1k(g, k));
                        let u = try_wr!(Pattern::ones(k));
                        Some(try_wr!(ConstructionResult::new(g, identity_labeling(g), w, u, method)))
                    }
                    _ => try_wr!(represent_double_caterpillar(g)),
                }
            }
            other => {
                set_error(format!("method `{other}` is not available through the C interface"));
                return WrStatus::InvalidInput;
            }
        };
        match built {
            Some(r) => {
                *json_out = into_c_string(r.to_json());
                WrStatus::Ok
            }
            None => {
                set_error(format!("the graph is outside the class handled by `{method}`"));
                WrStatus::NotFound
            }
        }
    })
}
