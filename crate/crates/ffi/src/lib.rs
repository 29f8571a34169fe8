//! C ABI for the exact graph-enumeration library.
//!
//! Conventions:
//! - Graphs are opaque [`TmGraph`] handles created by `tm_graph_build` /
//!   `tm_graph_from_edge_list` and released with `tm_graph_free`.
//! - Every fallible call returns a [`TmStatus`]; on failure a per-thread
//!   message is available from `tm_last_error_message`.
//! - Counts are exact big integers and therefore returned as decimal
//!   strings; every `char*` produced by this library must be released with
//!   `tm_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use tmcount::series::{largest_real_root, trace_gf};
use tmcount::subsets::{self, Kind};
use tmcount::{antiprism, silent, walks, Digraph, Error, Poly};

/// Result of a C API call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TmStatus {
    /// Success.
    Ok = 0,
    /// Input outside an operation's domain.
    DomainError = 1,
    /// Malformed graph text or builder spec.
    ParseError = 2,
    /// A required pointer argument was null.
    NullArgument = 3,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 4,
}

/// Opaque graph handle.
pub struct TmGraph {
    inner: Digraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: TmStatus, msg: String) -> TmStatus {
    let msg = CString::new(msg).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
    status
}

fn fail_error(e: Error) -> TmStatus {
    let status = match e {
        Error::Parse { .. } => TmStatus::ParseError,
        _ => TmStatus::DomainError,
    };
    fail(status, e.to_string())
}

fn ok() -> TmStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    TmStatus::Ok
}

/// Message for the most recent failure on this thread, or an empty string.
/// The result must be released with `tm_string_free`.
#[no_mangle]
pub extern "C" fn tm_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        let msg = slot.borrow().as_ref().cloned().unwrap_or_default();
        msg.into_raw()
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must have been returned by a `tmcount` function and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, TmStatus> {
    if p.is_null() {
        return Err(fail(TmStatus::NullArgument, "null string argument".into()));
    }
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| fail(TmStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

unsafe fn read_graph<'a>(g: *const TmGraph) -> Result<&'a Digraph, TmStatus> {
    if g.is_null() {
        return Err(fail(TmStatus::NullArgument, "null graph handle".into()));
    }
    Ok(unsafe { &(*g).inner })
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> TmStatus {
    if out.is_null() {
        return fail(TmStatus::NullArgument, "null output pointer".into());
    }
    match CString::new(value) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            ok()
        }
        Err(_) => fail(TmStatus::InvalidUtf8, "result contained a NUL byte".into()),
    }
}

unsafe fn write_graph(out: *mut *mut TmGraph, g: Digraph) -> TmStatus {
    if out.is_null() {
        return fail(TmStatus::NullArgument, "null output pointer".into());
    }
    unsafe { *out = Box::into_raw(Box::new(TmGraph { inner: g })) };
    ok()
}

/// Builds a named graph, e.g. `"antiprism:5"`, `"circulant:8:1,3"`,
/// `"complete:4"`, `"gaze"`, `"cell24"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_graph_build(spec: *const c_char, out: *mut *mut TmGraph) -> TmStatus {
    let spec = match unsafe { read_str(spec) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    match Digraph::build(spec) {
        Ok(g) => unsafe { write_graph(out, g) },
        Err(e) => fail(TmStatus::ParseError, e.to_string()),
    }
}

/// Parses edge-list text: a `directed <n>` / `undirected <n>` header line,
/// then one `u v` edge per line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut TmGraph,
) -> TmStatus {
    let text = match unsafe { read_str(text) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    match Digraph::from_edge_list(text) {
        Ok(g) => unsafe { write_graph(out, g) },
        Err(e) => fail_error(e),
    }
}

/// Renders the graph back to edge-list text.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_graph_to_edge_list(
    g: *const TmGraph,
    out: *mut *mut c_char,
) -> TmStatus {
    match unsafe { read_graph(g) } {
        Ok(g) => unsafe { write_string(out, g.to_edge_list()) },
        Err(status) => status,
    }
}

/// Number of nodes, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn tm_graph_node_count(g: *const TmGraph) -> usize {
    unsafe { read_graph(g) }.map_or(0, |g| g.node_count())
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `g` must have been returned by a graph constructor and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tm_graph_free(g: *mut TmGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Number of walks of length `length` from node `from` to node `to`,
/// as a decimal string.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_count_walks(
    g: *const TmGraph,
    length: u64,
    from: usize,
    to: usize,
    out: *mut *mut c_char,
) -> TmStatus {
    let g = match unsafe { read_graph(g) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    match walks::count_walks(g, length, from, to) {
        Ok(v) => unsafe { write_string(out, v.to_string()) },
        Err(e) => fail_error(e),
    }
}

/// Number of closed walks of length `length` (trace of the matrix power).
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_count_closed_walks(
    g: *const TmGraph,
    length: u64,
    out: *mut *mut c_char,
) -> TmStatus {
    match unsafe { read_graph(g) } {
        Ok(g) => unsafe { write_string(out, walks::count_closed_walks(g, length).to_string()) },
        Err(status) => status,
    }
}

fn halved(
    raw: tmcount::num::BigInt,
    undirected: bool,
    kind: Kind,
    k: u64,
) -> Result<String, Error> {
    if undirected {
        Ok(subsets::undirected_count(&raw, kind, k)?.to_string())
    } else {
        Ok(raw.to_string())
    }
}

/// Number of Hamiltonian paths; `undirected` halves the directed count.
/// `workers` threads share the subset sum (0 behaves like 1); the result
/// never depends on the worker count.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_hamiltonian_paths(
    g: *const TmGraph,
    undirected: bool,
    workers: u32,
    out: *mut *mut c_char,
) -> TmStatus {
    let g = match unsafe { read_graph(g) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    if let Err(status) = check_undirected(g, undirected) {
        return status;
    }
    let raw = subsets::hamiltonian_paths_par(g, workers.max(1) as usize);
    let k = (g.node_count() as u64).saturating_sub(1);
    match halved(raw, undirected, Kind::Path, k) {
        Ok(s) => unsafe { write_string(out, s) },
        Err(e) => fail_error(e),
    }
}

/// Number of Hamiltonian cycles; see `tm_hamiltonian_paths`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_hamiltonian_cycles(
    g: *const TmGraph,
    undirected: bool,
    workers: u32,
    out: *mut *mut c_char,
) -> TmStatus {
    let g = match unsafe { read_graph(g) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    if let Err(status) = check_undirected(g, undirected) {
        return status;
    }
    let raw = subsets::hamiltonian_cycles_par(g, workers.max(1) as usize);
    match halved(raw, undirected, Kind::Cycle, g.node_count() as u64) {
        Ok(s) => unsafe { write_string(out, s) },
        Err(e) => fail_error(e),
    }
}

/// Number of simple paths of length `k`; see `tm_hamiltonian_paths`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_simple_paths(
    g: *const TmGraph,
    k: u64,
    undirected: bool,
    workers: u32,
    out: *mut *mut c_char,
) -> TmStatus {
    let g = match unsafe { read_graph(g) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    if let Err(status) = check_undirected(g, undirected) {
        return status;
    }
    let raw = match subsets::simple_paths_par(g, k, workers.max(1) as usize) {
        Ok(v) => v,
        Err(e) => return fail_error(e),
    };
    match halved(raw, undirected, Kind::Path, k) {
        Ok(s) => unsafe { write_string(out, s) },
        Err(e) => fail_error(e),
    }
}

/// Number of simple cycles of length `k`; see `tm_hamiltonian_paths`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_simple_cycles(
    g: *const TmGraph,
    k: u64,
    undirected: bool,
    workers: u32,
    out: *mut *mut c_char,
) -> TmStatus {
    let g = match unsafe { read_graph(g) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    if let Err(status) = check_undirected(g, undirected) {
        return status;
    }
    let raw = match subsets::simple_cycles_par(g, k, workers.max(1) as usize) {
        Ok(v) => v,
        Err(e) => return fail_error(e),
    };
    match halved(raw, undirected, Kind::Cycle, k) {
        Ok(s) => unsafe { write_string(out, s) },
        Err(e) => fail_error(e),
    }
}

fn check_undirected(g: &Digraph, undirected: bool) -> Result<(), TmStatus> {
    if undirected && g.is_directed() {
        return Err(fail(
            TmStatus::DomainError,
            "undirected counts need an undirected graph".into(),
        ));
    }
    Ok(())
}

/// t_n: silent prisms of n partnered pairs (formal trace value for n < 3).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_silent_prism(n: u64, out: *mut *mut c_char) -> TmStatus {
    unsafe { write_string(out, silent::prism_count(n).to_string()) }
}

/// s_n: silent circles of 2n people (defined for n >= 2).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_silent_circle(n: u64, out: *mut *mut c_char) -> TmStatus {
    match silent::circle_count(n) {
        Ok(v) => unsafe { write_string(out, v.to_string()) },
        Err(e) => fail_error(e),
    }
}

/// h_n: directed Hamiltonian cycles in the n-antiprism (n >= 3).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_antiprism_hc(n: u64, out: *mut *mut c_char) -> TmStatus {
    match antiprism::hc_count(n) {
        Ok(v) => unsafe { write_string(out, v.to_string()) },
        Err(e) => fail_error(e),
    }
}

/// Canonical text of the closed-walk generating function of the graph,
/// e.g. `(4 - 3*z - z^3) / (1 - z - z^3)`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_trace_gf(g: *const TmGraph, out: *mut *mut c_char) -> TmStatus {
    match unsafe { read_graph(g) } {
        Ok(g) => {
            let gf = trace_gf(&g.adjacency_matrix());
            unsafe { write_string(out, gf.to_string()) }
        }
        Err(status) => status,
    }
}

/// Largest real root of the polynomial with the given ascending `coeffs`
/// (machine integers suffice at this boundary), found in `[0, cauchy
/// bound]` to within `tol`.
///
/// # Safety
/// `coeffs` must point to `len` readable values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tm_largest_real_root(
    coeffs: *const i64,
    len: usize,
    tol: f64,
    out: *mut f64,
) -> TmStatus {
    if coeffs.is_null() || out.is_null() {
        return fail(TmStatus::NullArgument, "null pointer argument".into());
    }
    let coeffs = unsafe { std::slice::from_raw_parts(coeffs, len) };
    match largest_real_root(&Poly::from_i64(coeffs), tol) {
        Ok(root) => {
            unsafe { *out = root };
            ok()
        }
        Err(e) => fail_error(e),
    }
}

/// The silence growth constants: alpha (largest root of the reversed
/// prism-series denominator) and alpha/9.
///
/// # Safety
/// `alpha` and `ratio` must be null or valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tm_growth_constant(alpha: *mut f64, ratio: *mut f64) -> TmStatus {
    let (a, r) = silent::growth_constant();
    if !alpha.is_null() {
        unsafe { *alpha = a };
    }
    if !ratio.is_null() {
        unsafe { *ratio = r };
    }
    ok()
}
