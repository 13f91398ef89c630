//! C ABI over `plandec`.
//!
//! Objects cross the boundary as opaque handles created by a `*_new`/`*_from_*`
//! call and released by the matching `*_free`. Every fallible call returns a
//! [`PlandecStatus`]; on failure [`plandec_last_error`] describes it until the
//! next call on the same thread. Strings handed out are owned by the caller and
//! go back through [`plandec_string_free`]. No call unwinds across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use plandec::decomp::{degen_omega, identity_decomposition, quadratic_decomp, DecompositionJson};
use plandec::draw::{render, to_svg, BoundCheck, CertifiedDrawing, DrawingJson};
use plandec::graph::treewidth::treewidth_exact;
use plandec::minor_free::{
    crossings_k5, k33_planar_partition, k33_rectilinear_drawing, planar_omega_decomp_k5, strong_3_decomp_k5,
};
use plandec::partition::convex_treewidth_pipeline;
use plandec::{Decomposition, Drawing, Error, Graph};

/// Outcome of a call. The numeric values of the library failures match the
/// exit codes of the command-line tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlandecStatus {
    Ok = 0,
    /// A null or otherwise unusable argument.
    InvalidArgument = 1,
    Parse = 2,
    Precondition = 3,
    /// A checked invariant or bound failed.
    Invariant = 4,
    /// The library panicked; a bug, reported instead of unwinding.
    Internal = 5,
}

/// Graph classes with a dedicated pipeline.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlandecClass {
    K5 = 0,
    K33 = 1,
    Treewidth = 2,
    Generic = 3,
}

/// Opaque simple graph.
pub struct PlandecGraph(Graph);

/// Opaque decomposition.
pub struct PlandecDecomposition(Decomposition);

/// Opaque drawing together with its crossing report and bound checks.
pub struct PlandecDrawing(CertifiedDrawing);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail {
    status: PlandecStatus,
    message: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let status = match e.exit_code() {
            2 => PlandecStatus::Parse,
            3 => PlandecStatus::Precondition,
            _ => PlandecStatus::Invariant,
        };
        Fail { status, message: e.to_string() }
    }
}

fn invalid(message: &str) -> Fail {
    Fail { status: PlandecStatus::InvalidArgument, message: message.into() }
}

fn set_error(message: &str) {
    // Interior NULs would truncate the C string; drop them.
    let clean = CString::new(message.replace('\0', "")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(clean));
}

/// Runs `f`, recording any failure or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PlandecStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PlandecStatus::Ok,
        Ok(Err(fail)) => {
            set_error(&fail.message);
            fail.status
        }
        Err(panic) => {
            let what = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(&format!("internal error: {what}"));
            PlandecStatus::Internal
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, name: &str) -> Result<&'a T, Fail> {
    // SAFETY: the caller passes either null or a live handle from this library.
    unsafe { p.as_ref() }.ok_or_else(|| invalid(&format!("{name} is null")))
}

unsafe fn c_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(invalid(&format!("{name} is null")));
    }
    // SAFETY: non-null and, per the contract, NUL-terminated.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| Fail { status: PlandecStatus::Parse, message: format!("{name} is not UTF-8") })
}

unsafe fn put<T>(out: *mut *mut T, value: T, name: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(invalid(&format!("{name} is null")));
    }
    // SAFETY: `out` is non-null and points to writable storage for one pointer.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String, name: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(invalid(&format!("{name} is null")));
    }
    let c = CString::new(s).map_err(|_| invalid("output holds a NUL byte"))?;
    // SAFETY: as in `put`.
    unsafe { *out = c.into_raw() };
    Ok(())
}

unsafe fn put_value<T: Copy>(out: *mut T, value: T, name: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(invalid(&format!("{name} is null")));
    }
    // SAFETY: as in `put`.
    unsafe { *out = value };
    Ok(())
}

/// Message for the last failed call on this thread, or null after a success.
/// Valid until the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn plandec_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn plandec_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or came from this library and was not freed before.
#[no_mangle]
pub unsafe extern "C" fn plandec_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: per the contract, `s` came from `CString::into_raw`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses an edge list: `n m`, then `m` lines `u v`, 0-based.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_graph_parse(text: *const c_char, out: *mut *mut PlandecGraph) -> PlandecStatus {
    guard(|| {
        let g = Graph::parse_edge_list(unsafe { c_str(text, "text") }?)?;
        unsafe { put(out, PlandecGraph(g), "out") }
    })
}

/// Graph on `n` vertices with edges `(edges[2i], edges[2i + 1])` for `i < m`.
///
/// # Safety
/// `edges` holds `2 m` values (it may be null when `m` is 0); `out` points to
/// writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_graph_new(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut PlandecGraph,
) -> PlandecStatus {
    guard(|| {
        let flat: &[usize] = match (m, edges.is_null()) {
            (0, _) => &[],
            (_, true) => return Err(invalid("edges is null")),
            // SAFETY: the caller guarantees 2 m readable values.
            _ => unsafe { std::slice::from_raw_parts(edges, 2 * m) },
        };
        let g = Graph::from_edges(n, flat.chunks(2).map(|c| (c[0], c[1])))?;
        unsafe { put(out, PlandecGraph(g), "out") }
    })
}

/// # Safety
/// `g` is null or a graph handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn plandec_graph_free(g: *mut PlandecGraph) {
    if !g.is_null() {
        // SAFETY: per the contract, `g` came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Vertex count; 0 for null.
///
/// # Safety
/// `g` is null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn plandec_graph_vertex_count(g: *const PlandecGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.n())
}

/// Edge count; 0 for null.
///
/// # Safety
/// `g` is null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn plandec_graph_edge_count(g: *const PlandecGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.m())
}

/// Decomposition from the pipeline of `class`:
/// `K5` planar ω-decomposition of width 2 (strong: width 3, order at most `3n - 8`),
/// `K33` the planarizing pair partition, `Treewidth` an exact tree decomposition,
/// `Generic` singleton bags (strong: degeneracy ω-decomposition).
///
/// # Safety
/// `g` is a live graph handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_decompose(
    g: *const PlandecGraph,
    class: PlandecClass,
    strong: bool,
    out: *mut *mut PlandecDecomposition,
) -> PlandecStatus {
    guard(|| {
        let g = &unsafe { borrow(g, "g") }?.0;
        let d = match (class, strong) {
            (_, _) if g.n() == 0 => identity_decomposition(g),
            (PlandecClass::K5, false) => planar_omega_decomp_k5(g)?,
            (PlandecClass::K5, true) => strong_3_decomp_k5(g)?,
            (PlandecClass::K33, _) => k33_planar_partition(g)?.as_decomposition(),
            (PlandecClass::Treewidth, _) => treewidth_exact(g)?.1,
            (PlandecClass::Generic, false) => identity_decomposition(g),
            (PlandecClass::Generic, true) => degen_omega(g),
        };
        unsafe { put(out, PlandecDecomposition(d), "out") }
    })
}

/// Strong planar decomposition of width 2 with a bag for every pair `i <= j`.
///
/// # Safety
/// `g` is a live graph handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_quadratic_decomposition(
    g: *const PlandecGraph,
    out: *mut *mut PlandecDecomposition,
) -> PlandecStatus {
    guard(|| {
        let g = &unsafe { borrow(g, "g") }?.0;
        unsafe { put(out, PlandecDecomposition(quadratic_decomp(g)), "out") }
    })
}

/// Reads the JSON form `{"host", "bags", "dedges", "strong", "p"}`.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_decomposition_from_json(
    json: *const c_char,
    out: *mut *mut PlandecDecomposition,
) -> PlandecStatus {
    guard(|| {
        let j: DecompositionJson = serde_json::from_str(unsafe { c_str(json, "json") }?).map_err(Error::from)?;
        unsafe { put(out, PlandecDecomposition(Decomposition::from_json(&j)?), "out") }
    })
}

/// Writes the JSON form; release it with [`plandec_string_free`].
///
/// # Safety
/// `d` is a live decomposition handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_decomposition_to_json(
    d: *const PlandecDecomposition,
    out: *mut *mut c_char,
) -> PlandecStatus {
    guard(|| {
        let d = &unsafe { borrow(d, "d") }?.0;
        let s = serde_json::to_string(&d.to_json()).map_err(Error::from)?;
        unsafe { put_string(out, s, "out") }
    })
}

/// Bag count; 0 for null.
///
/// # Safety
/// `d` is null or a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn plandec_decomposition_order(d: *const PlandecDecomposition) -> usize {
    unsafe { d.as_ref() }.map_or(0, |d| d.0.order())
}

/// Largest bag; 0 for null.
///
/// # Safety
/// `d` is null or a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn plandec_decomposition_width(d: *const PlandecDecomposition) -> usize {
    unsafe { d.as_ref() }.map_or(0, |d| d.0.width())
}

/// Checks every defining condition. `Ok` when valid; `Invariant` with the
/// first violation as the last error otherwise.
///
/// # Safety
/// `d` is a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn plandec_decomposition_validate(d: *const PlandecDecomposition) -> PlandecStatus {
    guard(|| {
        let report = unsafe { borrow(d, "d") }?.0.validate();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Fail { status: PlandecStatus::Invariant, message: v.to_string() }),
        }
    })
}

/// # Safety
/// `d` is null or a decomposition handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn plandec_decomposition_free(d: *mut PlandecDecomposition) {
    if !d.is_null() {
        // SAFETY: per the contract, `d` came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(d) });
    }
}

/// Drawing from the pipeline of `class`, with its exact crossing count and the
/// bounds that pipeline certifies. `Generic` renders the quadratic decomposition.
///
/// # Safety
/// `g` is a live graph handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_draw(
    g: *const PlandecGraph,
    class: PlandecClass,
    seed: u64,
    out: *mut *mut PlandecDrawing,
) -> PlandecStatus {
    guard(|| {
        let g = &unsafe { borrow(g, "g") }?.0;
        let cd = match class {
            PlandecClass::K5 => crossings_k5(g, seed)?,
            PlandecClass::K33 => k33_rectilinear_drawing(g, seed)?,
            PlandecClass::Treewidth => convex_treewidth_pipeline(g, None)?.drawing,
            PlandecClass::Generic => rendered(&quadratic_decomp(g), seed)?,
        };
        unsafe { put(out, PlandecDrawing(cd), "out") }
    })
}

fn rendered(d: &Decomposition, seed: u64) -> Result<CertifiedDrawing, Fail> {
    let r = render(d, seed)?;
    let checks = vec![
        BoundCheck::at_most("crossings <= 2 Δ² Σ C(|X|+1, 2)", r.report.total, r.bounds.crossing_bound),
        BoundCheck::at_most("bends <= s(v) + s(w) - 2", usize::from(!r.bounds.bends_ok), 0),
    ];
    Ok(CertifiedDrawing { drawing: r.drawing, report: r.report, checks })
}

/// Renders a decomposition whose decomposition graph is planar.
///
/// # Safety
/// `d` is a live decomposition handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_render(
    d: *const PlandecDecomposition,
    seed: u64,
    out: *mut *mut PlandecDrawing,
) -> PlandecStatus {
    guard(|| {
        let d = &unsafe { borrow(d, "d") }?.0;
        unsafe { put(out, PlandecDrawing(rendered(d, seed)?), "out") }
    })
}

/// Total crossings; 0 for null.
///
/// # Safety
/// `dr` is null or a live drawing handle.
#[no_mangle]
pub unsafe extern "C" fn plandec_drawing_crossings(dr: *const PlandecDrawing) -> usize {
    unsafe { dr.as_ref() }.map_or(0, |d| d.0.report.total)
}

/// Stores whether every bound check of the drawing holds.
///
/// # Safety
/// `dr` is a live drawing handle; `holds` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_drawing_certified(dr: *const PlandecDrawing, holds: *mut bool) -> PlandecStatus {
    guard(|| {
        let dr = &unsafe { borrow(dr, "dr") }?.0;
        unsafe { put_value(holds, dr.holds(), "holds") }
    })
}

/// Writes the drawing JSON `{"host", "points", "routes"}`.
///
/// # Safety
/// `dr` is a live drawing handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_drawing_to_json(dr: *const PlandecDrawing, out: *mut *mut c_char) -> PlandecStatus {
    guard(|| {
        let dr = &unsafe { borrow(dr, "dr") }?.0;
        let s = serde_json::to_string(&dr.drawing.to_json()).map_err(Error::from)?;
        unsafe { put_string(out, s, "out") }
    })
}

/// Reads a drawing JSON and counts its crossings exactly; the result carries
/// no bound checks. Fails with `Precondition` on a drawing not in general position.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_drawing_from_json(
    json: *const c_char,
    out: *mut *mut PlandecDrawing,
) -> PlandecStatus {
    guard(|| {
        let j: DrawingJson = serde_json::from_str(unsafe { c_str(json, "json") }?).map_err(Error::from)?;
        let drawing = Drawing::from_json(&j)?;
        let report = plandec::draw::count_crossings(&drawing)?;
        unsafe { put(out, PlandecDrawing(CertifiedDrawing { drawing, report, checks: Vec::new() }), "out") }
    })
}

/// SVG with crossings marked.
///
/// # Safety
/// `dr` is a live drawing handle; `out` points to writable storage.
#[no_mangle]
pub unsafe extern "C" fn plandec_drawing_to_svg(dr: *const PlandecDrawing, out: *mut *mut c_char) -> PlandecStatus {
    guard(|| {
        let dr = &unsafe { borrow(dr, "dr") }?.0;
        unsafe { put_string(out, to_svg(&dr.drawing, true)?, "out") }
    })
}

/// # Safety
/// `dr` is null or a drawing handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn plandec_drawing_free(dr: *mut PlandecDrawing) {
    if !dr.is_null() {
        // SAFETY: per the contract, `dr` came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(dr) });
    }
}
