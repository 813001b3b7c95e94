//! C ABI for the `grape` library.
//!
//! Every handle is opaque and owned by the caller until passed to its
//! `_free` function. Fallible calls return a [`GrapeStatus`]; on failure the
//! message is available from [`grape_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use grape::diagram::bottleneck_distance;
use grape::features::{BuiltinFeature, EnumLimits, Feature};
use grape::graph::{GraphBuilder, GraphKind, WeightedGraph};
use grape::io::{export_diagram, import_diagram, load_edge_table, CsvOptions, DiagramDocument, Transform};
use grape::persistence::{compute_diagram, Mode, PersistenceDiagram};
use grape::Error;

/// Result codes. 1-3 match the command-line exit codes.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GrapeStatus {
    Ok = 0,
    InvalidArgument = 1,
    DataError = 2,
    ResourceLimit = 3,
    NullPointer = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GrapeMode {
    Steady = 0,
    Ranging = 1,
}

fn mode_arg(m: u32) -> Result<Mode, GrapeStatus> {
    match m {
        x if x == GrapeMode::Steady as u32 => Ok(Mode::Steady),
        x if x == GrapeMode::Ranging as u32 => Ok(Mode::Ranging),
        _ => {
            set_error(format!("unknown mode {m}"));
            Err(GrapeStatus::InvalidArgument)
        }
    }
}

pub struct GrapeGraphBuilder {
    inner: GraphBuilder,
}

pub struct GrapeGraph {
    inner: WeightedGraph,
}

pub struct GrapeDiagram {
    inner: PersistenceDiagram,
    /// Resolves witness labels when exporting.
    graph: Option<WeightedGraph>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(e: Error) -> GrapeStatus {
    let status = match e.exit_code() {
        1 => GrapeStatus::InvalidArgument,
        3 => GrapeStatus::ResourceLimit,
        _ => GrapeStatus::DataError,
    };
    set_error(e.to_string());
    status
}

fn guard(f: impl FnOnce() -> GrapeStatus) -> GrapeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            GrapeStatus::Panic
        }
    }
}

fn null(what: &str) -> GrapeStatus {
    set_error(format!("`{what}` is null"));
    GrapeStatus::NullPointer
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, GrapeStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("`{what}` is not valid UTF-8"));
        GrapeStatus::InvalidArgument
    })
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn grape_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub extern "C" fn grape_builder_new(directed: bool) -> *mut GrapeGraphBuilder {
    let kind = if directed {
        GraphKind::Directed
    } else {
        GraphKind::Undirected
    };
    Box::into_raw(Box::new(GrapeGraphBuilder {
        inner: GraphBuilder::new(kind),
    }))
}

/// # Safety
/// `builder` must come from [`grape_builder_new`]; labels must be
/// nul-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn grape_builder_add_edge(
    builder: *mut GrapeGraphBuilder,
    source: *const c_char,
    target: *const c_char,
    weight: f64,
) -> GrapeStatus {
    guard(|| {
        let Some(b) = builder.as_mut() else {
            return null("builder");
        };
        let s = try_ffi!(str_arg(source, "source"));
        let t = try_ffi!(str_arg(target, "target"));
        match b.inner.add_edge(s, t, weight) {
            Ok(_) => GrapeStatus::Ok,
            Err(e) => fail(e),
        }
    })
}

/// Consumes the builder. Returns null if `builder` is null.
///
/// # Safety
/// `builder` must come from [`grape_builder_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn grape_builder_build(builder: *mut GrapeGraphBuilder) -> *mut GrapeGraph {
    if builder.is_null() {
        null("builder");
        return ptr::null_mut();
    }
    let b = Box::from_raw(builder);
    Box::into_raw(Box::new(GrapeGraph { inner: b.inner.build() }))
}

/// # Safety
/// `builder` must come from [`grape_builder_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn grape_builder_free(builder: *mut GrapeGraphBuilder) {
    if !builder.is_null() {
        drop(Box::from_raw(builder));
    }
}

/// Loads a CSV edge list. `transform` may be null (identity) or one of
/// `identity`, `inverse`, `negshift`.
///
/// # Safety
/// Strings must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn grape_graph_from_csv(
    path: *const c_char,
    directed: bool,
    transform: *const c_char,
    out: *mut *mut GrapeGraph,
) -> GrapeStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let path = try_ffi!(str_arg(path, "path"));
        let t = if transform.is_null() {
            Transform::Identity
        } else {
            match try_ffi!(str_arg(transform, "transform")).parse::<Transform>() {
                Ok(t) => t,
                Err(e) => return fail(e),
            }
        };
        let opts = CsvOptions {
            directed,
            ..CsvOptions::default()
        };
        let kind = if directed {
            GraphKind::Directed
        } else {
            GraphKind::Undirected
        };
        match load_edge_table(path, &opts).and_then(|table| table.build(kind, &t)) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(GrapeGraph { inner: g }));
                GrapeStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grape_graph_vertex_count(graph: *const GrapeGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grape_graph_edge_count(graph: *const GrapeGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grape_graph_free(graph: *mut GrapeGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Computes the diagram of a registered feature (`hub`, `whub`, `dhub`,
/// `eulerian`, `independent`, `max-independent`, `matching`,
/// `max-matching`, `kernel`). `mode` is a [`GrapeMode`] value. The
/// enumeration cap honours `GRAPE_MAX_SETS`.
///
/// # Safety
/// `graph` must be live, `feature` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grape_diagram_compute(
    graph: *const GrapeGraph,
    feature: *const c_char,
    mode: u32,
    out: *mut *mut GrapeDiagram,
) -> GrapeStatus {
    guard(|| {
        let Some(g) = graph.as_ref() else {
            return null("graph");
        };
        if out.is_null() {
            return null("out");
        }
        let name = try_ffi!(str_arg(feature, "feature"));
        let mode = try_ffi!(mode_arg(mode));
        let result = BuiltinFeature::from_name(name)
            .and_then(|f| compute_diagram(&f as &dyn Feature, &g.inner, mode, EnumLimits::from_env()));
        match result {
            Ok(d) => {
                *out = Box::into_raw(Box::new(GrapeDiagram {
                    inner: d,
                    graph: Some(g.inner.clone()),
                }));
                GrapeStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Number of distinct cornerpoints.
///
/// # Safety
/// `diagram` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grape_diagram_len(diagram: *const GrapeDiagram) -> usize {
    diagram.as_ref().map_or(0, |d| d.inner.cornerpoints().len())
}

/// Reads cornerpoint `index`; an infinite death is reported as `INFINITY`.
///
/// # Safety
/// `diagram` must be live; output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn grape_diagram_point(
    diagram: *const GrapeDiagram,
    index: usize,
    birth: *mut f64,
    death: *mut f64,
    multiplicity: *mut usize,
) -> GrapeStatus {
    guard(|| {
        let Some(d) = diagram.as_ref() else {
            return null("diagram");
        };
        if birth.is_null() || death.is_null() || multiplicity.is_null() {
            return null("output");
        }
        let Some(c) = d.inner.cornerpoints().get(index) else {
            set_error(format!("index {index} out of range"));
            return GrapeStatus::InvalidArgument;
        };
        *birth = c.birth;
        *death = c.death;
        *multiplicity = c.multiplicity;
        GrapeStatus::Ok
    })
}

/// Cornerpoints with `birth <= u` and `death > v`, counted with
/// multiplicity: the steady or ranging count at `(u, v)`. Needs `u < v`.
///
/// # Safety
/// `diagram` must be live; `count` writable.
#[no_mangle]
pub unsafe extern "C" fn grape_diagram_count_at(
    diagram: *const GrapeDiagram,
    u: f64,
    v: f64,
    count: *mut usize,
) -> GrapeStatus {
    guard(|| {
        let Some(d) = diagram.as_ref() else {
            return null("diagram");
        };
        if count.is_null() {
            return null("count");
        }
        match d.inner.count_at(u, v) {
            Ok(n) => {
                *count = n;
                GrapeStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// Both diagrams must be live; `distance` writable.
#[no_mangle]
pub unsafe extern "C" fn grape_bottleneck(
    a: *const GrapeDiagram,
    b: *const GrapeDiagram,
    distance: *mut f64,
) -> GrapeStatus {
    guard(|| {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return null("diagram");
        };
        if distance.is_null() {
            return null("distance");
        }
        *distance = bottleneck_distance(&a.inner, &b.inner);
        GrapeStatus::Ok
    })
}

/// Serializes the diagram document. Release with [`grape_string_free`].
/// Returns null on failure.
///
/// # Safety
/// `diagram` must be live.
#[no_mangle]
pub unsafe extern "C" fn grape_diagram_to_json(diagram: *const GrapeDiagram) -> *mut c_char {
    let Some(d) = diagram.as_ref() else {
        null("diagram");
        return ptr::null_mut();
    };
    let empty;
    let g = match &d.graph {
        Some(g) => g,
        None => {
            empty = GraphBuilder::new(GraphKind::Undirected).build();
            &empty
        }
    };
    let json = export_diagram(&d.inner, g).to_json();
    CString::new(json).map_or(ptr::null_mut(), CString::into_raw)
}

/// Parses a diagram document. Witnesses are resolved against `graph` when
/// it is non-null and dropped otherwise.
///
/// # Safety
/// `json` must be nul-terminated; `graph` live or null; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn grape_diagram_from_json(
    json: *const c_char,
    graph: *const GrapeGraph,
    out: *mut *mut GrapeDiagram,
) -> GrapeStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let text = try_ffi!(str_arg(json, "json"));
        let g = graph.as_ref().map(|g| &g.inner);
        match DiagramDocument::from_json(text).and_then(|doc| import_diagram(&doc, g)) {
            Ok(d) => {
                *out = Box::into_raw(Box::new(GrapeDiagram {
                    inner: d,
                    graph: g.cloned(),
                }));
                GrapeStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `diagram` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn grape_diagram_free(diagram: *mut GrapeDiagram) {
    if !diagram.is_null() {
        drop(Box::from_raw(diagram));
    }
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn grape_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
