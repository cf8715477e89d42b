//! C ABI over the hypermatch library.
//!
//! Instances travel as opaque `HmHypergraph` handles created from the text
//! format; analyses come back either through typed out-parameters or as
//! canonical JSON strings (see `hm_report_json`). Every function returns an
//! `HmStatus` code; out-parameters are written only on `HM_STATUS_OK`.
//!
//! Strings returned by this library must be released with `hm_string_free`,
//! handles with `hm_hypergraph_free`. The header is generated into
//! `include/hypermatch.h` by the build script.

use hypermatch::decompose::DecompTag;
use hypermatch::error::Error;
use hypermatch::report::{self, CharacWhich, TheoremName};
use hypermatch::solve::{max_matching, min_vertex_cover, WeightFn};
use hypermatch::{balance, coloring, io, Hypergraph, Limits};
use std::ffi::{c_char, CStr, CString};
use std::ptr;

/// Opaque hypergraph handle.
pub struct HmHypergraph {
    inner: Hypergraph,
}

/// Status codes; every entry point returns one.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HmStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    NotBalanced = 5,
    TooLarge = 6,
    UnknownCommand = 7,
}

/// Weight presets for the matching and cover numbers.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HmWeights {
    EdgeCount = 0,
    VertexCount = 1,
}

fn status_of(err: &Error) -> HmStatus {
    match err {
        Error::Parse(_) => HmStatus::ParseError,
        Error::InstanceTooLarge => HmStatus::TooLarge,
        Error::NotBalanced => HmStatus::NotBalanced,
        _ => HmStatus::InvalidInput,
    }
}

fn weight_fn(weights: HmWeights) -> WeightFn {
    match weights {
        HmWeights::EdgeCount => WeightFn::EWeights,
        HmWeights::VertexCount => WeightFn::VWeights,
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hm_hypergraph_parse(
    text: *const c_char,
    out: *mut *mut HmHypergraph,
) -> HmStatus {
    if text.is_null() || out.is_null() {
        return HmStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let text = match CStr::from_ptr(text).to_str() {
        Ok(text) => text,
        Err(_) => return HmStatus::InvalidUtf8,
    };
    match io::parse(text) {
        Ok(instance) => {
            let handle = Box::new(HmHypergraph {
                inner: instance.hypergraph,
            });
            *out = Box::into_raw(handle);
            HmStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// # Safety
/// `handle` must come from `hm_hypergraph_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hm_hypergraph_free(handle: *mut HmHypergraph) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Vertex count; zero for a null handle.
///
/// # Safety
/// `handle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hm_vertex_count(handle: *const HmHypergraph) -> u32 {
    handle.as_ref().map_or(0, |h| h.inner.vertex_count() as u32)
}

/// Edge count; zero for a null handle.
///
/// # Safety
/// `handle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hm_edge_count(handle: *const HmHypergraph) -> u32 {
    handle.as_ref().map_or(0, |h| h.inner.edge_count() as u32)
}

/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hm_is_balanced(
    handle: *const HmHypergraph,
    max_states: u64,
    out: *mut bool,
) -> HmStatus {
    let (Some(h), false) = (handle.as_ref(), out.is_null()) else {
        return HmStatus::NullArgument;
    };
    match balance::is_balanced(&h.inner, &Limits::with_max_states(max_states)) {
        Ok(cert) => {
            *out = cert.balanced;
            HmStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// d-maximum matching weight under a weight preset.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hm_matching_number(
    handle: *const HmHypergraph,
    weights: HmWeights,
    max_states: u64,
    out: *mut u64,
) -> HmStatus {
    let (Some(h), false) = (handle.as_ref(), out.is_null()) else {
        return HmStatus::NullArgument;
    };
    match max_matching(
        &h.inner,
        &weight_fn(weights),
        &Limits::with_max_states(max_states),
    ) {
        Ok(matching) => {
            *out = matching.weight;
            HmStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Minimum integer d-vertex cover weight under a weight preset.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hm_cover_number(
    handle: *const HmHypergraph,
    weights: HmWeights,
    max_states: u64,
    out: *mut u64,
) -> HmStatus {
    let (Some(h), false) = (handle.as_ref(), out.is_null()) else {
        return HmStatus::NullArgument;
    };
    match min_vertex_cover(
        &h.inner,
        &weight_fn(weights),
        &Limits::with_max_states(max_states),
    ) {
        Ok(cover) => {
            *out = cover.total;
            HmStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Number of colors of a proper edge coloring in at most Δ colors; fails
/// with `HM_STATUS_NOT_BALANCED` on unbalanced inputs.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hm_edge_coloring_size(
    handle: *const HmHypergraph,
    max_states: u64,
    out: *mut u32,
) -> HmStatus {
    let (Some(h), false) = (handle.as_ref(), out.is_null()) else {
        return HmStatus::NullArgument;
    };
    match coloring::edge_coloring(&h.inner, &Limits::with_max_states(max_states)) {
        Ok(coloring) => {
            *out = coloring.k as u32;
            HmStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Runs a named analysis and returns its canonical JSON report. Commands:
/// `check-balance`, `match`, `cover`, `konig` (argument `E`/`V`),
/// `color`, `decompose` (argument `dpm`/`fqn`/`classic`), `verify`
/// (argument `galed2`/`galed1`/`equalities`), `charac` (argument
/// `D`/`weighted`/`stable`). Pass null for no argument.
///
/// # Safety
/// `handle` must be a live handle, `command` a valid C string, `arg` null or
/// a valid C string, `out_json` a valid pointer. The result must be released
/// with `hm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hm_report_json(
    handle: *const HmHypergraph,
    command: *const c_char,
    arg: *const c_char,
    max_states: u64,
    out_json: *mut *mut c_char,
) -> HmStatus {
    let (Some(h), false) = (handle.as_ref(), out_json.is_null() || command.is_null()) else {
        return HmStatus::NullArgument;
    };
    *out_json = ptr::null_mut();
    let Ok(command) = CStr::from_ptr(command).to_str() else {
        return HmStatus::InvalidUtf8;
    };
    let arg = if arg.is_null() {
        None
    } else {
        match CStr::from_ptr(arg).to_str() {
            Ok(arg) => Some(arg),
            Err(_) => return HmStatus::InvalidUtf8,
        }
    };
    let limits = Limits::with_max_states(max_states);
    let result = run_report(&h.inner, command, arg, &limits);
    match result {
        Ok(Some(report)) => {
            let Ok(string) = CString::new(report.to_canonical_string()) else {
                return HmStatus::InvalidInput;
            };
            *out_json = string.into_raw();
            HmStatus::Ok
        }
        Ok(None) => HmStatus::UnknownCommand,
        Err(err) => status_of(&err),
    }
}

fn run_report(
    h: &Hypergraph,
    command: &str,
    arg: Option<&str>,
    limits: &Limits,
) -> Result<Option<report::Report>, Error> {
    let weights = match arg {
        Some("E") => WeightFn::EWeights,
        _ => WeightFn::VWeights,
    };
    let report = match command {
        "check-balance" => report::check_balance(h, limits)?,
        "match" => report::matching(h, &weights, limits)?,
        "cover" => report::cover(h, &weights, limits)?,
        "konig" => report::konig(h, &weights, limits)?,
        "color" => report::color(h, limits)?,
        "decompose" => {
            let tag = match arg {
                Some("dpm") => DecompTag::Dpm,
                Some("fqn") => DecompTag::Fqn,
                Some("classic") => DecompTag::ClassicDac,
                _ => return Ok(None),
            };
            report::decomposition(h, tag, limits)?
        }
        "verify" => {
            let theorem = match arg {
                Some("galed2") => TheoremName::GalEd2,
                Some("galed1") => TheoremName::GalEd1,
                Some("equalities") => TheoremName::Equalities,
                _ => return Ok(None),
            };
            report::verify(h, theorem, limits)?
        }
        "charac" => {
            let which = match arg {
                Some("D") => CharacWhich::D,
                Some("weighted") => CharacWhich::Weighted,
                Some("stable") => CharacWhich::Stable,
                _ => return Ok(None),
            };
            report::charac(h, which, None, limits)?
        }
        _ => return Ok(None),
    };
    Ok(Some(report))
}

/// # Safety
/// `text` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hm_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn hm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
