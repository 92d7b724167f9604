//! C ABI over `polyaut`. Polynomials and maps cross the boundary as opaque
//! handles; every fallible call returns a [`PolyautStatus`] and leaves a
//! message retrievable with [`polyaut_last_error`].
//!
//! Ownership: handles and strings returned through out-parameters belong to
//! the caller and are released with the matching `_free` function.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polyaut::construct::{build_pair, ConstructError, ConstructionInput};
use polyaut::coordcheck::{coordinate_test_2var, coordinate_test_z, CoordError, CoordVerdict};
use polyaut::groebner::{contains_one, GroebnerError};
use polyaut::modring::{ModError, ZPoly, ZXPoly};
use polyaut::tame::{classify, TameError, Verdict};
use polyaut::textio::TextError;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyautStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    PreconditionFailed = 5,
    StepLimitExceeded = 6,
    Panic = 7,
}

/// Opaque polynomial in `Q[x, y, z]`.
pub struct PolyautPoly(polyaut::Polynomial);

/// Opaque polynomial map with 2 or 3 components.
pub struct PolyautMap(polyaut::PolyMap);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(PolyautStatus, String);

type FfiResult<T> = Result<T, Failure>;

impl From<TextError> for Failure {
    fn from(e: TextError) -> Self {
        match e {
            TextError::Parse(_) => Failure(PolyautStatus::ParseError, e.to_string()),
            TextError::Arity(_) => Failure(PolyautStatus::InvalidArgument, e.to_string()),
        }
    }
}

impl From<ModError> for Failure {
    fn from(e: ModError) -> Self {
        let status = match e {
            ModError::NotZPoly(_) | ModError::NotZXPoly(_) => PolyautStatus::InvalidArgument,
            _ => PolyautStatus::PreconditionFailed,
        };
        Failure(status, e.to_string())
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Mod(m) => m.into(),
            other => Failure(PolyautStatus::PreconditionFailed, other.to_string()),
        }
    }
}

impl From<TameError> for Failure {
    fn from(e: TameError) -> Self {
        match e {
            TameError::Mod(m) => m.into(),
            TameError::Construct(c) => c.into(),
            other => Failure(PolyautStatus::PreconditionFailed, other.to_string()),
        }
    }
}

impl From<GroebnerError> for Failure {
    fn from(e: GroebnerError) -> Self {
        let status = match e {
            GroebnerError::StepLimitExceeded(_) => PolyautStatus::StepLimitExceeded,
            GroebnerError::ZeroIdeal => PolyautStatus::PreconditionFailed,
        };
        Failure(status, e.to_string())
    }
}

impl From<CoordError> for Failure {
    fn from(e: CoordError) -> Self {
        match e {
            CoordError::Groebner(g) => g.into(),
            other => Failure(PolyautStatus::PreconditionFailed, other.to_string()),
        }
    }
}

impl From<polyaut::MapError> for Failure {
    fn from(e: polyaut::MapError) -> Self {
        Failure(PolyautStatus::InvalidArgument, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> FfiResult<()>) -> PolyautStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            PolyautStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PolyautStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(PolyautStatus::NullArgument, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> FfiResult<&'a str> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(PolyautStatus::InvalidUtf8, "input is not valid UTF-8".into()))
}

unsafe fn borrow<'a, T>(p: *const T) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the most recent failed call on this thread, or null. Valid
/// until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn polyaut_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn polyaut_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn polyaut_poly_parse(src: *const c_char, out: *mut *mut PolyautPoly) -> PolyautStatus {
    guard(|| {
        let p = polyaut::parse_poly(text(src)?).map_err(|e| Failure(PolyautStatus::ParseError, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(PolyautPoly(p))))
    })
}

/// Canonical text of `p`; free with [`polyaut_string_free`]. Null on a null handle.
#[no_mangle]
pub unsafe extern "C" fn polyaut_poly_to_string(p: *const PolyautPoly) -> *mut c_char {
    match p.as_ref() {
        Some(p) => into_c_string(polyaut::print_canonical(&p.0)),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn polyaut_poly_equal(a: *const PolyautPoly, b: *const PolyautPoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

#[no_mangle]
pub unsafe extern "C" fn polyaut_poly_free(p: *mut PolyautPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

#[no_mangle]
pub unsafe extern "C" fn polyaut_map_parse(src: *const c_char, out: *mut *mut PolyautMap) -> PolyautStatus {
    guard(|| {
        let m = polyaut::parse_map(text(src)?)?;
        write_out(out, Box::into_raw(Box::new(PolyautMap(m))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn polyaut_map_to_string(m: *const PolyautMap) -> *mut c_char {
    match m.as_ref() {
        Some(m) => into_c_string(polyaut::print_map(&m.0)),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn polyaut_map_arity(m: *const PolyautMap) -> usize {
    m.as_ref().map_or(0, |m| m.0.arity())
}

/// New handle for component `index` of `m`.
#[no_mangle]
pub unsafe extern "C" fn polyaut_map_component(
    m: *const PolyautMap,
    index: usize,
    out: *mut *mut PolyautPoly,
) -> PolyautStatus {
    guard(|| {
        let m = borrow(m)?;
        let c = m
            .0
            .components()
            .get(index)
            .ok_or_else(|| Failure(PolyautStatus::InvalidArgument, format!("component {index} out of range")))?;
        write_out(out, Box::into_raw(Box::new(PolyautPoly(c.clone()))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn polyaut_map_free(m: *mut PolyautMap) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// `out_i = f_i(g)`.
#[no_mangle]
pub unsafe extern "C" fn polyaut_map_compose(
    f: *const PolyautMap,
    g: *const PolyautMap,
    out: *mut *mut PolyautMap,
) -> PolyautStatus {
    guard(|| {
        let h = borrow(f)?.0.compose(&borrow(g)?.0)?;
        write_out(out, Box::into_raw(Box::new(PolyautMap(h))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn polyaut_map_verify_inverse(
    f: *const PolyautMap,
    g: *const PolyautMap,
    out: *mut bool,
) -> PolyautStatus {
    guard(|| {
        let ok = polyaut::verify_inverse(&borrow(f)?.0, &borrow(g)?.0)?;
        write_out(out, ok)
    })
}

unsafe fn pair_input(p: *const PolyautPoly, a: *const PolyautPoly, b: *const PolyautPoly) -> FfiResult<ConstructionInput> {
    let p = ZPoly::new(borrow(p)?.0.clone())?;
    let a = ZXPoly::new(borrow(a)?.0.clone())?;
    let b = match b.as_ref() {
        Some(b) => Some(ZXPoly::new(b.0.clone())?),
        None => None,
    };
    Ok(ConstructionInput::from_parts(p, a, b)?)
}

/// Builds `(f1, f2)` and its inverse `(g1, g2)`. `b` may be null, in which
/// case the inverse of `a` modulo `p` is computed.
#[no_mangle]
pub unsafe extern "C" fn polyaut_construct(
    p: *const PolyautPoly,
    a: *const PolyautPoly,
    b: *const PolyautPoly,
    forward: *mut *mut PolyautMap,
    inverse: *mut *mut PolyautMap,
) -> PolyautStatus {
    guard(|| {
        if forward.is_null() || inverse.is_null() {
            return Err(null());
        }
        let r = build_pair(pair_input(p, a, b)?)?;
        write_out(forward, Box::into_raw(Box::new(PolyautMap(r.forward()))))?;
        write_out(inverse, Box::into_raw(Box::new(PolyautMap(r.inverse()))))
    })
}

/// Writes `true` to `is_tame` when the constructed map is tame, and the
/// `x`-degree of `a mod p` to `d1`.
#[no_mangle]
pub unsafe extern "C" fn polyaut_classify(
    p: *const PolyautPoly,
    a: *const PolyautPoly,
    is_tame: *mut bool,
    d1: *mut i64,
) -> PolyautStatus {
    guard(|| {
        if is_tame.is_null() || d1.is_null() {
            return Err(null());
        }
        let p = ZPoly::new(borrow(p)?.0.clone())?;
        let a = ZXPoly::new(borrow(a)?.0.clone())?;
        let v = classify(&p, &a)?;
        write_out(is_tame, v.verdict == Verdict::Tame)?;
        write_out(d1, v.d1)
    })
}

/// Nagata's automorphism `(x - 2sy - s^2 z, y + sz, z)`, `s = xz + y^2`.
#[no_mangle]
pub unsafe extern "C" fn polyaut_nagata(out: *mut *mut PolyautMap) -> PolyautStatus {
    guard(|| write_out(out, Box::into_raw(Box::new(PolyautMap(polyaut::tame::nagata_sigma())))))
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PolyautCoordReport {
    pub is_coordinate: bool,
    pub lnd_ok: bool,
    pub unimodular_ok: bool,
    pub degree_bound: usize,
}

/// Coordinate test over `k[z]`, or over `k` when `over_k` is set.
#[no_mangle]
pub unsafe extern "C" fn polyaut_coord_test(
    f: *const PolyautPoly,
    over_k: bool,
    out: *mut PolyautCoordReport,
) -> PolyautStatus {
    guard(|| {
        let f = &borrow(f)?.0;
        let r = if over_k { coordinate_test_2var(f) } else { coordinate_test_z(f) }?;
        write_out(
            out,
            PolyautCoordReport {
                is_coordinate: r.verdict == CoordVerdict::Coordinate,
                lnd_ok: r.lnd_ok,
                unimodular_ok: r.unimodular_ok,
                degree_bound: r.degree_bound,
            },
        )
    })
}

/// Whether `1` lies in the ideal generated by `gens[0..len]`.
#[no_mangle]
pub unsafe extern "C" fn polyaut_contains_one(
    gens: *const *const PolyautPoly,
    len: usize,
    out: *mut bool,
) -> PolyautStatus {
    guard(|| {
        let polys = if len == 0 {
            Vec::new()
        } else {
            if gens.is_null() {
                return Err(null());
            }
            std::slice::from_raw_parts(gens, len)
                .iter()
                .map(|&g| borrow(g).map(|g| g.0.clone()))
                .collect::<FfiResult<Vec<_>>>()?
        };
        write_out(out, contains_one(&polys)?)
    })
}
