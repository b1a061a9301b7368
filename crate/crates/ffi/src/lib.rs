//! C ABI over `multideg`.
//!
//! Every fallible call returns an [`MdStatus`]. Outputs go through pointer
//! arguments and are only written on success. Handles come from a `*_new` or
//! `*_from_*` call and must be released with the matching `*_free`. Strings
//! returned by the library are released with [`md_string_free`].
//! [`md_last_error`] describes the most recent failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use multideg::multidegree::{compute_table, MultidegreeTable};
use multideg::parking::{self, Badness, Insertion, Removal};
use multideg::{AsymMultinomial, Composition, Error, ParkingFunction, PointedParkingFunction};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdStatus {
    Ok = 0,
    /// Input rejected: bad shape, label, range or parse error.
    Domain = 1,
    /// Two computations that must agree did not.
    Inconsistency = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdInsertion {
    Iota = 0,
    IotaPrime = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdRemoval {
    Nu = 0,
    NuPrime = 1,
}

/// Memo cache for asymmetric multinomials.
pub struct MdEngine {
    inner: AsymMultinomial,
}

pub struct MdTable {
    inner: MultidegreeTable,
}

pub struct MdParkingFunction {
    inner: ParkingFunction,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

enum Fail {
    Lib(Error),
    Null(&'static str),
    Utf8,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> MdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MdStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            if e.is_internal() {
                MdStatus::Inconsistency
            } else {
                MdStatus::Domain
            }
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            MdStatus::NullPointer
        }
        Ok(Err(Fail::Utf8)) => {
            set_error("string is not valid UTF-8".into());
            MdStatus::InvalidUtf8
        }
        Err(_) => {
            set_error("panic inside multideg".into());
            MdStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn write_out<T>(out: *mut T, v: T, what: &'static str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail::Utf8)?;
    write_out(out, c.into_raw(), "out")
}

unsafe fn parts(ptr_: *const u32, len: usize) -> Result<Composition, Fail> {
    if len == 0 {
        return Ok(Composition::empty());
    }
    if ptr_.is_null() {
        return Err(Fail::Null("parts"));
    }
    Ok(Composition::new(std::slice::from_raw_parts(ptr_, len).to_vec()))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::Null("string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail::Utf8)
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn md_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn md_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn md_engine_new() -> *mut MdEngine {
    Box::into_raw(Box::new(MdEngine {
        inner: AsymMultinomial::new(),
    }))
}

/// # Safety
/// `engine` must be NULL or a handle from `md_engine_new`.
#[no_mangle]
pub unsafe extern "C" fn md_engine_free(engine: *mut MdEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// `<<n;k>>` as a decimal string, with `n` taken from `len`.
///
/// # Safety
/// `engine` must be a live handle, `parts` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn md_engine_asym_multinomial(
    engine: *const MdEngine,
    parts_ptr: *const u32,
    len: usize,
    out: *mut *mut c_char,
) -> MdStatus {
    guard(|| {
        let engine = as_ref(engine, "engine")?;
        let k = parts(parts_ptr, len)?;
        let v = engine.inner.get(len as u32, &k)?;
        write_string(out, v.to_string())
    })
}

/// `(2m-1)!!` as a decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn md_odd_double_factorial(m: u32, out: *mut *mut c_char) -> MdStatus {
    guard(|| write_string(out, multideg::odd_double_factorial(u64::from(m)).to_string()))
}

/// `|CPF(n, k)|` with `n = len`.
///
/// # Safety
/// `parts` must point to `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn md_cpf_count(parts_ptr: *const u32, len: usize, out: *mut u64) -> MdStatus {
    guard(|| {
        let k = parts(parts_ptr, len)?;
        write_out(out, parking::count_cpf(len, &k)?, "out")
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn md_table_new(n: usize, out: *mut *mut MdTable) -> MdStatus {
    guard(|| {
        let inner = compute_table(n)?;
        write_out(out, Box::into_raw(Box::new(MdTable { inner })), "out")
    })
}

/// # Safety
/// `table` must be NULL or a handle from `md_table_new`.
#[no_mangle]
pub unsafe extern "C" fn md_table_free(table: *mut MdTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Number of entries, or 0 for NULL.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_table_len(table: *const MdTable) -> usize {
    table.as_ref().map_or(0, |t| t.inner.entries().len())
}

/// Copies entry `index`: `n - 3` parts into `parts_out` and the degree as a string.
///
/// # Safety
/// `parts_out` must have room for `cap` values; `deg_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn md_table_entry(
    table: *const MdTable,
    index: usize,
    parts_out: *mut u32,
    cap: usize,
    deg_out: *mut *mut c_char,
) -> MdStatus {
    guard(|| {
        let t = as_ref(table, "table")?;
        let (k, d) = t.inner.entries().get(index).ok_or_else(|| {
            Error::Range(format!("entry {index} of {}", t.inner.entries().len()))
        })?;
        if k.len() > cap {
            return Err(Error::Range(format!("need room for {} parts, got {cap}", k.len())).into());
        }
        if !k.is_empty() {
            if parts_out.is_null() {
                return Err(Fail::Null("parts_out"));
            }
            ptr::copy_nonoverlapping(k.parts().as_ptr(), parts_out, k.len());
        }
        write_string(deg_out, d.to_string())
    })
}

/// # Safety
/// `table` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn md_table_cone_degree(table: *const MdTable, out: *mut *mut c_char) -> MdStatus {
    guard(|| write_string(out, as_ref(table, "table")?.inner.total().to_string()))
}

/// # Safety
/// `table` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn md_table_to_json(table: *const MdTable, out: *mut *mut c_char) -> MdStatus {
    guard(|| write_string(out, as_ref(table, "table")?.inner.to_json().to_string()))
}

/// # Safety
/// `table` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn md_table_to_csv(table: *const MdTable, out: *mut *mut c_char) -> MdStatus {
    guard(|| write_string(out, as_ref(table, "table")?.inner.to_csv()?))
}

/// Parses `{"n": .., "columns": [[..], ..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn md_pf_from_json(json: *const c_char, out: *mut *mut MdParkingFunction) -> MdStatus {
    guard(|| {
        let inner: ParkingFunction = serde_json::from_str(read_str(json)?)
            .map_err(|e| Error::Parse(e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(MdParkingFunction { inner })), "out")
    })
}

/// # Safety
/// `pf` must be NULL or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn md_pf_free(pf: *mut MdParkingFunction) {
    if !pf.is_null() {
        drop(Box::from_raw(pf));
    }
}

/// # Safety
/// `pf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn md_pf_to_json(pf: *const MdParkingFunction, out: *mut *mut c_char) -> MdStatus {
    guard(|| {
        let pf = as_ref(pf, "pf")?;
        let s = serde_json::to_string(&pf.inner).map_err(|e| Error::Parse(e.to_string()))?;
        write_string(out, s)
    })
}

/// # Safety
/// `pf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn md_pf_render(pf: *const MdParkingFunction, out: *mut *mut c_char) -> MdStatus {
    guard(|| write_string(out, as_ref(pf, "pf")?.inner.render()))
}

/// Size of the parking function, or 0 for NULL.
///
/// # Safety
/// `pf` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_pf_size(pf: *const MdParkingFunction) -> usize {
    pf.as_ref().map_or(0, |p| p.inner.size())
}

/// # Safety
/// `pf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn md_pf_is_column_restricted(pf: *const MdParkingFunction, out: *mut bool) -> MdStatus {
    guard(|| write_out(out, as_ref(pf, "pf")?.inner.is_column_restricted(), "out"))
}

/// Writes `true` for a bad parking function, `false` for a good one.
///
/// # Safety
/// `pf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn md_pf_is_bad(pf: *const MdParkingFunction, out: *mut bool) -> MdStatus {
    guard(|| write_out(out, as_ref(pf, "pf")?.inner.classify() == Badness::Bad, "out"))
}

/// Inserts `n + 1` at lattice point `point` and returns a new handle.
///
/// # Safety
/// `pf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn md_pf_insert(
    pf: *const MdParkingFunction,
    point: usize,
    algorithm: MdInsertion,
    out: *mut *mut MdParkingFunction,
) -> MdStatus {
    guard(|| {
        let pp = PointedParkingFunction::new(as_ref(pf, "pf")?.inner.clone(), point)?;
        let algorithm = match algorithm {
            MdInsertion::Iota => Insertion::Iota,
            MdInsertion::IotaPrime => Insertion::IotaPrime,
        };
        let inner = parking::insert(&pp, algorithm)?;
        write_out(out, Box::into_raw(Box::new(MdParkingFunction { inner })), "out")
    })
}

/// Removes the largest label; writes the smaller parking function and the point.
///
/// # Safety
/// `pf` must be a live handle; `out` and `point_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn md_pf_remove(
    pf: *const MdParkingFunction,
    algorithm: MdRemoval,
    out: *mut *mut MdParkingFunction,
    point_out: *mut usize,
) -> MdStatus {
    guard(|| {
        if out.is_null() || point_out.is_null() {
            return Err(Fail::Null("out"));
        }
        let algorithm = match algorithm {
            MdRemoval::Nu => Removal::Nu,
            MdRemoval::NuPrime => Removal::NuPrime,
        };
        let pp = parking::remove(&as_ref(pf, "pf")?.inner, algorithm)?;
        point_out.write(pp.point());
        let inner = pp.pf().clone();
        write_out(out, Box::into_raw(Box::new(MdParkingFunction { inner })), "out")
    })
}
