//! C interface to `rookrep`.
//!
//! Every function returns a [`RookrepStatus`]. On failure a message is kept
//! per thread and can be read with [`rookrep_last_error`]. Strings handed out
//! by the library are owned by the caller and released with
//! [`rookrep_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rookrep::branching::{bratteli_graph, ExportFormat};
use rookrep::combinatorics::{Multipartition, Partition};
use rookrep::grothendieck::{apply_word, lr_coefficient, parse_word, GrothBasisVec, GrothVector};
use rookrep::jucysmurphy::{is_prime, jm_spectrum};
use rookrep::monoid::enumerate_elements;
use rookrep::seminormal::{rook_irrep, Representation};
use rookrep::verify::{self, Params, Suite};
use rookrep::Error;
use serde_json::{json, Value};

const MAX_N: usize = 6;
const MAX_R: usize = 8;

/// Result of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RookrepStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    TooLarge = 5,
    /// A verification suite ran and at least one check failed.
    VerificationFailed = 6,
    Internal = 7,
}

/// Graph serialization for [`rookrep_bratteli`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RookrepFormat {
    Json = 0,
    Dot = 1,
}

/// Opaque handle to a seminormal irreducible representation.
pub struct RookrepIrrep {
    rep: Representation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(RookrepStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => RookrepStatus::Parse,
            Error::TooLarge(_) => RookrepStatus::TooLarge,
            Error::Inconsistent(_) => RookrepStatus::Internal,
            _ => RookrepStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `f`, converting errors and panics to a status code.
fn guarded(f: impl FnOnce() -> Outcome<()>) -> RookrepStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RookrepStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            RookrepStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(RookrepStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(RookrepStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn check_out<T>(out: *mut T) -> Outcome<()> {
    if out.is_null() {
        return Err(Failure(RookrepStatus::NullPointer, "output pointer is null".into()));
    }
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Outcome<()> {
    let c = CString::new(text).map_err(|_| Failure(RookrepStatus::Internal, "nul in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn limit(ok: bool, msg: impl Into<String>) -> Outcome<()> {
    if ok {
        Ok(())
    } else {
        Err(Failure(RookrepStatus::TooLarge, msg.into()))
    }
}

fn check_nr(n: usize, r: usize) -> Outcome<()> {
    limit(n <= MAX_N, format!("n = {n} exceeds the limit {MAX_N}"))?;
    if r == 0 {
        return Err(Failure(RookrepStatus::InvalidArgument, "r must be positive".into()));
    }
    limit(r <= MAX_R, format!("r = {r} exceeds the limit {MAX_R}"))
}

fn check_p(p: u64) -> Outcome<()> {
    if !is_prime(p) {
        return Err(Failure(RookrepStatus::InvalidArgument, format!("p = {p} is not prime")));
    }
    Ok(())
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn rookrep_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rookrep_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// All elements of `C_r ≀ R_n` as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rookrep_enumerate(n: usize, r: usize, out: *mut *mut c_char) -> RookrepStatus {
    guarded(|| {
        check_out(out)?;
        check_nr(n, r)?;
        let elements = enumerate_elements(n, r)?;
        let list: Vec<Value> = elements.iter().map(|e| e.to_json()).collect();
        write_string(out, json!({ "n": n, "r": r, "count": elements.len(), "elements": list }).to_string())
    })
}

/// Builds `V_λ^n`; `lambda` is a multipartition in JSON, e.g. `[[2,1],[]]`.
///
/// # Safety
/// `lambda` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rookrep_irrep_new(
    lambda: *const c_char,
    n: usize,
    out: *mut *mut RookrepIrrep,
) -> RookrepStatus {
    guarded(|| {
        check_out(out)?;
        let lambda = Multipartition::from_json_str(read_str(lambda, "lambda")?)?;
        check_nr(n, lambda.r())?;
        let rep = rook_irrep(&lambda, n)?;
        *out = Box::into_raw(Box::new(RookrepIrrep { rep }));
        Ok(())
    })
}

/// Releases a handle from [`rookrep_irrep_new`]. Null is ignored.
///
/// # Safety
/// `h` must come from [`rookrep_irrep_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rookrep_irrep_free(h: *mut RookrepIrrep) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

unsafe fn handle<'a>(h: *const RookrepIrrep) -> Outcome<&'a RookrepIrrep> {
    h.as_ref()
        .ok_or_else(|| Failure(RookrepStatus::NullPointer, "handle is null".into()))
}

/// Dimension of the representation.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rookrep_irrep_dim(h: *const RookrepIrrep, out: *mut usize) -> RookrepStatus {
    guarded(|| {
        check_out(out)?;
        *out = handle(h)?.rep.dim();
        Ok(())
    })
}

/// Label, basis and generator matrices as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rookrep_irrep_json(h: *const RookrepIrrep, out: *mut *mut c_char) -> RookrepStatus {
    guarded(|| {
        check_out(out)?;
        let text = handle(h)?.rep.to_json().to_string();
        write_string(out, text)
    })
}

/// Jucys-Murphy eigenvalues on the basis, as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rookrep_irrep_jm_spectrum(
    h: *const RookrepIrrep,
    out: *mut *mut c_char,
) -> RookrepStatus {
    guarded(|| {
        check_out(out)?;
        let spectrum = jm_spectrum(&handle(h)?.rep)?;
        write_string(out, spectrum.to_json().to_string())
    })
}

/// Bratteli diagram for `r` up to level `nmax`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rookrep_bratteli(
    r: usize,
    nmax: usize,
    format: RookrepFormat,
    out: *mut *mut c_char,
) -> RookrepStatus {
    guarded(|| {
        check_out(out)?;
        check_nr(nmax, r)?;
        let format = match format {
            RookrepFormat::Json => ExportFormat::Json,
            RookrepFormat::Dot => ExportFormat::Dot,
        };
        write_string(out, bratteli_graph(r, nmax)?.export(format))
    })
}

/// Applies a word such as `"f0 f1 B"` (rightmost first) to the class `start`,
/// written `LAMBDA:M` as in `"[2,1]:0"`, and returns the result as JSON.
///
/// # Safety
/// `word` and `start` must be nul-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rookrep_groth_apply(
    p: u64,
    word: *const c_char,
    start: *const c_char,
    out: *mut *mut c_char,
) -> RookrepStatus {
    guarded(|| {
        check_out(out)?;
        check_p(p)?;
        let word = parse_word(read_str(word, "word")?)?;
        let start: GrothBasisVec = read_str(start, "start")?.parse()?;
        let v = GrothVector::basis(start, Some(p))?;
        write_string(out, apply_word(&word, &v)?.to_json().to_string())
    })
}

/// Littlewood-Richardson coefficient `c^λ_{μν}`; partitions are JSON arrays.
///
/// # Safety
/// The partitions must be nul-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rookrep_lr_coefficient(
    lambda: *const c_char,
    mu: *const c_char,
    nu: *const c_char,
    out: *mut u64,
) -> RookrepStatus {
    guarded(|| {
        check_out(out)?;
        let parse = |p: *const c_char, what: &str| -> Outcome<Partition> {
            serde_json::from_str(read_str(p, what)?)
                .map_err(|e| Failure(RookrepStatus::Parse, format!("{what}: {e}")))
        };
        let (lambda, mu, nu) = (parse(lambda, "lambda")?, parse(mu, "mu")?, parse(nu, "nu")?);
        limit(lambda.size() <= 2 * MAX_N, "partition too large")?;
        *out = lr_coefficient(&lambda, &mu, &nu);
        Ok(())
    })
}

/// Runs a verification suite (`"all"`, `"jm"`, ...). Zero for `n`, `r`, `p`
/// or `degree` selects the default. The JSON report is written to `out` even
/// when the status is [`RookrepStatus::VerificationFailed`].
///
/// # Safety
/// `suite` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rookrep_verify(
    suite: *const c_char,
    n: usize,
    r: usize,
    p: u64,
    degree: usize,
    out: *mut *mut c_char,
) -> RookrepStatus {
    guarded(|| {
        check_out(out)?;
        let suite: Suite = read_str(suite, "suite")?.parse()?;
        let some = |x: usize| (x != 0).then_some(x);
        let (n, r, degree) = (some(n), some(r), some(degree));
        limit(n.is_none_or(|n| n <= MAX_N), "n too large")?;
        limit(r.is_none_or(|r| r <= MAX_R), "r too large")?;
        let p = (p != 0).then_some(p);
        if let Some(p) = p {
            check_p(p)?;
        }
        let reports = verify::run(suite, &Params { n, r, p, degree })?;
        let passed = reports.iter().all(|rep| rep.passed());
        let list: Vec<Value> = reports.iter().map(|rep| rep.to_json()).collect();
        write_string(out, json!({ "passed": passed, "suites": list }).to_string())?;
        if passed {
            Ok(())
        } else {
            Err(Failure(RookrepStatus::VerificationFailed, "verification failed".into()))
        }
    })
}
