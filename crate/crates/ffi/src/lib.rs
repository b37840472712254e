//! C ABI for the `dunkl` engine.
//!
//! Every object crosses the boundary as an opaque pointer that the caller
//! releases with the matching `*_free` function. Every fallible function
//! returns a [`DunklStatus`] and writes its result through an out-pointer;
//! on failure the out-pointer is left untouched and
//! [`dunkl_last_error_message`] describes the problem. Strings returned to
//! the caller are owned by the caller and released with [`dunkl_string_free`].
//!
//! Coordinate indices are 0-based. Vectors are passed as text, for example
//! `"1,i,-1/2"`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use dunkl::cli::parse_kappa;
use dunkl::{
    parse_polynomial, parse_vector, rho, run_suite, DunklContext as Context, Polynomial,
    RootSystem, RootSystemJson, Suite, VerifyConfig,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DunklStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    RootSystem = 4,
    Operator = 5,
    /// A verification suite ran and found a nonzero defect.
    CheckFailed = 6,
    Panic = 7,
}

pub struct DunklRootSystem(RootSystem);

pub struct DunklPolynomial(Polynomial);

pub struct DunklContext(Context);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl ToString) {
    let text = message.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).unwrap_or_default());
}

struct Failure(DunklStatus, String);

type FfiResult<T> = Result<T, Failure>;

fn fail<E: ToString>(status: DunklStatus) -> impl FnOnce(E) -> Failure {
    move |e| Failure(status, e.to_string())
}

fn guard(body: impl FnOnce() -> FfiResult<()>) -> DunklStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => DunklStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            DunklStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(DunklStatus::NullPointer, format!("{what} is null")))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Failure(DunklStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(DunklStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(Failure(
            DunklStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    if out.is_null() {
        return Err(Failure(
            DunklStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    let s = CString::new(s).map_err(fail(DunklStatus::Panic))?;
    out.write(s.into_raw());
    Ok(())
}

unsafe fn write_boxed<T>(out: *mut *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(Failure(
            DunklStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn write_poly(out: *mut *mut DunklPolynomial, p: Polynomial) -> FfiResult<()> {
    write_boxed(out, DunklPolynomial(p))
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dunkl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub unsafe extern "C" fn dunkl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Catalog system by name: `A1dim1`, `A3`, `B2`, `C4`, `D4`, ...
#[no_mangle]
pub unsafe extern "C" fn dunkl_root_system_from_name(
    name: *const c_char,
    out: *mut *mut DunklRootSystem,
) -> DunklStatus {
    guard(|| {
        let system =
            RootSystem::from_name(text(name, "name")?).map_err(fail(DunklStatus::RootSystem))?;
        write_boxed(out, DunklRootSystem(system))
    })
}

/// System from `{"dim": N, "roots": [["1","0"], ...]}`.
#[no_mangle]
pub unsafe extern "C" fn dunkl_root_system_from_json(
    json: *const c_char,
    out: *mut *mut DunklRootSystem,
) -> DunklStatus {
    guard(|| {
        let parsed: RootSystemJson =
            serde_json::from_str(text(json, "json")?).map_err(fail(DunklStatus::RootSystem))?;
        let system = RootSystem::from_json(&parsed).map_err(fail(DunklStatus::RootSystem))?;
        write_boxed(out, DunklRootSystem(system))
    })
}

#[no_mangle]
pub unsafe extern "C" fn dunkl_root_system_free(system: *mut DunklRootSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

#[no_mangle]
pub unsafe extern "C" fn dunkl_root_system_dim(
    system: *const DunklRootSystem,
    out: *mut usize,
) -> DunklStatus {
    guard(|| write(out, borrow(system, "system")?.0.dim()))
}

#[no_mangle]
pub unsafe extern "C" fn dunkl_root_system_root_count(
    system: *const DunklRootSystem,
    out: *mut usize,
) -> DunklStatus {
    guard(|| write(out, borrow(system, "system")?.0.roots().len()))
}

#[no_mangle]
pub unsafe extern "C" fn dunkl_root_system_orbit_count(
    system: *const DunklRootSystem,
    out: *mut usize,
) -> DunklStatus {
    guard(|| write(out, borrow(system, "system")?.0.orbits().len()))
}

/// Order of the reflection group; fails if it exceeds `max_order`.
#[no_mangle]
pub unsafe extern "C" fn dunkl_root_system_group_order(
    system: *const DunklRootSystem,
    max_order: usize,
    out: *mut usize,
) -> DunklStatus {
    guard(|| {
        let group = borrow(system, "system")?
            .0
            .generate_group(max_order)
            .map_err(fail(DunklStatus::RootSystem))?;
        write(out, group.len())
    })
}

#[no_mangle]
pub unsafe extern "C" fn dunkl_polynomial_parse(
    source: *const c_char,
    dim: usize,
    out: *mut *mut DunklPolynomial,
) -> DunklStatus {
    guard(|| {
        let p = parse_polynomial(text(source, "source")?, dim).map_err(fail(DunklStatus::Parse))?;
        write_poly(out, p)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dunkl_polynomial_free(p: *mut DunklPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text form; release with [`dunkl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dunkl_polynomial_to_string(
    p: *const DunklPolynomial,
    out: *mut *mut c_char,
) -> DunklStatus {
    guard(|| write_string(out, borrow(p, "polynomial")?.0.to_string()))
}

/// `{"dim": N, "terms": [{"exp": [...], "re": "...", "im": "..."}]}`.
#[no_mangle]
pub unsafe extern "C" fn dunkl_polynomial_to_json(
    p: *const DunklPolynomial,
    out: *mut *mut c_char,
) -> DunklStatus {
    guard(|| {
        let json = serde_json::to_string(&borrow(p, "polynomial")?.0.to_json())
            .map_err(fail(DunklStatus::Panic))?;
        write_string(out, json)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dunkl_polynomial_is_zero(
    p: *const DunklPolynomial,
    out: *mut bool,
) -> DunklStatus {
    guard(|| write(out, borrow(p, "polynomial")?.0.is_zero()))
}

/// Builds an operator context. `kappa` uses the command-line syntax, e.g.
/// `"short=1/2,long=2+i"` or `"all=1"`.
#[no_mangle]
pub unsafe extern "C" fn dunkl_context_new(
    system: *const DunklRootSystem,
    kappa: *const c_char,
    out: *mut *mut DunklContext,
) -> DunklStatus {
    guard(|| {
        let system = &borrow(system, "system")?.0;
        let k = parse_kappa(system, text(kappa, "kappa")?).map_err(fail(DunklStatus::Parse))?;
        let ctx = Context::new(system.clone(), k).map_err(fail(DunklStatus::Operator))?;
        write_boxed(out, DunklContext(ctx))
    })
}

#[no_mangle]
pub unsafe extern "C" fn dunkl_context_free(ctx: *mut DunklContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Coordinate operator for 0-based index `j`.
#[no_mangle]
pub unsafe extern "C" fn dunkl_apply_coordinate(
    ctx: *const DunklContext,
    p: *const DunklPolynomial,
    j: usize,
    out: *mut *mut DunklPolynomial,
) -> DunklStatus {
    guard(|| {
        let result = borrow(ctx, "context")?
            .0
            .dunkl_j(&borrow(p, "polynomial")?.0, j);
        write_poly(out, result.map_err(fail(DunklStatus::Operator))?)
    })
}

/// Directional operator; `direction` is comma-separated, e.g. `"1,i"`.
#[no_mangle]
pub unsafe extern "C" fn dunkl_apply_direction(
    ctx: *const DunklContext,
    p: *const DunklPolynomial,
    direction: *const c_char,
    out: *mut *mut DunklPolynomial,
) -> DunklStatus {
    guard(|| {
        let u = parse_vector(text(direction, "direction")?).map_err(fail(DunklStatus::Parse))?;
        let result = borrow(ctx, "context")?
            .0
            .dunkl_dir(&borrow(p, "polynomial")?.0, &u);
        write_poly(out, result.map_err(fail(DunklStatus::Operator))?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dunkl_apply_laplacian(
    ctx: *const DunklContext,
    p: *const DunklPolynomial,
    out: *mut *mut DunklPolynomial,
) -> DunklStatus {
    guard(|| {
        let result = borrow(ctx, "context")?
            .0
            .dunkl_laplacian(&borrow(p, "polynomial")?.0);
        write_poly(out, result.map_err(fail(DunklStatus::Operator))?)
    })
}

/// Difference quotient `(p(z) - p(z s_v)) / <z, v>` for a real root `v`.
#[no_mangle]
pub unsafe extern "C" fn dunkl_rho(
    p: *const DunklPolynomial,
    root: *const c_char,
    out: *mut *mut DunklPolynomial,
) -> DunklStatus {
    guard(|| {
        let v = parse_vector(text(root, "root")?).map_err(fail(DunklStatus::Parse))?;
        let result = rho(&borrow(p, "polynomial")?.0, &v).map_err(fail(DunklStatus::Operator))?;
        write_poly(out, result)
    })
}

/// `D_t D_u p - D_u D_t p`, which is always the zero polynomial.
#[no_mangle]
pub unsafe extern "C" fn dunkl_commutator(
    ctx: *const DunklContext,
    p: *const DunklPolynomial,
    t: *const c_char,
    u: *const c_char,
    out: *mut *mut DunklPolynomial,
) -> DunklStatus {
    guard(|| {
        let t = parse_vector(text(t, "t")?).map_err(fail(DunklStatus::Parse))?;
        let u = parse_vector(text(u, "u")?).map_err(fail(DunklStatus::Parse))?;
        let result = borrow(ctx, "context")?
            .0
            .commutator(&borrow(p, "polynomial")?.0, &t, &u);
        write_poly(out, result.map_err(fail(DunklStatus::Operator))?)
    })
}

/// Runs a seeded suite (`commutativity`, `equivariance`, `lemma32`, `eq44`,
/// `laplacian-formula`) and writes the JSON report to `report`. Returns
/// `DUNKL_STATUS_CHECK_FAILED` with the report still written when a check
/// fails.
#[no_mangle]
pub unsafe extern "C" fn dunkl_verify(
    system: *const DunklRootSystem,
    suite: *const c_char,
    seed: u64,
    trials: usize,
    report: *mut *mut c_char,
) -> DunklStatus {
    guard(|| {
        let system = &borrow(system, "system")?.0;
        let suite: Suite = text(suite, "suite")?
            .parse()
            .map_err(fail(DunklStatus::Parse))?;
        if trials == 0 {
            return Err(Failure(
                DunklStatus::Parse,
                "trials must be at least 1".into(),
            ));
        }
        let mut config = VerifyConfig::new(suite, seed);
        config.trials = trials;
        let result = run_suite(system, &config, "ffi").map_err(fail(DunklStatus::Operator))?;
        let json = serde_json::to_string(&result).map_err(fail(DunklStatus::Panic))?;
        let passed = result.passed();
        write_string(report, json)?;
        if passed {
            Ok(())
        } else {
            Err(Failure(
                DunklStatus::CheckFailed,
                format!(
                    "{} of {} checks failed",
                    result.failures.len(),
                    result.checks_run
                ),
            ))
        }
    })
}
