//! C ABI over `bicomplex-sbt`.
//!
//! Every fallible function returns a [`BcStatus`] and writes its result
//! through an out-pointer. Objects cross the boundary as opaque handles that
//! the caller releases with the matching `*_free` function. The message of the
//! last failure on the calling thread is available from
//! [`bc_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bicomplex_sbt::bargmann::{kernel_k_bc, HermiteCoeffVector, MonomialCoeffVector};
use bicomplex_sbt::frft::{frft_coeff, frft_inverse, mehler_closed, ThetaParam};
use bicomplex_sbt::transforms::{sbt_forward, sbt_inverse_coeff};
use bicomplex_sbt::{gauss_hermite, BcError, Bicomplex, QuadratureRule};

/// `(x1 + i y1) + j (x2 + i y2)`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BcNumber {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
}

impl From<BcNumber> for Bicomplex {
    fn from(v: BcNumber) -> Self {
        Bicomplex::new(v.x1, v.y1, v.x2, v.y2)
    }
}

impl From<Bicomplex> for BcNumber {
    fn from(v: Bicomplex) -> Self {
        BcNumber { x1: v.x1, y1: v.y1, x2: v.x2, y2: v.y2 }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParameter = 2,
    NullCone = 3,
    BranchCut = 4,
    ExcludedParameter = 5,
    NonFinite = 6,
    Convergence = 7,
    Domain = 8,
    DimensionMismatch = 9,
    IndexOutOfRange = 10,
    Panic = 99,
}

impl From<&BcError> for BcStatus {
    fn from(e: &BcError) -> Self {
        match e {
            BcError::NullCone(..) => BcStatus::NullCone,
            BcError::BranchCut(_) => BcStatus::BranchCut,
            BcError::ExcludedParameter(_) => BcStatus::ExcludedParameter,
            BcError::NonFinite(_) => BcStatus::NonFinite,
            BcError::Convergence(_) => BcStatus::Convergence,
            BcError::Domain(_) => BcStatus::Domain,
            BcError::DimensionMismatch(_) => BcStatus::DimensionMismatch,
            BcError::InvalidParameter(_) => BcStatus::InvalidParameter,
        }
    }
}

/// Gauss-Hermite rule. Opaque.
pub struct BcQuadrature(QuadratureRule);

/// Coefficients in the Hermite basis of `L²(ℝ, e^{−σx²})`. Opaque.
pub struct BcHermite(HermiteCoeffVector);

/// Coefficients in the monomial basis of the bicomplex Bargmann space. Opaque.
pub struct BcMonomial(MonomialCoeffVector);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(BcStatus, String);

impl From<BcError> for Fail {
    fn from(e: BcError) -> Self {
        Fail((&e).into(), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(BcStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            BcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            BcStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn into_handle<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

unsafe fn free_handle<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message of the most recent failure on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn bc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_mul(a: BcNumber, b: BcNumber, out: *mut BcNumber) -> BcStatus {
    guard(|| write(out, (Bicomplex::from(a) * Bicomplex::from(b)).into(), "out"))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_exp(a: BcNumber, out: *mut BcNumber) -> BcStatus {
    guard(|| write(out, Bicomplex::from(a).exp().into(), "out"))
}

/// Fails with `NullCone` for zero divisors.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_inverse(a: BcNumber, out: *mut BcNumber) -> BcStatus {
    guard(|| write(out, Bicomplex::from(a).inverse()?.into(), "out"))
}

/// `e^{(ν/2) Z W*}`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_kernel(nu: f64, z: BcNumber, w: BcNumber, out: *mut BcNumber) -> BcStatus {
    guard(|| write(out, kernel_k_bc(nu, z.into(), w.into()).into(), "out"))
}

/// Closed-form Mehler kernel `Σ θⁿ ψ_n(x) ψ_n(y)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_mehler(sigma: f64, theta: BcNumber, x: f64, y: f64, out: *mut BcNumber) -> BcStatus {
    guard(|| write(out, mehler_closed(sigma, theta.into(), x, y)?.into(), "out"))
}

/// Rule for `∫ f(t) e^{−γt²} dt` with `order` nodes.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_quadrature_create(order: usize, gamma: f64, out: *mut *mut BcQuadrature) -> BcStatus {
    guard(|| {
        let rule = gauss_hermite(order, gamma)?;
        write(out, into_handle(BcQuadrature(rule)), "out")
    })
}

/// # Safety
/// `rule` must come from [`bc_quadrature_create`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bc_quadrature_free(rule: *mut BcQuadrature) {
    free_handle(rule)
}

/// # Safety
/// `rule` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn bc_quadrature_order(rule: *const BcQuadrature) -> usize {
    rule.as_ref().map_or(0, |r| r.0.order())
}

/// Node and weight `k`.
///
/// # Safety
/// `rule` must be a live handle; `node` and `weight` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_quadrature_point(
    rule: *const BcQuadrature,
    k: usize,
    node: *mut f64,
    weight: *mut f64,
) -> BcStatus {
    guard(|| {
        let r = &deref(rule, "rule")?.0;
        if k >= r.order() {
            return Err(Fail(BcStatus::IndexOutOfRange, format!("node {k} of a {}-point rule", r.order())));
        }
        write(node, r.nodes()[k], "node")?;
        write(weight, r.weights()[k], "weight")
    })
}

/// Copies `len` coefficients into a new Hermite vector.
///
/// # Safety
/// `coeffs` must point to `len` values; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_hermite_create(
    sigma: f64,
    coeffs: *const BcNumber,
    len: usize,
    out: *mut *mut BcHermite,
) -> BcStatus {
    guard(|| {
        let c = slice(coeffs, len, "coeffs")?.iter().map(|&v| v.into()).collect();
        let v = HermiteCoeffVector::new(sigma, c)?;
        write(out, into_handle(BcHermite(v)), "out")
    })
}

/// # Safety
/// `v` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bc_hermite_free(v: *mut BcHermite) {
    free_handle(v)
}

/// # Safety
/// `v` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn bc_hermite_len(v: *const BcHermite) -> usize {
    v.as_ref().map_or(0, |v| v.0.len())
}

/// Copies up to `cap` coefficients into `buf` and stores the full length in
/// `len`.
///
/// # Safety
/// `v` live; `buf` valid for `cap` writes (may be null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn bc_hermite_coeffs(
    v: *const BcHermite,
    buf: *mut BcNumber,
    cap: usize,
    len: *mut usize,
) -> BcStatus {
    guard(|| {
        let v = &deref(v, "vector")?.0;
        copy_out(&v.coeffs, buf, cap, len)
    })
}

unsafe fn copy_out(src: &[Bicomplex], buf: *mut BcNumber, cap: usize, len: *mut usize) -> Result<(), Fail> {
    let n = src.len().min(cap);
    if n > 0 {
        if buf.is_null() {
            return Err(null("buf"));
        }
        for (k, c) in src[..n].iter().enumerate() {
            buf.add(k).write((*c).into());
        }
    }
    write(len, src.len(), "len")
}

/// `Σ a_n ψ_n(x)`.
///
/// # Safety
/// `v` live; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_hermite_eval(v: *const BcHermite, x: f64, out: *mut BcNumber) -> BcStatus {
    guard(|| {
        let v = &deref(v, "vector")?.0;
        write(out, v.eval(x).into(), "out")
    })
}

/// # Safety
/// `coeffs` must point to `len` values; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_monomial_create(
    nu: f64,
    coeffs: *const BcNumber,
    len: usize,
    out: *mut *mut BcMonomial,
) -> BcStatus {
    guard(|| {
        let c = slice(coeffs, len, "coeffs")?.iter().map(|&v| v.into()).collect();
        let v = MonomialCoeffVector::new(nu, c)?;
        write(out, into_handle(BcMonomial(v)), "out")
    })
}

/// # Safety
/// `v` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bc_monomial_free(v: *mut BcMonomial) {
    free_handle(v)
}

/// # Safety
/// `v` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn bc_monomial_len(v: *const BcMonomial) -> usize {
    v.as_ref().map_or(0, |v| v.0.len())
}

/// # Safety
/// Same contract as [`bc_hermite_coeffs`].
#[no_mangle]
pub unsafe extern "C" fn bc_monomial_coeffs(
    v: *const BcMonomial,
    buf: *mut BcNumber,
    cap: usize,
    len: *mut usize,
) -> BcStatus {
    guard(|| {
        let v = &deref(v, "vector")?.0;
        copy_out(&v.coeffs, buf, cap, len)
    })
}

/// `Σ b_n Zⁿ`.
///
/// # Safety
/// `v` live; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bc_monomial_eval(v: *const BcMonomial, z: BcNumber, out: *mut BcNumber) -> BcStatus {
    guard(|| {
        let v = &deref(v, "vector")?.0;
        write(out, v.eval(z.into()).into(), "out")
    })
}

/// Forward Segal-Bargmann transform into the Bargmann space of weight `nu`.
///
/// # Safety
/// `v` live; `out` valid for writes. The new handle is owned by the caller.
#[no_mangle]
pub unsafe extern "C" fn bc_sbt_forward(v: *const BcHermite, nu: f64, out: *mut *mut BcMonomial) -> BcStatus {
    guard(|| {
        let g = sbt_forward(&deref(v, "vector")?.0, nu)?;
        write(out, into_handle(BcMonomial(g)), "out")
    })
}

/// Inverse transform back to Hermite coefficients with weight `sigma`.
///
/// # Safety
/// `v` live; `out` valid for writes. The new handle is owned by the caller.
#[no_mangle]
pub unsafe extern "C" fn bc_sbt_inverse(v: *const BcMonomial, sigma: f64, out: *mut *mut BcHermite) -> BcStatus {
    guard(|| {
        let f = sbt_inverse_coeff(&deref(v, "vector")?.0, sigma)?;
        write(out, into_handle(BcHermite(f)), "out")
    })
}

/// Fractional Fourier transform with `θ` on the unit torus; `inverse != 0`
/// applies `F_θ*`. Fails with `ExcludedParameter` when a component of `θ` is
/// ±1 and `Domain` when `θ` is off the torus.
///
/// # Safety
/// `v` live; `out` valid for writes. The new handle is owned by the caller.
#[no_mangle]
pub unsafe extern "C" fn bc_frft(
    v: *const BcHermite,
    theta: BcNumber,
    inverse: bool,
    out: *mut *mut BcHermite,
) -> BcStatus {
    guard(|| {
        let v = &deref(v, "vector")?.0;
        let theta = ThetaParam::unit_torus(theta.into())?;
        let g = if inverse { frft_inverse(v, &theta)? } else { frft_coeff(v, &theta)? };
        write(out, into_handle(BcHermite(g)), "out")
    })
}
