//! C ABI for the racg-lcs engine.
//!
//! Complexes and pc-presentations are opaque handles created and released
//! through this API. Every function returns a [`RacgStatus`]; on failure the
//! message is kept per thread and can be fetched with
//! [`racg_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use racg_lcs::complex::{
    flag_complex_of_graph, ComplexInput, SimplicialComplex, MAX_HOMOLOGY_VERTICES,
};
use racg_lcs::freegroup::parse_commutator;
use racg_lcs::nq::{express, racg_quotient, Expressed, PcPresentation};
use racg_lcs::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RacgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    CapExceeded = 3,
    CheckFailed = 4,
    BufferTooSmall = 5,
    Internal = 6,
    Panic = 7,
}

/// Opaque simplicial complex.
pub struct RacgComplex(SimplicialComplex);

/// Opaque nilpotent quotient of a right-angled Coxeter group.
pub struct RacgPc(PcPresentation);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(e: &Error) -> RacgStatus {
    match e {
        Error::CapExceeded(_) => RacgStatus::CapExceeded,
        Error::Internal(_) => RacgStatus::Internal,
        _ => RacgStatus::InvalidInput,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (RacgStatus, String)>) -> RacgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RacgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside racg-lcs");
            RacgStatus::Panic
        }
    }
}

fn lift(e: Error) -> (RacgStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (RacgStatus, String) {
    (RacgStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, (RacgStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| (RacgStatus::InvalidInput, format!("invalid UTF-8: {e}")))
}

/// Copies `src` into `out[..cap]` and stores the full length in `*len`.
unsafe fn write_out<T: Copy>(
    src: &[T],
    out: *mut T,
    cap: usize,
    len: *mut usize,
) -> Result<(), (RacgStatus, String)> {
    if len.is_null() {
        return Err(null());
    }
    *len = src.len();
    if src.len() > cap {
        return Err((
            RacgStatus::BufferTooSmall,
            format!("need room for {} values, have {cap}", src.len()),
        ));
    }
    if !src.is_empty() {
        if out.is_null() {
            return Err(null());
        }
        std::ptr::copy_nonoverlapping(src.as_ptr(), out, src.len());
    }
    Ok(())
}

/// Copies the calling thread's last error message (NUL-terminated,
/// truncated to fit) into `buf`. Returns the full message length.
///
/// # Safety
/// `buf` must be null or point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn racg_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && cap > 0 {
            let n = msg.len().min(cap - 1);
            std::ptr::copy_nonoverlapping(msg.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Parses a complex from JSON such as `{"m": 3, "faces": [[1,2]]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn racg_complex_from_json(
    json: *const c_char,
    out: *mut *mut RacgComplex,
) -> RacgStatus {
    guard(|| {
        let text = str_arg(json)?;
        if out.is_null() {
            return Err(null());
        }
        let k = ComplexInput::from_json(text).map_err(lift)?;
        *out = Box::into_raw(Box::new(RacgComplex(k)));
        Ok(())
    })
}

/// Flag complex on `[m]` of a graph; `edges` holds `2 * n_edges` 1-based
/// vertex indices.
///
/// # Safety
/// `edges` must point to `2 * n_edges` values (or be null when `n_edges` is 0).
#[no_mangle]
pub unsafe extern "C" fn racg_complex_flag(
    m: usize,
    edges: *const u32,
    n_edges: usize,
    out: *mut *mut RacgComplex,
) -> RacgStatus {
    guard(|| {
        if out.is_null() || (n_edges > 0 && edges.is_null()) {
            return Err(null());
        }
        let flat = if n_edges == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * n_edges)
        };
        let pairs: Vec<(usize, usize)> = flat
            .chunks(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        let k = flag_complex_of_graph(m, &pairs).map_err(lift)?;
        *out = Box::into_raw(Box::new(RacgComplex(k)));
        Ok(())
    })
}

/// Releases a complex. Null is ignored.
///
/// # Safety
/// `k` must come from this API and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn racg_complex_free(k: *mut RacgComplex) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

/// Number of vertices.
///
/// # Safety
/// `k` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn racg_complex_vertex_count(
    k: *const RacgComplex,
    out: *mut usize,
) -> RacgStatus {
    guard(|| {
        let k = k.as_ref().ok_or_else(null)?;
        *out.as_mut().ok_or_else(null)? = k.0.m();
        Ok(())
    })
}

/// Homology of the real moment-angle complex in `degree`: free rank and
/// torsion coefficients.
///
/// # Safety
/// `k` live; `free_rank` and `n_torsion` writable; `torsion` holds `cap` values.
#[no_mangle]
pub unsafe extern "C" fn racg_rmk_homology(
    k: *const RacgComplex,
    degree: usize,
    free_rank: *mut usize,
    torsion: *mut u64,
    cap: usize,
    n_torsion: *mut usize,
) -> RacgStatus {
    guard(|| {
        let k = k.as_ref().ok_or_else(null)?;
        if k.0.m() > MAX_HOMOLOGY_VERTICES {
            return Err((
                RacgStatus::CapExceeded,
                format!("homology limited to m <= {MAX_HOMOLOGY_VERTICES}"),
            ));
        }
        let h = k.0.rmk_homology(degree).map_err(lift)?;
        *free_rank.as_mut().ok_or_else(null)? = h.free_rank;
        write_out(&h.torsion, torsion, cap, n_torsion)
    })
}

/// Number of commutator generators of the commutator subgroup.
///
/// # Safety
/// `k` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn racg_gscox_count(k: *const RacgComplex, out: *mut usize) -> RacgStatus {
    guard(|| {
        let k = k.as_ref().ok_or_else(null)?;
        *out.as_mut().ok_or_else(null)? = k.0.gscox_generators().len();
        Ok(())
    })
}

/// Computes the class-`class` nilpotent quotient of the right-angled
/// Coxeter group of `k`.
///
/// # Safety
/// `k` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn racg_quotient_new(
    k: *const RacgComplex,
    class: usize,
    out: *mut *mut RacgPc,
) -> RacgStatus {
    guard(|| {
        let k = k.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let pc = racg_quotient(&k.0, class).map_err(lift)?;
        *out = Box::into_raw(Box::new(RacgPc(pc)));
        Ok(())
    })
}

/// Releases a quotient. Null is ignored.
///
/// # Safety
/// `pc` must come from this API and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn racg_pc_free(pc: *mut RacgPc) {
    if !pc.is_null() {
        drop(Box::from_raw(pc));
    }
}

/// `dim L^k` for `k = 1..=class` into `out`.
///
/// # Safety
/// `pc` live; `out` holds `cap` values; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn racg_pc_dims(
    pc: *const RacgPc,
    out: *mut usize,
    cap: usize,
    len: *mut usize,
) -> RacgStatus {
    guard(|| {
        let pc = pc.as_ref().ok_or_else(null)?;
        write_out(&pc.0.dims(), out, cap, len)
    })
}

/// GF(2) coordinates of a commutator word such as `"(1,2,1,1)"` in
/// `L^degree`. `*in_gamma` is false when the word is not in `γ_degree`; no
/// coordinates are written then.
///
/// # Safety
/// `pc` live; `word` NUL-terminated; `coords` holds `cap` bytes; `len` and
/// `in_gamma` writable.
#[no_mangle]
pub unsafe extern "C" fn racg_express(
    pc: *const RacgPc,
    word: *const c_char,
    degree: usize,
    coords: *mut u8,
    cap: usize,
    len: *mut usize,
    in_gamma: *mut bool,
) -> RacgStatus {
    guard(|| {
        let pc = pc.as_ref().ok_or_else(null)?;
        let w = parse_commutator(str_arg(word)?).map_err(lift)?;
        let flag = in_gamma.as_mut().ok_or_else(null)?;
        match express(&pc.0, &w, degree).map_err(lift)? {
            Expressed::Element(e) => {
                *flag = true;
                let bits: Vec<u8> = e.to_gf2().to_bools().iter().map(|&b| b as u8).collect();
                write_out(&bits, coords, cap, len)
            }
            Expressed::NotInGamma { .. } => {
                *flag = false;
                *len.as_mut().ok_or_else(null)? = 0;
                Ok(())
            }
        }
    })
}

/// Runs one encoded claim (or all when `id` is null). Returns
/// `RACG_STATUS_CHECK_FAILED` if any selected claim fails.
///
/// # Safety
/// `id` null or NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn racg_verify_claims(id: *const c_char) -> RacgStatus {
    guard(|| {
        let case = if id.is_null() {
            None
        } else {
            Some(str_arg(id)?)
        };
        let reports = racg_lcs::verify::run_all(case).map_err(lift)?;
        let failed: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.id.as_str())
            .collect();
        if failed.is_empty() {
            Ok(())
        } else {
            Err((
                RacgStatus::CheckFailed,
                format!("failed claims: {}", failed.join(", ")),
            ))
        }
    })
}
