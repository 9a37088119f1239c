//! C ABI over `liebranch`.
//!
//! Every fallible function returns an [`LbStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`lb_last_error_message`]. Strings returned by the library must
//! be released with [`lb_string_free`]; handles with their `_free` function.
//!
//! Embeddings are given as strings: `"principal"`, `"root:1,1"` (simple-root
//! coordinates of a positive root) or `"marks:2,2"`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liebranch::character::CharacterSource;
use liebranch::semigroup::GeneratorSet;
use liebranch::sl2branch::{EmbeddingSpec, Sl2Embedding};
use liebranch::store::CharacterStore;
use liebranch::{bounds, sl2branch, Error, RootSystem, Weight};

/// Result codes shared by all functions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed type string, wrong vector length, non-dominant weight,
    /// bad embedding or generator set.
    InvalidArgument = 2,
    Overflow = 3,
    /// An m-value was not found within the given cap.
    NotFound = 4,
    /// A semigroup complement could not be certified within the box.
    NotCertified = 5,
    /// Any other computational failure (caps, certificates).
    Computation = 6,
    Panic = 7,
}

/// Opaque root-system handle. Characters computed through a handle are
/// memoized for its lifetime; a handle may be shared between threads.
pub struct LbRootSystem {
    rs: RootSystem,
    store: CharacterStore,
}

/// Opaque generator-set handle for subsemigroups of ℕ^r.
pub struct LbGeneratorSet {
    gens: GeneratorSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> LbStatus {
    match e {
        Error::InvalidRank { .. }
        | Error::ParseType(_)
        | Error::EmptyComponents
        | Error::LengthMismatch { .. }
        | Error::NotDominant(_)
        | Error::NotAPositiveRoot(_)
        | Error::NodeOutOfRange { .. }
        | Error::InvalidGenerators(_)
        | Error::AxisGeneratorMissing { .. }
        | Error::RankCapInsufficient { .. } => LbStatus::InvalidArgument,
        Error::Overflow(_) => LbStatus::Overflow,
        Error::MValueNotFound { .. } => LbStatus::NotFound,
        Error::NotCertified { .. } => LbStatus::NotCertified,
        _ => LbStatus::Computation,
    }
}

struct Fail(LbStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(LbStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail(LbStatus::InvalidArgument, msg.into())
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LbStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LbStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside liebranch".into());
            LbStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null("handle"))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn resolve_embedding(rs: &RootSystem, spec: *const c_char) -> Result<Sl2Embedding, Fail> {
    let spec: EmbeddingSpec = str_arg(spec, "embedding")?.parse().map_err(invalid)?;
    Ok(spec.resolve(rs)?)
}

unsafe fn dominant(h: &LbRootSystem, p: *const i64, len: usize) -> Result<Weight, Fail> {
    let lambda = Weight(slice_arg(p, len, "lambda")?.to_vec());
    h.rs.check_dominant(&lambda)?;
    Ok(lambda)
}

fn into_c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(LbStatus::Computation, "string contains NUL".into()))
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn lb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn lb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a root system from a type string such as `"G2"` or `"A1xB2"`.
///
/// # Safety
/// `type_name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lb_root_system_new(
    type_name: *const c_char,
    out: *mut *mut LbRootSystem,
) -> LbStatus {
    guard(|| {
        let rs = RootSystem::from_type(str_arg(type_name, "type_name")?)?;
        let h = Box::new(LbRootSystem {
            rs,
            store: CharacterStore::in_memory(),
        });
        write_out(out, Box::into_raw(h))
    })
}

/// # Safety
/// `rs` must come from [`lb_root_system_new`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn lb_root_system_free(rs: *mut LbRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Rank of the root system, 0 for NULL.
///
/// # Safety
/// `rs` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn lb_root_system_rank(rs: *const LbRootSystem) -> usize {
    rs.as_ref().map_or(0, |h| h.rs.rank())
}

/// dim L(λ) by the Weyl dimension formula.
///
/// # Safety
/// `lambda` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lb_weyl_dimension(
    rs: *const LbRootSystem,
    lambda: *const i64,
    len: usize,
    out: *mut u64,
) -> LbStatus {
    guard(|| {
        let h = handle(rs)?;
        let lambda = dominant(h, lambda, len)?;
        write_out(out, h.rs.weyl_dimension(&lambda)?)
    })
}

/// Dominant character of L(λ) as JSON:
/// `{"lambda":[..],"mults":[[[weight],mult],..]}`. Free with [`lb_string_free`].
///
/// # Safety
/// `lambda` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lb_character_json(
    rs: *const LbRootSystem,
    lambda: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> LbStatus {
    guard(|| {
        let h = handle(rs)?;
        let lambda = dominant(h, lambda, len)?;
        let ch = h.store.character(&h.rs, &lambda)?;
        write_out(out, into_c_string(ch.to_json()?)?)
    })
}

unsafe fn decompose(
    rs: *const LbRootSystem,
    lambda: *const i64,
    len: usize,
    spec: *const c_char,
) -> Result<sl2branch::Sl2Decomposition, Fail> {
    let h = handle(rs)?;
    let lambda = dominant(h, lambda, len)?;
    let emb = resolve_embedding(&h.rs, spec)?;
    let ch = h.store.character(&h.rs, &lambda)?;
    Ok(sl2branch::branch_character(&h.rs, &ch, &emb)?.decomposition)
}

/// Dimension of the sl2-invariants of L(λ).
///
/// # Safety
/// Pointer arguments must be valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn lb_invariant_dim(
    rs: *const LbRootSystem,
    lambda: *const i64,
    len: usize,
    embedding: *const c_char,
    out: *mut u64,
) -> LbStatus {
    guard(|| write_out(out, decompose(rs, lambda, len, embedding)?.invariant_dim()))
}

/// Dimension of the largest sl2-isotypic summand of L(λ).
///
/// # Safety
/// Pointer arguments must be valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn lb_g0(
    rs: *const LbRootSystem,
    lambda: *const i64,
    len: usize,
    embedding: *const c_char,
    out: *mut u64,
) -> LbStatus {
    guard(|| {
        let d = decompose(rs, lambda, len, embedding)?;
        write_out(out, d.g0().unwrap_or(0))
    })
}

/// Least n ≥ 1 with invariants in L(n ω_node), node 1-based; searched up to
/// `cap`. Returns `NotFound` if there is none.
///
/// # Safety
/// Pointer arguments must be valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn lb_m_value(
    rs: *const LbRootSystem,
    embedding: *const c_char,
    node: usize,
    cap: u64,
    out: *mut u64,
) -> LbStatus {
    guard(|| {
        let h = handle(rs)?;
        let emb = resolve_embedding(&h.rs, embedding)?;
        match bounds::m_value_cached(&h.rs, &emb, node, cap, &h.store)? {
            0 => Err(Error::MValueNotFound { node, cap }.into()),
            m => write_out(out, m),
        }
    })
}

/// The bound b: one more than the largest g₀ over the box of m-values.
///
/// # Safety
/// Pointer arguments must be valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn lb_b_bound(
    rs: *const LbRootSystem,
    embedding: *const c_char,
    cap: u64,
    out: *mut u64,
) -> LbStatus {
    guard(|| {
        let h = handle(rs)?;
        let emb = resolve_embedding(&h.rs, embedding)?;
        write_out(out, bounds::b_bound_cached(&h.rs, &emb, cap, &h.store)?.b)
    })
}

/// Builds a generator set from `count` generators of dimension `dim`, stored
/// row-major in `flat`.
///
/// # Safety
/// `flat` must point to `count * dim` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lb_generators_new(
    flat: *const u32,
    count: usize,
    dim: usize,
    out: *mut *mut LbGeneratorSet,
) -> LbStatus {
    guard(|| {
        let n = count
            .checked_mul(dim)
            .ok_or_else(|| invalid("generator array too large"))?;
        let data = slice_arg(flat, n, "generators")?;
        let gens = if dim == 0 {
            Vec::new()
        } else {
            data.chunks(dim).map(<[u32]>::to_vec).collect()
        };
        let gens = GeneratorSet::new(dim, gens)?;
        write_out(out, Box::into_raw(Box::new(LbGeneratorSet { gens })))
    })
}

/// # Safety
/// `gs` must come from [`lb_generators_new`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn lb_generators_free(gs: *mut LbGeneratorSet) {
    if !gs.is_null() {
        drop(Box::from_raw(gs));
    }
}

/// Whether `v` lies in the subsemigroup (0 is always a member).
///
/// # Safety
/// `v` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lb_generators_member(
    gs: *const LbGeneratorSet,
    v: *const u32,
    len: usize,
    out: *mut bool,
) -> LbStatus {
    guard(|| {
        let g = handle(gs)?;
        let v = slice_arg(v, len, "point")?;
        write_out(out, g.gens.member(v)?)
    })
}

/// Complement of the subsemigroup as a JSON array of points in lexicographic
/// order. Fails with `NotCertified` when `box_bound` is too small to prove
/// the list complete.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lb_generators_complement_json(
    gs: *const LbGeneratorSet,
    box_bound: u32,
    out: *mut *mut c_char,
) -> LbStatus {
    guard(|| {
        let g = handle(gs)?;
        let c = g.gens.complement(box_bound)?;
        if !c.certified {
            return Err(Error::NotCertified { bound: box_bound }.into());
        }
        let s = serde_json::to_string(&c.points).map_err(Error::from)?;
        write_out(out, into_c_string(s)?)
    })
}
