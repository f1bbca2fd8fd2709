//! C ABI over the `gsabc` optimizers.
//!
//! Every entry point returns a [`GsabcStatus`]; on anything other than
//! `GSABC_STATUS_OK` a human-readable message is available from
//! [`gsabc_last_error_message`] on the same thread. Handles are opaque and
//! must be released with their matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, c_void, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use gsabc::benchmarks::{Benchmark, FunctionId};
use gsabc::harness::{run_algorithm, Algorithm, ParamOverrides};
use gsabc::{
    abc, gsa, gsabc as hybrid, Error, FnObjective, Objective, OptimizerResult, SearchSpace,
    SeededStream,
};

/// Outcome of an FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GsabcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownFunction = 3,
    BudgetExhausted = 4,
    NonFiniteObjective = 5,
    BufferTooSmall = 6,
    Panic = 7,
    Internal = 8,
}

/// Optimizer selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GsabcAlgorithm {
    Gsa = 0,
    Abc = 1,
    Gsabc = 2,
}

impl From<GsabcAlgorithm> for Algorithm {
    fn from(a: GsabcAlgorithm) -> Self {
        match a {
            GsabcAlgorithm::Gsa => Algorithm::Gsa,
            GsabcAlgorithm::Abc => Algorithm::Abc,
            GsabcAlgorithm::Gsabc => Algorithm::Gsabc,
        }
    }
}

/// Objective callback: `x` points at `dimension` doubles.
pub type GsabcObjectiveFn =
    Option<extern "C" fn(x: *const f64, dimension: usize, user_data: *mut c_void) -> f64>;

/// Run configuration (opaque).
pub struct GsabcConfig {
    algorithm: GsabcAlgorithm,
    max_evaluations: u64,
    seed: u64,
    overrides: ParamOverrides,
}

/// Optimization outcome (opaque).
pub struct GsabcResult(OptimizerResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<Vec<u8>>) {
    let text = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> GsabcStatus {
    match err {
        Error::BudgetExhausted { .. } => GsabcStatus::BudgetExhausted,
        Error::NonFiniteObjective(_) => GsabcStatus::NonFiniteObjective,
        Error::UnknownFunctionId(_) => GsabcStatus::UnknownFunction,
        Error::DimensionMismatch { .. }
        | Error::InvalidSearchSpace(_)
        | Error::InvalidParameter(_)
        | Error::OddPopulation(_)
        | Error::EmptyInput => GsabcStatus::InvalidArgument,
        _ => GsabcStatus::Internal,
    }
}

fn fail(status: GsabcStatus, message: impl Into<Vec<u8>>) -> GsabcStatus {
    set_last_error(message);
    status
}

/// Runs `body` with the last error cleared, translating errors and panics.
fn guard(body: impl FnOnce() -> Result<(), GsabcStatus>) -> GsabcStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GsabcStatus::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(GsabcStatus::Panic, format!("panic: {msg}"))
        }
    }
}

fn lift<T>(r: gsabc::Result<T>) -> Result<T, GsabcStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn function_id(number: u32) -> Result<FunctionId, GsabcStatus> {
    u8::try_from(number)
        .map_err(|_| Error::UnknownFunctionId(number.to_string()))
        .and_then(FunctionId::new)
        .map_err(|e| fail(GsabcStatus::UnknownFunction, e.to_string()))
}

unsafe fn config_ref<'a>(config: *const GsabcConfig) -> Result<&'a GsabcConfig, GsabcStatus> {
    config
        .as_ref()
        .ok_or_else(|| fail(GsabcStatus::NullPointer, "config is null"))
}

unsafe fn config_mut<'a>(config: *mut GsabcConfig) -> Result<&'a mut GsabcConfig, GsabcStatus> {
    config
        .as_mut()
        .ok_or_else(|| fail(GsabcStatus::NullPointer, "config is null"))
}

unsafe fn input_slice<'a>(
    data: *const f64,
    len: usize,
    what: &str,
) -> Result<&'a [f64], GsabcStatus> {
    if data.is_null() {
        return Err(fail(GsabcStatus::NullPointer, format!("{what} is null")));
    }
    Ok(slice::from_raw_parts(data, len))
}

unsafe fn store_result(
    out: *mut *mut GsabcResult,
    result: OptimizerResult,
) -> Result<(), GsabcStatus> {
    *out = Box::into_raw(Box::new(GsabcResult(result)));
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL.
/// The pointer stays valid until the next FFI call on the same thread.
#[no_mangle]
pub extern "C" fn gsabc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn gsabc_version() -> *const c_char {
    static VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(v) => v,
            Err(_) => panic!("version string"),
        };
    VERSION.as_ptr()
}

/// New configuration with default parameters: hybrid, 50 000 evaluations,
/// seed 0. Release with [`gsabc_config_free`].
#[no_mangle]
pub extern "C" fn gsabc_config_new() -> *mut GsabcConfig {
    Box::into_raw(Box::new(GsabcConfig {
        algorithm: GsabcAlgorithm::Gsabc,
        max_evaluations: 50_000,
        seed: 0,
        overrides: ParamOverrides::default(),
    }))
}

/// # Safety
/// `config` must come from [`gsabc_config_new`] and not be used again. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gsabc_config_free(config: *mut GsabcConfig) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

/// # Safety
/// `config` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gsabc_config_set_algorithm(
    config: *mut GsabcConfig,
    algorithm: GsabcAlgorithm,
) -> GsabcStatus {
    guard(|| {
        config_mut(config)?.algorithm = algorithm;
        Ok(())
    })
}

/// # Safety
/// `config` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gsabc_config_set_budget(
    config: *mut GsabcConfig,
    max_evaluations: u64,
) -> GsabcStatus {
    guard(|| {
        if max_evaluations == 0 {
            return Err(fail(
                GsabcStatus::InvalidArgument,
                "budget must be positive",
            ));
        }
        config_mut(config)?.max_evaluations = max_evaluations;
        Ok(())
    })
}

/// # Safety
/// `config` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gsabc_config_set_seed(config: *mut GsabcConfig, seed: u64) -> GsabcStatus {
    guard(|| {
        config_mut(config)?.seed = seed;
        Ok(())
    })
}

/// Population size; for ABC this is the colony size (twice the food sources).
///
/// # Safety
/// `config` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gsabc_config_set_population(
    config: *mut GsabcConfig,
    population: usize,
) -> GsabcStatus {
    guard(|| {
        config_mut(config)?.overrides.population = Some(population);
        Ok(())
    })
}

/// # Safety
/// `config` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gsabc_config_set_g0(config: *mut GsabcConfig, g0: f64) -> GsabcStatus {
    guard(|| {
        config_mut(config)?.overrides.g0 = Some(g0);
        Ok(())
    })
}

/// # Safety
/// `config` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gsabc_config_set_alpha(
    config: *mut GsabcConfig,
    alpha: f64,
) -> GsabcStatus {
    guard(|| {
        config_mut(config)?.overrides.alpha = Some(alpha);
        Ok(())
    })
}

/// Scout trigger; 0 restores the dimension-dependent default.
///
/// # Safety
/// `config` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gsabc_config_set_limit(
    config: *mut GsabcConfig,
    limit: usize,
) -> GsabcStatus {
    guard(|| {
        config_mut(config)?.overrides.limit = (limit > 0).then_some(limit);
        Ok(())
    })
}

/// # Safety
/// `config` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gsabc_config_set_scouts(
    config: *mut GsabcConfig,
    enabled: bool,
) -> GsabcStatus {
    guard(|| {
        config_mut(config)?.overrides.scouts = Some(enabled);
        Ok(())
    })
}

/// Minimizes benchmark `f<function_number>` (1..=23). On success `*out`
/// receives a result handle to release with [`gsabc_result_free`].
///
/// # Safety
/// `config` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsabc_optimize_benchmark(
    config: *const GsabcConfig,
    function_number: u32,
    out: *mut *mut GsabcResult,
) -> GsabcStatus {
    guard(|| {
        let config = config_ref(config)?;
        if out.is_null() {
            return Err(fail(GsabcStatus::NullPointer, "out is null"));
        }
        let benchmark = Benchmark::new(function_id(function_number)?);
        let result = lift(run_algorithm(
            config.algorithm.into(),
            &benchmark,
            &config.overrides,
            config.max_evaluations,
            config.seed,
        ))?;
        store_result(out, result)
    })
}

/// Minimizes a caller-supplied objective over the box `[lower, upper]`
/// (both `dimension` long). `user_data` is passed through untouched.
///
/// # Safety
/// `lower`/`upper` must point at `dimension` doubles; `objective` must be
/// safe to call with any in-bounds point; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsabc_optimize_callback(
    config: *const GsabcConfig,
    objective: GsabcObjectiveFn,
    user_data: *mut c_void,
    lower: *const f64,
    upper: *const f64,
    dimension: usize,
    out: *mut *mut GsabcResult,
) -> GsabcStatus {
    guard(|| {
        let config = config_ref(config)?;
        let Some(objective) = objective else {
            return Err(fail(GsabcStatus::NullPointer, "objective is null"));
        };
        if out.is_null() {
            return Err(fail(GsabcStatus::NullPointer, "out is null"));
        }
        let lower = input_slice(lower, dimension, "lower")?;
        let upper = input_slice(upper, dimension, "upper")?;
        let space = lift(SearchSpace::new(lower.to_vec(), upper.to_vec()))?;
        let f = FnObjective::new("callback", space, |x: &[f64]| {
            objective(x.as_ptr(), x.len(), user_data)
        });
        let result = lift(run_object(config, &f))?;
        store_result(out, result)
    })
}

fn run_object(config: &GsabcConfig, f: &dyn Objective) -> gsabc::Result<OptimizerResult> {
    let (max, seed, o) = (config.max_evaluations, config.seed, &config.overrides);
    match config.algorithm {
        GsabcAlgorithm::Gsa => gsa::gsa_run(f, &o.gsa(), max, seed),
        GsabcAlgorithm::Abc => abc::abc_run(f, &o.abc(), max, seed),
        GsabcAlgorithm::Gsabc => hybrid::gsabc_run(f, &o.gsabc(), max, seed),
    }
}

/// # Safety
/// `result` must come from an optimize call and not be used again. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gsabc_result_free(result: *mut GsabcResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Best objective value found, or NaN for a NULL handle.
///
/// # Safety
/// `result` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn gsabc_result_best_objective(result: *const GsabcResult) -> f64 {
    result.as_ref().map_or(f64::NAN, |r| r.0.best_objective)
}

/// # Safety
/// `result` must be a live handle or NULL (yields 0).
#[no_mangle]
pub unsafe extern "C" fn gsabc_result_evaluations(result: *const GsabcResult) -> u64 {
    result.as_ref().map_or(0, |r| r.0.evaluations_used)
}

/// # Safety
/// `result` must be a live handle or NULL (yields 0).
#[no_mangle]
pub unsafe extern "C" fn gsabc_result_dimension(result: *const GsabcResult) -> usize {
    result.as_ref().map_or(0, |r| r.0.best_position.len())
}

/// Copies the best position into `buffer` (capacity `len`).
///
/// # Safety
/// `result` must be a live handle; `buffer` must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn gsabc_result_best_position(
    result: *const GsabcResult,
    buffer: *mut f64,
    len: usize,
) -> GsabcStatus {
    guard(|| {
        let r = result
            .as_ref()
            .ok_or_else(|| fail(GsabcStatus::NullPointer, "result is null"))?;
        let pos = &r.0.best_position;
        if buffer.is_null() {
            return Err(fail(GsabcStatus::NullPointer, "buffer is null"));
        }
        if len < pos.len() {
            return Err(fail(
                GsabcStatus::BufferTooSmall,
                format!("need {} doubles, got {len}", pos.len()),
            ));
        }
        ptr::copy_nonoverlapping(pos.as_ptr(), buffer, pos.len());
        Ok(())
    })
}

/// Number of convergence-trace points.
///
/// # Safety
/// `result` must be a live handle or NULL (yields 0).
#[no_mangle]
pub unsafe extern "C" fn gsabc_result_trace_len(result: *const GsabcResult) -> usize {
    result.as_ref().map_or(0, |r| r.0.convergence_trace.len())
}

/// Copies the trace as parallel arrays: evaluation counts and best-so-far
/// objectives, each of capacity `len`.
///
/// # Safety
/// `result` must be a live handle; both buffers must hold `len` elements.
#[no_mangle]
pub unsafe extern "C" fn gsabc_result_trace(
    result: *const GsabcResult,
    evaluations: *mut u64,
    best_objectives: *mut f64,
    len: usize,
) -> GsabcStatus {
    guard(|| {
        let r = result
            .as_ref()
            .ok_or_else(|| fail(GsabcStatus::NullPointer, "result is null"))?;
        let trace = &r.0.convergence_trace;
        if evaluations.is_null() || best_objectives.is_null() {
            return Err(fail(GsabcStatus::NullPointer, "trace buffer is null"));
        }
        if len < trace.len() {
            return Err(fail(
                GsabcStatus::BufferTooSmall,
                format!("need {} points, got {len}", trace.len()),
            ));
        }
        for (i, p) in trace.iter().enumerate() {
            *evaluations.add(i) = p.evaluations;
            *best_objectives.add(i) = p.best_objective;
        }
        Ok(())
    })
}

/// Dimension of benchmark `f<function_number>`, or 0 if unknown.
#[no_mangle]
pub extern "C" fn gsabc_benchmark_dimension(function_number: u32) -> usize {
    let mut dim = 0;
    guard(|| {
        dim = Benchmark::new(function_id(function_number)?).dimension();
        Ok(())
    });
    dim
}

/// Evaluates benchmark `f<function_number>` at `x`. The noisy quartic (f7)
/// is evaluated without its noise term.
///
/// # Safety
/// `x` must point at `dimension` doubles; `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsabc_benchmark_evaluate(
    function_number: u32,
    x: *const f64,
    dimension: usize,
    value: *mut f64,
) -> GsabcStatus {
    guard(|| {
        let benchmark = Benchmark::new(function_id(function_number)?);
        let x = input_slice(x, dimension, "x")?;
        if value.is_null() {
            return Err(fail(GsabcStatus::NullPointer, "value is null"));
        }
        if dimension != benchmark.dimension() {
            let e = Error::DimensionMismatch {
                expected: benchmark.dimension(),
                found: dimension,
            };
            return Err(fail(GsabcStatus::InvalidArgument, e.to_string()));
        }
        *value = benchmark.noiseless_value(x);
        Ok(())
    })
}

/// Evaluates benchmark `f<function_number>` exactly as an optimizer sees it;
/// the noise term of f7 is drawn from a stream seeded with `seed`.
///
/// # Safety
/// As [`gsabc_benchmark_evaluate`].
#[no_mangle]
pub unsafe extern "C" fn gsabc_benchmark_evaluate_seeded(
    function_number: u32,
    x: *const f64,
    dimension: usize,
    seed: u64,
    value: *mut f64,
) -> GsabcStatus {
    guard(|| {
        let benchmark = Benchmark::new(function_id(function_number)?);
        let x = input_slice(x, dimension, "x")?;
        if value.is_null() {
            return Err(fail(GsabcStatus::NullPointer, "value is null"));
        }
        if dimension != benchmark.dimension() {
            let e = Error::DimensionMismatch {
                expected: benchmark.dimension(),
                found: dimension,
            };
            return Err(fail(GsabcStatus::InvalidArgument, e.to_string()));
        }
        *value = benchmark.value(x, &mut SeededStream::new(seed));
        Ok(())
    })
}
