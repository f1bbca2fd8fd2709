use std::ffi::{c_void, CStr};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use gsabc_ffi::*;

fn last_error() -> String {
    let p = gsabc_last_error_message();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

struct Config(*mut GsabcConfig);

impl Config {
    fn new(algorithm: GsabcAlgorithm, budget: u64, seed: u64) -> Self {
        let c = gsabc_config_new();
        unsafe {
            assert_eq!(gsabc_config_set_algorithm(c, algorithm), GsabcStatus::Ok);
            assert_eq!(gsabc_config_set_budget(c, budget), GsabcStatus::Ok);
            assert_eq!(gsabc_config_set_seed(c, seed), GsabcStatus::Ok);
        }
        Config(c)
    }
}

impl Drop for Config {
    fn drop(&mut self) {
        unsafe { gsabc_config_free(self.0) }
    }
}

fn optimize(config: &Config, function: u32) -> *mut GsabcResult {
    let mut out = ptr::null_mut();
    let status = unsafe { gsabc_optimize_benchmark(config.0, function, &mut out) };
    assert_eq!(status, GsabcStatus::Ok, "{}", last_error());
    out
}

#[test]
fn benchmark_run_matches_core() {
    for (alg, core_alg) in [
        (GsabcAlgorithm::Gsa, gsabc::harness::Algorithm::Gsa),
        (GsabcAlgorithm::Abc, gsabc::harness::Algorithm::Abc),
        (GsabcAlgorithm::Gsabc, gsabc::harness::Algorithm::Gsabc),
    ] {
        let config = Config::new(alg, 3000, 5);
        let r = optimize(&config, 16);
        let f16 =
            gsabc::benchmarks::Benchmark::new(gsabc::benchmarks::FunctionId::new(16).unwrap());
        let expected =
            gsabc::harness::run_algorithm(core_alg, &f16, &Default::default(), 3000, 5).unwrap();
        unsafe {
            assert_eq!(
                gsabc_result_best_objective(r).to_bits(),
                expected.best_objective.to_bits()
            );
            assert_eq!(gsabc_result_evaluations(r), expected.evaluations_used);
            assert_eq!(gsabc_result_dimension(r), 2);
            let mut pos = [0.0; 2];
            assert_eq!(
                gsabc_result_best_position(r, pos.as_mut_ptr(), 2),
                GsabcStatus::Ok
            );
            assert_eq!(pos.to_vec(), expected.best_position);

            let n = gsabc_result_trace_len(r);
            assert_eq!(n, expected.convergence_trace.len());
            let (mut evals, mut best) = (vec![0u64; n], vec![0.0; n]);
            assert_eq!(
                gsabc_result_trace(r, evals.as_mut_ptr(), best.as_mut_ptr(), n),
                GsabcStatus::Ok
            );
            assert_eq!(*best.last().unwrap(), expected.best_objective);
            assert!(evals.windows(2).all(|w| w[0] < w[1]));
            gsabc_result_free(r);
        }
    }
}

#[test]
fn parameter_setters_take_effect() {
    let config = Config::new(GsabcAlgorithm::Gsabc, 2000, 1);
    unsafe {
        assert_eq!(gsabc_config_set_population(config.0, 10), GsabcStatus::Ok);
        assert_eq!(gsabc_config_set_g0(config.0, 50.0), GsabcStatus::Ok);
        assert_eq!(gsabc_config_set_alpha(config.0, 10.0), GsabcStatus::Ok);
        assert_eq!(gsabc_config_set_limit(config.0, 5), GsabcStatus::Ok);
        assert_eq!(gsabc_config_set_scouts(config.0, true), GsabcStatus::Ok);
    }
    let overrides = gsabc::harness::ParamOverrides {
        population: Some(10),
        g0: Some(50.0),
        alpha: Some(10.0),
        limit: Some(5),
        scouts: Some(true),
    };
    let f17 = gsabc::benchmarks::Benchmark::new(gsabc::benchmarks::FunctionId::new(17).unwrap());
    let expected =
        gsabc::harness::run_algorithm(gsabc::harness::Algorithm::Gsabc, &f17, &overrides, 2000, 1)
            .unwrap();
    let r = optimize(&config, 17);
    unsafe {
        assert_eq!(gsabc_result_best_objective(r), expected.best_objective);
        gsabc_result_free(r);
    }
}

extern "C" fn offset_sphere(x: *const f64, n: usize, user_data: *mut c_void) -> f64 {
    let calls = unsafe { &mut *(user_data as *mut u64) };
    *calls += 1;
    let x = unsafe { std::slice::from_raw_parts(x, n) };
    x.iter().map(|v| (v - 1.0) * (v - 1.0)).sum()
}

extern "C" fn nan_objective(_: *const f64, _: usize, _: *mut c_void) -> f64 {
    f64::NAN
}

#[test]
fn callback_objective_sees_every_evaluation() {
    let config = Config::new(GsabcAlgorithm::Gsabc, 5000, 2);
    let mut calls = 0u64;
    let (lo, hi) = ([-4.0; 3], [4.0; 3]);
    let mut out = ptr::null_mut();
    let status = unsafe {
        gsabc_optimize_callback(
            config.0,
            Some(offset_sphere),
            &mut calls as *mut u64 as *mut c_void,
            lo.as_ptr(),
            hi.as_ptr(),
            3,
            &mut out,
        )
    };
    assert_eq!(status, GsabcStatus::Ok);
    unsafe {
        assert_eq!(gsabc_result_evaluations(out), calls);
        assert!(calls <= 5000);
        assert!(gsabc_result_best_objective(out) < 1e-6);
        gsabc_result_free(out);
    }
}

#[test]
fn errors_map_to_status_codes() {
    let config = Config::new(GsabcAlgorithm::Gsa, 1000, 0);
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            gsabc_optimize_benchmark(config.0, 24, &mut out),
            GsabcStatus::UnknownFunction
        );
        assert!(last_error().contains("24"));
        assert_eq!(
            gsabc_optimize_benchmark(config.0, 0, &mut out),
            GsabcStatus::UnknownFunction
        );
        assert!(out.is_null());

        assert_eq!(
            gsabc_optimize_benchmark(ptr::null(), 1, &mut out),
            GsabcStatus::NullPointer
        );
        assert_eq!(
            gsabc_optimize_benchmark(config.0, 1, ptr::null_mut()),
            GsabcStatus::NullPointer
        );
        assert_eq!(
            gsabc_config_set_budget(config.0, 0),
            GsabcStatus::InvalidArgument
        );

        let (lo, hi) = ([1.0], [0.0]);
        let s = gsabc_optimize_callback(
            config.0,
            Some(nan_objective),
            ptr::null_mut(),
            lo.as_ptr(),
            hi.as_ptr(),
            1,
            &mut out,
        );
        assert_eq!(s, GsabcStatus::InvalidArgument);
        let (lo, hi) = ([0.0], [1.0]);
        let s = gsabc_optimize_callback(
            config.0,
            Some(nan_objective),
            ptr::null_mut(),
            lo.as_ptr(),
            hi.as_ptr(),
            1,
            &mut out,
        );
        assert_eq!(s, GsabcStatus::NonFiniteObjective);
        let s = gsabc_optimize_callback(
            config.0,
            None,
            ptr::null_mut(),
            lo.as_ptr(),
            hi.as_ptr(),
            1,
            &mut out,
        );
        assert_eq!(s, GsabcStatus::NullPointer);

        gsabc_config_set_population(config.0, 1);
        assert_eq!(
            gsabc_optimize_benchmark(config.0, 1, &mut out),
            GsabcStatus::InvalidArgument
        );

        let mut tiny = [0.0; 1];
        assert_eq!(
            gsabc_result_best_position(ptr::null(), tiny.as_mut_ptr(), 1),
            GsabcStatus::NullPointer
        );
        assert!(gsabc_result_best_objective(ptr::null()).is_nan());
        gsabc_result_free(ptr::null_mut());
        gsabc_config_free(ptr::null_mut());
    }
    // a successful call clears the message
    unsafe { gsabc_config_set_seed(config.0, 1) };
    assert!(gsabc_last_error_message().is_null());
}

#[test]
fn small_buffers_are_rejected() {
    let config = Config::new(GsabcAlgorithm::Gsabc, 1000, 0);
    let r = optimize(&config, 19);
    unsafe {
        let mut buf = [0.0; 2];
        assert_eq!(
            gsabc_result_best_position(r, buf.as_mut_ptr(), 2),
            GsabcStatus::BufferTooSmall
        );
        let n = gsabc_result_trace_len(r);
        let (mut e, mut b) = (vec![0u64; n - 1], vec![0.0; n - 1]);
        assert_eq!(
            gsabc_result_trace(r, e.as_mut_ptr(), b.as_mut_ptr(), n - 1),
            GsabcStatus::BufferTooSmall
        );
        gsabc_result_free(r);
    }
}

#[test]
fn benchmark_evaluation() {
    let mut v = f64::NAN;
    unsafe {
        assert_eq!(gsabc_benchmark_dimension(1), 30);
        assert_eq!(gsabc_benchmark_dimension(18), 2);
        assert_eq!(gsabc_benchmark_dimension(42), 0);

        let x = [0.0, -1.0];
        assert_eq!(
            gsabc_benchmark_evaluate(18, x.as_ptr(), 2, &mut v),
            GsabcStatus::Ok
        );
        assert!((v - 3.0).abs() < 1e-12);
        assert_eq!(
            gsabc_benchmark_evaluate(18, x.as_ptr(), 1, &mut v),
            GsabcStatus::InvalidArgument
        );
        assert!(last_error().contains("expected 2"));

        let zeros = [0.0; 30];
        assert_eq!(
            gsabc_benchmark_evaluate(7, zeros.as_ptr(), 30, &mut v),
            GsabcStatus::Ok
        );
        assert_eq!(v, 0.0);
        assert_eq!(
            gsabc_benchmark_evaluate_seeded(7, zeros.as_ptr(), 30, 3, &mut v),
            GsabcStatus::Ok
        );
        assert!(v > 0.0 && v < 1.0);
    }
}

#[test]
fn version_is_cargo_version() {
    let v = unsafe { CStr::from_ptr(gsabc_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn generated_header_declares_the_api() {
    let header =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/gsabc.h"))
            .unwrap();
    for symbol in [
        "gsabc_config_new",
        "gsabc_optimize_benchmark",
        "gsabc_optimize_callback",
        "gsabc_result_trace",
        "gsabc_benchmark_evaluate",
        "gsabc_last_error_message",
        "typedef struct GsabcConfig GsabcConfig;",
        "GSABC_STATUS_BUFFER_TOO_SMALL = 6",
    ] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }
}

fn static_library() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libgsabc_ffi.a");
    lib.exists().then_some(lib)
}

/// Compiles and runs a C client against the header and static library.
#[test]
fn c_client_links_and_runs() {
    let Some(lib) = static_library() else {
        eprintln!("static library not built; skipping C client");
        return;
    };
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let compiled = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    match compiled {
        Ok(s) => assert!(s.success(), "C client failed to compile"),
        Err(_) => {
            eprintln!("no C compiler; skipping C client");
            return;
        }
    }
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "C client exited with {:?}: {}",
        out.status,
        String::from_utf8_lossy(&out.stdout)
    );
    let fields: Vec<f64> = String::from_utf8(out.stdout)
        .unwrap()
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    assert!(fields[0] < 1e-2);
    assert!(fields[4] <= 4000.0);
}
