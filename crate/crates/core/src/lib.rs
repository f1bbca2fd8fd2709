//! Gravitational search (GSA), artificial bee colony (ABC) and the GSABC
//! hybrid for box-bounded minimization, together with the classic
//! 23-function benchmark suite and a seeded experiment harness.
//!
//! All optimizers share the same plumbing: a [`SearchSpace`] of box
//! bounds, an [`Objective`] to minimize, a [`Budget`] that charges one
//! unit per objective call, and a [`RandomSource`] that fully determines
//! a run.
//!
//! ```
//! use gsabc::benchmarks::{make_function, FunctionId};
//! use gsabc::gsabc::{gsabc_run, GsabcParams};
//!
//! let f16 = make_function(FunctionId::new(16).unwrap());
//! let result = gsabc_run(&f16, &GsabcParams::default(), 10_000, 7).unwrap();
//! assert!(result.best_objective < -1.03);
//! ```

pub mod abc;
pub mod benchmarks;
pub mod budget;
pub mod cli;
pub mod error;
pub mod gsa;
pub mod gsabc;
pub mod harness;
pub mod objective;
pub mod rng;
pub mod space;

pub use budget::{evaluate, Budget, Evaluator, OptimizerResult, TracePoint};
pub use error::{Error, Result};
pub use objective::{FnObjective, Objective};
pub use rng::{RandomSource, ScriptedStream, SeededStream};
pub use space::{clamp, uniform_init, Agent, SearchSpace};
