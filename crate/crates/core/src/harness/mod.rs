//! Repeated seeded runs under a shared evaluation budget, aggregation into
//! mean/std rows, and comparison against the published reference tables.

mod io;
mod reference;
mod table;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use io::{
    read_records, read_records_from, read_summary, read_summary_from, write_records,
    write_records_to, write_summary, write_summary_to, OutputFormat, RECORD_HEADER, SUMMARY_HEADER,
};
pub use reference::{parse_printed, PaperReference, ReferenceAlgorithm, ReferenceEntry};
pub use table::{format_sci, render_table, TableFormat};

use crate::abc::{abc_run, AbcParams};
use crate::benchmarks::{Benchmark, BoundsMode, FunctionId};
use crate::budget::OptimizerResult;
use crate::error::{Error, Result};
use crate::gsa::{gsa_run, GsaParams};
use crate::gsabc::{gsabc_run, GsabcParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Gsa,
    Abc,
    Gsabc,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Gsa, Algorithm::Abc, Algorithm::Gsabc];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Gsa => "gsa",
            Algorithm::Abc => "abc",
            Algorithm::Gsabc => "gsabc",
        }
    }

    pub fn reference(self) -> ReferenceAlgorithm {
        match self {
            Algorithm::Gsa => ReferenceAlgorithm::Gsa,
            Algorithm::Abc => ReferenceAlgorithm::Abc,
            Algorithm::Gsabc => ReferenceAlgorithm::Gsabc,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gsa" => Ok(Algorithm::Gsa),
            "abc" => Ok(Algorithm::Abc),
            "gsabc" => Ok(Algorithm::Gsabc),
            _ => Err(Error::UnknownAlgorithm(s.to_string())),
        }
    }
}

/// Optional parameter overrides shared by every cell of an experiment.
///
/// `population` is the number of agents for GSA and GSABC and the colony
/// size (employed plus onlooker bees, twice the food sources) for ABC.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ParamOverrides {
    pub population: Option<usize>,
    pub g0: Option<f64>,
    pub alpha: Option<f64>,
    pub limit: Option<usize>,
    pub scouts: Option<bool>,
}

impl ParamOverrides {
    pub fn gsa(&self) -> GsaParams {
        let mut p = GsaParams::default();
        if let Some(n) = self.population {
            p.population_size = n;
        }
        if let Some(g0) = self.g0 {
            p.g0 = g0;
        }
        if let Some(alpha) = self.alpha {
            p.alpha = alpha;
        }
        p
    }

    pub fn abc(&self) -> AbcParams {
        let mut p = AbcParams::default();
        if let Some(n) = self.population {
            p.n_food_sources = n / 2;
        }
        p.limit = self.limit.or(p.limit);
        if let Some(s) = self.scouts {
            p.scouts_enabled = s;
        }
        p
    }

    pub fn gsabc(&self) -> GsabcParams {
        let mut p = GsabcParams {
            gsa: self.gsa(),
            ..GsabcParams::default()
        };
        p.limit = self.limit;
        if let Some(s) = self.scouts {
            p.scouts_enabled = s;
        }
        p
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub algorithms: Vec<Algorithm>,
    pub function_ids: Vec<FunctionId>,
    pub runs: usize,
    pub max_evaluations: u64,
    pub base_seed: u64,
    pub overrides: ParamOverrides,
    pub bounds: BoundsMode,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithms: Algorithm::ALL.to_vec(),
            function_ids: FunctionId::all().collect(),
            runs: 25,
            max_evaluations: 50_000,
            base_seed: 0,
            overrides: ParamOverrides::default(),
            bounds: BoundsMode::Canonical,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() || self.function_ids.is_empty() {
            return Err(Error::InvalidParameter(
                "no algorithms or functions selected".into(),
            ));
        }
        if self.runs == 0 {
            return Err(Error::InvalidParameter("runs must be positive".into()));
        }
        if self.max_evaluations == 0 {
            return Err(Error::InvalidParameter(
                "max_evaluations must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Seed of run `r` in every cell.
    pub fn seed_for(&self, run: usize) -> u64 {
        self.base_seed.wrapping_add(run as u64)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algorithm: Algorithm,
    pub function: FunctionId,
    pub run: usize,
    pub seed: u64,
    pub best_objective: f64,
    pub evaluations: u64,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellFailure {
    pub algorithm: Algorithm,
    pub function: FunctionId,
    pub run: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExperimentOutput {
    pub records: Vec<RunRecord>,
    pub failures: Vec<CellFailure>,
}

/// Runs one optimizer on one benchmark with explicit parameters.
pub fn run_algorithm(
    algorithm: Algorithm,
    function: &Benchmark,
    overrides: &ParamOverrides,
    max_evaluations: u64,
    seed: u64,
) -> Result<OptimizerResult> {
    match algorithm {
        Algorithm::Gsa => gsa_run(function, &overrides.gsa(), max_evaluations, seed),
        Algorithm::Abc => abc_run(function, &overrides.abc(), max_evaluations, seed),
        Algorithm::Gsabc => gsabc_run(function, &overrides.gsabc(), max_evaluations, seed),
    }
}

/// Runs a single `(algorithm, function, run)` cell exactly as the batch would.
pub fn run_cell(
    config: &ExperimentConfig,
    algorithm: Algorithm,
    function: FunctionId,
    run: usize,
) -> Result<RunRecord> {
    let seed = config.seed_for(run);
    let benchmark = Benchmark::with_bounds(function, config.bounds);
    let start = Instant::now();
    let result = run_algorithm(
        algorithm,
        &benchmark,
        &config.overrides,
        config.max_evaluations,
        seed,
    )?;
    Ok(RunRecord {
        algorithm,
        function,
        run,
        seed,
        best_objective: result.best_objective,
        evaluations: result.evaluations_used,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Executes every cell in parallel; records come back in
/// `(algorithm, function, run)` order and failed cells are collected
/// separately.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutput> {
    config.validate()?;
    let cells: Vec<(Algorithm, FunctionId, usize)> = config
        .algorithms
        .iter()
        .flat_map(|&a| {
            config
                .function_ids
                .iter()
                .flat_map(move |&f| (0..config.runs).map(move |r| (a, f, r)))
        })
        .collect();
    let results: Vec<_> = cells
        .par_iter()
        .map(|&(a, f, r)| (a, f, r, run_cell(config, a, f, r)))
        .collect();
    let mut out = ExperimentOutput::default();
    for (algorithm, function, run, result) in results {
        match result {
            Ok(record) => out.records.push(record),
            Err(e) => out.failures.push(CellFailure {
                algorithm,
                function,
                run,
                message: e.to_string(),
            }),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub algorithm: Algorithm,
    pub function: FunctionId,
    pub mean: f64,
    pub std: f64,
    pub paper_mean: Option<f64>,
    pub paper_std: Option<f64>,
}

/// Mean and sample (n - 1) standard deviation. A single value has std 0.
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Groups records per `(algorithm, function)` and joins reference values.
/// Every group must hold exactly `runs` records.
pub fn summarize(
    records: &[RunRecord],
    refs: &PaperReference,
    runs: usize,
) -> Result<Vec<SummaryRow>> {
    let mut groups: BTreeMap<(Algorithm, FunctionId), Vec<f64>> = BTreeMap::new();
    for r in records {
        groups
            .entry((r.algorithm, r.function))
            .or_default()
            .push(r.best_objective);
    }
    groups
        .into_iter()
        .map(|((algorithm, function), values)| {
            if values.len() != runs {
                return Err(Error::IncompleteCell {
                    algorithm: algorithm.to_string(),
                    function: function.to_string(),
                    found: values.len(),
                    expected: runs,
                });
            }
            let (mean, std) = mean_std(&values);
            let paper = refs.values(algorithm.reference(), function);
            Ok(SummaryRow {
                algorithm,
                function,
                mean,
                std,
                paper_mean: paper.map(|p| p.0),
                paper_std: paper.map(|p| p.1),
            })
        })
        .collect()
}

/// Like [`summarize`], with the expected run count taken from the largest group.
pub fn summarize_inferred(records: &[RunRecord], refs: &PaperReference) -> Result<Vec<SummaryRow>> {
    let mut counts: BTreeMap<(Algorithm, FunctionId), usize> = BTreeMap::new();
    for r in records {
        *counts.entry((r.algorithm, r.function)).or_default() += 1;
    }
    let runs = counts.values().copied().max().unwrap_or(0);
    summarize(records, refs, runs)
}
