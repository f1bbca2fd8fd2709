//! Artificial bee colony.
//!
//! A cycle runs three phases over the food sources: every employed bee
//! proposes a neighbor of its own source, onlookers pick sources by
//! fitness-proportional roulette and propose neighbors of those, and a
//! scout abandons the most exhausted source once its trial counter passes
//! the limit. Proposals are accepted greedily on the raw objective.

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Evaluator, OptimizerResult};
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::{RandomSource, SeededStream};
use crate::space::{uniform_init, SearchSpace};

#[derive(Debug, Clone, PartialEq)]
pub struct FoodSource {
    pub position: Vec<f64>,
    pub objective: f64,
    pub fitness: f64,
    /// Consecutive proposals that failed to improve this source.
    pub trials: u32,
}

impl FoodSource {
    pub fn new(position: Vec<f64>, objective: f64) -> Result<Self> {
        Ok(Self {
            fitness: fitness_transform(objective)?,
            position,
            objective,
            trials: 0,
        })
    }

    fn replace(&mut self, position: Vec<f64>, objective: f64) -> Result<()> {
        self.fitness = fitness_transform(objective)?;
        self.position = position;
        self.objective = objective;
        Ok(())
    }
}

/// Which coordinates a neighbor proposal perturbs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NeighborMode {
    /// One uniformly chosen dimension.
    #[default]
    SingleDimension,
    /// Every dimension, each with its own step factor.
    AllDimensions,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AbcParams {
    pub n_food_sources: usize,
    /// Scout threshold. `None` uses `n_food_sources * dimension`.
    pub limit: Option<usize>,
    pub scouts_enabled: bool,
    pub neighbor: NeighborMode,
}

impl Default for AbcParams {
    fn default() -> Self {
        Self {
            n_food_sources: 25,
            limit: None,
            scouts_enabled: true,
            neighbor: NeighborMode::SingleDimension,
        }
    }
}

impl AbcParams {
    pub fn validate(&self) -> Result<()> {
        if self.n_food_sources < 2 {
            return Err(Error::InvalidParameter(format!(
                "n_food_sources must be at least 2, got {}",
                self.n_food_sources
            )));
        }
        if self.limit == Some(0) {
            return Err(Error::InvalidParameter("limit must be at least 1".into()));
        }
        Ok(())
    }

    pub fn limit_for(&self, dimension: usize) -> u32 {
        self.limit.unwrap_or(self.n_food_sources * dimension) as u32
    }

    /// Worst-case evaluations of one cycle over `sources` food sources.
    pub fn cycle_cost(&self, sources: usize) -> u64 {
        2 * sources as u64 + u64::from(self.scouts_enabled)
    }
}

/// `1 / (1 + f)` for `f >= 0`, `1 + |f|` otherwise.
pub fn fitness_transform(objective: f64) -> Result<f64> {
    if !objective.is_finite() {
        return Err(Error::NonFiniteObjective(objective));
    }
    Ok(if objective >= 0.0 {
        1.0 / (1.0 + objective)
    } else {
        1.0 + objective.abs()
    })
}

/// Proposes `x_i + phi * (x_i - x_k)` on one dimension (or all, per
/// `mode`) with `phi` uniform in `[-1, 1)`, clamped to the box.
///
/// Draw order: the dimension index, then `phi`.
pub fn neighbor(
    sources: &[FoodSource],
    i: usize,
    k: usize,
    space: &SearchSpace,
    mode: NeighborMode,
    rng: &mut dyn RandomSource,
) -> Result<Vec<f64>> {
    if i == k {
        return Err(Error::SameSourceIndex(i));
    }
    let (xi, xk) = (&sources[i].position, &sources[k].position);
    space.check_len(xi)?;
    space.check_len(xk)?;
    let mut v = xi.clone();
    match mode {
        NeighborMode::SingleDimension => {
            let j = rng.index(v.len());
            let phi = rng.uniform_in(-1.0, 1.0);
            v[j] = xi[j] + phi * (xi[j] - xk[j]);
        }
        NeighborMode::AllDimensions => {
            for (j, vj) in v.iter_mut().enumerate() {
                let phi = rng.uniform_in(-1.0, 1.0);
                *vj = xi[j] + phi * (xi[j] - xk[j]);
            }
        }
    }
    space.clamp_in_place(&mut v);
    Ok(v)
}

/// Fitness-proportional selection probabilities.
pub fn selection_probabilities(fitnesses: &[f64]) -> Result<Vec<f64>> {
    if fitnesses.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(bad) = fitnesses.iter().find(|f| !(f.is_finite() && **f > 0.0)) {
        return Err(Error::InvalidParameter(format!(
            "fitness must be positive, got {bad}"
        )));
    }
    let total: f64 = fitnesses.iter().sum();
    Ok(fitnesses.iter().map(|f| f / total).collect())
}

fn roulette(probabilities: &[f64], rng: &mut dyn RandomSource) -> usize {
    let u = rng.next_f64();
    let mut cumulative = 0.0;
    for (i, p) in probabilities.iter().enumerate() {
        cumulative += p;
        if u < cumulative {
            return i;
        }
    }
    probabilities.len() - 1
}

/// Uniform partner index different from `i`.
fn partner(i: usize, n: usize, rng: &mut dyn RandomSource) -> usize {
    let k = rng.index(n - 1);
    if k >= i {
        k + 1
    } else {
        k
    }
}

fn try_improve(
    sources: &mut [FoodSource],
    i: usize,
    params: &AbcParams,
    evaluator: &mut Evaluator<'_>,
    rng: &mut dyn RandomSource,
) -> Result<bool> {
    let k = partner(i, sources.len(), rng);
    let space = evaluator.objective().space();
    let candidate = neighbor(sources, i, k, space, params.neighbor, rng)?;
    let value = evaluator.eval(&candidate, rng)?;
    let source = &mut sources[i];
    if value < source.objective {
        source.replace(candidate, value)?;
        source.trials = 0;
        Ok(true)
    } else {
        source.trials += 1;
        Ok(false)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CycleReport {
    pub improvements: usize,
    pub scout: Option<usize>,
}

/// One employed, onlooker and (optionally) scout pass.
///
/// The whole cycle's worst-case cost is checked against the budget before
/// anything is drawn, so a refused cycle leaves `sources` untouched.
pub fn abc_cycle(
    sources: &mut [FoodSource],
    params: &AbcParams,
    evaluator: &mut Evaluator<'_>,
    rng: &mut dyn RandomSource,
) -> Result<CycleReport> {
    let n = sources.len();
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 2 food sources, got {n}"
        )));
    }
    evaluator.budget().ensure(params.cycle_cost(n))?;
    let mut report = CycleReport::default();

    for i in 0..n {
        report.improvements += usize::from(try_improve(sources, i, params, evaluator, rng)?);
    }

    let fitnesses: Vec<f64> = sources.iter().map(|s| s.fitness).collect();
    let probabilities = selection_probabilities(&fitnesses)?;
    for _ in 0..n {
        let i = roulette(&probabilities, rng);
        report.improvements += usize::from(try_improve(sources, i, params, evaluator, rng)?);
    }

    if params.scouts_enabled {
        let space = evaluator.objective().space();
        let limit = params.limit_for(space.dimension());
        let exhausted = sources
            .iter()
            .enumerate()
            .filter(|(_, s)| s.trials > limit)
            .fold(None::<(usize, u32)>, |acc, (i, s)| match acc {
                Some((_, t)) if t >= s.trials => acc,
                _ => Some((i, s.trials)),
            });
        if let Some((i, _)) = exhausted {
            let position = space.sample(rng);
            let value = evaluator.eval(&position, rng)?;
            sources[i] = FoodSource::new(position, value)?;
            report.scout = Some(i);
        }
    }
    Ok(report)
}

/// Runs the colony until the next full cycle no longer fits in the budget.
/// The returned best is the best point ever evaluated, so scout resets
/// never lose it.
pub fn abc_run(
    f: &dyn Objective,
    params: &AbcParams,
    max_evaluations: u64,
    seed: u64,
) -> Result<OptimizerResult> {
    abc_run_with(f, params, max_evaluations, &mut SeededStream::new(seed))
}

pub fn abc_run_with(
    f: &dyn Objective,
    params: &AbcParams,
    max_evaluations: u64,
    rng: &mut dyn RandomSource,
) -> Result<OptimizerResult> {
    params.validate()?;
    let n = params.n_food_sources;
    let mut evaluator = Evaluator::new(f, Budget::new(max_evaluations)?);
    evaluator.budget().ensure(n as u64)?;
    let mut sources = Vec::with_capacity(n);
    for agent in uniform_init(f.space(), n, rng)? {
        let value = evaluator.eval(&agent.position, rng)?;
        sources.push(FoodSource::new(agent.position, value)?);
    }
    while evaluator.budget().can_afford(params.cycle_cost(n)) {
        abc_cycle(&mut sources, params, &mut evaluator, rng)?;
    }
    Ok(evaluator.finish())
}
