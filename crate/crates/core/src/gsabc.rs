//! Gravitational search refined by a bee colony.
//!
//! Each outer iteration runs one gravitational step over the whole
//! population, then hands the best half to one employed + onlooker bee
//! cycle. Improvements found by the bees overwrite the originating agents'
//! positions; velocities are left as the gravitational step set them.

use serde::{Deserialize, Serialize};

use crate::abc::{abc_cycle, AbcParams, FoodSource, NeighborMode};
use crate::budget::{Budget, Evaluator, OptimizerResult};
use crate::error::{Error, Result};
use crate::gsa::{gsa_step, GravitySchedule, GsaParams, GsaState};
use crate::objective::Objective;
use crate::rng::{RandomSource, SeededStream};
use crate::space::Agent;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GsabcParams {
    pub gsa: GsaParams,
    /// Scout threshold for the bee phase; `None` uses `(N/2) * dimension`.
    pub limit: Option<usize>,
    pub scouts_enabled: bool,
    pub neighbor: NeighborMode,
    /// Turning the bee phase off leaves plain gravitational search.
    pub abc_enabled: bool,
}

impl Default for GsabcParams {
    fn default() -> Self {
        Self {
            gsa: GsaParams::default(),
            limit: None,
            scouts_enabled: false,
            neighbor: NeighborMode::SingleDimension,
            abc_enabled: true,
        }
    }
}

impl GsabcParams {
    pub fn validate(&self) -> Result<()> {
        self.gsa.validate()?;
        if self.abc_enabled {
            let n = self.gsa.population_size;
            if !n.is_multiple_of(2) {
                return Err(Error::OddPopulation(n));
            }
            self.abc().validate()?;
        }
        Ok(())
    }

    /// Bee-phase parameters; the colony is always half the population.
    pub fn abc(&self) -> AbcParams {
        AbcParams {
            n_food_sources: self.gsa.population_size / 2,
            limit: self.limit,
            scouts_enabled: self.scouts_enabled,
            neighbor: self.neighbor,
        }
    }

    /// Worst-case evaluations of one outer iteration.
    pub fn iteration_cost(&self) -> u64 {
        let n = self.gsa.population_size as u64;
        if self.abc_enabled {
            n + self.abc().cycle_cost(self.gsa.population_size / 2)
        } else {
            n
        }
    }

    /// Gravity horizon: the number of outer iterations the budget affords
    /// at `2N` (or `N` without bees) evaluations each.
    pub fn horizon(&self, max_evaluations: u64) -> usize {
        let n = self.gsa.population_size as u64;
        let per_iteration = if self.abc_enabled { 2 * n } else { n };
        self.gsa.horizon(max_evaluations, per_iteration)
    }
}

#[derive(Debug, Clone)]
pub struct GsabcState {
    pub gsa: GsaState,
    /// Trial counters of the agents currently in the best half; zero for
    /// every other agent.
    pub trials: Vec<u32>,
}

impl GsabcState {
    pub fn new(gsa: GsaState) -> Self {
        let trials = vec![0; gsa.agents.len()];
        Self { gsa, trials }
    }

    pub fn initialize(
        params: &GsabcParams,
        schedule: GravitySchedule,
        evaluator: &mut Evaluator<'_>,
        rng: &mut dyn RandomSource,
    ) -> Result<Self> {
        Ok(Self::new(GsaState::initialize(
            &params.gsa,
            schedule,
            evaluator,
            rng,
        )?))
    }
}

/// The `N/2` agents with the smallest objectives, as food sources in rank
/// order. Ties go to the lower index. `trials[i]` seeds the counter of
/// agent `i`'s source.
pub fn select_best_half(agents: &[Agent], trials: &[u32]) -> Result<(Vec<usize>, Vec<FoodSource>)> {
    let n = agents.len();
    if !n.is_multiple_of(2) {
        return Err(Error::OddPopulation(n));
    }
    if trials.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: trials.len(),
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        agents[a]
            .objective
            .total_cmp(&agents[b].objective)
            .then(a.cmp(&b))
    });
    order.truncate(n / 2);
    let sources = order
        .iter()
        .map(|&i| {
            let agent = &agents[i];
            let mut source = FoodSource::new(agent.position.clone(), agent.objective)?;
            source.trials = trials[i];
            Ok(source)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((order, sources))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationReport {
    /// Smallest population objective right after the gravitational step.
    pub post_gsa_best: f64,
    /// Smallest population objective after the bee phase.
    pub post_abc_best: f64,
    /// Best objective seen over the whole run so far.
    pub best_so_far: f64,
}

/// One outer iteration: a gravitational step, then a bee cycle over the
/// best half with write-back.
pub fn gsabc_iteration(
    state: &mut GsabcState,
    params: &GsabcParams,
    evaluator: &mut Evaluator<'_>,
    rng: &mut dyn RandomSource,
) -> Result<IterationReport> {
    evaluator.budget().ensure(params.iteration_cost())?;
    gsa_step(&mut state.gsa, &params.gsa, evaluator, rng)?;
    let post_gsa_best = state.gsa.population_best();

    if params.abc_enabled {
        let (indices, mut sources) = select_best_half(&state.gsa.agents, &state.trials)?;
        abc_cycle(&mut sources, &params.abc(), evaluator, rng)?;
        state.trials.iter_mut().for_each(|t| *t = 0);
        for (&i, source) in indices.iter().zip(sources) {
            let agent = &mut state.gsa.agents[i];
            if source.position != agent.position {
                agent.position = source.position;
                agent.objective = source.objective;
            }
            state.trials[i] = source.trials;
        }
        state.gsa.absorb_best();
    }

    Ok(IterationReport {
        post_gsa_best,
        post_abc_best: state.gsa.population_best(),
        best_so_far: state.gsa.best_objective,
    })
}

pub fn gsabc_run(
    f: &dyn Objective,
    params: &GsabcParams,
    max_evaluations: u64,
    seed: u64,
) -> Result<OptimizerResult> {
    gsabc_run_with(f, params, max_evaluations, &mut SeededStream::new(seed))
}

pub fn gsabc_run_with(
    f: &dyn Objective,
    params: &GsabcParams,
    max_evaluations: u64,
    rng: &mut dyn RandomSource,
) -> Result<OptimizerResult> {
    params.validate()?;
    let mut evaluator = Evaluator::new(f, Budget::new(max_evaluations)?);
    let schedule = GravitySchedule::new(&params.gsa, params.horizon(max_evaluations));
    let mut state = GsabcState::initialize(params, schedule, &mut evaluator, rng)?;
    while evaluator.budget().can_afford(params.iteration_cost()) {
        gsabc_iteration(&mut state, params, &mut evaluator, rng)?;
    }
    Ok(evaluator.finish())
}
