//! Gravitational search.
//!
//! Each agent carries a mass derived from its objective relative to the
//! current best and worst agents. Agents accelerate toward one another in
//! proportion to the attracting mass, scaled by a gravity constant that
//! decays exponentially over the run, and move with a randomly damped
//! velocity. Positions are clamped to the box after every move.

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Evaluator, OptimizerResult};
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::{RandomSource, SeededStream};
use crate::space::{uniform_init, Agent};

/// How the random damping of the previous velocity is drawn.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InertiaDraw {
    /// One draw per agent per dimension.
    #[default]
    PerDimension,
    /// One draw per agent, shared by all dimensions.
    PerAgent,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GsaParams {
    pub population_size: usize,
    pub g0: f64,
    pub alpha: f64,
    pub epsilon: f64,
    /// Gravity decay horizon. `None` derives it from the evaluation budget.
    pub max_iterations: Option<usize>,
    pub inertia: InertiaDraw,
}

impl Default for GsaParams {
    fn default() -> Self {
        Self {
            population_size: 50,
            g0: 100.0,
            alpha: 20.0,
            epsilon: 1e-16,
            max_iterations: None,
            inertia: InertiaDraw::PerDimension,
        }
    }
}

impl GsaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::InvalidParameter(format!(
                "population_size must be at least 2, got {}",
                self.population_size
            )));
        }
        for (name, v) in [
            ("g0", self.g0),
            ("alpha", self.alpha),
            ("epsilon", self.epsilon),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        if self.max_iterations == Some(0) {
            return Err(Error::InvalidParameter(
                "max_iterations must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// The configured horizon, or the number of full iterations the budget
    /// affords after the initial population is evaluated.
    pub fn horizon(&self, max_evaluations: u64, evaluations_per_iteration: u64) -> usize {
        self.max_iterations.unwrap_or_else(|| {
            let n = self.population_size as u64;
            (max_evaluations.saturating_sub(n) / evaluations_per_iteration).max(1) as usize
        })
    }
}

/// `G(t) = g0 * exp(-alpha * t / horizon)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GravitySchedule {
    pub g0: f64,
    pub alpha: f64,
    pub horizon: usize,
}

impl GravitySchedule {
    pub fn new(params: &GsaParams, horizon: usize) -> Self {
        Self {
            g0: params.g0,
            alpha: params.alpha,
            horizon: horizon.max(1),
        }
    }

    pub fn gravity_at(&self, t: usize) -> f64 {
        self.g0 * (-self.alpha * t as f64 / self.horizon as f64).exp()
    }
}

#[derive(Debug, Clone)]
pub struct GsaState {
    pub agents: Vec<Agent>,
    pub gravity: f64,
    pub iteration: usize,
    pub schedule: GravitySchedule,
    pub best_position: Vec<f64>,
    pub best_objective: f64,
}

impl GsaState {
    /// Wraps already-evaluated agents at iteration 0.
    pub fn new(agents: Vec<Agent>, schedule: GravitySchedule) -> Result<Self> {
        if agents.iter().any(|a| a.stale) {
            return Err(Error::InvalidParameter("agents must be evaluated".into()));
        }
        let best = agents
            .iter()
            .min_by(|a, b| a.objective.total_cmp(&b.objective))
            .ok_or(Error::EmptyInput)?;
        Ok(Self {
            best_position: best.position.clone(),
            best_objective: best.objective,
            gravity: schedule.gravity_at(0),
            iteration: 0,
            schedule,
            agents,
        })
    }

    /// Uniformly initializes and evaluates `population_size` agents.
    pub fn initialize(
        params: &GsaParams,
        schedule: GravitySchedule,
        evaluator: &mut Evaluator<'_>,
        rng: &mut dyn RandomSource,
    ) -> Result<Self> {
        let space = evaluator.objective().space();
        evaluator.budget().ensure(params.population_size as u64)?;
        let mut agents = uniform_init(space, params.population_size, rng)?;
        for agent in &mut agents {
            agent.objective = evaluator.eval(&agent.position, rng)?;
            agent.stale = false;
        }
        Self::new(agents, schedule)
    }

    pub fn population_best(&self) -> f64 {
        self.agents
            .iter()
            .map(|a| a.objective)
            .fold(f64::INFINITY, f64::min)
    }

    pub(crate) fn absorb_best(&mut self) {
        for agent in &self.agents {
            if agent.objective < self.best_objective {
                self.best_objective = agent.objective;
                self.best_position.clone_from(&agent.position);
            }
        }
    }
}

/// Normalized masses for a minimization population.
///
/// The best agent gets raw mass 1 and the worst 0; masses are then scaled
/// to sum to one. When every objective is equal all masses are `1/N`.
pub fn compute_masses(objectives: &[f64]) -> Vec<f64> {
    let n = objectives.len();
    if n == 0 {
        return Vec::new();
    }
    let best = objectives.iter().copied().fold(f64::INFINITY, f64::min);
    let worst = objectives.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let spread = best - worst;
    if spread == 0.0 || !spread.is_finite() {
        return vec![1.0 / n as f64; n];
    }
    let raw: Vec<f64> = objectives.iter().map(|f| (f - worst) / spread).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|m| m / total).collect()
}

/// Acceleration of agent `i`: the sum over `j != i` of
/// `rand_j * G * M_j / (R_ij + epsilon) * (x_j - x_i)`, with one fresh draw
/// per attracting agent, taken in index order.
pub fn total_acceleration(
    i: usize,
    agents: &[Agent],
    masses: &[f64],
    gravity: f64,
    epsilon: f64,
    rng: &mut dyn RandomSource,
) -> Vec<f64> {
    let xi = &agents[i].position;
    let mut acc = vec![0.0; xi.len()];
    for (j, (other, &mass)) in agents.iter().zip(masses).enumerate() {
        if j == i {
            continue;
        }
        let xj = &other.position;
        let distance = xi
            .iter()
            .zip(xj)
            .map(|(a, b)| (b - a) * (b - a))
            .sum::<f64>()
            .sqrt();
        let scale = rng.next_f64() * gravity * mass / (distance + epsilon);
        for ((a, p), q) in acc.iter_mut().zip(xi).zip(xj) {
            *a += scale * (q - p);
        }
    }
    acc
}

/// One gravitational update of every agent followed by re-evaluation.
///
/// Draw order: all accelerations (agent by agent), then the inertia draws
/// (agent by agent), then whatever the objective itself consumes.
pub fn gsa_step(
    state: &mut GsaState,
    params: &GsaParams,
    evaluator: &mut Evaluator<'_>,
    rng: &mut dyn RandomSource,
) -> Result<()> {
    let n = state.agents.len();
    evaluator.budget().ensure(n as u64)?;
    debug_assert!(state.agents.iter().all(|a| !a.stale));

    let objectives: Vec<f64> = state.agents.iter().map(|a| a.objective).collect();
    let masses = compute_masses(&objectives);
    let accelerations: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            total_acceleration(
                i,
                &state.agents,
                &masses,
                state.gravity,
                params.epsilon,
                rng,
            )
        })
        .collect();

    let space = evaluator.objective().space();
    for (agent, acc) in state.agents.iter_mut().zip(&accelerations) {
        match params.inertia {
            InertiaDraw::PerDimension => {
                for (v, a) in agent.velocity.iter_mut().zip(acc) {
                    *v = rng.next_f64() * *v + a;
                }
            }
            InertiaDraw::PerAgent => {
                let r = rng.next_f64();
                for (v, a) in agent.velocity.iter_mut().zip(acc) {
                    *v = r * *v + a;
                }
            }
        }
        for (x, v) in agent.position.iter_mut().zip(&agent.velocity) {
            *x += v;
        }
        space.clamp_in_place(&mut agent.position);
        agent.stale = true;
    }

    for agent in &mut state.agents {
        agent.objective = evaluator.eval(&agent.position, rng)?;
        agent.stale = false;
    }

    state.iteration += 1;
    state.gravity = state.schedule.gravity_at(state.iteration);
    state.absorb_best();
    Ok(())
}

/// Runs gravitational search until the next full iteration no longer fits
/// in the budget.
pub fn gsa_run(
    f: &dyn Objective,
    params: &GsaParams,
    max_evaluations: u64,
    seed: u64,
) -> Result<OptimizerResult> {
    gsa_run_with(f, params, max_evaluations, &mut SeededStream::new(seed))
}

pub fn gsa_run_with(
    f: &dyn Objective,
    params: &GsaParams,
    max_evaluations: u64,
    rng: &mut dyn RandomSource,
) -> Result<OptimizerResult> {
    params.validate()?;
    let n = params.population_size as u64;
    let mut evaluator = Evaluator::new(f, Budget::new(max_evaluations)?);
    let schedule = GravitySchedule::new(params, params.horizon(max_evaluations, n));
    let mut state = GsaState::initialize(params, schedule, &mut evaluator, rng)?;
    while evaluator.budget().can_afford(n) {
        gsa_step(&mut state, params, &mut evaluator, rng)?;
    }
    Ok(evaluator.finish())
}
