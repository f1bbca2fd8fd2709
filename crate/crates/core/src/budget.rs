//! Evaluation accounting.
//!
//! Every objective call made by an optimizer goes through [`evaluate`],
//! which charges exactly one unit against the run's [`Budget`]. The
//! [`Evaluator`] wraps that chokepoint and also keeps the best point ever
//! evaluated together with the best-so-far trace.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::RandomSource;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max_evaluations: u64,
    used_evaluations: u64,
}

impl Budget {
    pub fn new(max_evaluations: u64) -> Result<Self> {
        if max_evaluations == 0 {
            return Err(Error::InvalidParameter("budget must be positive".into()));
        }
        Ok(Self {
            max_evaluations,
            used_evaluations: 0,
        })
    }

    pub fn max(&self) -> u64 {
        self.max_evaluations
    }

    pub fn used(&self) -> u64 {
        self.used_evaluations
    }

    pub fn remaining(&self) -> u64 {
        self.max_evaluations - self.used_evaluations
    }

    pub fn can_afford(&self, evaluations: u64) -> bool {
        evaluations <= self.remaining()
    }

    /// Fails without charging anything when fewer than `evaluations` remain.
    pub fn ensure(&self, evaluations: u64) -> Result<()> {
        if self.can_afford(evaluations) {
            Ok(())
        } else {
            Err(Error::BudgetExhausted {
                requested: evaluations,
                remaining: self.remaining(),
            })
        }
    }

    fn charge(&mut self) -> Result<()> {
        self.ensure(1)?;
        self.used_evaluations += 1;
        Ok(())
    }
}

/// Evaluates `f` at `x`, charging one evaluation. A NaN or infinite value
/// is reported as [`Error::NonFiniteObjective`] (the evaluation is still charged).
pub fn evaluate(
    f: &dyn Objective,
    x: &[f64],
    budget: &mut Budget,
    rng: &mut dyn RandomSource,
) -> Result<f64> {
    if x.len() != f.dimension() {
        return Err(Error::DimensionMismatch {
            expected: f.dimension(),
            found: x.len(),
        });
    }
    debug_assert!(f.space().contains(x), "evaluation outside the search box");
    budget.charge()?;
    match f.value(x, rng) {
        v if v.is_finite() => Ok(v),
        v => Err(Error::NonFiniteObjective(v)),
    }
}

/// One point on a best-so-far curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub evaluations: u64,
    pub best_objective: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerResult {
    pub best_position: Vec<f64>,
    pub best_objective: f64,
    pub evaluations_used: u64,
    /// Non-increasing in `best_objective`; one point per strict improvement.
    pub convergence_trace: Vec<TracePoint>,
}

/// Budgeted access to an objective with best-ever tracking.
pub struct Evaluator<'a> {
    objective: &'a dyn Objective,
    budget: Budget,
    best_position: Vec<f64>,
    best_objective: f64,
    trace: Vec<TracePoint>,
}

impl<'a> Evaluator<'a> {
    pub fn new(objective: &'a dyn Objective, budget: Budget) -> Self {
        Self {
            objective,
            budget,
            best_position: Vec::new(),
            best_objective: f64::INFINITY,
            trace: Vec::new(),
        }
    }

    pub fn objective(&self) -> &'a dyn Objective {
        self.objective
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn best_objective(&self) -> f64 {
        self.best_objective
    }

    pub fn best_position(&self) -> &[f64] {
        &self.best_position
    }

    pub fn eval(&mut self, x: &[f64], rng: &mut dyn RandomSource) -> Result<f64> {
        let value = evaluate(self.objective, x, &mut self.budget, rng)?;
        if value < self.best_objective || self.trace.is_empty() {
            self.best_objective = value;
            self.best_position.clear();
            self.best_position.extend_from_slice(x);
            self.trace.push(TracePoint {
                evaluations: self.budget.used(),
                best_objective: value,
            });
        }
        Ok(value)
    }

    pub fn finish(self) -> OptimizerResult {
        OptimizerResult {
            best_position: self.best_position,
            best_objective: self.best_objective,
            evaluations_used: self.budget.used(),
            convergence_trace: self.trace,
        }
    }
}
