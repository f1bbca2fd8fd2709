//! Box-bounded search spaces and the agents that live in them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RandomSource;

/// Per-dimension lower/upper bounds. `lower[d] < upper[d]` always holds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidSearchSpace(
                "dimension must be positive".into(),
            ));
        }
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                found: upper.len(),
            });
        }
        for (d, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidSearchSpace(format!(
                    "dimension {d}: bounds [{lo}, {hi}] are not an ordered finite interval"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval in every dimension.
    pub fn uniform(dimension: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dimension], vec![upper; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| *lo <= *v && *v <= *hi)
    }

    pub(crate) fn check_len(&self, x: &[f64]) -> Result<()> {
        if x.len() == self.dimension() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: x.len(),
            })
        }
    }

    /// Projects `x` onto the box in place.
    pub(crate) fn clamp_in_place(&self, x: &mut [f64]) {
        for ((v, lo), hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*lo, *hi);
        }
    }

    /// `lower + u * (upper - lower)` for one fresh draw per dimension.
    pub(crate) fn sample(&self, rng: &mut dyn RandomSource) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| (lo + rng.next_f64() * (hi - lo)).min(*hi))
            .collect()
    }
}

/// Projects every coordinate of `x` into `[lower[d], upper[d]]`.
pub fn clamp(x: &[f64], space: &SearchSpace) -> Result<Vec<f64>> {
    space.check_len(x)?;
    let mut out = x.to_vec();
    space.clamp_in_place(&mut out);
    Ok(out)
}

/// One candidate solution. While `stale` is false, `objective` is the
/// objective function applied to `position`.
#[derive(Debug, Clone, PartialEq)]
pub struct Agent {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub objective: f64,
    pub stale: bool,
}

impl Agent {
    pub fn at(position: Vec<f64>) -> Self {
        let velocity = vec![0.0; position.len()];
        Self {
            position,
            velocity,
            objective: f64::INFINITY,
            stale: true,
        }
    }
}

/// `n` agents placed uniformly in the box with zero velocity, not yet evaluated.
pub fn uniform_init(
    space: &SearchSpace,
    n: usize,
    rng: &mut dyn RandomSource,
) -> Result<Vec<Agent>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "population must hold at least 2 agents, got {n}"
        )));
    }
    Ok((0..n).map(|_| Agent::at(space.sample(rng))).collect())
}
