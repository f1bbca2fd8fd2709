use crate::rng::RandomSource;
use crate::space::SearchSpace;

/// A box-bounded objective to be minimized.
///
/// `noise` is the caller's stream; deterministic objectives ignore it.
pub trait Objective {
    fn space(&self) -> &SearchSpace;

    fn value(&self, x: &[f64], noise: &mut dyn RandomSource) -> f64;

    fn name(&self) -> &str {
        "objective"
    }

    fn dimension(&self) -> usize {
        self.space().dimension()
    }
}

/// Adapts a plain closure into an [`Objective`].
pub struct FnObjective<F> {
    name: String,
    space: SearchSpace,
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> f64,
{
    pub fn new(name: impl Into<String>, space: SearchSpace, f: F) -> Self {
        Self {
            name: name.into(),
            space,
            f,
        }
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64,
{
    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn value(&self, x: &[f64], _noise: &mut dyn RandomSource) -> f64 {
        (self.f)(x)
    }

    fn name(&self) -> &str {
        &self.name
    }
}
