use frobsplit_core::{recursion_step, Ideal, Result, Splitting, StepExecutor};
use rayon::prelude::*;

/// Runs the recursion steps of one level on the rayon pool. `collect`
/// keeps frontier order, so output matches the sequential executor.
pub struct RayonExecutor;

impl StepExecutor for RayonExecutor {
    fn run(&self, s: &Splitting, frontier: &[Ideal]) -> Vec<Result<Vec<Ideal>>> {
        frontier.par_iter().map(|p| recursion_step(s, p)).collect()
    }
}
