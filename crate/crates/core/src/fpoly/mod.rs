//! The two characterizations of `F_λ`: boundary conditions solved as a
//! linear system, and the Weyl-word construction. Also the
//! non-logarithmic boundary checks.

pub mod linalg;
mod nonlog;
mod sampler;
mod solve;
mod template;

pub use nonlog::{
    boundary_runs, check_nonlog, series_solution_oracle, Boundary, NonLogQuery, NonLogReport, SeriesCase, SeriesReport,
};
pub use sampler::Sampler;
pub use solve::{box_vector, in_span, solve_linear_system, LinearSolution};
pub use template::{check_conditions, ConditionReport, ConditionTemplate, SliceCheck, SliceTemplate};

use crate::error::{Error, Result};
use crate::skew::SkewElement;
use crate::weyl::{TauSection, WeylAction};

/// `w(τ_k)` normalized.
pub fn construct_via_weyl(a: &WeylAction, word: &[usize], seed: usize) -> Result<TauSection> {
    a.apply_word(word, &TauSection::seed(&a.spec, seed))?.normalized()
}

/// Scale a polynomial with rational coefficients by the same rule as
/// [`TauSection::normalized`].
pub fn normalize_numeric(f: &SkewElement) -> Result<SkewElement> {
    let c = [(0, 0), (1, 0), (0, 1)]
        .iter()
        .map(|&(i, j)| f.coeff_xy(i, j))
        .find(|c| !c.is_zero())
        .ok_or_else(|| Error::Normalization("no normalization point".into()))?;
    let inv = c.monomial_inverse().ok_or_else(|| Error::Normalization(format!("value {c} is not a monomial")))?;
    Ok(f.left_mul_coeff(&inv))
}
