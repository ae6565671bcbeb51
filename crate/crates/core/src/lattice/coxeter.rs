use std::fmt::Debug;

use rayon::prelude::*;
use serde::Serialize;

use super::{GroupSpec, LatticeVector};
use crate::error::Result;

/// Anything the generators can act on.
pub trait ActionProbe: Sync {
    type State: Clone + PartialEq + Debug + Send + Sync;
    fn apply(&self, gen: usize, s: &Self::State) -> Result<Self::State>;
}

/// The linear action on the lattice.
pub struct LatticeProbe<'a>(pub &'a GroupSpec);

impl ActionProbe for LatticeProbe<'_> {
    type State = LatticeVector;
    fn apply(&self, gen: usize, s: &LatticeVector) -> Result<LatticeVector> {
        Ok(self.0.star_action(gen, s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    pub i: usize,
    pub j: usize,
    pub order: u32,
    pub state_index: usize,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterReport {
    pub relations: usize,
    pub states: usize,
    pub checks: usize,
    pub violation: Option<RelationViolation>,
}

impl CoxeterReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// All `(i, j, m)` with `(s_i s_j)^m = 1`, `i ≤ j`.
pub fn relations(spec: &GroupSpec) -> Vec<(usize, usize, u32)> {
    let r = spec.rank();
    let mut out = Vec::new();
    for i in 0..r {
        for j in i..r {
            out.push((i, j, if i == j { 1 } else { spec.order(i, j) }));
        }
    }
    out
}

fn check_one<P: ActionProbe>(
    probe: &P,
    (i, j, m): (usize, usize, u32),
    idx: usize,
    s: &P::State,
) -> Option<RelationViolation> {
    let fail = |w: String| RelationViolation { i, j, order: m, state_index: idx, witness: w };
    let mut cur = s.clone();
    // (s_i s_j)^m with s_j acting first; for i == j this is s_i^2.
    for _ in 0..m {
        for g in [j, i] {
            cur = match probe.apply(g, &cur) {
                Ok(v) => v,
                Err(e) => return Some(fail(format!("{e} while applying s{g} to {s:?}"))),
            };
        }
    }
    (cur != *s).then(|| fail(format!("{s:?} -> {cur:?}")))
}

/// Check `s_i^2 = 1` and the rank-two braid relations on every state.
pub fn verify_coxeter_relations<P: ActionProbe>(spec: &GroupSpec, probe: &P, states: &[P::State]) -> CoxeterReport {
    let rels = relations(spec);
    let jobs: Vec<((usize, usize, u32), usize)> =
        rels.iter().flat_map(|&r| (0..states.len()).map(move |k| (r, k))).collect();
    let violation = jobs
        .par_iter()
        .map(|&(r, k)| check_one(probe, r, k, &states[k]))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    CoxeterReport { relations: rels.len(), states: states.len(), checks: jobs.len(), violation }
}
