use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffring::{rat, Assignment, Rat, Symbol};
use crate::error::{Error, Result};
use crate::skew::LinearFactor;

/// Reproducible generic rational specializations.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `±n/d` with `n, d ∈ [2, 97]`, `n ≠ d`.
    pub fn value(&mut self) -> Rat {
        loop {
            let n: i64 = self.rng.gen_range(2..=97);
            let d: i64 = self.rng.gen_range(2..=97);
            if n == d {
                continue;
            }
            let s = if self.rng.gen_bool(0.5) { 1 } else { -1 };
            return rat(s * n, d);
        }
    }

    /// Values for `q`, `h1`, `h2`, `e1..en` and any extra symbols, pairwise
    /// distinct in absolute value. `skip` is left unassigned.
    pub fn assignment(&mut self, n: usize, extra: &[Symbol], skip: Option<Symbol>) -> Assignment {
        let mut syms = vec![Symbol::Q, Symbol::H(1), Symbol::H(2)];
        syms.extend((1..=n as u8).map(Symbol::E));
        syms.extend_from_slice(extra);
        let mut seen = BTreeSet::new();
        let mut a = Assignment::new();
        for s in syms {
            if Some(s) == skip {
                continue;
            }
            let v = loop {
                let v = self.value();
                if seen.insert(num_traits::Signed::abs(&v)) {
                    break v;
                }
            };
            a.set(s, v);
        }
        a
    }

    /// An assignment under which the given factors have pairwise distinct
    /// roots.
    pub fn generic_for(
        &mut self,
        n: usize,
        extra: &[Symbol],
        skip: Option<Symbol>,
        factors: &[LinearFactor],
    ) -> Result<Assignment> {
        for _ in 0..64 {
            let a = self.assignment(n, extra, skip);
            if roots_distinct(factors, &a)? {
                return Ok(a);
            }
        }
        Err(Error::Genericity("no generic specialization found in 64 draws".into()))
    }
}

fn roots_distinct(factors: &[LinearFactor], a: &Assignment) -> Result<bool> {
    let keys: BTreeSet<&LinearFactor> = factors.iter().collect();
    let mut vals = BTreeSet::new();
    for f in keys {
        if !vals.insert((f.var, a.eval_monomial(&f.scale)?)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_distinct() {
        let a = Sampler::new(7).assignment(11, &[], None);
        let b = Sampler::new(7).assignment(11, &[], None);
        assert_eq!(a, b);
        let vals: BTreeSet<Rat> = a.iter().map(|(_, v)| num_traits::Signed::abs(v)).collect();
        assert_eq!(vals.len(), 14);
        assert!(a.iter().all(|(_, v)| num_traits::Signed::abs(v) != rat(1, 1)));
        assert!(Sampler::new(7).assignment(11, &[], Some(Symbol::E(1))).get(Symbol::E(1)).is_none());
    }
}
