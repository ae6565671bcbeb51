use std::collections::BTreeMap;

use super::{GroupSpec, LatticeVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitEntry {
    pub lambda: LatticeVector,
    /// Point index `k` of the seed `E_k`.
    pub seed: usize,
    /// Word written left to right; `lambda = word(E_seed)`.
    pub word: Vec<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct Orbit {
    /// First arrival at each class, in breadth-first order.
    pub entries: Vec<OrbitEntry>,
    /// Later arrivals at an already-known class by a different route.
    pub coincidences: Vec<(OrbitEntry, OrbitEntry)>,
}

/// Breadth-first enumeration of `{w(E_k)}` for words up to `max_len`.
pub fn orbit(spec: &GroupSpec, max_len: usize) -> Orbit {
    let seeds: Vec<(usize, LatticeVector)> = (1..=spec.n).map(|k| (k, LatticeVector::e(spec.n, k))).collect();
    orbit_from(spec, &seeds, max_len)
}

pub fn orbit_from(spec: &GroupSpec, seeds: &[(usize, LatticeVector)], max_len: usize) -> Orbit {
    let mut seen: BTreeMap<LatticeVector, usize> = BTreeMap::new();
    let mut out = Orbit::default();
    let mut frontier = Vec::new();
    for (k, l) in seeds {
        let e = OrbitEntry { lambda: l.clone(), seed: *k, word: vec![] };
        if let Some(&idx) = seen.get(l) {
            out.coincidences.push((out.entries[idx].clone(), e));
            continue;
        }
        seen.insert(l.clone(), out.entries.len());
        out.entries.push(e.clone());
        frontier.push(e);
    }
    for _ in 0..max_len {
        let mut next = Vec::new();
        for cur in &frontier {
            for g in 0..spec.rank() {
                if cur.word.first() == Some(&g) {
                    continue;
                }
                let lam = spec.star_action(g, &cur.lambda);
                let mut word = vec![g];
                word.extend_from_slice(&cur.word);
                let e = OrbitEntry { lambda: lam.clone(), seed: cur.seed, word };
                if let Some(&idx) = seen.get(&lam) {
                    out.coincidences.push((out.entries[idx].clone(), e));
                    continue;
                }
                seen.insert(lam, out.entries.len());
                out.entries.push(e.clone());
                next.push(e);
            }
        }
        frontier = next;
    }
    out
}
