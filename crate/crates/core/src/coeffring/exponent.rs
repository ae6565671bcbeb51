use std::fmt;

use smallvec::SmallVec;

/// Sparse integer exponent vector keyed by block-local symbol id.
///
/// Entries are kept sorted by id and never store a zero exponent, so
/// structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(SmallVec<[(u8, i32); 6]>);

impl ExponentVector {
    pub fn new() -> Self {
        ExponentVector(SmallVec::new())
    }

    pub fn unit(id: u8) -> Self {
        Self::single(id, 1)
    }

    pub fn single(id: u8, exp: i32) -> Self {
        let mut v = Self::new();
        v.set(id, exp);
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (u8, i32)>>(pairs: I) -> Self {
        let mut v = Self::new();
        for (id, e) in pairs {
            v.add_at(id, e);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u8, i32)> + '_ {
        self.0.iter().copied()
    }

    pub fn get(&self, id: u8) -> i32 {
        match self.0.binary_search_by_key(&id, |&(k, _)| k) {
            Ok(pos) => self.0[pos].1,
            Err(_) => 0,
        }
    }

    pub fn set(&mut self, id: u8, exp: i32) {
        match self.0.binary_search_by_key(&id, |&(k, _)| k) {
            Ok(pos) => {
                if exp == 0 {
                    self.0.remove(pos);
                } else {
                    self.0[pos].1 = exp;
                }
            }
            Err(pos) => {
                if exp != 0 {
                    self.0.insert(pos, (id, exp));
                }
            }
        }
    }

    pub fn add_at(&mut self, id: u8, delta: i32) {
        if delta != 0 {
            let cur = self.get(id);
            self.set(id, cur + delta);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    /// `self + k * other`, merged in one pass.
    pub fn combine(&self, other: &Self, k: i32) -> Self {
        let mut out = SmallVec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                if k * b[j].1 != 0 {
                    out.push((b[j].0, k * b[j].1));
                }
                j += 1;
            } else {
                let e = a[i].1 + k * b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        ExponentVector(out)
    }

    pub fn scale(&self, k: i32) -> Self {
        if k == 0 {
            return Self::new();
        }
        ExponentVector(self.0.iter().map(|&(id, e)| (id, e * k)).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Copy with the entry at `id` removed.
    pub fn without(&self, id: u8) -> Self {
        let mut v = self.clone();
        v.set(id, 0);
        v
    }

    pub fn ids(&self) -> impl Iterator<Item = u8> + '_ {
        self.0.iter().map(|&(id, _)| id)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.0.iter().map(|(k, v)| (k, v))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_vec() -> impl Strategy<Value = ExponentVector> {
        proptest::collection::vec((0u8..8, -3i32..=3), 0..6).prop_map(ExponentVector::from_pairs)
    }

    #[test]
    fn zero_entries_are_pruned() {
        let mut v = ExponentVector::single(3, 2);
        v.add_at(3, -2);
        assert!(v.is_zero());
        assert_eq!(v, ExponentVector::new());
    }

    proptest! {
        #[test]
        fn add_sub_round_trip(a in arb_vec(), b in arb_vec()) {
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
            prop_assert_eq!(a.add(&b), b.add(&a));
        }

        #[test]
        fn canonical_form(a in arb_vec()) {
            prop_assert!(a.iter().all(|(_, e)| e != 0));
            let ids: Vec<u8> = a.ids().collect();
            let mut sorted = ids.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(ids, sorted);
        }
    }
}
