//! Exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::coeffring::Rat;

/// Row echelon form of an integer matrix by Bareiss fraction-free
/// elimination. Returns the reduced rows and their pivot columns.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Scale a rational row to integers.
fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Rank of a rational matrix.
pub fn rank(m: &[Vec<Rat>], cols: usize) -> usize {
    bareiss(m.iter().map(|r| integer_row(r)).collect(), cols).1.len()
}

/// A basis of `{v : M v = 0}`, one vector per free column.
pub fn nullspace(m: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let (ech, pivots) = bareiss(m.iter().map(|r| integer_row(r)).collect(), cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        let mut v = vec![Rat::zero(); cols];
        v[f] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut s = Rat::zero();
            for j in pc + 1..cols {
                if !ech[r][j].is_zero() && !v[j].is_zero() {
                    s += Rat::from_integer(ech[r][j].clone()) * &v[j];
                }
            }
            v[pc] = -s / Rat::from_integer(ech[r][pc].clone());
        }
        out.push(v);
    }
    out
}

/// Reduced row echelon form of a list of vectors, zero rows dropped.
pub fn rref(vs: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut a: Vec<Vec<Rat>> = vs.to_vec();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Rat::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let k = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &k * p;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::rat;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
    }

    #[test]
    fn small_examples() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&m, 3), 1);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        assert_eq!(rref(&m, 3), vec![vec![rat(1, 1), rat(2, 1), rat(3, 1)]]);
        let id = mat(&[&[1, 0], &[0, 1]]);
        assert!(nullspace(&id, 2).is_empty());
    }

    proptest! {
        #[test]
        fn nullspace_is_annihilated(
            entries in proptest::collection::vec(-5i64..=5, 12),
            dens in proptest::collection::vec(1i64..=4, 12),
        ) {
            let m: Vec<Vec<Rat>> = entries
                .chunks(4)
                .zip(dens.chunks(4))
                .map(|(r, d)| r.iter().zip(d).map(|(&a, &b)| rat(a, b)).collect())
                .collect();
            let ns = nullspace(&m, 4);
            prop_assert_eq!(ns.len() + rank(&m, 4), 4);
            for v in &ns {
                for row in &m {
                    let s: Rat = row.iter().zip(v).map(|(a, b)| a * b).sum();
                    prop_assert!(s.is_zero());
                }
            }
            prop_assert_eq!(rref(&m, 4).len(), rank(&m, 4));
        }
    }
}
