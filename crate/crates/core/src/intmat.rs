//! Exact integer matrices with Smith normal form.
//!
//! Arithmetic is big-integer throughout: ranks and torsion invariants are the
//! quantities under test, so modular shortcuts are off the table.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense matrix over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> IntMat {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> IntMat {
        assert_eq!(entries.len(), rows * cols);
        IntMat {
            rows,
            cols,
            data: entries.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries_i64(&self) -> Option<Vec<i64>> {
        self.data.iter().map(|v| i64::try_from(v).ok()).collect()
    }

    /// Nonzero diagonal entries of the Smith normal form, each dividing the
    /// next, all positive.
    pub fn smith_invariants(&self) -> Vec<BigInt> {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut invariants = Vec::new();
        let mut t = 0;
        while t < m.min(n) {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut pivot: Option<(usize, usize)> = None;
            for r in t..m {
                for c in t..n {
                    if !a.get(r, c).is_zero()
                        && pivot
                            .map(|(pr, pc)| a.get(r, c).abs() < a.get(pr, pc).abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = pivot else { break };
            a.swap_rows(t, pr);
            a.swap_cols(t, pc);
            'reduce: loop {
                for r in t + 1..m {
                    if !a.get(r, t).is_zero() {
                        let q = a.get(r, t) / a.get(t, t);
                        a.row_sub(r, t, &q);
                        if !a.get(r, t).is_zero() {
                            a.swap_rows(t, r);
                            continue 'reduce;
                        }
                    }
                }
                for c in t + 1..n {
                    if !a.get(t, c).is_zero() {
                        let q = a.get(t, c) / a.get(t, t);
                        a.col_sub(c, t, &q);
                        if !a.get(t, c).is_zero() {
                            a.swap_cols(t, c);
                            continue 'reduce;
                        }
                    }
                }
                // enforce the divisibility chain
                for r in t + 1..m {
                    for c in t + 1..n {
                        if !(a.get(r, c) % a.get(t, t)).is_zero() {
                            let one = BigInt::from(-1);
                            a.row_sub(t, r, &one); // row t += row r
                            continue 'reduce;
                        }
                    }
                }
                break;
            }
            invariants.push(a.get(t, t).abs());
            t += 1;
        }
        invariants
    }

    pub fn rank(&self) -> usize {
        self.smith_invariants().len()
    }

    /// Invariant factors different from 1: the torsion content of the
    /// cokernel, and the obstruction to the kernel having constant rank
    /// under base change.
    pub fn nontrivial_invariants(&self) -> Vec<BigInt> {
        self.smith_invariants()
            .into_iter()
            .filter(|v| !v.is_one())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// `row[r] -= q * row[src]`.
    fn row_sub(&mut self, r: usize, src: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(r, c) - q * self.get(src, c);
            self.set(r, c, v);
        }
    }

    /// `col[c] -= q * col[src]`.
    fn col_sub(&mut self, c: usize, src: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, c) - q * self.get(r, src);
            self.set(r, c, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(m: &IntMat) -> Vec<i64> {
        m.smith_invariants()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn identity_and_scalars() {
        assert_eq!(inv(&IntMat::from_i64(2, 2, &[1, 0, 0, 1])), vec![1, 1]);
        assert_eq!(inv(&IntMat::from_i64(1, 1, &[6])), vec![6]);
        assert_eq!(inv(&IntMat::zero(3, 2)), Vec::<i64>::new());
    }

    #[test]
    fn classic_examples() {
        assert_eq!(inv(&IntMat::from_i64(2, 2, &[2, 4, 6, 8])), vec![2, 4]);
        assert_eq!(
            inv(&IntMat::from_i64(3, 3, &[2, 4, 4, -6, 6, 12, 10, 4, 16])),
            vec![2, 2, 156]
        );
        assert_eq!(inv(&IntMat::from_i64(2, 3, &[1, 2, 3, 4, 5, 6])), vec![1, 3]);
    }

    #[test]
    fn divisibility_chain_holds() {
        let m = IntMat::from_i64(3, 3, &[6, 10, 15, 10, 15, 6, 15, 6, 10]);
        let s = m.smith_invariants();
        for w in s.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "{s:?}");
        }
    }

    #[test]
    fn rank_matches_rational_rank() {
        let m = IntMat::from_i64(3, 3, &[1, 2, 3, 2, 4, 6, 1, 1, 1]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nontrivial_invariants(), Vec::<BigInt>::new());
    }
}
