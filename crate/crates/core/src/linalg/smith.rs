//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

/// `u * a * v == s` with `u`, `v` unimodular and `s` diagonal,
/// `s[0][0] | s[1][1] | ...`, all diagonal entries non-negative.
///
/// `u_inv` and `v_inv` are the inverses of `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub s: IntegerMatrix,
    pub v: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v_inv: IntegerMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries `s[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s.get(i, i).clone()).collect()
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Checks every defining property by direct multiplication.
    pub fn verify(&self, a: &IntegerMatrix) -> bool {
        let (m, n) = (a.rows(), a.cols());
        if self.u.mul(a).mul(&self.v) != self.s {
            return false;
        }
        if self.u.mul(&self.u_inv) != IntegerMatrix::identity(m) || self.v.mul(&self.v_inv) != IntegerMatrix::identity(n) {
            return false;
        }
        if !self.u.is_unimodular() || !self.v.is_unimodular() {
            return false;
        }
        for i in 0..m {
            for j in 0..n {
                if i != j && !self.s.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        let d = self.diagonal();
        if d.iter().any(|x| x.is_negative()) {
            return false;
        }
        d.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        })
    }
}

struct Work {
    s: IntegerMatrix,
    u: IntegerMatrix,
    u_inv: IntegerMatrix,
    v: IntegerMatrix,
    v_inv: IntegerMatrix,
}

impl Work {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.s.add_row_multiple(target, source, factor);
        self.u.add_row_multiple(target, source, factor);
        self.u_inv.add_col_multiple(source, target, &-factor);
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.s.add_col_multiple(target, source, factor);
        self.v.add_col_multiple(target, source, factor);
        self.v_inv.add_row_multiple(source, target, &-factor);
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }
}

/// Computes the Smith normal form. Pivots are chosen as the entry of least
/// absolute value in the remaining block, first in row-major order.
pub fn smith(a: &IntegerMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        s: a.clone(),
        u: IntegerMatrix::identity(m),
        u_inv: IntegerMatrix::identity(m),
        v: IntegerMatrix::identity(n),
        v_inv: IntegerMatrix::identity(n),
    };

    for t in 0..m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = w.s.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < w.s.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            // Euclid along column t and row t until both are clear.
            let mut clean = true;
            for i in t + 1..m {
                if w.s.get(i, t).is_zero() {
                    continue;
                }
                let q = w.s.get(i, t) / w.s.get(t, t);
                w.add_row(i, t, &-q);
                if !w.s.get(i, t).is_zero() {
                    w.swap_rows(t, i);
                    clean = false;
                }
            }
            for j in t + 1..n {
                if w.s.get(t, j).is_zero() {
                    continue;
                }
                let q = w.s.get(t, j) / w.s.get(t, t);
                w.add_col(j, t, &-q);
                if !w.s.get(t, j).is_zero() {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let pivot = w.s.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.s.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.s.get(t, t).is_negative() {
            w.negate_row(t);
        }
    }

    SmithDecomposition {
        u: w.u,
        s: w.s,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(a: &IntegerMatrix) -> Vec<i64> {
        let d = smith(a);
        assert!(d.verify(a));
        d.diagonal().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(diag(&IntegerMatrix::identity(2)), vec![1, 1]);
        assert_eq!(diag(&IntegerMatrix::from_i64_rows(2, &[vec![2, 0], vec![0, 0]])), vec![2, 0]);
        assert_eq!(diag(&IntegerMatrix::from_i64_rows(2, &[vec![2, 0], vec![0, 3]])), vec![1, 6]);
        assert_eq!(diag(&IntegerMatrix::from_i64_rows(2, &[vec![4, 6], vec![6, 4]])), vec![2, 10]);
        assert_eq!(diag(&IntegerMatrix::from_i64_rows(3, &[vec![0, 0, 0], vec![0, 0, 5]])), vec![5, 0]);
        assert!(diag(&IntegerMatrix::zeros(0, 3)).is_empty());
    }

    #[test]
    fn deterministic() {
        let a = IntegerMatrix::from_i64_rows(3, &[vec![3, -6, 9], vec![2, 4, 8], vec![-1, 7, 0]]);
        assert_eq!(smith(&a), smith(&a));
        assert!(smith(&a).verify(&a));
    }
}
