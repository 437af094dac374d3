//! Hilbert bases of `{x ∈ ℤⁿ : x ≥ 0, Ax = 0}`.
//!
//! The basis is built one row at a time. Given generators `G` of the monoid
//! cut out by the earlier rows, the monoid of the next row `a` is generated
//! by the sums `Σ y_g g` where `y` runs over the minimal solutions of the
//! single equation `Σ y_g (a·g) = 0`; those come from the Contejean-Devie
//! completion. Reducible sums are then discarded: in a monoid of the form
//! `ℕⁿ ∩ ker A`, an element is reducible exactly when some other generator
//! lies below it coordinatewise.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntegerMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertOptions {
    /// Systems with more columns are rejected with [`Error::ScaleLimit`].
    pub max_columns: usize,
}

impl Default for HilbertOptions {
    fn default() -> Self {
        HilbertOptions { max_columns: 30 }
    }
}

/// Minimal non-negative solutions, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalSet {
    pub solutions: Vec<Vec<BigInt>>,
}

impl FundamentalSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.solutions.binary_search_by(|s| s.as_slice().cmp(x)).is_ok()
    }
}

fn dominates(x: &[u32], y: &[u32]) -> bool {
    x.iter().zip(y).all(|(a, b)| a >= b)
}

/// Minimal non-negative solutions of `Σ c_j y_j = 0`.
fn single_equation(c: &[BigInt]) -> Vec<Vec<u32>> {
    let n = c.len();
    let unit = |j: usize| {
        let mut y = vec![0u32; n];
        y[j] = 1;
        y
    };
    let mut solutions: Vec<Vec<u32>> = (0..n).filter(|&j| c[j].is_zero()).map(unit).collect();
    let mut frontier: BTreeMap<Vec<u32>, BigInt> = (0..n).filter(|&j| !c[j].is_zero()).map(|j| (unit(j), c[j].clone())).collect();

    while !frontier.is_empty() {
        let mut next = BTreeMap::new();
        let mut found = BTreeSet::new();
        for (y, value) in &frontier {
            if solutions.iter().any(|s| dominates(y, s)) {
                continue;
            }
            for j in 0..n {
                if c[j].is_zero() || c[j].is_positive() == value.is_positive() {
                    continue;
                }
                let mut z = y.clone();
                z[j] += 1;
                if solutions.iter().any(|s| dominates(&z, s)) {
                    continue;
                }
                let v = value + &c[j];
                if v.is_zero() {
                    found.insert(z);
                } else {
                    next.insert(z, v);
                }
            }
        }
        solutions.extend(found);
        frontier = next;
    }
    solutions
}

fn dot(a: &[BigInt], x: &[BigInt]) -> BigInt {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

fn below(x: &[BigInt], y: &[BigInt]) -> bool {
    x.iter().zip(y).all(|(a, b)| a <= b)
}

/// Keeps the elements with no other element below them.
fn irreducible(candidates: BTreeSet<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let all: Vec<Vec<BigInt>> = candidates.into_iter().collect();
    all.iter()
        .filter(|x| !all.iter().any(|g| g != *x && below(g, x)))
        .cloned()
        .collect()
}

/// The Hilbert basis of `{x ≥ 0 : ax = 0}`.
pub fn fundamental_solutions(a: &IntegerMatrix, options: HilbertOptions) -> Result<FundamentalSet> {
    let n = a.cols();
    if n > options.max_columns {
        return Err(Error::ScaleLimit {
            columns: n,
            cap: options.max_columns,
        });
    }
    let mut generators: Vec<Vec<BigInt>> = (0..n).map(|j| (0..n).map(|i| BigInt::from(u8::from(i == j))).collect()).collect();
    for r in 0..a.rows() {
        let row = a.row(r);
        let c: Vec<BigInt> = generators.iter().map(|g| dot(row, g)).collect();
        let sums: BTreeSet<Vec<BigInt>> = single_equation(&c)
            .into_iter()
            .map(|y| {
                let mut x = vec![BigInt::zero(); n];
                for (g, &m) in generators.iter().zip(&y) {
                    if m > 0 {
                        for (xi, gi) in x.iter_mut().zip(g) {
                            *xi += gi * m;
                        }
                    }
                }
                x
            })
            .collect();
        generators = irreducible(sums);
    }
    generators.sort();
    Ok(FundamentalSet { solutions: generators })
}

/// Calls `visit` on every vector with `0 ≤ x_i ≤ bound_i`, in lexicographic order.
fn for_each_in_box(bounds: &[BigInt], mut visit: impl FnMut(&[BigInt]) -> bool) -> bool {
    let n = bounds.len();
    let mut x = vec![BigInt::zero(); n];
    loop {
        if !visit(&x) {
            return false;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if x[i] < bounds[i] {
                x[i] += 1;
                break;
            }
            x[i] = BigInt::zero();
        }
    }
}

fn representable(x: &[BigInt], set: &[Vec<BigInt>], memo: &mut BTreeMap<Vec<BigInt>, bool>) -> bool {
    if x.iter().all(Zero::is_zero) {
        return true;
    }
    if let Some(&known) = memo.get(x) {
        return known;
    }
    let result = set.iter().any(|s| {
        below(s, x) && {
            let rest: Vec<BigInt> = x.iter().zip(s).map(|(a, b)| a - b).collect();
            representable(&rest, set, memo)
        }
    });
    memo.insert(x.to_vec(), result);
    result
}

/// Brute-force check that `set` is the Hilbert basis of `{x ≥ 0 : ax = 0}`
/// as far as the box `[0, bound]ⁿ` can tell: every element is a nonzero
/// solution with no proper nonzero solution below it, and every solution in
/// the box is a sum of elements.
pub fn verify_hilbert(a: &IntegerMatrix, set: &FundamentalSet, bound: u32) -> bool {
    let n = a.cols();
    let is_solution = |x: &[BigInt]| a.mul_vec(x).iter().all(Zero::is_zero);
    for s in &set.solutions {
        if s.len() != n || s.iter().any(Signed::is_negative) || s.iter().all(Zero::is_zero) || !is_solution(s) {
            return false;
        }
        let decomposes = !for_each_in_box(s, |u| {
            let proper = u != s.as_slice() && u.iter().any(|v| !v.is_zero());
            !(proper && is_solution(u))
        });
        if decomposes {
            return false;
        }
    }
    let mut memo = BTreeMap::new();
    let bounds = vec![BigInt::from(bound); n];
    for_each_in_box(&bounds, |x| !is_solution(x) || representable(x, &set.solutions, &mut memo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::big_vec;

    fn basis(cols: usize, rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        fundamental_solutions(&IntegerMatrix::from_i64_rows(cols, rows), HilbertOptions::default())
            .unwrap()
            .solutions
    }

    #[test]
    fn single_row() {
        assert_eq!(
            basis(3, &[vec![-2, 1, 1]]),
            vec![big_vec(&[1, 0, 2]), big_vec(&[1, 1, 1]), big_vec(&[1, 2, 0])]
        );
        assert_eq!(basis(2, &[vec![2, -3]]), vec![big_vec(&[3, 2])]);
        assert_eq!(basis(2, &[vec![1, 1]]), Vec::<Vec<BigInt>>::new());
    }

    #[test]
    fn empty_system_gives_orthant() {
        assert_eq!(basis(2, &[]), vec![big_vec(&[0, 1]), big_vec(&[1, 0])]);
    }

    #[test]
    fn zero_columns_are_free() {
        assert_eq!(basis(3, &[vec![1, -1, 0]]), vec![big_vec(&[0, 0, 1]), big_vec(&[1, 1, 0])]);
    }

    #[test]
    fn cap() {
        let a = IntegerMatrix::zeros(1, 31);
        assert_eq!(
            fundamental_solutions(&a, HilbertOptions::default()),
            Err(Error::ScaleLimit { columns: 31, cap: 30 })
        );
    }

    #[test]
    fn verifier_detects_missing_element() {
        let a = IntegerMatrix::from_i64_rows(3, &[vec![-2, 1, 1]]);
        let full = fundamental_solutions(&a, HilbertOptions::default()).unwrap();
        assert!(verify_hilbert(&a, &full, 6));
        let partial = FundamentalSet {
            solutions: vec![big_vec(&[1, 0, 2]), big_vec(&[1, 2, 0])],
        };
        assert!(!verify_hilbert(&a, &partial, 6));
        let padded = FundamentalSet {
            solutions: vec![big_vec(&[1, 0, 2]), big_vec(&[1, 1, 1]), big_vec(&[1, 2, 0]), big_vec(&[2, 2, 2])],
        };
        assert!(!verify_hilbert(&a, &padded, 6));
    }
}
