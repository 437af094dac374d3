//! Integer lattices: saturated nullspaces, Hermite normal form, subgroup indices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::elimination::{primitive, rational_nullspace};
use super::matrix::IntegerMatrix;
use super::smith::smith;

/// Index of a subgroup: a positive integer, or infinite when the quotient
/// has positive rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupIndex {
    Finite(BigInt),
    Infinite,
}

impl GroupIndex {
    pub fn is_finite(&self) -> bool {
        matches!(self, GroupIndex::Finite(_))
    }
}

impl fmt::Display for GroupIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupIndex::Finite(n) => write!(f, "{n}"),
            GroupIndex::Infinite => write!(f, "infinite"),
        }
    }
}

/// Row-style Hermite normal form of the row span: rows are in echelon form,
/// pivots positive, entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped.
pub fn hermite_rows(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m = rows.to_vec();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        loop {
            let best = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()).then(a.cmp(&b)));
            let Some(p) = best else { break };
            m.swap(r, p);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = &m[i][c] / &m[r][c];
                for j in 0..cols {
                    let delta = &q * &m[r][j];
                    m[i][j] -= delta;
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < m.len() && !m[r][c].is_zero() {
            if m[r][c].is_negative() {
                for x in m[r].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            for i in 0..r {
                let q = m[i][c].div_floor(&m[r][c]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let delta = &q * &m[r][j];
                        m[i][j] -= delta;
                    }
                }
            }
            r += 1;
        }
    }
    m.truncate(r);
    m
}

/// A basis of the lattice `{x ∈ ℤⁿ : a x = 0}`.
///
/// The rational nullspace is cleared of denominators, saturated through the
/// Smith form of the basis matrix (the first `d` columns of `U⁻¹` span
/// `ℚ-span ∩ ℤⁿ`), and returned in Hermite normal form.
pub fn integer_nullspace(a: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let n = a.cols();
    let rational = rational_nullspace(a);
    let d = rational.len();
    if d == 0 {
        return Vec::new();
    }
    let cleared: Vec<Vec<BigInt>> = rational.iter().map(|v| primitive(&v.clear_denominators())).collect();
    let b = IntegerMatrix::from_columns(n, &cleared);
    let snf = smith(&b);
    let saturated: Vec<Vec<BigInt>> = (0..d).map(|j| snf.u_inv.column(j)).collect();
    hermite_rows(&saturated, n)
}

/// Index of the subgroup generated by `generators` inside
/// `ℤ^rank ⊕ ℤ/t₁ ⊕ ... ⊕ ℤ/tₘ`. Each generator lists the free coordinates
/// followed by one residue per torsion factor.
pub fn subgroup_index(rank: usize, torsion: &[BigInt], generators: &[Vec<BigInt>]) -> GroupIndex {
    let dim = rank + torsion.len();
    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    for (j, t) in torsion.iter().enumerate() {
        let mut col = vec![BigInt::zero(); dim];
        col[rank + j] = t.clone();
        columns.push(col);
    }
    for g in generators {
        assert_eq!(g.len(), dim, "generator has wrong number of coordinates");
        columns.push(g.clone());
    }
    if dim == 0 {
        return GroupIndex::Finite(BigInt::one());
    }
    let relations = IntegerMatrix::from_columns(dim, &columns);
    let snf = smith(&relations);
    if snf.rank() < dim {
        return GroupIndex::Infinite;
    }
    GroupIndex::Finite(snf.diagonal().iter().take(dim).product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::big_vec;

    #[test]
    fn nullspace_examples() {
        let a = IntegerMatrix::from_i64_rows(2, &[vec![2, -1]]);
        assert_eq!(integer_nullspace(&a), vec![big_vec(&[1, 2])]);

        // Saturation: ℚ-basis (2, 0, 1) style vectors must become primitive lattice generators.
        let a = IntegerMatrix::from_i64_rows(3, &[vec![-2, 1, 1]]);
        let basis = integer_nullspace(&a);
        assert_eq!(basis.len(), 2);
        let span = IntegerMatrix::from_columns(3, &basis);
        for target in [[1, 1, 1], [1, 2, 0], [1, 0, 2]] {
            assert!(crate::linalg::solve_integer(&span, &big_vec(&target)).is_some());
        }

        assert!(integer_nullspace(&IntegerMatrix::identity(3)).is_empty());
        assert_eq!(
            integer_nullspace(&IntegerMatrix::zeros(0, 2)),
            vec![big_vec(&[1, 0]), big_vec(&[0, 1])]
        );
    }

    #[test]
    fn index_examples() {
        assert_eq!(
            subgroup_index(2, &[], &[big_vec(&[2, 0]), big_vec(&[0, 1])]),
            GroupIndex::Finite(2.into())
        );
        assert_eq!(
            subgroup_index(2, &[], &[big_vec(&[4, -1]), big_vec(&[2, 0])]),
            GroupIndex::Finite(2.into())
        );
        assert_eq!(subgroup_index(2, &[], &[big_vec(&[1, 0])]), GroupIndex::Infinite);
        let two = BigInt::from(2);
        assert_eq!(
            subgroup_index(1, std::slice::from_ref(&two), &[big_vec(&[4, 1])]),
            GroupIndex::Finite(8.into())
        );
        assert_eq!(
            subgroup_index(1, std::slice::from_ref(&two), &[big_vec(&[4, 1]), big_vec(&[0, 1])]),
            GroupIndex::Finite(4.into())
        );
        assert_eq!(subgroup_index(1, &[two], &[big_vec(&[0, 1])]), GroupIndex::Infinite);
        assert_eq!(subgroup_index(0, &[], &[]), GroupIndex::Finite(1.into()));
    }

    #[test]
    fn hermite_is_canonical() {
        let a = hermite_rows(&[big_vec(&[2, 4, 6]), big_vec(&[1, 1, 1])], 3);
        let b = hermite_rows(&[big_vec(&[3, 5, 7]), big_vec(&[-1, -1, -1])], 3);
        assert_eq!(a, b);
        assert_eq!(a, vec![big_vec(&[1, 1, 1]), big_vec(&[0, 2, 4])]);
    }
}
