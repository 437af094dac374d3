use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

/// A vector of exact rationals in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, x: &[BigInt]) -> BigRational {
        assert_eq!(self.0.len(), x.len(), "dimension mismatch in dot product");
        self.0
            .iter()
            .zip(x)
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * BigRational::from_integer(b.clone()))
    }

    /// Scales by the least common denominator and returns the integer vector.
    pub fn clear_denominators(&self) -> Vec<BigInt> {
        let lcm = self.0.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        self.0
            .iter()
            .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer())
            .collect()
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination. Pivots
/// are the first nonzero entry in row-major order of the remaining block.
pub fn rank(a: &IntegerMatrix) -> usize {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (m.get(i, j) * m.get(r, c) - m.get(i, c) * m.get(r, j)) / &prev;
                m.set(i, j, v);
            }
            m.set(i, c, BigInt::zero());
        }
        prev = m.get(r, c).clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form over the rationals; returns the matrix and the
/// pivot columns.
pub fn rref(a: &IntegerMatrix) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigRational>> = a
        .to_rows()
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Basis of the rational nullspace: one vector per free column, with that
/// free variable equal to 1.
pub fn rational_nullspace(a: &IntegerMatrix) -> Vec<RationalVector> {
    let (m, pivots) = rref(a);
    let cols = a.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            RationalVector(v)
        })
        .collect()
}

/// Solves `a x = b` over the rationals, returning one solution if any.
pub fn solve_rational(a: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let mut aug = IntegerMatrix::zeros(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols(), b[i].clone());
    }
    let (m, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); a.cols()];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][a.cols()].clone();
    }
    Some(x)
}

/// Solves `a x = b` for integer `x` when `a` has full column rank.
pub fn solve_integer(a: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let x = solve_rational(a, b)?;
    if x.iter().all(|q| q.is_integer()) {
        Some(x.into_iter().map(|q| q.to_integer()).collect())
    } else {
        None
    }
}

/// Divides by the gcd of the entries and makes the first nonzero entry positive.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    v.iter().map(|x| x / &g * &sign).collect()
}
