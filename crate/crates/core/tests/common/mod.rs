//! Oracles shared by the integration tests. They reimplement what they
//! check (plain Gaussian elimination, box enumeration) instead of calling
//! the library's linear algebra.

#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn to_rational(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Reduced row echelon form over ℚ; returns the pivot columns.
fn echelon(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

/// Rank over ℚ.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    echelon(&mut to_rational(rows)).len()
}

/// The unique coefficients expressing `target` in the span of the linearly
/// independent `vectors`, if it lies there.
pub fn coordinates(vectors: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = target.len();
    let k = vectors.len();
    // augmented system: columns are the vectors, last column the target
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            vectors
                .iter()
                .map(|v| BigRational::from_integer(v[i].clone()))
                .chain(std::iter::once(BigRational::from_integer(target[i].clone())))
                .collect()
        })
        .collect();
    let pivots = echelon(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][k].clone();
    }
    Some(x)
}

/// True when `target` is an integer combination of the independent `vectors`.
pub fn in_lattice(vectors: &[Vec<BigInt>], target: &[BigInt]) -> bool {
    coordinates(vectors, target).is_some_and(|c| c.iter().all(|x| x.is_integer()))
}

/// Every vector in `[lo, hi]ⁿ`.
pub fn box_points(n: usize, lo: i64, hi: i64) -> Vec<Vec<BigInt>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<BigInt>| {
                (lo..=hi).map(move |v| {
                    let mut q = p.clone();
                    q.push(BigInt::from(v));
                    q
                })
            })
            .collect();
    }
    out
}

pub fn mat_vec(rows: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
    rows.iter().map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], b_cols: usize) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|row| (0..b_cols).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect())
        .collect()
}

/// Divides by the gcd and makes the lexicographically larger of `±v`.
pub fn primitive_up_to_sign(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let p: Vec<BigInt> = v.iter().map(|x| x / &g).collect();
    let n: Vec<BigInt> = p.iter().map(|x| -x).collect();
    if p >= n {
        p
    } else {
        n
    }
}

/// Row comparison insensitive to column order, row sign and scale: each
/// nonzero row becomes the sorted multiset of its primitive entries (with
/// the sign giving the larger multiset), and the rows are sorted.
pub fn normalized_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| {
            let g = r.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            let mut pos: Vec<BigInt> = r.iter().map(|x| x / &g).collect();
            let mut neg: Vec<BigInt> = pos.iter().map(|x| -x).collect();
            pos.sort();
            neg.sort();
            pos.max(neg)
        })
        .collect();
    out.sort();
    out
}

pub fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn is_unit(x: &BigInt) -> bool {
    x.abs() == BigInt::one()
}

/// Determinant by cofactor expansion along the first row (small matrices only).
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}
