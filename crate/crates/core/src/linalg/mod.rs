//! Exact integer and rational linear algebra.

mod elimination;
mod lattice;
mod matrix;
mod smith;

pub use elimination::{primitive, rank, rational_nullspace, rref, solve_integer, solve_rational, RationalVector};
pub use lattice::{hermite_rows, integer_nullspace, subgroup_index, GroupIndex};
pub use matrix::{big_vec, IntegerMatrix};
pub use smith::{smith, SmithDecomposition};

/// Number of columns minus rank.
pub fn nullity(a: &IntegerMatrix) -> usize {
    a.cols() - rank(a)
}
