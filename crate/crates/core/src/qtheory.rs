//! Quadrilateral coordinates and the Q-matching equations.
//!
//! Every quad with a corner on an edge slot carries a corner sign there. In
//! a positively oriented tetrahedron the two quads meeting slot `s` get
//! signs from a fixed cyclic rule on the three quad types (see
//! [`quad_corner_sign`]); a negatively oriented tetrahedron flips them.
//! Orientable triangulations use one global orientation. Non-orientable ones
//! use, edge by edge, the orientation transported around the edge from its
//! first incidence.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{nullity, rank, IntegerMatrix};
use crate::normal::canonical_basis;
use crate::perm::Perm4;
use crate::triangulation::{edge_slot, quad_of_slot, CuspKind, DoubleCover, Triangulation, EDGE_VERTICES};

/// Quadrilateral coordinates, 3 per tetrahedron, tetrahedron-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVector(pub Vec<BigInt>);

impl QVector {
    pub fn zero(tetrahedra: usize) -> Self {
        QVector(vec![BigInt::zero(); 3 * tetrahedra])
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        QVector(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn quad(&self, t: usize, q: usize) -> &BigInt {
        &self.0[3 * t + q]
    }

    pub fn tetrahedra(&self) -> usize {
        self.0.len() / 3
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, factor: &BigInt) -> QVector {
        QVector(self.0.iter().map(|a| a * factor).collect())
    }
}

/// Sign of quad `q`'s corner on edge slot `slot` in a positively oriented
/// tetrahedron. The quad types are cyclically ordered `0 → 1 → 2`; the
/// corner is positive when the slot's own quad type precedes `q`.
///
/// Even relabellings of the vertices rotate the quad types cyclically and
/// odd ones reverse the cycle, so the rule depends only on orientation.
pub fn quad_corner_sign(q: usize, slot: usize) -> i32 {
    let own = quad_of_slot(slot);
    assert_ne!(own, q, "quad {q} has no corner on slot {slot}");
    if own == (q + 2) % 3 {
        1
    } else {
        -1
    }
}

/// Signed quad corners at one edge incidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidenceSigns {
    pub tet: usize,
    pub slot: usize,
    /// Orientation used for this incidence.
    pub orientation: i32,
    /// The two quads with a corner on the slot, each with its sign.
    pub quads: [(usize, i32); 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerSigns {
    /// Per edge class, per incidence in cyclic order.
    pub edges: Vec<Vec<IncidenceSigns>>,
    /// Per tetrahedron and slot: (edge class, position).
    lookup: Vec<[(usize, usize); 6]>,
}

impl CornerSigns {
    /// Signs induced by an explicit orientation per tetrahedron.
    pub fn from_orientation(tri: &Triangulation, orientation: &[i32]) -> CornerSigns {
        CornerSigns::build(tri, |inc_tet, _| orientation[inc_tet])
    }

    fn build(tri: &Triangulation, orient: impl Fn(usize, i32) -> i32) -> CornerSigns {
        let mut lookup = vec![[(0, 0); 6]; tri.size()];
        let edges = tri
            .edge_classes()
            .iter()
            .map(|e| {
                e.incidences
                    .iter()
                    .enumerate()
                    .map(|(pos, inc)| {
                        lookup[inc.tet][inc.slot] = (e.index, pos);
                        let o = orient(inc.tet, inc.orientation);
                        let own = quad_of_slot(inc.slot);
                        let mut quads = [(0, 0); 2];
                        for (i, q) in (0..3).filter(|&q| q != own).enumerate() {
                            quads[i] = (q, o * quad_corner_sign(q, inc.slot));
                        }
                        IncidenceSigns {
                            tet: inc.tet,
                            slot: inc.slot,
                            orientation: o,
                            quads,
                        }
                    })
                    .collect()
            })
            .collect();
        CornerSigns { edges, lookup }
    }

    /// Sign of quad `q`'s corner on slot `slot` of tetrahedron `tet`.
    pub fn sign(&self, tet: usize, slot: usize, q: usize) -> i32 {
        let (e, pos) = self.lookup[tet][slot];
        let inc = &self.edges[e][pos];
        inc.quads
            .iter()
            .find(|(qq, _)| *qq == q)
            .map(|&(_, s)| s)
            .expect("quad has a corner on this slot")
    }
}

/// Corner signs: from the global orientation when one exists, otherwise
/// from the orientation transported around each edge separately.
pub fn corner_signs(tri: &Triangulation) -> CornerSigns {
    match tri.orientation() {
        Some(orientation) => CornerSigns::from_orientation(tri, &orientation),
        None => CornerSigns::build(tri, |_, transported| transported),
    }
}

/// The `e × 3k` Q-matching system, one row per edge class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatchingSystem {
    pub matrix: IntegerMatrix,
}

impl QMatchingSystem {
    pub fn from_signs(tri: &Triangulation, signs: &CornerSigns) -> QMatchingSystem {
        let rows = signs
            .edges
            .iter()
            .map(|incs| {
                let mut row = vec![BigInt::zero(); 3 * tri.size()];
                for inc in incs {
                    for &(q, s) in &inc.quads {
                        row[3 * inc.tet + q] += s;
                    }
                }
                row
            })
            .collect();
        QMatchingSystem {
            matrix: IntegerMatrix::from_rows(3 * tri.size(), rows),
        }
    }

    /// Index of the first violated equation, if any.
    pub fn violated_equation(&self, q: &QVector) -> Option<usize> {
        self.matrix.mul_vec(&q.0).iter().position(|x| !x.is_zero())
    }

    pub fn check(&self, q: &QVector) -> Result<()> {
        if q.0.len() != self.matrix.cols() {
            return Err(Error::LengthMismatch {
                expected: self.matrix.cols(),
                found: q.0.len(),
            });
        }
        match self.violated_equation(q) {
            Some(equation) => Err(Error::NotASolution { equation }),
            None => Ok(()),
        }
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }

    pub fn nullity(&self) -> usize {
        nullity(&self.matrix)
    }

    /// True when the rows add up to the zero vector.
    pub fn rows_sum_to_zero(&self) -> bool {
        (0..self.matrix.cols()).all(|j| (0..self.matrix.rows()).map(|i| self.matrix.get(i, j)).sum::<BigInt>().is_zero())
    }
}

pub fn q_matching_system(tri: &Triangulation) -> QMatchingSystem {
    QMatchingSystem::from_signs(tri, &corner_signs(tri))
}

/// Dimension of the space of quadrilateral solutions, checked against
/// `2k + c`, where only torus cusps count towards `c` (equivalently rank
/// `k - c`). A Klein bottle cusp has one-dimensional real homology, so it
/// adds no free direction; on orientable triangulations every cusp is a
/// torus.
pub fn dim_w(tri: &Triangulation) -> Result<usize> {
    let cusps = tri.validate_ideal()?;
    let tori = cusps.iter().filter(|c| c.kind == CuspKind::Torus).count();
    let system = q_matching_system(tri);
    let computed = system.nullity();
    let expected = 2 * tri.size() + tori;
    if computed != expected || system.rank() + tori != tri.size() {
        return Err(Error::DimensionMismatch { computed, expected });
    }
    Ok(computed)
}

/// Quad projections of the canonical basis; they span the compact classes.
pub fn compact_generators(tri: &Triangulation) -> Result<Vec<QVector>> {
    Ok(canonical_basis(tri)?.vectors().map(|v| v.q_project()).collect())
}

/// Dimension of the subspace of classes realised by closed normal surfaces.
pub fn compact_dimension(tri: &Triangulation) -> Result<usize> {
    let gens = compact_generators(tri)?;
    Ok(rank(&IntegerMatrix::from_rows(
        3 * tri.size(),
        gens.into_iter().map(|g| g.0).collect(),
    )))
}

/// True when `q` is the quad projection of a formal normal surface.
pub fn is_compact_class(tri: &Triangulation, q: &QVector) -> Result<bool> {
    q_matching_system(tri).check(q)?;
    let gens = compact_generators(tri)?;
    let cols = 3 * tri.size();
    let span = IntegerMatrix::from_rows(cols, gens.into_iter().map(|g| g.0).collect());
    let with_q = span.vstack(&IntegerMatrix::from_rows(cols, vec![q.0.clone()]));
    Ok(rank(&with_q) == rank(&span))
}

/// Lifts a solution to the double cover by copying each coordinate to both
/// lifts of its tetrahedron.
pub fn lift_to_cover(tri: &Triangulation, cover: &DoubleCover, q: &QVector) -> Result<QVector> {
    q_matching_system(tri).check(q)?;
    let lifted = QVector(
        cover
            .projection
            .iter()
            .flat_map(|&t| (0..3).map(move |quad| (t, quad)))
            .map(|(t, quad)| q.quad(t, quad).clone())
            .collect(),
    );
    q_matching_system(&cover.cover).check(&lifted)?;
    Ok(lifted)
}

/// Column permutation induced on quad coordinates by a relabelling given
/// as `(image tetrahedron, vertex map)` per tetrahedron: column `3t + q`
/// goes to entry `i` of the result.
pub fn quad_permutation(map: &[(usize, Perm4)]) -> Vec<usize> {
    map.iter()
        .flat_map(|&(u, pi)| {
            (0..3).map(move |q| {
                let [a, b] = EDGE_VERTICES[q];
                3 * u + quad_of_slot(edge_slot(pi.apply(a), pi.apply(b)))
            })
        })
        .collect()
}

impl QVector {
    /// Moves coordinate `i` to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> QVector {
        let mut out = vec![BigInt::zero(); self.0.len()];
        for (x, &j) in self.0.iter().zip(perm) {
            out[j] = x.clone();
        }
        QVector(out)
    }
}
