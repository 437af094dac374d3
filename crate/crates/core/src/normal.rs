//! Standard normal coordinates: 4 triangle and 3 quadrilateral counts per
//! tetrahedron, the compatibility equations, edge functionals and the
//! canonical basis of tetrahedral and edge solutions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{nullity, rank, IntegerMatrix, RationalVector};
use crate::qtheory::QVector;
use crate::triangulation::{edge_slot, quad_of_slot, Triangulation, EDGE_VERTICES};

pub const COORDS_PER_TET: usize = 7;

/// Column of the triangle cutting off vertex `v` of tetrahedron `t`.
pub fn tri_index(t: usize, v: usize) -> usize {
    COORDS_PER_TET * t + v
}

/// Column of quadrilateral type `q` of tetrahedron `t`.
pub fn quad_index(t: usize, q: usize) -> usize {
    COORDS_PER_TET * t + 4 + q
}

/// A (formal) normal surface: 7 integer coordinates per tetrahedron.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalVector(pub Vec<BigInt>);

impl NormalVector {
    pub fn zero(tetrahedra: usize) -> Self {
        NormalVector(vec![BigInt::zero(); COORDS_PER_TET * tetrahedra])
    }

    pub fn tetrahedra(&self) -> usize {
        self.0.len() / COORDS_PER_TET
    }

    pub fn tri(&self, t: usize, v: usize) -> &BigInt {
        &self.0[tri_index(t, v)]
    }

    pub fn quad(&self, t: usize, q: usize) -> &BigInt {
        &self.0[quad_index(t, q)]
    }

    /// The quadrilateral coordinates, tetrahedron-major.
    pub fn q_project(&self) -> QVector {
        let k = self.tetrahedra();
        QVector(
            (0..k)
                .flat_map(|t| (0..3).map(move |q| (t, q)))
                .map(|(t, q)| self.quad(t, q).clone())
                .collect(),
        )
    }
}

/// The `6k × 7k` compatibility system.
///
/// Rows follow glued face pairs in `(tet, face)` order (each pair listed
/// once, from its lesser side) and, within a face, the cut-off vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilitySystem {
    pub matrix: IntegerMatrix,
}

impl CompatibilitySystem {
    pub fn is_solution(&self, v: &NormalVector) -> bool {
        self.matrix.mul_vec(&v.0).iter().all(Zero::is_zero)
    }

    pub fn nullity(&self) -> usize {
        nullity(&self.matrix)
    }
}

pub fn compatibility_system(tri: &Triangulation) -> CompatibilitySystem {
    let k = tri.size();
    let mut rows = Vec::with_capacity(6 * k);
    for t in 0..k {
        for f in 0..4 {
            let g = tri.gluing(t, f);
            let f2 = g.perm.apply(f);
            if (g.tet, f2) < (t, f) {
                continue;
            }
            for v in (0..4).filter(|&v| v != f) {
                let (v2, t2) = (g.perm.apply(v), g.tet);
                let mut row = vec![BigInt::zero(); COORDS_PER_TET * k];
                row[tri_index(t, v)] += 1;
                row[quad_index(t, quad_of_slot(edge_slot(v, f)))] += 1;
                row[tri_index(t2, v2)] -= 1;
                row[quad_index(t2, quad_of_slot(edge_slot(v2, f2)))] -= 1;
                rows.push(row);
            }
        }
    }
    CompatibilitySystem {
        matrix: IntegerMatrix::from_rows(COORDS_PER_TET * k, rows),
    }
}

fn check_edge(tri: &Triangulation, edge: usize) -> Result<()> {
    if edge >= tri.num_edges() {
        return Err(Error::IndexOutOfRange {
            what: "edge",
            index: edge,
            bound: tri.num_edges(),
        });
    }
    Ok(())
}

fn check_tet(tri: &Triangulation, t: usize) -> Result<()> {
    if t >= tri.size() {
        return Err(Error::IndexOutOfRange {
            what: "tetrahedron",
            index: t,
            bound: tri.size(),
        });
    }
    Ok(())
}

/// Number of corners of each disk type lying on edge class `edge`:
/// triangle `(t, v)` has corners on slots `{v, w}`, quad `(t, q)` on the
/// four slots not separated by it.
fn corner_counts(tri: &Triangulation, edge: usize) -> Vec<i64> {
    let k = tri.size();
    let mut counts = vec![0i64; COORDS_PER_TET * k];
    for t in 0..k {
        for (slot, &[a, b]) in EDGE_VERTICES.iter().enumerate() {
            if tri.edge_of(t, slot) != edge {
                continue;
            }
            counts[tri_index(t, a)] += 1;
            counts[tri_index(t, b)] += 1;
            for q in (0..3).filter(|&q| q != quad_of_slot(slot)) {
                counts[quad_index(t, q)] += 1;
            }
        }
    }
    counts
}

/// The functional sending each disk type to (its corners on the edge) / (edge degree).
pub fn edge_functional(tri: &Triangulation, edge: usize) -> Result<RationalVector> {
    check_edge(tri, edge)?;
    let degree = BigInt::from(tri.edge_classes()[edge].degree());
    Ok(RationalVector(
        corner_counts(tri, edge)
            .into_iter()
            .map(|n| BigRational::new(BigInt::from(n), degree.clone()))
            .collect(),
    ))
}

/// The tetrahedral solution: `-1` on the four triangles of `t`, `+1` on its quads.
pub fn tetra_solution(tri: &Triangulation, t: usize) -> Result<NormalVector> {
    check_tet(tri, t)?;
    let mut v = NormalVector::zero(tri.size());
    for u in 0..4 {
        v.0[tri_index(t, u)] = BigInt::from(-1);
    }
    for q in 0..3 {
        v.0[quad_index(t, q)] = BigInt::from(1);
    }
    Ok(v)
}

/// The edge solution: `-n` on each triangle with `n` corners on the edge,
/// and one quad per incident slot, namely the quad separating that slot
/// from its opposite (two copies if both lie on the edge).
pub fn edge_solution(tri: &Triangulation, edge: usize) -> Result<NormalVector> {
    check_edge(tri, edge)?;
    let mut v = NormalVector::zero(tri.size());
    for inc in &tri.edge_classes()[edge].incidences {
        let [a, b] = EDGE_VERTICES[inc.slot];
        v.0[tri_index(inc.tet, a)] -= 1;
        v.0[tri_index(inc.tet, b)] -= 1;
        v.0[quad_index(inc.tet, quad_of_slot(inc.slot))] += 1;
    }
    Ok(v)
}

/// The surface made of all triangles around one vertex link.
pub fn vertex_link_vector(tri: &Triangulation, link: usize) -> Result<NormalVector> {
    let links = tri.vertex_links();
    let l = links.get(link).ok_or(Error::IndexOutOfRange {
        what: "cusp",
        index: link,
        bound: links.len(),
    })?;
    let mut v = NormalVector::zero(tri.size());
    for &(t, u) in &l.triangles {
        v.0[tri_index(t, u)] = BigInt::from(1);
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalBasis {
    pub tetrahedral: Vec<NormalVector>,
    pub edge: Vec<NormalVector>,
}

impl CanonicalBasis {
    /// Tetrahedral solutions followed by edge solutions.
    pub fn vectors(&self) -> impl Iterator<Item = &NormalVector> {
        self.tetrahedral.iter().chain(&self.edge)
    }

    pub fn len(&self) -> usize {
        self.tetrahedral.len() + self.edge.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The `k + e` tetrahedral and edge solutions, checked to be independent
/// solutions spanning the solution space of the compatibility system.
pub fn canonical_basis(tri: &Triangulation) -> Result<CanonicalBasis> {
    tri.validate_ideal()?;
    let tetrahedral = (0..tri.size()).map(|t| tetra_solution(tri, t)).collect::<Result<Vec<_>>>()?;
    let edge = (0..tri.num_edges()).map(|i| edge_solution(tri, i)).collect::<Result<Vec<_>>>()?;
    let basis = CanonicalBasis { tetrahedral, edge };

    let system = compatibility_system(tri);
    let dim = system.nullity();
    let stacked = IntegerMatrix::from_rows(COORDS_PER_TET * tri.size(), basis.vectors().map(|v| v.0.clone()).collect());
    let independent = rank(&stacked);
    let solutions = basis.vectors().all(|v| system.is_solution(v));
    if !solutions || independent != basis.len() || dim != basis.len() {
        return Err(Error::BasisDefect {
            vectors: basis.len(),
            independent,
            solutions,
            nullity: dim,
        });
    }
    Ok(basis)
}

/// The matrix `[φ_i(β_j)]` of edge functionals against edge solutions.
pub fn pairing_matrix(tri: &Triangulation, basis: &CanonicalBasis) -> Result<Vec<Vec<BigRational>>> {
    (0..tri.num_edges())
        .map(|i| {
            let phi = edge_functional(tri, i)?;
            Ok(basis.edge.iter().map(|b| phi.dot(&b.0)).collect())
        })
        .collect()
}
