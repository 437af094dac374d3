//! The boundary map: oriented quadrilateral boundary arcs as 1-chains on the
//! cusp cross-sections, their homology classes, and the index of the image.
//!
//! A cusp cross-section is the vertex link, triangulated by one triangle
//! `(tet, vertex)` per tetrahedron corner. Its vertices are the corners
//! `(tet, vertex, other)` (where the link triangle meets edge
//! `{vertex, other}`) up to face gluings, and its edges are the sides
//! `(tet, vertex, face)` up to face gluings.
//!
//! Each quad arc lies in a face, cuts off one vertex and runs parallel to
//! one side of the link triangle there. It is directed from its corner of
//! sign `+` to its corner of sign `-`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{integer_nullspace, rank, smith, solve_integer, subgroup_index, GroupIndex, IntegerMatrix};
use crate::qtheory::{corner_signs, lift_to_cover, q_matching_system, CornerSigns, QVector};
use crate::triangulation::{edge_slot, CuspKind, DoubleCover, Triangulation, UnionFind, EDGE_VERTICES};

/// The two vertices of `{0,1,2,3}` other than `a` and `b`, in increasing order.
fn others(a: usize, b: usize) -> [usize; 2] {
    let mut out = [0; 2];
    let mut i = 0;
    for w in 0..4 {
        if w != a && w != b {
            out[i] = w;
            i += 1;
        }
    }
    out
}

/// The vertex paired with `f` by quad type `q`.
fn quad_partner(q: usize, f: usize) -> usize {
    for pair in [EDGE_VERTICES[q], EDGE_VERTICES[5 - q]] {
        if pair[0] == f {
            return pair[1];
        }
        if pair[1] == f {
            return pair[0];
        }
    }
    unreachable!("every vertex lies in one pair")
}

/// A side `(tet, vertex, face)` of a link triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Side {
    pub tet: usize,
    pub vertex: usize,
    pub face: usize,
}

/// An edge of a cusp complex, represented by its lesser side. Its
/// orientation runs, in that side's tetrahedron, from the corner at the
/// lower-numbered vertex to the higher one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkEdge {
    pub side: Side,
    pub tail: usize,
    pub head: usize,
}

/// A homology group `ℤ^rank ⊕ ℤ/t₁ ⊕ ... ⊕ ℤ/tₘ` with its coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
struct HomologyBasis {
    /// Columns span the cycle lattice.
    cycles: IntegerMatrix,
    /// Change of basis on cycle coordinates from the Smith form, and its inverse.
    u: IntegerMatrix,
    u_inv: IntegerMatrix,
    /// Per Smith coordinate: `0` free, `1` trivial, larger is a torsion order.
    invariants: Vec<BigInt>,
}

/// A cusp cross-section as a 2-complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspComplex {
    pub cusp: usize,
    pub kind: CuspKind,
    pub triangles: Vec<(usize, usize)>,
    /// One representative corner `(tet, vertex, other)` per vertex.
    pub vertices: Vec<(usize, usize, usize)>,
    pub edges: Vec<LinkEdge>,
    /// `V × E`.
    pub d1: IntegerMatrix,
    /// `E × F`; triangle `(t, v)` with remaining vertices `a < b < c` is
    /// traversed `a → b → c → a`.
    pub d2: IntegerMatrix,
    sides: BTreeMap<Side, (usize, i32)>,
    homology: HomologyBasis,
}

impl CuspComplex {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// Edge carrying `side`, and `±1` comparing the side's own orientation
    /// (lower to higher vertex in its tetrahedron) with the edge's.
    pub fn side_edge(&self, side: Side) -> Option<(usize, i32)> {
        self.sides.get(&side).copied()
    }

    /// Rank of `H₁`.
    pub fn betti(&self) -> usize {
        self.homology.invariants.iter().filter(|d| d.is_zero()).count()
    }

    /// Orders of the torsion factors of `H₁`.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.homology.invariants.iter().filter(|d| *d > &BigInt::one()).cloned().collect()
    }

    /// True when `chain` (indexed by edges) is a 1-cycle.
    pub fn is_cycle(&self, chain: &[BigInt]) -> bool {
        chain.len() == self.edges.len() && self.d1.mul_vec(chain).iter().all(Zero::is_zero)
    }

    /// Class of a 1-cycle in `H₁`.
    pub fn homology_class(&self, chain: &BoundaryChain) -> Result<HomologyClass> {
        if !self.is_cycle(&chain.coefficients) {
            return Err(Error::NotACycle {
                cusp: self.cusp,
                reason: "nonzero boundary".into(),
            });
        }
        let h = &self.homology;
        let y = solve_integer(&h.cycles, &chain.coefficients).ok_or_else(|| Error::NotACycle {
            cusp: self.cusp,
            reason: "chain is not in the cycle lattice".into(),
        })?;
        let w = h.u.mul_vec(&y);
        let mut class = HomologyClass {
            free: Vec::new(),
            torsion: Vec::new(),
            orders: Vec::new(),
        };
        for (x, d) in w.into_iter().zip(&h.invariants) {
            if d.is_zero() {
                class.free.push(x);
            } else if d > &BigInt::one() {
                class.torsion.push(x.mod_floor(d));
                class.orders.push(d.clone());
            }
        }
        Ok(class)
    }

    /// A cycle representing `class`.
    pub fn representative(&self, class: &HomologyClass) -> Vec<BigInt> {
        let h = &self.homology;
        let mut free = class.free.iter();
        let mut torsion = class.torsion.iter();
        let w: Vec<BigInt> = h
            .invariants
            .iter()
            .map(|d| {
                if d.is_zero() {
                    free.next().expect("class matches this complex").clone()
                } else if d > &BigInt::one() {
                    torsion.next().expect("class matches this complex").clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        h.cycles.mul_vec(&h.u_inv.mul_vec(&w))
    }
}

fn homology_basis(d1: &IntegerMatrix, d2: &IntegerMatrix) -> HomologyBasis {
    let edges = d1.cols();
    let z = integer_nullspace(d1);
    let cycles = IntegerMatrix::from_columns(edges, &z);
    let relations: Vec<Vec<BigInt>> = (0..d2.cols())
        .map(|j| solve_integer(&cycles, &d2.column(j)).expect("boundaries are cycles"))
        .collect();
    let r = IntegerMatrix::from_columns(z.len(), &relations);
    let snf = smith(&r);
    let mut invariants = snf.diagonal();
    invariants.resize(z.len(), BigInt::zero());
    HomologyBasis {
        cycles,
        u: snf.u,
        u_inv: snf.u_inv,
        invariants,
    }
}

/// The cross-section of cusp `cusp`.
pub fn cusp_complex(tri: &Triangulation, cusp: usize) -> Result<CuspComplex> {
    let cusps = tri.cusps()?;
    let link = cusps.get(cusp).ok_or(Error::IndexOutOfRange {
        what: "cusp",
        index: cusp,
        bound: cusps.len(),
    })?;
    let k = tri.size();

    let corner = |t: usize, v: usize, w: usize| 16 * t + 4 * v + w;
    let mut uf = UnionFind::new(16 * k);
    for t in 0..k {
        for f in 0..4 {
            let g = tri.gluing(t, f);
            for v in (0..4).filter(|&v| v != f) {
                for w in (0..4).filter(|&w| w != f && w != v) {
                    uf.union(corner(t, v, w), corner(g.tet, g.perm.apply(v), g.perm.apply(w)));
                }
            }
        }
    }

    let mut triangles = link.triangles.clone();
    triangles.sort_unstable();

    let mut vertex_of_root = BTreeMap::new();
    let mut vertices = Vec::new();
    for &(t, v) in &triangles {
        for w in (0..4).filter(|&w| w != v) {
            let root = uf.find(corner(t, v, w));
            vertex_of_root.entry(root).or_insert_with(|| {
                vertices.push((t, v, w));
                vertices.len() - 1
            });
        }
    }
    let mut vertex_at = |t: usize, v: usize, w: usize| vertex_of_root[&uf.find(corner(t, v, w))];

    let mut sides = BTreeMap::new();
    let mut edges = Vec::new();
    for &(t, v) in &triangles {
        for f in (0..4).filter(|&f| f != v) {
            let side = Side {
                tet: t,
                vertex: v,
                face: f,
            };
            if sides.contains_key(&side) {
                continue;
            }
            let g = tri.gluing(t, f);
            let [w1, w2] = others(v, f);
            let partner = Side {
                tet: g.tet,
                vertex: g.perm.apply(v),
                face: g.perm.apply(f),
            };
            let rel = if g.perm.apply(w1) < g.perm.apply(w2) { 1 } else { -1 };
            let index = edges.len();
            edges.push(LinkEdge {
                side,
                tail: vertex_at(t, v, w1),
                head: vertex_at(t, v, w2),
            });
            sides.insert(side, (index, 1));
            sides.insert(partner, (index, rel));
        }
    }

    let mut d1 = IntegerMatrix::zeros(vertices.len(), edges.len());
    for (j, e) in edges.iter().enumerate() {
        *d1.get_mut(e.head, j) += 1;
        *d1.get_mut(e.tail, j) -= 1;
    }
    let mut d2 = IntegerMatrix::zeros(edges.len(), triangles.len());
    for (j, &(t, v)) in triangles.iter().enumerate() {
        let [a, b, c] = {
            let mut rest = (0..4).filter(|&w| w != v);
            [rest.next().unwrap(), rest.next().unwrap(), rest.next().unwrap()]
        };
        for (face, sign) in [(c, 1), (a, 1), (b, -1)] {
            let (e, rel) = sides[&Side { tet: t, vertex: v, face }];
            *d2.get_mut(e, j) += sign * rel;
        }
    }

    let homology = homology_basis(&d1, &d2);
    Ok(CuspComplex {
        cusp,
        kind: link.kind,
        triangles,
        vertices,
        edges,
        d1,
        d2,
        sides,
        homology,
    })
}

/// Integer coefficients on the edges of one cusp complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryChain {
    pub cusp: usize,
    pub coefficients: Vec<BigInt>,
}

/// A class in `H₁` of a cusp complex, in the basis of its Smith form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    pub free: Vec<BigInt>,
    /// Residues in `[0, order)`.
    pub torsion: Vec<BigInt>,
    pub orders: Vec<BigInt>,
}

impl HomologyClass {
    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }

    /// Gcd of the free coordinates; independent of the choice of basis.
    pub fn free_gcd(&self) -> BigInt {
        self.free.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn add(&self, other: &HomologyClass) -> HomologyClass {
        HomologyClass {
            free: self.free.iter().zip(&other.free).map(|(a, b)| a + b).collect(),
            torsion: self
                .torsion
                .iter()
                .zip(&other.torsion)
                .zip(&self.orders)
                .map(|((a, b), d)| (a + b).mod_floor(d))
                .collect(),
            orders: self.orders.clone(),
        }
    }

    pub fn scale(&self, n: &BigInt) -> HomologyClass {
        HomologyClass {
            free: self.free.iter().map(|a| a * n).collect(),
            torsion: self.torsion.iter().zip(&self.orders).map(|(a, d)| (a * n).mod_floor(d)).collect(),
            orders: self.orders.clone(),
        }
    }

    pub fn negate(&self) -> HomologyClass {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .free
            .iter()
            .map(ToString::to_string)
            .chain(self.torsion.iter().zip(&self.orders).map(|(x, d)| format!("{x} mod {d}")))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn check_solution(tri: &Triangulation, q: &QVector) -> Result<()> {
    q_matching_system(tri).check(q)
}

/// The 1-chains traced by the quad arcs of `q` under the given corner
/// signs, one per cusp. Fails if an arc has corners of equal sign or a
/// chain is not a cycle.
pub fn boundary_chains_with(
    tri: &Triangulation,
    signs: &CornerSigns,
    complexes: &[CuspComplex],
    q: &QVector,
) -> Result<Vec<BoundaryChain>> {
    let mut chains: Vec<BoundaryChain> = complexes
        .iter()
        .map(|c| BoundaryChain {
            cusp: c.cusp,
            coefficients: vec![BigInt::zero(); c.edges.len()],
        })
        .collect();
    for t in 0..tri.size() {
        for quad in 0..3 {
            let x = q.quad(t, quad);
            if x.is_zero() {
                continue;
            }
            for f in 0..4 {
                let v = quad_partner(quad, f);
                let [w1, w2] = others(v, f);
                let s1 = signs.sign(t, edge_slot(v, w1), quad);
                let s2 = signs.sign(t, edge_slot(v, w2), quad);
                let cusp = tri.link_of(t, v);
                if s1 == s2 {
                    return Err(Error::NotACycle {
                        cusp,
                        reason: format!("quad {quad} of tetrahedron {t} has equal corner signs on edges {v}{w1} and {v}{w2}"),
                    });
                }
                let (e, rel) = complexes[cusp]
                    .side_edge(Side {
                        tet: t,
                        vertex: v,
                        face: f,
                    })
                    .expect("side belongs to its cusp");
                chains[cusp].coefficients[e] += x * (s1 * rel);
            }
        }
    }
    for (c, ch) in complexes.iter().zip(&chains) {
        if !c.is_cycle(&ch.coefficients) {
            return Err(Error::NotACycle {
                cusp: c.cusp,
                reason: "quad arcs do not close up".into(),
            });
        }
    }
    Ok(chains)
}

/// All cusp complexes of `tri`.
pub fn cusp_complexes(tri: &Triangulation) -> Result<Vec<CuspComplex>> {
    (0..tri.cusps()?.len()).map(|i| cusp_complex(tri, i)).collect()
}

/// Boundary chains of a Q-matching solution, one per cusp, using the
/// corner signs of [`corner_signs`].
pub fn boundary_chains(tri: &Triangulation, q: &QVector) -> Result<Vec<BoundaryChain>> {
    check_solution(tri, q)?;
    boundary_chains_with(tri, &corner_signs(tri), &cusp_complexes(tri)?, q)
}

/// How the boundary map of a triangulation is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Quad arcs are traced on the cusps of the triangulation itself.
    Direct,
    /// The solution is lifted to the orientable double cover, its boundary
    /// computed there, and the result brought back down (see [`BoundaryMap`]).
    Cover,
}

/// Precomputed data for evaluating the boundary map repeatedly.
///
/// Orientable triangulations use [`Method::Direct`]. Non-orientable ones try
/// it first on a lattice basis of solutions; if some arc has corners of
/// equal sign or some chain fails to close up, they switch to
/// [`Method::Cover`] for every input, so the map stays linear.
///
/// In the cover route the lifted chain `c` on a cusp above a Klein bottle
/// satisfies `σ(c) = -c`, so its class is twice an anti-invariant class
/// `c/2`, whose image downstairs is reported. Above a torus cusp the two
/// lifts carry opposite chains and the lift through the positive copy of the
/// cusp's first corner is pushed down.
#[derive(Debug, Clone)]
pub struct BoundaryMap {
    tri: Triangulation,
    signs: CornerSigns,
    pub complexes: Vec<CuspComplex>,
    pub method: Method,
    /// Why the direct route was abandoned, if it was.
    pub direct_failure: Option<Error>,
    cover: Option<CoverData>,
}

#[derive(Debug, Clone)]
struct CoverData {
    cover: DoubleCover,
    up: Box<BoundaryMap>,
    /// Per base cusp: the cover cusp used and whether it double covers.
    above: Vec<(usize, bool)>,
}

impl BoundaryMap {
    pub fn new(tri: &Triangulation) -> Result<BoundaryMap> {
        tri.validate_ideal()?;
        let mut map = BoundaryMap {
            tri: tri.clone(),
            signs: corner_signs(tri),
            complexes: cusp_complexes(tri)?,
            method: Method::Direct,
            direct_failure: None,
            cover: None,
        };
        if tri.is_orientable() {
            return Ok(map);
        }
        let cover = tri.double_cover()?;
        let up = BoundaryMap::new(&cover.cover)?;
        let above = map
            .complexes
            .iter()
            .map(|c| {
                let (t, v) = c.triangles[0];
                let plus = cover.cover.link_of(2 * t, v);
                (plus, plus == cover.cover.link_of(2 * t + 1, v))
            })
            .collect();
        map.cover = Some(CoverData {
            cover,
            up: Box::new(up),
            above,
        });
        let failure = map
            .solution_lattice()
            .iter()
            .find_map(|q| boundary_chains_with(&map.tri, &map.signs, &map.complexes, q).err());
        if let Some(e) = failure {
            map.method = Method::Cover;
            map.direct_failure = Some(e);
        }
        Ok(map)
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.tri
    }

    /// Boundary chains traced directly on the cusps of the triangulation.
    pub fn direct_chains(&self, q: &QVector) -> Result<Vec<BoundaryChain>> {
        check_solution(&self.tri, q)?;
        boundary_chains_with(&self.tri, &self.signs, &self.complexes, q)
    }

    /// Per-cusp boundary cycles under the selected method.
    pub fn chains(&self, q: &QVector) -> Result<Vec<BoundaryChain>> {
        match (&self.method, &self.cover) {
            (Method::Cover, Some(data)) => self.cover_chains(data, q).map(|(_, _, down)| down),
            _ => self.direct_chains(q),
        }
    }

    /// Per-cusp homology classes of the boundary of `q`.
    pub fn classes(&self, q: &QVector) -> Result<Vec<HomologyClass>> {
        self.chains(q)?
            .iter()
            .zip(&self.complexes)
            .map(|(ch, c)| c.homology_class(ch))
            .collect()
    }

    /// The lifted solution, its classes on the cover cusps, and the
    /// resulting chains downstairs.
    fn cover_chains(&self, data: &CoverData, q: &QVector) -> Result<(QVector, Vec<HomologyClass>, Vec<BoundaryChain>)> {
        let lifted = lift_to_cover(&self.tri, &data.cover, q)?;
        let up_chains = data.up.direct_chains(&lifted)?;
        let up_classes = up_chains
            .iter()
            .zip(&data.up.complexes)
            .map(|(ch, c)| c.homology_class(ch))
            .collect::<Result<Vec<_>>>()?;

        let mut down = Vec::with_capacity(self.complexes.len());
        for (base, &(lift, double)) in self.complexes.iter().zip(&data.above) {
            let upc = &data.up.complexes[lift];
            let cycle = if double {
                let class = &up_classes[lift];
                if class.free.iter().chain(&class.torsion).any(|x| x.is_odd()) {
                    return Err(Error::NotACycle {
                        cusp: base.cusp,
                        reason: "lifted class is not divisible by 2".into(),
                    });
                }
                let two = BigInt::from(2);
                let half = HomologyClass {
                    free: class.free.iter().map(|x| x / &two).collect(),
                    torsion: class.torsion.iter().map(|x| x / &two).collect(),
                    orders: class.orders.clone(),
                };
                upc.representative(&half)
            } else {
                up_chains[lift].coefficients.clone()
            };
            let mut coefficients = vec![BigInt::zero(); base.edges.len()];
            for (x, e) in cycle.iter().zip(&upc.edges) {
                let s = e.side;
                let side = Side {
                    tet: data.cover.projection[s.tet],
                    vertex: s.vertex,
                    face: s.face,
                };
                let (be, rel) = base.side_edge(side).expect("cover cusp lies over this cusp");
                coefficients[be] += x * rel;
            }
            let chain = BoundaryChain {
                cusp: base.cusp,
                coefficients,
            };
            if !base.is_cycle(&chain.coefficients) {
                return Err(Error::NotACycle {
                    cusp: base.cusp,
                    reason: "projected chain does not close up".into(),
                });
            }
            down.push(chain);
        }
        Ok((lifted, up_classes, down))
    }

    /// Boundary data computed through the orientable double cover.
    pub fn via_cover(&self, q: &QVector) -> Result<CoverBoundary> {
        let data = self.cover.as_ref().ok_or(Error::AlreadyOrientable)?;
        let (lifted, cover_classes, down) = self.cover_chains(data, q)?;
        let projected = down
            .iter()
            .zip(&self.complexes)
            .map(|(ch, c)| c.homology_class(ch))
            .collect::<Result<Vec<_>>>()?;
        Ok(CoverBoundary {
            lifted,
            cover_classes,
            projected,
        })
    }

    /// Index of the lifted image in `⊕ H₁` of the cover cusps.
    pub fn cover_image_index(&self) -> Result<GroupIndex> {
        let data = self.cover.as_ref().ok_or(Error::AlreadyOrientable)?;
        let (free_rank, torsion) = data.up.ambient();
        let generators = self
            .solution_lattice()
            .iter()
            .map(|q| self.via_cover(q).map(|b| flatten(&b.cover_classes)))
            .collect::<Result<Vec<_>>>()?;
        Ok(subgroup_index(free_rank, &torsion, &generators))
    }

    /// Free rank and torsion orders of `⊕ H₁`, cusp by cusp.
    pub fn ambient(&self) -> (usize, Vec<BigInt>) {
        (
            self.complexes.iter().map(CuspComplex::betti).sum(),
            self.complexes.iter().flat_map(CuspComplex::torsion).collect(),
        )
    }

    /// Lattice basis of the integer Q-matching solutions.
    pub fn solution_lattice(&self) -> Vec<QVector> {
        integer_nullspace(&q_matching_system(&self.tri).matrix)
            .into_iter()
            .map(QVector)
            .collect()
    }

    /// Images of the solution lattice basis, flattened as in [`flatten`].
    pub fn image_generators(&self) -> Result<Vec<Vec<BigInt>>> {
        self.solution_lattice()
            .iter()
            .map(|q| self.classes(q).map(|cs| flatten(&cs)))
            .collect()
    }

    /// Index of `∂(integer solutions)` in `⊕ H₁(cusp; ℤ)`.
    pub fn image_index(&self) -> Result<GroupIndex> {
        let (free_rank, torsion) = self.ambient();
        Ok(subgroup_index(free_rank, &torsion, &self.image_generators()?))
    }

    /// Classes whose vanishing detects the kernel of `∂`: the per-cusp
    /// classes for [`Method::Direct`], the classes on the cover cusps for
    /// [`Method::Cover`]. A Klein bottle class downstairs only records the
    /// lifted class modulo 2.
    pub fn faithful_classes(&self, q: &QVector) -> Result<Vec<HomologyClass>> {
        match self.method {
            Method::Direct => self.classes(q),
            Method::Cover => self.via_cover(q).map(|b| b.cover_classes),
        }
    }

    /// True when `q` lies in the kernel of `∂`.
    pub fn vanishes(&self, q: &QVector) -> Result<bool> {
        Ok(self.faithful_classes(q)?.iter().all(HomologyClass::is_zero))
    }

    /// Rank of the rational span of `∂` over all solutions.
    pub fn image_rank(&self) -> Result<usize> {
        let rows = self
            .solution_lattice()
            .iter()
            .map(|q| self.faithful_classes(q).map(|cs| cs.into_iter().flat_map(|c| c.free).collect()))
            .collect::<Result<Vec<Vec<BigInt>>>>()?;
        let width = rows.first().map_or(0, Vec::len);
        Ok(rank(&IntegerMatrix::from_rows(width, rows)))
    }

    /// Dimension of the kernel of `∂` over the rationals.
    pub fn kernel_dimension(&self) -> Result<usize> {
        Ok(self.solution_lattice().len() - self.image_rank()?)
    }
}

/// All free coordinates (cusp by cusp), then all torsion residues.
pub fn flatten(classes: &[HomologyClass]) -> Vec<BigInt> {
    classes
        .iter()
        .flat_map(|c| c.free.iter().cloned())
        .chain(classes.iter().flat_map(|c| c.torsion.iter().cloned()))
        .collect()
}

/// Per-cusp homology classes of the boundary of a Q-matching solution.
pub fn boundary_map(tri: &Triangulation, q: &QVector) -> Result<Vec<HomologyClass>> {
    BoundaryMap::new(tri)?.classes(q)
}

pub fn image_index(tri: &Triangulation) -> Result<GroupIndex> {
    BoundaryMap::new(tri)?.image_index()
}

/// Boundary data of a solution computed on the orientable double cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverBoundary {
    pub lifted: QVector,
    /// Classes on the cusps of the cover.
    pub cover_classes: Vec<HomologyClass>,
    /// Classes on the cusps of the base, as described at [`BoundaryMap`].
    pub projected: Vec<HomologyClass>,
}

/// Boundary of `q` computed through the orientable double cover.
pub fn boundary_map_via_cover(tri: &Triangulation, q: &QVector) -> Result<CoverBoundary> {
    BoundaryMap::new(tri)?.via_cover(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn complexes_have_expected_homology() {
        let c = cusp_complex(&builtin::figure_eight(), 0).unwrap();
        assert_eq!((c.vertices.len(), c.edges.len(), c.triangles.len()), (4, 12, 8));
        assert!(c.d1.mul(&c.d2).is_zero());
        assert_eq!((c.betti(), c.torsion()), (2, vec![]));

        let g = cusp_complex(&builtin::gieseking(), 0).unwrap();
        assert_eq!((g.vertices.len(), g.edges.len(), g.triangles.len()), (2, 6, 4));
        assert!(g.d1.mul(&g.d2).is_zero());
        assert_eq!(g.euler_characteristic(), 0);
        assert_eq!((g.betti(), g.torsion()), (1, vec![BigInt::from(2)]));
        assert!(cusp_complex(&builtin::gieseking(), 1).is_err());
    }

    #[test]
    fn zero_solution_has_zero_boundary() {
        let tri = builtin::figure_eight();
        assert!(boundary_map(&tri, &QVector::zero(2)).unwrap().iter().all(HomologyClass::is_zero));
    }

    #[test]
    fn non_solution_is_rejected() {
        let tri = builtin::figure_eight();
        assert!(matches!(
            boundary_map(&tri, &QVector::from_i64(&[1, 0, 0, 0, 0, 0])),
            Err(Error::NotASolution { .. })
        ));
    }

    #[test]
    fn class_arithmetic() {
        let a = HomologyClass {
            free: vec![2.into()],
            torsion: vec![1.into()],
            orders: vec![2.into()],
        };
        assert_eq!(
            a.add(&a),
            HomologyClass {
                free: vec![4.into()],
                torsion: vec![0.into()],
                orders: vec![2.into()]
            }
        );
        assert_eq!(a.negate().torsion, vec![BigInt::from(1)]);
        assert_eq!(a.free_gcd(), BigInt::from(2));
        assert_eq!(a.to_string(), "(2, 1 mod 2)");
    }
}
