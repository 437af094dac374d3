//! Ideal triangulations given by face-gluing tables.
//!
//! Face `f` of a tetrahedron is the face opposite vertex `f`. A gluing of
//! face `f` of tetrahedron `t` is a target tetrahedron `t'` together with a
//! permutation `p` of vertex labels; the face of `t'` that receives it is
//! `p(f)`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Perm4;

/// Vertex pairs of the six edge slots of a tetrahedron, in lexicographic order.
pub const EDGE_VERTICES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Edge slot index of the unordered vertex pair `{a, b}`.
pub fn edge_slot(a: usize, b: usize) -> usize {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    match (lo, hi) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("invalid edge {{{a}, {b}}}"),
    }
}

/// The edge slot opposite `slot` (sharing no vertex with it).
pub fn opposite_slot(slot: usize) -> usize {
    5 - slot
}

/// The quadrilateral type separating edge `slot` from its opposite edge.
///
/// Quad 0 separates `{01|23}`, quad 1 `{02|13}`, quad 2 `{03|12}`.
pub fn quad_of_slot(slot: usize) -> usize {
    slot.min(5 - slot)
}

/// The two vertices of a tetrahedron other than `a` and `b`, in increasing order.
pub fn complement_pair(a: usize, b: usize) -> [usize; 2] {
    let mut out = [0; 2];
    let mut i = 0;
    for v in 0..4 {
        if v != a && v != b {
            out[i] = v;
            i += 1;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub tet: usize,
    pub perm: Perm4,
}

/// One tetrahedron edge slot belonging to an edge class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeIncidence {
    pub tet: usize,
    pub slot: usize,
    /// True when the class direction runs from the higher to the lower
    /// vertex label of the slot.
    pub reversed: bool,
    /// Orientation of this tetrahedron transported around the edge from the
    /// first incidence (which is `+1`).
    pub orientation: i32,
}

/// An edge of the triangulation: an orbit of tetrahedron edge slots, listed
/// in the cyclic order met when walking around the edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClass {
    pub index: usize,
    pub incidences: Vec<EdgeIncidence>,
}

impl EdgeClass {
    pub fn degree(&self) -> usize {
        self.incidences.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuspKind {
    Torus,
    KleinBottle,
}

/// The link of an ideal vertex, triangulated by one triangle per
/// tetrahedron corner `(tet, vertex)` in the orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLink {
    pub index: usize,
    pub triangles: Vec<(usize, usize)>,
    pub vertices: usize,
    pub euler: i64,
    pub orientable: bool,
}

impl VertexLink {
    pub fn edges(&self) -> usize {
        self.triangles.len() * 3 / 2
    }
}

/// A vertex link that passed the cusp check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspLink {
    pub index: usize,
    pub triangles: Vec<(usize, usize)>,
    pub kind: CuspKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    gluings: Vec<[Gluing; 4]>,
    edges: Vec<EdgeClass>,
    /// `(edge class, position in its incidence list)` for each slot.
    edge_slots: Vec<[(usize, usize); 6]>,
    links: Vec<VertexLink>,
    vertex_link: Vec<[usize; 4]>,
}

/// The orientable double cover of a non-orientable triangulation.
///
/// Cover tetrahedron `2t` is the positively oriented lift of `t` and `2t + 1`
/// the negatively oriented one; both keep the vertex labels of `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCover {
    pub cover: Triangulation,
    /// The deck transformation on cover tetrahedra.
    pub involution: Vec<usize>,
    /// Base tetrahedron under each cover tetrahedron.
    pub projection: Vec<usize>,
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller index as root so classes are numbered by least member
        if ra < rb {
            self.0[rb] = ra;
        } else if rb < ra {
            self.0[ra] = rb;
        }
    }
}

impl Triangulation {
    /// Validates a gluing table. `None` marks an unglued face, which is rejected.
    pub fn from_gluings(table: Vec<[Option<Gluing>; 4]>) -> Result<Self> {
        let k = table.len();
        if k == 0 {
            return Err(Error::Empty);
        }
        let mut gluings = Vec::with_capacity(k);
        for (t, row) in table.iter().enumerate() {
            let mut out = [Gluing {
                tet: 0,
                perm: Perm4::IDENTITY,
            }; 4];
            for f in 0..4 {
                let g = row[f].ok_or(Error::UngluedFace { tet: t, face: f })?;
                if g.tet >= k {
                    return Err(Error::TargetOutOfRange {
                        tet: t,
                        face: f,
                        target: g.tet,
                    });
                }
                out[f] = g;
            }
            gluings.push(out);
        }
        for t in 0..k {
            for f in 0..4 {
                let g = gluings[t][f];
                let f2 = g.perm.apply(f);
                if g.tet == t && f2 == f {
                    return Err(Error::SelfGluedFace { tet: t, face: f });
                }
                let back = gluings[g.tet][f2];
                if back.tet != t || back.perm != g.perm.inverse() {
                    return Err(Error::NonInvolutive { tet: t, face: f });
                }
            }
        }
        let (edges, edge_slots) = walk_edges(&gluings)?;
        let (links, vertex_link) = vertex_links(&gluings);
        Ok(Triangulation {
            gluings,
            edges,
            edge_slots,
            links,
            vertex_link,
        })
    }

    /// Parses the line-oriented triangulation format:
    ///
    /// ```text
    /// tetrahedra: 1
    /// 0: 0 1203 | 0 2013 | 0 0231 | 0 0312   % comment
    /// ```
    ///
    /// A `-` entry marks an unglued face (which validation rejects).
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<usize> = None;
        let mut rows: Vec<Option<[Option<Gluing>; 4]>> = Vec::new();
        let syntax = |line: usize, message: String| Error::Syntax { line, message };

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('%').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| syntax(line_no, format!("expected `<key>: ...`, found `{line}`")))?;
            let key = key.trim();
            match header {
                None => {
                    if key != "tetrahedra" {
                        return Err(syntax(line_no, "first line must be `tetrahedra: <k>`".into()));
                    }
                    let k: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| syntax(line_no, format!("invalid tetrahedron count `{}`", rest.trim())))?;
                    if k == 0 {
                        return Err(syntax(line_no, "tetrahedron count must be positive".into()));
                    }
                    header = Some(k);
                    rows = vec![None; k];
                }
                Some(k) => {
                    let t: usize = key
                        .parse()
                        .map_err(|_| syntax(line_no, format!("invalid tetrahedron index `{key}`")))?;
                    if t >= k {
                        return Err(syntax(line_no, format!("tetrahedron index {t} out of range (< {k})")));
                    }
                    if rows[t].is_some() {
                        return Err(syntax(line_no, format!("tetrahedron {t} listed twice")));
                    }
                    let entries: Vec<&str> = rest.split('|').collect();
                    if entries.len() != 4 {
                        return Err(syntax(line_no, format!("expected 4 face entries, found {}", entries.len())));
                    }
                    let mut row = [None; 4];
                    for (f, entry) in entries.iter().enumerate() {
                        let tokens: Vec<&str> = entry.split_whitespace().collect();
                        row[f] = match tokens.as_slice() {
                            ["-"] => None,
                            [target, perm] => {
                                let tet = target
                                    .parse()
                                    .map_err(|_| syntax(line_no, format!("face {f}: invalid target tetrahedron `{target}`")))?;
                                let perm =
                                    Perm4::parse(perm).ok_or_else(|| syntax(line_no, format!("face {f}: invalid permutation `{perm}`")))?;
                                Some(Gluing { tet, perm })
                            }
                            _ => {
                                return Err(syntax(
                                    line_no,
                                    format!("face {f}: expected `<tet> <perm>` or `-`, found `{}`", entry.trim()),
                                ))
                            }
                        };
                    }
                    rows[t] = Some(row);
                }
            }
        }
        let k = header.ok_or_else(|| syntax(1, "missing `tetrahedra: <k>` header".into()))?;
        let last_line = text.lines().count().max(1);
        let mut table = Vec::with_capacity(k);
        for (t, row) in rows.into_iter().enumerate() {
            table.push(row.ok_or_else(|| syntax(last_line, format!("missing gluings for tetrahedron {t}")))?);
        }
        Triangulation::from_gluings(table)
    }

    /// Serialises into the format accepted by [`Triangulation::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("tetrahedra: {}\n", self.size());
        for (t, row) in self.gluings.iter().enumerate() {
            let entries: Vec<String> = row.iter().map(|g| format!("{} {}", g.tet, g.perm)).collect();
            let _ = writeln!(s, "{t}: {}", entries.join(" | "));
        }
        s
    }

    /// Number of tetrahedra `k`.
    pub fn size(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluing(&self, tet: usize, face: usize) -> Gluing {
        self.gluings[tet][face]
    }

    pub fn edge_classes(&self) -> &[EdgeClass] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edge class containing edge slot `slot` of tetrahedron `tet`.
    pub fn edge_of(&self, tet: usize, slot: usize) -> usize {
        self.edge_slots[tet][slot].0
    }

    /// The incidence record of a tetrahedron edge slot.
    pub fn incidence_of(&self, tet: usize, slot: usize) -> &EdgeIncidence {
        let (e, pos) = self.edge_slots[tet][slot];
        &self.edges[e].incidences[pos]
    }

    /// All vertex links, whether or not they are cusps.
    pub fn vertex_links(&self) -> &[VertexLink] {
        &self.links
    }

    /// Index of the vertex link containing corner `vertex` of `tet`.
    pub fn link_of(&self, tet: usize, vertex: usize) -> usize {
        self.vertex_link[tet][vertex]
    }

    /// The cusps, failing if some vertex link is not a torus or Klein bottle.
    pub fn cusps(&self) -> Result<Vec<CuspLink>> {
        let closed_one_vertex = self.links.len() == 1 && self.num_edges() == self.size() + 1;
        self.links
            .iter()
            .map(|l| {
                if l.euler != 0 {
                    return Err(Error::NonCuspedLink {
                        cusp: l.index,
                        euler: l.euler,
                        closed_one_vertex,
                    });
                }
                Ok(CuspLink {
                    index: l.index,
                    triangles: l.triangles.clone(),
                    kind: if l.orientable { CuspKind::Torus } else { CuspKind::KleinBottle },
                })
            })
            .collect()
    }

    /// Checks that this is an ideal triangulation of the supported kind
    /// (every vertex link a torus or Klein bottle, hence `e = k`) and
    /// returns its cusps.
    pub fn validate_ideal(&self) -> Result<Vec<CuspLink>> {
        let cusps = self.cusps()?;
        if self.num_edges() != self.size() {
            return Err(Error::EdgeCountMismatch {
                tetrahedra: self.size(),
                edges: self.num_edges(),
            });
        }
        Ok(cusps)
    }

    /// Connected components as sorted lists of tetrahedra.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let k = self.size();
        let mut uf = UnionFind::new(k);
        for t in 0..k {
            for g in &self.gluings[t] {
                uf.union(t, g.tet);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_group = vec![usize::MAX; k];
        for t in 0..k {
            let r = uf.find(t);
            if root_group[r] == usize::MAX {
                root_group[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[root_group[r]].push(t);
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// A consistent orientation `±1` per tetrahedron, or `None` when the
    /// triangulation is non-orientable. The least tetrahedron of each
    /// component gets `+1`.
    ///
    /// Tetrahedra `t`, `t'` glued by `p` are consistently oriented exactly
    /// when `o(t') = -sign(p) o(t)`.
    pub fn orientation(&self) -> Option<Vec<i32>> {
        let k = self.size();
        let mut orient = vec![0i32; k];
        for start in 0..k {
            if orient[start] != 0 {
                continue;
            }
            orient[start] = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(t) = queue.pop_front() {
                for g in &self.gluings[t] {
                    let want = -g.perm.sign() * orient[t];
                    if orient[g.tet] == 0 {
                        orient[g.tet] = want;
                        queue.push_back(g.tet);
                    } else if orient[g.tet] != want {
                        return None;
                    }
                }
            }
        }
        Some(orient)
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation().is_some()
    }

    /// Lifts every tetrahedron to a positively and a negatively oriented
    /// copy. Works for any input; the result is connected exactly when the
    /// input is connected and non-orientable.
    pub fn orientation_cover(&self) -> DoubleCover {
        let k = self.size();
        let lift = |t: usize, s: i32| 2 * t + usize::from(s < 0);
        let mut table = vec![[None; 4]; 2 * k];
        for t in 0..k {
            for s in [1, -1] {
                for f in 0..4 {
                    let g = self.gluings[t][f];
                    let target_sign = -g.perm.sign() * s;
                    table[lift(t, s)][f] = Some(Gluing {
                        tet: lift(g.tet, target_sign),
                        perm: g.perm,
                    });
                }
            }
        }
        let cover = Triangulation::from_gluings(table).expect("lift of a valid triangulation is valid");
        DoubleCover {
            cover,
            involution: (0..2 * k).map(|c| c ^ 1).collect(),
            projection: (0..2 * k).map(|c| c / 2).collect(),
        }
    }

    /// The orientable double cover of a non-orientable triangulation.
    pub fn double_cover(&self) -> Result<DoubleCover> {
        if self.is_orientable() {
            return Err(Error::AlreadyOrientable);
        }
        Ok(self.orientation_cover())
    }

    /// Renumbers tetrahedra and relabels their vertices: tetrahedron `t`
    /// becomes `tet_map[t]` with vertex `v` becoming `vertex_maps[t](v)`.
    pub fn relabeled(&self, tet_map: &[usize], vertex_maps: &[Perm4]) -> Result<Triangulation> {
        let k = self.size();
        if tet_map.len() != k || vertex_maps.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                found: tet_map.len().min(vertex_maps.len()),
            });
        }
        let mut table = vec![[None; 4]; k];
        for t in 0..k {
            for f in 0..4 {
                let g = self.gluings[t][f];
                let perm = vertex_maps[g.tet].compose(g.perm).compose(vertex_maps[t].inverse());
                table[tet_map[t]][vertex_maps[t].apply(f)] = Some(Gluing { tet: tet_map[g.tet], perm });
            }
        }
        Triangulation::from_gluings(table)
    }

    /// Sub-triangulation on one connected component, renumbered in order.
    fn component(&self, tets: &[usize]) -> Triangulation {
        let mut index = vec![usize::MAX; self.size()];
        for (i, &t) in tets.iter().enumerate() {
            index[t] = i;
        }
        let table = tets
            .iter()
            .map(|&t| {
                let mut row = [None; 4];
                for f in 0..4 {
                    let g = self.gluings[t][f];
                    row[f] = Some(Gluing {
                        tet: index[g.tet],
                        perm: g.perm,
                    });
                }
                row
            })
            .collect();
        Triangulation::from_gluings(table).expect("component of a valid triangulation is valid")
    }

    /// Combinatorial isomorphism: a bijection of tetrahedra with vertex
    /// relabellings carrying every gluing of `self` onto a gluing of `other`.
    pub fn isomorphic(&self, other: &Triangulation) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mine = self.components();
        let theirs = other.components();
        if mine.len() != theirs.len() {
            return false;
        }
        if mine.len() == 1 {
            return connected_isomorphism(self, other).is_some();
        }
        let theirs: Vec<Triangulation> = theirs.iter().map(|c| other.component(c)).collect();
        let mut used = vec![false; theirs.len()];
        'outer: for comp in &mine {
            let a = self.component(comp);
            for (j, b) in theirs.iter().enumerate() {
                if !used[j] && a.size() == b.size() && connected_isomorphism(&a, b).is_some() {
                    used[j] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    /// An explicit isomorphism between connected triangulations, as
    /// `(image tetrahedron, vertex map)` per tetrahedron of `self`.
    pub fn find_isomorphism(&self, other: &Triangulation) -> Option<Vec<(usize, Perm4)>> {
        if self.size() != other.size() || !self.is_connected() || !other.is_connected() {
            return None;
        }
        connected_isomorphism(self, other)
    }

    /// All combinatorial automorphisms of a connected triangulation, the
    /// identity first.
    pub fn automorphisms(&self) -> Vec<Vec<(usize, Perm4)>> {
        if !self.is_connected() {
            return Vec::new();
        }
        connected_isomorphisms(self, self, false)
    }
}

fn connected_isomorphism(a: &Triangulation, b: &Triangulation) -> Option<Vec<(usize, Perm4)>> {
    connected_isomorphisms(a, b, true).into_iter().next()
}

/// Every isomorphism between connected triangulations, each determined by
/// the image of tetrahedron 0; stops after the first if `first_only`.
fn connected_isomorphisms(a: &Triangulation, b: &Triangulation, first_only: bool) -> Vec<Vec<(usize, Perm4)>> {
    let k = a.size();
    let mut found = Vec::new();
    for start_image in 0..k {
        'perm: for start_perm in Perm4::all() {
            let mut map: Vec<Option<(usize, Perm4)>> = vec![None; k];
            let mut used = vec![false; k];
            map[0] = Some((start_image, start_perm));
            used[start_image] = true;
            let mut queue = VecDeque::from([0usize]);
            while let Some(t) = queue.pop_front() {
                let (u, pi) = map[t].expect("queued tetrahedra are mapped");
                for f in 0..4 {
                    let ga = a.gluing(t, f);
                    let gb = b.gluing(u, pi.apply(f));
                    let want = gb.perm.compose(pi).compose(ga.perm.inverse());
                    match map[ga.tet] {
                        Some((u2, pi2)) => {
                            if u2 != gb.tet || pi2 != want {
                                continue 'perm;
                            }
                        }
                        None => {
                            if used[gb.tet] {
                                continue 'perm;
                            }
                            used[gb.tet] = true;
                            map[ga.tet] = Some((gb.tet, want));
                            queue.push_back(ga.tet);
                        }
                    }
                }
            }
            if map.iter().all(Option::is_some) {
                found.push(map.into_iter().map(Option::unwrap).collect());
                if first_only {
                    return found;
                }
            }
        }
    }
    found
}

type EdgeWalk = (Vec<EdgeClass>, Vec<[(usize, usize); 6]>);

/// Walks around every edge. Starting from the least unvisited slot
/// `{a, b}` with remaining vertices `c < d`, the walk leaves through face `d`;
/// arriving through face `p(d)` it next leaves through face `p(c)`.
fn walk_edges(gluings: &[[Gluing; 4]]) -> Result<EdgeWalk> {
    let k = gluings.len();
    let mut slots = vec![[(usize::MAX, 0usize); 6]; k];
    let mut edges = Vec::new();
    for t0 in 0..k {
        for slot0 in 0..6 {
            if slots[t0][slot0].0 != usize::MAX {
                continue;
            }
            let index = edges.len();
            let [a0, b0] = EDGE_VERTICES[slot0];
            let [c0, d0] = complement_pair(a0, b0);
            let start = (t0, a0, b0, c0, d0);
            let mut state = start;
            let mut orientation = 1;
            let mut incidences = Vec::new();
            loop {
                let (t, a, b, c, d) = state;
                let slot = edge_slot(a, b);
                if slots[t][slot].0 != usize::MAX {
                    return Err(Error::ReversedEdge { tet: t, slot });
                }
                slots[t][slot] = (index, incidences.len());
                incidences.push(EdgeIncidence {
                    tet: t,
                    slot,
                    reversed: a > b,
                    orientation,
                });
                let g = gluings[t][d];
                let p = g.perm;
                orientation *= -p.sign();
                state = (g.tet, p.apply(a), p.apply(b), p.apply(d), p.apply(c));
                if state == start {
                    break;
                }
            }
            edges.push(EdgeClass { index, incidences });
        }
    }
    Ok((edges, slots))
}

/// Link triangles `(t, v)` are glued across face `f != v` to
/// `(t', p(v))`; link corners `(t, v, w)` across faces `f ∉ {v, w}` to
/// `(t', p(v), p(w))`.
fn vertex_links(gluings: &[[Gluing; 4]]) -> (Vec<VertexLink>, Vec<[usize; 4]>) {
    let k = gluings.len();
    let tri = |t: usize, v: usize| 4 * t + v;
    let corner = |t: usize, v: usize, w: usize| 16 * t + 4 * v + w;

    let mut tri_uf = UnionFind::new(4 * k);
    let mut corner_uf = UnionFind::new(16 * k);
    for t in 0..k {
        for f in 0..4 {
            let g = gluings[t][f];
            for v in (0..4).filter(|&v| v != f) {
                tri_uf.union(tri(t, v), tri(g.tet, g.perm.apply(v)));
                for w in (0..4).filter(|&w| w != f && w != v) {
                    corner_uf.union(corner(t, v, w), corner(g.tet, g.perm.apply(v), g.perm.apply(w)));
                }
            }
        }
    }

    let mut vertex_link = vec![[usize::MAX; 4]; k];
    let mut links: Vec<VertexLink> = Vec::new();
    let mut root_index = vec![usize::MAX; 4 * k];
    for t in 0..k {
        for v in 0..4 {
            let r = tri_uf.find(tri(t, v));
            if root_index[r] == usize::MAX {
                root_index[r] = links.len();
                links.push(VertexLink {
                    index: links.len(),
                    triangles: Vec::new(),
                    vertices: 0,
                    euler: 0,
                    orientable: true,
                });
            }
            let li = root_index[r];
            vertex_link[t][v] = li;
            links[li].triangles.push((t, v));
        }
    }

    let mut seen_corner = vec![false; 16 * k];
    for t in 0..k {
        for v in 0..4 {
            for w in (0..4).filter(|&w| w != v) {
                let r = corner_uf.find(corner(t, v, w));
                if !seen_corner[r] {
                    seen_corner[r] = true;
                    links[vertex_link[t][v]].vertices += 1;
                }
            }
        }
    }

    // Link triangles use the same orientation rule as tetrahedra.
    let mut orient = vec![0i32; 4 * k];
    for link in &mut links {
        let (t0, v0) = link.triangles[0];
        orient[tri(t0, v0)] = 1;
        let mut queue = VecDeque::from([(t0, v0)]);
        while let Some((t, v)) = queue.pop_front() {
            for f in (0..4).filter(|&f| f != v) {
                let g = gluings[t][f];
                let next = (g.tet, g.perm.apply(v));
                let want = -g.perm.sign() * orient[tri(t, v)];
                let have = &mut orient[tri(next.0, next.1)];
                if *have == 0 {
                    *have = want;
                    queue.push_back(next);
                } else if *have != want {
                    link.orientable = false;
                }
            }
        }
        let f = link.triangles.len() as i64;
        link.euler = link.vertices as i64 - 3 * f / 2 + f;
    }
    (links, vertex_link)
}
