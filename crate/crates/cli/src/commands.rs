//! One output document per subcommand. Integers are decimal strings.

use num_bigint::BigInt;
use serde_json::{json, Value};
use spun_normal::boundary::{BoundaryMap, HomologyClass, Method};
use spun_normal::hilbert::{fundamental_solutions, HilbertOptions};
use spun_normal::normal::{canonical_basis, compatibility_system, pairing_matrix};
use spun_normal::qtheory::{compact_dimension, dim_w, is_compact_class, q_matching_system, QVector};
use spun_normal::triangulation::CuspKind;
use spun_normal::{Error, Triangulation};

use crate::CliError;

type Input = (String, Triangulation);

const NORMAL_LAYOUT: &str = "per tetrahedron: triangles at vertices 0,1,2,3, then quads 01|23, 02|13, 03|12";
const QUAD_LAYOUT: &str = "per tetrahedron: quads 01|23, 02|13, 03|12";

fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn vector<T: std::fmt::Display>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(s).collect())
}

fn matrix<T: std::fmt::Display>(rows: &[Vec<T>]) -> Value {
    Value::Array(rows.iter().map(|r| vector(r)).collect())
}

fn kind(k: CuspKind) -> &'static str {
    match k {
        CuspKind::Torus => "torus",
        CuspKind::KleinBottle => "klein bottle",
    }
}

fn method(m: Method) -> &'static str {
    match m {
        Method::Direct => "direct",
        Method::Cover => "double cover",
    }
}

fn class(c: &HomologyClass) -> Value {
    json!({
        "class": s(c),
        "free": vector(&c.free),
        "torsion": vector(&c.torsion),
        "orders": vector(&c.orders),
        "free_gcd": s(c.free_gcd()),
        "zero": c.is_zero(),
    })
}

pub fn info((source, tri): Input) -> Result<Value, CliError> {
    let cusps = tri.validate_ideal()?;
    let degrees: Vec<usize> = tri.edge_classes().iter().map(|e| e.degree()).collect();
    Ok(json!({
        "source": source,
        "tetrahedra": s(tri.size()),
        "edges": s(tri.num_edges()),
        "edge_degrees": vector(&degrees),
        "orientable": tri.is_orientable(),
        "cusps": cusps.iter().map(|c| json!({
            "index": s(c.index),
            "kind": kind(c.kind),
            "triangles": s(c.triangles.len()),
        })).collect::<Vec<_>>(),
        "dim_v": s(compatibility_system(&tri).nullity()),
        "dim_w": s(dim_w(&tri)?),
        "dim_compact": s(compact_dimension(&tri)?),
    }))
}

pub fn basis((source, tri): Input) -> Result<Value, CliError> {
    let basis = canonical_basis(&tri)?;
    let pairing = pairing_matrix(&tri, &basis)?;
    let minus_two = pairing.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, x)| *x == BigInt::from(if i == j { -2 } else { 0 }).into())
    });
    let rows = |vs: &[spun_normal::normal::NormalVector]| vs.iter().map(|v| v.0.clone()).collect::<Vec<_>>();
    Ok(json!({
        "source": source,
        "layout": NORMAL_LAYOUT,
        "tetrahedral": matrix(&rows(&basis.tetrahedral)),
        "edge": matrix(&rows(&basis.edge)),
        "pairing": matrix(&pairing),
        "pairing_is_minus_two_identity": minus_two,
    }))
}

pub fn qmatch((source, tri): Input) -> Result<Value, CliError> {
    let system = q_matching_system(&tri);
    Ok(json!({
        "source": source,
        "layout": QUAD_LAYOUT,
        "matrix": matrix(&system.matrix.to_rows()),
        "rank": s(system.rank()),
        "nullity": s(system.nullity()),
        "dim_w": s(dim_w(&tri)?),
        "rows_sum_to_zero": system.rows_sum_to_zero(),
    }))
}

pub fn enumerate((source, tri): Input) -> Result<Value, CliError> {
    let system = q_matching_system(&tri);
    let set = fundamental_solutions(&system.matrix, HilbertOptions::default())?;
    let map = BoundaryMap::new(&tri)?;
    let solutions = set
        .solutions
        .iter()
        .map(|x| {
            let q = QVector(x.clone());
            let classes = map.classes(&q)?;
            Ok(json!({
                "vector": vector(x),
                "compact": is_compact_class(&tri, &q)?,
                "boundary": classes.iter().map(s).collect::<Vec<_>>(),
            }))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(json!({
        "source": source,
        "layout": QUAD_LAYOUT,
        "method": method(map.method),
        "count": s(set.len()),
        "solutions": solutions,
    }))
}

pub struct BoundaryRequest<'a> {
    pub vector: Option<&'a str>,
    pub index: bool,
    pub cusp: Option<usize>,
}

fn parse_vector(text: &str) -> Result<QVector, CliError> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<BigInt>()
                .map_err(|_| CliError::Usage(format!("--vector: {:?} is not an integer", p.trim())))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(QVector)
}

pub fn boundary((source, tri): Input, request: &BoundaryRequest) -> Result<Value, CliError> {
    let map = BoundaryMap::new(&tri)?;
    let cusps: Vec<usize> = match request.cusp {
        Some(c) if c >= map.complexes.len() => {
            return Err(Error::IndexOutOfRange {
                what: "cusp",
                index: c,
                bound: map.complexes.len(),
            }
            .into())
        }
        Some(c) => vec![c],
        None => (0..map.complexes.len()).collect(),
    };
    let mut doc = json!({
        "source": source,
        "method": method(map.method),
    });
    let out = doc.as_object_mut().expect("object");

    if let Some(text) = request.vector {
        let q = parse_vector(text)?;
        if q.0.len() != 3 * tri.size() {
            return Err(Error::LengthMismatch {
                expected: 3 * tri.size(),
                found: q.0.len(),
            }
            .into());
        }
        q_matching_system(&tri).check(&q)?;
        let classes = map.classes(&q)?;
        let cover = match map.method {
            Method::Cover => Some(map.via_cover(&q)?),
            Method::Direct => None,
        };
        let per_cusp: Vec<Value> = cusps
            .iter()
            .map(|&c| {
                let mut entry = json!({ "cusp": s(c), "kind": kind(map.complexes[c].kind) });
                let obj = entry.as_object_mut().expect("object");
                obj.extend(class(&classes[c]).as_object().expect("object").clone());
                entry
            })
            .collect();
        out.insert("vector".into(), vector(&q.0));
        out.insert("cusps".into(), Value::Array(per_cusp));
        if let Some(cover) = cover {
            out.insert("cover_classes".into(), Value::Array(cover.cover_classes.iter().map(s).collect()));
        }
        out.insert("compact".into(), Value::Bool(is_compact_class(&tri, &q)?));
        out.insert("in_kernel".into(), Value::Bool(map.vanishes(&q)?));
    }
    if request.index {
        let (free_rank, torsion) = map.ambient();
        out.insert("ambient_rank".into(), s(free_rank));
        out.insert("ambient_torsion".into(), vector(&torsion));
        out.insert("image_index".into(), s(map.image_index()?));
        if map.method == Method::Cover {
            out.insert("cover_image_index".into(), s(map.cover_image_index()?));
        }
        out.insert("kernel_dimension".into(), s(map.kernel_dimension()?));
    }
    Ok(doc)
}
