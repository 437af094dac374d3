use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad grouping of errors, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Malformed or unsupported input.
    Input,
    /// An internal mathematical consistency check failed.
    Assertion,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("gluing of tetrahedron {tet} face {face} is not involutive")]
    NonInvolutive { tet: usize, face: usize },

    #[error("face {face} of tetrahedron {tet} is glued to itself")]
    SelfGluedFace { tet: usize, face: usize },

    #[error("face {face} of tetrahedron {tet} is not glued (boundary faces are not supported)")]
    UngluedFace { tet: usize, face: usize },

    #[error("gluing of tetrahedron {tet} face {face} targets tetrahedron {target}, which does not exist")]
    TargetOutOfRange { tet: usize, face: usize, target: usize },

    #[error("triangulation has no tetrahedra")]
    Empty,

    #[error("edge {slot} of tetrahedron {tet} is identified with itself in reverse")]
    ReversedEdge { tet: usize, slot: usize },

    #[error(
        "vertex link {cusp} has Euler characteristic {euler}, expected 0 (torus or Klein bottle){}",
        if *closed_one_vertex { "; this is a closed one-vertex triangulation, which is not supported" } else { "" }
    )]
    NonCuspedLink { cusp: usize, euler: i64, closed_one_vertex: bool },

    #[error("ideal triangulation has {tetrahedra} tetrahedra but {edges} edges")]
    EdgeCountMismatch { tetrahedra: usize, edges: usize },

    #[error("triangulation is already orientable")]
    AlreadyOrientable,

    #[error("{what} index {index} out of range (< {bound})")]
    IndexOutOfRange { what: &'static str, index: usize, bound: usize },

    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("canonical basis defect: {vectors} vectors of rank {independent} (all solutions: {solutions}) for a solution space of dimension {nullity}")]
    BasisDefect {
        vectors: usize,
        independent: usize,
        solutions: bool,
        nullity: usize,
    },

    #[error("quadrilateral solution space has dimension {computed}, expected {expected}")]
    DimensionMismatch { computed: usize, expected: usize },

    #[error("vector violates matching equation {equation}")]
    NotASolution { equation: usize },

    #[error("boundary chain on cusp {cusp} is not a cycle: {reason}")]
    NotACycle { cusp: usize, reason: String },

    #[error("system has {columns} columns, above the enumeration cap of {cap}")]
    ScaleLimit { columns: usize, cap: usize },
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::BasisDefect { .. } | Error::DimensionMismatch { .. } | Error::NotACycle { .. } => ErrorCategory::Assertion,
            _ => ErrorCategory::Input,
        }
    }
}
