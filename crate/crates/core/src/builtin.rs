//! Built-in triangulations.

use crate::triangulation::Triangulation;

pub const FIGURE_EIGHT: &str = include_str!("../data/figure8.tri");
pub const GIESEKING: &str = include_str!("../data/gieseking.tri");

/// One tetrahedron with faces 0,1 and 2,3 folded together; its vertex links
/// are spheres, so it is not an ideal triangulation.
pub const ONE_TETRAHEDRON_SPHERE: &str = "tetrahedra: 1\n0: 0 1023 | 0 1023 | 0 0132 | 0 0132\n";

pub fn figure_eight() -> Triangulation {
    Triangulation::parse(FIGURE_EIGHT).expect("built-in figure-8 table is valid")
}

pub fn gieseking() -> Triangulation {
    Triangulation::parse(GIESEKING).expect("built-in Gieseking table is valid")
}

/// Looks up a built-in triangulation by name (`figure8` or `gieseking`).
pub fn by_name(name: &str) -> Option<Triangulation> {
    match name {
        "figure8" | "figure-8" | "figure_eight" => Some(figure_eight()),
        "gieseking" => Some(gieseking()),
        _ => None,
    }
}

pub const NAMES: [&str; 2] = ["figure8", "gieseking"];
