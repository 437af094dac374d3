use proptest::prelude::*;

use spun_normal::boundary::BoundaryMap;
use spun_normal::builtin;
use spun_normal::hilbert::{fundamental_solutions, HilbertOptions};
use spun_normal::qtheory::{dim_w, q_matching_system};
use spun_normal::{Error, Perm4, Triangulation};

fn relabeling(k: usize) -> impl Strategy<Value = (Vec<usize>, Vec<Perm4>)> {
    let perms = Perm4::all();
    (
        Just((0..k).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(prop::sample::select(perms), k),
    )
}

fn degrees(tri: &Triangulation) -> Vec<usize> {
    let mut d: Vec<usize> = tri.edge_classes().iter().map(|e| e.degree()).collect();
    d.sort();
    d
}

#[test]
fn text_round_trip() {
    for name in builtin::NAMES {
        let tri = builtin::by_name(name).unwrap();
        assert_eq!(Triangulation::parse(&tri.to_text()).unwrap(), tri);
    }
}

#[test]
fn malformed_input_is_rejected() {
    assert!(matches!(
        Triangulation::parse("tetrahedra: 1\n0: 0 1203 | 0 2013 | 0 0231\n"),
        Err(Error::Syntax { .. })
    ));
    assert!(matches!(
        Triangulation::parse("tetrahedra: 1\n0: 0 1203 | - | 0 0231 | 0 0312\n"),
        Err(Error::UngluedFace { .. })
    ));
    assert!(matches!(
        Triangulation::parse("tetrahedra: 1\n0: 1 1203 | 0 2013 | 0 0231 | 0 0312\n"),
        Err(Error::TargetOutOfRange { .. })
    ));
    assert!(Triangulation::parse("").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn figure_eight_invariants_survive_relabeling((tets, perms) in relabeling(2)) {
        let tri = builtin::figure_eight();
        let other = tri.relabeled(&tets, &perms).unwrap();
        prop_assert!(other.isomorphic(&tri));
        prop_assert_eq!(Triangulation::parse(&other.to_text()).unwrap(), other.clone());
        prop_assert_eq!(degrees(&other), degrees(&tri));
        prop_assert_eq!(dim_w(&other).unwrap(), 5);
        let set = fundamental_solutions(&q_matching_system(&other).matrix, HilbertOptions::default()).unwrap();
        prop_assert_eq!(set.len(), 20);
        let map = BoundaryMap::new(&other).unwrap();
        prop_assert_eq!(map.image_index().unwrap(), BoundaryMap::new(&tri).unwrap().image_index().unwrap());
        prop_assert_eq!(map.kernel_dimension().unwrap(), 3);
    }

    #[test]
    fn gieseking_invariants_survive_relabeling((tets, perms) in relabeling(1)) {
        let tri = builtin::gieseking();
        let other = tri.relabeled(&tets, &perms).unwrap();
        prop_assert!(other.isomorphic(&tri));
        prop_assert!(!other.is_orientable());
        prop_assert_eq!(dim_w(&other).unwrap(), 2);
        let set = fundamental_solutions(&q_matching_system(&other).matrix, HilbertOptions::default()).unwrap();
        prop_assert_eq!(set.len(), 3);
        prop_assert!(other.double_cover().unwrap().cover.isomorphic(&builtin::figure_eight()));
        prop_assert_eq!(BoundaryMap::new(&other).unwrap().kernel_dimension().unwrap(), 1);
    }
}
