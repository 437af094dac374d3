mod common;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use common::{mat_mul, rank};
use spun_normal::boundary::{cusp_complexes, BoundaryMap, Method};
use spun_normal::builtin;
use spun_normal::hilbert::{fundamental_solutions, HilbertOptions};
use spun_normal::linalg::GroupIndex;
use spun_normal::qtheory::{compact_dimension, is_compact_class, q_matching_system, QVector};
use spun_normal::Triangulation;

fn examples() -> Vec<Triangulation> {
    let gies = builtin::gieseking();
    let cover = gies.double_cover().unwrap().cover;
    vec![builtin::figure_eight(), gies, cover]
}

#[test]
fn complexes_are_chain_complexes() {
    for tri in examples() {
        for c in cusp_complexes(&tri).unwrap() {
            let d1 = c.d1.to_rows();
            let d2 = c.d2.to_rows();
            let product = mat_mul(&d1, &d2, c.d2.cols());
            assert!(product.iter().flatten().all(Zero::is_zero));
            assert_eq!(c.euler_characteristic(), 0);
            // H1 rank from the oracle: dim ker d1 - rank d2
            let edges = c.d1.cols();
            assert_eq!(edges - rank(&d1) - rank(&d2), c.betti());
        }
    }
}

#[test]
fn fundamental_solutions_give_cycles() {
    for tri in examples() {
        let map = BoundaryMap::new(&tri).unwrap();
        let set = fundamental_solutions(&q_matching_system(&tri).matrix, HilbertOptions::default()).unwrap();
        for s in &set.solutions {
            for chain in map.chains(&QVector(s.clone())).unwrap() {
                assert!(map.complexes[chain.cusp].is_cycle(&chain.coefficients));
            }
        }
    }
}

#[test]
fn methods_and_indices() {
    let fig8 = BoundaryMap::new(&builtin::figure_eight()).unwrap();
    assert_eq!(fig8.method, Method::Direct);
    assert_eq!(fig8.image_index().unwrap(), GroupIndex::Finite(2.into()));
    let cover = BoundaryMap::new(&builtin::gieseking().double_cover().unwrap().cover).unwrap();
    assert_eq!(cover.method, Method::Direct);
    assert_eq!(cover.image_index().unwrap(), GroupIndex::Finite(2.into()));
    let gies = BoundaryMap::new(&builtin::gieseking()).unwrap();
    assert_eq!(gies.method, Method::Cover);
    assert!(gies.direct_failure.is_some());
}

#[test]
fn kernel_dimension_is_the_compact_dimension() {
    for tri in examples() {
        let map = BoundaryMap::new(&tri).unwrap();
        assert_eq!(map.kernel_dimension().unwrap(), compact_dimension(&tri).unwrap());
    }
}

fn combination(set: &[Vec<BigInt>], coeffs: &[i64]) -> QVector {
    let n = set[0].len();
    let mut q = vec![BigInt::zero(); n];
    for (s, &c) in set.iter().zip(coeffs) {
        for (x, y) in q.iter_mut().zip(s) {
            *x += y * c;
        }
    }
    QVector(q)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn figure_eight_boundary_is_linear(a in prop::collection::vec(-4i64..=4, 20), b in prop::collection::vec(-4i64..=4, 20)) {
        let tri = builtin::figure_eight();
        let map = BoundaryMap::new(&tri).unwrap();
        let set = fundamental_solutions(&q_matching_system(&tri).matrix, HilbertOptions::default()).unwrap().solutions;
        let (x, y) = (combination(&set, &a), combination(&set, &b));
        let sum: Vec<_> = map.classes(&x).unwrap().iter().zip(map.classes(&y).unwrap()).map(|(p, q)| p.add(&q)).collect();
        prop_assert_eq!(map.classes(&x.add(&y)).unwrap(), sum);
        prop_assert_eq!(map.vanishes(&x).unwrap(), is_compact_class(&tri, &x).unwrap());
    }

    #[test]
    fn gieseking_cover_classes_are_linear(a in prop::collection::vec(-4i64..=4, 3), b in prop::collection::vec(-4i64..=4, 3)) {
        let tri = builtin::gieseking();
        let map = BoundaryMap::new(&tri).unwrap();
        let set = fundamental_solutions(&q_matching_system(&tri).matrix, HilbertOptions::default()).unwrap().solutions;
        let (x, y) = (combination(&set, &a), combination(&set, &b));
        let fx = map.faithful_classes(&x).unwrap();
        let fy = map.faithful_classes(&y).unwrap();
        let sum: Vec<_> = fx.iter().zip(&fy).map(|(p, q)| p.add(q)).collect();
        prop_assert_eq!(map.faithful_classes(&x.add(&y)).unwrap(), sum);
        prop_assert_eq!(map.vanishes(&x).unwrap(), is_compact_class(&tri, &x).unwrap());
    }
}
