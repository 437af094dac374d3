mod common;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use common::{box_points, mat_vec};
use spun_normal::builtin;
use spun_normal::hilbert::{fundamental_solutions, verify_hilbert, HilbertOptions};
use spun_normal::linalg::IntegerMatrix;
use spun_normal::qtheory::q_matching_system;

/// Minimal nonzero solutions in the box `[0, b]^n`.
fn box_minimal(rows: &[Vec<BigInt>], n: usize, b: i64) -> Vec<Vec<BigInt>> {
    let sols: Vec<Vec<BigInt>> = box_points(n, 0, b)
        .into_iter()
        .filter(|x| x.iter().any(|v| !v.is_zero()) && mat_vec(rows, x).iter().all(Zero::is_zero))
        .collect();
    sols.iter()
        .filter(|x| !sols.iter().any(|y| y != *x && y.iter().zip(x.iter()).all(|(a, c)| a <= c)))
        .cloned()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_two_row_systems(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 2)) {
        let a = IntegerMatrix::from_i64_rows(6, &rows);
        let set = fundamental_solutions(&a, HilbertOptions::default()).unwrap();
        for s in &set.solutions {
            prop_assert!(a.mul_vec(s).iter().all(Zero::is_zero));
        }
        // everything minimal in the box is a generator
        for m in box_minimal(&a.to_rows(), 6, 3) {
            prop_assert!(set.contains(&m), "{:?} missing", m);
        }
        prop_assert!(verify_hilbert(&a, &set, 3));
    }
}

#[test]
fn random_two_row_systems_to_bound_five() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..6 {
        let rows: Vec<Vec<i64>> = (0..2).map(|_| (0..6).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let a = IntegerMatrix::from_i64_rows(6, &rows);
        let set = fundamental_solutions(&a, HilbertOptions::default()).unwrap();
        assert!(verify_hilbert(&a, &set, 5), "{rows:?}");
    }
}

#[test]
fn builtin_sets_are_minimal_in_boxes() {
    let fig8 = q_matching_system(&builtin::figure_eight()).matrix;
    let set = fundamental_solutions(&fig8, HilbertOptions::default()).unwrap();
    assert_eq!(box_minimal(&fig8.to_rows(), 6, 3), set.solutions);
    let gies = q_matching_system(&builtin::gieseking()).matrix;
    let set = fundamental_solutions(&gies, HilbertOptions::default()).unwrap();
    assert_eq!(box_minimal(&gies.to_rows(), 3, 6), set.solutions);
}

#[test]
fn cover_system_is_within_the_cap() {
    let cover = builtin::gieseking().double_cover().unwrap().cover;
    let a = q_matching_system(&cover).matrix;
    let set = fundamental_solutions(&a, HilbertOptions::default()).unwrap();
    assert_eq!(set.len(), 20);
}
