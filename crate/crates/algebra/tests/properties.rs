use okamoto_algebra::props::{eval_charpoly, random_int_matrix, random_rf, run_checks};
use okamoto_algebra::{all_pass, Matrix, RuleSet, RF};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn seeded_suite_passes() {
    let checks = run_checks(7, 24);
    for c in &checks {
        println!("{c}");
    }
    assert!(all_pass(&checks));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn subtraction_inverts_addition(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_rf(&mut rng, 3), random_rf(&mut rng, 3));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn division_inverts_multiplication(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_rf(&mut rng, 3), random_rf(&mut rng, 3));
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a * &b) / &b, a);
    }

    #[test]
    fn integer_matrices_satisfy_cayley_hamilton(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_int_matrix(&mut rng, n, n, 9);
        prop_assert!(eval_charpoly(&m, &RuleSet::empty()).is_zero());
    }

    #[test]
    fn rank_of_transpose_is_rank(seed in any::<u64>(), r in 1usize..=4, c in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_int_matrix(&mut rng, r, c, 2);
        let none = RuleSet::empty();
        prop_assert_eq!(m.rank(&none), m.transpose().rank(&none));
        prop_assert_eq!(m.rank(&none) + m.nullspace(&none).len(), c);
    }

    #[test]
    fn determinant_is_multiplicative(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_int_matrix(&mut rng, n, n, 5);
        let b = random_int_matrix(&mut rng, n, n, 5);
        let none = RuleSet::empty();
        prop_assert_eq!(a.mul(&b).det(&none), &a.det(&none) * &b.det(&none));
    }
}

#[test]
fn symbolic_2x2_inverse() {
    let m = Matrix::from_rows(vec![vec![RF::var(0), RF::one()], vec![RF::one(), RF::var(1)]]);
    let none = RuleSet::empty();
    let inv = m.inverse(&none).expect("generic matrix is invertible");
    assert!(m.mul(&inv).equal_mod(&Matrix::identity(2), &none));
}
