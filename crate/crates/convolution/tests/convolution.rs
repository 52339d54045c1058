use okamoto_algebra::{Matrix, RuleSet, RF};
use okamoto_convolution::{
    addition_add, addition_mult, convolution_add, convolution_mult, invariant_subspaces_add,
    invariant_subspaces_mult, middle_convolution_add, middle_convolution_mult, MatrixTuple,
    McOptions,
};

fn q(a: i64) -> RF {
    RF::int(a)
}

fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix {
    Matrix::from_rows(vec![vec![q(a), q(b)], vec![q(c), q(d)]])
}

fn none() -> RuleSet {
    RuleSet::empty()
}

#[test]
fn single_block_is_scaled() {
    let t = MatrixTuple::mult(vec![Matrix::from_rows(vec![vec![q(5)]])]).unwrap();
    let ns = convolution_mult(&t, &q(3)).unwrap();
    assert_eq!(ns[0], Matrix::from_rows(vec![vec![q(15)]]));
    let a = MatrixTuple::add(vec![Matrix::from_rows(vec![vec![q(5)]])]).unwrap();
    let bs = convolution_add(&a, &q(3)).unwrap();
    assert_eq!(bs[0], Matrix::from_rows(vec![vec![q(8)]]));
}

#[test]
fn identity_tuple_collapses() {
    let t = MatrixTuple::mult(vec![Matrix::identity(2); 3]).unwrap();
    let sub = invariant_subspaces_mult(&t, &q(2), &none()).unwrap();
    assert_eq!((sub.dim_k(), sub.dim_l()), (6, 0));
    let r = middle_convolution_mult(&t, &q(2), &McOptions::default(), &none()).unwrap();
    assert_eq!(r.output.size(), 0);
}

#[test]
fn zero_tuple_collapses() {
    let t = MatrixTuple::add(vec![Matrix::zeros(2, 2); 2]).unwrap();
    let r = middle_convolution_add(&t, &q(1), &McOptions::default(), &none()).unwrap();
    assert_eq!(r.output.size(), 0);
}

#[test]
fn numeric_pair_subspaces_are_invariant() {
    // pseudo-reflections so that K is nontrivial
    let t = MatrixTuple::mult(vec![m2(1, 1, 0, 3), m2(2, 0, 1, 1)]).unwrap();
    let nu = q(2);
    let ns = convolution_mult(&t, &nu).unwrap();
    let sub = invariant_subspaces_mult(&t, &nu, &none()).unwrap();
    assert_eq!(sub.dim_k(), 2);
    for n in &ns {
        for (i, v) in &sub.k {
            // N_j fixes K_i for j != i and scales it by nu otherwise
            let w = n.mul_vec(v);
            let scaled: Vec<RF> = v.iter().map(|x| x * &nu).collect();
            assert!(w == *v || w == scaled, "block {i}");
        }
        for v in &sub.l {
            assert_eq!(n.mul_vec(v), *v);
        }
    }
}

#[test]
fn additive_l_is_kernel_of_sum() {
    let t = MatrixTuple::add(vec![m2(1, 2, 0, 0), m2(0, 0, 3, -4)]).unwrap();
    let mu = q(1);
    let sub = invariant_subspaces_add(&t, &mu, &none()).unwrap();
    let bs = convolution_add(&t, &mu).unwrap();
    let sum = bs[0].add(&bs[1]);
    let direct = sum.nullspace(&none());
    assert_eq!(sub.dim_l(), direct.len());
    for v in &sub.l {
        assert!(sum.mul_vec(v).iter().all(RF::is_zero));
    }
}

#[test]
fn addition_functors() {
    let t = MatrixTuple::mult(vec![m2(1, 1, 0, 3), m2(2, 0, 1, 1)]).unwrap();
    assert_eq!(addition_mult(&t, &[q(1), q(1)]).unwrap(), t);
    assert!(addition_mult(&t, &[q(1), q(0)]).is_err());
    let a = MatrixTuple::add(vec![m2(1, 2, 0, 0)]).unwrap();
    assert_eq!(addition_add(&a, &[q(0)]).unwrap(), a);
}

#[test]
fn parameters_compose() {
    let checks = okamoto_convolution::props::run_checks(35, 20);
    for c in &checks {
        println!("{c}");
    }
    assert!(okamoto_algebra::all_pass(&checks));
}
