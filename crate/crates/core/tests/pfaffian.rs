use holopf_core::arith::{determinant, int, Rational};
use holopf_core::pfaffian::{
    cofactor_vector, cofactor_vector_by_gamma, gamma, permutation_sign, permute, pf_eliminate,
    pf_laplace, pf_naive,
};
use holopf_core::{MatrixFamily, SkewMatrix};
use proptest::prelude::*;

fn skew(dim: usize, max: i64) -> impl Strategy<Value = SkewMatrix<Rational>> {
    let len = dim * dim.saturating_sub(1) / 2;
    prop::collection::vec(-max..=max, len).prop_map(move |v| {
        let mut it = v.into_iter();
        SkewMatrix::from_fn(dim, |_, _| int(it.next().unwrap())).unwrap()
    })
}

fn even_dim(max: usize) -> impl Strategy<Value = usize> {
    (0..=max / 2).prop_map(|h| 2 * h)
}

fn permutation(len: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=len).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn three_algorithms_agree(a in even_dim(8).prop_flat_map(|d| skew(d, 9))) {
        let e = pf_eliminate(&a);
        prop_assert_eq!(&pf_naive(&a).unwrap(), &e);
        prop_assert_eq!(&pf_laplace(&a).unwrap(), &e);
    }

    #[test]
    fn sparse_matrices_agree(a in even_dim(8).prop_flat_map(|d| skew(d, 1))) {
        // many zero entries exercise the pivot swaps and the zero-column exit
        prop_assert_eq!(pf_naive(&a).unwrap(), pf_eliminate(&a));
    }

    #[test]
    fn square_is_determinant(a in even_dim(10).prop_flat_map(|d| skew(d, 20))) {
        let pf = pf_eliminate(&a);
        prop_assert_eq!(&pf * &pf, determinant(&a.to_dense()).unwrap());
    }

    #[test]
    fn permutation_action((a, pi) in skew(6, 9).prop_flat_map(|a| (Just(a), permutation(6)))) {
        let s = permutation_sign(&pi).unwrap();
        prop_assert_eq!(pf_eliminate(&permute(&a, &pi).unwrap()), pf_eliminate(&a) * int(s as i64));
    }

    #[test]
    fn laplace_orthogonality(a in prop_oneof![skew(2, 9), skew(4, 9), skew(6, 9)]) {
        let d = a.dim();
        let pf = pf_eliminate(&a);
        for i in 1..=d {
            for j in 1..=d {
                let mut sum = int(0);
                for k in 1..=d {
                    sum += a.get(i, k) * gamma(&a, j, k).unwrap();
                }
                prop_assert_eq!(sum, if i == j { pf.clone() } else { int(0) });
            }
        }
    }

    #[test]
    fn cofactor_routes_agree(a in skew(6, 9)) {
        let by_solve = cofactor_vector(&a);
        let by_gamma = cofactor_vector_by_gamma(&a);
        prop_assert_eq!(&by_solve, &by_gamma);
        if let Ok(c) = by_solve {
            prop_assert_eq!(&c[4], &int(1));
            for j in 1..6 {
                let s: Rational = (1..6).map(|i| &c[i - 1] * a.get(i, j)).sum();
                prop_assert_eq!(s, int(0));
            }
        }
    }
}

#[test]
fn ratio_identity_for_motzkin() {
    for n in 1..=5 {
        let a: SkewMatrix<Rational> = MatrixFamily::Motzkin.skew_matrix(2 * n).unwrap();
        let c = cofactor_vector(&a).unwrap();
        let r: Rational = (1..2 * n).map(|i| &c[i - 1] * a.get(i, 2 * n)).sum();
        let lower: SkewMatrix<Rational> = MatrixFamily::Motzkin.skew_matrix(2 * n - 2).unwrap();
        assert_eq!(r * pf_eliminate(&lower), pf_eliminate(&a));
    }
}

#[test]
fn motzkin_values() {
    let expected = [1i64, 1, 5, 45, 585, 9945];
    for (n, &v) in expected.iter().enumerate() {
        let a: SkewMatrix<Rational> = MatrixFamily::Motzkin.skew_matrix(2 * n).unwrap();
        assert_eq!(pf_eliminate(&a), int(v), "n = {n}");
    }
}

#[test]
fn repeated_index_vanishes() {
    // rows/columns 1 and 2 made equal through the natural action
    let a = SkewMatrix::from_fn(6, |i, j| int((3 * i + 5 * j * j) as i64)).unwrap();
    let b = SkewMatrix::from_fn(6, |i, j| {
        let f = |t: usize| if t == 2 { 1 } else { t };
        let (p, q) = (f(i), f(j));
        if p == q {
            int(0)
        } else {
            a.get(p, q)
        }
    })
    .unwrap();
    assert_eq!(pf_eliminate(&b), int(0));
    assert_eq!(pf_naive(&b).unwrap(), int(0));
}
