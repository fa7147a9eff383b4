use holopf_core::ansatz::{c_table, ratio_sequence, row_sums};
use holopf_core::arith::{int, Polynomial, Rational};
use holopf_core::guess::{
    catalog, check_annihilates, guess_bivariate, guess_univariate, integer_roots,
    leading_nonvanishing, Grid, GuessSpec, RecurrenceOperator, Region, Sequence, Support, Table2,
    Verdict,
};
use holopf_core::sequences::{delannoy, motzkin};
use holopf_core::{Error, MatrixFamily};
use proptest::prelude::*;

fn motzkin_c(n_max: u32) -> Table2 {
    c_table::<Rational>(&MatrixFamily::Motzkin, n_max)
        .unwrap()
        .to_grid()
}

fn annihilates(op: &RecurrenceOperator, data: &dyn Grid) -> usize {
    let chk = check_annihilates(op, data);
    assert!(chk.passed(), "{op} fails at {:?}", chk.failures);
    chk.points_checked
}

#[test]
fn motzkin_numbers_recurrence() {
    let seq = Sequence::from_fn(0..=40, motzkin);
    let out = guess_univariate(&seq, &GuessSpec::new(Support::MaxOrder(2), 1)).unwrap();
    assert_eq!(out.operators.len(), 1);
    let op = &out.operators[0];
    assert_eq!(
        op.to_string(),
        "(n + 4)*f(n+2) - (2*n + 5)*f(n+1) - (3*n + 3)*f(n)"
    );
    assert!(annihilates(op, &Sequence::from_fn(0..=60, motzkin)) >= 59);
}

#[test]
fn constant_and_factorial() {
    let ones = Sequence::from_fn(0..=30, |_| int(1));
    let out = guess_univariate(&ones, &GuessSpec::new(Support::MaxOrder(2), 1)).unwrap();
    assert_eq!(out.operators.len(), 1);
    assert_eq!(out.operators[0].to_string(), "f(n+1) - f(n)");

    let mut f = int(1);
    let fact = Sequence::from_fn(0..=30, |n| {
        let v = f.clone();
        f *= int(n + 1);
        v
    });
    let out = guess_univariate(&fact, &GuessSpec::new(Support::MaxOrder(2), 1)).unwrap();
    assert_eq!(out.operators.len(), 1);
    assert_eq!(out.operators[0].to_string(), "f(n+1) - (n + 1)*f(n)");
}

#[test]
fn bivariate_linear_function() {
    let t = Table2::from_fn(0..=12, |_| 0..=12, |n, i| int(n + i), false);
    let spec = GuessSpec::new(
        Support::Explicit(vec![vec![0, 0], vec![1, 0], vec![0, 1]]),
        0,
    );
    let out = guess_bivariate(&t, ["n", "i"], &spec).unwrap();
    assert_eq!(out.degree, 0);
    assert_eq!(out.operators.len(), 1);
    annihilates(&out.operators[0], &t);
}

#[test]
fn too_little_data() {
    let t = Table2::from_fn(0..=2, |_| 0..=2, |_, _| int(0), false);
    let spec = GuessSpec::new(Support::Rectangle(vec![1, 1]), 2);
    assert!(matches!(
        guess_bivariate(&t, ["n", "i"], &spec),
        Err(Error::Underdetermined { .. })
    ));
}

#[test]
fn catalog_annihilates_motzkin_tables() {
    let c = motzkin_c(10);
    for op in catalog::motzkin_cofactor() {
        assert!(annihilates(&op, &c) > 30);
    }
    let ct = c_table::<Rational>(&MatrixFamily::Motzkin, 10).unwrap();
    let g = row_sums(&MatrixFamily::Motzkin, &ct, 6).unwrap().to_grid();
    for op in catalog::motzkin_row_sums() {
        assert!(annihilates(&op, &g) > 30);
    }
    let r = ratio_sequence(&MatrixFamily::Motzkin, &ct).unwrap();
    assert_eq!(r[0], int(1));
    annihilates(&catalog::motzkin_ratio(), &Sequence::new(1, r));
}

#[test]
fn catalog_annihilates_delannoy_table() {
    let c = c_table::<Rational>(&MatrixFamily::Delannoy, 8)
        .unwrap()
        .to_grid();
    for op in catalog::delannoy_cofactor() {
        assert!(annihilates(&op, &c) > 20);
    }
}

fn rediscover(op: &RecurrenceOperator, n_max: u32) {
    let c = motzkin_c(n_max);
    let spec = GuessSpec::new(Support::Explicit(op.support()), op.degree());
    let out = guess_bivariate(&c, ["n", "i"], &spec).unwrap();
    assert_eq!(out.degree, op.degree());
    assert_eq!(out.operators.len(), 1, "{:?}", out.operators);
    assert_eq!(&out.operators[0], op);
}

#[test]
fn rediscovers_first_and_third_cofactor_recurrences() {
    let [r1, _, r3] = catalog::motzkin_cofactor();
    rediscover(&r1, 12);
    rediscover(&r3, 14);
}

#[test]
fn rediscovers_second_cofactor_recurrence() {
    let [_, r2, _] = catalog::motzkin_cofactor();
    rediscover(&r2, 18);
}

#[test]
fn first_recurrence_leading_coefficient() {
    let [r1, _, _] = catalog::motzkin_cofactor();
    let region = Region::parse("n >= 2, i >= 2*n", &["n", "i"]).unwrap();
    let rep = leading_nonvanishing(&r1, &region, Some(&[(1, 30), (-4, 64)])).unwrap();
    assert_eq!(rep.verdict, Verdict::WindowVerified);
    assert!(rep.nonvanishing(), "{rep:?}");

    // (i-1) vanishes on the line i = 1, which the unrestricted region contains
    let rep =
        leading_nonvanishing(&r1, &Region::all(&["n", "i"]), Some(&[(1, 10), (-2, 20)])).unwrap();
    assert!(rep.zeros.contains(&vec![3, 1]));
}

#[test]
fn ratio_recurrence_is_exactly_nonvanishing() {
    let op = catalog::motzkin_ratio();
    let rep = leading_nonvanishing(&op, &Region::parse("n >= 3", &["n"]).unwrap(), None).unwrap();
    assert_eq!(rep.verdict, Verdict::Exact);
    assert!(rep.nonvanishing());
    let roots = integer_roots(op.leading_coefficient()).unwrap();
    assert!(roots.is_empty(), "{roots:?}");
    let p = Polynomial::parse("(n-2)*(n+3)*(2*n-1)").unwrap();
    assert_eq!(integer_roots(&p).unwrap(), vec![(-3).into(), 2.into()]);
}

#[test]
fn delannoy_numbers() {
    let seq = Sequence::from_fn(0..=40, delannoy);
    let out = guess_univariate(&seq, &GuessSpec::new(Support::MaxOrder(2), 1)).unwrap();
    assert_eq!(out.operators.len(), 1);
    annihilates(&out.operators[0], &Sequence::from_fn(0..=60, delannoy));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn normalization_is_idempotent_and_scale_free(
        coeffs in prop::collection::vec(-6i64..=6, 6),
        k in prop::sample::select(vec![-3i64, -1, 2, 5]),
    ) {
        prop_assume!(coeffs[3..].iter().any(|&c| c != 0));
        let poly = |a: i64, b: i64, c: i64| {
            Polynomial::parse(&format!("{a}*n^2 + {b}*n + {c}")).unwrap()
        };
        let terms = vec![
            (vec![0], poly(coeffs[0], coeffs[1], coeffs[2])),
            (vec![1], poly(coeffs[3], coeffs[4], coeffs[5])),
        ];
        let op = RecurrenceOperator::new(vec!["n".into()], terms.clone()).unwrap();
        let again = RecurrenceOperator::new(vec!["n".into()], op.terms().to_vec()).unwrap();
        prop_assert_eq!(&op, &again);
        let scaled: Vec<_> = terms.into_iter().map(|(s, p)| (s, p.scale(&int(k)))).collect();
        prop_assert_eq!(&op, &RecurrenceOperator::new(vec!["n".into()], scaled).unwrap());
        prop_assert!(op.leading_coefficient().leading_coefficient() > int(0));
    }

    #[test]
    fn guessing_is_stable_under_extra_data(extra in 0i64..10) {
        let a = Sequence::from_fn(0..=40, motzkin);
        let b = Sequence::from_fn(0..=40 + extra, motzkin);
        let spec = GuessSpec::new(Support::MaxOrder(2), 1);
        prop_assert_eq!(
            guess_univariate(&a, &spec).unwrap().operators,
            guess_univariate(&b, &spec).unwrap().operators
        );
    }
}
