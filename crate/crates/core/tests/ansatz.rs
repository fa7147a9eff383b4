use holopf_core::ansatz::{
    c_table, certify, check_conjecture, check_identity2, conjecture_prediction, pfaffian_quotients,
    pfaffians, ratio_sequence, row_sums, telescoped, CertVerdict, CertifyOptions, ClosedForm,
    PredictionCase, Variant,
};
use holopf_core::arith::{int, rat, Polynomial, Rational, RationalFunction};
use holopf_core::pfaffian::{gamma, pf_laplace, pf_naive};
use holopf_core::sequences::{narayana_at, schroeder, NarayanaParam};
use holopf_core::MatrixFamily;
use proptest::prelude::*;

fn cf(family: &MatrixFamily) -> ClosedForm {
    ClosedForm::for_family(family).unwrap()
}

#[test]
fn motzkin_cofactor_table() {
    let c = c_table::<Rational>(&MatrixFamily::Motzkin, 8).unwrap();
    assert_eq!(c.get(1, 1), int(1));
    assert_eq!(c.get(2, 1), int(2));
    for n in 1..=8u32 {
        assert_eq!(c.get(n, 2 * n as i64 - 1), int(1));
        for i in [-3, -1, 0, 2 * n as i64, 2 * n as i64 + 4] {
            assert_eq!(c.get(n, i), int(0));
        }
    }
    assert_eq!(c.singular_at(), None);
}

#[test]
fn cofactors_agree_with_minor_quotients() {
    // c_i = Gamma_{i,2n} / Gamma_{2n-1,2n}, each from a direct minor
    let fam = MatrixFamily::Motzkin;
    let c = c_table::<Rational>(&fam, 5).unwrap();
    for n in 1..=5u32 {
        let d = 2 * n as usize;
        let a = fam.skew_matrix::<Rational>(d).unwrap();
        let den = gamma(&a, d - 1, d).unwrap();
        for i in 1..d {
            assert_eq!(
                c.get(n, i as i64),
                gamma(&a, i, d).unwrap() / &den,
                "n={n} i={i}"
            );
        }
    }
}

#[test]
fn motzkin_row_sums_vanish_below_diagonal() {
    let fam = MatrixFamily::Motzkin;
    let c = c_table::<Rational>(&fam, 8).unwrap();
    let g = row_sums(&fam, &c, 6).unwrap();
    assert_eq!(*g.get(1, 1), int(0));
    assert_eq!(*g.get(2, 1), int(0));
    assert_eq!(*g.get(2, 2), int(0));
    let chk = check_identity2(&g);
    assert!(chk.passed(), "{:?}", chk.witness);
    for n in 1..=8u32 {
        assert_eq!(*g.get(n, 2 * n as usize), int(4 * n as i64 - 3));
    }
}

#[test]
fn motzkin_ratios_and_pfaffians() {
    let fam = MatrixFamily::Motzkin;
    let c = c_table::<Rational>(&fam, 12).unwrap();
    let r = ratio_sequence(&fam, &c).unwrap();
    assert_eq!(r, (1..=12).map(|n| int(4 * n - 3)).collect::<Vec<_>>());
    let b = pfaffians::<Rational>(&fam, 12).unwrap();
    let q: Vec<_> = pfaffian_quotients(&b)
        .into_iter()
        .map(Option::unwrap)
        .collect();
    assert_eq!(q, r);
    assert_eq!(telescoped(&r), b);
    // independent route: naive expansion on small orders
    for (n, bn) in b.iter().enumerate().take(6) {
        assert_eq!(
            pf_naive(&fam.skew_matrix::<Rational>(2 * n).unwrap()).unwrap(),
            *bn
        );
    }
}

#[test]
fn narayana_symbolic_first_ratio() {
    let fam = MatrixFamily::Narayana(NarayanaParam::Symbolic);
    let c = c_table::<RationalFunction>(&fam, 4).unwrap();
    let r = ratio_sequence(&fam, &c).unwrap();
    assert_eq!(r[0], RationalFunction::from(Polynomial::variable("x")));
    let rep = certify(&fam, &cf(&fam), &CertifyOptions::without_guessing(4)).unwrap();
    assert_eq!(
        rep.verdict,
        CertVerdict::CertifiedAtScale,
        "{:?}",
        rep.witness
    );
}

#[test]
fn narayana_closed_form_matches_laplace() {
    let sym = MatrixFamily::Narayana(NarayanaParam::Symbolic);
    for x in [int(2), int(3), int(-1), rat(1, 2)] {
        let fam = MatrixFamily::Narayana(NarayanaParam::Value(x.clone()));
        for n in 0..=4u32 {
            let pf = pf_laplace(&fam.skew_matrix::<Rational>(2 * n as usize).unwrap()).unwrap();
            let want = cf(&sym).eval(n).eval_named(&[("x", x.clone())]).unwrap();
            assert_eq!(pf, want, "x={x} n={n}");
        }
        let rep = certify(&fam, &cf(&fam), &CertifyOptions::without_guessing(6)).unwrap();
        assert_eq!(
            rep.verdict,
            CertVerdict::CertifiedAtScale,
            "x={x}: {:?}",
            rep.witness
        );
    }
}

#[test]
fn schroeder_is_narayana_at_two() {
    for n in 0..=30 {
        assert_eq!(schroeder(n), narayana_at(n, &int(2)));
    }
    let fam = MatrixFamily::Schroeder;
    for n in 0..=4u32 {
        let pf = pf_naive(&fam.skew_matrix::<Rational>(2 * n as usize).unwrap()).unwrap();
        let want = (0..n as i64).fold(int(2i64.pow(n * n)), |p, k| p * int(4 * k + 1));
        assert_eq!(pf, want);
        assert_eq!(cf(&fam).eval(n).constant_value().unwrap(), want);
    }
    let rep = certify(&fam, &cf(&fam), &CertifyOptions::without_guessing(8)).unwrap();
    assert_eq!(rep.verdict, CertVerdict::CertifiedAtScale);
}

#[test]
fn motzkin_certified_with_guesses() {
    let rep = certify(
        &MatrixFamily::Motzkin,
        &ClosedForm::Motzkin,
        &CertifyOptions::new(8),
    )
    .unwrap();
    assert_eq!(rep.verdict, CertVerdict::CertifiedAtScale);
    assert!(rep.checks.iter().all(|c| c.passed && c.n_last == 8));
    let boundary = rep.boundary.as_ref().unwrap();
    assert!(boundary.points_checked > 0 && boundary.failures.is_empty());
    let r = rep.guesses.iter().find(|g| g.target == "r(n)").unwrap();
    assert_eq!(
        r.operators[0].to_string(),
        "(4*n - 3)*f(n+1) - (4*n + 1)*f(n)"
    );
    assert!(rep
        .guesses
        .iter()
        .all(|g| g.error.is_none() && !g.operators.is_empty()));
}

#[test]
fn delannoy_certified() {
    let fam = MatrixFamily::Delannoy;
    let rep = certify(&fam, &cf(&fam), &CertifyOptions::without_guessing(6)).unwrap();
    assert_eq!(
        rep.verdict,
        CertVerdict::CertifiedAtScale,
        "{:?}",
        rep.witness
    );
}

#[test]
fn wrong_closed_form_is_refuted_at_first_index() {
    let fam = MatrixFamily::Motzkin;
    let wrong = ClosedForm::parse("prod(4k+2)", &fam).unwrap();
    let rep = certify(&fam, &wrong, &CertifyOptions::without_guessing(3)).unwrap();
    assert_eq!(rep.verdict, CertVerdict::Refuted);
    let w = rep.witness.unwrap();
    assert_eq!((w.n, w.expected.as_str(), w.actual.as_str()), (1, "2", "1"));
}

#[test]
fn singular_system_is_inapplicable() {
    // N_m(0) = 0 for m >= 1, so every matrix of order >= 2 is zero
    let fam = MatrixFamily::Narayana(NarayanaParam::Value(int(0)));
    let c = c_table::<Rational>(&fam, 4).unwrap();
    assert_eq!(c.singular_at(), Some(2));
    let zero = ClosedForm::parse("prod(4k)", &fam).unwrap();
    let rep = certify(&fam, &zero, &CertifyOptions::without_guessing(4)).unwrap();
    assert_eq!(rep.verdict, CertVerdict::Inapplicable, "{:?}", rep.witness);
    assert!(rep.diagnostics.iter().any(|d| d.contains("singular")));
}

#[test]
fn direct_values_refute_past_a_singularity() {
    let fam = MatrixFamily::GenMotzkin { k: 2 };
    assert_eq!(c_table::<Rational>(&fam, 4).unwrap().singular_at(), Some(2));
    let zero = ClosedForm::parse("prod(4k)", &fam).unwrap();
    let rep = certify(&fam, &zero, &CertifyOptions::without_guessing(4)).unwrap();
    assert_eq!(rep.verdict, CertVerdict::Refuted);
    let w = rep.witness.unwrap();
    assert_eq!(
        (w.check.as_str(), w.n, w.actual.as_str()),
        ("closed-form-value", 2, "-8")
    );
}

#[test]
fn conjecture_cases() {
    assert_eq!(
        conjecture_prediction(1, 3, Variant::I),
        (int(45), PredictionCase::Divisible)
    );
    assert_eq!(
        conjecture_prediction(3, 2, Variant::I),
        (int(3), PredictionCase::Shifted)
    );
    assert_eq!(
        conjecture_prediction(2, 1, Variant::I).1,
        PredictionCase::Zero
    );
    // k = 1 is the plain Motzkin case
    let rep = check_conjecture(1, 6, Variant::I).unwrap();
    assert!(rep.all_match);
    // direct evaluation disagrees in sign for k = 2, n = 2
    let rep = check_conjecture(2, 2, Variant::I).unwrap();
    let row = &rep.rows[1];
    assert_eq!(
        (row.pfaffian.clone(), row.predicted.clone()),
        (int(-8), int(8))
    );
    assert!(!rep.all_match && rep.all_match_up_to_sign);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    // b_{2n} = prod r_k whenever all quotients exist
    #[test]
    fn telescoping(x in -5i64..=5, d in 1i64..=4, n in 1u32..=6) {
        prop_assume!(x != 0);
        let fam = MatrixFamily::Narayana(NarayanaParam::Value(rat(x, d)));
        let c = c_table::<Rational>(&fam, n).unwrap();
        prop_assume!(c.singular_at().is_none());
        let r = ratio_sequence(&fam, &c).unwrap();
        let b = pfaffians::<Rational>(&fam, n).unwrap();
        prop_assert_eq!(telescoped(&r), b);
    }
}
