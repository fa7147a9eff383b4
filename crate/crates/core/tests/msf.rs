use holopf_core::arith::{determinant, int, ExactMatrix, Rational};
use holopf_core::msf::{
    build_h, canonical_pairing, enumerate_even_even, h_band, msf_q, msf_q_minors, msf_q_product,
    partitions_in_box, verify_even_minor_sum, verify_msf, verify_msf_canonical, verify_okinawa,
    Partition,
};
use holopf_core::pfaffian::pf_eliminate;
use holopf_core::sequences::motzkin;
use holopf_core::MatrixFamily;
use proptest::prelude::*;

#[test]
fn even_minor_sums_up_to_three() {
    for (n, want) in [(1, 1), (2, 5), (3, 45)] {
        let rep = verify_even_minor_sum(n).unwrap();
        assert_eq!(rep.lhs, int(want));
        assert_eq!(rep.pfaffian, int(want));
        assert!(rep.passed);
        let pf = pf_eliminate(
            &MatrixFamily::Motzkin
                .skew_matrix::<Rational>(2 * n)
                .unwrap(),
        );
        assert_eq!(rep.lhs, pf);
    }
    let rep = verify_even_minor_sum(2).unwrap();
    let sums: Vec<_> = rep.terms.iter().map(|t| t.running_sum.clone()).collect();
    assert_eq!(sums.len(), 3);
    assert_eq!(sums[2], int(5));
}

#[test]
fn canonical_instance() {
    for (n, want) in [(1, 1), (2, 5)] {
        let rep = verify_msf_canonical(n).unwrap();
        assert!(rep.pairing_characterized && rep.q_is_motzkin, "{rep:?}");
        assert_eq!(
            (rep.lhs_partitions.clone(), rep.lhs_all_subsets.clone()),
            (int(want), int(want))
        );
        assert!(rep.passed);
    }
}

#[test]
fn truncated_h_gives_motzkin_q() {
    // Q_{i,j} = (j - i) M_{i+j-3}, checked against the number sequence directly
    for r in [2usize, 4, 6, 8] {
        let q = msf_q(&build_h(r, 2 * r), &canonical_pairing(2 * r)).unwrap();
        for i in 1..=r {
            for j in i + 1..=r {
                assert_eq!(
                    *q.upper(i, j),
                    int((j - i) as i64) * motzkin(i as i64 + j as i64 - 3)
                );
            }
        }
    }
}

#[test]
fn okinawa_grid() {
    let rep = verify_okinawa(12, 12);
    assert_eq!((rep.checked, rep.passed), (169, 169));
}

#[test]
fn even_even_is_even_parts_with_even_multiplicities() {
    for l in partitions_in_box(8, 8) {
        let both = l.is_even() && l.conjugate().is_even();
        let mults_even = l
            .parts()
            .iter()
            .all(|p| p % 2 == 0 && l.parts().iter().filter(|q| *q == p).count() % 2 == 0);
        assert_eq!(both, mults_even, "{l}");
    }
    assert!(enumerate_even_even(3)
        .iter()
        .all(|l| l.part(1) <= 4 && l.len() <= 6));
}

#[test]
fn out_of_band_minors_vanish() {
    // an even first part beyond 2n - 2 is at least 2n, which puts column
    // λ_1 + 2n past the band of H(2n); odd parts give no such guarantee
    for n in 1..=3usize {
        let r = 2 * n;
        let h = build_h(r, h_band(r) + 4);
        let rows: Vec<usize> = (0..r).collect();
        for l in partitions_in_box(2 * n as u32 + 2, r)
            .into_iter()
            .filter(|l| l.is_even() && l.part(1) as usize > 2 * n - 2)
        {
            let cols = l.index_set(r).unwrap().zero_based();
            if cols.iter().all(|&c| c < h.cols()) {
                assert_eq!(determinant(&h.select(&rows, &cols)).unwrap(), int(0), "{l}");
            }
        }
    }
}

#[test]
fn band_structure() {
    let h = build_h(8, 20);
    for i in 0..8 {
        for j in 0..20 {
            if j + 1 > h_band(i + 1) {
                assert_eq!(*h.get(i, j), int(0));
            }
        }
    }
}

fn small() -> impl Strategy<Value = i64> {
    -4i64..=4
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix<Rational>> {
    prop::collection::vec(small(), rows * cols)
        .prop_map(move |v| ExactMatrix::from_fn(rows, cols, |i, j| int(v[i * cols + j])))
}

fn skew(m: usize) -> impl Strategy<Value = ExactMatrix<Rational>> {
    prop::collection::vec(small(), m * m).prop_map(move |v| {
        ExactMatrix::from_fn(m, m, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => int(v[i * m + j]),
            std::cmp::Ordering::Greater => -int(v[j * m + i]),
            std::cmp::Ordering::Equal => int(0),
        })
    })
}

proptest! {
    #[test]
    fn conjugate_involution(parts in prop::collection::vec(1u32..=9, 0..8)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let l = Partition::new(parts).unwrap();
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().len() as u32, l.part(1));
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn q_dual_paths((t, a) in (1usize..=6).prop_flat_map(|m| (matrix(2, m), skew(m)))) {
        let p = msf_q_product(&t, &a).unwrap();
        prop_assert_eq!(&p, &msf_q_minors(&t, &a).unwrap());
        prop_assert_eq!(p.transpose().map(|x| -x.clone()), p);
    }

    #[test]
    fn msf_by_enumeration((t, a) in (2usize..=6).prop_flat_map(|m| (matrix(2, m), skew(m)))) {
        let rep = verify_msf(&t, &a).unwrap();
        prop_assert!(rep.passed, "{:?}", rep);
    }

    #[test]
    fn msf_four_rows((t, a) in (4usize..=6).prop_flat_map(|m| (matrix(4, m), skew(m)))) {
        let rep = verify_msf(&t, &a).unwrap();
        prop_assert!(rep.passed, "{:?}", rep);
    }
}
