use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::partition::{enumerate_even_even, partitions_in_box, ColumnSelection, Partition};
use crate::arith::{binomial, determinant, int, rat, ExactMatrix, Rational};
use crate::error::{Error, Result};
use crate::pfaffian::{pf_eliminate, SkewMatrix};
use crate::sequences::{hyp2f1_terminating, motzkin_triangle, MatrixFamily};

/// Last column of `H(rows)` that can be nonzero: `h(i, j) = 0` for `j > 2i - 1`.
pub fn h_band(rows: usize) -> usize {
    (2 * rows).saturating_sub(1)
}

/// The leading `rows x cols` block of `H`, `h(i, j)` at zero-based `(i-1, j-1)`.
pub fn build_h(rows: usize, cols: usize) -> ExactMatrix<Rational> {
    ExactMatrix::from_fn(rows, cols, |i, j| {
        motzkin_triangle(i as i64 + 1, j as i64 + 1)
    })
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorTerm {
    pub partition: Partition,
    pub columns: ColumnSelection,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub determinant: Rational,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub running_sum: Rational,
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenMinorSumReport {
    pub n: usize,
    pub terms: Vec<MinorTerm>,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub lhs: Rational,
    /// `prod_{k<n} (4k + 1)`
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub product: Rational,
    /// Pfaffian of `((j - i) M_{i+j-3})` of order `2n`.
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub pfaffian: Rational,
    pub passed: bool,
}

fn minor_terms(h: &ExactMatrix<Rational>, parts: &[Partition]) -> Result<Vec<MinorTerm>> {
    let rows: Vec<usize> = (0..h.rows()).collect();
    let mut sum = Rational::zero();
    let mut terms = Vec::with_capacity(parts.len());
    for l in parts {
        let columns = l.index_set(h.rows())?;
        let cols = columns.zero_based();
        let det = if cols.iter().all(|&c| c < h.cols()) {
            determinant(&h.select(&rows, &cols))?
        } else {
            // past the materialized band every entry is zero
            Rational::zero()
        };
        sum += &det;
        terms.push(MinorTerm {
            partition: l.clone(),
            columns,
            determinant: det,
            running_sum: sum.clone(),
        });
    }
    Ok(terms)
}

/// `sum det H(2n)_{I_{2n}(λ)}` over even `λ` with even conjugate.
pub fn even_minor_sum(n: usize) -> Result<Rational> {
    let h = build_h(2 * n, h_band(2 * n));
    Ok(minor_terms(&h, &enumerate_even_even(n))?
        .last()
        .map_or_else(Rational::zero, |t| t.running_sum.clone()))
}

pub fn verify_even_minor_sum(n: usize) -> Result<EvenMinorSumReport> {
    if n == 0 {
        return Err(Error::Inconsistent("n must be positive".into()));
    }
    let h = build_h(2 * n, h_band(2 * n));
    let terms = minor_terms(&h, &enumerate_even_even(n))?;
    let lhs = terms
        .last()
        .map_or_else(Rational::zero, |t| t.running_sum.clone());
    let product = (0..n as i64).map(|k| int(4 * k + 1)).product::<Rational>();
    let pfaffian = pf_eliminate(&MatrixFamily::Motzkin.skew_matrix::<Rational>(2 * n)?);
    let passed = lhs == product && pfaffian == product;
    Ok(EvenMinorSumReport {
        n,
        terms,
        lhs,
        product,
        pfaffian,
        passed,
    })
}

fn check_skew(a: &ExactMatrix<Rational>) -> Result<()> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(alloc::format!(
            "{}x{} is not square",
            a.rows(),
            a.cols()
        )));
    }
    for i in 0..a.rows() {
        for j in i..a.cols() {
            if *a.get(i, j) != -a.get(j, i).clone() {
                return Err(Error::NotSkewSymmetric { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(())
}

fn check_shapes(t: &ExactMatrix<Rational>, a: &ExactMatrix<Rational>) -> Result<()> {
    check_skew(a)?;
    if t.cols() != a.rows() {
        return Err(Error::ShapeMismatch(alloc::format!(
            "T has {} columns but A is {}x{}",
            t.cols(),
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

/// `Q = T A T^T`.
pub fn msf_q_product(
    t: &ExactMatrix<Rational>,
    a: &ExactMatrix<Rational>,
) -> Result<ExactMatrix<Rational>> {
    check_shapes(t, a)?;
    t.mul(a)?.mul(&t.transpose())
}

/// `Q_{i,j} = sum_{k<l} a_{k,l} det(T^{i,j}_{k,l})`.
pub fn msf_q_minors(
    t: &ExactMatrix<Rational>,
    a: &ExactMatrix<Rational>,
) -> Result<ExactMatrix<Rational>> {
    check_shapes(t, a)?;
    let m = a.rows();
    Ok(ExactMatrix::from_fn(t.rows(), t.rows(), |i, j| {
        let mut acc = Rational::zero();
        for k in 0..m {
            for l in k + 1..m {
                if a.get(k, l).is_zero() {
                    continue;
                }
                let minor = t.get(i, k) * t.get(j, l) - t.get(i, l) * t.get(j, k);
                acc += a.get(k, l) * minor;
            }
        }
        acc
    }))
}

/// `Q` by both formulas, which must agree.
pub fn msf_q(t: &ExactMatrix<Rational>, a: &ExactMatrix<Rational>) -> Result<SkewMatrix<Rational>> {
    let p = msf_q_product(t, a)?;
    let q = msf_q_minors(t, a)?;
    if p != q {
        return Err(Error::Inconsistent(
            "T A T^T differs from the 2x2-minor expansion".into(),
        ));
    }
    SkewMatrix::from_dense(&q)
}

/// The skew matrix pairing columns `2k-1` and `2k`, of order `m`.
pub fn canonical_pairing(m: usize) -> ExactMatrix<Rational> {
    ExactMatrix::from_fn(m, m, |i, j| {
        if i % 2 == 0 && j == i + 1 {
            Rational::one()
        } else if j % 2 == 0 && i == j + 1 {
            -Rational::one()
        } else {
            Rational::zero()
        }
    })
}

// advances a strictly increasing zero-based selection in lexicographic order
fn next_subset(sel: &mut [usize], m: usize) -> bool {
    let r = sel.len();
    for pos in (0..r).rev() {
        if sel[pos] < m - r + pos {
            sel[pos] += 1;
            for q in pos + 1..r {
                sel[q] = sel[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn principal_pf(a: &ExactMatrix<Rational>, cols: &[usize]) -> Result<Rational> {
    let sub = SkewMatrix::from_fn(cols.len(), |i, j| a.get(cols[i - 1], cols[j - 1]).clone())?;
    Ok(pf_eliminate(&sub))
}

// (I, Pf(A^I_I), det T_I)
type Term = (Vec<usize>, Rational, Rational);

// every |I| = rows with a nonzero product, and the number of subsets visited
fn enumerate_terms(
    t: &ExactMatrix<Rational>,
    a: &ExactMatrix<Rational>,
) -> Result<(usize, Vec<Term>)> {
    let (r, m) = (t.rows(), t.cols());
    let rows: Vec<usize> = (0..r).collect();
    let mut out = Vec::new();
    let mut count = 0;
    if r > m {
        return Ok((0, out));
    }
    let mut sel: Vec<usize> = (0..r).collect();
    loop {
        count += 1;
        let pf = principal_pf(a, &sel)?;
        if !pf.is_zero() {
            let det = determinant(&t.select(&rows, &sel))?;
            if !det.is_zero() {
                out.push((sel.iter().map(|c| c + 1).collect(), pf, det));
            }
        }
        if !next_subset(&mut sel, m) {
            break;
        }
    }
    Ok((count, out))
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MsfReport {
    pub rows: usize,
    pub columns: usize,
    /// Column sets enumerated.
    pub subsets: usize,
    pub nonzero_terms: usize,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub lhs: Rational,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub pf_q: Rational,
    pub passed: bool,
}

/// `sum_I Pf(A^I_I) det(T_I)` by enumerating every column set, against `Pf(T A T^T)`.
pub fn verify_msf(t: &ExactMatrix<Rational>, a: &ExactMatrix<Rational>) -> Result<MsfReport> {
    let q = msf_q(t, a)?;
    let pf_q = pf_eliminate(&q);
    let (subsets, terms) = enumerate_terms(t, a)?;
    let lhs: Rational = terms.iter().map(|(_, pf, det)| pf * det).sum();
    Ok(MsfReport {
        rows: t.rows(),
        columns: t.cols(),
        subsets,
        nonzero_terms: terms.len(),
        passed: lhs == pf_q,
        lhs,
        pf_q,
    })
}

/// The `H(2n)` instance with the canonical pairing on `4n` columns.
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalMsfReport {
    pub n: usize,
    pub columns: usize,
    /// Terms over even `λ` with even conjugate.
    pub terms: Vec<MinorTerm>,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub lhs_partitions: Rational,
    /// The same sum over every column set.
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub lhs_all_subsets: Rational,
    /// `Pf(A^I_I)` is 1 exactly on the sets `I_{2n}(λ)` with `λ, λ'` even,
    /// and 0 elsewhere.
    pub pairing_characterized: bool,
    /// `Q_{i,j} = (j - i) M_{i+j-3}`.
    pub q_is_motzkin: bool,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub pf_q: Rational,
    pub passed: bool,
}

pub fn verify_msf_canonical(n: usize) -> Result<CanonicalMsfReport> {
    if n == 0 {
        return Err(Error::Inconsistent("n must be positive".into()));
    }
    let (r, m) = (2 * n, 4 * n);
    let t = build_h(r, m);
    let a = canonical_pairing(m);
    let q = msf_q(&t, &a)?;
    let pf_q = pf_eliminate(&q);
    let q_is_motzkin = q == MatrixFamily::Motzkin.skew_matrix::<Rational>(r)?;

    let terms = minor_terms(&t, &enumerate_even_even(n))?;
    let lhs_partitions = terms
        .last()
        .map_or_else(Rational::zero, |t| t.running_sum.clone());

    let mut expected: Vec<Vec<usize>> = partitions_in_box((m - r) as u32, r)
        .into_iter()
        .filter(|l| l.is_even() && l.conjugate().is_even())
        .map(|l| l.index_set(r).map(|s| s.indices().to_vec()))
        .collect::<Result<_>>()?;
    expected.sort();
    let mut supported = Vec::new();
    let mut all_one = true;
    let mut sel: Vec<usize> = (0..r).collect();
    loop {
        let pf = principal_pf(&a, &sel)?;
        if !pf.is_zero() {
            all_one &= pf.is_one();
            supported.push(sel.iter().map(|c| c + 1).collect::<Vec<_>>());
        }
        if !next_subset(&mut sel, m) {
            break;
        }
    }
    let pairing_characterized = all_one && supported == expected;

    let (_, all_terms) = enumerate_terms(&t, &a)?;
    let lhs_all_subsets: Rational = all_terms.iter().map(|(_, pf, det)| pf * det).sum();

    let passed =
        pairing_characterized && q_is_motzkin && lhs_partitions == pf_q && lhs_all_subsets == pf_q;
    Ok(CanonicalMsfReport {
        n,
        columns: m,
        terms,
        lhs_partitions,
        lhs_all_subsets,
        pairing_characterized,
        q_is_motzkin,
        pf_q,
        passed,
    })
}

fn f21(a: Rational, b: Rational, c: i64) -> Rational {
    // callers keep one upper parameter a nonpositive integer and c >= 2
    hyp2f1_terminating(&a, &b, &int(c), &int(4)).expect("terminating parameters")
}

/// `sum_k C(i,k) C(j,k) F((k-i+1)/2, (k-i)/2; k+2) F((k-j+1)/2, (k-j)/2; k+2)` at `4`.
pub fn okinawa_lhs(i: u32, j: u32) -> Rational {
    let (i, j) = (i64::from(i), i64::from(j));
    (0..=i.min(j))
        .map(|k| {
            let b = Rational::from_integer(binomial(i, k) * binomial(j, k));
            b * f21(rat(k - i + 1, 2), rat(k - i, 2), k + 2)
                * f21(rat(k - j + 1, 2), rat(k - j, 2), k + 2)
        })
        .sum()
}

/// `F((1-i-j)/2, (-i-j)/2; 2)` at `4`.
pub fn okinawa_rhs(i: u32, j: u32) -> Rational {
    let s = i64::from(i) + i64::from(j);
    f21(rat(1 - s, 2), rat(-s, 2), 2)
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkinawaFailure {
    pub i: u32,
    pub j: u32,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub lhs: Rational,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub rhs: Rational,
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OkinawaReport {
    pub i_max: u32,
    pub j_max: u32,
    pub checked: usize,
    pub passed: usize,
    pub failures: Vec<OkinawaFailure>,
}

impl OkinawaReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Both sides on `0 <= i <= i_max`, `0 <= j <= j_max`.
pub fn verify_okinawa(i_max: u32, j_max: u32) -> OkinawaReport {
    let mut report = OkinawaReport {
        i_max,
        j_max,
        checked: 0,
        passed: 0,
        failures: Vec::new(),
    };
    for i in 0..=i_max {
        for j in 0..=j_max {
            let (lhs, rhs) = (okinawa_lhs(i, j), okinawa_rhs(i, j));
            report.checked += 1;
            if lhs == rhs {
                report.passed += 1;
            } else {
                report.failures.push(OkinawaFailure { i, j, lhs, rhs });
            }
        }
    }
    report
}
