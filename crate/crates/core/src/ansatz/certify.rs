use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use super::tables::{c_table, check_identity2, pfaffians, row_sums, telescoped, CTable};
use super::ClosedForm;
use crate::arith::{Field, Rational, RationalFunction};
use crate::error::Result;
use crate::guess::{
    check_annihilates, guess_bivariate, guess_univariate, leading_nonvanishing, GuessSpec,
    NonvanishingReport, RecurrenceOperator, Region, Sequence, Support,
};
use crate::sequences::MatrixFamily;

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertVerdict {
    /// Every check passed for every `n` in the declared range.
    CertifiedAtScale,
    /// Some check failed; see the witness.
    Refuted,
    /// The cofactor system became singular inside the range, so the
    /// method does not apply there.
    Inapplicable,
}

impl CertVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertVerdict::CertifiedAtScale => "certified-at-scale",
            CertVerdict::Refuted => "refuted",
            CertVerdict::Inapplicable => "inapplicable",
        }
    }
}

/// A failing instance of a check with both exact values.
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub check: String,
    pub n: u32,
    pub index: Option<u32>,
    pub expected: String,
    pub actual: String,
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSummary {
    pub name: String,
    /// The identity being checked.
    pub statement: String,
    pub passed: bool,
    /// Checked for `n` in this inclusive range (empty when `n_first > n_last`).
    pub n_first: u32,
    pub n_last: u32,
    pub witness: Option<Witness>,
}

/// Residuals of guessed cofactor recurrences at the zero-extended points
/// `i <= 0` and `i >= 2n`.
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCheck {
    pub operators: usize,
    pub points_checked: usize,
    pub failures: Vec<Vec<i64>>,
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessRecord {
    /// `c(n,i)`, `g(n,j)` or `r(n)`.
    pub target: String,
    pub table_n_max: u32,
    pub support: Vec<Vec<i64>>,
    pub degree: u32,
    pub unknowns: usize,
    pub data_equations: usize,
    pub validation_equations: usize,
    pub data_window: (i64, i64),
    pub validation_window: (i64, i64),
    pub rejected_by_validation: usize,
    pub operators: Vec<RecurrenceOperator>,
    /// Points checked and nonzero residuals of each operator on the whole table.
    pub table_checks: Vec<(usize, usize)>,
    pub region: String,
    pub leading_coefficients: Vec<NonvanishingReport>,
    /// Set instead of the fields above when guessing could not run.
    pub error: Option<String>,
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificationReport {
    pub family: String,
    pub closed_form: String,
    pub n_max: u32,
    pub verdict: CertVerdict,
    pub witness: Option<Witness>,
    pub checks: Vec<CheckSummary>,
    /// `r_1, ..., r_{n}` from the cofactor sums.
    pub ratios: Vec<String>,
    /// `b_0, b_2, ..., b_{2 n_max}` computed directly.
    pub pfaffians: Vec<String>,
    pub boundary: Option<BoundaryCheck>,
    pub guesses: Vec<GuessRecord>,
    pub diagnostics: Vec<String>,
}

impl CertificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// What to guess alongside certification, on a separate (usually longer)
/// range of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessPlan {
    pub n_max: u32,
    pub c: Option<GuessSpec>,
    pub c_region: String,
    pub g: Option<GuessSpec>,
    pub g_region: String,
    pub r: Option<GuessSpec>,
    pub r_region: String,
}

impl Default for GuessPlan {
    fn default() -> Self {
        GuessPlan {
            n_max: 24,
            c: Some(GuessSpec::new(
                Support::Explicit(alloc::vec![
                    alloc::vec![0, 0],
                    alloc::vec![0, -1],
                    alloc::vec![-1, -1],
                    alloc::vec![-1, 0],
                    alloc::vec![-1, 1],
                ]),
                3,
            )),
            c_region: "n >= 2, i >= 2*n".into(),
            g: Some(GuessSpec::new(
                Support::Explicit(alloc::vec![
                    alloc::vec![0, 0],
                    alloc::vec![-1, 0],
                    alloc::vec![-1, 1]
                ]),
                3,
            )),
            g_region: "n >= 1, j >= 1".into(),
            r: Some(GuessSpec::new(Support::MaxOrder(2), 3)),
            r_region: "n >= 1".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub n_max: u32,
    /// Skipped for families with a symbolic parameter.
    pub guess: Option<GuessPlan>,
}

impl CertifyOptions {
    pub fn new(n_max: u32) -> Self {
        CertifyOptions {
            n_max,
            guess: Some(GuessPlan::default()),
        }
    }

    pub fn without_guessing(n_max: u32) -> Self {
        CertifyOptions { n_max, guess: None }
    }
}

struct Check {
    summary: CheckSummary,
}

impl Check {
    fn new(name: &str, statement: &str, n_first: u32, n_last: u32) -> Self {
        Check {
            summary: CheckSummary {
                name: name.into(),
                statement: statement.into(),
                passed: true,
                n_first,
                n_last,
                witness: None,
            },
        }
    }

    fn fail(&mut self, n: u32, index: Option<u32>, expected: String, actual: String) {
        if self.summary.witness.is_none() {
            self.summary.passed = false;
            self.summary.witness = Some(Witness {
                check: self.summary.name.clone(),
                n,
                index,
                expected,
                actual,
            });
        }
    }
}

fn identity_checks<F: Field>(
    family: &MatrixFamily,
    cf: &ClosedForm,
    n_max: u32,
    c: &CTable<F>,
    report: &mut CertificationReport,
) -> Result<()> {
    let checked = c.n_max().min(n_max);
    let b = pfaffians::<F>(family, n_max)?;
    report.pfaffians = b.iter().map(ToString::to_string).collect();

    let mut id1 = Check::new("normalization", "c(2n,2n-1) = 1", 1, checked);
    for n in 1..=checked {
        let v = c.get(n, 2 * n as i64 - 1);
        if !v.is_one() {
            id1.fail(n, Some(2 * n - 1), "1".into(), v.to_string());
        }
    }

    let g = row_sums(family, &c.truncated(checked), 0)?;
    let id2_result = check_identity2(&g);
    let mut id2 = Check::new(
        "orthogonality",
        "sum_{i<2n} c(2n,i) a(i,j) = 0 for 1 <= j < 2n",
        1,
        checked,
    );
    if let Some((n, j, v)) = &id2_result.witness {
        id2.fail(*n, Some(*j as u32), "0".into(), v.to_string());
    }
    let r = id2_result.diagonal;
    report.ratios = r.iter().map(ToString::to_string).collect();

    let mut id3 = Check::new(
        "ratio",
        "sum_{i<2n} c(2n,i) a(i,2n) = b(2n) / b(2n-2)",
        1,
        checked,
    );
    for n in 1..=checked as usize {
        // b(2n-2) is nonzero wherever the cofactor system was solvable
        let q = b[n].divide(&b[n - 1]).expect("nonzero sub-Pfaffian");
        if r[n - 1] != q {
            id3.fail(n as u32, None, q.to_string(), r[n - 1].to_string());
        }
    }

    let mut tele = Check::new("telescoping", "prod_{m<=n} r(m) = b(2n)", 1, checked);
    for (n, p) in telescoped(&r).iter().enumerate().skip(1) {
        if *p != b[n] {
            tele.fail(n as u32, None, b[n].to_string(), p.to_string());
        }
    }

    let cf_values: Vec<F> = (0..=n_max)
        .map(|n| {
            cf.eval_in::<F>(n)
                .expect("closed form lives in the coefficient field")
        })
        .collect();
    let mut cf_ratio = Check::new("closed-form-ratio", "r(n) = cf(n) / cf(n-1)", 1, checked);
    for n in 1..=checked as usize {
        match cf_values[n].divide(&cf_values[n - 1]) {
            Some(q) if q == r[n - 1] => {}
            Some(q) => cf_ratio.fail(n as u32, None, q.to_string(), r[n - 1].to_string()),
            None => cf_ratio.fail(n as u32, None, "cf(n-1) != 0".into(), "0".into()),
        }
    }
    let mut cf_direct = Check::new("closed-form-value", "b(2n) = cf(n)", 0, n_max);
    for n in 0..=n_max as usize {
        if cf_values[n] != b[n] {
            cf_direct.fail(n as u32, None, cf_values[n].to_string(), b[n].to_string());
        }
    }

    report.checks = [id1, id2, id3, tele, cf_ratio, cf_direct]
        .into_iter()
        .map(|c| c.summary)
        .collect();
    Ok(())
}

fn finish(report: &mut CertificationReport, singular_at: Option<u32>) {
    let witness = report
        .checks
        .iter()
        .filter_map(|c| c.witness.as_ref())
        .min_by_key(|w| w.n)
        .cloned();
    if let Some(n) = singular_at.filter(|&n| n <= report.n_max) {
        report.diagnostics.push(format!(
            "cofactor system singular at n = {n}: the Pfaffian of order {} vanishes; identities checked for n < {n} only",
            2 * n - 2
        ));
    }
    report.verdict = if witness.is_some() {
        CertVerdict::Refuted
    } else if singular_at.is_some_and(|n| n <= report.n_max) {
        CertVerdict::Inapplicable
    } else {
        CertVerdict::CertifiedAtScale
    };
    report.witness = witness;
}

fn empty_record(target: &str, n_max: u32, region: &str, error: String) -> GuessRecord {
    GuessRecord {
        target: target.into(),
        table_n_max: n_max,
        support: Vec::new(),
        degree: 0,
        unknowns: 0,
        data_equations: 0,
        validation_equations: 0,
        data_window: (0, 0),
        validation_window: (0, 0),
        rejected_by_validation: 0,
        operators: Vec::new(),
        table_checks: Vec::new(),
        region: region.into(),
        leading_coefficients: Vec::new(),
        error: Some(error),
    }
}

fn guess_record(
    target: &str,
    n_max: u32,
    data: &dyn crate::guess::Grid,
    vars: &[&str],
    spec: &GuessSpec,
    region: &str,
    window: Option<&[(i64, i64)]>,
) -> GuessRecord {
    let outcome = if vars.len() == 1 {
        guess_univariate(data, spec)
    } else {
        guess_bivariate(data, [vars[0], vars[1]], spec)
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => return empty_record(target, n_max, region, e.to_string()),
    };
    let region_parsed = match Region::parse(region, vars) {
        Ok(r) => r,
        Err(e) => return empty_record(target, n_max, region, e.to_string()),
    };
    let mut leading = Vec::new();
    for op in &outcome.operators {
        match leading_nonvanishing(op, &region_parsed, window) {
            Ok(rep) => leading.push(rep),
            Err(e) => return empty_record(target, n_max, region, e.to_string()),
        }
    }
    let table_checks = outcome
        .operators
        .iter()
        .map(|op| {
            let chk = check_annihilates(op, data);
            (chk.points_checked, chk.failures.len())
        })
        .collect();
    GuessRecord {
        target: target.into(),
        table_n_max: n_max,
        support: outcome.support,
        degree: outcome.degree,
        unknowns: outcome.unknowns,
        data_equations: outcome.data_equations,
        validation_equations: outcome.validation_equations,
        data_window: outcome.data_window,
        validation_window: outcome.validation_window,
        rejected_by_validation: outcome.rejected_by_validation,
        operators: outcome.operators,
        table_checks,
        region: region.into(),
        leading_coefficients: leading,
        error: None,
    }
}

fn boundary_check(ops: &[RecurrenceOperator], c: &CTable<Rational>) -> BoundaryCheck {
    let grid = c.to_grid();
    let mut points = 0;
    let mut failures = Vec::new();
    for op in ops {
        for (p, v) in crate::guess::residuals(op, &grid) {
            let (n, i) = (p[0], p[1]);
            if i <= 0 || i >= 2 * n {
                points += 1;
                if !v.is_zero() {
                    failures.push(p);
                }
            }
        }
    }
    BoundaryCheck {
        operators: ops.len(),
        points_checked: points,
        failures,
    }
}

fn run_guesses(
    family: &MatrixFamily,
    plan: &GuessPlan,
    c: &CTable<Rational>,
    report: &mut CertificationReport,
) -> Result<()> {
    let c = c.truncated(plan.n_max);
    let n = c.n_max();
    let window = [(1, n as i64), (-4, 2 * n as i64 + 4)];
    if let Some(spec) = &plan.c {
        let rec = guess_record(
            "c(n,i)",
            n,
            &c.to_grid(),
            &["n", "i"],
            spec,
            &plan.c_region,
            Some(&window),
        );
        report.boundary = Some(boundary_check(&rec.operators, &c));
        report.guesses.push(rec);
    }
    if let Some(spec) = &plan.g {
        let g = row_sums(family, &c, 6)?;
        let rec = guess_record(
            "g(n,j)",
            n,
            &g.to_grid(),
            &["n", "j"],
            spec,
            &plan.g_region,
            Some(&window),
        );
        report.guesses.push(rec);
    }
    if let Some(spec) = &plan.r {
        let r = super::tables::ratio_sequence(family, &c)?;
        let seq = Sequence::new(1, r);
        report.guesses.push(guess_record(
            "r(n)",
            n,
            &seq,
            &["n"],
            spec,
            &plan.r_region,
            None,
        ));
    }
    Ok(())
}

/// Checks `Pf = cf` for a family by the cofactor identities, on
/// `n = 1..=n_max`, with optional recurrence guessing as supporting
/// evidence.
pub fn certify(
    family: &MatrixFamily,
    cf: &ClosedForm,
    opts: &CertifyOptions,
) -> Result<CertificationReport> {
    let mut report = CertificationReport {
        family: family.to_string(),
        closed_form: cf.description(),
        n_max: opts.n_max,
        verdict: CertVerdict::Refuted,
        witness: None,
        checks: Vec::new(),
        ratios: Vec::new(),
        pfaffians: Vec::new(),
        boundary: None,
        guesses: Vec::new(),
        diagnostics: Vec::new(),
    };
    let symbolic = family.is_symbolic() || cf.is_symbolic();
    if symbolic {
        let c = c_table::<RationalFunction>(family, opts.n_max)?;
        identity_checks(family, cf, opts.n_max, &c, &mut report)?;
        if opts.guess.is_some() {
            report
                .diagnostics
                .push("recurrence guessing skipped: entries are symbolic".into());
        }
        finish(&mut report, c.singular_at());
        return Ok(report);
    }
    let table_n = opts
        .guess
        .as_ref()
        .map_or(opts.n_max, |g| g.n_max.max(opts.n_max));
    let c = c_table::<Rational>(family, table_n)?;
    identity_checks(family, cf, opts.n_max, &c, &mut report)?;
    if let Some(plan) = &opts.guess {
        run_guesses(family, plan, &c, &mut report)?;
        if let Some(n) = c.singular_at().filter(|&n| n <= plan.n_max) {
            report.diagnostics.push(format!(
                "guessing tables stop before n = {n} (singular cofactor system)"
            ));
        }
    }
    finish(&mut report, c.singular_at());
    Ok(report)
}
