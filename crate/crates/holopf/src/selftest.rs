//! Seeded randomized cross-checks, runnable from the command line.

use std::fmt::Write as _;

use holopf_core::arith::{determinant, int};
use holopf_core::msf::{msf_q_minors, msf_q_product, verify_msf};
use holopf_core::pfaffian::{permutation_sign, permute, pf_eliminate, pf_laplace, pf_naive};
use holopf_core::{ExactMatrix, Rational, SkewMatrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cli::Progress;
use crate::error::{CliError, EXIT_MISMATCH, EXIT_OK};
use crate::report::Outcome;

#[derive(Debug, Serialize)]
struct CheckResult {
    name: &'static str,
    instances: u32,
    failures: u32,
    /// The first failing instance, rendered.
    first_failure: Option<String>,
}

struct Tally {
    result: CheckResult,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            result: CheckResult {
                name,
                instances: 0,
                failures: 0,
                first_failure: None,
            },
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.result.instances += 1;
        if !ok {
            self.result.failures += 1;
            self.result.first_failure.get_or_insert_with(describe);
        }
    }
}

fn random_skew(rng: &mut ChaCha8Rng, dim: usize) -> SkewMatrix<Rational> {
    SkewMatrix::from_fn(dim, |_, _| int(rng.gen_range(-9..=9))).expect("even dimension")
}

fn random_dense_skew(rng: &mut ChaCha8Rng, m: usize) -> ExactMatrix<Rational> {
    let mut a = ExactMatrix::zeros(m, m);
    for i in 0..m {
        for j in i + 1..m {
            let v = int(rng.gen_range(-5..=5));
            a.set(j, i, -v.clone());
            a.set(i, j, v);
        }
    }
    a
}

pub fn run(seed: u64, cases: u32, progress: &Progress) -> Result<Outcome, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    progress.note("Pfaffian algorithms");
    let mut agree = Tally::new("naive = eliminate = laplace (dims 2..8)");
    for dim in [2, 4, 6, 8] {
        for _ in 0..cases {
            let a = random_skew(&mut rng, dim);
            let e = pf_eliminate(&a);
            let ok = pf_naive(&a)? == e && pf_laplace(&a)? == e;
            agree.record(ok, || a.to_string());
        }
    }
    checks.push(agree.result);

    let mut squares = Tally::new("Pf^2 = det (dims 2..10)");
    for dim in [2, 4, 6, 8, 10] {
        for _ in 0..cases.div_ceil(4) {
            let a = random_skew(&mut rng, dim);
            let pf = pf_eliminate(&a);
            squares.record(pf.clone() * pf == determinant(&a.to_dense())?, || {
                a.to_string()
            });
        }
    }
    checks.push(squares.result);

    let mut perms = Tally::new("Pf(A^pi) = sgn(pi) Pf(A) (dim 6)");
    for _ in 0..cases {
        let a = random_skew(&mut rng, 6);
        let mut pi: Vec<usize> = (1..=6).collect();
        pi.shuffle(&mut rng);
        let lhs = pf_eliminate(&permute(&a, &pi)?);
        let rhs = pf_eliminate(&a) * int(i64::from(permutation_sign(&pi)?));
        perms.record(lhs == rhs, || format!("{pi:?}\n{a}"));
    }
    checks.push(perms.result);

    progress.note("minor summation");
    let mut msf = Tally::new("minor summation (2 rows, up to 6 columns)");
    let mut dual = Tally::new("T A T^T = 2x2-minor expansion");
    for _ in 0..cases {
        let m = rng.gen_range(2..=6);
        let t = ExactMatrix::from_fn(2, m, |_, _| int(rng.gen_range(-4..=4)));
        let a = random_dense_skew(&mut rng, m);
        dual.record(msf_q_product(&t, &a)? == msf_q_minors(&t, &a)?, || {
            format!("{t}\n{a}")
        });
        let rep = verify_msf(&t, &a)?;
        msf.record(rep.passed, || format!("{t}\n{a}"));
    }
    checks.push(dual.result);
    checks.push(msf.result);

    let failed: Vec<&CheckResult> = checks.iter().filter(|c| c.failures > 0).collect();
    let mut text = String::new();
    for c in &checks {
        let mark = if c.failures == 0 { "PASS" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{mark} {} ({} instances, {} failures)",
            c.name, c.instances, c.failures
        );
        if let Some(f) = &c.first_failure {
            let _ = writeln!(text, "  first failure:\n{f}");
        }
    }
    let summary = if failed.is_empty() {
        format!("selftest seed {seed}: all {} checks pass", checks.len())
    } else {
        format!(
            "selftest seed {seed}: {} of {} checks FAIL",
            failed.len(),
            checks.len()
        )
    };
    let _ = writeln!(text, "{summary}");
    let exit = if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    Ok(Outcome {
        result: serde_json::json!({ "seed": seed, "cases": cases, "checks": checks }),
        text,
        summary,
        exit,
    })
}
