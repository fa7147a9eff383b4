//! Command-line front end.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use holopf_core::ansatz::{
    c_table, certify, check_conjecture, ratio_sequence, row_sums, CertVerdict, CertificationReport,
    CertifyOptions, ClosedForm, GuessPlan, Variant,
};
use holopf_core::guess::{
    check_annihilates, guess_bivariate, guess_univariate, Grid, GuessOutcome, GuessSpec, Sequence,
    Support,
};
use holopf_core::msf::{verify_even_minor_sum, verify_msf_canonical, verify_okinawa};
use holopf_core::pfaffian::{pf_eliminate, pf_laplace, pf_naive, pf_polynomial, NAIVE_MAX_DIM};
use holopf_core::{MatrixFamily, Polynomial, Rational, SkewMatrix};
use serde_json::{json, Value};

use crate::error::{CliError, EXIT_DIAGNOSTIC, EXIT_MISMATCH, EXIT_OK};
use crate::formats::{self, GuessData};
use crate::report::{self, Config, Format, Outcome};

#[derive(Debug, Parser)]
#[command(
    name = "holopf",
    version,
    about = "Exact Pfaffians, cofactor recurrences and their certification"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here; without it, reports go to `$HOLOPF_OUT_DIR`
    /// when set, else to standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Suppress progress messages.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a Pfaffian exactly.
    Pfaffian(PfaffianArgs),
    /// Check a closed form for a family of Pfaffians on a finite range.
    Certify(CertifyArgs),
    /// Guess recurrences with polynomial coefficients from exact data.
    Guess(GuessArgs),
    /// Sum of minors of H(2n) over even partitions with even conjugate.
    MinorSum(MinorSumArgs),
    /// Check the hypergeometric addition formula on a grid.
    Okinawa(OkinawaArgs),
    /// Compare generalized Motzkin Pfaffians with the conjectured values.
    Conjecture(ConjectureArgs),
    /// Randomized cross-checks of the Pfaffian and minor summation code.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Naive,
    Eliminate,
    Laplace,
}

#[derive(Debug, Args)]
pub struct PfaffianArgs {
    /// Family descriptor, e.g. `motzkin` or `narayana:x=sym`.
    #[arg(long, requires = "dim", conflicts_with = "matrix")]
    pub family: Option<String>,
    #[arg(long)]
    pub dim: Option<usize>,
    /// Matrix file in JSON.
    #[arg(long, required_unless_present = "family")]
    pub matrix: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Algorithm::Eliminate)]
    pub algorithm: Algorithm,
    /// Run every algorithm and report whether they agree.
    #[arg(long)]
    pub all_algorithms: bool,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long)]
    pub family: String,
    /// `motzkin`, `delannoy`, `narayana` or `schroeder`; defaults to the family's own.
    #[arg(long)]
    pub closed_form: Option<String>,
    /// Any closed form accepted by `--closed-form`, or `prod(ak+b)`.
    #[arg(long, conflicts_with = "closed_form")]
    pub closed_form_override: Option<String>,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    /// Skip recurrence guessing.
    #[arg(long)]
    pub no_guess: bool,
    /// Length of the tables used for guessing.
    #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u32).range(4..))]
    pub guess_n_max: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    /// Cofactor table `c(n, i)` of `--family`.
    CTable,
    /// Row sums `g(n, j)` of `--family`.
    GTable,
    /// Ratio sequence `r(n)` of `--family`.
    RSequence,
    /// The number sequence behind `--family` (e.g. Motzkin numbers).
    Numbers,
    /// Data from `--data`.
    File,
}

#[derive(Debug, Args)]
pub struct GuessArgs {
    #[arg(long, value_enum)]
    pub source: Source,
    #[arg(long, required_if_eq_any = [("source", "c-table"), ("source", "g-table"), ("source", "r-sequence"), ("source", "numbers")])]
    pub family: Option<String>,
    #[arg(long, required_if_eq("source", "file"))]
    pub data: Option<PathBuf>,
    #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    /// Maximal order (univariate) or box size (bivariate).
    #[arg(long, conflicts_with = "support")]
    pub order: Option<u32>,
    /// Maximal total degree of the coefficients.
    #[arg(long, default_value_t = 3)]
    pub degree: u32,
    /// Smallest degree tried.
    #[arg(long, default_value_t = 0)]
    pub min_degree: u32,
    /// Shifts `"0,0; -1,0; -1,1"` or a box `"rect:1,1"`.
    #[arg(long)]
    pub support: Option<String>,
    /// Required excess of fitting equations over unknowns.
    #[arg(long, default_value_t = 10)]
    pub margin: usize,
}

#[derive(Debug, Args)]
pub struct MinorSumArgs {
    #[arg(default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=4))]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct OkinawaArgs {
    /// Grid runs over `0 <= i <= i_max`
    #[arg(long, default_value_t = 12)]
    pub i_max: u32,
    /// Grid runs over `0 <= j <= j_max`
    #[arg(long, default_value_t = 12)]
    pub j_max: u32,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(long, default_value = "i")]
    pub variant: String,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random instances per check.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    pub cases: u32,
}

/// Progress on standard error, unless quiet.
pub struct Progress {
    quiet: bool,
}

impl Progress {
    pub fn new(quiet: bool) -> Self {
        Progress { quiet }
    }

    pub fn note(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("[holopf] {}", msg.as_ref());
        }
    }
}

fn family(desc: &str) -> Result<MatrixFamily, CliError> {
    Ok(desc.parse::<MatrixFamily>()?)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn config_of(command: &Command) -> (&'static str, Config) {
    let mut c = Config::new();
    let mut put = |k: &str, v: Value| {
        c.insert(k.to_string(), v);
    };
    let name = match command {
        Command::Pfaffian(a) => {
            put("family", json!(a.family));
            put("dim", json!(a.dim));
            put(
                "matrix",
                json!(a.matrix.as_ref().map(|p| p.display().to_string())),
            );
            put(
                "algorithm",
                json!(format!("{:?}", a.algorithm).to_lowercase()),
            );
            put("all_algorithms", json!(a.all_algorithms));
            "pfaffian"
        }
        Command::Certify(a) => {
            put("family", json!(a.family));
            put("closed_form", json!(a.closed_form));
            put("closed_form_override", json!(a.closed_form_override));
            put("n_max", json!(a.n_max));
            put("guess", json!(!a.no_guess));
            put("guess_n_max", json!(a.guess_n_max));
            "certify"
        }
        Command::Guess(a) => {
            put(
                "source",
                json!(a
                    .source
                    .to_possible_value()
                    .map(|v| v.get_name().to_string())),
            );
            put("family", json!(a.family));
            put(
                "data",
                json!(a.data.as_ref().map(|p| p.display().to_string())),
            );
            put("n_max", json!(a.n_max));
            put("order", json!(a.order));
            put("degree", json!(a.degree));
            put("min_degree", json!(a.min_degree));
            put("support", json!(a.support));
            put("margin", json!(a.margin));
            "guess"
        }
        Command::MinorSum(a) => {
            put("n", json!(a.n));
            "minor-sum"
        }
        Command::Okinawa(a) => {
            put("i_max", json!(a.i_max));
            put("j_max", json!(a.j_max));
            "okinawa"
        }
        Command::Conjecture(a) => {
            put("k", json!(a.k));
            put("variant", json!(a.variant));
            put("n_max", json!(a.n_max));
            "conjecture"
        }
        Command::Selftest(a) => {
            put("cases", json!(a.cases));
            "selftest"
        }
    };
    let seed = match command {
        Command::Selftest(a) => a.seed,
        _ => 0,
    };
    c.insert("seed".into(), json!(seed));
    (name, c)
}

/// Runs a parsed command line; returns the process exit status.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    let progress = Progress::new(cli.common.quiet);
    let (name, config) = config_of(&cli.command);
    let outcome = match &cli.command {
        Command::Pfaffian(a) => cmd_pfaffian(a)?,
        Command::Certify(a) => cmd_certify(a, &progress)?,
        Command::Guess(a) => cmd_guess(a, &progress)?,
        Command::MinorSum(a) => cmd_minor_sum(a, &progress)?,
        Command::Okinawa(a) => cmd_okinawa(a)?,
        Command::Conjecture(a) => cmd_conjecture(a, &progress)?,
        Command::Selftest(a) => crate::selftest::run(a.seed, a.cases, &progress)?,
    };
    let rendered = report::render(name, &config, &outcome, cli.common.format);
    let dest = report::destination(cli.common.out.as_deref(), name, cli.common.format);
    report::emit(&rendered, dest.as_deref(), &outcome.summary)?;
    Ok(outcome.exit)
}

fn as_rational(m: &SkewMatrix<Polynomial>) -> Option<SkewMatrix<Rational>> {
    if m.upper_entries().any(|(_, _, p)| !p.is_constant()) {
        return None;
    }
    SkewMatrix::from_fn(m.dim(), |i, j| {
        m.upper(i, j).constant_value().expect("checked constant")
    })
    .ok()
}

fn pf_with(a: &SkewMatrix<Polynomial>, alg: Algorithm) -> Result<String, CliError> {
    Ok(match (as_rational(a), alg) {
        (Some(r), Algorithm::Naive) => pf_naive(&r)?.to_string(),
        (Some(r), Algorithm::Eliminate) => pf_eliminate(&r).to_string(),
        (Some(r), Algorithm::Laplace) => pf_laplace(&r)?.to_string(),
        (None, Algorithm::Naive) => pf_naive(a)?.to_string(),
        (None, Algorithm::Eliminate) => pf_polynomial(a).to_string(),
        (None, Algorithm::Laplace) => pf_laplace(a)?.to_string(),
    })
}

fn cmd_pfaffian(a: &PfaffianArgs) -> Result<Outcome, CliError> {
    let m = match (&a.family, &a.matrix) {
        (Some(f), _) => {
            let fam = family(f)?;
            let dim = a
                .dim
                .ok_or_else(|| CliError::Usage("--family needs --dim".into()))?;
            SkewMatrix::from_fn(dim, |i, j| fam.entry(i, j))?
        }
        (None, Some(p)) => formats::parse_matrix(&read(p)?)?,
        (None, None) => {
            return Err(CliError::Usage(
                "give --family and --dim, or --matrix".into(),
            ))
        }
    };
    if !a.all_algorithms {
        let v = pf_with(&m, a.algorithm)?;
        return Ok(Outcome {
            result: json!({ "dim": m.dim(), "algorithm": format!("{:?}", a.algorithm).to_lowercase(), "value": v }),
            text: format!("{v}\n"),
            summary: v,
            exit: EXIT_OK,
        });
    }
    let mut values = serde_json::Map::new();
    let mut text = String::new();
    let mut seen: Vec<String> = Vec::new();
    for alg in [Algorithm::Naive, Algorithm::Eliminate, Algorithm::Laplace] {
        let key = format!("{alg:?}").to_lowercase();
        if alg == Algorithm::Naive && m.dim() > NAIVE_MAX_DIM {
            values.insert(key.clone(), Value::Null);
            let _ = writeln!(text, "{key}: skipped (dimension above {NAIVE_MAX_DIM})");
            continue;
        }
        let v = pf_with(&m, alg)?;
        let _ = writeln!(text, "{key}: {v}");
        values.insert(key, json!(v));
        seen.push(v);
    }
    let agree = seen.windows(2).all(|w| w[0] == w[1]);
    let _ = writeln!(text, "agree: {}", if agree { "yes" } else { "NO" });
    Ok(Outcome {
        result: json!({ "dim": m.dim(), "values": values, "value": seen.last(), "agree": agree }),
        summary: format!(
            "{} ({})",
            seen.last().cloned().unwrap_or_default(),
            if agree { "all agree" } else { "DISAGREE" }
        ),
        text,
        exit: if agree { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn certification_text(rep: &CertificationReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "family:      {}", rep.family);
    let _ = writeln!(t, "closed form: {}", rep.closed_form);
    let _ = writeln!(
        t,
        "verdict:     {} (n <= {})",
        rep.verdict.as_str(),
        rep.n_max
    );
    if let Some(w) = &rep.witness {
        let idx = w.index.map(|i| format!(", index {i}")).unwrap_or_default();
        let _ = writeln!(
            t,
            "witness:     {} at n = {}{idx}: expected {}, got {}",
            w.check, w.n, w.expected, w.actual
        );
    }
    let _ = writeln!(t, "\nchecks:");
    for c in &rep.checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        let _ = writeln!(
            t,
            "  [{mark}] {:<18} {}  (n = {}..{})",
            c.name, c.statement, c.n_first, c.n_last
        );
    }
    let _ = writeln!(t, "\nratios r(1..):      {}", rep.ratios.join(", "));
    let _ = writeln!(t, "pfaffians b(0..):   {}", rep.pfaffians.join(", "));
    for g in &rep.guesses {
        let _ = writeln!(t, "\nguess {} on n <= {}:", g.target, g.table_n_max);
        if let Some(e) = &g.error {
            let _ = writeln!(t, "  not run: {e}");
            continue;
        }
        let _ = writeln!(
            t,
            "  degree {}, {} unknowns, {} fitting / {} validation equations, {} operator(s)",
            g.degree,
            g.unknowns,
            g.data_equations,
            g.validation_equations,
            g.operators.len()
        );
        for (k, op) in g.operators.iter().enumerate() {
            let _ = writeln!(t, "  {op}");
            if let Some((pts, bad)) = g.table_checks.get(k) {
                let _ = writeln!(t, "    residual: {bad} nonzero of {pts} points");
            }
            if let Some(lc) = g.leading_coefficients.get(k) {
                let state = if lc.nonvanishing() {
                    "nonvanishing"
                } else {
                    "VANISHES"
                };
                let _ = writeln!(
                    t,
                    "    leading coefficient on {}: {state} ({:?})",
                    g.region, lc.verdict
                );
            }
        }
    }
    if let Some(b) = &rep.boundary {
        let _ = writeln!(
            t,
            "\nboundary: {} points, {} failures",
            b.points_checked,
            b.failures.len()
        );
    }
    for d in &rep.diagnostics {
        let _ = writeln!(t, "note: {d}");
    }
    t
}

fn cmd_certify(a: &CertifyArgs, progress: &Progress) -> Result<Outcome, CliError> {
    let fam = family(&a.family)?;
    let cf = match a
        .closed_form_override
        .as_deref()
        .or(a.closed_form.as_deref())
    {
        Some(text) => ClosedForm::parse(text, &fam)?,
        None => ClosedForm::for_family(&fam).ok_or_else(|| {
            CliError::Usage(format!(
                "no default closed form for {fam}; pass --closed-form"
            ))
        })?,
    };
    let opts = if a.no_guess || fam.is_symbolic() {
        CertifyOptions::without_guessing(a.n_max)
    } else {
        CertifyOptions {
            n_max: a.n_max,
            guess: Some(GuessPlan {
                n_max: a.guess_n_max.max(a.n_max),
                ..GuessPlan::default()
            }),
        }
    };
    progress.note(format!(
        "certifying {fam} against {} for n <= {}",
        cf.description(),
        a.n_max
    ));
    if opts.guess.is_some() {
        progress.note(format!(
            "guessing recurrences on tables up to n = {}",
            a.guess_n_max.max(a.n_max)
        ));
    }
    let rep = certify(&fam, &cf, &opts)?;
    let exit = match rep.verdict {
        CertVerdict::CertifiedAtScale => EXIT_OK,
        CertVerdict::Refuted => EXIT_MISMATCH,
        CertVerdict::Inapplicable => EXIT_DIAGNOSTIC,
    };
    if let Some(w) = &rep.witness {
        eprintln!(
            "witness: {} fails at n = {}: expected {}, got {}",
            w.check, w.n, w.expected, w.actual
        );
    }
    Ok(Outcome {
        result: serde_json::to_value(&rep)?,
        text: certification_text(&rep),
        summary: format!(
            "{}: {} (n <= {})",
            rep.family,
            rep.verdict.as_str(),
            rep.n_max
        ),
        exit,
    })
}

fn univariate_support(a: &GuessArgs) -> Result<Support, CliError> {
    match &a.support {
        Some(s) => formats::parse_support(s, 1),
        None => Ok(Support::MaxOrder(a.order.unwrap_or(2))),
    }
}

fn bivariate_support(a: &GuessArgs, default: Option<Support>) -> Result<Support, CliError> {
    match (&a.support, a.order, default) {
        (Some(s), _, _) => formats::parse_support(s, 2),
        (None, Some(o), _) => Ok(Support::Rectangle(vec![o, o])),
        (None, None, Some(d)) => Ok(d),
        (None, None, None) => Err(CliError::Usage(
            "bivariate data needs --support or --order".into(),
        )),
    }
}

fn default_support(spec: Option<GuessSpec>) -> Option<Support> {
    spec.map(|s| s.support)
}

fn guess_json(out: &GuessOutcome, data: &dyn Grid) -> Result<(Value, String), CliError> {
    let mut text = String::new();
    let mut ops = Vec::new();
    let _ = writeln!(
        text,
        "support {:?}, degree {}: {} unknowns, {} fitting equations (n in {:?}), {} validation equations (n in {:?})",
        out.support,
        out.degree,
        out.unknowns,
        out.data_equations,
        out.data_window,
        out.validation_equations,
        out.validation_window
    );
    if out.rejected_by_validation > 0 {
        let _ = writeln!(
            text,
            "validation removed {} spurious solution(s)",
            out.rejected_by_validation
        );
    }
    for op in &out.operators {
        let chk = check_annihilates(op, data);
        let _ = writeln!(
            text,
            "{op}\n  residual: {} nonzero of {} points",
            chk.failures.len(),
            chk.points_checked
        );
        ops.push(json!({
            "operator": serde_json::to_value(op)?,
            "text": op.to_string(),
            "points_checked": chk.points_checked,
            "nonzero_residuals": chk.failures.len(),
        }));
    }
    if out.operators.is_empty() {
        let _ = writeln!(text, "no operator of this shape fits");
    }
    let v = json!({
        "operators": ops,
        "support": out.support,
        "degree": out.degree,
        "unknowns": out.unknowns,
        "data_equations": out.data_equations,
        "validation_equations": out.validation_equations,
        "data_window": out.data_window,
        "validation_window": out.validation_window,
        "rejected_by_validation": out.rejected_by_validation,
    });
    Ok((v, text))
}

/// `s(n)` for `n >= 0`, the sequence the family's entries are built from.
fn family_numbers(fam: &MatrixFamily, n_max: u32) -> Result<Sequence, CliError> {
    let offset = match fam {
        MatrixFamily::Motzkin | MatrixFamily::Delannoy => 3,
        _ => 2,
    };
    let values = (0..=i64::from(n_max))
        .map(|n| {
            fam.base(n + offset).constant_value().ok_or_else(|| {
                CliError::Usage("numbers of a symbolic family are not rational".into())
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Sequence::new(0, values))
}

fn cmd_guess(a: &GuessArgs, progress: &Progress) -> Result<Outcome, CliError> {
    let plan = GuessPlan::default();
    let spec_for = |support: Support| {
        let mut s = GuessSpec::new(support, a.degree);
        s.margin = a.margin;
        s.min_degree = a.min_degree;
        s
    };
    let fam = a.family.as_deref().map(family).transpose()?;
    if fam.as_ref().is_some_and(MatrixFamily::is_symbolic) {
        return Err(CliError::Usage(
            "guessing needs a family with rational entries".into(),
        ));
    }
    let (data, vars): (GuessData, Option<[&str; 2]>) = match a.source {
        Source::CTable | Source::GTable | Source::RSequence => {
            let fam = fam.as_ref().expect("clap enforces --family");
            progress.note(format!(
                "computing the cofactor table of {fam} up to n = {}",
                a.n_max
            ));
            let c = c_table::<Rational>(fam, a.n_max)?;
            if let Some(n) = c.singular_at() {
                progress.note(format!(
                    "cofactor system singular at n = {n}; table stops before it"
                ));
            }
            match a.source {
                Source::CTable => (GuessData::Table(c.to_grid()), Some(["n", "i"])),
                Source::GTable => (
                    GuessData::Table(row_sums(fam, &c, 6)?.to_grid()),
                    Some(["n", "j"]),
                ),
                _ => (
                    GuessData::Sequence(Sequence::new(1, ratio_sequence(fam, &c)?)),
                    None,
                ),
            }
        }
        Source::Numbers => (
            GuessData::Sequence(family_numbers(
                fam.as_ref().expect("clap enforces --family"),
                a.n_max,
            )?),
            None,
        ),
        Source::File => {
            let path = a.data.as_ref().expect("clap enforces --data");
            match formats::parse_guess_data(&read(path)?)? {
                d @ GuessData::Sequence(_) => (d, None),
                d @ GuessData::Table(_) => (d, Some(["n", "i"])),
            }
        }
    };
    let (out, grid): (GuessOutcome, &dyn Grid) = match (&data, vars) {
        (GuessData::Sequence(s), _) => (guess_univariate(s, &spec_for(univariate_support(a)?))?, s),
        (GuessData::Table(t), Some(vars)) => {
            let default = match a.source {
                Source::CTable => default_support(plan.c),
                Source::GTable => default_support(plan.g),
                _ => None,
            };
            let spec = spec_for(bivariate_support(a, default)?);
            progress.note("fitting");
            (guess_bivariate(t, vars, &spec)?, t)
        }
        (GuessData::Table(_), None) => unreachable!("tables always carry variable names"),
    };
    let (mut result, text) = guess_json(&out, grid)?;
    result["data"] = formats::guess_data_json(&data);
    let found = !out.operators.is_empty();
    Ok(Outcome {
        result,
        summary: if found {
            format!(
                "{} operator(s) of degree {}",
                out.operators.len(),
                out.degree
            )
        } else {
            "no operator found".into()
        },
        text,
        exit: if found { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn cmd_minor_sum(a: &MinorSumArgs, progress: &Progress) -> Result<Outcome, CliError> {
    let n = a.n as usize;
    progress.note(format!("summing minors of H({})", 2 * n));
    let sums = verify_even_minor_sum(n)?;
    progress.note("checking the minor summation formula on every column set");
    let msf = verify_msf_canonical(n)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{:<16} {:<24} {:>10} {:>10}",
        "partition", "columns", "minor", "sum"
    );
    for term in &sums.terms {
        let _ = writeln!(
            text,
            "{:<16} {:<24} {:>10} {:>10}",
            term.partition.to_string(),
            format!("{:?}", term.columns.indices()),
            term.determinant.to_string(),
            term.running_sum.to_string()
        );
    }
    let _ = writeln!(
        text,
        "\nPfaffian of ((j-i) M(i+j-3)) of order {}: {}",
        2 * n,
        sums.pfaffian
    );
    let _ = writeln!(
        text,
        "minor summation over {} columns: lhs {} = Pf(Q) {}, Q is the Motzkin matrix: {}",
        msf.columns, msf.lhs_all_subsets, msf.pf_q, msf.q_is_motzkin
    );
    let passed = sums.passed && msf.passed;
    let summary = format!(
        "{} = {}, {}",
        sums.lhs,
        sums.product,
        if passed { "PASS" } else { "FAIL" }
    );
    let _ = writeln!(text, "{summary}");
    Ok(Outcome {
        result: json!({ "sum": serde_json::to_value(&sums)?, "minor_summation": serde_json::to_value(&msf)?, "passed": passed }),
        text,
        summary,
        exit: if passed { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn cmd_okinawa(a: &OkinawaArgs) -> Result<Outcome, CliError> {
    let rep = verify_okinawa(a.i_max, a.j_max);
    let summary = format!(
        "{}/{} {}",
        rep.passed,
        rep.checked,
        if rep.all_passed() { "PASS" } else { "FAIL" }
    );
    let mut text = String::new();
    for f in &rep.failures {
        let _ = writeln!(text, "i = {}, j = {}: {} != {}", f.i, f.j, f.lhs, f.rhs);
    }
    let _ = writeln!(text, "{summary}");
    Ok(Outcome {
        result: serde_json::to_value(&rep)?,
        text,
        summary,
        exit: if rep.all_passed() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
    })
}

fn cmd_conjecture(a: &ConjectureArgs, progress: &Progress) -> Result<Outcome, CliError> {
    let variant: Variant = a.variant.parse()?;
    progress.note(format!(
        "Pfaffians of {} for n <= {}",
        variant.family(a.k),
        a.n_max
    ));
    let rep = check_conjecture(a.k, a.n_max, variant)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{:>3} {:>24} {:>24} {:>10} {:>6}",
        "n", "Pfaffian", "predicted", "case", "match"
    );
    for r in &rep.rows {
        let m = if r.matches {
            "yes"
        } else if r.matches_up_to_sign {
            "sign"
        } else {
            "NO"
        };
        let _ = writeln!(
            text,
            "{:>3} {:>24} {:>24} {:>10} {:>6}",
            r.n,
            r.pfaffian.to_string(),
            r.predicted.to_string(),
            format!("{:?}", r.case),
            m
        );
    }
    let summary = if rep.all_match {
        format!("all {} values match (verified at scale)", rep.rows.len())
    } else {
        let bad = rep.rows.iter().filter(|r| !r.matches).count();
        format!(
            "{bad} of {} values differ{}",
            rep.rows.len(),
            if rep.all_match_up_to_sign {
                " (all agree up to sign)"
            } else {
                ""
            }
        )
    };
    let _ = writeln!(text, "{summary}");
    Ok(Outcome {
        result: serde_json::to_value(&rep)?,
        text,
        summary,
        exit: if rep.all_match {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
    })
}
