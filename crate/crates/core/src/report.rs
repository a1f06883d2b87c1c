//! Batch command surface: every module reachable from one `lex` invocation,
//! emitting a machine-readable JSON report (or its CSV rendering).
//!
//! Exit-code contract: 0 when every check passes, 1 when some check fails,
//! 2 on usage or input errors (including exhausted enumeration budgets).
//! Reports carry no timestamps and iterate only ordered maps, so a fixed
//! command line and seed produce byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::aspec::{self, AspecModel};
use crate::aws;
use crate::codes;
use crate::error::{Error, Result};
use crate::measures::{self, CylinderDistribution};
use crate::subshift::{self, CountMethod, GapFunction, SubshiftModel};
use crate::util::rational_to_f64;
use crate::word::{hamming, LetterSet, Word};

/// Candidate-extension budget used when `LEX_BUDGET` is unset.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// One verified statement inside a report.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

/// The single JSON document every command emits.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub tables: BTreeMap<String, String>,
}

impl Report {
    fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            params: BTreeMap::new(),
            seed: None,
            checks: Vec::new(),
            tables: BTreeMap::new(),
        }
    }

    fn param(&mut self, key: &str, value: impl Display) {
        self.params.insert(key.to_string(), value.to_string());
    }

    fn check(&mut self, name: &str, pass: bool, details: impl Display) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            details: details.to_string(),
        });
    }

    fn table(&mut self, name: &str, csv: String) {
        self.tables.insert(name.to_string(), csv);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// What `run` hands back to the process shell (or a test).
#[derive(Debug)]
pub struct RunResult {
    pub report: Option<Report>,
    /// Exactly what should land on stdout.
    pub output: String,
    pub exit_code: i32,
}

#[derive(Parser, Debug)]
#[command(
    name = "lex",
    about = "Exact tools for constrained-word languages: enumeration, counting, \
             covering codes, gluing, repair, and cylinder measures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the rendered report to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    Full,
    Aws,
    Aspec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Dp,
    Formula,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    T,
    U,
    V,
}

/// Flags shared by every command that targets a subshift model.
#[derive(Args, Debug, Clone)]
struct ModelArgs {
    /// Model family.
    #[arg(long, value_enum)]
    model: ModelKind,
    /// Letter-magnitude bound N.
    #[arg(long = "N", default_value_t = 2)]
    magnitude: u32,
    /// Run-length threshold (aspec only; required there).
    #[arg(long)]
    ell: Option<u32>,
    /// Give the full model a zero letter.
    #[arg(long)]
    include_zero: bool,
    /// Wrap the model in its k-th higher power.
    #[arg(long, default_value_t = 1)]
    k: usize,
}

impl ModelArgs {
    fn build(&self) -> Result<SubshiftModel> {
        let base = match self.model {
            ModelKind::Full => SubshiftModel::full(self.magnitude, self.include_zero)?,
            ModelKind::Aws => SubshiftModel::aws(self.magnitude)?,
            ModelKind::Aspec => {
                let ell = self.ell.ok_or_else(|| {
                    Error::InvalidArgument("the aspec model needs --ell".into())
                })?;
                SubshiftModel::aspec(self.magnitude, ell)?
            }
        };
        subshift::higher_power(base, self.k)
    }
}

impl MethodArg {
    fn single(self) -> Option<CountMethod> {
        match self {
            MethodArg::Brute => Some(CountMethod::Brute),
            MethodArg::Dp => Some(CountMethod::Dp),
            MethodArg::Formula => Some(CountMethod::Formula),
            MethodArg::All => None,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every length-n word of a model's language.
    Enumerate {
        #[command(flatten)]
        model: ModelArgs,
        /// Word length.
        #[arg(long)]
        n: usize,
    },
    /// Count a language level by one method or by all supported ones.
    Count {
        #[command(flatten)]
        model: ModelArgs,
        /// Word length.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
    },
    /// Exact counts with per-level entropy upper bounds up to n-max.
    Entropy {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value = "dp")]
        method: MethodArg,
    },
    /// Glue seeded member tuples of the zero-gap model with minimal gaps.
    GlueAws {
        #[arg(long = "N", default_value_t = 2)]
        magnitude: u32,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sweep the higher-power gap inequality in exact integer arithmetic.
    HpInequality {
        /// Constant C as a rational p/q (or a bare integer).
        #[arg(long = "C", default_value = "1/1")]
        c: String,
        #[arg(long = "n-max", default_value_t = 1_000_000)]
        n_max: u64,
    },
    /// Repair seeded concatenations into the run-family model.
    RepairAspec {
        #[arg(long = "N", default_value_t = 2)]
        magnitude: u32,
        #[arg(long, default_value_t = 3)]
        ell: u32,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact rational bracket for the run-family gap-density series.
    Alpha {
        #[arg(long = "N", default_value_t = 10)]
        magnitude: u32,
        #[arg(long, default_value_t = 32)]
        ell: u32,
        /// Tail cutoff of the series (must exceed ell).
        #[arg(long, default_value_t = 64)]
        cutoff: usize,
    },
    /// Check the language-count ceiling implied by the gap density.
    EntropyBound {
        #[arg(long = "N", default_value_t = 10)]
        magnitude: u32,
        #[arg(long, default_value_t = 32)]
        ell: u32,
        #[arg(long, default_value_t = 64)]
        cutoff: usize,
        #[arg(long = "n-max", default_value_t = 200)]
        n_max: usize,
    },
    /// Build, verify, thin, or demonstrate covering codes.
    Codes {
        #[command(subcommand)]
        action: CodesAction,
    },
    /// Cylinder distributions: exact entropy, support counts, disjointness,
    /// seeded sampling.
    Measures {
        /// Number of positive letters.
        #[arg(long, default_value_t = 10)]
        a: u32,
        #[arg(long, default_value_t = 4)]
        level: usize,
        /// Sample length for the empirical-frequency check.
        #[arg(long, default_value_t = 10_000)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the whole desk-scale verification suite.
    Verify {
        /// What to verify; only "all" is defined.
        target: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CodesAction {
    /// Construct a code over {0,…,a-1} and export its members.
    Build {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Alphabet size.
        #[arg(long, default_value_t = 2)]
        a: u32,
        /// Word length.
        #[arg(long)]
        n: usize,
    },
    /// Exhaustively check the family's spanning radius.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 2)]
        a: u32,
        #[arg(long)]
        n: usize,
    },
    /// Extract a pairwise-distance-3 subset from the cube and seeded subsets.
    Separate {
        #[arg(long, default_value_t = 2)]
        a: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Additional random word sets to thin.
        #[arg(long, default_value_t = 10)]
        trials: u64,
    },
    /// Reproduce the worked single-letter repair example.
    RepairExample,
}

/// Parses and executes one command line (`argv[0]` is the binary name).
/// Never panics on bad input and never exits the process.
pub fn run<'a>(argv: impl IntoIterator<Item = &'a str>) -> RunResult {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return RunResult {
                report: None,
                output: e.render().to_string(),
                exit_code: code,
            };
        }
    };
    let budget = match budget_from(std::env::var("LEX_BUDGET").ok().as_deref()) {
        Ok(b) => b,
        Err(e) => {
            return RunResult {
                report: None,
                output: format!("error: {e}\n"),
                exit_code: 2,
            }
        }
    };
    let report = match dispatch(cli.command, budget) {
        Ok(report) => report,
        Err(e) => {
            return RunResult {
                report: None,
                output: format!("error: {e}\n"),
                exit_code: 2,
            }
        }
    };
    let output = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(&report),
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &output) {
            return RunResult {
                report: Some(report),
                output: format!("error: writing {}: {e}\n", path.display()),
                exit_code: 2,
            };
        }
    }
    let exit_code = if report.all_pass() { 0 } else { 1 };
    RunResult {
        report: Some(report),
        output,
        exit_code,
    }
}

/// Resolves the enumeration budget from an optional `LEX_BUDGET` value.
fn budget_from(env_value: Option<&str>) -> Result<u64> {
    match env_value {
        None => Ok(DEFAULT_BUDGET),
        Some(raw) => raw.trim().parse::<u64>().map_err(|_| {
            Error::InvalidArgument(format!("LEX_BUDGET must be an unsigned integer, got {raw:?}"))
        }),
    }
}

fn render_csv(report: &Report) -> String {
    let mut out = format!("# command: {}\n", report.command);
    for (key, value) in &report.params {
        out.push_str(&format!("# param {key} = {value}\n"));
    }
    if let Some(seed) = report.seed {
        out.push_str(&format!("# seed = {seed}\n"));
    }
    for check in &report.checks {
        out.push_str(&format!(
            "# check {}: {} — {}\n",
            check.name,
            if check.pass { "pass" } else { "FAIL" },
            check.details
        ));
    }
    for (name, csv) in &report.tables {
        out.push_str(&format!("# table {name}\n"));
        out.push_str(csv);
        if !csv.ends_with('\n') {
            out.push('\n');
        }
    }
    out
}

fn dispatch(command: Command, budget: u64) -> Result<Report> {
    match command {
        Command::Enumerate { model, n } => cmd_enumerate(&model, n, budget),
        Command::Count { model, n, method } => cmd_count(&model, n, method, budget),
        Command::Entropy {
            model,
            n_max,
            method,
        } => cmd_entropy(&model, n_max, method, budget),
        Command::GlueAws {
            magnitude,
            trials,
            seed,
        } => cmd_glue_aws(magnitude, trials, seed),
        Command::HpInequality { c, n_max } => cmd_hp_inequality(&c, n_max),
        Command::RepairAspec {
            magnitude,
            ell,
            trials,
            seed,
        } => cmd_repair_aspec(magnitude, ell, trials, seed),
        Command::Alpha {
            magnitude,
            ell,
            cutoff,
        } => cmd_alpha(magnitude, ell, cutoff),
        Command::EntropyBound {
            magnitude,
            ell,
            cutoff,
            n_max,
        } => cmd_entropy_bound(magnitude, ell, cutoff, n_max),
        Command::Codes { action } => match action {
            CodesAction::Build { family, a, n } => cmd_codes_build(family, a, n, budget),
            CodesAction::Verify { family, a, n } => cmd_codes_verify(family, a, n, budget),
            CodesAction::Separate { a, n, seed, trials } => {
                cmd_codes_separate(a, n, seed, trials, budget)
            }
            CodesAction::RepairExample => cmd_codes_repair_example(),
        },
        Command::Measures {
            a,
            level,
            length,
            seed,
        } => cmd_measures(a, level, length, seed),
        Command::Verify { target, seed } => {
            if target != "all" {
                return Err(Error::InvalidArgument(format!(
                    "unknown verify target {target:?}; only \"all\" is defined"
                )));
            }
            cmd_verify_all(seed, budget)
        }
    }
}

fn cmd_enumerate(model_args: &ModelArgs, n: usize, budget: u64) -> Result<Report> {
    let model = model_args.build()?;
    let words = model.enumerate_language(n, budget)?;
    let mut report = Report::new("enumerate");
    report.param("model", model.describe());
    report.param("n", n);
    report.param("budget", budget);
    let mut csv = String::from("word\n");
    for w in &words {
        csv.push_str(&format!("{w}\n"));
    }
    report.table("language", csv);
    report.check("enumerated", true, format!("|L_{n}| = {}", words.len()));
    Ok(report)
}

fn cmd_count(model_args: &ModelArgs, n: usize, method: MethodArg, budget: u64) -> Result<Report> {
    let model = model_args.build()?;
    let mut report = Report::new("count");
    report.param("model", model.describe());
    report.param("n", n);
    match method.single() {
        Some(m) => {
            let count = model.count_language(n, m, budget)?;
            report.param("method", m);
            report.check("count", true, format!("|L_{n}| = {count} via {m}"));
        }
        None => {
            let methods = model.supported_methods();
            let mut counts = Vec::new();
            for &m in &methods {
                counts.push(model.count_language(n, m, budget)?);
            }
            report.param("method", "all");
            let agree = counts.windows(2).all(|pair| pair[0] == pair[1]);
            let values: Vec<String> = counts.iter().map(BigUint::to_string).collect();
            let names: Vec<String> = methods.iter().map(CountMethod::to_string).collect();
            report.check(
                "counts-agree",
                agree,
                format!("{} via {}", values.join("/"), names.join("/")),
            );
        }
    }
    Ok(report)
}

fn cmd_entropy(
    model_args: &ModelArgs,
    n_max: usize,
    method: MethodArg,
    budget: u64,
) -> Result<Report> {
    let method = method.single().ok_or_else(|| {
        Error::InvalidArgument("entropy tables use a single method, not --method all".into())
    })?;
    let model = model_args.build()?;
    let table = model.entropy_table(n_max, method, budget)?;
    let mut report = Report::new("entropy");
    report.param("model", model.describe());
    report.param("n_max", n_max);
    report.param("method", method);
    report.check(
        "rate-nonincreasing",
        table.is_rate_nonincreasing(),
        format!(
            "first rate {}, last rate {}",
            table.rows.first().map(|r| r.log_rate).unwrap_or(0.0),
            table.rows.last().map(|r| r.log_rate).unwrap_or(0.0)
        ),
    );
    report.check(
        "subadditive",
        table.is_subadditive(),
        "|L_(m+n)| ≤ |L_m|·|L_n| for all in-range pairs",
    );
    report.table("entropy", table.to_csv());
    Ok(report)
}

fn cmd_glue_aws(magnitude: u32, trials: u64, seed: u64) -> Result<Report> {
    if trials == 0 {
        return Err(Error::InvalidArgument("glue checks need at least 1 trial".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut members = 0u64;
    let mut max_len = 0usize;
    let mut example_csv = String::from("trial,lengths,gaps,glued\n");
    for trial in 0..trials {
        let k = rng.gen_range(2..=5usize);
        let words: Vec<Word> = (0..k)
            .map(|_| aws::sample_member(magnitude, rng.gen_range(1..=20usize), &mut rng))
            .collect();
        let gaps: Vec<u64> = words[..k - 1]
            .iter()
            .map(|w| aws::gap_f(w.len() as u64))
            .collect();
        let glued = aws::glue(magnitude, &words, &gaps)?;
        if aws::aws_is_member(magnitude, &glued)? {
            members += 1;
        }
        max_len = max_len.max(glued.len());
        if trial < 3 {
            let lengths: Vec<String> = words.iter().map(|w| w.len().to_string()).collect();
            let gap_strs: Vec<String> = gaps.iter().map(u64::to_string).collect();
            example_csv.push_str(&format!(
                "{trial},{},{},{glued}\n",
                lengths.join(" "),
                gap_strs.join(" ")
            ));
        }
    }
    let mut report = Report::new("glue-aws");
    report.param("N", magnitude);
    report.param("trials", trials);
    report.seed = Some(seed);
    report.check(
        "glued-members",
        members == trials,
        format!("{members}/{trials} glued words are members; longest output {max_len}"),
    );
    report.table("examples", example_csv);
    Ok(report)
}

fn parse_rational(raw: &str) -> Result<(u64, u64)> {
    let (num, den) = match raw.split_once('/') {
        Some((p, q)) => (p, q),
        None => (raw, "1"),
    };
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidArgument(format!("{raw:?} is not a rational p/q")))
    };
    Ok((parse(num)?, parse(den)?))
}

fn cmd_hp_inequality(c: &str, n_max: u64) -> Result<Report> {
    let (c_num, c_den) = parse_rational(c)?;
    let check = aws::hp_gap_inequality_check(c_num, c_den, n_max)?;
    let mut report = Report::new("hp-inequality");
    report.param("C", format!("{c_num}/{c_den}"));
    report.param("k", check.k);
    report.param("n_max", n_max);
    report.check(
        "inequality",
        check.ok(),
        format!(
            "violations = {}, max lhs = {}",
            check.violations.len(),
            check.max_lhs
        ),
    );
    if !check.violations.is_empty() {
        let mut csv = String::from("n\n");
        for n in &check.violations {
            csv.push_str(&format!("{n}\n"));
        }
        report.table("violations", csv);
    }
    Ok(report)
}

fn cmd_repair_aspec(magnitude: u32, ell: u32, trials: u64, seed: u64) -> Result<Report> {
    if trials == 0 {
        return Err(Error::InvalidArgument("repair checks need at least 1 trial".into()));
    }
    let model = AspecModel::new(magnitude, ell)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut members = 0u64;
    let mut max_distance = 0usize;
    let mut transcript_csv = String::from("word_index,position,before,after\n");
    for trial in 0..trials {
        let k = rng.gen_range(2..=5usize);
        let words: Vec<Word> = (0..k)
            .map(|_| aspec::sample_member(&model, rng.gen_range(1..=20usize), &mut rng))
            .collect();
        let outcome = aspec::repair_concatenation(&model, &words)?;
        if aspec::aspec_is_member(&model, &outcome.glued)? {
            members += 1;
        }
        max_distance = max_distance.max(outcome.distances.iter().copied().max().unwrap_or(0));
        if trial == trials - 1 {
            for repair in &outcome.transcript {
                for change in &repair.changes {
                    transcript_csv.push_str(&format!(
                        "{},{},{},{}\n",
                        repair.word_index, change.position, change.before, change.after
                    ));
                }
            }
        }
    }
    let mut report = Report::new("repair-aspec");
    report.param("N", magnitude);
    report.param("ell", ell);
    report.param("trials", trials);
    report.seed = Some(seed);
    report.check(
        "repaired-members",
        members == trials,
        format!("{members}/{trials} repaired concatenations are members"),
    );
    report.check(
        "distance-bound",
        max_distance <= 4,
        format!("max per-word letter changes = {max_distance} (bound 4)"),
    );
    report.table("transcript", transcript_csv);
    Ok(report)
}

fn cmd_alpha(magnitude: u32, ell: u32, cutoff: usize) -> Result<Report> {
    let model = AspecModel::new(magnitude, ell)?;
    let (lower, upper) = aspec::alpha_interval(&model, cutoff)?;
    let mut report = Report::new("alpha");
    report.param("N", magnitude);
    report.param("ell", ell);
    report.param("cutoff", cutoff);
    report.check(
        "alpha-below-one",
        upper < BigRational::one(),
        format!(
            "lower = {lower} ≈ {}, upper = {upper} ≈ {}",
            rational_to_f64(&lower),
            rational_to_f64(&upper)
        ),
    );
    Ok(report)
}

fn cmd_entropy_bound(magnitude: u32, ell: u32, cutoff: usize, n_max: usize) -> Result<Report> {
    let model = AspecModel::new(magnitude, ell)?;
    let mut report = Report::new("entropy-bound");
    report.param("N", magnitude);
    report.param("ell", ell);
    report.param("cutoff", cutoff);
    report.param("n_max", n_max);
    match aspec::entropy_bound_check(&model, n_max, cutoff) {
        Ok(check) => {
            report.check(
                "alpha-applicable",
                true,
                format!("alpha upper bound {} < 1", check.alpha_upper),
            );
            let worst = check
                .rows
                .iter()
                .map(|r| r.ratio)
                .fold(0.0f64, f64::max);
            report.check(
                "count-ceiling",
                check.all_pass(),
                format!(
                    "|L_n|·(1-α) ≤ 2n·N^n for all n ≤ {n_max}; worst ratio {worst}"
                ),
            );
            let mut csv = String::from("n,count,ratio,pass\n");
            for row in &check.rows {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    row.n, row.count, row.ratio, row.pass
                ));
            }
            report.table("bound", csv);
        }
        Err(Error::EntropyBoundInapplicable { alpha_upper }) => {
            report.check(
                "alpha-applicable",
                false,
                format!("alpha upper bound {alpha_upper} reaches 1; the ceiling says nothing"),
            );
        }
        Err(other) => return Err(other),
    }
    Ok(report)
}

fn code_alphabet(a: u32) -> Result<LetterSet> {
    if a < 2 {
        return Err(Error::InvalidArgument("codes need an alphabet of size ≥ 2".into()));
    }
    LetterSet::range(0, a as i32 - 1)
}

fn build_family(family: FamilyArg, alphabet: &LetterSet, n: usize) -> Result<codes::Code> {
    match family {
        FamilyArg::T => codes::build_t(alphabet, n),
        FamilyArg::U => codes::build_u(alphabet, n),
        FamilyArg::V => codes::build_v(alphabet, n),
    }
}

fn family_bound_check(code: &codes::Code, a: u32, n: usize) -> (String, bool, String) {
    let a_pow_n = BigUint::from(a).pow(n as u32);
    let size = code.cardinality().clone();
    match code.family() {
        codes::CodeFamily::T { .. } => {
            let scale = BigUint::from(1u32) << n.ilog2();
            let pass = &size * &scale <= a_pow_n;
            (
                "cardinality-bound".into(),
                pass,
                format!("|T| = {size}, |T|·2^⌊log₂n⌋ ≤ a^n = {a_pow_n}"),
            )
        }
        codes::CodeFamily::U { .. } => {
            let pass = &size * BigUint::from((n * n) as u64) <= BigUint::from(16u32) * &a_pow_n;
            (
                "cardinality-bound".into(),
                pass,
                format!("|U| = {size}, |U|·n² ≤ 16·a^n"),
            )
        }
        codes::CodeFamily::V { .. } => {
            let expected = BigUint::from(a).pow(n as u32 - 2);
            let pass = size == expected;
            (
                "cardinality-exact".into(),
                pass,
                format!("|V| = {size}, expected a^(n-2) = {expected}"),
            )
        }
        codes::CodeFamily::S { .. } => ("cardinality".into(), true, format!("|S| = {size}")),
    }
}

fn cmd_codes_build(family: FamilyArg, a: u32, n: usize, budget: u64) -> Result<Report> {
    let alphabet = code_alphabet(a)?;
    let code = build_family(family, &alphabet, n)?;
    let mut report = Report::new("codes build");
    report.param("family", code.family().name());
    report.param("a", a);
    report.param("n", n);
    report.param("params", code.family().params());
    let (name, pass, details) = family_bound_check(&code, a, n);
    report.check(&name, pass, details);
    report.table("code", code.export(budget)?);
    Ok(report)
}

fn cmd_codes_verify(family: FamilyArg, a: u32, n: usize, budget: u64) -> Result<Report> {
    let alphabet = code_alphabet(a)?;
    let code = build_family(family, &alphabet, n)?;
    let radius = code
        .spanning_radius()
        .expect("T, U, V all declare a spanning radius");
    let check = codes::verify_spanning(&code, radius, budget)?;
    let mut report = Report::new("codes verify");
    report.param("family", code.family().name());
    report.param("a", a);
    report.param("n", n);
    report.param("radius", radius);
    report.check(
        "spanning",
        check.ok,
        format!(
            "max distance {:?} over {} cube words (radius {radius})",
            check.max_distance, check.words_checked
        ),
    );
    Ok(report)
}

fn cmd_codes_separate(a: u32, n: usize, seed: u64, trials: u64, budget: u64) -> Result<Report> {
    let alphabet = code_alphabet(a)?;
    let cube = codes::cube_words(&alphabet, n, budget)?;
    let mut report = Report::new("codes separate");
    report.param("a", a);
    report.param("n", n);
    report.param("trials", trials);
    report.seed = Some(seed);

    let pigeonhole_floor = |total: usize| -> BigUint {
        // |S|·4na² ≥ |W| rearranged: the extraction guarantees this floor.
        BigUint::from(total as u64)
    };
    let check_set = |words: &std::collections::BTreeSet<Word>| -> Result<(bool, bool, usize)> {
        let code = codes::extract_3_separated(words, &alphabet, n)?;
        let members = code.members(budget)?;
        let separated = codes::verify_separated(&members, 3)?;
        let lhs = code.cardinality() * BigUint::from(4 * n as u64) * BigUint::from(a) * BigUint::from(a);
        let pigeonhole = lhs >= pigeonhole_floor(words.len());
        Ok((separated, pigeonhole, members.len()))
    };

    let (separated, pigeonhole, kept) = check_set(&cube)?;
    report.check(
        "cube-separated",
        separated,
        format!("kept {kept} of {} cube words, pairwise distance ≥ 3", cube.len()),
    );
    report.check(
        "cube-pigeonhole",
        pigeonhole,
        "|S|·4na² ≥ |W| for the full cube",
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_separated = true;
    let mut all_pigeonhole = true;
    for _ in 0..trials {
        let subset: std::collections::BTreeSet<Word> = cube
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .cloned()
            .collect();
        if subset.is_empty() {
            continue;
        }
        let (sep, pig, _) = check_set(&subset)?;
        all_separated &= sep;
        all_pigeonhole &= pig;
    }
    report.check(
        "subsets-separated",
        all_separated,
        format!("{trials} seeded random subsets, pairwise distance ≥ 3"),
    );
    report.check(
        "subsets-pigeonhole",
        all_pigeonhole,
        format!("{trials} seeded random subsets keep |S|·4na² ≥ |W|"),
    );
    Ok(report)
}

fn cmd_codes_repair_example() -> Result<Report> {
    let alphabet = LetterSet::range(0, 2)?;
    let n = 10;
    let v = [false, true, false];
    let member = Word::parse("0121200111")?;
    let outside = Word::parse("0211221100")?;
    let expected = Word::parse("0211211100")?;

    let mut report = Report::new("codes repair-example");
    report.param("a", 3);
    report.param("n", n);
    report.param("parity", "010");

    let accepted = codes::t_membership(&alphabet, n, &v, &member)?;
    report.check(
        "member-accepted",
        accepted,
        format!("{} satisfies all parity constraints", member.compact().unwrap()),
    );
    let rejected = !codes::t_membership(&alphabet, n, &v, &outside)?;
    report.check(
        "nonmember-rejected",
        rejected,
        format!("{} violates a parity constraint", outside.compact().unwrap()),
    );
    let repaired = codes::repair_t(&alphabet, n, &v, &outside)?;
    report.check(
        "repair-output",
        repaired == expected,
        format!(
            "repair({}) = {}, expected {}",
            outside.compact().unwrap(),
            repaired.compact().unwrap(),
            expected.compact().unwrap()
        ),
    );
    let distance = hamming(&outside, &repaired)?;
    report.check(
        "repair-within-radius",
        distance <= 1 && codes::t_membership(&alphabet, n, &v, &repaired)?,
        format!("one letter changed (distance {distance}), result is a member"),
    );
    Ok(report)
}

fn cmd_measures(a: u32, level: usize, length: usize, seed: u64) -> Result<Report> {
    if a == 0 {
        return Err(Error::InvalidArgument("measures need at least one letter".into()));
    }
    let positives = LetterSet::range(1, a as i32)?;
    let negatives = LetterSet::range(-(a as i32), -1)?;
    let mut report = Report::new("measures");
    report.param("a", a);
    report.param("level", level);
    report.param("length", length);
    report.seed = Some(seed);

    let ln_a = (a as f64).ln();
    let mut exact = true;
    for lev in 1..=level.min(12) {
        let dist = CylinderDistribution::bernoulli(positives.clone(), lev)?;
        exact &= dist.level_entropy() == ln_a;
    }
    report.check(
        "uniform-entropy-exact",
        exact,
        format!("level entropy equals ln {a} = {ln_a} bit-for-bit at levels 1..={}", level.min(12)),
    );

    let dist = CylinderDistribution::bernoulli(positives.clone(), level)?;
    let support = measures::support_count_check(&dist);
    report.check(
        "support-count",
        support.pass,
        format!(
            "ln|support| = {} ≥ n·h = {}",
            support.ln_support,
            level as f64 * support.entropy
        ),
    );

    let neg = CylinderDistribution::bernoulli(negatives, level)?;
    let disjoint = measures::disjoint_support_check(&dist, &neg)?
        && !measures::disjoint_support_check(&dist, &dist)?;
    report.check(
        "disjoint-supports",
        disjoint,
        "positive vs negative supports are disjoint; a support meets itself",
    );

    let sampled = measures::sample_and_frequencies(&positives, length, level.min(2), seed)?;
    report.check(
        "sampling-normalized",
        true,
        format!(
            "{} windows over {} distinct words, weights sum to 1 exactly",
            length - level.min(2) + 1,
            sampled.support_size()
        ),
    );
    if sampled.support_size() <= BigUint::from(1024u32) {
        report.table("sample", sampled.to_csv()?);
    }
    if BigUint::from(a).pow(level as u32) <= BigUint::from(1024u32) {
        report.table("distribution", dist.to_csv()?);
    }
    Ok(report)
}

/// The desk-scale suite behind `lex verify all`: every module's headline
/// properties at sizes that finish in seconds, aggregated into one report.
fn cmd_verify_all(seed: u64, budget: u64) -> Result<Report> {
    let mut report = Report::new("verify all");
    report.seed = Some(seed);
    report.param("budget", budget);

    // Covering codes: the worked single-letter repair example.
    {
        let sub = cmd_codes_repair_example()?;
        for check in sub.checks {
            report.check(&format!("codes/{}", check.name), check.pass, check.details);
        }
    }

    // Covering codes: exhaustive spanning and cardinality bounds.
    {
        let mut pass = true;
        for (a, n_top) in [(2u32, 6usize), (3, 4)] {
            let alphabet = code_alphabet(a)?;
            for n in 1..=n_top {
                let code = codes::build_t(&alphabet, n)?;
                pass &= codes::verify_spanning(&code, 1, budget)?.ok;
                pass &= family_bound_check(&code, a, n).1;
                let total: BigUint = codes::count_all_t_classes(&alphabet, n)?.iter().sum();
                pass &= total == BigUint::from(a).pow(n as u32);
            }
        }
        report.check(
            "codes/t-spanning",
            pass,
            "1-spanning, size bound, and class-count total for a ∈ {2,3}, n ≤ 6",
        );
        let alphabet = code_alphabet(2)?;
        let mut pass = true;
        for n in [4usize, 6] {
            for code in [codes::build_u(&alphabet, n)?, codes::build_v(&alphabet, n)?] {
                pass &= codes::verify_spanning(&code, 2, budget)?.ok;
                pass &= family_bound_check(&code, 2, n).1;
            }
        }
        report.check(
            "codes/uv-spanning",
            pass,
            "2-spanning and size bounds for U and V at a = 2, n ∈ {4,6}",
        );
    }

    // Covering codes: distance-3 extraction on the cube and seeded subsets.
    {
        let alphabet = code_alphabet(2)?;
        let n = 6;
        let cube = codes::cube_words(&alphabet, n, budget)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(5));
        let mut pass = true;
        let mut sets: Vec<std::collections::BTreeSet<Word>> = vec![cube.clone()];
        for _ in 0..5 {
            let subset: std::collections::BTreeSet<Word> =
                cube.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
            if !subset.is_empty() {
                sets.push(subset);
            }
        }
        for words in &sets {
            let code = codes::extract_3_separated(words, &alphabet, n)?;
            pass &= codes::verify_separated(&code.members(budget)?, 3)?;
            let lhs = code.cardinality() * BigUint::from(4 * n as u64) * BigUint::from(4u32);
            pass &= lhs >= BigUint::from(words.len());
        }
        report.check(
            "codes/three-separated",
            pass,
            "pairwise distance ≥ 3 and the pigeonhole floor on the cube and 5 seeded subsets",
        );
    }

    // Zero-gap model: counting, gap table, gluing, the power-gap inequality.
    {
        let mut pass = true;
        for magnitude in [1u32, 2] {
            let model = SubshiftModel::aws(magnitude)?;
            for n in 1..=10usize {
                pass &= model.count_language(n, CountMethod::Brute, budget)?
                    == model.count_language(n, CountMethod::Dp, budget)?;
            }
        }
        report.check(
            "aws/counts-agree",
            pass,
            "brute-force equals the run recurrence for N ∈ {1,2}, n ≤ 10",
        );

        let table = [(1u64, 2u64), (2, 3), (3, 3), (4, 4), (9, 4), (10, 5), (27, 5), (28, 6)];
        let pass = table.iter().all(|&(n, expect)| aws::gap_f(n) == expect);
        report.check(
            "aws/gap-table",
            pass,
            "f(n) = 2 + ⌈log₃ n⌉ at n ∈ {1,2,3,4,9,10,27,28}",
        );

        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        let mut members = 0;
        for _ in 0..50 {
            let k = rng.gen_range(2..=5usize);
            let words: Vec<Word> = (0..k)
                .map(|_| aws::sample_member(2, rng.gen_range(1..=20usize), &mut rng))
                .collect();
            let gaps: Vec<u64> = words[..k - 1]
                .iter()
                .map(|w| aws::gap_f(w.len() as u64))
                .collect();
            let glued = aws::glue(2, &words, &gaps)?;
            if aws::aws_is_member(2, &glued)? {
                members += 1;
            }
        }
        report.check(
            "aws/glue-members",
            members == 50,
            format!("{members}/50 seeded glue tuples yield members"),
        );

        let check = aws::hp_gap_inequality_check(1, 1, 10_000)?;
        report.check(
            "aws/hp-inequality",
            check.ok(),
            format!("C = 1, k = {}, n ≤ 10000, violations = {}", check.k, check.violations.len()),
        );
    }

    // Run-family model: three-way counts, repair, gap density, count ceiling.
    {
        let mut pass = true;
        for ell in [2u32, 3] {
            let model = SubshiftModel::aspec(2, ell)?;
            for n in 1..=8usize {
                let brute = model.count_language(n, CountMethod::Brute, budget)?;
                pass &= brute == model.count_language(n, CountMethod::Dp, budget)?;
                pass &= brute == model.count_language(n, CountMethod::Formula, budget)?;
            }
        }
        report.check(
            "aspec/counts-agree",
            pass,
            "brute, recurrence, and closed form agree for N = 2, ℓ ∈ {2,3}, n ≤ 8",
        );

        let model = AspecModel::new(2, 3)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
        let mut members = 0;
        let mut max_distance = 0usize;
        for _ in 0..50 {
            let k = rng.gen_range(2..=5usize);
            let words: Vec<Word> = (0..k)
                .map(|_| aspec::sample_member(&model, rng.gen_range(1..=20usize), &mut rng))
                .collect();
            let outcome = aspec::repair_concatenation(&model, &words)?;
            if aspec::aspec_is_member(&model, &outcome.glued)? {
                members += 1;
            }
            max_distance = max_distance.max(outcome.distances.iter().copied().max().unwrap_or(0));
        }
        report.check(
            "aspec/repair-bounded",
            members == 50 && max_distance <= 4,
            format!("50/50 repairs are members; max per-word distance {max_distance} ≤ 4"),
        );

        let showcase_model = AspecModel::new(10, 32)?;
        let (lower, upper) = aspec::alpha_interval(&showcase_model, 64)?;
        let below_091 = upper <= BigRational::new(BigInt::from(91), BigInt::from(100));
        report.check(
            "aspec/alpha-below-one",
            upper < BigRational::one() && below_091,
            format!(
                "lower ≈ {}, upper ≈ {} ≤ 0.91",
                rational_to_f64(&lower),
                rational_to_f64(&upper)
            ),
        );

        let bound = aspec::entropy_bound_check(&showcase_model, 40, 64)?;
        report.check(
            "aspec/count-ceiling",
            bound.all_pass(),
            "|L_n|·(1-α) ≤ 2n·10^n exactly for n ≤ 40",
        );
    }

    // Engine: enumeration, higher powers, entropy tables, gap functions.
    {
        let full = SubshiftModel::full(1, false)?;
        let aws_model = SubshiftModel::aws(1)?;
        let aspec_model = SubshiftModel::aspec(2, 2)?;
        let pass = full.enumerate_language(2, budget)?.len() == 4
            && aws_model.enumerate_language(2, budget)?.len() == 7
            && aspec_model.enumerate_language(3, budget)?.len() == 56;
        report.check(
            "engine/enumerate-levels",
            pass,
            "|L_2(full)| = 4, |L_2(aws)| = 7, |L_3(aspec)| = 56",
        );

        let power = subshift::higher_power(SubshiftModel::aws(1)?, 2)?;
        let mut pass = power.is_member(&Word::parse("1 1 0 0")?)?;
        for n in 1..=4usize {
            pass &= power.count_language(n, CountMethod::Dp, budget)?
                == aws_model.count_language(2 * n, CountMethod::Dp, budget)?;
        }
        report.check(
            "engine/higher-power",
            pass,
            "|L_n(X²)| = |L_2n(X)| for n ≤ 4; block word (11)(00) is a member",
        );

        let table = SubshiftModel::aws(2)?.entropy_table(12, CountMethod::Dp, budget)?;
        report.check(
            "engine/entropy-monotone",
            table.is_rate_nonincreasing() && table.is_subadditive(),
            "per-level rates never rise and counts are subadditive for N = 2, n ≤ 12",
        );

        let gap_check = subshift::check_gap_function(&GapFunction::aws_log_gap(), 100_000)?;
        let const_check = subshift::check_gap_function(&GapFunction::constant(4), 1_000)?;
        report.check(
            "engine/gap-function",
            gap_check.ok() && gap_check.max_ratio == (2, 1) && const_check.ok(),
            "log gap is positive and nondecreasing up to 10^5 with max f(n)/n = 2/1",
        );
    }

    // Measures: exact entropy, support counts, disjointness, sampling.
    {
        let mut pass = true;
        for a in [2i32, 10, 20] {
            let letters = LetterSet::range(1, a)?;
            for level in [1usize, 6, 12] {
                let dist = CylinderDistribution::bernoulli(letters.clone(), level)?;
                pass &= dist.level_entropy() == (a as f64).ln();
            }
        }
        let small = CylinderDistribution::bernoulli(LetterSet::range(1, 2)?, 8)?
            .materialize()?;
        pass &= small.level_entropy() == 2f64.ln();
        report.check(
            "measures/uniform-entropy",
            pass,
            "level entropy is ln a bit-for-bit for a ∈ {2,10,20}, levels {1,6,12}",
        );

        let mut pass = true;
        for a in [2i32, 10] {
            let dist = CylinderDistribution::bernoulli(LetterSet::range(1, a)?, 10)?;
            pass &= measures::support_count_check(&dist).pass;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(3));
        let raw: Vec<u64> = (0..16).map(|_| rng.gen_range(1..100u64)).collect();
        let total: u64 = raw.iter().sum();
        let weights: BTreeMap<Word, BigRational> = raw
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let letters = vec![
                    (i as i32 & 1) + 1,
                    ((i as i32 >> 1) & 1) + 1,
                    ((i as i32 >> 2) & 1) + 1,
                    ((i as i32 >> 3) & 1) + 1,
                ];
                (
                    Word::from(&letters[..]),
                    BigRational::new(BigInt::from(c), BigInt::from(total)),
                )
            })
            .collect();
        let random_dist = CylinderDistribution::explicit(4, weights)?;
        pass &= measures::support_count_check(&random_dist).pass;
        report.check(
            "measures/support-count",
            pass,
            "|support| ≥ e^(n·h) for uniform families and a seeded random table",
        );

        let mut pass = true;
        for level in 1..=12usize {
            let pos = CylinderDistribution::bernoulli(LetterSet::range(1, 2)?, level)?;
            let neg = CylinderDistribution::bernoulli(LetterSet::range(-2, -1)?, level)?;
            pass &= measures::disjoint_support_check(&pos, &neg)?;
        }
        report.check(
            "measures/disjoint-supports",
            pass,
            "positive vs negative uniform supports are disjoint at every level ≤ 12",
        );

        let letters = LetterSet::range(1, 10)?;
        let sampled = measures::sample_and_frequencies(&letters, 20_000, 2, seed.wrapping_add(4))?;
        let expected = BigRational::new(BigInt::one(), BigInt::from(100));
        let mut max_dev = 0.0f64;
        if let CylinderDistribution::Explicit { weights, .. } = &sampled {
            for weight in weights.values() {
                max_dev = max_dev.max(rational_to_f64(&(weight - &expected)).abs());
            }
        }
        report.check(
            "measures/sampling",
            max_dev < 0.05,
            format!("empirical pair frequencies within {max_dev} of 1/100"),
        );
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_vec(args: &[&str]) -> RunResult {
        run(args.iter().copied())
    }

    #[test]
    fn count_all_methods_reports_the_three_way_oracle() {
        let result = run_vec(&[
            "lex", "count", "--model", "aspec", "--N", "2", "--ell", "2", "--n", "3",
            "--method", "all",
        ]);
        assert_eq!(result.exit_code, 0, "{}", result.output);
        assert!(result.output.contains("56/56/56"), "{}", result.output);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_vec(&["lex", "frobnicate"]).exit_code, 2);
        assert_eq!(run_vec(&["lex", "count", "--bogus-flag"]).exit_code, 2);
        assert_eq!(
            run_vec(&["lex", "count", "--model", "aspec", "--n", "3"]).exit_code,
            2,
            "aspec without --ell is an input error"
        );
        assert_eq!(run_vec(&["lex", "verify", "some"]).exit_code, 2);
        let help = run_vec(&["lex", "--help"]);
        assert_eq!(help.exit_code, 0);
        assert!(help.output.contains("enumerate"));
    }

    #[test]
    fn repair_example_reproduces_the_frozen_words() {
        let result = run_vec(&["lex", "codes", "repair-example"]);
        assert_eq!(result.exit_code, 0, "{}", result.output);
        assert!(result.output.contains("0211211100"));
        let report = result.report.unwrap();
        assert_eq!(report.checks.len(), 4);
        assert!(report.all_pass());
    }

    #[test]
    fn enumerate_lists_sorted_words() {
        let result = run_vec(&[
            "lex", "enumerate", "--model", "full", "--N", "1", "--n", "2",
        ]);
        assert_eq!(result.exit_code, 0);
        let report = result.report.unwrap();
        let table = &report.tables["language"];
        assert_eq!(table, "word\n-1 -1\n-1 1\n1 -1\n1 1\n");
    }

    #[test]
    fn entropy_bound_inapplicable_is_a_failed_check() {
        let result = run_vec(&[
            "lex", "entropy-bound", "--N", "2", "--ell", "2", "--n-max", "5",
        ]);
        assert_eq!(result.exit_code, 1, "{}", result.output);
        let report = result.report.unwrap();
        assert!(!report.checks[0].pass);
        assert!(report.checks[0].name.contains("alpha-applicable"));
    }

    #[test]
    fn alpha_and_hp_pass_at_defaults() {
        let alpha = run_vec(&["lex", "alpha"]);
        assert_eq!(alpha.exit_code, 0, "{}", alpha.output);
        let hp = run_vec(&["lex", "hp-inequality", "--C", "2/1", "--n-max", "1000"]);
        assert_eq!(hp.exit_code, 0, "{}", hp.output);
    }

    #[test]
    fn glue_and_repair_examples_are_deterministic() {
        let first = run_vec(&["lex", "glue-aws", "--trials", "5", "--seed", "3"]);
        let second = run_vec(&["lex", "glue-aws", "--trials", "5", "--seed", "3"]);
        assert_eq!(first.exit_code, 0, "{}", first.output);
        assert_eq!(first.output, second.output);
        let repair = run_vec(&[
            "lex", "repair-aspec", "--trials", "5", "--seed", "1",
        ]);
        assert_eq!(repair.exit_code, 0, "{}", repair.output);
        assert!(repair.report.unwrap().tables.contains_key("transcript"));
    }

    #[test]
    fn codes_commands_build_verify_separate() {
        let build = run_vec(&["lex", "codes", "build", "--family", "v", "--a", "2", "--n", "4"]);
        assert_eq!(build.exit_code, 0, "{}", build.output);
        assert!(build.report.unwrap().tables.contains_key("code"));
        let verify = run_vec(&["lex", "codes", "verify", "--family", "t", "--a", "2", "--n", "5"]);
        assert_eq!(verify.exit_code, 0, "{}", verify.output);
        let separate = run_vec(&[
            "lex", "codes", "separate", "--a", "2", "--n", "5", "--trials", "3",
        ]);
        assert_eq!(separate.exit_code, 0, "{}", separate.output);
    }

    #[test]
    fn measures_command_passes_and_exports_small_tables() {
        let result = run_vec(&[
            "lex", "measures", "--a", "3", "--level", "3", "--length", "2000",
        ]);
        assert_eq!(result.exit_code, 0, "{}", result.output);
        let report = result.report.unwrap();
        assert!(report.tables.contains_key("distribution"));
    }

    #[test]
    fn csv_format_renders_checks_and_tables() {
        let result = run_vec(&[
            "lex", "codes", "repair-example", "--format", "csv",
        ]);
        assert_eq!(result.exit_code, 0);
        assert!(result.output.starts_with("# command: codes repair-example\n"));
        assert!(result.output.contains("# check repair-output: pass"));
    }

    #[test]
    fn out_flag_writes_the_report_beside_stdout() {
        let path = std::env::temp_dir().join("lex-report-test.json");
        let path_str = path.to_str().unwrap();
        let result = run_vec(&[
            "lex", "alpha", "--out", path_str,
        ]);
        assert_eq!(result.exit_code, 0);
        let written = std::fs::read_to_string(&path).unwrap();
        assert_eq!(written, result.output);
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn budget_resolution_parses_and_rejects() {
        assert_eq!(budget_from(None).unwrap(), DEFAULT_BUDGET);
        assert_eq!(budget_from(Some("1234")).unwrap(), 1234);
        assert!(budget_from(Some("not-a-number")).is_err());
    }

    #[test]
    fn rational_flag_parsing() {
        assert_eq!(parse_rational("1/2").unwrap(), (1, 2));
        assert_eq!(parse_rational("3").unwrap(), (3, 1));
        assert!(parse_rational("x/y").is_err());
    }
}
