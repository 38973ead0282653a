//! `sequency` command-line tool.
//!
//! Subcommands: `generate` (matrix families), `classify` (completeness
//! report for an `sgn-v1` file), `count` (exact counts with optional
//! brute-force oracles), `tensor` (Kronecker sequency prediction,
//! expansion, verification), and `walsh-check` (cross-validation of the two
//! Walsh generators).
//!
//! Exit codes: 0 on success and on checks that agree, 1 on I/O, parse, or
//! usage errors, 2 when a check ran fine but the compared values disagree.

mod output;

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use sequency::classify::classify;
use sequency::counting::{
    columns_with_sequency, count_maximal_chains, count_sequency_complete, count_sequency_ordered,
    grid_identity_check, sequency_histogram, CountReport,
};
use sequency::generators::{walsh_natural, walsh_sequency, GeneratorKind};
use sequency::sgn::{format_sgn, parse_sgn};
use sequency::tensor::{
    kronecker, kronecker_column, kronecker_power, kronecker_power_column, predict_nfold,
    predict_pair, FactorSummary, MixedRadixIndex,
};
use sequency::{SequencyError, SignMatrix};

/// Most columns a `tensor --mode predict` listing will print.
const MAX_PREDICT_COLUMNS: usize = 1 << 16;
/// Most entries a product is materialized with (expand, or full verify).
const MAX_MATERIALIZE_ENTRIES: usize = 1 << 20;
/// Most entries a single sampled-verification column may have.
const MAX_COLUMN_ENTRIES: usize = 1 << 20;
/// Columns sampled when a product is too large to verify in full.
const VERIFY_SAMPLES: usize = 64;
/// Fixed seed so sampled verification output is reproducible.
const VERIFY_SEED: u64 = 0x5349_474E;
/// Orders above this skip the orthogonality diagnostic (it is cubic).
const MAX_ORTHOGONALITY_DIAGNOSTIC: usize = 256;

/// Sign pattern of the order-8 sequency-ordered Walsh-Hadamard matrix, the
/// reference `walsh-check --n 8` compares against.
const WALSH_8_REFERENCE: [[i8; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, -1, -1, -1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, 1, -1, -1, 1, 1, -1, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, -1, 1, -1, 1, 1, -1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1],
];

#[derive(Parser)]
#[command(
    name = "sequency",
    version,
    about = "Sequency analysis of ±1 matrices",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a matrix from one of the built-in families.
    Generate {
        /// Matrix family to generate.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Matrix order (power of two for the walsh kinds, at least 2
        /// otherwise).
        #[arg(long)]
        n: usize,
        /// Output format: text is sgn-v1.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify an sgn-v1 matrix as sequency-complete/ordered.
    Classify {
        /// Path of the sgn-v1 file to read.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exact counting queries, optionally cross-checked by brute force.
    Count {
        /// Vector/matrix size the count refers to.
        #[arg(long)]
        n: usize,
        /// Quantity to count or check.
        #[arg(long, value_enum)]
        what: CountWhat,
        /// Also run the brute-force oracle and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Kronecker products: predict column sequencies, expand, or verify.
    #[command(group = ArgGroup::new("partner").required(true).args(["b", "power"]))]
    Tensor {
        /// Left factor, as an sgn-v1 file.
        #[arg(long)]
        a: PathBuf,
        /// Right factor, as an sgn-v1 file (pair product a ⊗ b).
        #[arg(long)]
        b: Option<PathBuf>,
        /// Fold count for the power a ⊗ a ⊗ ... ⊗ a instead of --b.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        power: Option<u32>,
        /// predict emits the closed form, expand materializes the product,
        /// verify does both and compares.
        #[arg(long, value_enum)]
        mode: TensorMode,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare walsh-sequency output against sequency-sorted walsh-natural
    /// columns (and against the built-in order-8 reference).
    WalshCheck {
        /// Walsh order to check; must be a power of two.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    PowerResidue,
    Threshold,
    OrderedThreshold,
    WalshNatural,
    WalshSequency,
}

impl From<KindArg> for GeneratorKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::PowerResidue => GeneratorKind::PowerResidue,
            KindArg::Threshold => GeneratorKind::Threshold,
            KindArg::OrderedThreshold => GeneratorKind::OrderedThreshold,
            KindArg::WalshNatural => GeneratorKind::WalshNatural,
            KindArg::WalshSequency => GeneratorKind::WalshSequency,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountWhat {
    Ordered,
    Complete,
    Chains,
    PerSequency,
    GridCheck,
}

impl CountWhat {
    fn name(self) -> &'static str {
        match self {
            CountWhat::Ordered => "ordered",
            CountWhat::Complete => "complete",
            CountWhat::Chains => "chains",
            CountWhat::PerSequency => "per-sequency",
            CountWhat::GridCheck => "grid-check",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TensorMode {
    Predict,
    Expand,
    Verify,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Pbm,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Pbm => "pbm",
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    MatrixFile { path: String, source: SequencyError },
    #[error(transparent)]
    Sequency(#[from] SequencyError),
    #[error(transparent)]
    Output(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Whether a run's comparisons (if any) all agreed.
#[derive(PartialEq, Eq)]
enum Outcome {
    Agree,
    Disagree,
}

/// Parses `argv` and runs one subcommand. Returns the process exit code;
/// reports go to `out` and diagnostics to `err`.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(String::as_str)) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{}", e.render());
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return 1;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(Outcome::Agree) => 0,
        Ok(Outcome::Disagree) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    match command {
        Command::Generate { kind, n, format } => cmd_generate(kind, n, format, out, err),
        Command::Classify { input, format } => cmd_classify(&input, format, out),
        Command::Count {
            n,
            what,
            oracle,
            format,
        } => cmd_count(n, what, oracle, format, out),
        Command::Tensor {
            a,
            b,
            power,
            mode,
            format,
        } => cmd_tensor(&a, b.as_deref(), power, mode, format, out),
        Command::WalshCheck { n, format } => cmd_walsh_check(n, format, out),
    }
}

fn unsupported_format(command: &str, format: Format, supported: &str) -> CliError {
    CliError::Usage(format!(
        "{command} does not support --format {}; use {supported}",
        format.name()
    ))
}

fn read_matrix(path: &Path) -> Result<SignMatrix, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::File {
        path: path.display().to_string(),
        source,
    })?;
    parse_sgn(&text).map_err(|source| CliError::MatrixFile {
        path: path.display().to_string(),
        source,
    })
}

fn write_matrix(
    matrix: &SignMatrix,
    format: Format,
    json_header: serde_json::Value,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Text => write!(out, "{}", format_sgn(matrix))?,
        Format::Csv => write!(out, "{}", output::matrix_csv(matrix))?,
        Format::Pbm => write!(out, "{}", output::matrix_pbm(matrix))?,
        Format::Json => {
            let mut value = json_header;
            value["n"] = json!(matrix.order());
            value["rows"] = output::matrix_rows_json(matrix);
            writeln!(out, "{value}")?;
        }
    }
    Ok(())
}

fn cmd_generate(
    kind: KindArg,
    n: usize,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let kind = GeneratorKind::from(kind);
    let matrix = kind.generate(n)?;
    write_matrix(&matrix, format, json!({ "kind": kind.name() }), out)?;
    if n <= MAX_ORTHOGONALITY_DIAGNOSTIC {
        writeln!(err, "orthogonal: {}", matrix.is_orthogonal())?;
    }
    Ok(Outcome::Agree)
}

fn cmd_classify(input: &Path, format: Format, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let verdict = classify(&read_matrix(input)?);
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&verdict).expect("serializable"))?,
        Format::Text => {
            writeln!(out, "n: {}", verdict.n)?;
            writeln!(out, "complete: {}", verdict.complete)?;
            writeln!(out, "ordered: {}", verdict.ordered)?;
            writeln!(out, "profile: {}", verdict.profile)?;
            for (value, columns) in &verdict.duplicate_sequencies {
                writeln!(out, "duplicate sequency {value}: columns {columns:?}")?;
            }
        }
        other => return Err(unsupported_format("classify", other, "json or text")),
    }
    Ok(Outcome::Agree)
}

#[derive(Serialize)]
struct CountOutput {
    what: &'static str,
    n: usize,
    formula_value: String,
    oracle_value: Option<String>,
    agree: Option<bool>,
}

impl CountOutput {
    fn from_report(what: CountWhat, report: &CountReport) -> Self {
        Self {
            what: what.name(),
            n: report.n,
            formula_value: report.formula_value.to_string(),
            oracle_value: report.oracle_value.as_ref().map(ToString::to_string),
            agree: report.agree,
        }
    }
}

fn cmd_count(
    n: usize,
    what: CountWhat,
    oracle: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    match what {
        CountWhat::Ordered | CountWhat::Complete | CountWhat::Chains => {
            let report = match what {
                CountWhat::Ordered => count_sequency_ordered(n, oracle)?,
                CountWhat::Complete => count_sequency_complete(n, oracle)?,
                _ => count_maximal_chains(n, oracle)?,
            };
            let output = CountOutput::from_report(what, &report);
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string(&output).expect("serializable"))?;
                }
                Format::Text => {
                    write!(out, "n={} what={} formula={}", output.n, output.what, output.formula_value)?;
                    if let Some(oracle_value) = &output.oracle_value {
                        write!(out, " oracle={oracle_value}")?;
                    }
                    if let Some(agree) = output.agree {
                        write!(out, " agree={agree}")?;
                    }
                    writeln!(out)?;
                }
                Format::Csv => {
                    writeln!(out, "what,n,formula_value,oracle_value,agree")?;
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        output.what,
                        output.n,
                        output.formula_value,
                        output.oracle_value.as_deref().unwrap_or(""),
                        output.agree.map(|a| a.to_string()).unwrap_or_default()
                    )?;
                }
                other => return Err(unsupported_format("count", other, "json, text, or csv")),
            }
            Ok(if report.agree == Some(false) {
                Outcome::Disagree
            } else {
                Outcome::Agree
            })
        }
        CountWhat::PerSequency => cmd_count_per_sequency(n, oracle, format, out),
        CountWhat::GridCheck => cmd_count_grid(n, format, out),
    }
}

fn cmd_count_per_sequency(
    n: usize,
    oracle: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let counts: Vec<String> = (0..n)
        .map(|k| columns_with_sequency(n, k).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    let oracle_counts: Option<Vec<String>> = if oracle {
        Some(sequency_histogram(n)?.iter().map(|c| c.to_string()).collect())
    } else {
        None
    };
    let agree = oracle_counts.as_ref().map(|o| *o == counts);
    match format {
        Format::Json => {
            let value = json!({
                "what": "per-sequency",
                "n": n,
                "counts": counts,
                "oracle_counts": oracle_counts,
                "agree": agree,
            });
            writeln!(out, "{value}")?;
        }
        Format::Text => {
            write!(out, "n={n} what=per-sequency counts={}", counts.join(","))?;
            if let Some(oracle_counts) = &oracle_counts {
                write!(out, " oracle={}", oracle_counts.join(","))?;
            }
            if let Some(agree) = agree {
                write!(out, " agree={agree}")?;
            }
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "n,k,formula_value,oracle_value")?;
            for (k, count) in counts.iter().enumerate() {
                let oracle_value = oracle_counts
                    .as_ref()
                    .map(|o| o[k].as_str())
                    .unwrap_or("");
                writeln!(out, "{n},{k},{count},{oracle_value}")?;
            }
        }
        other => return Err(unsupported_format("count", other, "json, text, or csv")),
    }
    Ok(if agree == Some(false) {
        Outcome::Disagree
    } else {
        Outcome::Agree
    })
}

fn cmd_count_grid(n: usize, format: Format, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let report = grid_identity_check(n)?;
    match format {
        Format::Json => {
            let value = json!({
                "what": "grid-check",
                "n": report.n,
                "lhs": report.lhs.to_string(),
                "rhs": report.rhs_string(),
                "agree": report.agree,
            });
            writeln!(out, "{value}")?;
        }
        Format::Text => writeln!(
            out,
            "n={} what=grid-check lhs={} rhs={} agree={}",
            report.n,
            report.lhs,
            report.rhs_string(),
            report.agree
        )?,
        Format::Csv => {
            writeln!(out, "n,lhs,rhs,agree")?;
            writeln!(out, "{},{},{},{}", report.n, report.lhs, report.rhs_string(), report.agree)?;
        }
        other => return Err(unsupported_format("count", other, "json, text, or csv")),
    }
    Ok(if report.agree {
        Outcome::Agree
    } else {
        Outcome::Disagree
    })
}

/// The two product shapes the tensor subcommand handles.
enum Product {
    Pair { a: SignMatrix, b: SignMatrix },
    Power { a: SignMatrix, exponent: usize },
}

impl Product {
    fn column_count(&self) -> Result<usize, CliError> {
        match self {
            Product::Pair { a, b } => Ok(a.order() * b.order()),
            Product::Power { a, exponent } => a
                .order()
                .checked_pow(*exponent as u32)
                .ok_or_else(|| CliError::Usage("product column count overflows".to_string())),
        }
    }

    fn digits_of(&self, k: usize) -> Result<Vec<usize>, CliError> {
        match self {
            Product::Pair { a: _, b } => Ok(vec![k / b.order(), k % b.order()]),
            Product::Power { a, exponent } => {
                Ok(MixedRadixIndex::from_value(k, a.order(), *exponent)?.digits().to_vec())
            }
        }
    }

    fn predict(&self, k: usize) -> Result<usize, CliError> {
        match self {
            Product::Pair { a, b } => {
                let (sa, sb) = (FactorSummary::of(a), FactorSummary::of(b));
                Ok(predict_pair(&sa, &sb, k / b.order(), k % b.order())?)
            }
            Product::Power { a, exponent } => {
                let summary = FactorSummary::of(a);
                let index = MixedRadixIndex::from_value(k, a.order(), *exponent)?;
                Ok(predict_nfold(&summary, &index)?)
            }
        }
    }

    fn materialize(&self) -> SignMatrix {
        match self {
            Product::Pair { a, b } => kronecker(a, b),
            Product::Power { a, exponent } => kronecker_power(a, *exponent as u32),
        }
    }

    fn expand_column(&self, k: usize) -> Result<sequency::SignVector, CliError> {
        match self {
            Product::Pair { a, b } => Ok(kronecker_column(a, b, k / b.order(), k % b.order())?),
            Product::Power { a, exponent } => {
                let index = MixedRadixIndex::from_value(k, a.order(), *exponent)?;
                Ok(kronecker_power_column(a, &index)?)
            }
        }
    }

    fn source_json(&self) -> serde_json::Value {
        match self {
            Product::Pair { a, b } => json!({ "a_order": a.order(), "b_order": b.order() }),
            Product::Power { a, exponent } => json!({ "a_order": a.order(), "power": exponent }),
        }
    }
}

fn cmd_tensor(
    a_path: &Path,
    b_path: Option<&Path>,
    power: Option<u32>,
    mode: TensorMode,
    format: Format,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let a = read_matrix(a_path)?;
    let product = match (b_path, power) {
        (Some(b_path), None) => Product::Pair {
            a,
            b: read_matrix(b_path)?,
        },
        (None, Some(exponent)) => Product::Power {
            a,
            exponent: exponent as usize,
        },
        _ => unreachable!("clap enforces exactly one of --b/--power"),
    };
    match mode {
        TensorMode::Predict => tensor_predict(&product, format, out),
        TensorMode::Expand => tensor_expand(&product, format, out),
        TensorMode::Verify => tensor_verify(&product, format, out),
    }
}

#[derive(Serialize)]
struct ColumnPrediction {
    index: usize,
    digits: Vec<usize>,
    predicted: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    actual: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn write_predictions(
    mode: &str,
    product: &Product,
    columns: &[ColumnPrediction],
    sampled: bool,
    all_agree: Option<bool>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let value = json!({
                "mode": mode,
                "source": product.source_json(),
                "column_count": product.column_count()?,
                "sampled": sampled,
                "columns": columns,
                "all_agree": all_agree,
            });
            writeln!(out, "{value}")?;
        }
        Format::Csv => {
            writeln!(out, "index,digits,predicted,actual,agree")?;
            for c in columns {
                let digits: Vec<String> = c.digits.iter().map(|d| d.to_string()).collect();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    c.index,
                    digits.join(" "),
                    c.predicted,
                    c.actual.map(|a| a.to_string()).unwrap_or_default(),
                    c.agree.map(|a| a.to_string()).unwrap_or_default()
                )?;
            }
        }
        other => return Err(unsupported_format("tensor predict/verify", other, "json or csv")),
    }
    Ok(())
}

fn tensor_predict(product: &Product, format: Format, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let column_count = product.column_count()?;
    if column_count > MAX_PREDICT_COLUMNS {
        return Err(CliError::Usage(format!(
            "{column_count} columns exceed the predict listing bound of {MAX_PREDICT_COLUMNS}; \
             use --mode verify, which samples"
        )));
    }
    let columns: Vec<ColumnPrediction> = (0..column_count)
        .map(|k| {
            Ok(ColumnPrediction {
                index: k,
                digits: product.digits_of(k)?,
                predicted: product.predict(k)?,
                actual: None,
                agree: None,
            })
        })
        .collect::<Result<_, CliError>>()?;
    write_predictions("predict", product, &columns, false, None, format, out)?;
    Ok(Outcome::Agree)
}

fn tensor_expand(product: &Product, format: Format, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let column_count = product.column_count()?;
    let entries = column_count
        .checked_mul(column_count)
        .filter(|&e| e <= MAX_MATERIALIZE_ENTRIES)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "product has more than {MAX_MATERIALIZE_ENTRIES} entries and cannot be expanded"
            ))
        })?;
    let _ = entries;
    let matrix = product.materialize();
    let mut header = json!({ "mode": "expand" });
    header["source"] = product.source_json();
    write_matrix(&matrix, format, header, out)?;
    Ok(Outcome::Agree)
}

fn tensor_verify(product: &Product, format: Format, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let column_count = product.column_count()?;
    let full = column_count
        .checked_mul(column_count)
        .is_some_and(|e| e <= MAX_MATERIALIZE_ENTRIES);

    let mut columns = Vec::new();
    if full {
        let matrix = product.materialize();
        for k in 0..column_count {
            let predicted = product.predict(k)?;
            let actual = matrix.column(k).sequency();
            columns.push(ColumnPrediction {
                index: k,
                digits: product.digits_of(k)?,
                predicted,
                actual: Some(actual),
                agree: Some(predicted == actual),
            });
        }
    } else {
        if column_count > MAX_COLUMN_ENTRIES {
            return Err(CliError::Usage(format!(
                "columns have {column_count} entries, beyond the sampling bound of \
                 {MAX_COLUMN_ENTRIES}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
        let mut picks = BTreeSet::new();
        while picks.len() < VERIFY_SAMPLES.min(column_count) {
            picks.insert(rng.random_range(0..column_count));
        }
        for k in picks {
            let predicted = product.predict(k)?;
            let actual = product.expand_column(k)?.sequency();
            columns.push(ColumnPrediction {
                index: k,
                digits: product.digits_of(k)?,
                predicted,
                actual: Some(actual),
                agree: Some(predicted == actual),
            });
        }
    }

    let all_agree = columns.iter().all(|c| c.agree == Some(true));
    write_predictions("verify", product, &columns, !full, Some(all_agree), format, out)?;
    Ok(if all_agree {
        Outcome::Agree
    } else {
        Outcome::Disagree
    })
}

fn cmd_walsh_check(n: usize, format: Format, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let in_sequency_order = walsh_sequency(n)?;
    let sorted_natural = walsh_natural(n)?.columns_sorted_by_sequency();
    let sorted_natural_match = in_sequency_order == sorted_natural;
    let golden_match = (n == 8).then(|| {
        let reference: Vec<Vec<i8>> = WALSH_8_REFERENCE.iter().map(|r| r.to_vec()).collect();
        in_sequency_order.to_rows() == reference
    });
    let all = sorted_natural_match && golden_match.unwrap_or(true);
    match format {
        Format::Text => writeln!(out, "{}", if all { "match" } else { "mismatch" })?,
        Format::Json => {
            let value = json!({
                "n": n,
                "sorted_natural_match": sorted_natural_match,
                "golden_match": golden_match,
                "match": all,
            });
            writeln!(out, "{value}")?;
        }
        other => return Err(unsupported_format("walsh-check", other, "text or json")),
    }
    Ok(if all { Outcome::Agree } else { Outcome::Disagree })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_vec(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("sequency".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn generate_walsh_text() {
        let (code, out, err) = run_vec(&["generate", "--kind", "walsh-sequency", "--n", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "++\n+-\n\n");
        assert!(err.contains("orthogonal: true"));
    }

    #[test]
    fn generate_rejects_bad_size() {
        let (code, _, err) = run_vec(&["generate", "--kind", "walsh-natural", "--n", "6"]);
        assert_eq!(code, 1);
        assert!(err.contains("power of two"));
    }

    #[test]
    fn unknown_flag_is_an_error() {
        let (code, _, err) = run_vec(&["count", "--n", "3", "--what", "ordered", "--frobnicate"]);
        assert_eq!(code, 1);
        assert!(!err.is_empty());
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_vec(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("generate"));
    }

    #[test]
    fn grid_check_disagreement_exits_two() {
        let (code, out, _) = run_vec(&["count", "--n", "3", "--what", "grid-check"]);
        assert_eq!(code, 2);
        assert!(out.contains("\"lhs\":\"2\""));
        assert!(out.contains("\"rhs\":\"9\""));
    }
}
