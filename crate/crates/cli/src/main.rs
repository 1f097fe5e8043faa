//! `filterpaths`: count, enumerate and cross-check weighted lattice paths.
//!
//! Exit codes: 0 on success (and a clean comparison), 1 when `compare`
//! finds a mismatch, 2 on any usage error.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use filterpaths::closed_form::{self, StripIndex};
use filterpaths::lattice::{Arrangement, Semantics};
use filterpaths::oracle::{dp_count, enumerate_paths, PathQuery};
use filterpaths::verify::{self, CompareReport, SweepSpec};
use filterpaths::ExactInt;
use serde_json::json;

use crate::render::{Format, Record};

#[derive(Debug, Parser)]
#[command(
    name = "filterpaths",
    version,
    about = "Weighted lattice paths with walls and filters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a closed form for the periodic arrangement with parameter l.
    Count(CountArgs),
    /// Weighted path count by dynamic programming for an explicit arrangement.
    Oracle(QueryArgs),
    /// List every path with its weight (rows up to 24).
    Paths(QueryArgs),
    /// Compare closed forms with the oracle over a parameter grid.
    Compare(CompareArgs),
    /// Tabulate the P/Q coefficient families and check their recurrence.
    Pq(PqArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormulaChoice {
    /// Pick by strip index: strip 1 uses desire1, later strips use mj.
    Auto,
    /// Wall and type-1 filter, endpoint inside the first strip.
    #[value(alias = "wall-filter-strip1")]
    Desire1,
    /// Wall and type-1 filter, endpoint right of the filter.
    #[value(alias = "wall-filter-right")]
    Desire2,
    /// Two filters without the wall, second strip.
    #[value(alias = "two-filters")]
    Th3,
    /// Wall and two filters, second strip.
    #[value(alias = "wall-two-filters")]
    Th4,
    /// Periodic arrangement, any strip.
    #[value(alias = "multiplicity")]
    Mj,
}

impl FormulaChoice {
    fn id(self) -> &'static str {
        match self {
            FormulaChoice::Auto => "auto",
            FormulaChoice::Desire1 => "desire1",
            FormulaChoice::Desire2 => "desire2",
            FormulaChoice::Th3 => "th3",
            FormulaChoice::Th4 => "th4",
            FormulaChoice::Mj => "mj",
        }
    }
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    l: i64,
    #[arg(long = "m", allow_negative_numbers = true)]
    m: i64,
    #[arg(long = "n", allow_negative_numbers = true)]
    n: i64,
    #[arg(long, value_enum, default_value_t = FormulaChoice::Auto)]
    formula: FormulaChoice,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct QueryArgs {
    /// Restrictions such as `W@0;F1@4;F2@9`; empty for none.
    #[arg(long = "arr", default_value = "", allow_hyphen_values = true)]
    arrangement: String,
    /// Start column (the start row is always 0).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    start: i64,
    #[arg(long = "m", allow_negative_numbers = true)]
    m: i64,
    #[arg(long = "n", allow_negative_numbers = true)]
    n: i64,
    /// `landing` (default) or `literal`.
    #[arg(long, default_value = "landing")]
    semantics: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Lemma,
    Theorem,
    Identity,
    Property,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// l values: a single value, an inclusive range `2..5`, or a list `2,3,5`.
    #[arg(long = "l", default_value = "2..5")]
    l_values: String,
    #[arg(long, default_value_t = 48, allow_negative_numbers = true)]
    n_max: i64,
    #[arg(long, default_value_t = 6, allow_negative_numbers = true)]
    d_max: i64,
    #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
    strips_max: i64,
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    shift_max: i64,
    #[arg(long, default_value = "landing")]
    semantics: String,
    /// Suites to run; repeat or comma-separate.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Suite::Lemma, Suite::Theorem])]
    suite: Vec<Suite>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    cases: usize,
    /// Where to write the report; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct PqArgs {
    #[arg(long, allow_negative_numbers = true)]
    j_max: i64,
    #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
    k_max: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// A usage error: reported on stderr, exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(args) => count(&args),
        Command::Oracle(args) => oracle(&args),
        Command::Paths(args) => paths(&args),
        Command::Compare(args) => compare(&args),
        Command::Pq(args) => pq(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn count(args: &CountArgs) -> Result<u8, Usage> {
    let (l, m, n) = (args.l, args.m, args.n);
    if l < 2 {
        return Err(Usage(format!("--l must be at least 2, got {l}")));
    }
    if n < 0 || m < 0 {
        return Err(Usage(format!(
            "--m and --n must be non-negative, got M = {m}, N = {n}"
        )));
    }
    if (m + n) % 2 != 0 {
        return Err(Usage(format!(
            "parity: M + N = {} is odd, so no path reaches ({m}, {n})\nhint: try --n {} or --n {}",
            m + n,
            n - 1,
            n + 1
        )));
    }
    let strip = StripIndex::of(l, m).get();
    let formula = match args.formula {
        FormulaChoice::Auto if strip == 1 => FormulaChoice::Desire1,
        FormulaChoice::Auto => FormulaChoice::Mj,
        other => other,
    };
    let value = match formula {
        FormulaChoice::Desire1 => closed_form::wall_filter_strip1(l, m, n),
        FormulaChoice::Desire2 => closed_form::wall_filter_right(l, m, n),
        FormulaChoice::Th3 => closed_form::two_filters(l, m, n),
        FormulaChoice::Th4 => closed_form::wall_two_filters(l, m, n),
        FormulaChoice::Mj | FormulaChoice::Auto => closed_form::multiplicity(l, m, n),
    }?;
    let record = Record::new()
        .big("value", &value)
        .int("strip", strip)
        .text("formula", formula.id())
        .int("l", l)
        .int("M", m)
        .int("N", n);
    print!("{}", record.render(args.format));
    Ok(0)
}

fn query(args: &QueryArgs) -> Result<PathQuery, Usage> {
    let semantics: Semantics = args.semantics.parse()?;
    let arrangement = args
        .arrangement
        .parse::<Arrangement>()?
        .with_semantics(semantics);
    if args.n < 0 {
        return Err(Usage(format!("--n must be non-negative, got {}", args.n)));
    }
    Ok(PathQuery::starting_at(
        args.start,
        args.m,
        args.n,
        arrangement,
    ))
}

fn describe(q: &PathQuery) -> Record {
    Record::new()
        .text("arrangement", &q.arrangement.to_string())
        .text("semantics", q.arrangement.semantics().name())
        .int("start", q.start.x)
        .int("M", q.end_m)
        .int("N", q.end_n)
}

fn oracle(args: &QueryArgs) -> Result<u8, Usage> {
    let q = query(args)?;
    let value = dp_count(&q)?;
    let record = Record::new().big("value", &value).extend(describe(&q));
    print!("{}", record.render(args.format));
    Ok(0)
}

fn paths(args: &QueryArgs) -> Result<u8, Usage> {
    let q = query(args)?;
    let found = enumerate_paths(&q)?;
    let total: ExactInt = found.iter().map(|p| &p.weight).sum();
    let out = match args.format {
        Format::Text => {
            let mut s = String::new();
            for p in &found {
                let word = p.word();
                s.push_str(&format!(
                    "{} {}\n",
                    if word.is_empty() { "-" } else { &word },
                    p.weight
                ));
            }
            s.push_str(&format!("paths: {}\ntotal: {}\n", found.len(), total));
            s
        }
        Format::Csv => {
            let mut s = String::from("word,weight\n");
            for p in &found {
                s.push_str(&format!("{},{}\n", p.word(), p.weight));
            }
            s
        }
        Format::Json => {
            let list: Vec<_> = found
                .iter()
                .map(|p| json!({ "word": p.word(), "weight": p.weight.to_string() }))
                .collect();
            let doc = json!({
                "paths": list,
                "count": found.len(),
                "total": total.to_string(),
                "query": describe(&q).to_json(),
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("json values serialize")
            )
        }
    };
    print!("{out}");
    Ok(0)
}

/// Parses `2`, `2..5` (inclusive) or `2,3,5`.
fn parse_l_values(text: &str) -> Result<Vec<i64>, Usage> {
    let bad = || Usage(format!("cannot parse --l `{text}`"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| bad())?;
        if hi < lo {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect()
}

fn compare(args: &CompareArgs) -> Result<u8, Usage> {
    let spec = SweepSpec {
        l_values: parse_l_values(&args.l_values)?,
        n_max: args.n_max,
        d_max: args.d_max,
        strips_max: args.strips_max,
        shift_max: args.shift_max,
        semantics: args.semantics.parse()?,
    };
    spec.validate()?;
    let mut reports = Vec::new();
    for suite in &args.suite {
        reports.push(match suite {
            Suite::Lemma => verify::run_lemma_suite(&spec)?,
            Suite::Theorem => verify::run_theorem_suite(&spec)?,
            Suite::Identity => verify::run_identity_suite(&spec)?,
            Suite::Property => verify::run_property_suite(args.seed, args.cases)?,
        });
    }
    let report = CompareReport::merge(reports);
    let body = render::report(&report, args.format);
    match &args.output {
        Some(path) => {
            fs::write(path, body)
                .map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))?;
            println!(
                "total: {} mismatches: {}",
                report.summary.total, report.summary.mismatches
            );
        }
        None => print!("{body}"),
    }
    Ok(if report.is_clean() { 0 } else { 1 })
}

fn pq(args: &PqArgs) -> Result<u8, Usage> {
    if args.j_max < 2 {
        return Err(Usage(format!(
            "--j-max must be at least 2, got {}",
            args.j_max
        )));
    }
    if args.k_max < 0 {
        return Err(Usage(format!(
            "--k-max must be non-negative, got {}",
            args.k_max
        )));
    }
    let table = closed_form::pq_table(args.j_max, args.k_max);
    let verdict = closed_form::pq_recurrence_check(args.j_max, args.k_max);
    print!("{}", render::pq(&table, &verdict, args.format));
    Ok(0)
}
