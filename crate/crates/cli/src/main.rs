use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use tangentcone::enumerate::{SemigroupTree, TreeBounds};
use tangentcone::oracle::{check_analysis, consistency_report};
use tangentcone::{Analysis, Error, NumericalSemigroup, Report};

/// Largest genus bound accepted without a warning.
const DESK_GENUS: usize = 25;
/// Semigroups classified per parallel batch.
const CHUNK: usize = 4096;

#[derive(Parser, Debug)]
#[command(
    name = "tangentcone",
    version,
    about = "Tangent cones of numerical semigroup rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report for one semigroup.
    Report(SingleArgs),
    /// Apery table of the powers of the maximal ideal.
    Table(SingleArgs),
    /// Recompute everything with the brute-force oracles.
    Selfcheck(SelfcheckArgs),
    /// Enumerate a family of semigroups and classify each one.
    Batch(BatchArgs),
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Render decompositions as "F + F(-1)^2 + F/x^1(-2)".
    #[arg(long)]
    ascii: bool,
}

#[derive(Args, Debug)]
struct SingleArgs {
    /// Generators of the semigroup.
    #[arg(required = true, allow_negative_numbers = true)]
    generators: Vec<i64>,
    /// Also run the oracle cross-checks.
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct SelfcheckArgs {
    #[arg(required = true, allow_negative_numbers = true)]
    generators: Vec<i64>,
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// Enumerate all semigroups of genus at most N.
    #[arg(long, value_name = "N", required_unless_present = "max_frobenius")]
    max_genus: Option<usize>,
    #[arg(long, value_name = "M")]
    max_multiplicity: Option<i64>,
    #[arg(long, value_name = "F")]
    max_frobenius: Option<i64>,
    /// Keep only rows matching key=value (keys: e, r, cm, buchsbaum).
    #[arg(long, value_name = "KEY=VALUE")]
    filter: Vec<Filter>,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug)]
enum Filter {
    Multiplicity(i64),
    Reduction(usize),
    CohenMacaulay(bool),
    Buchsbaum(bool),
}

fn parse_bool(v: &str) -> Result<bool, String> {
    match v.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(format!("expected a boolean, got {v:?}")),
    }
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (key, value) = s.split_once('=').ok_or("filter must look like key=value")?;
        let int = |v: &str| v.trim().parse::<i64>().map_err(|e| format!("{v:?}: {e}"));
        match key.trim().to_ascii_lowercase().as_str() {
            "e" | "multiplicity" => Ok(Filter::Multiplicity(int(value)?)),
            "r" => Ok(Filter::Reduction(int(value)? as usize)),
            "cm" => Ok(Filter::CohenMacaulay(parse_bool(value.trim())?)),
            "buchsbaum" => Ok(Filter::Buchsbaum(parse_bool(value.trim())?)),
            other => Err(format!("unknown filter key {other:?}")),
        }
    }
}

/// One CSV row.
#[derive(Clone, Debug, Serialize)]
struct Row {
    generators: String,
    e: i64,
    b: usize,
    r: usize,
    cm: bool,
    buchsbaum: bool,
    decomposition: String,
}

impl Row {
    fn new(s: &NumericalSemigroup, a: &Analysis, ascii: bool) -> Self {
        let d = &a.decomposition;
        Row {
            generators: join(s.minimal_generators()),
            e: s.multiplicity(),
            b: s.embedding_dimension(),
            r: a.table.reduction_number(),
            cm: d.is_cohen_macaulay(),
            buchsbaum: a.buchsbaum.buchsbaum,
            decomposition: if ascii { d.render_ascii() } else { d.render() },
        }
    }

    fn matches(&self, f: &Filter) -> bool {
        match *f {
            Filter::Multiplicity(e) => self.e == e,
            Filter::Reduction(r) => self.r == r,
            Filter::CohenMacaulay(cm) => self.cm == cm,
            Filter::Buchsbaum(b) => self.buchsbaum == b,
        }
    }
}

fn join(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Failure kinds, mapped to exit codes.
enum Failure {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Internal(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.into())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.into())
    }
}

fn classify(e: Error) -> Failure {
    match e {
        Error::Semigroup(inner) => Failure::Input(anyhow!("invalid generators: {inner}")),
        other => Failure::Internal(anyhow!("internal invariant violated: {other}")),
    }
}

fn semigroup(gens: &[i64]) -> Result<NumericalSemigroup, Failure> {
    NumericalSemigroup::new(gens).map_err(|e| classify(e.into()))
}

fn sink(out: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn cmd_report(args: SingleArgs) -> Result<(), Failure> {
    let s = semigroup(&args.generators)?;
    let analysis = Analysis::of(&s).map_err(classify)?;
    let checks = if args.check {
        check_analysis(&s, &analysis).checks
    } else {
        Vec::new()
    };
    let mut report = Report::from_analysis(&args.generators, &s, &analysis, checks);
    if args.output.ascii {
        report.decomposition = analysis.decomposition.render_ascii();
    }
    let mut w = sink(&args.output.out)?;
    match args.output.format {
        Format::Text => write!(w, "{report}")?,
        Format::Json => writeln!(w, "{}", report.to_json()?)?,
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            csv.serialize(Row::new(&s, &analysis, args.output.ascii))?;
            csv.flush()?;
            return finish_checks(&report);
        }
    }
    w.flush()?;
    finish_checks(&report)
}

fn finish_checks(report: &Report) -> Result<(), Failure> {
    if report.checks_passed() {
        Ok(())
    } else {
        Err(Failure::Internal(anyhow!("oracle cross-checks failed")))
    }
}

fn cmd_table(args: SingleArgs) -> Result<(), Failure> {
    let s = semigroup(&args.generators)?;
    let table = tangentcone::build_apery_table(&s).map_err(classify)?;
    let mut w = sink(&args.output.out)?;
    match args.output.format {
        Format::Text => write!(w, "{table}")?,
        Format::Json => writeln!(w, "{}", serde_json::to_string(table.rows())?)?,
        Format::Csv => {
            let mut csv = csv::WriterBuilder::new().has_headers(false).from_writer(w);
            for (n, row) in table.rows().iter().enumerate() {
                let mut record = vec![n.to_string()];
                record.extend(row.iter().map(|x| x.to_string()));
                csv.write_record(&record)?;
            }
            csv.flush()?;
            return Ok(());
        }
    }
    w.flush()?;
    Ok(())
}

fn cmd_selfcheck(args: SelfcheckArgs) -> Result<(), Failure> {
    let s = semigroup(&args.generators)?;
    let report = consistency_report(&s);
    for c in &report.checks {
        let status = if c.passed { "ok" } else { "FAILED" };
        match &c.detail {
            Some(d) if !c.passed => println!("{status:>6}  {}: {d}", c.name),
            _ => println!("{status:>6}  {}", c.name),
        }
    }
    if report.all_passed() {
        println!("all {} checks passed", report.checks.len());
        Ok(())
    } else {
        let failed = report.failures().count();
        Err(Failure::Internal(anyhow!(
            "{failed} of {} checks failed",
            report.checks.len()
        )))
    }
}

enum Sink {
    Csv(Box<csv::Writer<Box<dyn Write>>>),
    Json { w: Box<dyn Write>, first: bool },
}

impl Sink {
    fn push(&mut self, row: &Row) -> Result<(), Failure> {
        match self {
            Sink::Csv(c) => c.serialize(row)?,
            Sink::Json { w, first } => {
                let sep = if *first { "[" } else { "," };
                *first = false;
                write!(w, "{sep}\n  {}", serde_json::to_string(row)?)?;
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<(), Failure> {
        match self {
            Sink::Csv(mut c) => c.flush()?,
            Sink::Json { mut w, first } => {
                writeln!(w, "{}", if first { "[]" } else { "\n]" })?;
                w.flush()?;
            }
        }
        Ok(())
    }
}

fn cmd_batch(args: BatchArgs) -> Result<(), Failure> {
    let bounds = TreeBounds {
        max_genus: args.max_genus,
        max_multiplicity: args.max_multiplicity,
        max_frobenius: args.max_frobenius,
    };
    if args.max_genus.is_some_and(|g| g > DESK_GENUS) {
        eprintln!("warning: genus bound above {DESK_GENUS}; the family may be very large");
    }

    let w = sink(&args.output.out)?;
    let mut out = match args.output.format {
        // Text has no tabular form of its own; it means CSV here.
        Format::Csv | Format::Text => Sink::Csv(Box::new(csv::Writer::from_writer(w))),
        Format::Json => Sink::Json { w, first: true },
    };
    let mut summary: BTreeMap<(i64, usize, bool, bool), usize> = BTreeMap::new();
    let mut tree = SemigroupTree::new(bounds);
    loop {
        let chunk: Vec<_> = tree.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        // par_iter + collect keeps tree order.
        let rows: Vec<Row> = chunk
            .par_iter()
            .map(|s| {
                Analysis::of(s)
                    .map(|a| Row::new(s, &a, args.output.ascii))
                    .map_err(classify)
            })
            .collect::<Result<_, _>>()?;
        for row in rows
            .into_iter()
            .filter(|r| args.filter.iter().all(|f| r.matches(f)))
        {
            *summary
                .entry((row.e, row.r, row.cm, row.buchsbaum))
                .or_default() += 1;
            out.push(&row)?;
        }
    }
    out.finish()?;

    let total: usize = summary.values().sum();
    eprintln!("{total} semigroups");
    eprintln!(
        "{:>3} {:>3} {:>5} {:>9} {:>8}",
        "e", "r", "cm", "buchsbaum", "count"
    );
    for ((e, r, cm, b), count) in &summary {
        eprintln!("{e:>3} {r:>3} {cm:>5} {b:>9} {count:>8}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Report(a) => cmd_report(a),
        Command::Table(a) => cmd_table(a),
        Command::Selfcheck(a) => cmd_selfcheck(a),
        Command::Batch(a) => {
            if a.max_genus.is_none() && a.max_frobenius.is_none() {
                return Err(Failure::Input(anyhow!(
                    "batch needs --max-genus or --max-frobenius"
                )));
            }
            cmd_batch(a)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
