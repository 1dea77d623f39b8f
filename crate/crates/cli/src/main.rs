use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rootarr_core::classify::classify_ideal_unchecked;
use rootarr_core::suites::{Suite, SuiteOutcome};
use rootarr_core::survey::{survey, SurveyReport, SCHEMA};
use rootarr_core::{ClassificationRecord, Family, Ideal, RootSystem, TypeLabel};

/// Largest rank surveyed without `--force`.
const DESK_RANK: usize = 6;

#[derive(Parser)]
#[command(name = "rootarr", version, about = "Root posets, order ideals and supersolvable root ideal arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots, heights and cover relations.
    Show {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classify the ideal generated by the given roots.
    Classify {
        #[command(flatten)]
        ty: TypeArg,
        /// Comma-separated generators in coordinate form, e.g. 1110,1101,0111.
        #[arg(long, default_value = "")]
        ideal: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify every ideal of a type and check that the verdicts agree.
    Survey {
        #[command(flatten)]
        ty: TypeArg,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Report file. Without it the report goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Allow ranks above 6 (E7 takes minutes, E8 much longer).
        #[arg(long)]
        force: bool,
        /// Print ideals on which greedy peeling gets stuck.
        #[arg(long)]
        log_greedy: bool,
    },
    /// Run exhaustive property suites.
    Verify {
        /// Suites to run (comma-separated); all by default.
        #[arg(long = "suite", value_delimiter = ',')]
        suites: Vec<String>,
        /// Types to run them on (comma-separated).
        #[arg(long, value_delimiter = ',', default_value = "A3,B3,C3,D4,G2,F4")]
        types: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct TypeArg {
    /// Type label such as D4, or a bare family letter together with --rank.
    #[arg(long = "type")]
    ty: String,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// A failure with its exit code: 1 for property failures, 2 for bad input.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure { code: 2, error: error.into() }
}

fn failed(error: impl Into<anyhow::Error>) -> Failure {
    Failure { code: 1, error: error.into() }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        failed(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        failed(e)
    }
}

impl TypeArg {
    fn label(&self) -> Result<TypeLabel, Failure> {
        let label = match self.rank {
            Some(r) => {
                let letter = self.ty.trim();
                let mut chars = letter.chars();
                let family = match (chars.next(), chars.next()) {
                    (Some(c), None) => Family::from_letter(c),
                    _ => None,
                };
                let family = family.ok_or_else(|| usage(anyhow!("--rank needs a bare family letter, got `{letter}`")))?;
                TypeLabel::new(family, r)
            }
            None => self.ty.parse(),
        };
        label.map_err(usage)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if is_broken_pipe(&f.error) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| c.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Show { ty, format } => show(&RootSystem::build(ty.label()?), format),
        Command::Classify { ty, ideal, format } => classify(&RootSystem::build(ty.label()?), &ideal, format),
        Command::Survey { ty, jobs, out, format, force, log_greedy } => {
            let label = ty.label()?;
            if label.rank() > DESK_RANK && !force {
                return Err(usage(anyhow!(
                    "{label} has rank {} > {DESK_RANK}; pass --force to survey it (E7: 4160 ideals, minutes; E8: 25080 ideals, hours)",
                    label.rank()
                )));
            }
            survey_cmd(&RootSystem::build(label), jobs, out.as_deref(), format, log_greedy)
        }
        Command::Verify { suites, types, format } => verify(&suites, &types, format),
    }
}

#[derive(Serialize)]
struct ShowRoot {
    index: usize,
    root: String,
    height: usize,
}

#[derive(Serialize)]
struct ShowReport {
    type_label: String,
    rank: usize,
    roots: Vec<ShowRoot>,
    covers: Vec<(String, String)>,
    cartan: Vec<Vec<i64>>,
}

fn show(rs: &RootSystem, format: Format) -> Result<(), Failure> {
    let roots: Vec<ShowRoot> =
        (0..rs.len()).map(|i| ShowRoot { index: i, root: rs.format_root(i), height: rs.height(i) }).collect();
    let covers = rs.poset().covers().iter().map(|&(a, b)| (rs.format_root(a), rs.format_root(b))).collect();
    let report = ShowReport {
        type_label: rs.label().to_string(),
        rank: rs.rank(),
        roots,
        covers,
        cartan: rs.cartan().to_vec(),
    };
    let mut out = io::stdout().lock();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).map_err(failed)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &report.roots {
                w.serialize(r).map_err(failed)?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "{}: {} positive roots", report.type_label, report.roots.len())?;
            let top = rs.len().checked_sub(1).map_or(0, |i| rs.height(i));
            for h in (1..=top).rev() {
                let level: Vec<_> = report.roots.iter().filter(|r| r.height == h).map(|r| r.root.as_str()).collect();
                writeln!(out, "height {h}: {}", level.join(" "))?;
            }
            writeln!(out, "covers:")?;
            for (a, b) in &report.covers {
                writeln!(out, "  {a} < {b}")?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CsvRecord {
    ideal: String,
    size: usize,
    rank: usize,
    chain_peelable: bool,
    supersolvable: bool,
    line_closed: bool,
    bad_ideal_free: bool,
    koszul: bool,
    bad_ideal: String,
    exponents: String,
    greedy_peeling_stuck: bool,
}

impl From<&ClassificationRecord> for CsvRecord {
    fn from(r: &ClassificationRecord) -> Self {
        CsvRecord {
            ideal: r.ideal.join(" "),
            size: r.size,
            rank: r.rank,
            chain_peelable: r.chain_peelable,
            supersolvable: r.supersolvable,
            line_closed: r.line_closed,
            bad_ideal_free: r.bad_ideal_free,
            koszul: r.koszul,
            bad_ideal: r.bad_ideal.as_ref().map(|w| format!("{:?}", w.kind).to_lowercase()).unwrap_or_default(),
            exponents: r.exponents.as_ref().map(|e| e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).unwrap_or_default(),
            greedy_peeling_stuck: r.greedy_peeling_stuck,
        }
    }
}

fn write_csv<W: Write>(out: W, records: &[ClassificationRecord]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRecord::from(r)).map_err(failed)?;
    }
    w.flush()?;
    Ok(())
}

fn classify(rs: &RootSystem, text: &str, format: Format) -> Result<(), Failure> {
    let ideal = Ideal::parse(rs, text).map_err(usage)?;
    let record = classify_ideal_unchecked(&ideal);
    match format {
        Format::Csv => write_csv(io::stdout().lock(), std::slice::from_ref(&record))?,
        _ => writeln!(io::stdout().lock(), "{}", serde_json::to_string_pretty(&record).map_err(failed)?)?,
    }
    let v = record.violations();
    if v.is_empty() {
        Ok(())
    } else {
        Err(failed(anyhow!("predicates disagree: {}", v.join("; "))))
    }
}

fn cache_path(rs: &RootSystem) -> Option<PathBuf> {
    let dir = std::env::var_os("ROOTARR_CACHE_DIR")?;
    Some(Path::new(&dir).join(format!("survey-{}-v{}.json", rs.label(), env!("CARGO_PKG_VERSION"))))
}

fn load_cached(path: &Path, rs: &RootSystem) -> Option<SurveyReport> {
    let text = fs::read_to_string(path).ok()?;
    let report: SurveyReport = serde_json::from_str(&text).ok()?;
    (report.schema == SCHEMA
        && report.tool_version == env!("CARGO_PKG_VERSION")
        && report.type_label == rs.label().to_string())
    .then_some(report)
}

fn survey_cmd(rs: &RootSystem, jobs: usize, out: Option<&Path>, format: Format, log_greedy: bool) -> Result<(), Failure> {
    let cache = cache_path(rs);
    let cached = cache.as_deref().and_then(|p| load_cached(p, rs));
    let report = match cached {
        Some(r) => {
            eprintln!("using cached records from {}", cache.as_deref().unwrap().display());
            SurveyReport::from_records(rs, r.records, r.timing_seconds)
        }
        None => {
            let r = survey(rs, jobs);
            if let Some(p) = &cache {
                if let Some(dir) = p.parent() {
                    fs::create_dir_all(dir)?;
                }
                fs::write(p, serde_json::to_string(&r).map_err(failed)?).with_context(|| format!("writing {}", p.display()))?;
            }
            r
        }
    };

    if log_greedy {
        for r in report.records.iter().filter(|r| r.greedy_peeling_stuck) {
            eprintln!("greedy peeling stuck on {{{}}}", r.ideal.join(", "));
        }
        eprintln!("greedy peeling stuck on {} of {} peelable ideals", report.summary.greedy_peeling_stuck, report.summary.chain_peelable);
    }

    let body = match format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(&mut buf, &report.records)?;
            buf
        }
        _ => {
            let mut s = serde_json::to_string_pretty(&report).map_err(failed)?;
            s.push('\n');
            s.into_bytes()
        }
    };
    match out {
        Some(p) => {
            fs::write(p, body).with_context(|| format!("writing {}", p.display()))?;
            print_summary(&mut io::stdout().lock(), &report)?;
        }
        None => {
            io::stdout().lock().write_all(&body)?;
            print_summary(&mut io::stderr().lock(), &report)?;
        }
    }
    if report.equivalence_ok {
        Ok(())
    } else {
        for v in &report.violations {
            eprintln!("violation on {{{}}}: {}", v.ideal.join(", "), v.detail);
        }
        Err(failed(anyhow!("{} equivalence violations", report.violations.len())))
    }
}

fn print_summary(out: &mut dyn Write, r: &SurveyReport) -> io::Result<()> {
    let s = &r.summary;
    writeln!(out, "type            {}", r.type_label)?;
    writeln!(out, "ideals          {}", r.ideal_count)?;
    writeln!(out, "chain peelable  {}", s.chain_peelable)?;
    writeln!(out, "supersolvable   {}", s.supersolvable)?;
    writeln!(out, "line-closed     {}", s.line_closed)?;
    writeln!(out, "bad-ideal-free  {}", s.bad_ideal_free)?;
    writeln!(out, "koszul          {}", s.koszul)?;
    writeln!(out, "not ss          {}", s.non_supersolvable)?;
    writeln!(out, "star / F4       {} / {}", s.star_witnesses, s.f4_witnesses)?;
    writeln!(out, "equivalence     {}", if r.equivalence_ok { "ok" } else { "VIOLATED" })?;
    writeln!(out, "seconds         {:.3}", r.timing_seconds)
}

fn verify(suites: &[String], types: &[String], format: Format) -> Result<(), Failure> {
    let suites: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites.iter().map(|s| s.parse().map_err(|e: String| usage(anyhow!(e)))).collect::<Result<_, _>>()?
    };
    let labels: Vec<TypeLabel> = types.iter().map(|t| t.parse().map_err(usage)).collect::<Result<_, _>>()?;
    let mut outcomes: Vec<SuiteOutcome> = Vec::new();
    for label in labels {
        let rs = RootSystem::build(label);
        for &suite in &suites {
            outcomes.push(suite.run(&rs));
        }
    }
    let mut out = io::stdout().lock();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&outcomes).map_err(failed)?)?,
        _ => {
            for o in &outcomes {
                let status = if o.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {} {} checked={} failures={}", o.suite, o.type_label, o.checked, o.failure_count)?;
                for n in &o.notes {
                    writeln!(out, "  note: {n}")?;
                }
                for f in &o.failures {
                    writeln!(out, "  counterexample: {f}")?;
                }
            }
        }
    }
    let failed_count = outcomes.iter().filter(|o| !o.passed()).count();
    if failed_count == 0 {
        Ok(())
    } else {
        Err(failed(anyhow!("{failed_count} suite runs failed")))
    }
}
