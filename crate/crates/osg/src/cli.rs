//! The `osg` command line.
//!
//! Exit codes: 0 success, 1 usage, input or format error, 2 a run that
//! produced failures (the report is still written) or a replay that did
//! not reproduce.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use osg_core::conjecture::{parse_conjecture, replay_conjecture, CONJECTURE_CHECK};
use osg_core::enumeration::enumerate_ideals_with;
use osg_core::generation::{generate_corpus, GenerationSpec};
use osg_core::ideals::is_ideal_with;
use osg_core::outcome::{CheckResult, Status, Value};
use osg_core::verifier::{validate_witness_with, CheckId, Expectation};
use osg_core::{Conventions, IdealKind, OrderedSemigroup, Potency, MAX_POTENCY};

use crate::corpus::{parse_corpus, write_corpus};
use crate::report::{corpus_hash, read_report, write_report, Header, Summary};
use crate::suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAILURES: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "osg",
    version,
    about = "Ideals, corpora and check reports for finite ordered semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ConventionArgs {
    /// Require m-bi-interior ideals to be subsemigroups.
    #[arg(long)]
    strict_bi_interior: bool,
    /// Ignore one-element ideals when deciding left/right simplicity.
    #[arg(long)]
    exempt_singletons: bool,
}

impl ConventionArgs {
    fn conventions(&self) -> Conventions {
        Conventions {
            strict_bi_interior: self.strict_bi_interior,
            exempt_singletons: self.exempt_singletons,
        }
    }
}

#[derive(Debug, Args)]
struct Target {
    /// Corpus file in `.osg` format.
    #[arg(long)]
    file: PathBuf,
    /// Structure name; may be omitted when the file holds one record.
    #[arg(long)]
    structure: Option<String>,
    #[arg(long, value_parser = parse_kind)]
    kind: IdealKind,
    #[arg(long, default_value = "1", value_parser = parse_potency)]
    m: Potency,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a corpus file and validate every record.
    Validate { file: PathBuf },
    /// Decide whether a subset is an ideal of the given kind.
    Check {
        #[command(flatten)]
        target: Target,
        /// Comma-separated element indices.
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[command(flatten)]
        conv: ConventionArgs,
    },
    /// List every ideal of the given kind, one per line.
    Enum {
        #[command(flatten)]
        target: Target,
        /// Print only the number of ideals.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        conv: ConventionArgs,
    },
    /// Write every ordered semigroup up to an order as a corpus.
    Generate {
        #[arg(long)]
        max_order: usize,
        /// Keep one representative per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run registry checks over a corpus and write a JSON-lines report.
    Verify {
        #[arg(long)]
        corpus: PathBuf,
        /// Potencies, `a..b` (inclusive) or a single value.
        #[arg(long, default_value = "1..3", value_parser = parse_potencies)]
        m: Potencies,
        /// Comma-separated check ids, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        conv: ConventionArgs,
    },
    /// Check one conjecture over a corpus and write a JSON-lines report.
    Conjecture {
        /// Conjecture text, e.g. `forall A in all: A <= cl(A)`.
        text: String,
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value = "1", value_parser = parse_potencies)]
        m: Potencies,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-evaluate one failure row of a report through the definitions.
    Replay {
        #[arg(long)]
        report: PathBuf,
        /// 0-based index among the report's result rows.
        #[arg(long)]
        row: usize,
        /// Corpus to use instead of the one named in the report header.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Debug, Clone)]
struct Potencies(Vec<Potency>);

fn parse_kind(s: &str) -> Result<IdealKind, String> {
    s.parse().map_err(|()| {
        let names: Vec<&str> = IdealKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown kind `{s}`, expected one of {}", names.join(", "))
    })
}

fn parse_potency(s: &str) -> Result<Potency, String> {
    let k: u32 = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a potency"))?;
    Potency::new(k).map_err(|_| format!("potency must be 1..={MAX_POTENCY}, found {k}"))
}

fn parse_potencies(s: &str) -> Result<Potencies, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (
            parse_potency(a)?,
            parse_potency(b.strip_prefix('=').unwrap_or(b))?,
        ),
        None => {
            let k = parse_potency(s)?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(format!("empty potency range `{s}`"));
    }
    Ok(Potencies(
        Potency::all().filter(|k| (lo..=hi).contains(k)).collect(),
    ))
}

type Outcome = Result<i32, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<(String, Vec<OrderedSemigroup>), String> {
    let text = read(path)?;
    let corpus = parse_corpus(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((text, corpus))
}

fn pick<'a>(
    corpus: &'a [OrderedSemigroup],
    name: Option<&str>,
) -> Result<&'a OrderedSemigroup, String> {
    match (name, corpus) {
        (Some(n), _) => corpus
            .iter()
            .find(|s| s.name() == n)
            .ok_or_else(|| format!("no structure named `{n}`")),
        (None, [only]) => Ok(only),
        (None, _) => Err(format!(
            "the file holds {} structures; pick one with --structure",
            corpus.len()
        )),
    }
}

fn parse_elements(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| format!("`{t}` is not an element index"))
        })
        .collect()
}

fn emit(
    out: Option<&Path>,
    stdout: &mut dyn Write,
    write: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), String> {
    match out {
        Some(path) => {
            let f = fs::File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let mut w = io::BufWriter::new(f);
            write(&mut w).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => write(stdout).map_err(|e| e.to_string()),
    }
}

fn print_summary(err: &mut dyn Write, summary: &Summary) {
    for t in &summary.checks {
        let _ = writeln!(
            err,
            "{:<10} holds {:>6}  fails {:>6}  skipped {:>6}  errors {:>4}",
            t.check, t.holds, t.fails, t.skipped, t.errors
        );
    }
    let _ = writeln!(err, "{} results", summary.results);
}

fn header(
    command: &str,
    path: &Path,
    text: &str,
    corpus: &[OrderedSemigroup],
    m: &Potencies,
    conv: Conventions,
) -> Header {
    Header {
        tool: "osg".into(),
        version: osg_core::VERSION.into(),
        command: command.into(),
        corpus: path.display().to_string(),
        corpus_sha256: corpus_hash(text),
        structures: corpus.len(),
        potencies: m.0.iter().map(|k| k.get() as u32).collect(),
        checks: Vec::new(),
        conjecture: None,
        strict_bi_interior: conv.strict_bi_interior,
        exempt_singletons: conv.exempt_singletons,
    }
}

fn describe(r: &CheckResult) -> String {
    let mut s = format!("{} {} m={}", r.structure, r.check, r.m);
    if let Some(d) = r.direction {
        s += &format!(" [{d}]");
    }
    if let Some(w) = &r.witness {
        let parts: Vec<String> = w
            .iter()
            .map(|b| match b.value {
                Value::Subset(x) => format!("{}={x}", b.var),
                Value::Element(a) => format!("{}={a}", b.var),
                Value::Potency(k) => format!("{}={k}", b.var),
            })
            .collect();
        s += &format!(" with {}", parts.join(", "));
    }
    s
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let w = |e: io::Error| e.to_string();
    match cmd {
        Command::Validate { file } => {
            let (_, corpus) = load(&file)?;
            for s in &corpus {
                writeln!(
                    out,
                    "{}: order {}, {} strict pairs",
                    s.name(),
                    s.size(),
                    s.strict_pairs().len()
                )
                .map_err(w)?;
            }
            writeln!(out, "ok: {} structures", corpus.len()).map_err(w)?;
            Ok(EXIT_OK)
        }
        Command::Check {
            target,
            subset,
            conv,
        } => {
            let (_, corpus) = load(&target.file)?;
            let s = pick(&corpus, target.structure.as_deref())?;
            let b = s
                .subset(parse_elements(&subset)?)
                .map_err(|e| e.to_string())?;
            let verdict = is_ideal_with(s, &b, target.kind, target.m, &conv.conventions())
                .map_err(|e| e.to_string())?;
            writeln!(out, "{verdict}").map_err(w)?;
            Ok(EXIT_OK)
        }
        Command::Enum {
            target,
            count,
            conv,
        } => {
            let (_, corpus) = load(&target.file)?;
            let s = pick(&corpus, target.structure.as_deref())?;
            let list = enumerate_ideals_with(s, target.kind, target.m, &conv.conventions());
            if count {
                writeln!(out, "{}", list.len()).map_err(w)?;
            } else {
                for b in &list.subsets {
                    writeln!(out, "{b}").map_err(w)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Generate {
            max_order,
            up_to_iso,
            out: path,
        } => {
            let spec = GenerationSpec::new(max_order, up_to_iso).map_err(|e| e.to_string())?;
            let corpus = generate_corpus(&spec).map_err(|e| e.to_string())?;
            let text = write_corpus(&corpus);
            emit(path.as_deref(), out, |o| o.write_all(text.as_bytes()))?;
            let _ = writeln!(err, "{} structures", corpus.len());
            Ok(EXIT_OK)
        }
        Command::Verify {
            corpus: path,
            m,
            checks,
            out: dest,
            conv,
        } => {
            let checks = CheckId::parse_list(&checks).map_err(|e| e.to_string())?;
            let (text, corpus) = load(&path)?;
            let conv = conv.conventions();
            let mut h = header("verify", &path, &text, &corpus, &m, conv);
            h.checks = checks.iter().map(|c| c.as_str().to_string()).collect();
            let results = suite::verify(&corpus, &m.0, &checks, &conv);
            let mut summary = None;
            emit(dest.as_deref(), out, |o| {
                summary = Some(write_report(o, &h, &results)?);
                Ok(())
            })?;
            print_summary(err, &summary.expect("written"));
            let theorem_broken = results.iter().any(|r| {
                r.is_failure()
                    && r.check
                        .parse::<CheckId>()
                        .is_ok_and(|c| c.expectation() == Expectation::Theorem)
            });
            let errored = results.iter().any(|r| matches!(r.status, Status::Error(_)));
            if theorem_broken {
                let _ = writeln!(err, "theorem-status checks failed");
            }
            Ok(if theorem_broken || errored {
                EXIT_FAILURES
            } else {
                EXIT_OK
            })
        }
        Command::Conjecture {
            text: source,
            corpus: path,
            m,
            out: dest,
        } => {
            let c = parse_conjecture(&source).map_err(|e| format!("conjecture:{e}"))?;
            let (text, corpus) = load(&path)?;
            let mut h = header(
                "conjecture",
                &path,
                &text,
                &corpus,
                &m,
                Conventions::default(),
            );
            h.checks = vec![CONJECTURE_CHECK.into()];
            h.conjecture = Some(source);
            let results = suite::conjecture(&corpus, &m.0, &c);
            let mut summary = None;
            emit(dest.as_deref(), out, |o| {
                summary = Some(write_report(o, &h, &results)?);
                Ok(())
            })?;
            print_summary(err, &summary.expect("written"));
            let bad = results
                .iter()
                .any(|r| r.is_failure() || matches!(r.status, Status::Error(_)));
            Ok(if bad { EXIT_FAILURES } else { EXIT_OK })
        }
        Command::Replay {
            report,
            row,
            corpus,
        } => replay(&report, row, corpus.as_deref(), out),
    }
}

fn replay(report_path: &Path, k: usize, corpus: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let f = fs::File::open(report_path).map_err(|e| format!("{}: {e}", report_path.display()))?;
    let report =
        read_report(BufReader::new(f)).map_err(|e| format!("{}: {e}", report_path.display()))?;
    let row = report.results.get(k).ok_or_else(|| {
        format!(
            "row {k} out of range; the report has {} result rows",
            report.results.len()
        )
    })?;
    let result = row.to_result().map_err(|e| format!("row {k}: {e}"))?;
    if !result.is_failure() {
        return Err(format!(
            "row {k} has status `{}`; only `fails` rows replay",
            row.status
        ));
    }

    let path = match corpus {
        Some(p) => p.to_path_buf(),
        None => {
            let named = PathBuf::from(&report.header.corpus);
            let beside = report_path.parent().map(|d| d.join(&named));
            match beside {
                Some(b) if !named.exists() && b.exists() => b,
                _ => named,
            }
        }
    };
    let (text, structures) = load(&path)?;
    if corpus_hash(&text) != report.header.corpus_sha256 {
        return Err(format!(
            "{} does not match the corpus hash recorded in the report",
            path.display()
        ));
    }
    let s = pick(&structures, Some(&result.structure))?;

    let reproduced = if result.check == CONJECTURE_CHECK {
        let source = report
            .header
            .conjecture
            .as_deref()
            .ok_or("conjecture row without conjecture text in the header")?;
        let c = parse_conjecture(source).map_err(|e| format!("conjecture:{e}"))?;
        let witness = result
            .witness
            .as_deref()
            .ok_or("failure row without a witness")?;
        replay_conjecture(s, &c, result.m, witness)
    } else {
        validate_witness_with(s, &result, &report.header.conventions())
    }
    .map_err(|e| format!("row {k}: {e}"))?;

    let verdict = if reproduced {
        "reproduced"
    } else {
        "not reproduced"
    };
    writeln!(out, "row {k}: {}: {verdict}", describe(&result)).map_err(|e| e.to_string())?;
    Ok(if reproduced { EXIT_OK } else { EXIT_FAILURES })
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}
