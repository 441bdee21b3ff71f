//! Command-line front end. [`run`] takes the argument list and I/O handles
//! and returns the process exit code, so the binary is a thin wrapper and
//! tests can drive commands in process.
//!
//! Exit codes: 0 success or passing check, 1 failing check, 2 invalid input,
//! 3 resource cap exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dbcat::verify::{proof_decomposition, ConcatRule, UCPartition};
use dbcat::{
    construct, is_de_bruijn, is_universal_cycle, segments, target_set, ConstructionSpec,
    CyclicSequence, Error, Family, FamilyKind, Limits, OrderKind, Scheme, VerificationReport, Word,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "dbcat",
    version,
    about = "Generate and verify de Bruijn sequences and universal cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a sequence by concatenating the periodic reductions of a listing.
    Generate {
        /// lex-neck, colex-neck, revlex-rot, revcolex-con or lex-con.
        scheme: String,
        k: usize,
        n: usize,
        /// Use only the first (or last, depending on the scheme) M strings.
        #[arg(long, value_name = "M")]
        partial: Option<usize>,
        #[arg(long, value_enum, default_value_t = GenerateFormat::Segmented)]
        format: GenerateFormat,
        /// Largest k^n the command may enumerate.
        #[arg(long, value_name = "WORDS")]
        cap: Option<u64>,
    },
    /// Print a string family one word per line.
    ListFamily {
        /// neck, rot, con or c.
        family: String,
        k: usize,
        n: usize,
        #[arg(long, default_value = "lex")]
        order: String,
        #[arg(long, value_name = "WORDS")]
        cap: Option<u64>,
    },
    /// Check a sequence read from stdin (or --file).
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Check against this construction's target set instead of all
        /// k^n strings.
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long, value_name = "M", requires = "scheme")]
        partial: Option<usize>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Plain)]
        format: ReportFormat,
        #[arg(long, value_name = "WORDS")]
        cap: Option<u64>,
    },
    /// Evaluate the concatenation conditions on a list of cycles, or on the
    /// decomposition behind a construction.
    CheckConditions {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "cycles")]
        scheme: Option<String>,
        #[arg(long, value_name = "M", requires = "scheme")]
        partial: Option<usize>,
        /// Comma-separated cycles, in concatenation order.
        #[arg(long, value_delimiter = ',', required_unless_present = "scheme")]
        cycles: Vec<String>,
        /// Use the prefix-related form (boundary at the last cycle).
        #[arg(long, conflicts_with = "scheme")]
        corollary: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Plain)]
        format: ReportFormat,
        #[arg(long, value_name = "WORDS")]
        cap: Option<u64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GenerateFormat {
    Plain,
    Segmented,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReportFormat {
    Plain,
    Json,
}

#[derive(Serialize)]
struct GenerateJson<'a> {
    sequence: String,
    segments: Vec<String>,
    n: usize,
    k: usize,
    scheme: &'a str,
    m: Option<usize>,
    target_set_size: usize,
    verified: bool,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    n: usize,
    k: usize,
    scheme: Option<&'a str>,
    length: usize,
    verified: bool,
    report: &'a VerificationReport,
}

#[derive(Serialize)]
struct ConditionsJson<'a> {
    rule: &'a str,
    n: usize,
    k: usize,
    cycles: Vec<String>,
    passed: bool,
    conclusion_holds: bool,
    report: &'a VerificationReport,
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Generate {
            scheme,
            k,
            n,
            partial,
            format,
            cap,
        } => generate(&scheme, k, n, partial, format, limits(cap), stdout),
        Command::ListFamily {
            family,
            k,
            n,
            order,
            cap,
        } => list_family(&family, k, n, &order, limits(cap), stdout),
        Command::Verify {
            k,
            n,
            scheme,
            partial,
            file,
            format,
            cap,
        } => verify(
            k,
            n,
            scheme.as_deref(),
            partial,
            file,
            format,
            limits(cap),
            stdin,
            stdout,
        ),
        Command::CheckConditions {
            k,
            n,
            scheme,
            partial,
            cycles,
            corollary,
            format,
            cap,
        } => check_conditions(
            k,
            n,
            scheme.as_deref(),
            partial,
            &cycles,
            corollary,
            format,
            limits(cap),
            stdout,
        ),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            if matches!(e, Error::ResourceCap { .. }) {
                EXIT_CAP
            } else {
                EXIT_INVALID
            }
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_INVALID
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn limits(cap: Option<u64>) -> Limits {
    cap.map_or_else(Limits::default, Limits::new)
}

fn spec_for(
    scheme: &str,
    k: usize,
    n: usize,
    partial: Option<usize>,
) -> Result<ConstructionSpec, Failure> {
    let scheme: Scheme = scheme.parse()?;
    let spec = ConstructionSpec {
        scheme,
        k,
        n,
        m: partial,
    };
    spec.validate()?;
    Ok(spec)
}

fn generate(
    scheme: &str,
    k: usize,
    n: usize,
    partial: Option<usize>,
    format: GenerateFormat,
    limits: Limits,
    out: &mut dyn Write,
) -> Outcome {
    let spec = spec_for(scheme, k, n, partial)?;
    match format {
        GenerateFormat::Plain => {
            // Symbols go out as each segment is produced.
            let mut first = true;
            for segment in segments(&spec, &limits)? {
                if k > 10 {
                    for s in segment.symbols() {
                        if !first {
                            out.write_all(b" ")?;
                        }
                        write!(out, "{s}")?;
                        first = false;
                    }
                } else {
                    write!(out, "{segment}")?;
                }
            }
            writeln!(out)?;
        }
        GenerateFormat::Segmented => {
            let result = construct(&spec, &limits)?;
            writeln!(out, "{}", result.segmented())?;
        }
        GenerateFormat::Json => {
            let result = construct(&spec, &limits)?;
            let verified = is_universal_cycle(&result.sequence, &result.target_set, n).passed;
            let json = GenerateJson {
                sequence: result.sequence.to_string(),
                segments: result.segments.iter().map(Word::to_string).collect(),
                n,
                k,
                scheme: spec.scheme.name(),
                m: spec.m,
                target_set_size: result.target_set_size(),
                verified,
            };
            write_json(out, &json)?;
        }
    }
    Ok(EXIT_OK)
}

fn list_family(
    family: &str,
    k: usize,
    n: usize,
    order: &str,
    limits: Limits,
    out: &mut dyn Write,
) -> Outcome {
    let kind = FamilyKind::from_name(family)?;
    let order: OrderKind = order
        .parse()
        .map_err(|_| Failure::Usage(format!("unknown order `{order}`")))?;
    let family = Family::new(kind, k, n)?;
    for word in family.listing(order, &limits)? {
        writeln!(out, "{word}")?;
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    k: usize,
    n: usize,
    scheme: Option<&str>,
    partial: Option<usize>,
    file: Option<PathBuf>,
    format: ReportFormat,
    limits: Limits,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    let text = match file {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            text
        }
    };
    if text.trim().is_empty() {
        return Err(Failure::Usage("empty input".into()));
    }
    let sequence = CyclicSequence::new(Word::parse(&text, k)?);
    let spec = scheme.map(|s| spec_for(s, k, n, partial)).transpose()?;
    let report = match &spec {
        Some(spec) => is_universal_cycle(&sequence, &target_set(spec, &limits)?, n),
        None => {
            limits.check(k, n)?;
            is_de_bruijn(&sequence, k, n)
        }
    };

    match format {
        ReportFormat::Plain => writeln!(out, "{report}")?,
        ReportFormat::Json => write_json(
            out,
            &VerifyJson {
                n,
                k,
                scheme: spec.as_ref().map(|s| s.scheme.name()),
                length: sequence.len(),
                verified: report.passed,
                report: &report,
            },
        )?,
    }
    Ok(if report.passed { EXIT_OK } else { EXIT_FAILED })
}

#[allow(clippy::too_many_arguments)]
fn check_conditions(
    k: usize,
    n: usize,
    scheme: Option<&str>,
    partial: Option<usize>,
    cycles: &[String],
    corollary: bool,
    format: ReportFormat,
    limits: Limits,
    out: &mut dyn Write,
) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    let (rule, partition) = match scheme {
        Some(scheme) => {
            let d = proof_decomposition(&spec_for(scheme, k, n, partial)?, &limits)?;
            (d.rule, d.partition)
        }
        None => {
            let words = cycles
                .iter()
                .map(|c| Word::parse(c, k))
                .collect::<dbcat::Result<Vec<_>>>()?;
            if words.iter().any(Word::is_empty) {
                return Err(Failure::Usage("cycles must be non-empty".into()));
            }
            let rule = if corollary {
                ConcatRule::Corollary1
            } else {
                ConcatRule::Theorem1
            };
            (rule, UCPartition::from_cycles(words, n)?)
        }
    };
    let (rule_name, report, conclusion) = match rule {
        ConcatRule::Theorem1 => (
            "suffix-related",
            partition.check_theorem1(),
            partition.theorem1_conclusion_holds(),
        ),
        ConcatRule::Corollary1 => (
            "prefix-related",
            partition.check_corollary1(),
            partition.corollary1_conclusion_holds(),
        ),
    };

    match format {
        ReportFormat::Plain => {
            writeln!(out, "conditions ({rule_name}): {report}")?;
            let verdict = if conclusion { "holds" } else { "does not hold" };
            writeln!(out, "conclusion {verdict}")?;
        }
        ReportFormat::Json => write_json(
            out,
            &ConditionsJson {
                rule: rule_name,
                n,
                k,
                cycles: partition.cycles().map(Word::to_string).collect(),
                passed: report.passed,
                conclusion_holds: conclusion,
                report: &report,
            },
        )?,
    }
    Ok(if report.passed { EXIT_OK } else { EXIT_FAILED })
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}
