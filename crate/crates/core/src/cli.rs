//! The `nsg` command line.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage errors, 3 domain
//! errors. `NSG_TABLE_LIMIT` caps the table bound of every semigroup built
//! from the command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::classify::Flags;
use crate::error::{Error, Result};
use crate::goto::GotoBounds;
use crate::harness::{self, EnumSpec, Execution, Filter, SpecOverrides, VerificationReport};
use crate::semigroup::{parse_generators, NumericalSemigroup, SemigroupOptions, DEFAULT_TABLE_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "nsg", version, about = "Goto numbers and invariants of numerical semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full invariant report of a semigroup.
    Analyze {
        /// Generators, comma separated.
        generators: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Goto number of one element.
    Goto {
        generators: String,
        #[arg(long)]
        element: i64,
        /// Also run the brute-force oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a property over an enumeration.
    Verify {
        #[arg(long, required_unless_present = "list")]
        property: Option<String>,
        /// List the registered properties.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List semigroups within bounds.
    Enumerate {
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct Bounds {
    #[arg(long)]
    genus_max: Option<usize>,
    #[arg(long)]
    multiplicity: Option<i64>,
    #[arg(long)]
    max_multiplicity: Option<i64>,
    #[arg(long)]
    frobenius_max: Option<i64>,
    /// all, symmetric, m_pure, m_additive, or a custom predicate.
    #[arg(long)]
    filter: Option<String>,
}

impl Bounds {
    fn overrides(&self) -> Result<SpecOverrides> {
        Ok(SpecOverrides {
            genus_max: self.genus_max,
            multiplicity: self.multiplicity,
            multiplicity_max: self.max_multiplicity,
            frobenius_max: self.frobenius_max,
            filter: self.filter.as_deref().map(str::parse::<Filter>).transpose()?,
        })
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// The `analyze --format json` document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyzeReport {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub embedding_dim: usize,
    pub frobenius: i64,
    pub genus: usize,
    pub apery_w: Vec<i64>,
    pub apery_v: Vec<i64>,
    pub hat: Vec<i64>,
    pub t_set: Vec<i64>,
    pub goto_vector: Vec<i64>,
    pub tau: i64,
    pub rho: i64,
    /// `g(w)` for the nonzero Apery members `w`.
    pub goto_numbers: BTreeMap<i64, i64>,
    pub delta: i64,
    pub gamma: i64,
    pub ord_conductor: i64,
    pub g_a1: i64,
    pub reduction_number: i64,
    pub beta: Vec<usize>,
    pub flags: Flags,
}

impl AnalyzeReport {
    pub fn new(s: &NumericalSemigroup) -> Result<Self> {
        let rep = s.invariant_report()?;
        let table = s.apery_orderings();
        let gv = s.goto_vector()?;
        let goto_numbers = table
            .w
            .iter()
            .filter(|&&w| w != 0)
            .map(|&w| Ok((w, s.goto_number(w)?)))
            .collect::<Result<_>>()?;
        Ok(AnalyzeReport {
            generators: s.generators().to_vec(),
            multiplicity: s.multiplicity(),
            embedding_dim: s.embedding_dim(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            apery_w: table.w,
            apery_v: table.v,
            hat: table.hat,
            t_set: s.t_set()?,
            goto_vector: gv.sigma,
            tau: gv.tau,
            rho: gv.rho,
            goto_numbers,
            delta: rep.delta,
            gamma: rep.gamma,
            ord_conductor: rep.ord_conductor,
            g_a1: rep.g_a1,
            reduction_number: rep.reduction_number,
            beta: rep.beta,
            flags: rep.flags,
        })
    }
}

/// The `goto --format json` document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GotoReport {
    pub generators: Vec<i64>,
    pub element: i64,
    pub goto_number: i64,
    pub a_set: Vec<i64>,
    pub bounds: GotoBounds,
    pub family: String,
    pub closed_form: Option<i64>,
    pub oracle: Option<i64>,
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// The reader went away; nothing left to report.
    ClosedOutput,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownProperty(_)
            | Error::InvalidSpec(_)
            | Error::Parse(_)
            | Error::EmptyGenerators => Failure::Usage(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::ClosedOutput;
        }
        Failure::Domain(Error::InvalidArgument(e.to_string()))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        if let csv::ErrorKind::Io(io) = e.kind() {
            if io.kind() == std::io::ErrorKind::BrokenPipe {
                return Failure::ClosedOutput;
            }
        }
        Failure::Domain(Error::InvalidArgument(e.to_string()))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Domain(Error::InvalidArgument(e.to_string()))
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn table_limit() -> std::result::Result<i64, Failure> {
    match std::env::var("NSG_TABLE_LIMIT") {
        Ok(v) => v
            .trim()
            .parse::<i64>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Failure::Usage(format!("NSG_TABLE_LIMIT must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_TABLE_LIMIT),
    }
}

fn build(generators: &str) -> std::result::Result<NumericalSemigroup, Failure> {
    let gens = parse_generators(generators)?;
    let opts = SemigroupOptions {
        proper: false,
        table_limit: table_limit()?,
    };
    Ok(NumericalSemigroup::with_options(&gens, opts)?)
}

fn csv_usage(command: &str) -> Failure {
    Failure::Usage(format!("--format csv is only available for enumerate and verify, not {command}"))
}

fn json_line(value: &impl Serialize) -> std::result::Result<String, Failure> {
    Ok(serde_json::to_string(value)?)
}

fn analyze(out: &mut dyn Write, generators: &str, format: Format) -> Outcome {
    let s = build(generators)?;
    let report = AnalyzeReport::new(&s)?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        Format::Csv => return Err(csv_usage("analyze")),
        Format::Text => {
            // Each line is `key: value` with the value in compact JSON, so
            // the numbers are exactly those of the JSON document.
            let value = serde_json::to_value(&report)?;
            for (key, v) in value.as_object().unwrap() {
                writeln!(out, "{key}: {}", json_line(v)?)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn goto(out: &mut dyn Write, generators: &str, u: i64, oracle: bool, format: Format) -> Outcome {
    let s = build(generators)?;
    let family = s.detect_family()?;
    let report = GotoReport {
        generators: s.generators().to_vec(),
        element: u,
        goto_number: s.goto_number(u)?,
        a_set: s.a_set(u)?,
        bounds: s.goto_bounds(u)?,
        family: family.to_string(),
        closed_form: s.goto_closed_form(u)?,
        oracle: if oracle { Some(s.goto_number_oracle(u)?) } else { None },
    };
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        Format::Csv => return Err(csv_usage("goto")),
        Format::Text => {
            let b = &report.bounds;
            writeln!(out, "g({u}) = {}", report.goto_number)?;
            writeln!(out, "A({u}) = {}", json_line(&report.a_set)?)?;
            writeln!(out, "bounds: {} <= g({u}) <= {}", b.lower, b.upper)?;
            if let Some(m) = b.multiplicity_upper {
                writeln!(out, "bound for g(a1): g({u}) <= {m}")?;
            }
            if let Some(m) = b.largest_generator_lower {
                writeln!(out, "bound for g(a_nu): g({u}) >= {m}")?;
            }
            match report.closed_form {
                Some(v) => writeln!(out, "closed form ({}): {v}", report.family)?,
                None => writeln!(out, "closed form: none ({})", report.family)?,
            }
            if let Some(v) = report.oracle {
                writeln!(out, "oracle: {v}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn print_report(out: &mut dyn Write, r: &VerificationReport) -> std::io::Result<()> {
    writeln!(out, "property: {} ({})", r.property, r.description)?;
    match &r.spec {
        Some(spec) => writeln!(out, "spec: {}", json_line(spec).unwrap_or_default())?,
        None => writeln!(out, "spec: fixed corpus")?,
    }
    writeln!(
        out,
        "checked {}, passed {}, skipped {}, failed {}",
        r.checked, r.passed, r.skipped, r.failed
    )?;
    for line in &r.evidence {
        writeln!(out, "evidence: {line}")?;
    }
    for w in &r.witnesses {
        let gens: Vec<String> = w.generators.iter().map(i64::to_string).collect();
        writeln!(out, "witness <{}>: {}", gens.join(","), w.message)?;
    }
    for line in &r.corpus_failures {
        writeln!(out, "corpus failure: {line}")?;
    }
    let verdict = if r.experiment {
        "EXPERIMENT"
    } else if r.ok() {
        "OK"
    } else {
        "FAILED"
    };
    writeln!(out, "{verdict}")
}

fn verify(
    out: &mut dyn Write,
    id: &str,
    bounds: &Bounds,
    sequential: bool,
    format: Format,
) -> Outcome {
    let p = harness::property(id).ok_or_else(|| Error::UnknownProperty(id.to_string()))?;
    let spec = p.spec_with(&bounds.overrides()?)?;
    let (report, rows) = harness::verify_rows(id, Some(spec), execution(sequential))?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        Format::Text => print_report(out, &report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["generators", "outcome", "detail"])?;
            for row in rows {
                let gens: Vec<String> = row.generators.iter().map(i64::to_string).collect();
                w.write_record([gens.join(","), row.outcome, row.detail])?;
            }
            w.flush()?;
        }
    }
    Ok(if report.ok() { EXIT_OK } else { EXIT_FAILURES })
}

fn enumerate(out: &mut dyn Write, bounds: &Bounds, sequential: bool, format: Format) -> Outcome {
    let spec: EnumSpec = bounds.overrides()?.to_spec(Filter::All, None)?;
    let rows = harness::map_semigroups(&spec, execution(sequential), |s| {
        (s.generators().to_vec(), s.frobenius(), s.genus())
    })?;
    match format {
        Format::Text => {
            for (gens, _, _) in &rows {
                let parts: Vec<String> = gens.iter().map(i64::to_string).collect();
                writeln!(out, "{}", parts.join(","))?;
            }
        }
        Format::Json => {
            let all: Vec<&Vec<i64>> = rows.iter().map(|(g, _, _)| g).collect();
            writeln!(out, "{}", json_line(&all)?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["generators", "multiplicity", "embedding_dim", "frobenius", "genus"])?;
            for (gens, f, genus) in rows {
                let parts: Vec<String> = gens.iter().map(i64::to_string).collect();
                w.write_record([
                    parts.join(","),
                    gens[0].to_string(),
                    gens.len().to_string(),
                    f.to_string(),
                    genus.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Analyze { generators, format } => analyze(out, &generators, format),
        Command::Goto {
            generators,
            element,
            oracle,
            format,
        } => goto(out, &generators, element, oracle, format),
        Command::Verify {
            property,
            list,
            bounds,
            sequential,
            format,
        } => {
            if list {
                for id in harness::property_ids() {
                    let p = harness::property(id).unwrap();
                    writeln!(out, "{id}: {}", p.description)?;
                }
                return Ok(EXIT_OK);
            }
            verify(out, &property.unwrap_or_default(), &bounds, sequential, format)
        }
        Command::Enumerate {
            bounds,
            sequential,
            format,
        } => enumerate(out, &bounds, sequential, format),
    }
}

/// Run the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "nsg: usage error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "nsg: error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::ClosedOutput) => EXIT_OK,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("nsg").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn goto_text() {
        let (code, out, _) = call(&["goto", "5,6,9", "--element", "14", "--oracle"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("g(14) = 3\n"), "{out}");
        assert!(out.contains("oracle: 3"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["analyze", "4,6"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["goto", "4,5,7", "--element", "6"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--property", "nope"]).0, EXIT_USAGE);
        assert_eq!(call(&["analyze", "4,5,7", "--format", "csv"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn domain_error_is_one_line() {
        let (_, out, err) = call(&["analyze", "4,6"]);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
    }
}
