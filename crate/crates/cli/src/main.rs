//! `belief`: batch front end for the belief-core engine.
//!
//! Exit codes: 0 on success, 1 for input errors (unreadable or malformed
//! files, unknown labels, mismatched frames), 2 for domain errors such as
//! total conflict under the Dempster rule or a failed demo self-check.

mod demo;
mod table;

use belief_core::json::{self, format_number};
use belief_core::{
    belief, combine_all, conflict_level, entropy, graham_reduce, pbox_to_intervals, plausibility, reframe_signal,
    BodyOfEvidence, Error, FocalSet, Hypothesis, Rule,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Digits for scalar measure output.
const MEASURE_DIGITS: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "belief", version, about = "Combine and measure bodies of evidence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Combine two or more bodies, folding left in argument order.
    Combine {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = RuleArg::Dempster)]
        rule: RuleArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate a measure on one body (a combination report is accepted too).
    Measure {
        file: PathBuf,
        #[arg(long, value_enum)]
        measure: MeasureArg,
        /// Comma-separated labels; "*" for the whole frame, "" for the empty set.
        #[arg(long)]
        hypothesis: Option<String>,
        /// With `conflict`, also report whether m(∅) exceeds this level.
        #[arg(long)]
        threshold: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Slice a p-box into probabilities on intervals.
    Pbox {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide whether a hypergraph is a hypertree by Graham reduction.
    Hypertree {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a built-in scenario and check its numbers.
    Demo {
        #[arg(value_enum)]
        name: demo::Demo,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum RuleArg {
    Dempster,
    Smets,
    Pcr5,
}

impl From<RuleArg> for Rule {
    fn from(r: RuleArg) -> Rule {
        match r {
            RuleArg::Dempster => Rule::Dempster,
            RuleArg::Smets => Rule::Smets,
            RuleArg::Pcr5 => Rule::Pcr5,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MeasureArg {
    Bel,
    Pl,
    Entropy,
    Conflict,
}

impl MeasureArg {
    fn name(self) -> &'static str {
        match self {
            MeasureArg::Bel => "bel",
            MeasureArg::Pl => "pl",
            MeasureArg::Entropy => "entropy",
            MeasureArg::Conflict => "conflict",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

/// A failed invocation: message for stderr plus exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TotalConflict | Error::OpenWorld(_) | Error::NoEvidence => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: belief_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn load_body(path: &Path) -> Result<BodyOfEvidence, Failure> {
    let text = read(path)?;
    with_path(path, json::parse_body(&text))
}

fn parse_hypothesis(body: &BodyOfEvidence, spec: &str) -> Result<FocalSet, Failure> {
    let frame = body.frame();
    match spec.trim() {
        "*" => Ok(frame.full_set()),
        "" => Ok(frame.empty_set()),
        s => Ok(frame.subset(s.split(',').map(str::trim))?),
    }
}

fn cmd_combine(files: &[PathBuf], rule: Rule, format: Format) -> Result<String, Failure> {
    // every file must parse before anything is combined
    let bodies = files.iter().map(|p| load_body(p)).collect::<Result<Vec<_>, _>>()?;
    let report = combine_all(rule, &bodies)?;
    Ok(match format {
        Format::Json => json::write_report(&report),
        Format::Table => table::report(&report),
    })
}

fn cmd_measure(
    file: &Path,
    measure: MeasureArg,
    hypothesis: Option<&str>,
    threshold: Option<f64>,
    format: Format,
) -> Result<String, Failure> {
    let body = load_body(file)?;
    let hyp = match measure {
        MeasureArg::Bel | MeasureArg::Pl => {
            let spec =
                hypothesis.ok_or_else(|| Failure::input(format!("--hypothesis is required for {}", measure.name())))?;
            Some(Hypothesis::new(parse_hypothesis(&body, spec)?))
        }
        _ => None,
    };
    let value = match (measure, &hyp) {
        (MeasureArg::Bel, Some(h)) => belief(&body, h)?,
        (MeasureArg::Pl, Some(h)) => plausibility(&body, h)?,
        (MeasureArg::Entropy, _) => entropy(&body)?,
        _ => conflict_level(&body)?,
    };
    let signal = match (measure, threshold) {
        (MeasureArg::Conflict, Some(t)) => Some(reframe_signal(&body, t)?),
        (_, Some(_)) => return Err(Failure::input("--threshold only applies to the conflict measure")),
        _ => None,
    };
    let shown = format_number(value, MEASURE_DIGITS);
    Ok(match format {
        Format::Json => {
            let mut out = format!("{{\"measure\": \"{}\", \"value\": {shown}", measure.name());
            if let Some(s) = signal {
                out.push_str(&format!(", \"reframe\": {s}"));
            }
            out.push_str("}\n");
            out
        }
        Format::Table => {
            let label = match &hyp {
                Some(h) => format!("{}({})", measure.name(), h.set()),
                None => measure.name().to_string(),
            };
            let mut rows = vec![(label, shown)];
            if let Some(s) = signal {
                rows.push(("reframe".to_string(), s.to_string()));
            }
            table::align(&rows)
        }
    })
}

fn cmd_pbox(file: &Path, format: Format) -> Result<String, Failure> {
    let text = read(file)?;
    let pb = with_path(file, json::parse_pbox(&text))?;
    let intervals = pbox_to_intervals(&pb);
    Ok(match format {
        Format::Json => json::write_intervals(&intervals),
        Format::Table => table::pbox(&pb, &intervals),
    })
}

fn cmd_hypertree(file: &Path, format: Format) -> Result<String, Failure> {
    let text = read(file)?;
    let h = with_path(file, json::parse_hypergraph(&text))?;
    let rest = graham_reduce(&h, |_| 0);
    let verdict = rest.len() <= 1;
    Ok(match format {
        Format::Json => format!(
            "{{\"hypertree\": {verdict}, \"edges\": {}, \"remaining\": {}}}\n",
            h.len(),
            rest.len()
        ),
        Format::Table => table::align(&[
            ("hypertree".to_string(), verdict.to_string()),
            ("edges".to_string(), h.len().to_string()),
            ("remaining".to_string(), rest.len().to_string()),
        ]),
    })
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Combine { files, rule, format } => cmd_combine(&files, rule.into(), format),
        Command::Measure {
            file,
            measure,
            hypothesis,
            threshold,
            format,
        } => cmd_measure(&file, measure, hypothesis.as_deref(), threshold, format),
        Command::Pbox { file, format } => cmd_pbox(&file, format),
        Command::Hypertree { file, format } => cmd_hypertree(&file, format),
        Command::Demo { name } => {
            let (transcript, passed) = demo::run(name);
            if passed {
                Ok(transcript)
            } else {
                print!("{transcript}");
                Err(Failure {
                    code: 2,
                    message: format!("demo {} failed its checks", name.name()),
                })
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
