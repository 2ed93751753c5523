//! Command-line front end. [`run`] takes the argument list and output
//! streams and returns the process exit code, so tests can drive it
//! in-process.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classes::{class_record, ClassRecord};
use crate::classify::{pim_table, sort_by_bounds, total_pim_count, PimRecord, MIN_TABLE_N};
use crate::error::Error;
use crate::oracle::{self, Subject, SweepConfig, VerificationReport};
use crate::partitions::Partition;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Upper limit for `verify --max-n`.
pub const MAX_VERIFY_N: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    /// Grouped by descending bounds, as in the published n = 13 table.
    Bounds,
    /// Lexicographically decreasing μ.
    Generation,
}

#[derive(Debug, Parser)]
#[command(
    name = "pimquad",
    version,
    about = "Quadratic type of the projective indecomposable modules of 2.A_n in characteristic 2"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify P^μ for every partition μ of n into distinct parts.
    Table {
        n: usize,
        #[arg(long, value_enum, default_value_t = Order::Bounds)]
        order: Order,
    },
    /// Describe the 2-regular classes over an all-odd cycle type.
    Class {
        /// Comma-separated parts, e.g. 5,3,1,1,1,1,1
        parts: String,
        #[arg(long)]
        n: usize,
    },
    /// Run the brute-force verification sweep.
    Verify {
        #[arg(long, default_value_t = oracle::DEFAULT_FORM_LIMIT_N)]
        max_n: usize,
        /// Comma-separated subset of: intervals, bounds, theorem, wellposed,
        /// restriction, bijection, consistency
        #[arg(long, value_delimiter = ',')]
        subjects: Vec<Subject>,
        /// Cap on n for subjects that build modules or sweep forms.
        #[arg(long, default_value_t = oracle::DEFAULT_FORM_LIMIT_N)]
        limit_n: usize,
        /// Include elapsed times in text and csv output.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug)]
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<std::io::Error> for Usage {
    fn from(e: std::io::Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<csv::Error> for Usage {
    fn from(e: csv::Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Usage {
    fn from(e: serde_json::Error) -> Self {
        Usage(e.to_string())
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Table { n, order } => cmd_table(n, order, cli.format, out),
        Command::Class { ref parts, n } => cmd_class(parts, n, cli.format, out),
        Command::Verify {
            max_n,
            ref subjects,
            limit_n,
            timings,
        } => cmd_verify(max_n, subjects, limit_n, timings, cli.format, out),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

#[derive(Serialize)]
struct TableDoc<'a> {
    n: usize,
    pim_count: usize,
    records: &'a [PimRecord],
}

#[derive(Serialize)]
struct TableRow {
    mu: String,
    lower: usize,
    upper: usize,
    #[serde(rename = "type")]
    type_label: String,
    restriction_splits: bool,
    self_dual: bool,
    pim_count: u8,
}

fn cmd_table(n: usize, order: Order, format: Format, out: &mut dyn Write) -> Result<i32, Usage> {
    if n < MIN_TABLE_N {
        return Err(Usage(format!("table needs n >= {MIN_TABLE_N}, got {n}")));
    }
    let mut records = pim_table(n)?;
    if order == Order::Bounds {
        sort_by_bounds(&mut records);
    }
    let total = total_pim_count(&records);
    match format {
        Format::Text => {
            let header = ["mu", "(n-|mu|_a)/2", "(n-l_o(mu))/2", "type"];
            let rows: Vec<[String; 4]> = records
                .iter()
                .map(|r| {
                    [
                        r.mu.to_string(),
                        r.lower.to_string(),
                        r.upper.to_string(),
                        r.type_label(),
                    ]
                })
                .collect();
            let mut widths = header.map(str::len);
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: [&str; 4]| {
                format!(
                    "{:<w0$}  {:>w1$}  {:>w2$}  {}",
                    cells[0],
                    cells[1],
                    cells[2],
                    cells[3],
                    w0 = widths[0],
                    w1 = widths[1],
                    w2 = widths[2]
                )
            };
            writeln!(out, "{}", line(header))?;
            for row in &rows {
                writeln!(out, "{}", line([&row[0], &row[1], &row[2], &row[3]]))?;
            }
            writeln!(out, "{total} projective indecomposables")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &records {
                w.serialize(TableRow {
                    mu: r.mu.to_text(),
                    lower: r.lower,
                    upper: r.upper,
                    type_label: r.type_label(),
                    restriction_splits: r.restriction_splits,
                    self_dual: r.self_dual,
                    pim_count: r.pim_count,
                })?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(
                &mut *out,
                &TableDoc {
                    n,
                    pim_count: total,
                    records: &records,
                },
            )?;
            writeln!(out)?;
        }
    }
    Ok(EXIT_OK)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_class(parts: &str, n: usize, format: Format, out: &mut dyn Write) -> Result<i32, Usage> {
    let lambda = Partition::from_unsorted(
        parts
            .trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Usage(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?,
    )?;
    if lambda.n() != n {
        return Err(Usage(format!(
            "{lambda} is a partition of {}, not {n}",
            lambda.n()
        )));
    }
    let rec: ClassRecord = class_record(&lambda)?;
    match format {
        Format::Text => {
            let (lo, hi) = rec.invert_interval;
            writeln!(out, "class: {}", rec.lambda)?;
            writeln!(out, "n: {}", rec.n)?;
            writeln!(out, "splits in A_n: {}", yes_no(rec.splits_in_alt))?;
            writeln!(out, "real in A_n: {}", yes_no(rec.real_in_alt))?;
            writeln!(out, "interval: [{lo},{hi}]")?;
            writeln!(out, "strongly real: {}", yes_no(rec.strongly_real_in_cover))?;
            writeln!(out, "classes in 2.A_n: {}", rec.class_count_in_cover)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "lambda",
                "n",
                "splits_in_alt",
                "real_in_alt",
                "interval_lo",
                "interval_hi",
                "strongly_real_in_cover",
                "class_count_in_cover",
            ])?;
            w.write_record([
                rec.lambda.to_text(),
                rec.n.to_string(),
                rec.splits_in_alt.to_string(),
                rec.real_in_alt.to_string(),
                rec.invert_interval.0.to_string(),
                rec.invert_interval.1.to_string(),
                rec.strongly_real_in_cover.to_string(),
                rec.class_count_in_cover.to_string(),
            ])?;
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rec)?;
            writeln!(out)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    max_n: usize,
    subjects: &[Subject],
    limit_n: usize,
    timings: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Usage> {
    if max_n > MAX_VERIFY_N {
        return Err(Usage(format!(
            "--max-n {max_n} exceeds the limit {MAX_VERIFY_N}"
        )));
    }
    if limit_n > oracle::MAX_FORM_LIMIT_N {
        return Err(Usage(format!(
            "--limit-n {limit_n} exceeds the limit {}",
            oracle::MAX_FORM_LIMIT_N
        )));
    }
    let config = SweepConfig {
        max_n,
        limit_n,
        subjects: if subjects.is_empty() {
            Subject::ALL.to_vec()
        } else {
            subjects.to_vec()
        },
    };
    let reports = oracle::run_sweep(&config)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match format {
        Format::Text => {
            for r in &reports {
                write_text_report(out, r, timings)?;
            }
            writeln!(out, "{} subjects, {} failed", reports.len(), failed)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec![
                "subject",
                "status",
                "instances_checked",
                "violations",
                "notes",
            ];
            if timings {
                header.push("elapsed_ms");
            }
            w.write_record(&header)?;
            for r in &reports {
                let mut rec = vec![
                    r.subject.clone(),
                    status(r).to_string(),
                    r.instances_checked.to_string(),
                    r.violations.join("; "),
                    r.notes.join("; "),
                ];
                if timings {
                    rec.push(format!("{:.3}", r.elapsed.as_secs_f64() * 1e3));
                }
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
        Format::Json => {
            for r in &reports {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

fn status(r: &VerificationReport) -> &'static str {
    if r.passed() {
        "PASS"
    } else {
        "FAIL"
    }
}

fn write_text_report(
    out: &mut dyn Write,
    r: &VerificationReport,
    timings: bool,
) -> std::io::Result<()> {
    write!(
        out,
        "{} {}: {} checked",
        status(r),
        r.subject,
        r.instances_checked
    )?;
    if timings {
        write!(out, " in {:.3}s", r.elapsed.as_secs_f64())?;
    }
    writeln!(out)?;
    for v in &r.violations {
        writeln!(out, "  violation: {v}")?;
    }
    for note in &r.notes {
        writeln!(out, "  note: {note}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("pimquad").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn table_summary_line() {
        let (code, out, _) = run_str(&["table", "13"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 20);
        assert_eq!(out.lines().last().unwrap(), "21 projective indecomposables");
    }

    #[test]
    fn table_json_has_records() {
        let (code, out, _) = run_str(&["table", "5", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["records"].as_array().unwrap().len(), 3);
        let (_, out, _) = run_str(&["table", "5", "--format", "json", "--order", "generation"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["records"][0]["mu"], serde_json::json!([5]));
        assert_eq!(v["records"][0]["status"], "quadratic");
        assert_eq!(v["pim_count"], 4);
    }

    #[test]
    fn class_examples() {
        let (_, out, _) = run_str(&["class", "13", "--n", "13"]);
        assert!(out.contains("interval: [6,6]"));
        assert!(out.contains("strongly real: no"));
        let (_, out, _) = run_str(&["class", "1,1,1,1,1", "--n", "5"]);
        assert!(out.contains("strongly real: yes"));
        let (_, out, _) = run_str(&["class", "5,3,1,1,1,1,1", "--n", "13"]);
        assert!(out.contains("interval: [3,5]"));
        assert!(out.contains("strongly real: yes"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["class", "4,1", "--n", "5"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["class", "3,1", "--n", "5"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["table", "4"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "--max-n", "99"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "--subjects", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = run_str(&["verify", "--max-n", "5"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.lines().last().unwrap().ends_with("0 failed"));
    }
}
