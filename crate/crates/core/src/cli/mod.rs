//! Command-line front end: `acx <command> <manifest> [options]`.

pub mod manifest;
pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use manifest::{load_manifest, parse_manifest, BracketEntry, CoefficientsEntry, Manifest, ManifestFile, Task};
pub use report::{AuditSection, CertificateEntry, PsiSelector, Report, Timing};

use crate::error::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "acx", version, about = "Exact cohomology and taming forms for invariant almost complex structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the manifest invariants.
    Validate(Options),
    /// Cohomology dimensions per truncation.
    Diamond(Options),
    /// Run every applicable audit.
    Verify(Options),
    /// Build a closed taming form from a ∂∂̄-closed (1,1)-form.
    Taming(Options),
    /// Diamonds, audits and certificates for the manifest's tasks.
    Report(Options),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    pub manifest: PathBuf,
    /// Comma-separated truncation orders, e.g. `0,1,2`.
    #[arg(long, value_delimiter = ',')]
    pub truncations: Option<Vec<u32>>,
    /// Restrict the diamond to one bidegree, e.g. `1,1`.
    #[arg(long, value_parser = parse_bidegree)]
    pub bidegree: Option<(usize, usize)>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    #[arg(long, value_enum, default_value = "fundamental")]
    pub psi: PsiSelector,
}

fn parse_bidegree(s: &str) -> std::result::Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or("expected p,q")?;
    let p = p.trim().parse().map_err(|_| format!("bad p in {s:?}"))?;
    let q = q.trim().parse().map_err(|_| format!("bad q in {s:?}"))?;
    Ok((p, q))
}

/// Output of one invocation. `code` is nonzero only when the command could
/// not produce its result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn fatal(e: &Error, code: i32) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code,
        }
    }
}

/// Values of every theory at one bidegree, across truncations.
#[derive(Debug, Serialize)]
struct BidegreeSeries {
    bidegree: (usize, usize),
    subcomplex: String,
    truncations: Vec<u32>,
    dolbeault: Vec<usize>,
    refined: Vec<usize>,
    harmonic: Option<Vec<usize>>,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn diamond_output(m: &Manifest, o: &Options, truncations: &[u32]) -> Result<String> {
    let d = report::diamond_section(m, truncations)?;
    let Some((p, q)) = o.bidegree else {
        return Ok(match o.format {
            Format::Json => json(&d),
            Format::Table => report::diamond_table(&d),
        });
    };
    if p > d.n || q > d.n {
        return Err(Error::Parse {
            location: "--bidegree".into(),
            message: format!("({p},{q}) outside 0..={}", d.n),
        });
    }
    let s = BidegreeSeries {
        bidegree: (p, q),
        subcomplex: d.subcomplex.clone(),
        truncations: d.history.iter().map(|t| t.truncation).collect(),
        dolbeault: d.history.iter().map(|t| t.dolbeault[p][q]).collect(),
        refined: d.history.iter().map(|t| t.refined[p][q]).collect(),
        harmonic: d.history.iter().map(|t| t.harmonic.as_ref().map(|h| h[p][q])).collect(),
    };
    Ok(match o.format {
        Format::Json => json(&s),
        Format::Table => {
            let mut out = format!("({p},{q}) on the {}\n", s.subcomplex);
            for (k, t) in s.truncations.iter().enumerate() {
                out.push_str(&format!("  N = {t}: h = {}  h~ = {}", s.dolbeault[k], s.refined[k]));
                if let Some(h) = &s.harmonic {
                    out.push_str(&format!("  l = {}", h[k]));
                }
                out.push('\n');
            }
            out
        }
    })
}

fn execute(command: &Command) -> Result<Outcome> {
    let start = Instant::now();
    let (Command::Validate(o) | Command::Diamond(o) | Command::Verify(o) | Command::Taming(o) | Command::Report(o)) =
        command;
    if o.bidegree.is_some() && !matches!(command, Command::Diamond(_)) {
        return Err(Error::Parse {
            location: "--bidegree".into(),
            message: "only the diamond command takes a bidegree".into(),
        });
    }
    let file = ManifestFile::from_json(&std::fs::read_to_string(&o.manifest)?)?;

    if let Command::Validate(_) = command {
        let mut validation = file.validation()?;
        let built = file.clone().build().and_then(|m| {
            // A broken complex is as fatal as a broken manifest.
            let mut broken = None;
            for c in m.model.operators().identity_suite() {
                if !c.passed && broken.is_none() {
                    broken = Some(Error::Validation {
                        invariant: "identity_suite".into(),
                        detail: format!("{} fails at {}", c.name, c.detail),
                    });
                }
                validation.push(&c.name, c.passed, c.detail);
            }
            broken.map_or(Ok(()), Err)
        });
        let mut r = Report::new(&file);
        r.validation = Some(validation);
        let mut out = match o.format {
            Format::Json => json(&r),
            Format::Table => report::report_table(&r),
        };
        return Ok(match built {
            Ok(_) => {
                if o.format == Format::Table {
                    out.push_str("valid\n");
                }
                Outcome::ok(out)
            }
            Err(e) => Outcome {
                stdout: out,
                stderr: format!("error: {e}\n"),
                code: 2,
            },
        });
    }

    let m = file.build()?;
    let truncations = o.truncations.clone().unwrap_or_else(|| m.default_truncations());
    if truncations.is_empty() {
        return Err(Error::Parse {
            location: "--truncations".into(),
            message: "empty list".into(),
        });
    }
    let mut r = Report::new(&m.file);
    match command {
        Command::Diamond(_) => return Ok(Outcome::ok(diamond_output(&m, o, &truncations)?)),
        Command::Verify(_) => {
            for &t in &truncations {
                r.audits.push(report::audit_section(&m, t)?);
            }
        }
        Command::Taming(_) => {
            for &t in &truncations {
                r.certificates.push(report::certificate_entry(&m, t, o.psi)?);
            }
        }
        Command::Report(_) => {
            if m.file.tasks.contains(&Task::Diamond) {
                r.diamonds = Some(report::diamond_section(&m, &truncations)?);
            }
            for &t in &truncations {
                if m.file.tasks.contains(&Task::Verify) {
                    r.audits.push(report::audit_section(&m, t)?);
                }
                if m.file.tasks.contains(&Task::Taming) {
                    r.certificates.push(report::certificate_entry(&m, t, o.psi)?);
                }
            }
        }
        Command::Validate(_) => unreachable!("handled above"),
    }
    r.timing = Some(Timing {
        total_ms: start.elapsed().as_millis() as u64,
    });
    let stdout = match o.format {
        Format::Json => json(&r),
        Format::Table => report::report_table(&r),
    };
    // A taming request that produced no certificate did not do its job.
    let failed = matches!(command, Command::Taming(_)) && r.certificates.iter().any(|c| c.certificate.is_none());
    let stderr = if failed {
        r.certificates
            .iter()
            .filter_map(|c| c.error.as_ref().map(|e| format!("error: N = {}: {e}\n", c.truncation)))
            .collect()
    } else {
        String::new()
    };
    Ok(Outcome {
        stdout,
        stderr,
        code: if failed { 1 } else { 0 },
    })
}

/// Runs one command. Manifest, parse and I/O errors exit with code 2.
pub fn run(cli: &Cli) -> Outcome {
    match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => Outcome::fatal(&e, 2),
    }
}
