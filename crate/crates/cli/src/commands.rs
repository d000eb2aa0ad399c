use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use stacky_core::acceptance::{self, CriterionResult, DEFAULT_SEED};
use stacky_core::grading::{affine_chart, rigidify, stacky_decompose, GradedRingPresentation};
use stacky_core::invariants::{catalog_ring, CatalogFamily};
use stacky_core::locus::{audit, quintic_locus_report, sextic_locus_report, LocusReport, Verdict};
use stacky_core::symmetry::{
    ground_forms, is_stable, klein_generate, semi_invariance, stabilizer_analysis, GroupSpec,
};
use stacky_core::Cyclotomic;

use crate::error::{CliError, EXIT_INPUT, EXIT_OK, EXIT_REFUTED};
use crate::expr::parse_poly;
use crate::render::markdown;
use crate::ringspec::parse_ringspec;

pub const SCHEMA: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Parser)]
#[command(
    name = "stacky",
    version,
    about = "Stacky GIT quotients of binary forms: exact checks"
)]
struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LocusFamilyArg {
    Quintic,
    Sextic,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Typical-presentation decomposition of a ring-spec file.
    Decompose { file: PathBuf },
    /// Rigidification and gerbe index.
    Rigidify { file: PathBuf },
    /// Affine chart where a generator is inverted.
    Chart { file: PathBuf, generator: String },
    /// Catalog groups under which a binary form is semi-invariant.
    Stabilizer {
        #[arg(allow_hyphen_values = true)]
        form: String,
        /// Largest n tried for C_n and D_n (default: max(2, degree)).
        #[arg(long)]
        nmax: Option<u32>,
    },
    /// Ground forms of a polyhedral group.
    GroundForms { group: String },
    /// Klein's semi-invariant form; each parameter is `l:m`.
    Klein {
        group: String,
        alpha: u32,
        beta: u32,
        gamma: u32,
        /// Pass `--` first when a parameter starts with `-`.
        params: Vec<String>,
    },
    /// Incidence report for the quintic or sextic divisor.
    Locus {
        #[arg(value_enum)]
        family: LocusFamilyArg,
    },
    /// Invariant-ring presentation of a catalog family.
    Catalog { family: String },
    /// Full acceptance suite.
    VerifyAll {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Decompose { .. } => "decompose",
            Command::Rigidify { .. } => "rigidify",
            Command::Chart { .. } => "chart",
            Command::Stabilizer { .. } => "stabilizer",
            Command::GroundForms { .. } => "ground-forms",
            Command::Klein { .. } => "klein",
            Command::Locus { .. } => "locus",
            Command::Catalog { .. } => "catalog",
            Command::VerifyAll { .. } => "verify-all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Verified,
    Refuted,
    Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub json: Value,
    pub markdown: String,
    pub format: Format,
}

impl CommandResult {
    fn new(exit_code: i32, json: Value, format: Format) -> Self {
        let markdown = markdown(&json);
        CommandResult {
            exit_code,
            json,
            markdown,
            format,
        }
    }

    pub fn json_text(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("reports serialize") + "\n"
    }

    /// The rendering selected by `--format`.
    pub fn output(&self) -> String {
        match self.format {
            Format::Json => self.json_text(),
            Format::Markdown => self.markdown.clone(),
        }
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

pub fn error_payload(command: &str, e: &CliError) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "status": Status::Error,
        "error": { "code": e.code(), "message": e.to_string() },
    })
}

/// Parses argv (program name first) and runs one subcommand.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let json = json!({"schema": SCHEMA, "command": "help", "status": Status::Ok, "text": text});
                return CommandResult {
                    exit_code: EXIT_OK,
                    json,
                    markdown: text,
                    format: Format::Markdown,
                };
            }
            let err = CliError::Usage(text);
            return CommandResult::new(EXIT_INPUT, error_payload("usage", &err), Format::Json);
        }
    };
    let name = cli.command.name();
    match execute(&cli.command) {
        Ok((status, result)) => {
            let exit = if status == Status::Refuted {
                EXIT_REFUTED
            } else {
                EXIT_OK
            };
            let json =
                json!({ "schema": SCHEMA, "command": name, "status": status, "result": result });
            CommandResult::new(exit, json, cli.format)
        }
        Err(e) => CommandResult::new(e.exit_code(), error_payload(name, &e), cli.format),
    }
}

fn load_ring(path: &Path) -> Result<GradedRingPresentation, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(parse_ringspec(&text)?)
}

fn ring_json(r: &GradedRingPresentation) -> Value {
    json!({ "display": r.to_string(), "ringspec": r.to_ringspec(), "weights": r.weights() })
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Verified
    } else {
        Status::Refuted
    }
}

fn parse_param(text: &str) -> Result<(Cyclotomic, Cyclotomic), CliError> {
    let (l, m) = text
        .split_once(':')
        .ok_or_else(|| CliError::BadParameter(text.to_string()))?;
    let l = parse_poly(l)?.lower_constant()?;
    let m = parse_poly(m)?.lower_constant()?;
    Ok((l, m))
}

fn execute(cmd: &Command) -> Result<(Status, Value), CliError> {
    match cmd {
        Command::Decompose { file } => {
            let r = load_ring(file)?;
            let d = stacky_decompose(&r)?;
            let mut v = to_value(&d);
            v["input"] = ring_json(&r);
            v["rigidification"] = ring_json(&d.rigidification);
            Ok((verdict(d.reconstruction_matches), v))
        }
        Command::Rigidify { file } => {
            let r = load_ring(file)?;
            let rig = rigidify(&r)?;
            Ok((
                Status::Ok,
                json!({ "input": ring_json(&r), "ring": ring_json(&rig.ring), "gerbe_index": rig.gerbe_index }),
            ))
        }
        Command::Chart { file, generator } => {
            let r = load_ring(file)?;
            let c = affine_chart(&r, generator)?;
            let mut v = to_value(&c);
            v["display"] = json!(c.to_string());
            v["scheme_like"] = json!(c.is_scheme_like());
            Ok((Status::Ok, v))
        }
        Command::Stabilizer { form, nmax } => {
            let f = parse_poly(form)?.lower_form()?;
            let n_max = nmax.unwrap_or_else(|| (f.degree() as u32).max(2));
            let a = stabilizer_analysis(&f, n_max)?;
            let mut certificates = Vec::new();
            for &g in &a.maximal {
                certificates.push(to_value(&semi_invariance(&f, g)?));
            }
            Ok((
                Status::Ok,
                json!({
                    "form": f.to_string(),
                    "degree": f.degree(),
                    "nmax": n_max,
                    "stable": is_stable(&f)?,
                    "maximal": a.maximal.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "certifying": a.certifying.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "certificates": certificates,
                }),
            ))
        }
        Command::GroundForms { group } => {
            let g: GroupSpec = group.parse()?;
            let set = ground_forms(g)?;
            let mut v = to_value(&set);
            v["group"] = json!(g.to_string());
            v["order"] = json!(g.order());
            Ok((Status::Ok, v))
        }
        Command::Klein {
            group,
            alpha,
            beta,
            gamma,
            params,
        } => {
            let g: GroupSpec = group.parse()?;
            let ps = params
                .iter()
                .map(|p| parse_param(p))
                .collect::<Result<Vec<_>, _>>()?;
            let f = klein_generate(g, *alpha, *beta, *gamma, &ps)?;
            let cert = semi_invariance(&f, g)?;
            Ok((
                verdict(cert.is_some()),
                json!({
                    "group": g.to_string(),
                    "form": f.to_string(),
                    "degree": f.degree(),
                    "certificate": cert.map(|c| to_value(&c)),
                }),
            ))
        }
        Command::Locus { family } => {
            let report = match family {
                LocusFamilyArg::Quintic => quintic_locus_report(),
                LocusFamilyArg::Sextic => sextic_locus_report(),
            };
            Ok(locus_value(&report))
        }
        Command::Catalog { family } => {
            let fam: CatalogFamily = family.parse()?;
            let entry = catalog_ring(fam)?;
            let mut v = to_value(&entry);
            v["ring"] = ring_json(&entry.ring);
            if let Some(f) = &entry.f {
                v["f_display"] = json!(f.to_string());
            }
            Ok((Status::Ok, v))
        }
        Command::VerifyAll { seed } => Ok(verify_all(*seed)),
    }
}

fn locus_value(report: &LocusReport) -> (Status, Value) {
    let audit = audit(report);
    let ok = report.refuted().is_empty() && audit.is_ok();
    let mut v = to_value(report);
    v["audit"] = match audit {
        Ok(()) => json!({ "ok": true, "problems": [] }),
        Err(p) => json!({ "ok": false, "problems": p }),
    };
    (verdict(ok), v)
}

fn count(report: &LocusReport, v: Verdict) -> usize {
    report.claims.iter().filter(|c| c.verdict == v).count()
}

fn verify_all(seed: u64) -> (Status, Value) {
    // Criteria and locus reports are pure; run them side by side.
    let (criteria, locus): (Vec<CriterionResult>, Vec<(Status, Value, [usize; 3])>) =
        std::thread::scope(|s| {
            let crit: Vec<_> = (1..=10u8)
                .map(|id| s.spawn(move || acceptance::run(id, seed)))
                .collect();
            let loc: Vec<_> = [
                quintic_locus_report as fn() -> LocusReport,
                sextic_locus_report,
            ]
            .into_iter()
            .map(|build| {
                s.spawn(move || {
                    let r = build();
                    let (st, v) = locus_value(&r);
                    let counts = [
                        count(&r, Verdict::Verified),
                        count(&r, Verdict::Refuted),
                        count(&r, Verdict::OutOfScope),
                    ];
                    (st, v, counts)
                })
            })
            .collect();
            (
                crit.into_iter()
                    .map(|h| h.join().expect("criterion thread"))
                    .collect(),
                loc.into_iter()
                    .map(|h| h.join().expect("locus thread"))
                    .collect(),
            )
        });
    let blocking_ok = criteria.iter().all(|c| c.passed || !c.blocking);
    let locus_ok = locus.iter().all(|(s, _, _)| *s == Status::Verified);
    let summary: Vec<String> = criteria.iter().map(CriterionResult::line).collect();
    let names = ["quintic", "sextic"];
    let locus_summary: Vec<Value> = names
        .iter()
        .zip(&locus)
        .map(|(n, (st, _, [v, r, o]))| {
            json!({ "family": n, "status": st, "verified": v, "refuted": r, "out_of_scope": o })
        })
        .collect();
    let mut reports = serde_json::Map::new();
    for (n, (_, v, _)) in names.iter().zip(locus) {
        reports.insert(n.to_string(), v);
    }
    let stretch_ok = criteria.iter().filter(|c| !c.blocking).all(|c| c.passed);
    (
        verdict(blocking_ok && locus_ok),
        json!({
            "seed": seed,
            "summary": summary,
            "criteria": to_value(&criteria),
            "blocking_passed": blocking_ok,
            "stretch_passed": stretch_ok,
            "locus": locus_summary,
            "locus_reports": reports,
        }),
    )
}
