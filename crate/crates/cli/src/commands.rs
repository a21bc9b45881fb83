use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use crwb_core::cralg::CrAlgebra;
use crwb_core::hypersurface::{run_suite, Suite};
use crwb_core::liecore::check_involution;
use crwb_core::su2family::build_family;

use crate::args::{Cli, Command, ExportArgs, FamilyArgs, Format, FreemanArgs, LeviArgs, Output, Source, VerifyArgs};
use crate::certificate::{Certificate, FamilyReport, FreemanReport, LeviBlock, LeviReport, Run, Validity};
use crate::document::{digest_of, CrAlgebraDocument};
use crate::error::CliError;

pub const DEFAULT_MAX_STEPS: usize = 64;
pub const MAX_STEPS_ENV: &str = "CRWB_MAX_STEPS";

/// What a command prints and how the process should exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn execute(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Family(a) => family(a),
        Command::Freeman(a) => freeman(a),
        Command::Levi(a) => levi(a),
        Command::VerifyModel(a) => verify_model(a),
        Command::Export(a) => export(a),
    }
}

/// Flag, then `CRWB_MAX_STEPS`, then the default.
pub fn resolve_max_steps(flag: Option<u32>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n as usize);
    }
    match std::env::var(MAX_STEPS_ENV) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Usage(format!("{MAX_STEPS_ENV} must be a positive integer, got {s:?}"))),
        },
        Err(_) => Ok(DEFAULT_MAX_STEPS),
    }
}

enum Item {
    K(i64),
    Doc(PathBuf, Box<CrAlgebraDocument>),
}

impl Item {
    fn source(&self) -> String {
        match self {
            Item::K(k) => format!("k={k}"),
            Item::Doc(p, _) => p.display().to_string(),
        }
    }

    /// The document and its CR algebra.
    fn load(&self) -> Result<(CrAlgebraDocument, CrAlgebra), CliError> {
        match self {
            Item::K(k) => {
                let fam = build_family(*k).map_err(CliError::from_structure)?;
                let cr = fam.cr_algebra().map_err(CliError::from_structure)?;
                Ok((CrAlgebraDocument::from_family(&fam), cr))
            }
            Item::Doc(_, doc) => Ok(((**doc).clone(), doc.to_cr_algebra()?)),
        }
    }
}

fn sorted_ks(ks: &[i64]) -> Vec<i64> {
    let mut ks = ks.to_vec();
    ks.sort_unstable();
    ks.dedup();
    ks
}

fn items(source: &Source) -> Result<Vec<Item>, CliError> {
    match &source.input {
        Some(p) => Ok(vec![Item::Doc(p.clone(), Box::new(CrAlgebraDocument::load(p)?))]),
        None => Ok(sorted_ks(&source.k).into_iter().map(Item::K).collect()),
    }
}

fn source_echo(source: &Source) -> String {
    match &source.input {
        Some(p) => format!("--input {}", p.display()),
        None => format!("--k {}", join_ks(&sorted_ks(&source.k))),
    }
}

fn join_ks(ks: &[i64]) -> String {
    ks.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Applies `f` to every item on up to `jobs` threads; results keep item order.
fn fan_out<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let mut indexed: Vec<(usize, R)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs.min(items.len()))
            .map(|_| {
                scope.spawn(|| {
                    let mut out = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= items.len() {
                            break out;
                        }
                        out.push((i, f(&items[i])));
                    }
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    indexed.sort_by_key(|(i, _)| *i);
    indexed.into_iter().map(|(_, r)| r).collect()
}

fn timed(timing: bool, f: impl FnOnce() -> Result<Run, CliError>) -> Result<Run, CliError> {
    let start = Instant::now();
    let mut run = f()?;
    if timing {
        run.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok(run)
}

fn collect_runs(results: Vec<Result<Run, CliError>>) -> Result<Vec<Run>, CliError> {
    results.into_iter().collect()
}

fn finish(command: String, input_digest: String, runs: Vec<Run>, output: &Output) -> Outcome {
    let verified = runs.iter().all(|r| r.failures.is_empty());
    let cert = Certificate { command, input_digest, verified, runs };
    let stdout = match output.format {
        Format::Text => cert.to_text(),
        Format::Json => cert.to_json(),
    };
    Outcome { stdout, code: if verified { 0 } else { 1 } }
}

fn digest_of_runs(runs: &[Run]) -> String {
    let ds: Vec<&str> = runs.iter().filter_map(|r| r.document_digest.as_deref()).collect();
    digest_of(&ds)
}

fn format_flag(output: &Output) -> &'static str {
    match output.format {
        Format::Text => "",
        Format::Json => " --format json",
    }
}

fn family(args: FamilyArgs) -> Result<Outcome, CliError> {
    let ks = sorted_ks(&args.k);
    let results = fan_out(&ks, args.output.jobs as usize, |&k| {
        timed(args.output.timing, || {
            let item = Item::K(k);
            let (doc, cr) = item.load()?;
            let g = cr.g();
            let (crdim, crcodim) = cr.cr_dimensions()?;
            let inv = check_involution(g, cr.tau())?;
            let validity = Validity {
                jacobi: g.check_jacobi().is_valid(),
                grading: g.grades().map(|_| g.check_grading().is_valid()),
                involution: inv.is_valid(),
                real_form_dim: inv.real_form_dim,
                subalgebra: g.is_subalgebra(cr.f())?,
            };
            let mut run = Run::new(item.source());
            let checks = [
                ("jacobi", validity.jacobi),
                ("grading", validity.grading.unwrap_or(true)),
                ("involution", validity.involution),
                ("subalgebra", validity.subalgebra),
            ];
            run.failures = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| format!("{n} check")).collect();
            run.document_digest = Some(doc.digest());
            run.family = Some(FamilyReport {
                dim: g.dim(),
                basis: g.labels().to_vec(),
                grades: g.grades().map(<[i64]>::to_vec),
                f: cr.f().basis().iter().map(|v| cr.label(v)).collect(),
                isotropy: cr.isotropy().basis().iter().map(|v| cr.label(v)).collect(),
                crdim,
                crcodim,
                validity,
            });
            Ok(run)
        })
    });
    let runs = collect_runs(results)?;
    let command = format!("crwb family --k {}{}", join_ks(&ks), format_flag(&args.output));
    Ok(finish(command, digest_of_runs(&runs), runs, &args.output))
}

fn freeman(args: FreemanArgs) -> Result<Outcome, CliError> {
    let max_steps = resolve_max_steps(args.max_steps)?;
    let items = items(&args.source)?;
    let results = fan_out(&items, args.output.jobs as usize, |item| {
        timed(args.output.timing, || {
            let (doc, cr) = item.load()?;
            let seq = cr.freeman_sequence(max_steps)?;
            let mut run = Run::new(item.source());
            run.document_digest = Some(doc.digest());
            if let Some(e) = args.expect_order {
                if seq.verdict != crwb_core::cralg::Verdict::NondegenerateOfOrder(e) {
                    run.failures.push(format!("expected order {e}, verdict is {}", seq.verdict));
                }
            }
            run.freeman = Some(FreemanReport {
                max_steps,
                dims: seq.dims(),
                steps: seq.steps.iter().map(|s| s.basis().iter().map(|v| cr.label(v)).collect()).collect(),
                stabilization_index: seq.stabilization_index,
                verdict: seq.verdict,
                expected_order: args.expect_order,
            });
            Ok(run)
        })
    });
    let runs = collect_runs(results)?;
    let mut command = format!("crwb freeman {} --max-steps {max_steps}", source_echo(&args.source));
    if let Some(e) = args.expect_order {
        command.push_str(&format!(" --expect-order {e}"));
    }
    command.push_str(format_flag(&args.output));
    Ok(finish(command, digest_of_runs(&runs), runs, &args.output))
}

fn levi(args: LeviArgs) -> Result<Outcome, CliError> {
    let max_steps = resolve_max_steps(args.max_steps)?;
    let order = args.order as usize;
    let items = items(&args.source)?;
    let results = fan_out(&items, args.output.jobs as usize, |item| {
        timed(args.output.timing, || {
            let (doc, cr) = item.load()?;
            let lm = cr.levi_matrix(order, max_steps)?;
            let kernel = cr.levi_kernel(&lm)?;
            let mut run = Run::new(item.source());
            run.document_digest = Some(doc.digest());
            run.levi = Some(LeviReport {
                order,
                rows: lm.row_labels.clone(),
                cols: lm.col_labels.clone(),
                blocks: lm
                    .target_labels
                    .iter()
                    .zip(&lm.entries)
                    .map(|(t, m)| LeviBlock {
                        target: t.clone(),
                        entries: (0..m.rows()).map(|i| m.row(i).into_entries()).collect(),
                    })
                    .collect(),
                rank: lm.rank(),
                left_kernel_dim: lm.left_kernel().dim(),
                kernel: kernel.basis().iter().map(|v| cr.label(v)).collect(),
            });
            Ok(run)
        })
    });
    let runs = collect_runs(results)?;
    let command = format!(
        "crwb levi {} --order {order} --max-steps {max_steps}{}",
        source_echo(&args.source),
        format_flag(&args.output)
    );
    Ok(finish(command, digest_of_runs(&runs), runs, &args.output))
}

fn verify_model(args: VerifyArgs) -> Result<Outcome, CliError> {
    let ks = sorted_ks(&args.k);
    let mut suites: Vec<Suite> = if args.suites.is_empty() { Suite::ALL.to_vec() } else { args.suites.clone() };
    suites.sort_unstable();
    suites.dedup();
    let results = fan_out(&ks, args.output.jobs as usize, |&k| {
        timed(args.output.timing, || {
            let mut run = Run::new(format!("k={k}"));
            let mut reports = Vec::with_capacity(suites.len());
            for &s in &suites {
                let report = run_suite(s, k)?;
                for c in report.failures() {
                    let detail = c.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default();
                    run.failures.push(format!("{s}: {}{detail}", c.name));
                }
                reports.push(report);
            }
            run.suites = Some(reports);
            Ok(run)
        })
    });
    let runs = collect_runs(results)?;
    let names: Vec<&str> = suites.iter().map(|s| s.name()).collect();
    let input_digest = digest_of(&serde_json::json!({ "k": ks, "suites": names }));
    let command =
        format!("crwb verify-model --k {} --suites {}{}", join_ks(&ks), names.join(","), format_flag(&args.output));
    Ok(finish(command, input_digest, runs, &args.output))
}

fn export(args: ExportArgs) -> Result<Outcome, CliError> {
    let fam = build_family(args.k).map_err(CliError::from_structure)?;
    let mut stdout = CrAlgebraDocument::from_family(&fam).to_json();
    stdout.push('\n');
    Ok(Outcome { stdout, code: 0 })
}
