//! Certificates: the deterministic record of one command invocation.

use std::fmt::Write as _;

use crwb_core::cralg::Verdict;
use crwb_core::exactnum::GaussianRational;
use crwb_core::hypersurface::SuiteReport;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub command: String,
    pub input_digest: String,
    pub verified: bool,
    pub runs: Vec<Run>,
}

/// One algebra (or one `k`) processed by a command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Run {
    /// `k=3` for family members, the file path for documents.
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub document_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub freeman: Option<FreemanReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub levi: Option<LeviReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<SuiteReport>>,
    /// Failed checks, verbatim.
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Run {
    pub fn new(source: String) -> Self {
        Self {
            source,
            document_digest: None,
            family: None,
            freeman: None,
            levi: None,
            suites: None,
            failures: Vec::new(),
            timing_ms: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validity {
    pub jacobi: bool,
    /// Absent when the algebra carries no grading.
    pub grading: Option<bool>,
    pub involution: bool,
    pub real_form_dim: usize,
    pub subalgebra: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub dim: usize,
    pub basis: Vec<String>,
    pub grades: Option<Vec<i64>>,
    pub f: Vec<String>,
    pub isotropy: Vec<String>,
    pub crdim: usize,
    pub crcodim: usize,
    pub validity: Validity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreemanReport {
    pub max_steps: usize,
    pub dims: Vec<usize>,
    pub steps: Vec<Vec<String>>,
    pub stabilization_index: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviBlock {
    pub target: String,
    /// Row-major entries.
    pub entries: Vec<Vec<GaussianRational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviReport {
    pub order: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub blocks: Vec<LeviBlock>,
    pub rank: usize,
    pub left_kernel_dim: usize,
    /// `𝔱` plus the left kernel, by basis labels.
    pub kernel: Vec<String>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.command).unwrap();
        writeln!(out, "input digest: {}", self.input_digest).unwrap();
        for run in &self.runs {
            write_run(&mut out, run);
        }
        writeln!(out, "status: {}", if self.verified { "verified" } else { "FAILED" }).unwrap();
        out
    }
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

fn write_run(out: &mut String, run: &Run) {
    writeln!(out, "[{}]", run.source).unwrap();
    if let Some(d) = &run.document_digest {
        writeln!(out, "  document digest: {d}").unwrap();
    }
    if let Some(fam) = &run.family {
        writeln!(out, "  dim g: {}", fam.dim).unwrap();
        writeln!(out, "  basis: {}", fam.basis.join(", ")).unwrap();
        if let Some(g) = &fam.grades {
            let g: Vec<String> = g.iter().map(i64::to_string).collect();
            writeln!(out, "  grades: {}", g.join(", ")).unwrap();
        }
        writeln!(out, "  f: {}", braces(&fam.f)).unwrap();
        writeln!(out, "  f ∩ τf: {}", braces(&fam.isotropy)).unwrap();
        writeln!(out, "  CR dimension: {}", fam.crdim).unwrap();
        writeln!(out, "  CR codimension: {}", fam.crcodim).unwrap();
        let v = &fam.validity;
        let yn = |b: bool| if b { "ok" } else { "FAILED" };
        writeln!(out, "  jacobi: {}", yn(v.jacobi)).unwrap();
        if let Some(g) = v.grading {
            writeln!(out, "  grading: {}", yn(g)).unwrap();
        }
        writeln!(out, "  involution: {} (real form dim {})", yn(v.involution), v.real_form_dim).unwrap();
        writeln!(out, "  f subalgebra: {}", yn(v.subalgebra)).unwrap();
    }
    if let Some(fr) = &run.freeman {
        for (h, (d, labels)) in fr.dims.iter().zip(&fr.steps).enumerate() {
            writeln!(out, "  f^{h}: dim {d} {}", braces(labels)).unwrap();
        }
        writeln!(out, "  stabilization index: {}", fr.stabilization_index).unwrap();
        writeln!(out, "  verdict: {}", fr.verdict).unwrap();
        if let Some(e) = fr.expected_order {
            let ok = fr.verdict == Verdict::NondegenerateOfOrder(e);
            writeln!(out, "  expected order: {e} ({})", if ok { "ok" } else { "MISMATCH" }).unwrap();
        }
    }
    if let Some(l) = &run.levi {
        writeln!(out, "  order: {}", l.order).unwrap();
        for b in &l.blocks {
            writeln!(out, "  component along {}:", b.target).unwrap();
            write_table(out, &l.rows, &l.cols, &b.entries);
        }
        writeln!(out, "  rank: {}", l.rank).unwrap();
        writeln!(out, "  left kernel dim (mod f ∩ τf): {}", l.left_kernel_dim).unwrap();
        writeln!(out, "  kernel + f ∩ τf: {}", braces(&l.kernel)).unwrap();
    }
    if let Some(suites) = &run.suites {
        for s in suites {
            let failed = s.failures().count();
            let status = if failed == 0 {
                format!("pass ({} checks)", s.checks.len())
            } else {
                format!("FAIL ({failed} of {} checks)", s.checks.len())
            };
            match s.bracket_pairs {
                Some(p) => writeln!(out, "  {}: {status}, {p} bracket pairs", s.suite).unwrap(),
                None => writeln!(out, "  {}: {status}", s.suite).unwrap(),
            }
            for n in &s.notes {
                writeln!(out, "    note: {n}").unwrap();
            }
        }
    }
    for f in &run.failures {
        writeln!(out, "  failed: {f}").unwrap();
    }
    if let Some(t) = run.timing_ms {
        writeln!(out, "  time: {t} ms").unwrap();
    }
}

fn write_table(out: &mut String, rows: &[String], cols: &[String], entries: &[Vec<GaussianRational>]) {
    let cells: Vec<Vec<String>> = entries.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let width = |s: &str| s.chars().count();
    let label_w = rows.iter().map(|r| width(r)).max().unwrap_or(0);
    let col_w: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| cells.iter().map(|r| width(&r[j])).chain([width(c)]).max().unwrap_or(0))
        .collect();
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - width(s)));
    let mut line = format!("    {}", " ".repeat(label_w));
    for (c, w) in cols.iter().zip(&col_w) {
        line.push_str("  ");
        line.push_str(&pad(c, *w));
    }
    writeln!(out, "{}", line.trim_end()).unwrap();
    for (r, row) in rows.iter().zip(&cells) {
        let mut line = format!("    {}", pad(r, label_w));
        for (c, w) in row.iter().zip(&col_w) {
            line.push_str("  ");
            line.push_str(&pad(c, *w));
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
}
