//! Acceptance suite: one line per criterion on stderr, then a single verdict.
//!
//! Every comparison is exact (ℚ(i) arithmetic, subspace equality through
//! canonical RREF bases); the only numeric thresholds are the wall-clock
//! limits below.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use crwb_cli::document::CrAlgebraDocument;
use crwb_core::cralg::{CrAlgebra, PartialComplexStructure, Verdict};
use crwb_core::exactnum::{GaussianRational as Gq, Matrix, Vector};
use crwb_core::hypersurface::{run_suite, Suite};
use crwb_core::liecore::check_involution;
use crwb_core::su2family::{build_family, pauli_basis, FamilyInstance};

const MAX_STEPS: usize = 64;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    check: fn() -> Result<(), String>,
}

fn family(k: i64) -> (FamilyInstance, CrAlgebra) {
    let fam = build_family(k).expect("family builds");
    let cr = fam.cr_algebra().expect("family is a CR algebra");
    (fam, cr)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn nondegeneracy_order() -> Result<(), String> {
    for k in 1..=8 {
        let (fam, cr) = family(k);
        let seq = cr.freeman_sequence(MAX_STEPS).map_err(|e| e.to_string())?;
        ensure(seq.verdict == Verdict::NondegenerateOfOrder(k as usize), || format!("k={k}: verdict {}", seq.verdict))?;
        for (h, step) in seq.steps.iter().enumerate() {
            let expected = fam.freeman_closed_form(h.min(k as usize));
            ensure(step == &expected, || format!("k={k}: step {h} is {:?}", step.basis()))?;
        }
    }
    Ok(())
}

fn cr_dimensions() -> Result<(), String> {
    for k in 1..=8 {
        let (_, cr) = family(k);
        let dims = cr.cr_dimensions().map_err(|e| e.to_string())?;
        ensure(dims == (k as usize + 1, 1), || format!("k={k}: {dims:?}"))?;
    }
    Ok(())
}

fn order_one_levi() -> Result<(), String> {
    for k in 1..=8 {
        let (_, cr) = family(k);
        let n = k as usize + 1;
        let lm = cr.levi_matrix(1, MAX_STEPS).map_err(|e| e.to_string())?;
        for m in &lm.entries {
            ensure(m.rows() == n && m.cols() == n, || format!("k={k}: block is {}×{}", m.rows(), m.cols()))?;
        }
        let support = lm.support();
        ensure(support.len() == 2, || format!("k={k}: support {support:?}"))?;
        let (t0, r0, c0) = support[0];
        let (t1, r1, c1) = support[1];
        ensure(t0 == t1 && r0 == c1 && c0 == r1, || format!("k={k}: support {support:?} is not transposed"))?;
        let mut labels = [lm.row_labels[r0].as_str(), lm.row_labels[r1].as_str()];
        labels.sort_unstable();
        ensure(labels == ["X↑", "v1"], || format!("k={k}: support rows {labels:?}"))?;
        ensure(lm.rank() == 2, || format!("k={k}: rank {}", lm.rank()))?;
        let kernel = cr.levi_kernel(&lm).map_err(|e| e.to_string())?;
        let f1 = cr.freeman_step(cr.f()).map_err(|e| e.to_string())?;
        ensure(kernel == f1, || format!("k={k}: kernel {:?}", kernel.basis()))?;
    }
    Ok(())
}

fn kernel_sequence() -> Result<(), String> {
    for k in 1..=6 {
        let (_, cr) = family(k);
        let seq = cr.freeman_sequence(MAX_STEPS).map_err(|e| e.to_string())?;
        for h in 0..=seq.stabilization_index {
            let lm = cr.levi_matrix(h + 1, MAX_STEPS).map_err(|e| e.to_string())?;
            let kernel = cr.levi_kernel(&lm).map_err(|e| e.to_string())?;
            ensure(kernel == seq.steps[h + 1], || format!("k={k} order {}: kernel {:?}", h + 1, kernel.basis()))?;
        }
    }
    Ok(())
}

fn structural_gates() -> Result<(), String> {
    for k in 1..=8 {
        let (fam, cr) = family(k);
        ensure(fam.g.check_jacobi().is_valid(), || format!("k={k}: Jacobi"))?;
        ensure(fam.g.check_grading().is_valid(), || format!("k={k}: grading"))?;
        let inv = check_involution(&fam.g, &fam.tau).map_err(|e| e.to_string())?;
        ensure(inv.is_valid(), || format!("k={k}: involution {inv:?}"))?;
        let seq = cr.freeman_sequence(MAX_STEPS).map_err(|e| e.to_string())?;
        for (h, s) in seq.steps.iter().enumerate() {
            let ok = fam.g.is_subalgebra(s).map_err(|e| e.to_string())?;
            ensure(ok, || format!("k={k}: step {h} is not a subalgebra"))?;
        }
    }
    Ok(())
}

fn model_verification() -> Result<(), String> {
    let gated = [Suite::Abelian, Suite::Cpx, Suite::Ascdes, Suite::Sl2, Suite::Irrep, Suite::Iso];
    let su2_relations = ["[S1, S2] = S3", "[S3, S1] = S2", "[S3, S2] = -S1"];
    let mut failures = Vec::new();
    for k in 1..=5 {
        for s in gated {
            let report = run_suite(s, k).map_err(|e| e.to_string())?;
            failures.extend(report.failures().map(|c| format!("k={k} {s}: {}", c.name)));
        }
        let su2 = run_suite(Suite::Su2, k).map_err(|e| e.to_string())?;
        for rel in su2_relations {
            let ok = su2.checks.iter().any(|c| c.name == rel && c.passed);
            if !ok {
                failures.push(format!("k={k} su2: {rel}"));
            }
        }
    }
    ensure(failures.is_empty(), || format!("{} failing identities: {}", failures.len(), failures.join("; ")))
}

fn control_case() -> Result<(), String> {
    let cr = CrAlgebraDocument::su2_borel().to_cr_algebra().map_err(|e| e.to_string())?;
    let seq = cr.freeman_sequence(MAX_STEPS).map_err(|e| e.to_string())?;
    ensure(seq.verdict == Verdict::TotallyComplex, || format!("control verdict {}", seq.verdict))?;
    let (_, codim) = cr.cr_dimensions().map_err(|e| e.to_string())?;
    ensure(codim == 0, || format!("control crcodim {codim}"))?;
    for k in 1..=8 {
        let (_, cr) = family(k);
        let weak = cr.weak_nondegeneracy(MAX_STEPS).map_err(|e| e.to_string())?;
        ensure(weak, || format!("k={k}: not weakly nondegenerate"))?;
    }
    Ok(())
}

/// `J x` for `x` in the span of the structure's basis.
fn apply_j(pcs: &PartialComplexStructure, x: &Vector) -> Result<Vector, String> {
    let m = Matrix::from_columns(x.len(), &pcs.basis).map_err(|e| e.to_string())?;
    let c = m.solve(x).map_err(|e| e.to_string())?.ok_or("vector outside the basis span")?;
    let y = pcs.apply(&c).map_err(|e| e.to_string())?;
    Ok(Vector::combination(x.len(), y.entries(), &pcs.basis))
}

fn partial_complex_structure() -> Result<(), String> {
    let i = Gq::i();
    for k in 1..=6i64 {
        let (fam, cr) = family(k);
        let pcs = cr.partial_complex_structure().map_err(|e| e.to_string())?;
        ensure(pcs.dim() == 2 * (k as usize + 1), || format!("k={k}: dim {}", pcs.dim()))?;
        ensure(pcs.squares_to_minus_one(), || format!("k={k}: J² ≠ −1"))?;
        let f_plus_t = cr.f().sum(cr.isotropy()).map_err(|e| e.to_string())?;
        for x in &pcs.basis {
            let jx = apply_j(&pcs, x)?;
            let z = x + &jx.scale(&i);
            ensure(f_plus_t.contains(&z).map_err(|e| e.to_string())?, || {
                format!("k={k}: X + iJX ∉ f + t for X = {}", cr.label(x))
            })?;
        }
        let [_, _, s3] = pauli_basis();
        let rho_s3 = fam.g.ad(&fam.embed_sl2(&s3)).map_err(|e| e.to_string())?;
        for h in 1..=k {
            let v = fam.g.unit(fam.v(-h));
            let tv = fam.tau.apply(&v).map_err(|e| e.to_string())?;
            for x in [&v + &tv, (&v - &tv).scale(&i)] {
                // representatives built on the negative weight v₋ₕ
                let expected = rho_s3.mul_vec(&x).map_err(|e| e.to_string())?.scale(&Gq::ratio(1, -h));
                let jx = apply_j(&pcs, &x)?;
                ensure(jx == expected, || format!("k={k} h={h}: J{} = {}", cr.label(&x), cr.label(&jx)))?;
            }
        }
    }
    Ok(())
}

fn crwb(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_crwb")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn determinism() -> Result<(), String> {
    let control = concat!(env!("CARGO_MANIFEST_DIR"), "/data/su2_borel.json");
    let commands: Vec<Vec<&str>> = vec![
        vec!["family", "--k", "1,2,3"],
        vec!["family", "--k", "2", "--format", "json"],
        vec!["freeman", "--k", "1,2,3,4"],
        vec!["freeman", "--k", "4", "--format", "json"],
        vec!["freeman", "--input", control],
        vec!["levi", "--k", "3", "--order", "1"],
        vec!["levi", "--k", "2,3", "--order", "2", "--format", "json"],
        vec!["verify-model", "--k", "1,2"],
        vec!["verify-model", "--k", "1", "--suites", "iso", "--format", "json"],
        vec!["export", "--k", "3"],
    ];
    for args in &commands {
        let first = crwb(args);
        let second = crwb(args);
        ensure(first == second, || format!("`crwb {}` differs between runs", args.join(" ")))?;
    }
    let serial = crwb(&["verify-model", "--k", "1,2,3", "--jobs", "1"]);
    let parallel = crwb(&["verify-model", "--k", "3,1,2", "--jobs", "3"]);
    ensure(serial == parallel, || "--jobs changes the certificate".into())
}

#[test]
fn acceptance_criteria() {
    let criteria = [
        Criterion {
            id: 1,
            title: "nondegeneracy order k=1..8",
            limit: Some(Duration::from_secs(10)),
            check: nondegeneracy_order,
        },
        Criterion { id: 2, title: "CR dimensions k=1..8", limit: Some(Duration::from_secs(1)), check: cr_dimensions },
        Criterion {
            id: 3,
            title: "order-1 Levi matrix k=1..8",
            limit: Some(Duration::from_secs(1)),
            check: order_one_levi,
        },
        Criterion {
            id: 4,
            title: "Levi kernels vs Freeman steps k=1..6",
            limit: Some(Duration::from_secs(5)),
            check: kernel_sequence,
        },
        Criterion {
            id: 5,
            title: "structural gates k=1..8",
            limit: Some(Duration::from_secs(5)),
            check: structural_gates,
        },
        Criterion {
            id: 6,
            title: "model hypersurface suites k=1..5",
            limit: Some(Duration::from_secs(120)),
            check: model_verification,
        },
        Criterion {
            id: 7,
            title: "control case and weak nondegeneracy",
            limit: Some(Duration::from_secs(1)),
            check: control_case,
        },
        Criterion {
            id: 8,
            title: "partial complex structure k=1..6",
            limit: Some(Duration::from_secs(2)),
            check: partial_complex_structure,
        },
        Criterion { id: 9, title: "byte-identical CLI certificates", limit: None, check: determinism },
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let over = c.limit.is_some_and(|l| elapsed > l);
        let limit = c.limit.map(|l| format!(" < {} s", l.as_secs())).unwrap_or_default();
        let status = match (&result, over) {
            (Ok(()), false) => "PASS",
            _ => "FAIL",
        };
        writeln!(err, "criterion {}: {status}  {} [exact; {:.3} s{limit}]", c.id, c.title, elapsed.as_secs_f64())
            .unwrap();
        if let Err(msg) = &result {
            writeln!(err, "    {msg}").unwrap();
        }
        if over {
            writeln!(err, "    time limit exceeded").unwrap();
        }
        if status == "FAIL" {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
