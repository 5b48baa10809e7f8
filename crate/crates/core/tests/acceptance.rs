use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use voakit_core::affine::{central_charge, lowest_conformal_weight};
use voakit_core::checks::{run_check, CheckOptions, Status};
use voakit_core::classify::{b4_conformal_table, reference_basis, solve_system};
use voakit_core::exact::{int, q, Scalar};
use voakit_core::rootsys::{Label, RootSystem};

/// All comparisons are exact rational equalities.
const TOLERANCE: &str = "exact";

struct Criterion {
    id: u8,
    title: &'static str,
    checks: &'static [&'static str],
    extra: Option<fn() -> Result<(), String>>,
}

fn conformal_values() -> Result<(), String> {
    let b = RootSystem::build(Label::B4);
    let f = RootSystem::build(Label::F4);
    let k = q(-5, 2);
    let solved = solve_system(&reference_basis(Label::B4).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let got: BTreeSet<Scalar> = solved
        .weights()
        .iter()
        .map(|w| lowest_conformal_weight(&b, &k, w))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let want: BTreeSet<Scalar> = [q(-5, 4), q(-3, 4), q(-3, 2), int(0), int(1)].into();
    if got != want {
        return Err(format!("conformal weight values {got:?}"));
    }
    if b4_conformal_table().len() != 16 {
        return Err("table size".into());
    }
    for rs in [&b, &f] {
        let c = central_charge(rs, &k).map_err(|e| e.to_string())?;
        if c != int(-20) {
            return Err(format!("central charge of {} is {c}", rs.label()));
        }
    }
    Ok(())
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "structure soundness", checks: &["jacobi", "embeddings"], extra: None },
    Criterion { id: 2, title: "branching 52 = 36 + 16", checks: &["branching"], extra: None },
    Criterion { id: 3, title: "singular vectors and lowering identities", checks: &["singular", "ulaganje"], extra: None },
    Criterion { id: 4, title: "Zhu ideal dimensions and polynomial spans", checks: &["zhu-ideal", "polynomials"], extra: None },
    Criterion { id: 5, title: "category O classification", checks: &["classify-O"], extra: None },
    Criterion { id: 6, title: "dominant classification", checks: &["classify-dominant"], extra: None },
    Criterion { id: 7, title: "admissibility and simple coroots", checks: &["admissible"], extra: None },
    Criterion {
        id: 8,
        title: "conformal weights and central charge",
        checks: &["conformal-weights"],
        extra: Some(conformal_values),
    },
    Criterion { id: 9, title: "conformal vector equality", checks: &["conformal-equality"], extra: None },
    Criterion { id: 10, title: "extension singular vectors", checks: &["extension"], extra: None },
    Criterion { id: 11, title: "decomposition bookkeeping", checks: &["decomposition-bookkeeping"], extra: None },
];

fn main() -> ExitCode {
    let opts = CheckOptions { n: 1, n_max: 2 };
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let mut problems = Vec::new();
        for name in c.checks {
            match run_check(name, &opts) {
                Ok(r) if r.status == Status::Pass => {}
                Ok(r) => problems.push(format!("{name}: {} {}", r.status.as_str(), r.details)),
                Err(e) => problems.push(format!("{name}: {e}")),
            }
        }
        if let Some(extra) = c.extra {
            if let Err(e) = extra() {
                problems.push(e);
            }
        }
        let tag = if problems.is_empty() { "[PASS]" } else { "[FAIL]" };
        println!("{tag} {:>2} {} (tolerance: {TOLERANCE}, {} ms)", c.id, c.title, start.elapsed().as_millis());
        for p in &problems {
            println!("       {p}");
        }
        failed += usize::from(!problems.is_empty());
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
