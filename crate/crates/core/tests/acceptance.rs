//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runs without the libtest harness so the lines come out in order.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use fraciter::abel_modified::ModifiedAbelChart;
use fraciter::corrigendum::{corrigendum_map, verify_identities, MobiusMap};
use fraciter::linearize::KoenigChart;
use fraciter::maps::{MapKind, MapSpec};
use fraciter::report::Check;
use fraciter::verify::{self, Suite, NEUTRAL_K};
use fraciter::{Precision, Quad, Result};

fn kinds() -> Vec<MapKind> {
    let l = BigRational::new(BigInt::from(5), BigInt::from(2));
    vec![MapKind::Golden, MapKind::Silver, MapKind::Cosine, MapKind::Logistic(l)]
}

fn cross_branch(prec: Precision) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for kind in kinds() {
        let spec = MapSpec::new(kind, prec)?;
        out.push(verify::cross_branch(&spec, &KoenigChart::new(&spec)?, prec)?);
    }
    Ok(out)
}

fn step_composition(prec: Precision) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for kind in kinds() {
        let spec = MapSpec::new(kind, prec)?;
        out.extend(verify::step_composition(&ModifiedAbelChart::new(&spec)?, prec));
    }
    Ok(out)
}

fn corrigendum() -> Result<Vec<Check>> {
    let mut out = verify_identities()?;
    // the equality test must notice a composition that really is f
    let golden = MobiusMap::continued_fraction(1);
    let q = corrigendum_map("q")?;
    let p = corrigendum_map("p")?;
    let printed = corrigendum_map("q-printed")?;
    out.push(Check::new(
        "equality detector sees q∘p = f and rejects the printed q",
        q.compose(&p).same_map(&golden) && !printed.compose(&p).same_map(&golden),
        "",
    ));
    let x = Quad::int(1);
    let pp = p.apply(&p.apply(&x)?)?;
    out.push(Check::new(
        "p(p(1)) = 4/3 != 2",
        pp == Quad::ratio(4, 3) && pp != Quad::int(2),
        pp.to_string(),
    ));
    Ok(out)
}

fn determinism(prec: Precision) -> Result<Vec<Check>> {
    let a = serde_json::to_string(&verify::run(Suite::All, prec)?).unwrap();
    let b = serde_json::to_string(&verify::run(Suite::All, prec)?).unwrap();
    Ok(vec![Check::new(
        "two full verify runs serialize identically",
        a == b,
        format!("{} bytes", a.len()),
    )])
}

fn main() -> ExitCode {
    let prec = Precision::default();
    type Criterion = (&'static str, Box<dyn Fn() -> Result<Vec<Check>>>);
    let criteria: Vec<Criterion> = vec![
        ("golden complex iterates", Box::new(move || verify::complex_iterates(prec))),
        ("complex Abel branch cuts", Box::new(move || verify::abel_branch_cuts(prec))),
        ("modified Abel, golden", Box::new(move || verify::modified_golden(prec))),
        ("modified Abel, silver", Box::new(move || verify::modified_silver(prec))),
        ("cosine map", Box::new(move || verify::cosine_constants(prec))),
        ("logistic 5/2", Box::new(move || verify::logistic_constants(prec))),
        ("cross-branch identity", Box::new(move || cross_branch(prec))),
        ("step composition", Box::new(move || step_composition(prec))),
        ("Möbius maps p, q, r, s", Box::new(corrigendum)),
        (
            "neutral recurrences",
            Box::new(move || verify::neutral_recurrences(prec, NEUTRAL_K)),
        ),
        ("deterministic reports", Box::new(move || determinism(prec))),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let checks = run();
        let secs = start.elapsed().as_secs_f64();
        match checks {
            Ok(checks) => {
                let bad: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
                let verdict = if bad.is_empty() { "PASS" } else { "FAIL" };
                println!(
                    "{verdict} {:>2} {label} ({} checks, {secs:.1}s)",
                    i + 1,
                    checks.len()
                );
                for c in &bad {
                    println!("       {}: {}", c.name, c.detail);
                }
                if !bad.is_empty() {
                    failed += 1;
                }
            }
            Err(e) => {
                println!("FAIL {:>2} {label} (error: {e})", i + 1);
                failed += 1;
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
