use std::path::Path;

use filiform_coh::cohomology::{full_report, h1, h1_star, h2, h2_star, FullReport};
use filiform_coh::extension::{extend_ordinary, extend_restricted};
use filiform_coh::format::AlgebraFile;
use filiform_coh::iso::{isomorphism_classes, iso_bruteforce, proposition_formula_check};
use filiform_coh::linalg::is_prime;
use filiform_coh::verify::{verify as run_verify, LambdaSpec, VerifyOptions};
use filiform_coh::{CohomologySummary, Error, RestrictedAlgebra, Result};
use rayon::prelude::*;
use serde_json::json;

use crate::cocycle::parse_cocycle;
use crate::table::Table;
use crate::{Format, Output};

pub enum Status {
    Ok,
    Mismatch,
}

impl Status {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Ok
        } else {
            Status::Mismatch
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(out: &Output, table: impl FnOnce() -> String, doc: impl FnOnce() -> serde_json::Value) -> Result<()> {
    let text = match out.format {
        Format::Table => table(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&doc())?;
            s.push('\n');
            s
        }
    };
    write_out(out.output.as_deref(), &text)
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as u64))
    }
}

fn show_lambda(l: &[u32]) -> String {
    let parts: Vec<String> = l.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

/// Exactly one λ, for commands that work on a single algebra.
fn single_lambda(p: u32, spec: &LambdaSpec) -> Result<Vec<u32>> {
    let mut all = spec.expand(p)?;
    if all.len() != 1 {
        return Err(Error::Parse(format!("--lambda {spec} denotes {} vectors; give one", all.len())));
    }
    Ok(all.remove(0))
}

pub fn sweep(primes: &[u32], spec: &LambdaSpec, out: &Output) -> Result<Status> {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let mut cases = Vec::new();
    for &p in &primes {
        check_prime(p)?;
        cases.extend(spec.expand(p)?.into_iter().map(|l| (p, l)));
    }
    let reports: Vec<FullReport> = cases
        .par_iter()
        .map(|(p, l)| full_report(*p, l))
        .collect::<Result<_>>()?;
    let pass = reports.iter().all(|r| r.comparison.all_pass());
    emit(
        out,
        || {
            let mut t = Table::new(["p", "λ", "H¹", "H¹₊", "H²", "H²₊", "status"]);
            for r in &reports {
                let cell = |field: &str| {
                    let row = r
                        .comparison
                        .rows
                        .iter()
                        .find(|row| row.field == field)
                        .expect("comparison has a row per group");
                    if row.pass {
                        row.computed.to_string()
                    } else {
                        format!("{} (expected {})", row.computed, row.expected)
                    }
                };
                t.row([
                    r.comparison.prime.to_string(),
                    show_lambda(&r.comparison.lambda),
                    cell("H1 dim"),
                    cell("H1* dim"),
                    cell("H2 dim"),
                    cell("H2* dim"),
                    if r.comparison.all_pass() { "pass" } else { "FAIL" }.to_string(),
                ]);
            }
            format!("# lambda: {spec}\n{}", t.render())
        },
        || json!({ "lambda_spec": spec.to_string(), "all_pass": pass, "cases": reports }),
    )?;
    Ok(Status::from_pass(pass))
}

fn group_name(s: &CohomologySummary, algebra: &str) -> String {
    let sup = if s.degree == 1 { "¹" } else { "²" };
    let sub = if s.restricted { "₊" } else { "" };
    format!("H{sup}{sub}({algebra})")
}

fn m0_name(s: &CohomologySummary) -> String {
    match &s.lambda {
        Some(l) => format!("m0^{}({})", show_lambda(l), s.prime),
        None => format!("m0({})", s.prime),
    }
}

pub fn basis(p: u32, spec: &LambdaSpec, degree: u8, restricted: bool, out: &Output) -> Result<Status> {
    check_prime(p)?;
    let summaries: Vec<CohomologySummary> = if restricted {
        spec.expand(p)?
            .iter()
            .map(|l| {
                let r = RestrictedAlgebra::m0_lambda(p, l)?;
                Ok(if degree == 1 { h1_star(&r) } else { h2_star(&r) })
            })
            .collect::<Result<_>>()?
    } else {
        let a = filiform_coh::LieAlgebra::m0(p)?;
        vec![if degree == 1 { h1(&a) } else { h2(&a) }]
    };
    emit(
        out,
        || {
            let mut text = String::new();
            for s in &summaries {
                text.push_str(&format!("{}: dim {}\n", group_name(s, &m0_name(s)), s.dim));
                for rep in &s.representatives {
                    text.push_str(&format!("  {rep}\n"));
                }
            }
            text
        },
        || match summaries.as_slice() {
            [one] => json!(one),
            many => json!(many),
        },
    )?;
    Ok(Status::Ok)
}

pub fn verify(p: u32, spec: &LambdaSpec, samples: usize, seed: u64, out: &Output) -> Result<Status> {
    check_prime(p)?;
    let lambdas = spec.expand(p)?;
    let report = run_verify(p, &lambdas, &VerifyOptions { samples, seed })?;
    let pass = report.all_pass();
    emit(
        out,
        || {
            let mut text = format!(
                "prime: {p}\nlambda: {spec} ({} vectors)\nseed: {seed}\nsamples: {samples}\n\n",
                lambdas.len()
            );
            let mut t = Table::new(["check", "cases", "result", "detail"]);
            for c in &report.checks {
                let result = match (c.passed, c.informational) {
                    (true, _) => "pass",
                    (false, true) => "info",
                    (false, false) => "FAIL",
                };
                t.row([c.name.clone(), c.cases.to_string(), result.into(), c.detail.clone().unwrap_or_default()]);
            }
            text.push_str(&t.render());
            if report.rows.len() <= 8 {
                let mut b = Table::new(["λ", "H¹", "H¹₊", "H²", "H²₊", "H²₊ basis"]);
                for r in &report.rows {
                    b.row([
                        show_lambda(&r.lambda),
                        r.h1.to_string(),
                        r.h1_star.to_string(),
                        r.h2.to_string(),
                        r.h2_star.to_string(),
                        r.h2_star_basis.join(", "),
                    ]);
                }
                text.push('\n');
                text.push_str(&b.render());
            }
            text.push_str(if pass { "\nall checks passed\n" } else { "\nverification FAILED\n" });
            text
        },
        || json!({ "lambda_spec": spec.to_string(), "all_pass": pass, "report": report }),
    )?;
    Ok(Status::from_pass(pass))
}

pub fn iso(
    p: u32,
    lambda: Option<&LambdaSpec>,
    lambda_prime: Option<&LambdaSpec>,
    classes: bool,
    out: &Output,
) -> Result<Status> {
    check_prime(p)?;
    if classes {
        let lambdas = lambda.unwrap_or(&LambdaSpec::All).expand(p)?;
        let parts = isomorphism_classes(p, &lambdas)?;
        emit(
            out,
            || {
                let mut text = format!("{} classes over {} λ\n", parts.len(), lambdas.len());
                for c in &parts {
                    let members: Vec<String> = c.iter().map(|l| show_lambda(l)).collect();
                    text.push_str(&format!("  {}\n", members.join(" ")));
                }
                text
            },
            || json!(parts),
        )?;
        return Ok(Status::Ok);
    }
    let missing = || Error::Parse("--lambda and --lambda-prime are required".into());
    let l = single_lambda(p, lambda.ok_or_else(missing)?)?;
    let lp = single_lambda(p, lambda_prime.ok_or_else(missing)?)?;
    let witness = iso_bruteforce(p, &l, &lp)?;
    let check = proposition_formula_check(p, &l, &lp)?;
    emit(
        out,
        || {
            let verdict = match &witness {
                Some(w) => format!("isomorphic, {w}\n"),
                None => "not isomorphic\n".to_string(),
            };
            let closed = match (&check.statement, check.agree) {
                (Some(w), true) => format!("closed-form conditions: agree ({w})\n"),
                (None, true) => "closed-form conditions: agree\n".to_string(),
                (Some(w), false) => format!("closed-form conditions: disagree, satisfied by {w}\n"),
                (None, false) => "closed-form conditions: disagree, never satisfied\n".to_string(),
            };
            format!("{verdict}{closed}")
        },
        || {
            json!({
                "prime": p,
                "lambda": l,
                "lambda_prime": lp,
                "isomorphic": witness.is_some(),
                "witness": witness,
                "formula_check": check,
            })
        },
    )?;
    Ok(Status::Ok)
}

pub fn extend(p: u32, spec: &LambdaSpec, cocycle: &str, ordinary: bool, output: Option<&Path>) -> Result<Status> {
    check_prime(p)?;
    let l = single_lambda(p, spec)?;
    let r = RestrictedAlgebra::m0_lambda(p, &l)?;
    let c2 = parse_cocycle(r.field(), r.dim(), cocycle)?;
    let (ext, base_lambda) = if ordinary {
        (extend_ordinary(r.algebra(), c2.phi())?, None)
    } else {
        (extend_restricted(&r, &c2)?, Some(l.as_slice()))
    };
    let mut ok = ext.algebra.jacobi_check().passed();
    if let Some(re) = ext.restricted() {
        ok &= re.verify_restricted_map().passed();
    }
    let mut text = AlgebraFile::from_extension(&ext, base_lambda).to_json();
    text.push('\n');
    write_out(output, &text)?;
    if !ok {
        eprintln!("extension failed its structural checks");
    }
    Ok(Status::from_pass(ok))
}

pub fn inspect(path: &Path, out: &Output) -> Result<Status> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let file = AlgebraFile::from_json(&text)?;
    let a = file.to_algebra()?;
    let r = file.to_restricted()?;
    let jacobi = a.jacobi_check();
    let graded = a.graded_check();
    let restricted_ok = r.as_ref().map(|r| r.verify_restricted_map().passed());
    let mut summaries = vec![h1(&a), h2(&a)];
    if let Some(r) = &r {
        summaries.push(h1_star(r));
        summaries.push(h2_star(r));
    }
    let pass = jacobi.passed() && restricted_ok.unwrap_or(true);
    emit(
        out,
        || {
            let mut text = format!("dim {} over GF({})\n", a.dim(), a.prime());
            text.push_str(&format!("jacobi: {}\n", if jacobi.passed() { "pass" } else { "FAIL" }));
            text.push_str(&format!("graded: {}\n", if graded.passed() { "yes" } else { "no" }));
            if let Some(ok) = restricted_ok {
                text.push_str(&format!("restricted map: {}\n", if ok { "pass" } else { "FAIL" }));
            }
            for s in &summaries {
                text.push_str(&format!("{}: dim {}\n", group_name(s, "g"), s.dim));
            }
            text
        },
        || {
            json!({
                "dim": a.dim(),
                "prime": a.prime(),
                "jacobi": jacobi.passed(),
                "graded": graded.passed(),
                "restricted_map": restricted_ok,
                "cohomology": summaries,
            })
        },
    )?;
    Ok(Status::from_pass(pass))
}
