//! One pass/fail line per acceptance criterion.
//!
//!     cargo test --test acceptance -- --nocapture

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::Value;

use torsion_packet::commands::{self, DecagonCommand, LshapeCommand};
use torsion_packet::exactnum::{CyclotomicElem, Rational};
use torsion_packet::lshape::{exclude_quadratic, quadratic_with, MuSource};
use torsion_packet::report::Verdict;
use torsion_packet::stablefiber::{
    decagon_config, decagon_points, decagon_reference, differential_space, proportional, solve_torsion_pairs,
    stratum2_reference, stratum2_symbolic, verify_residue_constraints, RatFunc,
};
use torsion_packet::tanratio::{check_addition_formula, table1, tan_pi, RationalAngle};

struct Outcome {
    id: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
    limit: Duration,
}

fn run(id: &'static str, limit_secs: u64, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (passed, detail) = f();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    Outcome { id, passed: passed && elapsed <= limit, detail, elapsed, limit }
}

fn str_field<'a>(v: &'a Value, k: &str) -> &'a str {
    v[k].as_str().unwrap_or_default()
}

fn table1_reproduction() -> (bool, String) {
    let r = commands::verify_table1(None, 12).unwrap();
    let matched = r.records.iter().filter(|x| str_field(x, "status") == "matched").count();
    let spot = [("1/10", "1/5", "0", "-5"), ("1/10", "2/5", "10", "5"), ("1/12", "1/3", "6", "-3")];
    let spots_ok = spot.iter().all(|(a, b, t, n)| {
        r.records.iter().any(|x| {
            str_field(x, "alpha") == *a && str_field(x, "beta") == *b && str_field(x, "trace") == *t && str_field(x, "norm") == *n
        })
    });
    let sweep_start = Instant::now();
    let sweep = commands::verify_table1(None, 60).unwrap();
    let sweep_time = sweep_start.elapsed();
    let ok = r.verdict == Verdict::Verified
        && matched == 9
        && r.records.len() == 9
        && spots_ok
        && r.elapsed_ms < 60_000
        && sweep.verdict == Verdict::Verified
        && sweep.records.len() == 9
        && sweep_time < Duration::from_secs(600);
    (ok, format!("{matched}/9 rows at 12 in {} ms; sweep to 60 verified with 0 new rows in {sweep_time:.1?}", r.elapsed_ms))
}

fn unit_case() -> (bool, String) {
    let r = commands::lshape(LshapeCommand::UnitCase, 10_000).unwrap();
    let found: Vec<(i64, i64)> = r.records.iter().map(|x| (x["b"].as_i64().unwrap(), x["e"].as_i64().unwrap())).collect();
    (r.verdict == Verdict::Verified && found == [(1, -1), (2, 0)], format!("triples (b, e) = {found:?}"))
}

fn non_unit_exclusion() -> (bool, String) {
    let r = commands::lshape(LshapeCommand::Exclude, 10_000).unwrap();
    let mut ok = r.verdict == Verdict::Verified && r.records.len() == 9;
    let mut norm_failures = 0;
    for rec in &r.records {
        ok &= rec["excluded"] == true;
        for label in ["mu", "-mu", "1/mu", "-1/mu"] {
            let why = str_field(rec, &format!("as {label}"));
            if why.starts_with("non_integral_norm") {
                norm_failures += 1;
                ok &= why == "non_integral_norm (1/5)" || why == "non_integral_norm (-1/3)";
            } else {
                // every other candidate must fail on the trace alone
                ok &= why.starts_with("trace_out_of_range");
            }
        }
    }
    (ok, format!("9 rows excluded; {norm_failures} trace-2 candidates fail on the norm, the rest on the trace"))
}

fn differential_uniqueness() -> (bool, String) {
    let c = stratum2_symbolic();
    let s = differential_space(&c).unwrap();
    let scaled = s.basis[0].normalized(&RatFunc::x(), &RatFunc::y()).unwrap();
    let symbolic_ok = s.dimension == 1 && scaled == stratum2_reference(&RatFunc::x(), &RatFunc::y());

    let (x, y) = decagon_points();
    let d = decagon_config(x.clone(), y.clone()).unwrap();
    let ds = differential_space(&d).unwrap();
    let reference = decagon_reference(&x, &y).unwrap();
    let decagon_ok = ds.dimension == 1
        && proportional(&ds.basis[0], &reference)
        && verify_residue_constraints(&reference, &d);
    (
        symbolic_ok && decagon_ok,
        format!("symbolic dimension {}, decagon dimension {}", s.dimension, ds.dimension),
    )
}

/// Coefficients of `(x − 1)^N − (−x − 1)^N`, from binomials alone.
fn expansion_oracle(n: u32) -> Vec<BigInt> {
    let mut binom = vec![BigInt::from(1)];
    for k in 1..=n {
        let prev = binom[k as usize - 1].clone();
        binom.push(prev * BigInt::from(n - k + 1) / BigInt::from(k));
    }
    let sign = |e: u32| if e % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
    // (−x − 1)^N = (−1)^N (x + 1)^N, so its x^k coefficient is (−1)^N C(N, k)
    let mut c: Vec<BigInt> = (0..=n).map(|k| &binom[k as usize] * sign(n - k) - &binom[k as usize] * sign(n)).collect::<Vec<_>>();
    while c.last().is_some_and(|v| *v == BigInt::from(0)) {
        c.pop();
    }
    c
}

fn torsion_oracle() -> (bool, String) {
    let mut ok = true;
    let mut degrees = Vec::new();
    for n in 2..=12u64 {
        let s = solve_torsion_pairs(n).unwrap();
        let coeffs = expansion_oracle(n as u32);
        let degree = coeffs.len() - 1;
        degrees.push(degree);
        let distinct = s.solutions.iter().enumerate().all(|(i, a)| !s.solutions[..i].contains(a));
        ok &= distinct && s.solutions.len() == degree;
        for (x, &a) in s.solutions.iter().zip(&s.tangent_indices) {
            let m = x.conductor();
            let value = coeffs.iter().rev().fold(CyclotomicElem::zero(m), |acc, c| {
                &(&acc * x) + &CyclotomicElem::from_rational(m, Rational::from(c.clone()))
            });
            let i = CyclotomicElem::imag_unit(4).unwrap();
            ok &= value.is_zero() && *x == &i * &tan_pi(a, n as i64).unwrap() && 2 * a.abs() < n as i64;
        }
    }
    (
        ok,
        format!("N = 2..12: solution sets equal i·tan(Aπ/N) and the expansion roots; expansion degrees {degrees:?} (N for odd N, N−1 for even N)"),
    )
}

fn decagon() -> (bool, String) {
    let v = commands::decagon(DecagonCommand::Verify).unwrap();
    let class: Vec<(String, String)> = v
        .records
        .iter()
        .filter(|r| str_field(r, "stage") == "class")
        .map(|r| (str_field(r, "x").to_string(), str_field(r, "y").to_string()))
        .collect();
    let has_base = class.contains(&("ζ₁₀^2".into(), "ζ₁₀^4".into()));
    let e = commands::decagon(DecagonCommand::ExcludeR).unwrap();
    let common: Vec<&str> = e.records.iter().filter(|r| str_field(r, "set") == "intersection").map(|r| str_field(r, "r")).collect();
    let ok = v.verdict == Verdict::Verified
        && has_base
        && class.len() == 8
        && v.records.iter().filter(|r| str_field(r, "stage") == "class").all(|r| r["class"] == 0)
        && e.verdict == Verdict::Verified
        && common.iter().all(|r| *r == "-1" || *r == "0");
    (ok, format!("one class of {} ordered pairs containing (ζ₅, ζ₅²); R_x ∩ R_y = {common:?}", class.len()))
}

fn addition_formula() -> (bool, String) {
    let angles = RationalAngle::all_up_to(12);
    let mut count = 0;
    let mut ok = true;
    for (i, y) in angles.iter().enumerate() {
        for x in &angles[i + 1..] {
            ok &= check_addition_formula(x, y).unwrap();
            count += 1;
        }
    }
    (ok && count >= 200, format!("{count} pairs"))
}

fn out_of_scope_proxies() -> (bool, String) {
    // A corrupted reference row must be caught ...
    let mut truth = table1::ground_truth();
    truth[2].norm = Rational::new(1, 3);
    let caught = !table1::compare(&table1::compute(12).unwrap(), &truth).is_exact();
    // ... and the exclusion test must not be vacuous: trace 2, norm −1 is 1 + √2.
    let mu = quadratic_with(&Rational::from(2), &Rational::from(-1)).unwrap();
    let sensitive = !exclude_quadratic(&mu, MuSource::Explicit, 10_000).unwrap().excluded;
    (
        caught && sensitive,
        "not reproduced: finiteness theorems and completeness of the table; mutation checks stand in".into(),
    )
}

#[test]
fn acceptance() {
    let outcomes = vec![
        run("1 table reproduction", 660, table1_reproduction),
        run("2 unit-case exclusivity", 5, unit_case),
        run("3 non-unit exclusion", 5, non_unit_exclusion),
        run("4 differential uniqueness", 30, differential_uniqueness),
        run("5 torsion oracle equivalence", 30, torsion_oracle),
        run("6 decagon", 60, decagon),
        run("7 addition formula", 300, addition_formula),
        run("8 out-of-scope proxies", 60, out_of_scope_proxies),
    ];
    for o in &outcomes {
        println!(
            "{} criterion {}: {} [{:.2?}, limit {:?}]",
            if o.passed { "PASS" } else { "FAIL" },
            o.id,
            o.detail,
            o.elapsed,
            o.limit
        );
    }
    assert!(outcomes.iter().all(|o| o.passed));
}
