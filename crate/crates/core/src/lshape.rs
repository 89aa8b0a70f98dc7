//! Admissible L-shaped parameters `(b, e, λ)` and the trace/norm exclusion test.
//!
//! An L-shaped Veech surface in the minimal stratum of genus two is described
//! by `e ∈ {−1, 0, 1}` and `b ≥ 1` with `e + 1 < b` and `b` even when `e = 1`;
//! then `λ = (e + √(e² + 4b))/2` is the root of `λ² = eλ + b`, and
//! `λ + 1` has trace `e + 2` and norm `e + 1 − b`.
//!
//! A quadratic height ratio μ is compatible with such a surface only if one of
//! `±μ^{±1}` has the trace and norm of some `λ + 1`. [`exclude_quadratic`]
//! checks all four candidates exactly.

use num_bigint::BigInt;
use serde::Serialize;

use crate::exactnum::{squarefree_decompose, QuadraticElem, Rational};
use crate::tanratio::table1::Table1Row;
use crate::tanratio::{ratio, TangentRatio};
use crate::{Error, Result};

/// How the two unit cases are disposed of: by the known torsion of their
/// Weierstraß-point differences, not by this module.
pub const UNIT_CASE_STATUS: &str = "excluded by external citation";
pub const UNIT_CASE_CITATION: &str = "known torsion on y^2 = x^5 - 1 (pentagon, b=1, e=-1) \
     and y^2 = x(x^4 - 1) (octagon, b=2, e=0)";

pub fn is_admissible(b: u64, e: i64) -> bool {
    (-1..=1).contains(&e) && b >= 1 && e + 1 < b as i64 && (e != 1 || b % 2 == 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibleTriple {
    b: u64,
    e: i64,
    lambda: QuadraticElem,
}

impl AdmissibleTriple {
    pub fn new(b: u64, e: i64) -> Result<Self> {
        if !is_admissible(b, e) {
            return Err(Error::InvalidArgument(format!("(b={b}, e={e}) is not admissible")));
        }
        let disc = BigInt::from(e * e) + BigInt::from(4u64) * BigInt::from(b);
        let (s, d) = squarefree_decompose(&disc);
        let half = Rational::new(1, 2);
        let lambda = QuadraticElem::new(
            &Rational::from_int(e) * &half,
            &Rational::from(s) * &half,
            d,
        );
        Ok(AdmissibleTriple { b, e, lambda })
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn lambda(&self) -> &QuadraticElem {
        &self.lambda
    }

    pub fn lambda_plus_one(&self) -> QuadraticElem {
        &self.lambda + &QuadraticElem::rational(Rational::one(), self.lambda.d)
    }

    pub fn name(&self) -> Option<&'static str> {
        match (self.b, self.e) {
            (1, -1) => Some("pentagon"),
            (2, 0) => Some("octagon"),
            _ => None,
        }
    }
}

/// All admissible triples with `b ≤ b_max`, sorted by `(b, e)`.
pub fn enumerate_triples(b_max: u64) -> Result<Vec<AdmissibleTriple>> {
    if b_max < 1 {
        return Err(Error::InvalidArgument("b_max must be at least 1".into()));
    }
    let mut out = Vec::new();
    for b in 1..=b_max {
        for e in -1..=1 {
            if is_admissible(b, e) {
                out.push(AdmissibleTriple::new(b, e)?);
            }
        }
    }
    Ok(out)
}

/// `(e + 2, e + 1 − b)`, cross-checked against the quadratic trace and norm of `λ + 1`.
pub fn trace_norm_lambda_plus_one(t: &AdmissibleTriple) -> Result<(i64, i64)> {
    let closed = (t.e + 2, t.e + 1 - t.b as i64);
    let l1 = t.lambda_plus_one();
    let generic = (l1.trace(), l1.norm());
    if generic != (Rational::from_int(closed.0), Rational::from_int(closed.1)) {
        return Err(Error::Inconsistent(format!(
            "λ+1 for (b={}, e={}) has trace/norm {:?}, expected {closed:?}",
            t.b, t.e, generic
        )));
    }
    Ok(closed)
}

/// Admissible triples with `|Norm(λ + 1)| = |e + 1 − b| = 1` and `b ≤ b_max`.
///
/// Since `b > e + 1`, the norm is negative, so `b = e + 2`; `e = 1` would
/// need the odd `b = 3`. Only the pentagon and the octagon remain. The scan
/// below does not rely on this argument.
pub fn unit_case_triples(b_max: u64) -> Result<Vec<AdmissibleTriple>> {
    if b_max < 3 {
        return Err(Error::InvalidArgument("b_max must be at least 3".into()));
    }
    let mut out = Vec::new();
    for b in 1..=b_max {
        for e in -1..=1i64 {
            if (e + 1 - b as i64).abs() == 1 && is_admissible(b, e) {
                out.push(AdmissibleTriple::new(b, e)?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateOutcome {
    TraceOutOfRange,
    NonIntegralNorm,
    NoAdmissibleTriple,
    Matched,
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub label: &'static str,
    pub value: QuadraticElem,
    pub trace: Rational,
    pub norm: Rational,
    pub outcome: CandidateOutcome,
    pub matches: Vec<AdmissibleTriple>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MuSource {
    TangentRatio { alpha: String, beta: String },
    Explicit,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExclusionVerdict {
    pub mu_source: MuSource,
    pub mu: QuadraticElem,
    pub candidates: Vec<Candidate>,
    pub matching_triples: Vec<AdmissibleTriple>,
    pub excluded: bool,
}

fn check_candidate(label: &'static str, value: QuadraticElem, b_max: u64) -> Result<Candidate> {
    let trace = value.trace();
    let norm = value.norm();
    let mut matches = Vec::new();
    let outcome = match trace.to_i64().filter(|t| (1..=3).contains(t)) {
        None => CandidateOutcome::TraceOutOfRange,
        Some(_) if !norm.is_integer() => CandidateOutcome::NonIntegralNorm,
        Some(tr) => match norm.to_i64() {
            // an integral norm beyond i64 needs b far beyond any b_max
            None => CandidateOutcome::NoAdmissibleTriple,
            Some(n) => {
                let e = tr - 2;
                let b = e + 1 - n;
                if b >= 1 && b as u64 <= b_max && is_admissible(b as u64, e) {
                    let t = AdmissibleTriple::new(b as u64, e)?;
                    let (t_tr, t_n) = trace_norm_lambda_plus_one(&t)?;
                    debug_assert_eq!((t_tr, t_n), (tr, n));
                    matches.push(t);
                    CandidateOutcome::Matched
                } else {
                    CandidateOutcome::NoAdmissibleTriple
                }
            }
        },
    };
    Ok(Candidate { label, value, trace, norm, outcome, matches })
}

/// Tests `±μ^{±1}` against `λ + 1` for admissible triples with `b ≤ b_max`.
///
/// The norm fixes `b` directly, so `b_max` only guards the search.
pub fn exclude_quadratic(mu: &QuadraticElem, source: MuSource, b_max: u64) -> Result<ExclusionVerdict> {
    let inv = mu.inv().ok_or(Error::DivisionByZero)?;
    let cands = vec![
        check_candidate("mu", mu.clone(), b_max)?,
        check_candidate("-mu", -mu, b_max)?,
        check_candidate("1/mu", inv.clone(), b_max)?,
        check_candidate("-1/mu", -&inv, b_max)?,
    ];
    let matching_triples: Vec<AdmissibleTriple> =
        cands.iter().flat_map(|c| c.matches.iter().cloned()).collect();
    Ok(ExclusionVerdict {
        mu_source: source,
        mu: mu.clone(),
        excluded: matching_triples.is_empty(),
        candidates: cands,
        matching_triples,
    })
}

/// Runs the exclusion test on a quadratic non-unit tangent ratio.
pub fn exclude_against_table1(row: &TangentRatio, b_max: u64) -> Result<ExclusionVerdict> {
    if row.degree() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a quadratic ratio, ({}, {}) has degree {}",
            row.alpha(),
            row.beta(),
            row.degree()
        )));
    }
    if row.is_unit() {
        return Err(Error::InvalidArgument(format!(
            "({}, {}) is a unit; only non-units are tested here",
            row.alpha(),
            row.beta()
        )));
    }
    let mu = row.quadratic()?.expect("degree 2");
    let source = MuSource::TangentRatio { alpha: row.alpha().to_string(), beta: row.beta().to_string() };
    exclude_quadratic(&mu, source, b_max)
}

/// Recomputes a reference row from its angles and tests it; fails if the
/// recomputed trace or norm disagrees with the row.
pub fn exclude_reference_row(row: &Table1Row, b_max: u64) -> Result<ExclusionVerdict> {
    let t = ratio(&row.alpha, &row.beta)?;
    if t.trace() != row.trace || t.norm() != row.norm {
        return Err(Error::InvalidArgument(format!(
            "row ({}, {}) lists trace {} and norm {}, but μ has trace {} and norm {}",
            row.alpha,
            row.beta,
            row.trace,
            row.norm,
            t.trace(),
            t.norm()
        )));
    }
    exclude_against_table1(&t, b_max)
}

/// The larger root of `t² − trace·t + norm`; the discriminant must be positive.
pub fn quadratic_with(trace: &Rational, norm: &Rational) -> Result<QuadraticElem> {
    let disc = &(trace * trace) - &(&Rational::from_int(4) * norm);
    if disc.signum() <= 0 {
        return Err(Error::InvalidArgument(format!("discriminant {disc} is not positive")));
    }
    // √(n/d) = √(nd)/d
    let (s, d) = squarefree_decompose(&(disc.numer() * disc.denom()));
    let half = Rational::new(1, 2);
    let b = &(&Rational::from(s) / &Rational::from(disc.denom())) * &half;
    Ok(QuadraticElem::new(trace * &half, b, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tanratio::table1::ground_truth;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn enumerate_small() {
        let t = enumerate_triples(2).unwrap();
        let be: Vec<(u64, i64)> = t.iter().map(|t| (t.b(), t.e())).collect();
        assert_eq!(be, [(1, -1), (2, -1), (2, 0)]);
        assert_eq!(t[0].lambda(), &QuadraticElem::new(q(-1, 2), q(1, 2), 5));
        assert_eq!(t[2].lambda(), &QuadraticElem::sqrt_of(2));
        // (b=2, e=−1) has the rational λ = 1
        assert_eq!(t[1].lambda().d, 1);
        assert_eq!(t[1].lambda().to_f64(), 1.0);
    }

    #[test]
    fn lambda_is_a_root() {
        for t in enumerate_triples(200).unwrap() {
            let l = t.lambda();
            let d = l.d;
            let lhs = l * l;
            let rhs = &l.scale(&Rational::from_int(t.e())) + &QuadraticElem::rational(Rational::from_int(t.b() as i64), d);
            assert_eq!(lhs, rhs, "b={} e={}", t.b(), t.e());
            assert!(l.signum() > 0);
            trace_norm_lambda_plus_one(&t).unwrap();
        }
    }

    #[test]
    fn trace_norm_examples() {
        let tn = |b, e| trace_norm_lambda_plus_one(&AdmissibleTriple::new(b, e).unwrap()).unwrap();
        assert_eq!(tn(1, -1), (1, -1));
        assert_eq!(tn(2, 0), (2, -1));
        assert_eq!(tn(4, 1), (3, -2));
        assert!(AdmissibleTriple::new(5, 1).is_err());
        assert!(AdmissibleTriple::new(1, 0).is_err());
    }

    #[test]
    fn unit_cases() {
        for b_max in [3, 10, 1000] {
            let u = unit_case_triples(b_max).unwrap();
            let names: Vec<_> = u.iter().map(|t| t.name().unwrap()).collect();
            assert_eq!(names, ["pentagon", "octagon"]);
        }
        assert!(unit_case_triples(2).is_err());
    }

    #[test]
    fn sqrt_five_row() {
        let v = exclude_quadratic(&QuadraticElem::sqrt_of(5), MuSource::Explicit, 100).unwrap();
        assert!(v.excluded);
        let traces: Vec<_> = v.candidates.iter().map(|c| c.trace.clone()).collect();
        assert_eq!(traces, [q(0, 1), q(0, 1), q(0, 1), q(0, 1)]);
        assert_eq!(v.candidates[2].norm, q(-1, 5));
    }

    #[test]
    fn five_plus_two_sqrt_five_row() {
        let mu = QuadraticElem::new(q(5, 1), q(2, 1), 5);
        let v = exclude_quadratic(&mu, MuSource::Explicit, 100).unwrap();
        assert!(v.excluded);
        let traces: Vec<_> = v.candidates.iter().map(|c| c.trace.clone()).collect();
        assert_eq!(traces, [q(10, 1), q(-10, 1), q(2, 1), q(-2, 1)]);
        assert_eq!(v.candidates[2].outcome, CandidateOutcome::NonIntegralNorm);
        assert_eq!(v.candidates[2].norm, q(1, 5));
    }

    #[test]
    fn all_reference_rows_are_excluded() {
        for row in ground_truth() {
            let v = exclude_reference_row(&row, 100).unwrap();
            assert!(v.excluded, "{} {}", row.alpha, row.beta);
            for c in &v.candidates {
                if c.trace == q(2, 1) {
                    assert_eq!(c.outcome, CandidateOutcome::NonIntegralNorm);
                    assert!(c.norm == q(1, 5) || c.norm == q(-1, 3));
                } else {
                    assert_eq!(c.outcome, CandidateOutcome::TraceOutOfRange);
                }
            }
        }
    }

    #[test]
    fn engine_is_sensitive() {
        // trace 2 with the norm flipped to −1 is λ + 1 for the octagon
        let mu = quadratic_with(&q(2, 1), &q(-1, 1)).unwrap();
        let v = exclude_quadratic(&mu, MuSource::Explicit, 100).unwrap();
        assert!(!v.excluded);
        assert_eq!((v.matching_triples[0].b(), v.matching_triples[0].e()), (2, 0));
    }

    #[test]
    fn inversion_gives_the_same_verdict() {
        for row in ground_truth() {
            let mu = quadratic_with(&row.trace, &row.norm).unwrap();
            let a = exclude_quadratic(&mu, MuSource::Explicit, 50).unwrap();
            let b = exclude_quadratic(&mu.inv().unwrap(), MuSource::Explicit, 50).unwrap();
            assert_eq!(a.excluded, b.excluded);
            assert_eq!(a.matching_triples, b.matching_triples);
        }
    }

    #[test]
    fn rejects_wrong_degree() {
        let a = crate::tanratio::RationalAngle::from_frac(1, 6).unwrap();
        let b = crate::tanratio::RationalAngle::from_frac(1, 3).unwrap();
        assert!(exclude_against_table1(&ratio(&a, &b).unwrap(), 10).is_err());
    }
}
