//! Galois conjugation of tangent ratios.
//!
//! For `k` prime to the conductor, `σ_k(i) = i^k`, so
//! `σ_k(tan πa) = χ(k)·tan(πka)` with `χ(k) = ±1` according to `k mod 4`.
//! Folding `ka` back into `(0, 1/2)` costs another sign, and in the ratio
//! the χ factors cancel.

use num_integer::Integer;

use super::{pair_conductor, ratio, tan_in, RationalAngle, TangentRatio};
use crate::exactnum::{units_mod, CyclotomicElem, Rational};
use crate::{Error, Result};

/// `(a', s)` with `a' ∈ (0, 1/2)` and `tan(πp/q) = s·tan(πa')`.
pub fn fold_angle(p: i64, q: i64) -> Result<(RationalAngle, i64)> {
    let x = Rational::new(p, q);
    let frac = &x - &Rational::from(x.floor());
    let half = Rational::new(1, 2);
    if frac.is_zero() || frac == half {
        return Err(Error::InvalidArgument(format!("tan({x}·π) is 0 or a pole")));
    }
    if frac > half {
        Ok((RationalAngle::new(&Rational::one() - &frac)?, -1))
    } else {
        Ok((RationalAngle::new(frac)?, 1))
    }
}

fn chi(k: i64) -> i64 {
    if k.rem_euclid(4) == 1 {
        1
    } else {
        -1
    }
}

/// `σ_k(tan πa) = sign·tan πa'`, checked exactly in conductor `m`.
fn conjugate_tangent(a: &RationalAngle, k: i64, m: u64) -> Result<(RationalAngle, i64)> {
    let (folded, s) = fold_angle(k * a.numer(), a.denom())?;
    let sign = chi(k) * s;
    let lhs = tan_in(a.numer(), a.denom(), m)?.galois(k)?;
    let rhs = tan_in(folded.numer(), folded.denom(), m)?.scale(&Rational::from_int(sign));
    if lhs != rhs {
        return Err(Error::Inconsistent(format!(
            "σ_{k}(tan π·{a}) is not ±tan π·{folded}"
        )));
    }
    Ok((folded, sign))
}

/// The ratio of the conjugated tangents, reordered so that `α < β`.
///
/// `k` must be prime to the conductor of μ. The result satisfies
/// `σ_k(μ) = ±μ'` or `σ_k(μ) = ±1/μ'`, which is verified exactly.
pub fn apply_galois(t: &TangentRatio, k: i64) -> Result<TangentRatio> {
    let m = pair_conductor(t.alpha(), t.beta());
    if k.gcd(&(m as i64)) != 1 {
        return Err(Error::NotCoprime { k, m });
    }
    let (a, sa) = conjugate_tangent(t.alpha(), k, m)?;
    let (b, sb) = conjugate_tangent(t.beta(), k, m)?;
    let sign = Rational::from_int(sa * sb);
    let conj = t.mu().galois(k)?;
    let out;
    let ok = if a < b {
        out = ratio(&a, &b)?;
        conj == out.mu().scale(&sign)
    } else {
        out = ratio(&b, &a)?;
        (&conj * out.mu()) == CyclotomicElem::from_rational(conj.conductor(), sign)
    };
    if !ok {
        return Err(Error::Inconsistent(format!(
            "σ_{k} of the ratio ({}, {}) does not match ({}, {})",
            t.alpha(),
            t.beta(),
            out.alpha(),
            out.beta()
        )));
    }
    Ok(out)
}

/// Lifts a unit modulo `n = lcm(q_α, q_β)` to a unit modulo the conductor.
fn lift_unit(k: u64, n: u64) -> i64 {
    if k % 2 == 0 {
        (k + n) as i64
    } else {
        k as i64
    }
}

/// A Galois conjugate whose smaller angle has numerator 1.
///
/// Tries units `k` in increasing order; if no conjugate has the smaller angle
/// of the form `1/s`, uses the first `k` that sends α's numerator to ±1.
pub fn normalize_by_galois(t: &TangentRatio) -> Result<TangentRatio> {
    if t.alpha().numer() == 1 {
        return Ok(t.clone());
    }
    let n = (t.alpha().denom() as u64).lcm(&(t.beta().denom() as u64));
    let mut fallback = None;
    for k in units_mod(n) {
        let k = lift_unit(k, n);
        let (a, _) = fold_angle(k * t.alpha().numer(), t.alpha().denom())?;
        let (b, _) = fold_angle(k * t.beta().numer(), t.beta().denom())?;
        if a.clone().min(b).numer() == 1 {
            return apply_galois(t, k);
        }
        if fallback.is_none() && a.numer() == 1 {
            fallback = Some(k);
        }
    }
    match fallback {
        Some(k) => apply_galois(t, k),
        None => Ok(t.clone()),
    }
}
