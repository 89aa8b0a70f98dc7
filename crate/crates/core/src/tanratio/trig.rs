//! tan, cot and sin of rational multiples of π as elements of ℚ(ζ_m).
//!
//! With `w = exp(2πi·p/q)` we have `tan(πp/q) = −i(w − 1)/(w + 1)`. The
//! inverse of `1 + w = 1 − (−w)` has a closed form (see
//! [`CyclotomicElem::inv_one_minus_root`]), so each value is assembled from a
//! list of terms and reduced once; no polynomial inversion is needed.

use num_integer::Integer;

use super::RationalAngle;
use crate::exactnum::cyclotomic::inv_one_minus_root_terms;
use crate::exactnum::{CyclotomicElem, Rational};
use crate::{Error, Result};

/// The conductor `lcm(4, 2q)` holding i and `exp(iπ/q)`.
pub fn tan_conductor(q: u64) -> u64 {
    4u64.lcm(&(2 * q))
}

/// Exponent `a` with `ζ_m^a = exp(iπ·p/q)`; requires `2q | m`.
fn half_turn(p: i64, q: i64, m: u64) -> Result<i64> {
    let mi = m as i64;
    if q <= 0 || mi % (2 * q) != 0 || mi % 4 != 0 {
        return Err(Error::InvalidArgument(format!(
            "conductor {m} does not contain i and exp(iπ/{q})"
        )));
    }
    Ok(p.rem_euclid(2 * q) * (mi / (2 * q)))
}

/// `ζ^shift · (ζ^w + w_sign) · (1 − ζ^t)^{-1}`.
fn closed_form(m: u64, shift: i64, w: i64, w_sign: i64, t: i64) -> Result<CyclotomicElem> {
    if t.rem_euclid(m as i64) == 0 {
        return Err(Error::DivisionByZero);
    }
    let inv = inv_one_minus_root_terms(m, t);
    let mut terms = Vec::with_capacity(2 * inv.len());
    for (e, c) in inv {
        terms.push((e + shift + w, c.clone()));
        terms.push((e + shift, &Rational::from_int(w_sign) * &c));
    }
    Ok(CyclotomicElem::from_terms(m, &terms))
}

/// tan(πp/q) in conductor `m` (needs `4 | m` and `2q | m`).
pub fn tan_in(p: i64, q: i64, m: u64) -> Result<CyclotomicElem> {
    let a = half_turn(p, q, m)?;
    let mi = m as i64;
    // −i(w − 1)·(1 − (−w))^{-1}, −i = ζ^{3m/4}, −w = ζ^{2a + m/2}
    closed_form(m, 3 * mi / 4, 2 * a, -1, 2 * a + mi / 2)
}

/// cot(πp/q) = −i(w + 1)·(1 − w)^{-1} in conductor `m`.
pub fn cot_in(p: i64, q: i64, m: u64) -> Result<CyclotomicElem> {
    let a = half_turn(p, q, m)?;
    let mi = m as i64;
    closed_form(m, 3 * mi / 4, 2 * a, 1, 2 * a)
}

/// sin(πp/q) = (ζ^a − ζ^{−a})/(2i) in conductor `m`.
pub fn sin_in(p: i64, q: i64, m: u64) -> Result<CyclotomicElem> {
    let a = half_turn(p, q, m)?;
    let mi = m as i64;
    let h = Rational::new(1, 2);
    Ok(CyclotomicElem::from_terms(m, &[(3 * mi / 4 + a, h.clone()), (3 * mi / 4 - a, -h)]))
}

/// tan(πp/q) for any rational `p/q` off the poles, in conductor `lcm(4, 2q)`.
pub fn tan_pi(p: i64, q: i64) -> Result<CyclotomicElem> {
    if q == 0 {
        return Err(Error::DivisionByZero);
    }
    let r = Rational::new(p, q);
    let (p, q) = r.as_i64_pair().ok_or_else(|| Error::InvalidArgument(format!("{r}")))?;
    tan_in(p, q, tan_conductor(q as u64))
}

pub fn tan_of(angle: &RationalAngle) -> CyclotomicElem {
    tan_in(angle.numer(), angle.denom(), tan_conductor(angle.denom() as u64))
        .expect("angles in (0, 1/2) are off the poles")
}

pub fn cot_of(angle: &RationalAngle) -> CyclotomicElem {
    cot_in(angle.numer(), angle.denom(), tan_conductor(angle.denom() as u64))
        .expect("angles in (0, 1/2) are off the poles")
}

pub fn sin_of(angle: &RationalAngle) -> CyclotomicElem {
    sin_in(angle.numer(), angle.denom(), tan_conductor(angle.denom() as u64))
        .expect("conductor contains i")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{minimal_polynomial, sign_of_real};

    fn angle(p: i64, q: i64) -> RationalAngle {
        RationalAngle::from_frac(p, q).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(tan_of(&angle(1, 4)).as_rational(), Some(Rational::one()));
        let t6 = tan_of(&angle(1, 6));
        assert_eq!((&t6 * &t6).as_rational(), Some(Rational::new(1, 3)));
        let p = minimal_polynomial(&t6).unwrap();
        assert_eq!(p.to_string(), "x^2 - 1/3");
    }

    #[test]
    fn tan_pi_over_five() {
        let p = minimal_polynomial(&tan_of(&angle(1, 5))).unwrap();
        assert_eq!(p.to_string(), "x^4 - 10*x^2 + 5");
    }

    #[test]
    fn tan_is_real_positive_and_matches_floats() {
        for a in RationalAngle::all_up_to(16) {
            let t = tan_of(&a);
            assert!(t.is_real(), "{a}");
            assert_eq!(sign_of_real(&t).unwrap(), 1, "{a}");
            let expect = (std::f64::consts::PI * a.numer() as f64 / a.denom() as f64).tan();
            let (re, im) = t.to_complex_f64();
            assert!((re - expect).abs() < 1e-9 && im.abs() < 1e-9, "{a}");
            assert!((&t * &cot_of(&a)).as_rational().is_some_and(|r| r.is_one()));
        }
    }

    #[test]
    fn sine_matches_floats() {
        for (p, q) in [(1, 7), (2, 5), (1, 12)] {
            let (re, im) = sin_of(&angle(p, q)).to_complex_f64();
            assert!((re - (std::f64::consts::PI * p as f64 / q as f64).sin()).abs() < 1e-12);
            assert!(im.abs() < 1e-12);
        }
    }

    #[test]
    fn general_angles_and_poles() {
        // tan(3π/4) = −1, tan(0) = 0, tan(π/2) is a pole.
        assert_eq!(tan_pi(3, 4).unwrap().as_rational(), Some(Rational::from_int(-1)));
        assert!(tan_pi(0, 5).unwrap().is_zero());
        assert!(matches!(tan_pi(1, 2), Err(Error::DivisionByZero)));
    }
}
