//! Signs of real cyclotomic numbers.
//!
//! Zero is detected exactly from the canonical form. A nonzero value is
//! evaluated under ζ_m ↦ exp(2πi/m) in interval arithmetic, doubling the
//! working precision until the enclosure excludes zero.

use std::sync::OnceLock;

use super::interval::{cos_sin_two_pi_frac, Dyadic};
use super::CyclotomicElem;
use crate::{Error, Result};

pub const PRECISION_ENV: &str = "TORSION_PACKET_PRECISION_BITS";
const DEFAULT_PRECISION: u32 = 128;
const MAX_PRECISION: u32 = 1 << 16;

/// Initial precision in bits, from `TORSION_PACKET_PRECISION_BITS` (default 128).
pub fn initial_precision() -> u32 {
    static BITS: OnceLock<u32> = OnceLock::new();
    *BITS.get_or_init(|| {
        std::env::var(PRECISION_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .filter(|&b| b >= 8)
            .unwrap_or(DEFAULT_PRECISION)
    })
}

/// Enclosure of the real part of `e` at the defining embedding.
pub fn real_enclosure(e: &CyclotomicElem, prec: u32) -> Dyadic {
    let m = e.conductor();
    let guard = 16 + 64 - (e.coeffs().len() as u64).leading_zeros();
    let work = prec + guard;
    let mut acc = Dyadic::exact_int(0, work);
    for (j, c) in e.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (cos, _) = cos_sin_two_pi_frac(j as u64, m, work);
        acc = acc.add(&Dyadic::from_rational(c, work).mul(&cos));
    }
    acc
}

/// −1, 0 or +1; `e` must be fixed by complex conjugation.
pub fn sign_of_real(e: &CyclotomicElem) -> Result<i32> {
    sign_of_real_with_precision(e, initial_precision())
}

pub fn sign_of_real_with_precision(e: &CyclotomicElem, start_bits: u32) -> Result<i32> {
    if !e.is_real() {
        return Err(Error::NotReal);
    }
    if e.is_zero() {
        return Ok(0);
    }
    let mut bits = start_bits.max(8);
    while bits <= MAX_PRECISION {
        if let Some(s) = real_enclosure(e, bits).sign() {
            return Ok(s);
        }
        bits *= 2;
    }
    Err(Error::Inconsistent(format!(
        "sign of the nonzero element {e} not resolved at {MAX_PRECISION} bits"
    )))
}

/// Exact comparison of two real cyclotomic numbers.
pub fn compare_real(a: &CyclotomicElem, b: &CyclotomicElem) -> Result<std::cmp::Ordering> {
    Ok(sign_of_real(&(a - b))?.cmp(&0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn z(m: u64, j: i64) -> CyclotomicElem {
        CyclotomicElem::zeta_pow(m, j)
    }

    #[test]
    fn examples() {
        assert_eq!(sign_of_real(&CyclotomicElem::zero(5)).unwrap(), 0);
        assert_eq!(sign_of_real(&(&z(5, 1) + &z(5, 4))).unwrap(), 1);
        assert_eq!(sign_of_real(&(&z(5, 2) + &z(5, 3))).unwrap(), -1);
    }

    #[test]
    fn rejects_non_real() {
        assert!(matches!(sign_of_real(&z(5, 1)), Err(Error::NotReal)));
    }

    #[test]
    fn tiny_values_need_more_bits() {
        // 2cos(2π/5) − 0.618033988749894848204586834365638117720309179805762862135448622705
        // differs from zero only far beyond a few bits.
        let golden = &z(5, 1) + &z(5, 4);
        let approx: Rational =
            "618033988749894848204586834365638117720/1000000000000000000000000000000000000000"
                .parse()
                .unwrap();
        let diff = &golden - &CyclotomicElem::from_rational(5, approx);
        assert_eq!(sign_of_real_with_precision(&diff, 8).unwrap(), 1);
    }

    #[test]
    fn comparisons() {
        use std::cmp::Ordering;
        let a = &z(5, 1) + &z(5, 4);
        let one = CyclotomicElem::one(5);
        assert_eq!(compare_real(&a, &one).unwrap(), Ordering::Less);
        assert_eq!(compare_real(&one, &a).unwrap(), Ordering::Greater);
    }
}
