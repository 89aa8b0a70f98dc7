//! Minimal polynomials of cyclotomic elements from their Galois orbits.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::cyclotomic::units_mod;
use super::{CyclotomicElem, QPoly, Rational};
use crate::{Error, Result};

/// A monic polynomial over ℚ, irreducible by construction.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinPoly {
    /// Ascending order; the last entry is 1.
    coefficients: Vec<Rational>,
    degree: usize,
}

impl MinPoly {
    pub(crate) fn from_monic_ascending(coefficients: Vec<Rational>) -> Self {
        debug_assert!(coefficients.last().is_some_and(Rational::is_one));
        let degree = coefficients.len() - 1;
        MinPoly { coefficients, degree }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Sum of the roots.
    pub fn trace(&self) -> Rational {
        -&self.coefficients[self.degree - 1]
    }

    /// Product of the roots.
    pub fn norm(&self) -> Rational {
        let c0 = &self.coefficients[0];
        if self.degree % 2 == 0 {
            c0.clone()
        } else {
            -c0
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients.iter().all(Rational::is_integer)
    }

    /// Both the root and its inverse are algebraic integers.
    pub fn is_unit(&self) -> bool {
        self.is_integral() && self.coefficients[0].abs().is_one()
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coefficients.clone())
    }
}

impl fmt::Display for MinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_qpoly())
    }
}

impl fmt::Debug for MinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MinPoly({self})")
    }
}

/// The distinct conjugates `σ_k(e)`, in order of first appearance over ascending `k`.
pub fn galois_orbit(e: &CyclotomicElem) -> Vec<CyclotomicElem> {
    let mut seen = HashSet::new();
    let mut orbit = Vec::new();
    for k in units_mod(e.conductor()) {
        let c = e.galois(k as i64).expect("k is a unit");
        if seen.insert(c.coeffs().to_vec()) {
            orbit.push(c);
        }
    }
    orbit
}

/// `∏ (x − c)` over the Galois orbit of `e`.
///
/// Each product coefficient must come out rational; if one does not, the
/// arithmetic is broken and the call fails rather than rounding.
pub fn minimal_polynomial(e: &CyclotomicElem) -> Result<MinPoly> {
    let m = e.conductor();
    let orbit = galois_orbit(e);
    // Coefficients in ascending order, starting from the constant 1.
    let mut prod = vec![CyclotomicElem::one(m)];
    for c in &orbit {
        let mut next = vec![CyclotomicElem::zero(m); prod.len() + 1];
        for (i, p) in prod.iter().enumerate() {
            next[i + 1] = &next[i + 1] + p;
            next[i] = &next[i] - &(p * c);
        }
        prod = next;
    }
    let coefficients = prod
        .iter()
        .enumerate()
        .map(|(i, c)| {
            c.as_rational().ok_or_else(|| {
                Error::Inconsistent(format!("orbit product coefficient {i} is not rational: {c}"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MinPoly::from_monic_ascending(coefficients))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(cs: &[i64]) -> Vec<Rational> {
        cs.iter().map(|&c| Rational::from_int(c)).collect()
    }

    #[test]
    fn rational_constant() {
        let p = minimal_polynomial(&CyclotomicElem::from_int(12, 7)).unwrap();
        assert_eq!(p.coefficients(), ints(&[-7, 1]).as_slice());
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn golden_section() {
        // ζ5 + ζ5⁴ = 2cos(2π/5) is a root of x² + x − 1.
        let e = &CyclotomicElem::zeta_pow(5, 1) + &CyclotomicElem::zeta_pow(5, 4);
        let p = minimal_polynomial(&e).unwrap();
        assert_eq!(p.coefficients(), ints(&[-1, 1, 1]).as_slice());
        assert!(p.is_unit());
        assert_eq!(p.trace(), Rational::from_int(-1));
        assert_eq!(p.norm(), Rational::from_int(-1));
    }

    #[test]
    fn zeta_has_cyclotomic_minpoly() {
        for m in [5u64, 8, 12] {
            let p = minimal_polynomial(&CyclotomicElem::zeta(m)).unwrap();
            assert_eq!(p.to_qpoly(), *super::super::cyclotomic_polynomial(m));
        }
    }

    #[test]
    fn invariant_under_galois_and_embedding() {
        let e = &CyclotomicElem::zeta_pow(20, 3) + &CyclotomicElem::zeta_pow(20, 17);
        let p = minimal_polynomial(&e).unwrap();
        for k in units_mod(20) {
            assert_eq!(minimal_polynomial(&e.galois(k as i64).unwrap()).unwrap(), p);
        }
        assert_eq!(minimal_polynomial(&e.embed(60).unwrap()).unwrap(), p);
    }
}
