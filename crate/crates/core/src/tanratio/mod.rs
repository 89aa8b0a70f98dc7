//! Ratios of tangents `μ = tan(πβ)/tan(πα)` for rational `0 < α < β < 1/2`.
//!
//! Tangents live in ℚ(ζ_m) with `m = lcm(4, 2q)`, so the ratio and all its
//! Galois conjugates are exact. The degree of μ is the size of its Galois
//! orbit; [`enumerate_ratios`] searches a denominator-bounded grid for a given
//! degree, and [`table1`] compares the degree-2 non-units with the shipped
//! reference list.

mod addition;
mod angle;
mod enumerate;
mod galois;
pub mod table1;
mod trig;

use num_integer::Integer;
use serde::Serialize;

pub use addition::check_addition_formula;
pub use angle::RationalAngle;
pub use enumerate::{conjugate_enclosures, enumerate_ratios};
pub use galois::{apply_galois, fold_angle, normalize_by_galois};
pub use trig::{cot_in, cot_of, sin_in, sin_of, tan_conductor, tan_in, tan_of, tan_pi};

use crate::exactnum::{
    minimal_polynomial, quadratic_from_minpoly, sign_of_real, CyclotomicElem, MinPoly,
    QuadraticElem, Rational, RootSign,
};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct TangentRatio {
    alpha: RationalAngle,
    beta: RationalAngle,
    mu: CyclotomicElem,
    minpoly: MinPoly,
    degree: usize,
    is_unit: bool,
}

impl TangentRatio {
    pub fn alpha(&self) -> &RationalAngle {
        &self.alpha
    }

    pub fn beta(&self) -> &RationalAngle {
        &self.beta
    }

    pub fn mu(&self) -> &CyclotomicElem {
        &self.mu
    }

    pub fn minpoly(&self) -> &MinPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// μ and 1/μ are both algebraic integers.
    pub fn is_unit(&self) -> bool {
        self.is_unit
    }

    pub fn trace(&self) -> Rational {
        self.minpoly.trace()
    }

    pub fn norm(&self) -> Rational {
        self.minpoly.norm()
    }

    /// μ as `a + b√D` when it has degree 2.
    pub fn quadratic(&self) -> Result<Option<QuadraticElem>> {
        if self.degree != 2 {
            return Ok(None);
        }
        let plus = quadratic_from_minpoly(&self.minpoly, RootSign::Plus)?;
        // μ − a = ±b√D with b > 0, so the sign of μ − a picks the root.
        let shifted = &self.mu - &CyclotomicElem::from_rational(self.mu.conductor(), plus.a.clone());
        Ok(Some(match sign_of_real(&shifted)? {
            1 => plus,
            _ => quadratic_from_minpoly(&self.minpoly, RootSign::Minus)?,
        }))
    }
}

/// The smallest conductor holding both tangents.
pub fn pair_conductor(alpha: &RationalAngle, beta: &RationalAngle) -> u64 {
    tan_conductor(alpha.denom() as u64).lcm(&tan_conductor(beta.denom() as u64))
}

/// `μ = tan(πβ)·cot(πα)`, without the minimal polynomial.
pub fn ratio_value(alpha: &RationalAngle, beta: &RationalAngle) -> CyclotomicElem {
    let m = pair_conductor(alpha, beta);
    let t = tan_in(beta.numer(), beta.denom(), m).expect("β is off the poles");
    let c = cot_in(alpha.numer(), alpha.denom(), m).expect("α is off the poles");
    &t * &c
}

pub fn ratio(alpha: &RationalAngle, beta: &RationalAngle) -> Result<TangentRatio> {
    if alpha >= beta {
        return Err(Error::InvalidArgument(format!("need α < β, got α = {alpha}, β = {beta}")));
    }
    let mu = ratio_value(alpha, beta);
    let minpoly = minimal_polynomial(&mu)?;
    Ok(TangentRatio {
        alpha: alpha.clone(),
        beta: beta.clone(),
        degree: minpoly.degree(),
        is_unit: minpoly.is_unit(),
        mu,
        minpoly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{compare_real, QuadraticElem};

    fn a(p: i64, q: i64) -> RationalAngle {
        RationalAngle::from_frac(p, q).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn angle_validation() {
        assert!(RationalAngle::from_frac(1, 2).is_err());
        assert!(RationalAngle::from_frac(0, 3).is_err());
        assert!(RationalAngle::from_frac(-1, 3).is_err());
        assert_eq!(a(2, 10), a(1, 5));
        assert!(a(1, 5) < a(2, 7));
        assert_eq!(RationalAngle::all_up_to(4), vec![a(1, 4), a(1, 3)]);
    }

    #[test]
    fn sqrt_five() {
        let t = ratio(&a(1, 10), &a(1, 5)).unwrap();
        assert_eq!(t.minpoly().to_string(), "x^2 - 5");
        assert_eq!((t.trace(), t.norm()), (q(0, 1), q(-5, 1)));
        assert!(!t.is_unit());
        assert_eq!(t.quadratic().unwrap().unwrap(), QuadraticElem::sqrt_of(5));
    }

    #[test]
    fn five_plus_two_sqrt_five() {
        let t = ratio(&a(1, 10), &a(2, 5)).unwrap();
        assert_eq!((t.degree(), t.trace(), t.norm()), (2, q(10, 1), q(5, 1)));
        let m = t.quadratic().unwrap().unwrap();
        assert_eq!(m, QuadraticElem::new(q(5, 1), q(2, 1), 5));
    }

    #[test]
    fn rational_and_unit_cases() {
        let t = ratio(&a(1, 6), &a(1, 3)).unwrap();
        assert_eq!(t.degree(), 1);
        assert_eq!(t.mu().as_rational(), Some(q(3, 1)));

        let t = ratio(&a(1, 12), &a(1, 6)).unwrap();
        assert_eq!((t.degree(), t.trace(), t.norm()), (2, q(2, 1), q(-1, 3)));
        assert_eq!(t.quadratic().unwrap().unwrap(), QuadraticElem::new(q(1, 1), q(2, 3), 3));

        // tan(π/4)/tan(π/12) = 2 + √3 is a unit
        let t = ratio(&a(1, 12), &a(1, 4)).unwrap();
        assert!(t.is_unit());
        assert_eq!(t.quadratic().unwrap().unwrap(), QuadraticElem::new(q(2, 1), q(1, 1), 3));
    }

    #[test]
    fn order_is_enforced() {
        assert!(ratio(&a(1, 5), &a(1, 10)).is_err());
        assert!(ratio(&a(1, 5), &a(1, 5)).is_err());
    }

    #[test]
    fn mu_exceeds_one() {
        let angles = RationalAngle::all_up_to(9);
        for (i, x) in angles.iter().enumerate() {
            for y in &angles[i + 1..] {
                let mu = ratio_value(x, y);
                let one = CyclotomicElem::one(mu.conductor());
                assert_eq!(compare_real(&mu, &one).unwrap(), std::cmp::Ordering::Greater);
            }
        }
    }
}
