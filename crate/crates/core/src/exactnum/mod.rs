//! Exact arithmetic: rationals, polynomials over ℚ, real quadratic and
//! cyclotomic fields, minimal polynomials and signs of real algebraic numbers.

pub mod cyclotomic;
mod field;
pub mod interval;
pub mod linalg;
mod minpoly;
mod poly;
mod quadratic;
mod rational;
pub mod sign;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, units_mod, CyclotomicElem};
pub use field::Field;
pub use minpoly::{galois_orbit, minimal_polynomial, MinPoly};
pub use poly::QPoly;
pub use quadratic::{quadratic_from_minpoly, squarefree_decompose, QuadraticElem, RootSign};
pub use rational::{ParseRationalError, Rational};
pub use sign::{compare_real, sign_of_real, sign_of_real_with_precision};

/// σ_k applied to a cyclotomic element (fails unless `gcd(k, m) = 1`).
pub fn galois_apply(e: &CyclotomicElem, k: i64) -> crate::Result<CyclotomicElem> {
    e.galois(k)
}
