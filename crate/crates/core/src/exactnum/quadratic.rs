//! Elements `a + b√D` of ℚ[s]/(s² − D), D squarefree.
//!
//! For `D ≥ 2` this is the real quadratic field ℚ(√D). `D = 1` is allowed
//! so that every root of an integer quadratic `t² − et − b` has a home: the
//! algebra is then split, `√1` is the formal root `s` and the real value
//! takes `s = 1`. Trace and norm are the algebra's (`2a` and `a² − D b²`)
//! in both cases.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{MinPoly, Rational};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticElem {
    pub a: Rational,
    pub b: Rational,
    #[serde(rename = "D")]
    pub d: u64,
}

/// Which root of a real quadratic to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootSign {
    Plus,
    Minus,
}

/// Writes a positive integer as `s² · D` with `D` squarefree.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, u64) {
    assert!(n.is_positive(), "squarefree decomposition needs n > 0");
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut core = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= &p;
            }
        }
        p += 1u32;
    }
    core *= rest;
    let d = core.to_u64().expect("squarefree part fits in u64");
    (square, d)
}

impl QuadraticElem {
    pub fn new(a: Rational, b: Rational, d: u64) -> Self {
        assert!(d >= 1, "D must be positive");
        QuadraticElem { a, b, d }
    }

    pub fn rational(a: Rational, d: u64) -> Self {
        Self::new(a, Rational::zero(), d)
    }

    /// `√n` for a positive integer `n`, as `s√D`.
    pub fn sqrt_of(n: u64) -> Self {
        let (s, d) = squarefree_decompose(&BigInt::from(n));
        Self::new(Rational::zero(), Rational::from(s), d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The Galois conjugate `a − b√D`.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.d)
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &Rational::from_int(self.d as i64))
    }

    /// `None` for zero and, when `D = 1`, for zero divisors.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let ni = n.inv();
        Some(Self::new(&self.a * &ni, -&(&self.b * &ni), self.d))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.a * r, &self.b * r, self.d)
    }

    /// Sign of the real value, decided exactly.
    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &(&self.b * &self.b) * &Rational::from_int(self.d as i64);
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * (self.d as f64).sqrt()
    }

    /// The monic polynomial `t² − trace·t + norm`.
    pub fn char_poly(&self) -> MinPoly {
        MinPoly::from_monic_ascending(vec![self.norm(), -self.trace(), Rational::one()])
    }

    fn check_same(&self, rhs: &Self) {
        assert_eq!(self.d, rhs.d, "mixing ℚ(√{}) and ℚ(√{})", self.d, rhs.d);
    }
}

impl<'a> Add<&'a QuadraticElem> for &'a QuadraticElem {
    type Output = QuadraticElem;
    fn add(self, rhs: &'a QuadraticElem) -> QuadraticElem {
        self.check_same(rhs);
        QuadraticElem::new(&self.a + &rhs.a, &self.b + &rhs.b, self.d)
    }
}

impl<'a> Sub<&'a QuadraticElem> for &'a QuadraticElem {
    type Output = QuadraticElem;
    fn sub(self, rhs: &'a QuadraticElem) -> QuadraticElem {
        self.check_same(rhs);
        QuadraticElem::new(&self.a - &rhs.a, &self.b - &rhs.b, self.d)
    }
}

impl<'a> Mul<&'a QuadraticElem> for &'a QuadraticElem {
    type Output = QuadraticElem;
    fn mul(self, rhs: &'a QuadraticElem) -> QuadraticElem {
        self.check_same(rhs);
        let d = Rational::from_int(self.d as i64);
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &d);
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        QuadraticElem::new(a, b, self.d)
    }
}

impl Neg for &QuadraticElem {
    type Output = QuadraticElem;
    fn neg(self) -> QuadraticElem {
        QuadraticElem::new(-&self.a, -&self.b, self.d)
    }
}

/// Selects a root of a monic quadratic with positive discriminant.
///
/// `Plus` is `a + b√D` with `b > 0`.
pub fn quadratic_from_minpoly(p: &MinPoly, which: RootSign) -> Result<QuadraticElem> {
    if p.degree() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a quadratic, got degree {}",
            p.degree()
        )));
    }
    let c0 = &p.coefficients()[0];
    let c1 = &p.coefficients()[1];
    let disc = &(c1 * c1) - &(c0 * &Rational::from_int(4));
    if disc.signum() <= 0 {
        return Err(Error::InvalidArgument(format!(
            "discriminant {disc} has no real quadratic model"
        )));
    }
    // √(n/d) = √(n d) / d
    let (s, d) = squarefree_decompose(&(disc.numer() * disc.denom()));
    let a = -&(c1 * &Rational::new(1, 2));
    let mut b = &Rational::from(s) / &(&Rational::from(disc.denom()) * &Rational::from_int(2));
    if which == RootSign::Minus {
        b = -b;
    }
    Ok(QuadraticElem::new(a, b, d))
}

impl fmt::Display for QuadraticElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = format!("√{}", self.d);
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let mag = self.b.abs();
        let surd = if mag.is_one() {
            root
        } else if mag.is_integer() {
            format!("{mag}{root}")
        } else {
            format!("({mag}){root}")
        };
        match (self.a.is_zero(), self.b.signum() < 0) {
            (true, false) => write!(f, "{surd}"),
            (true, true) => write!(f, "-{surd}"),
            (false, false) => write!(f, "{} + {surd}", self.a),
            (false, true) => write!(f, "{} - {surd}", self.a),
        }
    }
}

impl fmt::Debug for QuadraticElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticElem({self})")
    }
}
