//! Rigorous interval arithmetic.
//!
//! [`Dyadic`] intervals hold endpoints `lo·2^-p`, `hi·2^-p` with big-integer
//! mantissas and outward rounding on every operation; they are used to
//! enclose π, cosines and sines to any requested precision. [`F64Interval`]
//! is a cheap outward-rounded `f64` interval fed from dyadic enclosures.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Dyadic {
    fn unit(prec: u32) -> BigInt {
        BigInt::one() << prec
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn exact_int(n: i64, prec: u32) -> Self {
        let v = BigInt::from(n) << prec;
        Dyadic { lo: v.clone(), hi: v, prec }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let n = r.numer() << prec;
        let d = r.denom();
        Dyadic { lo: floor_div(&n, &d), hi: ceil_div(&n, &d), prec }
    }

    /// `[-ε, ε]` with `ε = k·2^-p`.
    pub fn error_ball(k: u64, prec: u32) -> Self {
        Dyadic { lo: -BigInt::from(k), hi: BigInt::from(k), prec }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.prec, rhs.prec);
        Dyadic { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi, prec: self.prec }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.prec, rhs.prec);
        Dyadic { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        Dyadic { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.prec, rhs.prec);
        let ps = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let min = ps.iter().min().unwrap();
        let max = ps.iter().max().unwrap();
        let u = Self::unit(self.prec);
        Dyadic { lo: floor_div(min, &u), hi: ceil_div(max, &u), prec: self.prec }
    }

    pub fn div_int(&self, n: u64) -> Self {
        assert!(n > 0);
        let n = BigInt::from(n);
        Dyadic { lo: floor_div(&self.lo, &n), hi: ceil_div(&self.hi, &n), prec: self.prec }
    }

    /// Interval quotient; `None` if the divisor straddles zero.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.contains_zero() {
            return None;
        }
        let u = Self::unit(self.prec);
        let mut los = Vec::with_capacity(4);
        let mut his = Vec::with_capacity(4);
        for a in [&self.lo, &self.hi] {
            for b in [&rhs.lo, &rhs.hi] {
                let n = a * &u;
                los.push(floor_div(&n, b));
                his.push(ceil_div(&n, b));
            }
        }
        Some(Dyadic {
            lo: los.into_iter().min().unwrap(),
            hi: his.into_iter().max().unwrap(),
            prec: self.prec,
        })
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// The sign of every point in the interval, if it is uniform and nonzero.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    /// Outward-rounded `f64` endpoints.
    pub fn to_f64_bounds(&self) -> F64Interval {
        let scale = 2f64.powi(-(self.prec as i32));
        let lo = self.lo.to_f64().unwrap() * scale;
        let hi = self.hi.to_f64().unwrap() * scale;
        F64Interval { lo: lo.next_down().next_down(), hi: hi.next_up().next_up() }
    }

    pub fn midpoint_f64(&self) -> f64 {
        let b = self.to_f64_bounds();
        0.5 * (b.lo + b.hi)
    }
}

/// Σ (−1)^n / ((2n+1) k^{2n+1}); alternating with decreasing terms, so the
/// truncation error is below the first omitted term.
fn atan_inv(k: u64, prec: u32) -> Dyadic {
    let u = Dyadic::unit(prec);
    let kk = BigInt::from(k);
    let k2 = &kk * &kk;
    let mut pow = kk.clone();
    let mut acc = Dyadic { lo: BigInt::zero(), hi: BigInt::zero(), prec };
    let mut n = 0u64;
    loop {
        let den = &pow * BigInt::from(2 * n + 1);
        let term = Dyadic { lo: floor_div(&u, &den), hi: ceil_div(&u, &den), prec };
        if term.hi <= BigInt::one() {
            return acc.add(&Dyadic::error_ball(1, prec));
        }
        acc = if n % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        pow *= &k2;
        n += 1;
    }
}

/// π by Machin's formula, π = 16·atan(1/5) − 4·atan(1/239).
pub fn pi(prec: u32) -> Dyadic {
    let a = atan_inv(5, prec);
    let b = atan_inv(239, prec);
    let sixteen = Dyadic::exact_int(16, prec);
    let four = Dyadic::exact_int(4, prec);
    sixteen.mul(&a).sub(&four.mul(&b))
}

/// Enclosures of `(cos x, sin x)` for `x` in a non-negative interval (Taylor
/// series with Lagrange remainder).
pub fn cos_sin(x: &Dyadic) -> (Dyadic, Dyadic) {
    let prec = x.prec;
    let xmax = x.hi.to_f64().unwrap() * 2f64.powi(-(prec as i32));
    let mut cos = Dyadic::exact_int(1, prec);
    let mut sin = x.clone();
    let mut term = x.clone(); // x^n / n!, n = 1
    let mut n = 1u64;
    loop {
        // term ← term · x / (n+1)
        term = term.mul(x).div_int(n + 1);
        n += 1;
        match n % 4 {
            0 => cos = cos.add(&term),
            1 => sin = sin.add(&term),
            2 => cos = cos.sub(&term),
            _ => sin = sin.sub(&term),
        }
        // Remainder after degree n is at most xmax^{n+1}/(n+1)!; stop once tiny.
        let log2_rem = (n as f64 + 1.0) * xmax.max(1e-300).log2() - log2_factorial(n + 1);
        if n > 4 && log2_rem < -(prec as f64) - 4.0 {
            let ball = Dyadic::error_ball(2, prec);
            return (cos.add(&ball), sin.add(&ball));
        }
    }
}

fn log2_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).log2()).sum()
}

/// `(cos, sin)` of `2π·num/den`.
pub fn cos_sin_two_pi_frac(num: u64, den: u64, prec: u32) -> (Dyadic, Dyadic) {
    let num = num % den;
    // Stay on [0, π] and use cos(2π − θ) = cos θ, sin(2π − θ) = −sin θ.
    let (n, flip) = if 2 * num > den { (den - num, true) } else { (num, false) };
    let theta = pi(prec).mul(&Dyadic::exact_int(2 * n as i64, prec)).div_int(den);
    let (c, s) = cos_sin(&theta);
    if flip {
        (c, s.neg())
    } else {
        (c, s)
    }
}

/// Rigorous `f64` enclosure of `tan(π·j/q)`; `None` at the poles.
pub fn tan_pi_enclosure(j: u64, q: u64) -> Option<F64Interval> {
    let (c, s) = cos_sin_two_pi_frac(j, 2 * q, 96);
    s.div(&c).map(|t| t.to_f64_bounds())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct F64Interval {
    pub lo: f64,
    pub hi: f64,
}

impl F64Interval {
    pub fn contains_zero(&self) -> bool {
        self.lo <= 0.0 && self.hi >= 0.0
    }

    /// Outward-rounded quotient; `None` if the divisor straddles zero.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.contains_zero() {
            return None;
        }
        let qs = [self.lo / rhs.lo, self.lo / rhs.hi, self.hi / rhs.lo, self.hi / rhs.hi];
        let lo = qs.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = qs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Some(F64Interval { lo: lo.next_down(), hi: hi.next_up() })
    }

    pub fn disjoint(&self, other: &Self) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_is_enclosed() {
        let p = pi(200);
        let b = p.to_f64_bounds();
        assert!(b.contains(std::f64::consts::PI));
        assert!(p.hi.clone() - p.lo.clone() < BigInt::from(1 << 12));
    }

    #[test]
    fn cos_sin_are_enclosed() {
        for (n, d) in [(1u64, 5u64), (2, 5), (3, 20), (7, 12), (11, 12), (0, 7)] {
            let (c, s) = cos_sin_two_pi_frac(n, d, 120);
            let th = 2.0 * std::f64::consts::PI * n as f64 / d as f64;
            assert!(c.to_f64_bounds().lo <= th.cos() + 1e-15);
            assert!(c.to_f64_bounds().hi >= th.cos() - 1e-15);
            assert!((s.midpoint_f64() - th.sin()).abs() < 1e-14);
        }
    }

    #[test]
    fn tangent_enclosures() {
        let t = tan_pi_enclosure(1, 4).unwrap();
        assert!(t.contains(1.0));
        assert!(t.hi - t.lo < 1e-14);
        assert!(tan_pi_enclosure(1, 2).is_none());
        let t = tan_pi_enclosure(3, 10).unwrap();
        assert!((t.lo - (0.3 * std::f64::consts::PI).tan()).abs() < 1e-13);
    }

    #[test]
    fn division_and_signs() {
        let a = Dyadic::from_rational(&Rational::new(1, 3), 64);
        let b = Dyadic::from_rational(&Rational::new(-2, 7), 64);
        let q = a.div(&b).unwrap();
        assert_eq!(q.sign(), Some(-1));
        assert!((q.midpoint_f64() + 7.0 / 6.0).abs() < 1e-15);
        assert!(a.sub(&a).contains_zero());
    }
}
