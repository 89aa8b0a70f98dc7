//! Elements of ℚ(ζ_m) in the power basis `1, ζ, …, ζ^{φ(m)-1}`.
//!
//! Every element is kept reduced modulo the cyclotomic polynomial Φ_m, so
//! two elements of the same conductor are equal exactly when their
//! coefficient vectors are. Binary operations on elements of different
//! conductors first embed both operands into the lcm conductor.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{linalg, Field, QPoly, Rational};
use crate::{Error, Result};

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Representatives `k ∈ [1, m]` of `(ℤ/m)^*`, ascending.
pub fn units_mod(m: u64) -> Vec<u64> {
    (1..=m).filter(|k| k.gcd(&m) == 1).collect()
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m % d == 0).collect()
}

fn poly_cache() -> &'static Mutex<HashMap<u64, Arc<QPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<QPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Φ_m, obtained by dividing `x^m - 1` exactly by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(m: u64) -> Arc<QPoly> {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    if let Some(p) = poly_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = QPoly::monomial(Rational::one(), m as usize).sub(&QPoly::one());
    for d in divisors(m) {
        if d < m {
            let phi_d = cyclotomic_polynomial(d);
            num = num
                .div_exact(&phi_d)
                .expect("x^m - 1 is divisible by every cyclotomic factor");
        }
    }
    let p = Arc::new(num);
    poly_cache().lock().unwrap().insert(m, p.clone());
    p
}

struct Ctx {
    phi: usize,
    /// Non-leading terms of Φ_m as `(exponent, coefficient)`.
    tail: Vec<(usize, Rational)>,
}

fn ctx(m: u64) -> Arc<Ctx> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Ctx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&m) {
        return c.clone();
    }
    let p = cyclotomic_polynomial(m);
    let phi = p.degree().unwrap();
    let tail = p.coeffs()[..phi]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect();
    let c = Arc::new(Ctx { phi, tail });
    cache.lock().unwrap().insert(m, c.clone());
    c
}

/// Reduces a dense coefficient vector (any length) modulo Φ_m.
fn reduce(m: u64, mut dense: Vec<Rational>) -> Vec<Rational> {
    let m_us = m as usize;
    if dense.len() > m_us {
        // ζ^m = 1, so fold exponents modulo m first.
        for j in m_us..dense.len() {
            if !dense[j].is_zero() {
                let c = std::mem::take(&mut dense[j]);
                dense[j % m_us] += &c;
            }
        }
        dense.truncate(m_us);
    }
    let cx = ctx(m);
    let phi = cx.phi;
    for j in (phi..dense.len()).rev() {
        if dense[j].is_zero() {
            continue;
        }
        let t = std::mem::take(&mut dense[j]);
        for (e, a) in &cx.tail {
            dense[j - phi + e] -= &(&t * a);
        }
    }
    dense.resize(phi, Rational::zero());
    dense
}

/// Terms `(exponent, coefficient)` of the closed form for `(1 - ζ_m^t)^{-1}`.
pub(crate) fn inv_one_minus_root_terms(m: u64, t: i64) -> Vec<(i64, Rational)> {
    let mi = m as i64;
    let scale = Rational::new(-1, mi);
    (1..mi).map(|k| (k * t, &Rational::from_int(k) * &scale)).collect()
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "CyclotomicRepr")]
pub struct CyclotomicElem {
    m: u64,
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
struct CyclotomicRepr {
    m: u64,
    coeffs: Vec<Rational>,
}

impl TryFrom<CyclotomicRepr> for CyclotomicElem {
    type Error = Error;

    fn try_from(r: CyclotomicRepr) -> Result<Self> {
        if r.m == 0 {
            return Err(Error::InvalidArgument("conductor must be positive".into()));
        }
        if r.coeffs.len() as u64 != euler_phi(r.m) {
            return Err(Error::InvalidArgument(format!(
                "conductor {} needs {} coefficients, got {}",
                r.m,
                euler_phi(r.m),
                r.coeffs.len()
            )));
        }
        Ok(CyclotomicElem { m: r.m, coeffs: r.coeffs })
    }
}

impl CyclotomicElem {
    pub fn zero(m: u64) -> Self {
        CyclotomicElem { m, coeffs: vec![Rational::zero(); ctx(m).phi] }
    }

    pub fn one(m: u64) -> Self {
        Self::from_rational(m, Rational::one())
    }

    pub fn from_rational(m: u64, r: Rational) -> Self {
        let mut e = Self::zero(m);
        e.coeffs[0] = r;
        e
    }

    pub fn from_int(m: u64, n: i64) -> Self {
        Self::from_rational(m, Rational::from_int(n))
    }

    /// ζ_m^j for any integer `j`.
    pub fn zeta_pow(m: u64, j: i64) -> Self {
        let e = j.rem_euclid(m as i64) as usize;
        let mut dense = vec![Rational::zero(); e + 1];
        dense[e] = Rational::one();
        Self::from_dense(m, dense)
    }

    pub fn zeta(m: u64) -> Self {
        Self::zeta_pow(m, 1)
    }

    /// The imaginary unit ζ_m^{m/4}; requires `4 | m`.
    pub fn imag_unit(m: u64) -> Result<Self> {
        if m % 4 != 0 {
            return Err(Error::InvalidArgument(format!("i is not in the conductor-{m} field")));
        }
        Ok(Self::zeta_pow(m, (m / 4) as i64))
    }

    /// Reduces `Σ dense[j] ζ^j`.
    pub fn from_dense(m: u64, dense: Vec<Rational>) -> Self {
        assert!(m >= 1);
        CyclotomicElem { m, coeffs: reduce(m, dense) }
    }

    /// `Σ c·ζ^e` over integer exponents of any sign.
    pub fn from_terms(m: u64, terms: &[(i64, Rational)]) -> Self {
        let mut dense = vec![Rational::zero(); m as usize];
        for (e, c) in terms {
            dense[e.rem_euclid(m as i64) as usize] += c;
        }
        Self::from_dense(m, dense)
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image under ℚ(ζ_m) ↪ ℚ(ζ_{m'}), ζ_m ↦ ζ_{m'}^{m'/m}.
    pub fn embed(&self, target: u64) -> Result<Self> {
        if target % self.m != 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot embed conductor {} into {target}",
                self.m
            )));
        }
        if target == self.m {
            return Ok(self.clone());
        }
        let step = (target / self.m) as usize;
        let mut dense = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            dense[j * step] = c.clone();
        }
        Ok(Self::from_dense(target, dense))
    }

    /// Inverse of [`embed`](Self::embed): the preimage in ℚ(ζ_target) if there is one.
    pub fn restrict(&self, target: u64) -> Option<Self> {
        if self.m % target != 0 {
            return None;
        }
        if target == self.m {
            return Some(self.clone());
        }
        let phi_small = ctx(target).phi;
        let columns: Vec<Vec<Rational>> = (0..phi_small)
            .map(|j| Self::zeta_pow(target, j as i64).embed(self.m).unwrap().coeffs)
            .collect();
        let x = linalg::solve_columns(&columns, &self.coeffs)?;
        Some(CyclotomicElem { m: target, coeffs: x })
    }

    fn lift_pair(&self, rhs: &Self) -> (Self, Self) {
        let l = self.m.lcm(&rhs.m);
        (self.embed(l).unwrap(), rhs.embed(l).unwrap())
    }

    /// σ_k : ζ ↦ ζ^k. Fails unless `gcd(k, m) = 1`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let m = self.m as i64;
        let kk = k.rem_euclid(m);
        if kk.gcd(&m) != 1 {
            return Err(Error::NotCoprime { k, m: self.m });
        }
        let mut dense = vec![Rational::zero(); self.m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[((j as i64 * kk) % m) as usize] += c;
            }
        }
        Ok(Self::from_dense(self.m, dense))
    }

    /// Complex conjugation σ_{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit modulo every conductor")
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CyclotomicElem { m: self.m, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.m);
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_m.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(self.m, r.inv()));
        }
        let a = QPoly::new(self.coeffs.clone());
        let (g, s, _) = a.ext_gcd(&cyclotomic_polynomial(self.m));
        debug_assert!(g.is_one());
        Some(Self::from_dense(self.m, s.into_coeffs()))
    }

    /// `(1 - ζ_m^t)^{-1}` for `t ≢ 0 (mod m)`, in closed form:
    /// `(1 - v)^{-1} = -(1/n) Σ_{k<n} k v^k` for any root of unity `v ≠ 1` with `v^n = 1`.
    pub fn inv_one_minus_root(m: u64, t: i64) -> Result<Self> {
        let mi = m as i64;
        if t.rem_euclid(mi) == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_terms(m, &inv_one_minus_root_terms(m, t)))
    }

    /// Numerical value under ζ_m ↦ exp(2πi/m); for display and cross-checks only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let th = 2.0 * std::f64::consts::PI * j as f64 / self.m as f64;
            let v = c.to_f64();
            re += v * th.cos();
            im += v * th.sin();
        }
        (re, im)
    }
}

impl PartialEq for CyclotomicElem {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = self.lift_pair(other);
            a.coeffs == b.coeffs
        }
    }
}

impl<'a> Add<&'a CyclotomicElem> for &'a CyclotomicElem {
    type Output = CyclotomicElem;
    fn add(self, rhs: &'a CyclotomicElem) -> CyclotomicElem {
        if self.m != rhs.m {
            let (a, b) = self.lift_pair(rhs);
            return &a + &b;
        }
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicElem { m: self.m, coeffs }
    }
}

impl<'a> Sub<&'a CyclotomicElem> for &'a CyclotomicElem {
    type Output = CyclotomicElem;
    fn sub(self, rhs: &'a CyclotomicElem) -> CyclotomicElem {
        if self.m != rhs.m {
            let (a, b) = self.lift_pair(rhs);
            return &a - &b;
        }
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CyclotomicElem { m: self.m, coeffs }
    }
}

impl<'a> Mul<&'a CyclotomicElem> for &'a CyclotomicElem {
    type Output = CyclotomicElem;
    fn mul(self, rhs: &'a CyclotomicElem) -> CyclotomicElem {
        if self.m != rhs.m {
            let (a, b) = self.lift_pair(rhs);
            return &a * &b;
        }
        let n = self.coeffs.len();
        let mut dense = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] += &(a * b);
                }
            }
        }
        CyclotomicElem::from_dense(self.m, dense)
    }
}

impl Neg for &CyclotomicElem {
    type Output = CyclotomicElem;
    fn neg(self) -> CyclotomicElem {
        CyclotomicElem { m: self.m, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<CyclotomicElem> for CyclotomicElem {
            type Output = CyclotomicElem;
            fn $f(self, rhs: CyclotomicElem) -> CyclotomicElem { $tr::$f(&self, &rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for CyclotomicElem {
    type Output = CyclotomicElem;
    fn neg(self) -> CyclotomicElem {
        -&self
    }
}

impl Field for CyclotomicElem {
    fn zero_like(&self) -> Self {
        Self::zero(self.m)
    }
    fn one_like(&self) -> Self {
        Self::one(self.m)
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        Self::from_rational(self.m, r.clone())
    }
    fn is_zero(&self) -> bool {
        CyclotomicElem::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        CyclotomicElem::inv(self)
    }
}

impl fmt::Display for CyclotomicElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = QPoly::new(self.coeffs.clone()).to_string_in(&format!("z{}", self.m));
        f.write_str(&body)
    }
}

impl fmt::Debug for CyclotomicElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicElem({self})")
    }
}
