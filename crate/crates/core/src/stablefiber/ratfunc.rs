//! The rational function field ℚ(x, y).
//!
//! Polynomials are stored as polynomials in `x` whose coefficients are
//! polynomials in `y`. Fractions are kept reduced by a primitive
//! pseudo-remainder gcd, with the denominator scaled so that its leading
//! rational coefficient is 1; the representation is therefore canonical.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::exactnum::{Field, QPoly, Rational};

/// `Σ c_i(y)·x^i`, no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    c: Vec<QPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { c: Vec::new() }
    }

    pub fn constant(r: Rational) -> Self {
        Self::from_y_coeffs(vec![QPoly::constant(r)])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::from_y_coeffs(vec![QPoly::zero(), QPoly::one()])
    }

    pub fn y() -> Self {
        Self::from_y_coeffs(vec![QPoly::x()])
    }

    /// From the coefficients of `x^0, x^1, …`.
    pub fn from_y_coeffs(mut c: Vec<QPoly>) -> Self {
        while c.last().is_some_and(QPoly::is_zero) {
            c.pop();
        }
        BiPoly { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn lc_x(&self) -> &QPoly {
        self.c.last().expect("nonzero")
    }

    /// The leading rational coefficient (highest x-degree, then highest y-degree).
    pub fn lead_rational(&self) -> Rational {
        self.lc_x().lc()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let z = QPoly::zero();
        Self::from_y_coeffs(
            (0..n).map(|i| self.c.get(i).unwrap_or(&z).add(rhs.c.get(i).unwrap_or(&z))).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        BiPoly { c: self.c.iter().map(QPoly::neg).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![QPoly::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_y_coeffs(out)
    }

    fn mul_y(&self, p: &QPoly) -> Self {
        Self::from_y_coeffs(self.c.iter().map(|c| c.mul(p)).collect())
    }

    fn shift_x(&self, k: usize) -> Self {
        let mut c = vec![QPoly::zero(); k];
        c.extend(self.c.iter().cloned());
        Self::from_y_coeffs(c)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::from_y_coeffs(self.c.iter().map(|c| c.scale(r)).collect())
    }

    /// gcd of the coefficients in ℚ[y], monic.
    fn content(&self) -> QPoly {
        self.c.iter().fold(QPoly::zero(), |g, c| g.gcd(c))
    }

    fn div_y(&self, p: &QPoly) -> Self {
        Self::from_y_coeffs(self.c.iter().map(|c| c.div_exact(p).expect("content divides")).collect())
    }

    fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.div_y(&self.content())
    }

    /// `lc(b)^k · self mod b` in x, for some `k`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree_x().expect("nonzero divisor");
        let lb = b.lc_x().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree_x() {
            if dr < db {
                break;
            }
            let lr = r.lc_x().clone();
            r = r.mul_y(&lb).sub(&b.mul_y(&lr).shift_x(dr - db));
        }
        r
    }

    /// Exact quotient, if `rhs` divides `self` in ℚ[x, y].
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let db = rhs.degree_x()?;
        let mut q = vec![QPoly::zero(); self.c.len().saturating_sub(db)];
        let mut r = self.clone();
        while let Some(dr) = r.degree_x() {
            if dr < db {
                return None;
            }
            let t = r.lc_x().div_exact(rhs.lc_x())?;
            r = r.sub(&rhs.mul_y(&t).shift_x(dr - db));
            q[dr - db] = t;
        }
        Some(Self::from_y_coeffs(q))
    }

    /// A gcd in ℚ[x, y] (defined up to a rational factor).
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let c = self.content().gcd(&rhs.content());
        let (mut a, mut b) = (self.primitive_part(), rhs.primitive_part());
        if a.degree_x() < b.degree_x() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.degree_x() > Some(0) {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break;
            }
            a = b;
            b = r.primitive_part();
        }
        if b.degree_x() == Some(0) {
            // b is a primitive constant in x, i.e. a unit in ℚ[y]/content
            return Self::from_y_coeffs(vec![c]);
        }
        b.mul_y(&c)
    }

    pub fn eval<F: Field>(&self, x: &F, y: &F) -> F {
        let mut acc = x.zero_like();
        for cy in self.c.iter().rev() {
            let mut v = x.zero_like();
            for r in cy.coeffs().iter().rev() {
                v = v.mul(y).add(&x.from_rational_like(r));
            }
            acc = acc.mul(x).add(&v);
        }
        acc
    }

    fn term_count(&self) -> usize {
        self.c.iter().map(|p| p.coeffs().iter().filter(|r| !r.is_zero()).count()).sum()
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, cy) in self.c.iter().enumerate().rev() {
            for (j, r) in cy.coeffs().iter().enumerate().rev() {
                if r.is_zero() {
                    continue;
                }
                let neg = r.signum() < 0;
                if first {
                    if neg {
                        f.write_str("-")?;
                    }
                } else {
                    f.write_str(if neg { " - " } else { " + " })?;
                }
                first = false;
                let mut vars = Vec::new();
                match i {
                    0 => {}
                    1 => vars.push("x".to_string()),
                    _ => vars.push(format!("x^{i}")),
                }
                match j {
                    0 => {}
                    1 => vars.push("y".to_string()),
                    _ => vars.push(format!("y^{j}")),
                }
                let mag = r.abs();
                let mono = vars.join("*");
                if mono.is_empty() {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    f.write_str(&mono)?;
                } else if mag.is_integer() {
                    write!(f, "{mag}*{mono}")?;
                } else {
                    write!(f, "({mag})*{mono}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// A reduced fraction `num/den` in ℚ(x, y).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl RatFunc {
    /// Panics if `den` is zero.
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: BiPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"));
        let s = den.lead_rational().inv();
        RatFunc { num: num.scale(&s), den: den.scale(&s) }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self::new(p, BiPoly::one())
    }

    pub fn constant(r: Rational) -> Self {
        Self::from_poly(BiPoly::constant(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn x() -> Self {
        Self::from_poly(BiPoly::x())
    }

    pub fn y() -> Self {
        Self::from_poly(BiPoly::y())
    }

    pub fn numer(&self) -> &BiPoly {
        &self.num
    }

    pub fn denom(&self) -> &BiPoly {
        &self.den
    }

    /// Substitutes values for `x` and `y`; `None` if the denominator vanishes there.
    pub fn eval<F: Field>(&self, x: &F, y: &F) -> Option<F> {
        self.num.eval(x, y).div(&self.den.eval(x, y))
    }
}

impl Field for RatFunc {
    fn zero_like(&self) -> Self {
        Self::from_int(0)
    }
    fn one_like(&self) -> Self {
        Self::from_int(1)
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        Self::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num.add(&rhs.num), self.den.clone());
        }
        Self::new(self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)), self.den.mul(&rhs.den))
    }
    fn sub(&self, rhs: &Self) -> Self {
        Field::add(self, &Field::neg(rhs))
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &BiPoly| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den == BiPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> RatFunc {
        RatFunc::x()
    }
    fn y() -> RatFunc {
        RatFunc::y()
    }
    fn k(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    #[test]
    fn reduction_is_canonical() {
        // (x² − y²)/(x − y) = x + y
        let a = Field::sub(&Field::mul(&x(), &x()), &Field::mul(&y(), &y()));
        let b = Field::sub(&x(), &y());
        let q = a.div(&b).unwrap();
        assert_eq!(q, Field::add(&x(), &y()));
        assert_eq!(q.denom(), &BiPoly::one());
        // 2x/(4y) = (1/2)x/y
        let r = Field::mul(&k(2), &x()).div(&Field::mul(&k(4), &y())).unwrap();
        assert_eq!(r.to_string(), "(1/2)*x/y");
    }

    #[test]
    fn field_axioms_on_samples() {
        let a = Field::add(&x(), &k(1)).div(&Field::sub(&y(), &x())).unwrap();
        let b = Field::mul(&y(), &y()).div(&Field::add(&x(), &y())).unwrap();
        let c = Field::sub(&Field::mul(&x(), &y()), &k(3));
        assert_eq!(Field::mul(&a, &Field::add(&b, &c)), Field::add(&Field::mul(&a, &b), &Field::mul(&a, &c)));
        assert_eq!(Field::mul(&a, &a.inv().unwrap()), k(1));
        assert_eq!(Field::add(&Field::add(&a, &b), &c), Field::add(&a, &Field::add(&b, &c)));
        assert!(Field::sub(&a, &a).is_zero());
    }

    #[test]
    fn gcd_with_y_content() {
        // gcd(y·x + y², y·x − y²) ∼ y
        let p = BiPoly::from_y_coeffs(vec![QPoly::from_ints(&[0, 0, 1]), QPoly::from_ints(&[0, 1])]);
        let q = BiPoly::from_y_coeffs(vec![QPoly::from_ints(&[0, 0, -1]), QPoly::from_ints(&[0, 1])]);
        let g = p.gcd(&q);
        assert_eq!(g.degree_x(), Some(0));
        assert_eq!(g.to_string(), "y");
    }

    #[test]
    fn evaluation() {
        let a = Field::add(&x(), &k(1)).div(&Field::sub(&y(), &x())).unwrap();
        let v = a.eval(&Rational::from_int(2), &Rational::from_int(5)).unwrap();
        assert_eq!(v, Rational::new(1, 1));
        assert!(a.eval(&Rational::from_int(2), &Rational::from_int(2)).is_none());
    }
}
