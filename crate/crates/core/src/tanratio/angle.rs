use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;
use crate::{Error, Result};

/// A rational `v` with `0 < v < 1/2`, standing for the angle `v·π`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Rational", into = "Rational")]
pub struct RationalAngle {
    p: i64,
    q: i64,
}

impl RationalAngle {
    pub fn new(value: Rational) -> Result<Self> {
        let half = Rational::new(1, 2);
        if value.signum() <= 0 || value >= half {
            return Err(Error::InvalidAngle(value));
        }
        let (p, q) = value.as_i64_pair().ok_or_else(|| Error::InvalidAngle(value.clone()))?;
        Ok(RationalAngle { p, q })
    }

    /// `p/q`, not necessarily in lowest terms.
    pub fn from_frac(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::DivisionByZero);
        }
        Self::new(Rational::new(p, q))
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.p, self.q)
    }

    pub fn numer(&self) -> i64 {
        self.p
    }

    pub fn denom(&self) -> i64 {
        self.q
    }

    /// All angles with denominator at most `max_den`, in increasing order.
    pub fn all_up_to(max_den: u64) -> Vec<Self> {
        let mut out = Vec::new();
        for q in 3..=max_den as i64 {
            for p in 1..=(q - 1) / 2 {
                if p.gcd(&q) == 1 && 2 * p < q {
                    out.push(RationalAngle { p, q });
                }
            }
        }
        out.sort();
        out
    }
}

// Stored in lowest terms with q > 0, so comparing by value is a cross-multiplication.
impl Ord for RationalAngle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.p as i128 * other.q as i128).cmp(&(other.p as i128 * self.q as i128))
    }
}

impl PartialOrd for RationalAngle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Rational> for RationalAngle {
    type Error = Error;

    fn try_from(r: Rational) -> Result<Self> {
        Self::new(r)
    }
}

impl From<RationalAngle> for Rational {
    fn from(a: RationalAngle) -> Rational {
        a.value()
    }
}

impl FromStr for RationalAngle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let r: Rational = s.parse().map_err(|e| Error::InvalidArgument(format!("{e}")))?;
        Self::new(r)
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl fmt::Debug for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}
