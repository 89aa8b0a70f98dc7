use num_integer::Integer;

use super::{cot_in, sin_in, tan_conductor, tan_in, RationalAngle};
use crate::exactnum::Rational;
use crate::{Error, Result};

/// Checks `tan(π(x+y)/2) / tan(π(x−y)/2) = (s + 1)/(s − 1)` with
/// `s = sin(πx)/sin(πy)`, exactly.
///
/// Both sides are cleared of denominators: with `S = sin`, the identity reads
/// `tan(u)·cot(v)·(S(x) − S(y)) = S(x) + S(y)`, which needs no division
/// beyond the closed-form tangent and cotangent.
pub fn check_addition_formula(x: &RationalAngle, y: &RationalAngle) -> Result<bool> {
    if x == y {
        return Err(Error::DivisionByZero);
    }
    if x < y {
        return Err(Error::InvalidArgument(format!("need x > y, got x = {x}, y = {y}")));
    }
    let (xv, yv) = (x.value(), y.value());
    let half = Rational::new(1, 2);
    let u = &(&xv + &yv) * &half;
    let v = &(&xv - &yv) * &half;
    let frac = |r: &Rational| r.as_i64_pair().expect("small angle");
    let (up, uq) = frac(&u);
    let (vp, vq) = frac(&v);
    let m = [x.denom(), y.denom(), uq, vq]
        .iter()
        .fold(4u64, |acc, &q| acc.lcm(&tan_conductor(q as u64)));

    let sx = sin_in(x.numer(), x.denom(), m)?;
    let sy = sin_in(y.numer(), y.denom(), m)?;
    let lhs = &(&tan_in(up, uq, m)? * &cot_in(vp, vq, m)?) * &(&sx - &sy);
    Ok(lhs == &sx + &sy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(p: i64, q: i64) -> RationalAngle {
        RationalAngle::from_frac(p, q).unwrap()
    }

    #[test]
    fn examples() {
        assert!(check_addition_formula(&a(1, 3), &a(1, 6)).unwrap());
        assert!(check_addition_formula(&a(2, 5), &a(1, 5)).unwrap());
        assert!(check_addition_formula(&a(1, 4), &a(1, 12)).unwrap());
    }

    #[test]
    fn rejects_bad_order() {
        assert!(matches!(check_addition_formula(&a(1, 5), &a(1, 5)), Err(Error::DivisionByZero)));
        assert!(check_addition_formula(&a(1, 6), &a(1, 3)).is_err());
    }
}
