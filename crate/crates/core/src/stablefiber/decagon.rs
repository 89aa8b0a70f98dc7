//! The decagon: nodes `(x, 1/x)`, `(y, 1/y)` with `x`, `y` tenth roots of unity.
//!
//! The maps `z ↦ z^e` and `z ↦ (z + 1)^e` (`e = 5`) descend to the nodal curve
//! only if they agree on both points of each node. That pins `x`, `y` down to
//! primitive fifth roots; a periodic point `r` then needs `x − r` and `y − r`
//! both on the ten rays through the tenth roots of unity.

use std::cmp::Ordering;

use serde::Serialize;

use crate::exactnum::{compare_real, sign_of_real, CyclotomicElem, Field, Rational};
use crate::{Error, Result};

/// The exponent is an input, not derived here: it is the torsion order of the
/// relevant points on `y² = x⁵ − 1`.
pub const DECAGON_TORSION_ORDER: u32 = 5;

/// `p^e = q^e` and `(p + 1)^e = (q + 1)^e`.
pub fn node_conditions(p: &CyclotomicElem, q: &CyclotomicElem, e: u32) -> (bool, bool) {
    let one = p.one_like();
    (p.pow(e) == q.pow(e), (p + &one).pow(e) == (q + &one).pow(e))
}

fn root(j: i64) -> CyclotomicElem {
    CyclotomicElem::zeta_pow(10, j.rem_euclid(10))
}

/// Exponents `j` of `ζ₁₀^j`, excluding ±1.
fn candidates() -> Vec<i64> {
    (1..10).filter(|&j| j != 5).collect()
}

fn accepted(j: i64, e: u32) -> bool {
    let (a, b) = node_conditions(&root(j), &root(-j), e);
    a && b
}

/// Accepted ordered pairs `(j, k)` for `(x, y) = (ζ₁₀^j, ζ₁₀^k)`, grouped into
/// classes under `x ↦ 1/x`, `y ↦ 1/y` and swapping `x`, `y`.
///
/// Pairs with `y ∈ {x, 1/x}` are skipped: they would make the nodes collide.
pub fn decagon_solution_classes(e: u32) -> Vec<Vec<(i64, i64)>> {
    let ok: Vec<i64> = candidates().into_iter().filter(|&j| accepted(j, e)).collect();
    let mut pairs: Vec<(i64, i64)> = Vec::new();
    for &j in &ok {
        for &k in &ok {
            if k != j && k != (10 - j) % 10 {
                pairs.push((j, k));
            }
        }
    }
    let orbit = |(j, k): (i64, i64)| {
        let inv = |t: i64| (10 - t) % 10;
        let mut o = vec![];
        for (a, b) in [(j, k), (k, j)] {
            for (a, b) in [(a, b), (inv(a), b), (a, inv(b)), (inv(a), inv(b))] {
                if !o.contains(&(a, b)) {
                    o.push((a, b));
                }
            }
        }
        o.sort();
        o
    };
    let mut classes: Vec<Vec<(i64, i64)>> = Vec::new();
    for p in pairs {
        if !classes.iter().any(|c| c.contains(&p)) {
            classes.push(orbit(p).into_iter().filter(|q| accepted(q.0, e) && accepted(q.1, e)).collect());
        }
    }
    classes
}

/// The accepted assignments form exactly the class of `x = ζ₅`, `y = ζ₅²`.
pub fn decagon_verify() -> bool {
    let classes = decagon_solution_classes(DECAGON_TORSION_ORDER);
    classes.len() == 1 && classes[0].contains(&(2, 4)) && classes[0].len() == 8
}

#[derive(Clone, Debug, Serialize)]
pub struct RayHit {
    /// `x − r` is a positive multiple of `ζ₁₀^k`.
    pub k: u32,
    pub r: CyclotomicElem,
    /// When `r` is rational.
    pub exact: Option<Rational>,
    pub approx: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecagonRays {
    pub r_x: Vec<RayHit>,
    pub r_y: Vec<RayHit>,
    pub intersection: Vec<RayHit>,
    /// Every common `r` is −1 or 0.
    pub no_new_points: bool,
}

fn re_im(z: &CyclotomicElem) -> Result<(CyclotomicElem, CyclotomicElem)> {
    let i = CyclotomicElem::imag_unit(4)?;
    let half = Rational::new(1, 2);
    let re = (z + &z.conj()).scale(&half);
    let im = (&(z - &z.conj()) * &i.neg()).scale(&half);
    Ok((re, im))
}

/// Real `r` with `z − r` on one of the ten rays.
pub fn ray_solutions(z: &CyclotomicElem) -> Result<Vec<RayHit>> {
    let (re, im) = re_im(z)?;
    let im_sign = sign_of_real(&im)?;
    if im_sign == 0 {
        return Err(Error::InvalidArgument(format!("{z} is real")));
    }
    let mut hits = Vec::new();
    for k in 0..10u32 {
        let (c, s) = re_im(&root(k as i64))?;
        // k = 0, 5: the ray is the real axis, which z − r never meets
        if sign_of_real(&s)? != im_sign {
            continue;
        }
        let r = &re - &(&im * &c.div(&s).ok_or(Error::DivisionByZero)?);
        let r = r.restrict(20).unwrap_or(r);
        let t = im.div(&s).ok_or(Error::DivisionByZero)?;
        let along = &root(k as i64) * &t;
        if (z - &r) != along || sign_of_real(&t)? <= 0 {
            return Err(Error::Inconsistent(format!("ray {k} for {z}")));
        }
        hits.push(RayHit { k, exact: r.as_rational(), approx: r.to_complex_f64().0, r });
    }
    hits.sort_by(|a, b| compare_real(&a.r, &b.r).unwrap_or(Ordering::Equal));
    Ok(hits)
}

/// `R_x ∩ R_y` for `x = ζ₅`, `y = ζ₅²`.
pub fn decagon_exclude_r() -> Result<DecagonRays> {
    let r_x = ray_solutions(&root(2))?;
    let r_y = ray_solutions(&root(4))?;
    let intersection: Vec<RayHit> =
        r_x.iter().filter(|h| r_y.iter().any(|g| g.r == h.r)).cloned().collect();
    let known = [Rational::from(-1), Rational::from(0)];
    let no_new_points = intersection.iter().all(|h| h.exact.as_ref().is_some_and(|q| known.contains(q)));
    Ok(DecagonRays { r_x, r_y, intersection, no_new_points })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifth_roots_pass_tenth_roots_fail() {
        assert_eq!(node_conditions(&root(2), &root(-2), 5), (true, true));
        assert_eq!(node_conditions(&root(1), &root(-1), 5), (true, false));
    }

    #[test]
    fn one_class() {
        assert!(decagon_verify());
        let c = &decagon_solution_classes(5)[0];
        assert!(c.contains(&(8, 6)));
        assert!(c.contains(&(4, 2)));
    }

    #[test]
    fn rays() {
        let d = decagon_exclude_r().unwrap();
        let approx = |v: &[RayHit]| v.iter().map(|h| h.approx).collect::<Vec<_>>();
        let close = |a: Vec<f64>, b: &[f64]| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(close(approx(&d.r_x), &[-1.0, 0.0, phi - 1.0, phi]));
        assert!(close(approx(&d.r_y), &[-phi, -1.0, 1.0 - phi, 0.0]));
        let exact: Vec<_> = d.intersection.iter().map(|h| h.exact.clone().unwrap()).collect();
        assert_eq!(exact, vec![Rational::from(-1), Rational::from(0)]);
        assert!(d.no_new_points);
        assert!(d.r_y.iter().all(|h| h.approx <= 1e-12));
    }
}
