use num_integer::Integer;
use serde::Serialize;

use crate::exactnum::{CyclotomicElem, Field, QPoly};
use crate::tanratio::tan_pi;
use crate::{Error, Result};

/// Solutions of `(x − 1)^N = (−x − 1)^N`.
#[derive(Clone, Debug, Serialize)]
pub struct TorsionSolution {
    pub n: u64,
    /// In ℚ(ζ_m), `m = lcm(4, N)`.
    pub solutions: Vec<CyclotomicElem>,
    /// `solutions[i] = i·tan(π·A/N)` with `A = tangent_indices[i]`.
    pub tangent_indices: Vec<i64>,
}

impl TorsionSolution {
    pub fn nonzero(&self) -> impl Iterator<Item = (&CyclotomicElem, i64)> {
        self.solutions.iter().zip(self.tangent_indices.iter().copied()).filter(|(_, a)| *a != 0)
    }

    /// `(x − 1)^N − (−x − 1)^N` expanded over ℚ.
    pub fn defining_polynomial(&self) -> QPoly {
        let x = QPoly::x();
        let one = QPoly::one();
        let n = self.n as u32;
        x.sub(&one).pow(n).sub(&x.neg().sub(&one).pow(n))
    }

    /// Every solution is a root of the defining polynomial, the solutions are
    /// distinct, and there are as many as its degree.
    pub fn matches_expansion(&self) -> bool {
        let p = self.defining_polynomial();
        let Some(deg) = p.degree() else { return false };
        let distinct = self.solutions.iter().enumerate().all(|(i, a)| !self.solutions[..i].contains(a));
        distinct && self.solutions.len() == deg && self.solutions.iter().all(|s| eval_poly(&p, s).is_zero())
    }
}

fn eval_poly(p: &QPoly, x: &CyclotomicElem) -> CyclotomicElem {
    p.coeffs().iter().rev().fold(x.zero_like(), |acc, c| {
        let c = CyclotomicElem::from_rational(x.conductor(), c.clone());
        &(&acc * x) + &c
    })
}

/// All `x` with `(x − 1)^N = (−x − 1)^N`.
///
/// `x = −1` is never a solution, so the equation says `u = (x − 1)/(−x − 1)`
/// is an N-th root of unity, i.e. `x = (1 − u)/(1 + u)` with `u ≠ −1`. Each
/// solution is then matched exactly against `i·tan(πA/N)`, `−N/2 < A < N/2`.
pub fn solve_torsion_pairs(n: u64) -> Result<TorsionSolution> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("torsion order must be at least 2, got {n}")));
    }
    let m = 4u64.lcm(&n);
    let big_n = n as i64;
    let i = CyclotomicElem::imag_unit(m)?;
    let one = CyclotomicElem::one(m);
    let mut solutions = Vec::new();
    let mut tangent_indices = Vec::new();
    for j in 0..big_n {
        let u = CyclotomicElem::zeta_pow(m, j * (m / n) as i64);
        let Some(x) = one.sub(&u).div(&one.add(&u)) else { continue };
        if (&x - &one).pow(n as u32) != (&x.neg() - &one).pow(n as u32) {
            return Err(Error::Inconsistent(format!("x = {x} fails the equation for N = {n}")));
        }
        // u = ζ_N^j gives x = −i·tan(πj/N)
        let mut a = (-j).rem_euclid(big_n);
        if 2 * a > big_n {
            a -= big_n;
        }
        let expected = &i * &tan_pi(a, big_n)?;
        if x != expected {
            return Err(Error::Inconsistent(format!("x = {x} is not i·tan({a}π/{n})")));
        }
        solutions.push(x);
        tangent_indices.push(a);
    }
    let mut order: Vec<usize> = (0..solutions.len()).collect();
    order.sort_by_key(|&k| tangent_indices[k]);
    Ok(TorsionSolution {
        n,
        solutions: order.iter().map(|&k| solutions[k].clone()).collect(),
        tangent_indices: order.iter().map(|&k| tangent_indices[k]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let s = solve_torsion_pairs(2).unwrap();
        assert_eq!(s.tangent_indices, vec![0]);
        assert!(s.solutions[0].is_zero());

        let s = solve_torsion_pairs(4).unwrap();
        assert_eq!(s.tangent_indices, vec![-1, 0, 1]);
        let i = CyclotomicElem::imag_unit(4).unwrap();
        assert_eq!(s.solutions, vec![i.neg(), CyclotomicElem::zero(4), i]);

        let s = solve_torsion_pairs(5).unwrap();
        assert_eq!(s.tangent_indices, vec![-2, -1, 0, 1, 2]);
        assert_eq!(s.nonzero().count(), 4);
    }

    #[test]
    fn counts_and_expansion() {
        for n in 2..=12u64 {
            let s = solve_torsion_pairs(n).unwrap();
            let expected = if n % 2 == 1 { n } else { n - 1 };
            assert_eq!(s.solutions.len() as u64, expected, "N = {n}");
            assert!(s.matches_expansion(), "N = {n}");
            for x in &s.solutions {
                assert_eq!(x.conj(), x.neg());
            }
        }
    }

    #[test]
    fn rejects_small_order() {
        assert!(solve_torsion_pairs(1).is_err());
    }
}
