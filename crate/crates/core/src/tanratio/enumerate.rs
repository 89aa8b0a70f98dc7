//! Bounded search for ratios of a given degree.
//!
//! The conjugates of μ are `tan(πkβ)/tan(πkα)` for `k` prime to
//! `lcm(q_α, q_β)`. Rigorous `f64` enclosures of these values give a
//! certified lower bound on the degree: pairwise disjoint enclosures are
//! distinct conjugates. Pairs whose bound exceeds the target are dropped;
//! the rest are decided exactly by [`ratio`].

use num_integer::Integer;
use rayon::prelude::*;

use super::{ratio, RationalAngle, TangentRatio};
use crate::exactnum::interval::{tan_pi_enclosure, F64Interval};
use crate::exactnum::units_mod;
use crate::{Error, Result};

/// Enclosures of `tan(πj/q)` for `0 < j < q`, indexed `[q][j]`.
struct TanTable(Vec<Vec<Option<F64Interval>>>);

impl TanTable {
    fn new(max_den: u64) -> Self {
        TanTable(
            (0..=max_den)
                .into_par_iter()
                .map(|q| (0..q).map(|j| if j == 0 { None } else { tan_pi_enclosure(j, q) }).collect())
                .collect(),
        )
    }

    fn get(&self, p: i64, q: i64) -> F64Interval {
        self.0[q as usize][p.rem_euclid(q) as usize].expect("angle off the poles")
    }
}

/// Number of pairwise disjoint conjugate enclosures found, stopping after `cap + 1`.
fn degree_lower_bound(table: &TanTable, a: &RationalAngle, b: &RationalAngle, cap: usize) -> usize {
    let n = (a.denom() as u64).lcm(&(b.denom() as u64));
    let mut reps: Vec<F64Interval> = Vec::new();
    for k in units_mod(n) {
        let k = k as i64;
        let num = table.get(k * b.numer(), b.denom());
        let den = table.get(k * a.numer(), a.denom());
        let Some(v) = num.div(&den) else { continue };
        if reps.iter().all(|r| r.disjoint(&v)) {
            reps.push(v);
            if reps.len() > cap {
                break;
            }
        }
    }
    reps.len()
}

/// Rigorous enclosures of the conjugates `σ_k(μ)`, one per unit `k` mod `lcm(q_α, q_β)`.
pub fn conjugate_enclosures(alpha: &RationalAngle, beta: &RationalAngle) -> Vec<F64Interval> {
    let n = (alpha.denom() as u64).lcm(&(beta.denom() as u64));
    units_mod(n)
        .into_iter()
        .filter_map(|k| {
            let k = k as u64;
            let num = tan_pi_enclosure(k * beta.numer() as u64 % beta.denom() as u64, beta.denom() as u64)?;
            let den =
                tan_pi_enclosure(k * alpha.numer() as u64 % alpha.denom() as u64, alpha.denom() as u64)?;
            num.div(&den)
        })
        .collect()
}

/// All ratios of degree `degree_target` with both denominators at most
/// `max_denominator`, sorted by `(α, β)`.
pub fn enumerate_ratios(degree_target: usize, max_denominator: u64) -> Result<Vec<TangentRatio>> {
    if degree_target == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    if max_denominator < 3 {
        return Err(Error::InvalidArgument(format!(
            "max denominator {max_denominator} admits no angle in (0, 1/2); need at least 3"
        )));
    }
    let angles = RationalAngle::all_up_to(max_denominator);
    let table = TanTable::new(max_denominator);
    let pairs: Vec<(usize, usize)> = (0..angles.len())
        .flat_map(|i| (i + 1..angles.len()).map(move |j| (i, j)))
        .collect();
    let mut found = pairs
        .par_iter()
        .filter(|&&(i, j)| degree_lower_bound(&table, &angles[i], &angles[j], degree_target) <= degree_target)
        .map(|&(i, j)| ratio(&angles[i], &angles[j]))
        .filter(|r| r.as_ref().map_or(true, |t| t.degree() == degree_target))
        .collect::<Result<Vec<_>>>()?;
    found.sort_by(|x, y| (x.alpha(), x.beta()).cmp(&(y.alpha(), y.beta())));
    Ok(found)
}
