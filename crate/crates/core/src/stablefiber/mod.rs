//! Nodal limit curves and their limit differentials.
//!
//! A [`NodalConfig`] is a projective line with pairs of points glued to
//! nodes, a few marked points, and prescribed vanishing orders. A limit
//! differential `Σ cᵢ/(z − pᵢ) dz` has simple poles at the node points; the
//! space of such differentials satisfying
//!
//! - total residue zero (no pole at ∞),
//! - `Res(p) + Res(q) = 0` at every node `(p, q)`,
//! - the prescribed zero orders,
//!
//! is the kernel of an exact linear system, computed by
//! [`differential_space`] over any [`Field`](crate::exactnum::Field): a
//! cyclotomic field for concrete points, or ℚ(x, y) for symbolic ones.
//!
//! The node condition is the anti-symmetric one, `Res(p) = −Res(q)`; this is
//! what the explicit differentials below satisfy (their residues at `x` and
//! `−x` are `y` and `−y`). Read as an equality of residues it would hold
//! only up to the orientation of the branches at the node.

pub mod decagon;
pub mod ratfunc;
mod torsion;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::exactnum::{linalg, CyclotomicElem, Field};
use crate::{Error, Result};

pub use decagon::{
    decagon_exclude_r, decagon_solution_classes, decagon_verify, DecagonRays, DECAGON_TORSION_ORDER,
};
pub use ratfunc::{BiPoly, RatFunc};
pub use torsion::{solve_torsion_pairs, TorsionSolution};

/// Recorded in reports next to every residue check.
pub const NODE_SIGN_CONVENTION: &str = "Res(p) + Res(q) = 0 at each node (p, q)";

/// Field elements that can also be shown and serialized.
pub trait Scalar: Field + fmt::Display + Serialize {}

impl<T: Field + fmt::Display + Serialize> Scalar for T {}

#[derive(Clone, Debug, PartialEq)]
pub enum Point<F> {
    Finite(F),
    Infinity,
}

impl<F: fmt::Display> fmt::Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(z) => write!(f, "{z}"),
            Point::Infinity => f.write_str("infinity"),
        }
    }
}

impl<F: Serialize> Serialize for Point<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Point::Finite(z) => z.serialize(s),
            Point::Infinity => s.serialize_str("infinity"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Involution {
    /// z ↦ −z
    Negation,
    /// z ↦ 1/z
    Inversion,
}

impl Involution {
    fn apply<F: Field>(self, p: &Point<F>, template: &F) -> Point<F> {
        match (self, p) {
            (Involution::Negation, Point::Finite(z)) => Point::Finite(z.neg()),
            (Involution::Negation, Point::Infinity) => Point::Infinity,
            (Involution::Inversion, Point::Finite(z)) => match z.inv() {
                Some(w) => Point::Finite(w),
                None => Point::Infinity,
            },
            (Involution::Inversion, Point::Infinity) => Point::Finite(template.zero_like()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MarkedPoint<F> {
    pub label: String,
    pub point: Point<F>,
    /// Required vanishing order of the differential; 0 for a plain marking.
    pub zero_order: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct NodalConfig<F> {
    nodes: Vec<(F, F)>,
    marked: Vec<MarkedPoint<F>>,
    involution: Option<Involution>,
}

impl<F: Scalar> NodalConfig<F> {
    pub fn new(
        nodes: Vec<(F, F)>,
        marked: Vec<MarkedPoint<F>>,
        involution: Option<Involution>,
    ) -> Result<Self> {
        let c = NodalConfig { nodes, marked, involution };
        c.validate()?;
        Ok(c)
    }

    pub fn nodes(&self) -> &[(F, F)] {
        &self.nodes
    }

    pub fn marked(&self) -> &[MarkedPoint<F>] {
        &self.marked
    }

    pub fn involution(&self) -> Option<Involution> {
        self.involution
    }

    /// Node points in order `p₁, q₁, p₂, q₂, …`.
    pub fn poles(&self) -> Vec<F> {
        self.nodes.iter().flat_map(|(p, q)| [p.clone(), q.clone()]).collect()
    }

    /// Adds (or raises) a prescribed zero.
    pub fn with_zero(mut self, label: &str, point: Point<F>, order: u32) -> Result<Self> {
        match self.marked.iter_mut().find(|m| m.point == point) {
            Some(m) => m.zero_order = m.zero_order.max(order),
            None => self.marked.push(MarkedPoint { label: label.into(), point, zero_order: order }),
        }
        self.validate()?;
        Ok(self)
    }

    fn template(&self) -> Result<&F> {
        self.nodes
            .first()
            .map(|(p, _)| p)
            .ok_or_else(|| Error::DegenerateConfig("no nodes".into()))
    }

    fn validate(&self) -> Result<()> {
        let template = self.template()?;
        let mut seen: Vec<Point<F>> = Vec::new();
        let all = self
            .poles()
            .into_iter()
            .map(|p| (Point::Finite(p), true))
            .chain(self.marked.iter().map(|m| (m.point.clone(), m.zero_order == 0)));
        for (p, plain) in all {
            if seen.contains(&p) {
                let what = if plain { "repeated point" } else { "prescribed zero at a pole or marked point" };
                return Err(Error::DegenerateConfig(format!("{what}: {p}")));
            }
            seen.push(p);
        }
        if let Some(inv) = self.involution {
            let pair_eq = |(a, b): &(F, F), (c, d): &(F, F)| (a == c && b == d) || (a == d && b == c);
            for (p, q) in &self.nodes {
                let img = match (inv.apply(&Point::Finite(p.clone()), template), inv.apply(&Point::Finite(q.clone()), template)) {
                    (Point::Finite(a), Point::Finite(b)) => (a, b),
                    _ => return Err(Error::DegenerateConfig(format!("involution sends node ({p}, {q}) to ∞"))),
                };
                if !self.nodes.iter().any(|n| pair_eq(n, &img)) {
                    return Err(Error::DegenerateConfig(format!(
                        "involution {inv:?} does not preserve node ({p}, {q})"
                    )));
                }
            }
            for m in self.marked.iter().filter(|m| m.zero_order > 0) {
                let img = inv.apply(&m.point, template);
                if !self.marked.iter().any(|n| n.point == img && n.zero_order == m.zero_order) {
                    return Err(Error::DegenerateConfig(format!(
                        "involution {inv:?} does not preserve the zero at {}",
                        m.point
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Term<F> {
    pub residue: F,
    pub pole: F,
}

/// `Σ residueᵢ/(z − poleᵢ) dz`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitDifferential<F> {
    pub terms: Vec<Term<F>>,
}

impl<F: Scalar> LimitDifferential<F> {
    pub fn new(terms: Vec<(F, F)>) -> Self {
        LimitDifferential {
            terms: terms.into_iter().map(|(residue, pole)| Term { residue, pole }).collect(),
        }
    }

    pub fn residue_at(&self, p: &F) -> Option<&F> {
        self.terms.iter().find(|t| &t.pole == p).map(|t| &t.residue)
    }

    pub fn scale(&self, s: &F) -> Self {
        LimitDifferential {
            terms: self.terms.iter().map(|t| Term { residue: t.residue.mul(s), pole: t.pole.clone() }).collect(),
        }
    }

    /// Rescales so that the residue at `p` becomes `target`.
    pub fn normalized(&self, p: &F, target: &F) -> Result<Self> {
        let r = self.residue_at(p).ok_or_else(|| Error::InvalidArgument(format!("no pole at {p}")))?;
        let s = target.div(r).ok_or(Error::DivisionByZero)?;
        Ok(self.scale(&s))
    }

    /// The j-th Laurent coefficient at `point`, up to sign: `Σ c·p^j` at ∞ (in
    /// `w = 1/z`, the coefficient of `w^{j−1} dw`), `Σ c/(a − p)^{j+1}` at a
    /// finite `a`. `None` if `a` is a pole.
    fn expansion_row(point: &Point<F>, poles: &[F], j: u32) -> Option<Vec<F>> {
        poles
            .iter()
            .map(|p| match point {
                Point::Infinity => Some(p.pow(j)),
                Point::Finite(a) => a.sub(p).inv().map(|d| d.pow(j + 1)),
            })
            .collect()
    }

    fn coefficient(&self, point: &Point<F>, j: u32) -> Option<F> {
        let poles: Vec<F> = self.terms.iter().map(|t| t.pole.clone()).collect();
        let row = Self::expansion_row(point, &poles, j)?;
        let zero = self.terms.first()?.residue.zero_like();
        Some(row.iter().zip(&self.terms).fold(zero, |acc, (r, t)| acc.add(&r.mul(&t.residue))))
    }

    /// Vanishing order at `point` (negative for a pole), capped at `cap`.
    pub fn order_at(&self, point: &Point<F>, cap: u32) -> i64 {
        let offset: i64 = if matches!(point, Point::Infinity) { -1 } else { 0 };
        if let Point::Finite(a) = point {
            if self.residue_at(a).is_some_and(|r| !r.is_zero()) {
                return -1;
            }
        }
        for j in 0..=cap + 1 {
            match self.coefficient(point, j) {
                Some(c) if c.is_zero() => continue,
                _ => return j as i64 + offset,
            }
        }
        cap as i64 + 1
    }

    pub fn total_residue(&self) -> Option<F> {
        let first = self.terms.first()?;
        Some(self.terms.iter().fold(first.residue.zero_like(), |acc, t| acc.add(&t.residue)))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DifferentialSpace<F> {
    pub dimension: usize,
    pub basis: Vec<LimitDifferential<F>>,
}

/// The space of limit differentials on `config`.
pub fn differential_space<F: Scalar>(config: &NodalConfig<F>) -> Result<DifferentialSpace<F>> {
    let poles = config.poles();
    let template = config.template()?;
    let n = poles.len();
    let mut rows: Vec<Vec<F>> = Vec::new();
    rows.push(vec![template.one_like(); n]);
    for i in 0..config.nodes.len() {
        let mut r = vec![template.zero_like(); n];
        r[2 * i] = template.one_like();
        r[2 * i + 1] = template.one_like();
        rows.push(r);
    }
    for m in &config.marked {
        let js = match m.point {
            // regularity (j = 0) is already imposed
            Point::Infinity => 1..=m.zero_order,
            Point::Finite(_) => 0..=m.zero_order.saturating_sub(1),
        };
        if m.zero_order == 0 {
            continue;
        }
        for j in js {
            let row = LimitDifferential::expansion_row(&m.point, &poles, j).ok_or_else(|| {
                Error::DegenerateConfig(format!("prescribed zero at the pole {}", m.point))
            })?;
            rows.push(row);
        }
    }
    let basis: Vec<LimitDifferential<F>> = linalg::kernel(&rows, n, template)
        .into_iter()
        .map(|v| LimitDifferential::new(v.into_iter().zip(poles.iter().cloned()).collect()))
        .collect();
    Ok(DifferentialSpace { dimension: basis.len(), basis })
}

/// Node matching (anti-symmetric) and total residue zero, exactly.
///
/// The poles of `omega` must be exactly the node points; otherwise `false`.
pub fn verify_residue_constraints<F: Scalar>(omega: &LimitDifferential<F>, config: &NodalConfig<F>) -> bool {
    let poles = config.poles();
    if omega.terms.len() != poles.len() || !poles.iter().all(|p| omega.residue_at(p).is_some()) {
        return false;
    }
    let matched = config.nodes.iter().all(|(p, q)| {
        let (a, b) = (omega.residue_at(p).unwrap(), omega.residue_at(q).unwrap());
        a.add(b).is_zero()
    });
    matched && omega.total_residue().is_some_and(|t| t.is_zero())
}

/// Every prescribed zero order is met.
pub fn verify_zero_orders<F: Scalar>(omega: &LimitDifferential<F>, config: &NodalConfig<F>) -> bool {
    config
        .marked
        .iter()
        .filter(|m| m.zero_order > 0)
        .all(|m| omega.order_at(&m.point, m.zero_order) >= m.zero_order as i64)
}

/// `Res(p)/Res(q)`.
pub fn residue_ratio<F: Scalar>(omega: &LimitDifferential<F>, p: &F, q: &F) -> Result<F> {
    let missing = |z: &F| Error::InvalidArgument(format!("no pole at {z}"));
    let a = omega.residue_at(p).ok_or_else(|| missing(p))?;
    let b = omega.residue_at(q).ok_or_else(|| missing(q))?;
    a.div(b).ok_or(Error::DivisionByZero)
}

/// Residue at the first point of the first node over the residue at the
/// second point of the second node: `Res(x)/Res(−y)` for nodes `(x, −x)`, `(y, −y)`.
pub fn height_ratio<F: Scalar>(omega: &LimitDifferential<F>, config: &NodalConfig<F>) -> Result<F> {
    if config.nodes.len() < 2 {
        return Err(Error::DegenerateConfig("height ratio needs two nodes".into()));
    }
    residue_ratio(omega, &config.nodes[0].0, &config.nodes[1].1)
}

fn marked<F>(label: &str, point: Point<F>, zero_order: u32) -> MarkedPoint<F> {
    MarkedPoint { label: label.into(), point, zero_order }
}

/// Nodes `(x, −x)`, `(y, −y)`, a double zero at ∞, marked 0 and 1, symmetric under `z ↦ −z`.
pub fn stratum2_config<F: Scalar>(x: F, y: F) -> Result<NodalConfig<F>> {
    let zero = x.zero_like();
    let one = x.one_like();
    NodalConfig::new(
        vec![(x.clone(), x.neg()), (y.clone(), y.neg())],
        vec![
            marked("W1 (zero of the differential)", Point::Infinity, 2),
            marked("W2", Point::Finite(zero), 0),
            marked("P (periodic point)", Point::Finite(one), 0),
        ],
        Some(Involution::Negation),
    )
}

pub fn stratum2_symbolic() -> NodalConfig<RatFunc> {
    stratum2_config(RatFunc::x(), RatFunc::y()).expect("x, −x, y, −y, 0, 1, ∞ are distinct in ℚ(x, y)")
}

/// `(y/(z−x) − y/(z+x) − x/(z−y) + x/(z+y)) dz`
pub fn stratum2_reference<F: Scalar>(x: &F, y: &F) -> LimitDifferential<F> {
    LimitDifferential::new(vec![
        (y.clone(), x.clone()),
        (y.neg(), x.neg()),
        (x.neg(), y.clone()),
        (x.clone(), y.neg()),
    ])
}

/// Nodes `(x, 1/x)`, `(y, 1/y)`, simple zeros at 0 and ∞, marked ±1, symmetric under `z ↦ 1/z`.
pub fn decagon_config<F: Scalar>(x: F, y: F) -> Result<NodalConfig<F>> {
    let inv = |z: &F| z.inv().ok_or(Error::DivisionByZero);
    let zero = x.zero_like();
    let one = x.one_like();
    NodalConfig::new(
        vec![(x.clone(), inv(&x)?), (y.clone(), inv(&y)?)],
        vec![
            marked("Z1", Point::Finite(zero), 1),
            marked("Z2", Point::Infinity, 1),
            marked("W1", Point::Finite(one.neg()), 0),
            marked("W2", Point::Finite(one), 0),
        ],
        Some(Involution::Inversion),
    )
}

/// `x = ζ₅`, `y = ζ₅²` in ℚ(ζ₁₀).
pub fn decagon_points() -> (CyclotomicElem, CyclotomicElem) {
    (CyclotomicElem::zeta_pow(10, 2), CyclotomicElem::zeta_pow(10, 4))
}

/// `((y − 1/y)/(z − x) − (y − 1/y)/(z − 1/x) + (1/x − x)/(z − y) − (1/x − x)/(z − 1/y)) dz`
pub fn decagon_reference<F: Scalar>(x: &F, y: &F) -> Result<LimitDifferential<F>> {
    let xi = x.inv().ok_or(Error::DivisionByZero)?;
    let yi = y.inv().ok_or(Error::DivisionByZero)?;
    let a = y.sub(&yi);
    let b = xi.sub(x);
    Ok(LimitDifferential::new(vec![
        (a.clone(), x.clone()),
        (a.neg(), xi),
        (b.clone(), y.clone()),
        (b.neg(), yi),
    ]))
}

/// `true` if `a = s·b` for some scalar `s` (same poles, in the same order).
pub fn proportional<F: Scalar>(a: &LimitDifferential<F>, b: &LimitDifferential<F>) -> bool {
    if a.terms.len() != b.terms.len() || a.terms.iter().zip(&b.terms).any(|(s, t)| s.pole != t.pole) {
        return false;
    }
    let Some(k) = a.terms.iter().position(|t| !t.residue.is_zero()) else {
        return b.terms.iter().all(|t| t.residue.is_zero());
    };
    let Some(s) = b.terms[k].residue.div(&a.terms[k].residue) else { return false };
    a.scale(&s) == *b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::minimal_polynomial;
    use crate::tanratio::tan_pi;

    fn x() -> RatFunc {
        RatFunc::x()
    }
    fn y() -> RatFunc {
        RatFunc::y()
    }

    #[test]
    fn symbolic_stratum2_is_unique() {
        let c = stratum2_symbolic();
        let s = differential_space(&c).unwrap();
        assert_eq!(s.dimension, 1);
        let w = s.basis[0].normalized(&x(), &y()).unwrap();
        assert_eq!(w, stratum2_reference(&x(), &y()));
        assert!(verify_residue_constraints(&w, &c));
        assert!(verify_zero_orders(&w, &c));
        assert_eq!(w.order_at(&Point::Infinity, 5), 2);
        assert_eq!(height_ratio(&w, &c).unwrap(), y().div(&x()).unwrap());
    }

    #[test]
    fn decagon_is_unique() {
        let (px, py) = decagon_points();
        let c = decagon_config(px.clone(), py.clone()).unwrap();
        let s = differential_space(&c).unwrap();
        assert_eq!(s.dimension, 1);
        let reference = decagon_reference(&px, &py).unwrap();
        assert!(proportional(&s.basis[0], &reference));
        assert!(verify_residue_constraints(&reference, &c));
        assert_eq!(reference.order_at(&Point::Finite(px.zero_like()), 3), 1);
        assert_eq!(reference.order_at(&Point::Infinity, 3), 1);
    }

    #[test]
    fn overconstrained() {
        let c = NodalConfig::new(
            vec![(x(), x().neg()), (y(), y().neg())],
            vec![
                marked("a", Point::Infinity, 1),
                marked("b", Point::Finite(RatFunc::from_int(1)), 1),
                marked("c", Point::Finite(RatFunc::from_int(2)), 1),
            ],
            None,
        )
        .unwrap();
        assert_eq!(differential_space(&c).unwrap().dimension, 0);
        // the involution rejects a zero at 1 without one at −1
        assert!(stratum2_symbolic().with_zero("b", Point::Finite(RatFunc::from_int(1)), 1).is_err());
    }

    #[test]
    fn perturbation_breaks_matching() {
        let c = stratum2_symbolic();
        let mut w = stratum2_reference(&x(), &y());
        w.terms[0].residue = w.terms[0].residue.add(&RatFunc::from_int(1));
        assert!(!verify_residue_constraints(&w, &c));
    }

    #[test]
    fn degenerate_configs() {
        assert!(matches!(stratum2_config(x(), x()), Err(Error::DegenerateConfig(_))));
        // a prescribed zero at a pole
        let c = stratum2_symbolic().with_zero("bad", Point::Finite(x()), 1);
        assert!(matches!(c, Err(Error::DegenerateConfig(_))));
        // the involution must preserve the nodes
        let bad = NodalConfig::new(vec![(x(), y())], vec![], Some(Involution::Negation));
        assert!(bad.is_err());
    }

    #[test]
    fn concrete_height_ratio_is_sqrt_five() {
        let i = CyclotomicElem::imag_unit(20).unwrap();
        let px = &i * &tan_pi(1, 10).unwrap();
        let py = &i * &tan_pi(2, 10).unwrap();
        let c = stratum2_config(px, py).unwrap();
        let s = differential_space(&c).unwrap();
        assert_eq!(s.dimension, 1);
        let mu = height_ratio(&s.basis[0], &c).unwrap();
        assert_eq!(minimal_polynomial(&mu).unwrap().to_string(), "x^2 - 5");
    }

    #[test]
    fn symbolic_specializes() {
        let (px, py) = decagon_points();
        let w = stratum2_reference(&x(), &y());
        let special: Vec<CyclotomicElem> =
            w.terms.iter().map(|t| t.residue.eval(&px, &py).unwrap()).collect();
        let direct = stratum2_reference(&px, &py);
        assert_eq!(special, direct.terms.iter().map(|t| t.residue.clone()).collect::<Vec<_>>());
    }
}
