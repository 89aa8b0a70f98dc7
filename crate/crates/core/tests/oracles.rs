//! Independent floating-point and closed-form cross-checks.

use torsion_packet::exactnum::{minimal_polynomial, Field, Rational};
use torsion_packet::tanratio::{enumerate_ratios, normalize_by_galois, ratio, ratio_value, tan_of, RationalAngle};

fn f64_of(r: &Rational) -> f64 {
    r.to_string()
        .split_once('/')
        .map_or_else(|| r.to_string().parse().unwrap(), |(n, d)| n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap())
}

#[test]
fn tangents_match_floats() {
    for a in RationalAngle::all_up_to(16) {
        let exact = tan_of(&a).to_complex_f64();
        let float = (std::f64::consts::PI * a.numer() as f64 / a.denom() as f64).tan();
        assert!((exact.0 - float).abs() < 1e-9 * float.max(1.0), "{a}");
        assert!(exact.1.abs() < 1e-9);
    }
}

#[test]
fn ratio_minpolys_vanish_at_float_values() {
    let angles = RationalAngle::all_up_to(16);
    for (i, x) in angles.iter().enumerate() {
        for y in &angles[i + 1..] {
            let float = (std::f64::consts::PI * f64_of(&y.value())).tan() / (std::f64::consts::PI * f64_of(&x.value())).tan();
            let exact = ratio_value(x, y).to_complex_f64().0;
            assert!((exact - float).abs() < 1e-8 * float, "({x}, {y})");
            if x.denom() <= 10 && y.denom() <= 10 {
                let p = minimal_polynomial(&ratio_value(x, y)).unwrap();
                let v = p.coefficients().iter().rev().fold(0.0, |acc, c| acc * float + f64_of(c));
                let scale: f64 = p.coefficients().iter().map(|c| f64_of(c).abs()).sum::<f64>() * float.powi(p.degree() as i32);
                assert!(v.abs() < 1e-9 * scale, "({x}, {y}): {p} at {float}");
            }
        }
    }
}

#[test]
fn quadratic_ratios_match_closed_forms() {
    let a = |p, q| RationalAngle::from_frac(p, q).unwrap();
    // tan(π/5)/tan(π/10) = √5, tan(2π/5)/tan(π/10) = 5 + 2√5, tan(π/3)/tan(π/4) = √3
    for (x, y, value) in [(a(1, 10), a(1, 5), 5f64.sqrt()), (a(1, 10), a(2, 5), 5.0 + 2.0 * 5f64.sqrt()), (a(1, 4), a(1, 3), 3f64.sqrt())] {
        let q = ratio(&x, &y).unwrap().quadratic().unwrap().unwrap();
        assert!((q.to_f64() - value).abs() < 1e-12);
    }
}

#[test]
fn normalization_stays_in_the_orbit() {
    for degree in [1, 2] {
        for t in enumerate_ratios(degree, 12).unwrap() {
            let n = normalize_by_galois(&t).unwrap();
            assert_eq!(n.degree(), t.degree());
            assert!(n.alpha() <= t.alpha());
            // σ(μ) is ±μ' or ±1/μ', so the minimal polynomial is that of one of these
            let mu = t.mu();
            let inv = mu.inv().unwrap();
            let forms = [mu.clone(), mu.neg(), inv.clone(), inv.neg()];
            assert!(
                forms.iter().any(|f| minimal_polynomial(f).unwrap() == *n.minpoly()),
                "({}, {}) → ({}, {})",
                t.alpha(),
                t.beta(),
                n.alpha(),
                n.beta()
            );
        }
    }
}
