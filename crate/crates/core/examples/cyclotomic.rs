//! Exact arithmetic in ℚ(ζ_m): minimal polynomials and signs of real elements.
//!
//!     cargo run --example cyclotomic

use torsion_packet::exactnum::{minimal_polynomial, sign_of_real, CyclotomicElem};

fn main() -> torsion_packet::Result<()> {
    // 2·cos(2π/7) = ζ₇ + ζ₇⁻¹
    let c = &CyclotomicElem::zeta(7) + &CyclotomicElem::zeta_pow(7, -1);
    println!("2cos(2π/7): minpoly {}", minimal_polynomial(&c)?);

    // ζ₅ + ζ₅⁴ − (ζ₅² + ζ₅³) = √5
    let s = &(&CyclotomicElem::zeta_pow(5, 1) + &CyclotomicElem::zeta_pow(5, 4))
        - &(&CyclotomicElem::zeta_pow(5, 2) + &CyclotomicElem::zeta_pow(5, 3));
    println!("Gauss sum for 5: minpoly {}, sign {}", minimal_polynomial(&s)?, sign_of_real(&s)?);

    // 2cos(2π/7) is about 1.247, so c − 5/4 is negative
    let shifted = &c - &CyclotomicElem::from_rational(7, "5/4".parse().unwrap());
    println!("2cos(2π/7) − 5/4 has sign {}", sign_of_real(&shifted)?);
    Ok(())
}
