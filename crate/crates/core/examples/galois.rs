//! Moving a tangent ratio around its Galois orbit.
//!
//!     cargo run --example galois

use torsion_packet::tanratio::{apply_galois, normalize_by_galois, ratio, RationalAngle};

fn main() -> torsion_packet::Result<()> {
    let t = ratio(&RationalAngle::from_frac(3, 10)?, &RationalAngle::from_frac(2, 5)?)?;
    println!("({}, {}): {}", t.alpha(), t.beta(), t.minpoly());
    for k in [3, 7, 9] {
        let s = apply_galois(&t, k)?;
        println!("  σ_{k} → ({}, {})", s.alpha(), s.beta());
    }
    let n = normalize_by_galois(&t)?;
    println!("normalized: ({}, {}), μ = {}", n.alpha(), n.beta(), n.quadratic()?.unwrap());
    Ok(())
}
