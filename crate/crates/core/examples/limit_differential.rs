//! The limit differential on a rational curve with nodes (x, −x), (y, −y) and a
//! double zero at ∞, with x and y symbolic.
//!
//!     cargo run --example limit_differential

use torsion_packet::stablefiber::{differential_space, height_ratio, stratum2_symbolic, RatFunc};

fn main() -> torsion_packet::Result<()> {
    let config = stratum2_symbolic();
    let space = differential_space(&config)?;
    println!("dimension {}", space.dimension);
    let omega = space.basis[0].normalized(&RatFunc::x(), &RatFunc::y())?;
    for t in &omega.terms {
        println!("  ({}) / (z − ({}))", t.residue, t.pole);
    }
    println!("Res(x)/Res(−y) = {}", height_ratio(&omega, &config)?);
    Ok(())
}
