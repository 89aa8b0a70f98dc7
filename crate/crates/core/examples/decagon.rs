//! The decagon: which tenth roots of unity can be node coordinates, and which
//! real points could be periodic.
//!
//!     cargo run --example decagon

use torsion_packet::stablefiber::{decagon_exclude_r, decagon_solution_classes, DECAGON_TORSION_ORDER};

fn main() -> torsion_packet::Result<()> {
    for (i, class) in decagon_solution_classes(DECAGON_TORSION_ORDER).iter().enumerate() {
        println!("class {i}: (x, y) = (ζ₁₀^j, ζ₁₀^k) for (j, k) in {class:?}");
    }
    let d = decagon_exclude_r()?;
    let show = |hs: &[torsion_packet::stablefiber::decagon::RayHit]| {
        hs.iter().map(|h| format!("{:.4}", h.approx)).collect::<Vec<_>>().join(", ")
    };
    println!("R_x = {{{}}}", show(&d.r_x));
    println!("R_y = {{{}}}", show(&d.r_y));
    println!("R_x ∩ R_y = {{{}}}, no new points: {}", show(&d.intersection), d.no_new_points);
    Ok(())
}
