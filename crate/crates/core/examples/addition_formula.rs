//! The tangent addition formula behind the degree bound, checked exactly.
//!
//!     cargo run --example addition_formula -- 12

use torsion_packet::tanratio::{check_addition_formula, RationalAngle};

fn main() -> torsion_packet::Result<()> {
    let max_den: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let angles = RationalAngle::all_up_to(max_den);
    let (mut ok, mut total) = (0, 0);
    for (i, y) in angles.iter().enumerate() {
        for x in &angles[i + 1..] {
            total += 1;
            if check_addition_formula(x, y)? {
                ok += 1;
            } else {
                println!("fails at x = {x}, y = {y}");
            }
        }
    }
    println!("{ok}/{total} pairs with denominators up to {max_den} satisfy the identity");
    Ok(())
}
