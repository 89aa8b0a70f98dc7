//! Admissible L-shaped parameters and the exclusion of the quadratic non-units.
//!
//!     cargo run --example lshape

use torsion_packet::lshape::{enumerate_triples, exclude_reference_row, unit_case_triples};
use torsion_packet::tanratio::table1;

fn main() -> torsion_packet::Result<()> {
    for t in enumerate_triples(4)? {
        println!("b={} e={:>2}  λ = {}", t.b(), t.e(), t.lambda());
    }
    let units: Vec<_> = unit_case_triples(10_000)?.iter().map(|t| t.name().unwrap_or("?")).collect();
    println!("λ + 1 a unit: {units:?}");
    for row in table1::ground_truth() {
        let v = exclude_reference_row(&row, 10_000)?;
        println!("({}, {}) μ = {}: excluded = {}", row.alpha, row.beta, v.mu, v.excluded);
    }
    Ok(())
}
