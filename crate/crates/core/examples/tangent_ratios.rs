//! Ratios tan(πβ)/tan(πα) of a given degree, with their trace, norm and units.
//!
//!     cargo run --example tangent_ratios -- 2 12

use torsion_packet::tanratio::enumerate_ratios;

fn main() -> torsion_packet::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().expect("integer argument"));
    let degree = args.next().unwrap_or(2) as usize;
    let max_den = args.next().unwrap_or(12);
    for t in enumerate_ratios(degree, max_den)? {
        println!(
            "{:>5} {:>5}  {:<22} trace {:>4} norm {:>5}{}",
            t.alpha().to_string(),
            t.beta().to_string(),
            t.minpoly().to_string(),
            t.trace().to_string(),
            t.norm().to_string(),
            if t.is_unit() { "  unit" } else { "" }
        );
    }
    Ok(())
}
