//! Recomputes the quadratic non-unit tangent ratios and compares them with
//! the bundled reference table.
//!
//!     cargo run --example table1 -- 30

use std::time::Instant;

use torsion_packet::tanratio::table1;

fn main() -> torsion_packet::Result<()> {
    let max_den: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let start = Instant::now();
    let rows = table1::compute(max_den)?;
    for r in &rows {
        println!(
            "{:>5} {:>5}  {:<14} trace {:>3}  norm {:>5}",
            r.alpha.to_string(),
            r.beta.to_string(),
            r.mu.as_deref().unwrap_or("?"),
            r.trace.to_string(),
            r.norm.to_string()
        );
    }
    let cmp = table1::compare(&rows, &table1::ground_truth());
    println!(
        "max denominator {max_den}: {} matched, {} missing, {} unexpected ({:.1?})",
        cmp.matched.len(),
        cmp.missing.len(),
        cmp.unexpected.len(),
        start.elapsed()
    );
    Ok(())
}
