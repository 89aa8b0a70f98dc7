//! Solutions of (x − 1)^N = (−x − 1)^N as x = i·tan(πA/N).
//!
//!     cargo run --example torsion -- 12

use torsion_packet::stablefiber::solve_torsion_pairs;

fn main() -> torsion_packet::Result<()> {
    let max_n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    for n in 2..=max_n {
        let s = solve_torsion_pairs(n)?;
        println!(
            "N = {n:>2}: {:>2} solutions, A ∈ {:?}, matches expansion: {}",
            s.solutions.len(),
            s.tangent_indices,
            s.matches_expansion()
        );
    }
    Ok(())
}
