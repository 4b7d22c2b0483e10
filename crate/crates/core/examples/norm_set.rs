//! Orbits reachable by fundamental degenerations, grouped by co-rank.
//!
//!     cargo run --example norm_set -- 12,10,10,8,7,5,5,3,3,1

use orbitnorm::Orbit;

fn main() -> orbitnorm::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "8,6,6,4,4,2,2,0".into());
    let orbit = Orbit::parse_with_kind("C", &arg)?;
    let set = orbit.norm_set()?;
    println!("{} members below {}", set.len(), orbit.chain_decompose());
    for (rank, row) in set.by_co_rank().iter().enumerate() {
        let names: Vec<String> = row.iter().map(|m| m.orbit().chain_decompose().to_string()).collect();
        println!("  {rank}: {}", names.join("   "));
    }
    println!("moves:");
    for (s, d, t) in set.edges() {
        println!("  {} -> {}  {d}", set.members()[*s].orbit(), set.members()[*t].orbit());
    }
    println!("minimum: {}", set.minimum());
    Ok(())
}
