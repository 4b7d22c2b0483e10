//! Chain decomposition, genericity and the normality criterion.
//!
//!     cargo run --example chains -- 8,8,6,6,6,4,4,2

use orbitnorm::{Normality, Orbit};

fn main() -> orbitnorm::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "10,8,8,4,4,4,3,3,2,0".into());
    let orbit = Orbit::parse_with_kind("C", &arg)?;
    let chains = orbit.chain_decompose();
    println!("orbit {orbit} in sp({})", orbit.size());
    for c in chains.chains() {
        println!("  {c}  k={} parity={:?} generic={}", c.k(), c.parity(), c.is_generic());
    }
    println!("special: {}", orbit.is_special()?);
    println!("component group rank: {}", orbit.component_group_rank()?);
    match orbit.lusztig_quotient_rank() {
        Ok(r) => println!("quotient rank: {r}"),
        Err(e) => println!("quotient rank: {e}"),
    }
    match orbit.kp_normality()? {
        Normality::Normal => println!("closure is normal"),
        Normality::NonNormal { chain, i, j } => {
            println!("closure is not normal: chain {} at i={i}, j={j}", chains.chains()[chain])
        }
    }
    if orbit.is_generic() {
        println!("bounding normal orbit: {}", orbit.sharp_orbit()?);
    }
    Ok(())
}
