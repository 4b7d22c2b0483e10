//! Orthogonal orbits through their symplectic image: chains, and the
//! transfer of a parameter back to the orthogonal side.

use orbitnorm::{theta_transfer, AttachedParameter, Orbit};

fn main() -> orbitnorm::Result<()> {
    let q = Orbit::orthogonal(&[4, 4, 2])?;
    let p = q.to_symplectic()?;
    println!("{} {q} -> C {p}", q.kind_letter());
    println!("chains {}", q.chain_decompose());
    let set = p.norm_set()?;
    for param in set.distinguished_all() {
        match theta_transfer(&q, &param) {
            Ok(t) => println!("  {param} -> {t}  tail {:?}", t.tail_string().iter().map(ToString::to_string).collect::<Vec<_>>()),
            Err(e) => println!("  {param}: {e}"),
        }
    }
    let fixed = AttachedParameter::parse("[6(44)2]_0^-")?;
    println!("{fixed} -> {}", theta_transfer(&q, &fixed)?);
    Ok(())
}
