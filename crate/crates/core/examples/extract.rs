//! Removing repeated column pairs down to a generic orbit, and the factors
//! of the model of a non-generic closure.
//!
//!     cargo run --example extract -- 6,4,4,4,4,2

use orbitnorm::{b_module_factors, Orbit};

fn main() -> orbitnorm::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "9,9,9,9,8,6,6,6,5,5,4,2,2,2,2,0".into());
    let orbit = Orbit::parse_with_kind("C", &arg)?;
    let (generic, removed) = orbit.extract_generic()?;
    println!("{} = {} plus pairs {removed:?}", orbit.chain_decompose(), generic.chain_decompose());
    for f in b_module_factors(&orbit)? {
        println!("  {f}");
        println!("    {}", f.to_induced_form());
    }
    Ok(())
}
