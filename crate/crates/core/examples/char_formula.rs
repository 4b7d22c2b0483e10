//! The alternating-sum character formula for an even generic orbit,
//! compared with the distinguished sum.
//!
//!     cargo run --release --example char_formula -- 6,4,4,2

use orbitnorm::spectra::{char_formula_table, sum_distinguished_spectrum, CharFormulaSpec, KtypeRequest};
use orbitnorm::Orbit;

fn main() -> orbitnorm::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "6,4,4,2".into());
    let orbit = Orbit::parse_with_kind("C", &arg)?;
    let spec = CharFormulaSpec::new(&orbit)?;
    print!("{spec}");
    let req = KtypeRequest::UpToHeight(2);
    let formula = char_formula_table(&spec, &req)?;
    let sum = sum_distinguished_spectrum(&orbit, &req)?;
    for ((k, a), (_, b)) in formula.entries().iter().zip(sum.entries()) {
        println!("  {k:?}: formula {a}, distinguished sum {b}");
    }
    Ok(())
}
