//! Diminutive spectra of the orbit, its closure and the sum of the
//! distinguished modules.
//!
//!     cargo run --release --example spectrum -- 8,6,6,4,4,2,2,0

use orbitnorm::spectra::{
    normality_by_spectrum, orbit_shape, pairs_shape, r_closure_spectrum, r_orbit_spectrum, sum_distinguished_spectrum,
    KtypeRequest,
};
use orbitnorm::Orbit;

fn main() -> orbitnorm::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "4,2,2,0".into());
    let orbit = Orbit::parse_with_kind("C", &arg)?;
    let d = KtypeRequest::Diminutive;
    let on_orbit = r_orbit_spectrum(&orbit, &d)?;
    let closure = r_closure_spectrum(&orbit, &d)?;
    let sum = sum_distinguished_spectrum(&orbit, &d)?;
    println!("orbit blocks {:?}, closure blocks {:?}", orbit_shape(&orbit)?, pairs_shape(&orbit)?);
    println!("{:<20} {:>6} {:>8} {:>6}", "K-type", "orbit", "closure", "sum");
    for (((k, a), (_, b)), (_, c)) in on_orbit.entries().iter().zip(closure.entries()).zip(sum.entries()) {
        println!("{:<20} {a:>6} {b:>8} {c:>6}", format!("{k:?}"));
    }
    println!("normal by spectrum: {}", normality_by_spectrum(&orbit)?);
    Ok(())
}
