//! Parameters attached to every member of the norm set, with the
//! distinguished one marked.
//!
//!     cargo run --example parameters -- 6,4,4,2,2,0

use orbitnorm::Orbit;

fn main() -> orbitnorm::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "8,6,6,4,4,2,2,0".into());
    let orbit = Orbit::parse_with_kind("C", &arg)?;
    let set = orbit.norm_set()?;
    let mut total = 0;
    for member in set.members() {
        let params = set.attached_parameters(member);
        total += params.len();
        println!("{}", member.orbit().chain_decompose());
        for p in &params {
            let mark = if p.is_distinguished() { "*" } else { " " };
            println!("  {mark} {p:<36} {}", p.expanded_notation());
        }
    }
    println!("{total} parameters, {} distinguished", set.len());
    let top = set.distinguished(&set.members()[0]);
    println!("induced form of {top}: {}", top.to_induced_form());
    for s in top.strings().iter().filter(|s| !s.is_empty()) {
        println!("  {s}  left {:?}", s.lambda_left().iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    Ok(())
}
