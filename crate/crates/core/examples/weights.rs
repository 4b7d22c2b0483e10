//! Weight multiplicities, dimensions and restriction to block subgroups,
//! with the constant-term oracle alongside.

use orbitnorm::weights::{
    branch_to_levi, constant_term, dimension, dominant_weights, LeviShape, RootSystem, RootType, Weight,
};

fn main() -> orbitnorm::Result<()> {
    let c3 = RootSystem::new(RootType::C, 3);
    let mu = Weight::from_ints(&[2, 1, 0]);
    println!("dim V{mu} of Sp(6) = {}", dimension(&c3, &mu)?);
    for (w, m) in &dominant_weights(&c3, mu.doubled())?.entries {
        let w = Weight::from_doubled(w.clone());
        println!("  weight {w}  multiplicity {m}  orbit {}", c3.orbit_size(w.doubled()));
    }
    let b3 = RootSystem::new(RootType::B, 3);
    println!("spin module of Spin(7): {}", dimension(&b3, &Weight::from_doubled(vec![1, 1, 1]))?);

    let c4 = RootSystem::new(RootType::C, 4);
    for sizes in [vec![4], vec![2, 2], vec![3, 1], vec![1, 1, 1, 1]] {
        let shape = LeviShape::trivial(&sizes);
        for k in 0..=4 {
            let mut mu = vec![0; 4];
            mu[..k].fill(1);
            let fast = branch_to_levi(&c4, &mu, &shape)?;
            let slow = constant_term(&c4, &mu, &shape)?;
            assert_eq!(fast, slow);
            println!("  {sizes:?} {mu:?}: {fast}");
        }
    }
    Ok(())
}
