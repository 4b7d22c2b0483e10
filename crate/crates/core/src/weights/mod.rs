//! Exact weight computations for classical root systems.

pub mod branching;
pub mod constant_term;
pub mod freudenthal;
pub mod laurent;
pub mod root;

pub use branching::{branch_to_levi, diminutive_ktypes, kostka, ktypes_up_to_height, levi_decomposition, LeviShape};
pub use constant_term::{constant_term, constant_term_decomposition, constant_term_with_budget, oracle_budget};
pub use freudenthal::{dimension, dominant_weights, total_from_weights, weight_multiplicity};
pub use laurent::Laurent;
pub use root::{RootSystem, RootType, Weight};
