//! Combinatorics of nilpotent orbits in classical groups and the K-type
//! multiplicity formulas for their rings of regular functions.

pub mod chain;
pub mod cli;
pub mod corpus;
pub mod degeneration;
pub mod enumerate;
pub mod error;
pub mod halfint;
pub mod orbit;
pub mod params;
pub mod spectra;
pub mod verify;
pub mod weights;

pub use chain::{Chain, ChainDecomposition, Normality, Parity};
pub use degeneration::{fundamental_degeneration, Degeneration, DegenerationCase, NormMember, NormSet};
pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use orbit::{GroupKind, Orbit};
pub use params::{
    attach_parameters, b_module_factors, distinguished_parameter, theta_transfer, AttachedParameter, Block, ChainFactor,
    Decoration, Factor, InducedForm, LString, ModuleFactor, OrthogonalParameter, Sign,
};
