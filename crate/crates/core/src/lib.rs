pub mod baseline;
pub mod error;
pub mod gate;
pub mod group;
pub mod netlist;
pub mod perm;
pub mod qopt;
pub mod rank;
pub mod report;
pub mod synth;

pub use error::{Error, Result};
pub use gate::{CostModel, Circuit, GateInstance, GateKind, Library};
pub use perm::{BitVector, Permutation, StateIndex};
