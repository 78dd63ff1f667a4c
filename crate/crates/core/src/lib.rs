//! Fusion rings of loop groups at level k: root data, tensor products,
//! Kac-Walton fusion, modular data, and the non-simply-connected theory
//! (center actions, character partitions, simple-current invariants).

pub mod center;
pub mod error;
pub mod exec;
pub mod fusion;
pub mod groupspec;
mod lattice;
pub mod modular;
pub mod nsc;
pub mod repro;
pub mod rootdata;
pub mod tensor;

pub use center::{center_group, center_subgroup, CenterCharacter, CenterDatum, Orbit, ZSpec};
pub use error::{Error, ErrorKind, Result};
pub use exec::{Execution, Limits};
pub use fusion::{FusionElement, FusionTable};
pub use groupspec::GroupSpec;
pub use modular::ModularData;
pub use nsc::{IrrepLabel, ModularInvariant};
pub use rootdata::{Coweight, Reflection, RootDatum, Series, SimpleType, Weight, WeylElement};
