//! String C-groups given by permutation representation graphs.

pub mod census;
pub mod classify;
pub mod construct;
pub mod error;
pub mod family;
pub mod group;
pub mod perm;
pub mod sggi;
pub mod verify;

pub use census::{Census, CensusCell, CensusConfig};
pub use error::{ConstructionError, Error, FamilyError, GraphError, GroupError, PermError};
pub use group::{BlockSystem, EngineConfig, PermutationGroup, StabChain};
pub use family::{FamilySpec, Seed};
pub use perm::{Parity, Permutation};
pub use classify::{classify, GroupType};
pub use sggi::{CprGraph, Sggi};
pub use verify::{verify, verify_brute, Verdict, VerificationReport, Verifier};
