//! Regular saturated graphs from symmetric subsets of cyclic groups.
//!
//! The crate builds Cayley graphs `Cay(Z_n, S)` and their joins and
//! blow-ups, decides `K_s`- and `C_m`-saturation exactly, and searches
//! connection sets that satisfy the additive conditions behind the
//! constructions.
//!
//! ```
//! use satforge::{constructions, saturation::Target};
//!
//! let c = constructions::c_odd_cycle(1, 1).unwrap();
//! assert_eq!(c.claim.target, Target::Cycle(5));
//! let report = c.verify().unwrap();
//! assert!(c.claim_holds(&report));
//! ```

pub mod bitset;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod group_sets;
pub mod provenance;
pub mod saturation;
pub mod search;

pub use error::{Error, Result};
pub use graph::Graph;
pub use group_sets::{ResidueSet, SymmetricSet};
pub use provenance::ConstructionSpec;
