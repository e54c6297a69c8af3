//! Graphic degree sequences and potentially `K5 - H`-graphic sequences.
//!
//! The crate pairs closed-form decisions ([`characterize`]) with an
//! independent realization search ([`oracle`]) and uses both to scan for the
//! smallest degree sum that forces a pattern ([`extremal`]).

pub mod characterize;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod patterns;
pub mod sequence;

pub use characterize::{characterize, ExceptionMatch, Verdict};
pub use error::{Error, Result};
pub use families::FamilyMatch;
pub use graph::SmallGraph;
pub use oracle::SearchBudget;
pub use patterns::PatternId;
pub use sequence::{parse_sequence, DegreeSequence};
