//! Zero forcing on small graphs: closure and force lists, forts, minimal zero
//! forcing sets, `Z(G)` and `Z̄(G)`, explicit graph families with known
//! minimal-set structure, and exhaustive verification drivers.

pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod forcing;
pub mod forts;
pub mod graph;
pub mod io;
pub mod limits;
pub mod minimal;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use forcing::{closure, is_zero_forcing_set, reversal, ClosureResult, ForceStep};
pub use forts::{enumerate_forts, is_fort, FortCollection};
pub use graph::{ComponentDecomposition, Family, Graph};
pub use io::{parse_graph6, to_graph6};
pub use limits::Limits;
pub use minimal::{
    count_minimal_zfs, enumerate_minimal_zfs, every_zfs_contains_minimum, in_every_minimal_zfs,
    is_minimal_zfs, max_minimal_zfs, shrink_to_minimal, summarize, zero_forcing_number, ZfsSummary,
};
pub use verify::{verify_claim, Claim, ClaimParams, Verdict, VerificationReport};
pub use vertex_set::VertexSet;
