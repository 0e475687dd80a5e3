//! Stratification-poset model and generic graded-poset topology.
//!
//! [`build::build_poset`] reconstructs the stratification poset of the root
//! cover at a given n from explicit degeneration moves, gated by the
//! admissibility predicates; [`build::partition_lattice`] provides the
//! classical lattice Πₙ as an independent calibration target. On top of any
//! [`GradedPoset`] sit exact order-complex cohomology, Möbius functions, the
//! local-semimodularity check, group actions with orbit decompositions and
//! invariant cohomology, and the quotient construction that collapses short
//! lengths.

pub mod action;
pub mod build;
pub mod graded;
pub mod homology;
pub mod label;
pub mod set_partition;

pub use action::{
    action_preserves_structure, invariant_cohomology, orbit_decomposition, orbits,
    stabilization_check, GroupAction, Orbit, StabilizationRow, StabilizationTable,
};
pub use build::{
    build_poset, check_vanishing, partition_lattice, quotient_poset, BuildResult, MoveKind,
    QuotientResult, VanishingReport, VanishingRow,
};
pub use graded::{GradedPoset, SemimodularityFailure};
pub use homology::{
    euler_mobius_check, interval_cohomology, EulerMobiusViolation, IntervalCohomology,
};
pub use label::{StratumInvariants, StratumLabel};
pub use set_partition::SetPartition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("ρ1 must refine ρ2")]
    RefinementViolation,
    #[error("partitions live on different ground sets")]
    SizeMismatch,
    #[error("blocks must partition {{1..n}}")]
    NotAPartition,
    #[error("elements are incomparable")]
    Incomparable,
}
