//! Combinatorics and finite-field verification for ramification types of
//! degree-(n+1) polynomial self-maps of the affine line.
//!
//! The crate has three layers:
//!
//! * [`types`] (with [`partitions`] underneath) — branch profiles,
//!   ramification types, the counting function `c(m)` under its two
//!   conventions, and the admissibility predicates with their enumerated
//!   minima.
//! * [`poset`] — an explicit model of the stratification poset of the root
//!   cover, built from degeneration moves, together with generic graded-poset
//!   topology: order-complex cohomology over exact rationals, Möbius
//!   functions, local semimodularity, symmetric-group orbits and invariant
//!   cohomology.
//! * [`field`], [`poly`], [`census`] — arithmetic over F_{p^d}, resultants
//!   and squarefree decomposition, and the exhaustive census that measures
//!   #{f : length(f) < m} and compares it against qⁿ − c·q^{n−m}.
//!
//! The `ramify` binary in the companion crate exposes all of it as CLI
//! subcommands emitting JSON. The `book/` directory of the repository is a
//! guide whose code snippets compile and run as doctests of this crate.

pub mod census;
pub mod field;
pub mod partitions;
pub mod poly;
pub mod poset;
pub mod report;
pub mod types;

#[cfg(doctest)]
mod book;
