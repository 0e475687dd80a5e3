//! Doc-includes of the guide chapters, so `cargo test --doc` compiles and
//! runs every code snippet in `book/`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/admissibility.md")]
pub mod admissibility {}

#[doc = include_str!("../../../book/src/poset.md")]
pub mod poset_chapter {}

#[doc = include_str!("../../../book/src/topology.md")]
pub mod topology {}

#[doc = include_str!("../../../book/src/census.md")]
pub mod census_chapter {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
