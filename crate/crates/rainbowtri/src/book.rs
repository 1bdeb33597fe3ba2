//! Doctest anchors for the guide under `book/`.
//!
//! Each chapter is included as a module's documentation, so every `rust`
//! code fence in the guide compiles and runs with `cargo test --doc`.
//! A guide edit that breaks an example breaks the build.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/colored-graphs.md")]
pub mod colored_graphs {}

#[doc = include_str!("../../../book/src/oriented-graphs.md")]
pub mod oriented_graphs {}

#[doc = include_str!("../../../book/src/digraph-to-colored.md")]
pub mod digraph_to_colored {}

#[doc = include_str!("../../../book/src/colored-to-digraph.md")]
pub mod colored_to_digraph {}

#[doc = include_str!("../../../book/src/checkers.md")]
pub mod checkers {}

#[doc = include_str!("../../../book/src/extremal-families.md")]
pub mod extremal_families {}

#[doc = include_str!("../../../book/src/harness.md")]
pub mod harness {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
