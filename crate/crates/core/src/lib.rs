//! Planar emulators and planar covers of small graphs.
//!
//! The crate verifies projections between a host and a target graph,
//! transforms emulators alongside their targets, searches for obstructions
//! to emulability, and rebuilds a handful of known emulator constructions.

pub mod catalog;
pub mod cli;
pub mod constructions;
pub mod dot;
pub mod emulator;
pub mod error;
pub mod graph;
pub mod obstructions;
pub mod planarity;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};

// Run the guide's code blocks as doc-tests.
macro_rules! book_chapter {
    ($name:ident, $file:literal) => {
        #[cfg(doctest)]
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        pub struct $name;
    };
}

book_chapter!(BookIntroduction, "introduction.md");
book_chapter!(BookGraphs, "graphs.md");
book_chapter!(BookPlanarity, "planarity.md");
book_chapter!(BookEmulators, "emulators.md");
book_chapter!(BookDoubleCovers, "double-covers.md");
book_chapter!(BookLifts, "lifts.md");
book_chapter!(BookConstructions, "constructions.md");
book_chapter!(BookObstructions, "obstructions.md");
book_chapter!(BookCatalog, "catalog.md");
book_chapter!(BookCli, "cli.md");
