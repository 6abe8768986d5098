//! Finite bisimplicial groups, their Moore bicomplexes, Peiffer pairings, and
//! the crossed structures they carry, all verified by exhaustive computation
//! over enumerated permutation groups.
//!
//! The layers build bottom-up: [`fingroup`] is the enumerated-group kernel,
//! [`surjections`] the index combinatorics of degeneracy composites,
//! [`simplicial`] and [`bisimplicial`] the truncated structures with their
//! identity verifiers and Moore (bi)complexes, [`peiffer`] the pairing
//! machinery and boundary-image equalities, and [`crossed`] the axiom
//! checkers and extractions for crossed modules, crossed squares, and
//! 2-crossed modules. [`descriptor`] carries the JSON formats, [`fixtures`]
//! the concrete grids the verification suites run on.

pub mod bisimplicial;
pub mod crossed;
pub mod descriptor;
pub mod error;
pub mod fingroup;
pub mod fixtures;
pub mod peiffer;
pub mod report;
pub mod simplicial;
pub mod surjections;

pub use error::{Error, Result};
pub use report::{Status, VerificationReport};
