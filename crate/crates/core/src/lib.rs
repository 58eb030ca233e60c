//! Effective good divisibility of rational homogeneous varieties `G/P`.
//!
//! The crate builds root systems and Weyl groups of every simple type,
//! enumerates minimal coset representatives, answers Bruhat-order queries,
//! implements the index-set calculus for the odd and even orthogonal
//! Grassmannians, and scans for the smallest total degree at which two
//! Schubert classes multiply to zero.

pub mod bruhat;
pub mod coset;
pub mod ed_engine;
pub mod error;
pub mod rootsys;
pub mod schubert_symbols;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, LieFamily, ParabolicSubset, RootSystem};
pub use weyl::{format_word, parse_word, Side, WeylElement, Word};
