//! Symbolic-dynamics toolkit for two families of sign-structured subshifts:
//! language enumeration and counting, parity covering codes with repair
//! procedures, controlled gluing with logarithmic zero gaps, and exact
//! cylinder-measure arithmetic, all exposed through a reporting CLI.

pub mod aspec;
pub mod aws;
pub mod codes;
pub mod error;
pub mod measures;
pub mod report;
pub mod subshift;
pub mod util;
pub mod word;

pub use error::{Error, Result};
pub use word::{hamming, run_decompose, Letter, LetterSet, Run, RunDecomposition, Sign, SignedAlphabet, Word};
