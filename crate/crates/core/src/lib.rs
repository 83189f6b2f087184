//! Exact computation with shoelace prosets, interleavings of persistence
//! modules over prosets, and matchings of barcodes over the integers.

pub mod cli;
pub mod exactlin;
pub mod generate;
pub mod interleave;
pub mod proset;
pub mod rep;
pub mod zed;
