//! Constructive library for edge decompositions of the nearly complete
//! 3-uniform hypergraph `K_v^(3) - I` (complete minus a 1-factor) into tight
//! 6-cycles and tight 9-cycles.
//!
//! The crate is organized around a single exact-cover verifier
//! ([`hypercore::verify_decomposition`]): every construction in the library
//! produces an explicit certificate that the verifier can check edge by edge.
//!
//! - [`hypercore`] — vertex/triplet/cycle data model and the verifier
//! - [`blocks`] — explicit small decompositions used as building blocks
//! - [`assembler`] — recursive constructions covering the full spectra,
//!   2-split variants, and the Kirkman triple system provider
//! - [`cyclic`] — rotation-symmetric systems over `Z_v`: triplet types,
//!   base-cycle expansion, bundled systems, and a bounded search
//! - [`spectrum`] — feasibility predicates and 4-cycle packing bounds
//! - [`cli`] — command-line surface and the text file formats

pub mod assembler;
pub mod blocks;
pub mod cli;
pub mod cyclic;
mod error;
pub mod hypercore;
pub mod spectrum;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
