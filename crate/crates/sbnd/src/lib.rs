//! Syndrome-based neural decoding of short binary linear block codes.
//!
//! The crate covers the full pipeline at desk scale:
//!
//! - GF(2) linear algebra and code ingestion from alist files ([`gf2`], [`code`])
//! - code automorphism groups for BCH and Polar codes ([`autom`])
//! - BPSK/AWGN channel simulation with reproducible seeding ([`channel`])
//! - classical reference decoders: exhaustive MLD and OSD ([`decoders`])
//! - labeled dataset generation and automorphism augmentation ([`dataset`])
//! - a small reverse-mode autodiff engine with Adam ([`autodiff`])
//! - the transformer error-pattern predictor ([`ecct`])
//! - supervised training with optional on-the-fly augmentation ([`trainer`])
//! - test-time augmentation at inference ([`tta`])
//! - a paired Monte-Carlo FER/BER evaluation harness ([`eval`])

pub mod autodiff;
pub mod autom;
pub mod channel;
pub mod code;
pub mod dataset;
pub mod decoders;
pub mod ecct;
pub mod eval;
pub mod gf2;
pub mod trainer;
pub mod tta;

pub use code::LinearCode;
pub use gf2::{BinaryMatrix, BinaryVector};
