//! Layered triangulations of the solid torus and of lens spaces.
//!
//! The crate is organized around five pieces:
//!
//! - [`slope`]: intersection triples of slopes on a one-vertex torus and
//!   the graph of boundary triangulations of the solid torus;
//! - [`lst`]: symbolic layered solid tori (move sequences, per-edge
//!   meridian data, near-minimality) and their materialization;
//! - [`tri`]: a general face-pairing triangulation kernel with skeleton
//!   computation, validation, layering, folding, homology, isomorphism
//!   and text serialization;
//! - [`lens`]: folding combinatorics, lens space identification and
//!   canonical forms, nonorientable genus, efficiency predicates, and
//!   triangulated Dehn fillings;
//! - [`normal`]: normal and octagonal almost-normal surface enumeration,
//!   reconstruction and classification, used as the brute-force oracle
//!   against the symbolic predicates.

pub mod error;
pub mod guard;
pub mod lens;
pub mod lst;
pub mod normal;
pub mod slope;
pub mod tri;

pub use error::{Error, Result};
