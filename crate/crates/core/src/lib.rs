//! Cyclic edge-connectivity of simple undirected graphs.
//!
//! The cyclic edge-connectivity of `G` is the least number of edges whose
//! removal disconnects `G` so that every remaining component contains a
//! cycle. This crate provides:
//!
//! - [`graph`]: the immutable [`Graph`] type and structural queries (girth,
//!   components, `K_{3,t}` recognition);
//! - [`generators`]: deterministic constructors for the test families and a
//!   seeded random regular sampler;
//! - [`spectral`]: a dense symmetric eigensolver and the expander mixing
//!   inequality as an executable check;
//! - [`bounds`]: the irregular Moore bound, the spectral lower bounds and the
//!   [`certify`](bounds::certify) pipeline;
//! - [`cyccut`]: cut validation, exhaustive oracles, girth-cycle enumeration,
//!   the separating girth-cycle finder, bridges and ear decompositions.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod cyccut;
pub mod error;
pub mod generators;
pub mod graph;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Edge, Girth, Graph};
