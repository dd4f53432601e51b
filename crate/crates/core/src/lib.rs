//! Parity and modular graph homomorphism toolkit.
//!
//! The crate is `no_std` (it needs `alloc`). It provides exact and modular
//! homomorphism counting, automorphism search and the reduction of targets by
//! automorphisms of prime order, mod-p Lovász vector prefixes, the GF(2)
//! gadget algebra used to pin instance vertices to automorphism orbits, and
//! the dichotomy for parity colourings by trees and forests.
#![no_std]

extern crate alloc;

pub mod caps;
pub mod canon;
pub mod enumerate;
pub mod gadgets;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod hom;
pub mod lovasz;
pub mod stretch;
pub mod symmetry;
pub mod trees;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{Graph, Partition, RootedGraph};
