//! Finite rings given by lookup tables, their structural subsets, clean-type
//! decompositions, and an exhaustive checker for strongly J#-clean ring
//! results.

pub mod cache;
pub mod classify;
pub mod constructions;
pub mod dsl;
pub mod elemset;
pub mod error;
pub mod harness;
pub mod render;
pub mod ring;
pub mod sets;

pub use classify::{decompositions, ring_class_report, Decomposition, Kind, RingClassReport};
pub use elemset::ElemSet;
pub use error::{Error, ParseError, Result};
pub use ring::{make_ring, order_cap, set_order_cap, ElementRef, FiniteRing, Shape};
pub use sets::{compute_structural_sets, StructuralSets};
