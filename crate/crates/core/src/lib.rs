//! Two-color partitions with gap conditions, the bijections that match them
//! with basis partitions and strict partitions, and a truncated q-series
//! engine for the matching generating functions.
//!
//! Parts are written `12g+8g+6r`; plain partitions as `6+6+5`; the empty
//! partition as `0`.

#![allow(clippy::needless_range_loop)]

pub mod bijections;
mod enumerate;
mod error;
pub mod families;
mod partition;
pub mod qseries;
mod triple;
mod two_color;
pub mod verify;

pub use enumerate::{enumerate_partitions, ConstraintSet, PartitionStream};
pub use error::{Error, Result};
pub use partition::Partition;
pub use triple::{from_triple, to_triple, TripleDecomposition};
pub use two_color::{listing_order, Color, ColoredPart, TwoColorPartition};
