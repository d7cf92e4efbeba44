//! Young walls and their abacus reduction for the level-one affine crystals
//! of types A_{n-1}^(1), A_{2n}^(2), A_{2n-1}^(2), B_n^(1), D_{n+1}^(1) and
//! D_{n+1}^(2), with the string functions that count them.
//!
//! Everything is exact integer arithmetic. Weight multiplicities come from
//! enumerating walls in [`wall`] or counting tuples through [`abacus`], and
//! [`qseries`] supplies the product formulas they are checked against.

pub mod abacus;
pub mod affine;
pub mod crystal;
pub mod error;
pub mod examples;
pub mod partition;
pub mod qseries;
pub mod wall;

pub use affine::{AffineData, Content, Family, Weight};
pub use error::{Error, Result};
pub use partition::{Color, ColoredPartition, Partition};
pub use qseries::Series;
pub use wall::{Column, Model, Orient, Wall};
