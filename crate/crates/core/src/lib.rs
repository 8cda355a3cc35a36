//! Exact generating series for Quot schemes of points on affine 3-space,
//! DT/PT wall-crossing factors, BPS decompositions, and the framed
//! three-loop quiver (stability, trace potential, critical locus).
//!
//! Everything is exact: integers are arbitrary precision, rationals are
//! kept in lowest terms and half-integral powers of the Lefschetz motive
//! are tracked by doubled exponents. No floating point enters any series
//! computation.
//!
//! The `examples/` directory next to this crate has one runnable program
//! per capability; the `quotdt` binary exposes the same operations as
//! JSON-in/JSON-out subcommands.

pub mod bps;
pub mod cli;
pub mod dtpt;
pub mod error;
pub mod json;
pub mod macmahon;
pub mod motivic;
pub mod quiver;
pub mod ring;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{Coeff, HalfLaurent};
pub use series::{LaurentSeries, TruncSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
