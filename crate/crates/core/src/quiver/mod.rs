//! Framed representations of the three-loop quiver.
//!
//! Points are tuples `(A, B, C, v_1, ..., v_r)` of three `n x n` matrices
//! and `r` vectors over an exact field. This module covers joint generation,
//! slope stability (with a brute-force oracle over small prime fields), and
//! the trace potential `Tr A[B, C]` whose critical locus is the commuting
//! locus.

pub mod field;
pub mod linalg;
pub mod potential;
pub mod rep;
pub mod stability;

use num_bigint::BigInt;

pub use field::{Field, PrimeField, Rationals};
pub use linalg::{Matrix, Subspace};
pub use potential::{critical_check, is_critical_point, potential_gradient, potential_value, CriticalCheck, Gradient};
pub use rep::{generation_closure, is_jointly_generated, AnyRep, FramedRep};
pub use stability::{brute_force_stability, is_stable_via_generation, slope, DimVector, Theta, Verdict};

use crate::error::Result;
use crate::macmahon;

/// Number of torus-fixed points of the Quot scheme of length-n quotients of
/// `O^r` on affine 3-space: r-tuples of plane partitions of total size n.
pub fn fixed_point_count(r: usize, n: usize) -> Result<BigInt> {
    macmahon::colored_count(r, n)
}
